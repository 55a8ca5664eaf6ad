#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subtile/finite.hpp"
#include "subtile/lattice.hpp"
#include "subtile/region.hpp"
#include "subtile/search.hpp"

namespace subtile {

enum class SceneKind { kEuclidean, kFinite };

// Parsed scene file, kept literal: boxes and shifts in file order, nothing
// canonicalized, so serialize(parse(text)) round-trips value-identically.
struct SceneFile {
    SceneKind kind = SceneKind::kEuclidean;

    // euclidean payload
    int dim = 0;
    std::vector<Rat> periods;
    std::vector<Box> boxes;
    std::vector<RatVec> shifts;

    // finite payload (shift list lives inside)
    FiniteScene finite;

    // optional mode parameters
    std::optional<int> ell;
    std::optional<int> m;
    std::optional<std::uint64_t> seed;
    std::optional<int> max_attempts;
    std::optional<int> denominator_bound;
    std::optional<Objective> objective;

    bool operator==(const SceneFile&) const = default;
};

// Strict line-oriented parser: '#' comment lines and blank lines are skipped,
// everything else must be a known directive with the exact arity; rationals
// are "a" or "a/b" only. Errors are ParseError with the offending line.
SceneFile parse_scene(const std::string& text);

// parse_scene over a file's contents; nonexistent/unreadable paths raise
// ParseError naming the path.
SceneFile load_scene(const std::string& path);

std::string serialize_scene(const SceneFile& scene);

// Canonical region of a euclidean scene's boxes; EmptyRegionError when the
// boxes are all degenerate, PreconditionError on a finite scene.
BoxRegion scene_region(const SceneFile& scene);

SeparableLattice scene_lattice(const SceneFile& scene);

// SearchConfig assembled from the scene's optional fields (defaults where
// absent); CLI flags override afterwards.
SearchConfig scene_search_config(const SceneFile& scene);

} // namespace subtile
