#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subtile/finite.hpp"
#include "subtile/frames.hpp"
#include "subtile/region.hpp"
#include "subtile/tiling.hpp"

namespace subtile {

// One row of the cell table; eigenvalues stay empty for shift-free modes.
struct CellRow {
    FiberSet fiber;
    int k = 0;
    Rat measure;
    std::vector<double> eigenvalues;

    bool operator==(const CellRow&) const = default;
};

// Everything a mode wants to tell the user, in one flat bag. Optional fields
// are omitted from both renderings when unset.
struct Report {
    std::string mode;
    std::string kind;    // "euclidean" | "finite"
    std::string verdict; // one-line outcome
    int exit_status = 0; // 0 affirmative, 1 negative verdict

    std::optional<int> level;
    std::optional<Rat> gamma_covolume;
    std::vector<CellRow> cells;
    std::optional<bool> is_frame;
    std::optional<bool> tight;
    std::optional<bool> riesz;
    std::optional<double> lower;  // A
    std::optional<double> upper;  // B
    std::optional<double> defect; // B - A
    std::vector<RatVec> shifts;
    std::optional<BoxRegion> delta;
    std::optional<int> attempts;
    std::optional<int> ell;
    std::optional<OracleComparison> oracle;
};

std::vector<CellRow> cell_rows(const CellDecomposition& dec);
std::vector<CellRow> cell_rows(const FrameReport& rep);

// Human-readable block.
std::string render_text(const Report& rep);

// Machine-readable JSON with a fixed key order; doubles printed with 17
// significant digits, rationals as exact "a/b" strings. The writer is
// hand-rolled so the bytes are stable across platforms and library versions.
std::string render_json(const Report& rep);

// Inverse of render_json (accepts any JSON with the same shape).
Report parse_report_json(const std::string& text);

} // namespace subtile
