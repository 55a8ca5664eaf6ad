#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subtile/errors.hpp"
#include "subtile/frames.hpp"

namespace subtile {

enum class Objective { kFeasible, kMaxLowerBound, kMinCondition };

Objective parse_objective(const std::string& name);
std::string objective_name(Objective obj);

struct SearchConfig {
    int max_attempts = 64;
    std::uint64_t seed = 0;
    int denominator_bound = 64; // random shift coordinates are (n/q) * period, q <= bound
    Objective objective = Objective::kFeasible;
};

struct SearchResult {
    std::vector<RatVec> shifts;
    FrameReport report;
    int attempts_used = 0;
    // Set by the pipeline only: the completed multitile and its Riesz report.
    std::optional<BoxRegion> delta;
    std::optional<FrameReport> delta_report;
};

// Every random candidate failed. Carries the least-bad attempt (largest
// scaled minimal eigenvalue) so callers can see how close the search came.
class ExhaustedAttemptsError : public Error {
public:
    ExhaustedAttemptsError(const std::string& msg, SearchResult best);
    const SearchResult& best() const { return best_; }

private:
    SearchResult best_;
};

// Score a report under an objective; -inf for non-frames, so any frame beats
// any failure. Larger is better (min_condition scores -B/A).
double objective_value(const FrameReport& rep, Objective obj);

// Randomized realization of the existence claim: draw shift sets with the
// first shift pinned to 0 and rational coordinates (n/q) * period, q bounded
// by cfg.denominator_bound, until frame_check accepts one. Deterministic for
// a fixed seed. Errors out immediately when m is below the subtiling level,
// where no frame can exist.
SearchResult find_frame_shifts(const BoxRegion& omega, const SeparableLattice& lambda, int m,
                               const SearchConfig& cfg);

// Subtile-to-frame pipeline: complete omega to an exact level-tile, search
// shifts whose exponentials form a Riesz basis there, and return the frame
// report of those shifts on the original omega (plus the completion and its
// Riesz report).
SearchResult pipeline_subtile_to_frame(const BoxRegion& omega, const SeparableLattice& lambda,
                                       const SearchConfig& cfg);

// Multi-start refinement: evaluates cfg.max_attempts random candidates,
// takes the best feasible one, then improves it by coordinate-wise grid +
// golden-section refinement. Probes are snapped to rationals with
// denominator <= 2 * cfg.denominator_bound and judged by frame_check itself,
// so the result stays exactly representable and is never a non-frame.
// attempts_used records which random start won.
SearchResult optimize_shifts(const BoxRegion& omega, const SeparableLattice& lambda, int m,
                             const SearchConfig& cfg);

} // namespace subtile
