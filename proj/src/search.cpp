#include "subtile/search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <utility>

#include "subtile/lattice.hpp"
#include "subtile/region.hpp"
#include "subtile/tiling.hpp"

namespace subtile {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr int kGridPoints = 32;
constexpr int kGoldenIters = 24;
constexpr int kMaxPasses = 4;

void check_config(const SearchConfig& cfg) {
    if (cfg.max_attempts < 1) throw PreconditionError("max_attempts must be >= 1");
    if (cfg.denominator_bound < 2) throw PreconditionError("denominator_bound must be >= 2");
}

// Uniform-ish draw from [0, n). Plain modulo reduction: the tiny bias is
// irrelevant here and the result is identical on every platform, which
// uniform_int_distribution does not guarantee.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::vector<RatVec> random_candidate(std::mt19937_64& rng, const SeparableLattice& lambda, int m,
                                     int dbound) {
    const int d = lambda.dim();
    std::vector<RatVec> shifts;
    shifts.reserve(static_cast<std::size_t>(m));
    shifts.push_back(RatVec::zero(d));
    for (int j = 1; j < m; ++j) {
        std::vector<Rat> c(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            const auto q = static_cast<std::int64_t>(1 + below(rng, static_cast<std::uint64_t>(dbound)));
            const auto n = static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(q)));
            c[static_cast<std::size_t>(i)] = rat(n, q) * lambda.periods[static_cast<std::size_t>(i)];
        }
        shifts.emplace_back(std::move(c));
    }
    return shifts;
}

// Scaled minimal eigenvalue across cells; the tie-breaking "how close was
// this failure" score carried by ExhaustedAttemptsError.
double raw_lower(const FrameReport& rep) {
    if (rep.per_cell.empty()) return 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& cell : rep.per_cell)
        if (!cell.spectrum.eigenvalues.empty())
            lo = std::min(lo, cell.spectrum.eigenvalues.front());
    if (!std::isfinite(lo)) lo = 0.0;
    return to_double(rep.gamma_covolume) * lo;
}

// Best rational n/q with q <= max_den approximating u, n reduced mod q
// (shift coordinates are phases, periodic in the period). Exhaustive over q:
// max_den is small and this is unambiguous, unlike continued-fraction
// tie-breaking.
Rat snap_fraction(double u, int max_den) {
    std::int64_t best_n = 0, best_q = 1;
    double best_err = std::numeric_limits<double>::infinity();
    for (std::int64_t q = 1; q <= max_den; ++q) {
        const auto n = static_cast<std::int64_t>(std::llround(u * static_cast<double>(q)));
        const double err = std::abs(u - static_cast<double>(n) / static_cast<double>(q));
        if (err < best_err) {
            best_err = err;
            best_n = n;
            best_q = q;
        }
    }
    const std::int64_t n = ((best_n % best_q) + best_q) % best_q;
    return rat(n, best_q);
}

struct Candidate {
    std::vector<RatVec> shifts;
    FrameReport report;
    double score = kNegInf;
};

} // namespace

Objective parse_objective(const std::string& name) {
    if (name == "feasible") return Objective::kFeasible;
    if (name == "max_lower_bound") return Objective::kMaxLowerBound;
    if (name == "min_condition") return Objective::kMinCondition;
    throw ParseError("unknown objective '" + name +
                     "' (expected feasible, max_lower_bound, or min_condition)");
}

std::string objective_name(Objective obj) {
    switch (obj) {
        case Objective::kFeasible: return "feasible";
        case Objective::kMaxLowerBound: return "max_lower_bound";
        case Objective::kMinCondition: return "min_condition";
    }
    return "feasible";
}

double objective_value(const FrameReport& rep, Objective obj) {
    if (!rep.is_frame) return kNegInf;
    switch (obj) {
        case Objective::kFeasible: return 1.0;
        case Objective::kMaxLowerBound: return rep.lower_bound;
        case Objective::kMinCondition: return -(rep.upper_bound / rep.lower_bound);
    }
    return kNegInf;
}

ExhaustedAttemptsError::ExhaustedAttemptsError(const std::string& msg, SearchResult best)
    : Error(msg), best_(std::move(best)) {}

SearchResult find_frame_shifts(const BoxRegion& omega, const SeparableLattice& lambda, int m,
                               const SearchConfig& cfg) {
    check_config(cfg);
    const SeparableLattice gamma = annihilator(lambda);
    const CellDecomposition dec = decompose(omega, gamma);
    if (m < dec.level)
        throw PreconditionError("no frame with " + std::to_string(m) +
                                " shifts exists: the subtiling level is " +
                                std::to_string(dec.level));

    std::mt19937_64 rng(cfg.seed);
    SearchResult best;
    double best_score = kNegInf;
    for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
        auto shifts = random_candidate(rng, lambda, m, cfg.denominator_bound);
        FrameReport rep = frame_check(omega, lambda, shifts);
        if (rep.is_frame) {
            SearchResult res;
            res.shifts = std::move(shifts);
            res.report = std::move(rep);
            res.attempts_used = attempt;
            return res;
        }
        const double score = raw_lower(rep);
        if (score > best_score) {
            best_score = score;
            best.shifts = std::move(shifts);
            best.report = std::move(rep);
            best.attempts_used = attempt;
        }
    }
    throw ExhaustedAttemptsError("no frame found in " + std::to_string(cfg.max_attempts) +
                                     " attempts",
                                 std::move(best));
}

SearchResult pipeline_subtile_to_frame(const BoxRegion& omega, const SeparableLattice& lambda,
                                       const SearchConfig& cfg) {
    check_config(cfg);
    const SeparableLattice gamma = annihilator(lambda);
    const CellDecomposition dec = decompose(omega, gamma);
    const int ell = dec.level;
    const BoxRegion delta = complete_to_multitile(omega, gamma, ell);

    std::mt19937_64 rng(cfg.seed);
    SearchResult best;
    double best_score = kNegInf;
    for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
        auto shifts = random_candidate(rng, lambda, ell, cfg.denominator_bound);
        FrameReport on_delta = riesz_check(delta, lambda, shifts);
        if (on_delta.is_frame) {
            FrameReport rep = frame_check(omega, lambda, shifts);
            if (!rep.is_frame)
                throw Error("pipeline inconsistency: Riesz shifts on the completion "
                            "failed frame_check on the original region");
            SearchResult res;
            res.shifts = std::move(shifts);
            res.report = std::move(rep);
            res.attempts_used = attempt;
            res.delta = delta;
            res.delta_report = std::move(on_delta);
            return res;
        }
        const double score = raw_lower(on_delta);
        if (score > best_score) {
            best_score = score;
            best.shifts = std::move(shifts);
            best.report = std::move(on_delta);
            best.attempts_used = attempt;
            best.delta = delta;
        }
    }
    throw ExhaustedAttemptsError("no Riesz shift set found for the completion in " +
                                     std::to_string(cfg.max_attempts) + " attempts",
                                 std::move(best));
}

SearchResult optimize_shifts(const BoxRegion& omega, const SeparableLattice& lambda, int m,
                             const SearchConfig& cfg) {
    check_config(cfg);
    const SeparableLattice gamma = annihilator(lambda);
    const CellDecomposition dec = decompose(omega, gamma);
    if (m < dec.level)
        throw PreconditionError("no frame with " + std::to_string(m) +
                                " shifts exists: the subtiling level is " +
                                std::to_string(dec.level));

    // Multi-start phase. Candidates are drawn serially (one RNG stream) and
    // scored concurrently; the argmax below breaks ties by lowest attempt
    // index, so thread count never changes the outcome.
    std::mt19937_64 rng(cfg.seed);
    const int starts = cfg.max_attempts;
    std::vector<std::vector<RatVec>> cand(static_cast<std::size_t>(starts));
    for (int i = 0; i < starts; ++i)
        cand[static_cast<std::size_t>(i)] = random_candidate(rng, lambda, m, cfg.denominator_bound);

    std::vector<FrameReport> reps(static_cast<std::size_t>(starts));
    std::exception_ptr fail = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < starts; ++i) {
        try {
            reps[static_cast<std::size_t>(i)] =
                frame_check(omega, lambda, cand[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical
            if (!fail) fail = std::current_exception();
        }
    }
    if (fail) std::rethrow_exception(fail);

    int best_idx = -1;
    double best_score = kNegInf;
    int best_fail_idx = 0;
    double best_fail = kNegInf;
    for (int i = 0; i < starts; ++i) {
        const auto& rep = reps[static_cast<std::size_t>(i)];
        if (rep.is_frame) {
            const double s = objective_value(rep, cfg.objective);
            if (s > best_score) {
                best_score = s;
                best_idx = i;
            }
        } else {
            const double s = raw_lower(rep);
            if (s > best_fail) {
                best_fail = s;
                best_fail_idx = i;
            }
        }
    }
    if (best_idx < 0) {
        SearchResult best;
        best.shifts = std::move(cand[static_cast<std::size_t>(best_fail_idx)]);
        best.report = std::move(reps[static_cast<std::size_t>(best_fail_idx)]);
        best.attempts_used = best_fail_idx + 1;
        throw ExhaustedAttemptsError("no feasible start among " + std::to_string(starts) +
                                         " random candidates",
                                     std::move(best));
    }

    Candidate cur;
    cur.shifts = cand[static_cast<std::size_t>(best_idx)];
    cur.report = reps[static_cast<std::size_t>(best_idx)];
    cur.score = best_score;

    // Scores a probe value for coordinate i of shift j and folds it into cur
    // when it improves the objective. Returns the probe's own score so the
    // golden-section bracket can compare its two interior points.
    const int snap_den = 2 * cfg.denominator_bound;
    const auto probe = [&](int j, int i, const Rat& frac) -> double {
        const Rat value = frac * lambda.periods[static_cast<std::size_t>(i)];
        if (cur.shifts[static_cast<std::size_t>(j)][i] == value) return cur.score;
        auto shifts = cur.shifts;
        shifts[static_cast<std::size_t>(j)][i] = value;
        FrameReport rep = frame_check(omega, lambda, shifts);
        const double s = objective_value(rep, cfg.objective);
        if (s > cur.score) {
            cur.shifts = std::move(shifts);
            cur.report = std::move(rep);
            cur.score = s;
        }
        return s;
    };

    // Refinement phase: coordinate-wise over the non-pinned shifts, a coarse
    // scan of the period followed by golden-section narrowing around the best
    // scan point. Every probe goes through frame_check on an exactly snapped
    // rational, so accepting one can only improve the verified objective.
    if (cfg.objective != Objective::kFeasible) {
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int pass = 0; pass < kMaxPasses; ++pass) {
            const double before = cur.score;
            for (int j = 1; j < m; ++j) {
                for (int i = 0; i < lambda.dim(); ++i) {
                    int best_t = 0;
                    double best_grid = kNegInf;
                    for (int t = 0; t < kGridPoints; ++t) {
                        Rat frac = rat(t, kGridPoints);
                        if (frac.denominator() > snap_den)
                            frac = snap_fraction(to_double(frac), snap_den);
                        const double s = probe(j, i, frac);
                        if (s > best_grid) {
                            best_grid = s;
                            best_t = t;
                        }
                    }
                    double a = std::max(static_cast<double>(best_t - 1) / kGridPoints, 0.0);
                    double b = std::min(static_cast<double>(best_t + 1) / kGridPoints, 1.0);
                    for (int it = 0; it < kGoldenIters; ++it) {
                        const double c = b - inv_phi * (b - a);
                        const double d = a + inv_phi * (b - a);
                        const double fc = probe(j, i, snap_fraction(c, snap_den));
                        const double fd = probe(j, i, snap_fraction(d, snap_den));
                        if (fc > fd)
                            b = d;
                        else
                            a = c;
                    }
                }
            }
            if (!(cur.score > before)) break;
        }
    }

    SearchResult res;
    res.shifts = std::move(cur.shifts);
    res.report = std::move(cur.report);
    res.attempts_used = best_idx + 1;
    return res;
}

} // namespace subtile
