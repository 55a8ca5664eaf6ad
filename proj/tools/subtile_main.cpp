#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "subtile/report.hpp"
#include "subtile/scene.hpp"
#include "subtile/search.hpp"

namespace {

using namespace subtile;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<RatVec> parse_shift_flags(const std::vector<std::string>& args, int dim) {
    std::vector<RatVec> shifts;
    for (const auto& arg : args) {
        const auto parts = split_commas(arg);
        if (static_cast<int>(parts.size()) != dim)
            throw ParseError("--shifts: '" + arg + "' has " + std::to_string(parts.size()) +
                             " coordinate(s), scene dimension is " + std::to_string(dim));
        RatVec v;
        for (const auto& p : parts) v.coords.push_back(parse_rational(p));
        shifts.push_back(std::move(v));
    }
    return shifts;
}

std::vector<std::vector<int>> parse_finite_shift_flags(const std::vector<std::string>& args,
                                                       int dim) {
    std::vector<std::vector<int>> shifts;
    for (const auto& arg : args) {
        const auto parts = split_commas(arg);
        if (static_cast<int>(parts.size()) != dim)
            throw ParseError("--shifts: '" + arg + "' has " + std::to_string(parts.size()) +
                             " coordinate(s), scene dimension is " + std::to_string(dim));
        std::vector<int> v;
        for (const auto& p : parts) {
            const Rat r = parse_rational(p);
            if (r.denominator() != 1)
                throw ParseError("--shifts: finite group elements must be integers, got '" + p +
                                 "'");
            v.push_back(static_cast<int>(r.numerator()));
        }
        shifts.push_back(std::move(v));
    }
    return shifts;
}

void require_euclidean(const SceneFile& scene, const std::string& mode) {
    if (scene.kind != SceneKind::kEuclidean)
        throw PreconditionError("mode '" + mode + "' needs a euclidean scene");
}

void fill_frame_fields(Report& rep, const FrameReport& fr) {
    rep.level = fr.subtiling_level;
    rep.gamma_covolume = fr.gamma_covolume;
    rep.cells = cell_rows(fr);
    rep.is_frame = fr.is_frame;
    rep.tight = fr.tight;
    rep.lower = fr.lower_bound;
    rep.upper = fr.upper_bound;
    rep.defect = fr.upper_bound - fr.lower_bound;
    rep.shifts = fr.shifts_used;
}

struct Flags {
    std::optional<int> ell, m, max_attempts, denominator_bound;
    std::optional<std::uint64_t> seed;
    std::optional<Objective> objective;
    std::vector<std::string> shifts;
    std::string json_path;
};

SearchConfig build_config(const SceneFile& scene, const Flags& flags) {
    SearchConfig cfg = scene_search_config(scene);
    if (flags.max_attempts) cfg.max_attempts = *flags.max_attempts;
    if (flags.seed) cfg.seed = *flags.seed;
    if (flags.denominator_bound) cfg.denominator_bound = *flags.denominator_bound;
    if (flags.objective) cfg.objective = *flags.objective;
    return cfg;
}

Report run_analyze(const SceneFile& scene) {
    const BoxRegion region = scene_region(scene);
    const SeparableLattice gamma = annihilator(scene_lattice(scene));
    const CellDecomposition dec = decompose(region, gamma);

    Report rep;
    rep.mode = "analyze";
    rep.kind = "euclidean";
    rep.level = dec.level;
    rep.gamma_covolume = covolume(gamma);
    rep.cells = cell_rows(dec);
    rep.verdict = "subtiling level " + std::to_string(dec.level);
    rep.exit_status = 0;
    return rep;
}

Report run_complete(const SceneFile& scene, const Flags& flags) {
    const BoxRegion region = scene_region(scene);
    const SeparableLattice gamma = annihilator(scene_lattice(scene));
    const CellDecomposition dec = decompose(region, gamma);
    int ell = dec.level;
    if (scene.ell) ell = *scene.ell;
    if (flags.ell) ell = *flags.ell;

    const BoxRegion delta = complete_to_multitile(region, gamma, ell);
    if (!is_exact_multitile(decompose(delta, gamma), ell))
        throw Error("internal: completion failed to produce an exact multitile");

    Report rep;
    rep.mode = "complete";
    rep.kind = "euclidean";
    rep.level = dec.level;
    rep.ell = ell;
    rep.gamma_covolume = covolume(gamma);
    rep.cells = cell_rows(dec);
    rep.delta = delta;
    rep.verdict = "exact " + std::to_string(ell) + "-tile completion";
    rep.exit_status = 0;
    return rep;
}

Report run_frame_check(const SceneFile& scene, const Flags& flags) {
    const BoxRegion region = scene_region(scene);
    const SeparableLattice lambda = scene_lattice(scene);
    std::vector<RatVec> shifts = scene.shifts;
    if (!flags.shifts.empty()) shifts = parse_shift_flags(flags.shifts, scene.dim);
    if (shifts.empty())
        throw PreconditionError("frame-check needs shifts (in the scene file or via --shifts)");

    const FrameReport fr = frame_check(region, lambda, shifts);

    Report rep;
    rep.mode = "frame-check";
    rep.kind = "euclidean";
    fill_frame_fields(rep, fr);
    rep.verdict = fr.is_frame ? (fr.tight ? "tight frame" : "frame") : "not a frame";
    rep.exit_status = fr.is_frame ? 0 : 1;
    return rep;
}

Report run_pipeline(const SceneFile& scene, const Flags& flags) {
    const BoxRegion region = scene_region(scene);
    const SeparableLattice lambda = scene_lattice(scene);
    const SearchConfig cfg = build_config(scene, flags);

    Report rep;
    rep.mode = "pipeline";
    rep.kind = "euclidean";
    try {
        const SearchResult res = pipeline_subtile_to_frame(region, lambda, cfg);
        fill_frame_fields(rep, res.report);
        rep.riesz = res.delta_report ? res.delta_report->riesz : false;
        rep.delta = res.delta;
        rep.attempts = res.attempts_used;
        rep.verdict = "frame via exact completion";
        rep.exit_status = 0;
    } catch (const ExhaustedAttemptsError& e) {
        const SearchResult& best = e.best();
        fill_frame_fields(rep, best.report);
        rep.delta = best.delta;
        rep.attempts = best.attempts_used;
        rep.verdict = std::string("search exhausted: ") + e.what();
        rep.exit_status = 1;
    }
    return rep;
}

Report run_optimize(const SceneFile& scene, const Flags& flags) {
    const BoxRegion region = scene_region(scene);
    const SeparableLattice lambda = scene_lattice(scene);
    std::optional<int> m = scene.m;
    if (flags.m) m = *flags.m;
    if (!m) throw PreconditionError("optimize needs --m (or an 'm' line in the scene)");
    if (!flags.objective && !scene.objective)
        throw PreconditionError("optimize needs --objective (or an 'objective' line in the scene)");
    const SearchConfig cfg = build_config(scene, flags);

    Report rep;
    rep.mode = "optimize";
    rep.kind = "euclidean";
    try {
        const SearchResult res = optimize_shifts(region, lambda, *m, cfg);
        fill_frame_fields(rep, res.report);
        rep.attempts = res.attempts_used;
        rep.verdict = "optimized objective " + objective_name(cfg.objective);
        rep.exit_status = 0;
    } catch (const ExhaustedAttemptsError& e) {
        const SearchResult& best = e.best();
        fill_frame_fields(rep, best.report);
        rep.attempts = best.attempts_used;
        rep.verdict = std::string("search exhausted: ") + e.what();
        rep.exit_status = 1;
    }
    return rep;
}

Report run_oracle(const SceneFile& scene, const Flags& flags) {
    if (scene.kind != SceneKind::kFinite)
        throw PreconditionError("mode 'oracle' needs a finite scene");
    FiniteScene fin = scene.finite;
    if (!flags.shifts.empty()) fin.shifts = parse_finite_shift_flags(flags.shifts, fin.dim());

    const OracleComparison cmp = compare(fin);

    Report rep;
    rep.mode = "oracle";
    rep.kind = "finite";
    rep.oracle = cmp;
    rep.verdict = cmp.agree ? "both paths agree" : "paths disagree";
    rep.exit_status = cmp.agree ? 0 : 1;
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frames of exponentials over sub-multitiling regions"};
    std::string mode, scene_path;
    Flags flags;
    int ell = 0, m = 0, max_attempts = 0, denominator_bound = 0;
    std::uint64_t seed = 0;
    std::string objective_str;

    app.add_option("mode", mode, "analyze|complete|frame-check|pipeline|optimize|oracle")
        ->required();
    app.add_option("scene", scene_path, "scene file")->required();
    auto* oell = app.add_option("--ell", ell, "target multitile level (complete)");
    auto* om = app.add_option("--m", m, "number of shifts (optimize)");
    app.add_option("--shifts", flags.shifts,
                   "shift vectors, one argument per shift, coordinates comma-separated");
    auto* oseed = app.add_option("--seed", seed, "search RNG seed");
    auto* oatt = app.add_option("--max-attempts", max_attempts, "search attempt budget");
    auto* odb = app.add_option("--denominator-bound", denominator_bound,
                               "denominator bound for random shifts");
    auto* oobj = app.add_option("--objective", objective_str,
                                "feasible|max_lower_bound|min_condition");
    app.add_option("--json", flags.json_path, "write the machine-readable report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (oell->count()) flags.ell = ell;
        if (om->count()) flags.m = m;
        if (oseed->count()) flags.seed = seed;
        if (oatt->count()) flags.max_attempts = max_attempts;
        if (odb->count()) flags.denominator_bound = denominator_bound;
        if (oobj->count()) flags.objective = parse_objective(objective_str);

        const SceneFile scene = load_scene(scene_path);

        Report rep;
        if (mode == "analyze") {
            require_euclidean(scene, mode);
            rep = run_analyze(scene);
        } else if (mode == "complete") {
            require_euclidean(scene, mode);
            rep = run_complete(scene, flags);
        } else if (mode == "frame-check") {
            require_euclidean(scene, mode);
            rep = run_frame_check(scene, flags);
        } else if (mode == "pipeline") {
            require_euclidean(scene, mode);
            rep = run_pipeline(scene, flags);
        } else if (mode == "optimize") {
            require_euclidean(scene, mode);
            rep = run_optimize(scene, flags);
        } else if (mode == "oracle") {
            rep = run_oracle(scene, flags);
        } else {
            throw PreconditionError("unknown mode '" + mode + "'");
        }

        std::cout << render_text(rep);
        if (!flags.json_path.empty()) {
            std::ofstream out(flags.json_path, std::ios::binary);
            if (!out) throw Error("cannot write JSON report to '" + flags.json_path + "'");
            out << render_json(rep);
        }
        return rep.exit_status;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
