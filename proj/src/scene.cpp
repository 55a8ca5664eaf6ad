#include "subtile/scene.hpp"

#include <fstream>
#include <sstream>

namespace subtile {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::int64_t field_int(const std::string& tok, const char* field, int line) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size())
        throw ParseError("field '" + std::string(field) + "': invalid integer '" + tok + "'", line);
    return v;
}

Rat field_rational(const std::string& tok, const char* field, int line) {
    try {
        return parse_rational(tok);
    } catch (const Error& e) {
        throw ParseError("field '" + std::string(field) + "': " + e.what(), line);
    }
}

void expect_arity(const std::vector<std::string>& toks, std::size_t args, int line) {
    if (toks.size() != args + 1)
        throw ParseError("field '" + toks[0] + "': expected " + std::to_string(args) +
                             " value(s), got " + std::to_string(toks.size() - 1),
                         line);
}

void reject_duplicate(bool already_set, const std::string& field, int line) {
    if (already_set) throw ParseError("field '" + field + "' appears twice", line);
}

} // namespace

SceneFile parse_scene(const std::string& text) {
    SceneFile scene;
    bool have_kind = false, have_dim = false, have_periods = false;
    bool have_moduli = false, have_divisors = false;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto toks = tokenize(raw);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& field = toks[0];

        if (field == "kind") {
            reject_duplicate(have_kind, field, line);
            expect_arity(toks, 1, line);
            if (toks[1] == "euclidean")
                scene.kind = SceneKind::kEuclidean;
            else if (toks[1] == "finite")
                scene.kind = SceneKind::kFinite;
            else
                throw ParseError("field 'kind': expected euclidean or finite, got '" + toks[1] + "'",
                                 line);
            have_kind = true;
            continue;
        }
        if (!have_kind) throw ParseError("the first directive must be 'kind'", line);

        if (field == "ell" || field == "m" || field == "seed" || field == "max_attempts" ||
            field == "denominator_bound") {
            expect_arity(toks, 1, line);
            const std::int64_t v = field_int(toks[1], field.c_str(), line);
            if (field == "ell") {
                reject_duplicate(scene.ell.has_value(), field, line);
                scene.ell = static_cast<int>(v);
            } else if (field == "m") {
                reject_duplicate(scene.m.has_value(), field, line);
                scene.m = static_cast<int>(v);
            } else if (field == "seed") {
                reject_duplicate(scene.seed.has_value(), field, line);
                scene.seed = static_cast<std::uint64_t>(v);
            } else if (field == "max_attempts") {
                reject_duplicate(scene.max_attempts.has_value(), field, line);
                scene.max_attempts = static_cast<int>(v);
            } else {
                reject_duplicate(scene.denominator_bound.has_value(), field, line);
                scene.denominator_bound = static_cast<int>(v);
            }
            continue;
        }
        if (field == "objective") {
            reject_duplicate(scene.objective.has_value(), field, line);
            expect_arity(toks, 1, line);
            try {
                scene.objective = parse_objective(toks[1]);
            } catch (const Error& e) {
                throw ParseError(std::string("field 'objective': ") + e.what(), line);
            }
            continue;
        }

        if (scene.kind == SceneKind::kEuclidean) {
            if (field == "dim") {
                reject_duplicate(have_dim, field, line);
                expect_arity(toks, 1, line);
                const std::int64_t v = field_int(toks[1], "dim", line);
                if (v < 1) throw ParseError("field 'dim': must be >= 1", line);
                scene.dim = static_cast<int>(v);
                have_dim = true;
                continue;
            }
            if (field == "periods" || field == "box" || field == "shift") {
                if (!have_dim) throw ParseError("'dim' must precede '" + field + "'", line);
            }
            if (field == "periods") {
                reject_duplicate(have_periods, field, line);
                expect_arity(toks, static_cast<std::size_t>(scene.dim), line);
                for (int i = 0; i < scene.dim; ++i) {
                    const Rat p = field_rational(toks[static_cast<std::size_t>(i) + 1], "periods", line);
                    if (p <= Rat(0)) throw ParseError("field 'periods': period must be positive", line);
                    scene.periods.push_back(p);
                }
                have_periods = true;
                continue;
            }
            if (field == "box") {
                expect_arity(toks, 2 * static_cast<std::size_t>(scene.dim), line);
                Box b;
                for (int i = 0; i < scene.dim; ++i)
                    b.lo.coords.push_back(
                        field_rational(toks[static_cast<std::size_t>(i) + 1], "box", line));
                for (int i = 0; i < scene.dim; ++i)
                    b.hi.coords.push_back(field_rational(
                        toks[static_cast<std::size_t>(scene.dim + i) + 1], "box", line));
                scene.boxes.push_back(std::move(b));
                continue;
            }
            if (field == "shift") {
                expect_arity(toks, static_cast<std::size_t>(scene.dim), line);
                RatVec s;
                for (int i = 0; i < scene.dim; ++i)
                    s.coords.push_back(
                        field_rational(toks[static_cast<std::size_t>(i) + 1], "shift", line));
                scene.shifts.push_back(std::move(s));
                continue;
            }
        } else {
            if (field == "moduli") {
                reject_duplicate(have_moduli, field, line);
                if (toks.size() < 2) throw ParseError("field 'moduli': needs at least one value", line);
                for (std::size_t i = 1; i < toks.size(); ++i)
                    scene.finite.moduli.push_back(
                        static_cast<int>(field_int(toks[i], "moduli", line)));
                have_moduli = true;
                continue;
            }
            if (field == "divisors" || field == "element" || field == "shift") {
                if (!have_moduli) throw ParseError("'moduli' must precede '" + field + "'", line);
            }
            if (field == "divisors") {
                reject_duplicate(have_divisors, field, line);
                expect_arity(toks, scene.finite.moduli.size(), line);
                for (std::size_t i = 1; i < toks.size(); ++i)
                    scene.finite.lambda_divisors.push_back(
                        static_cast<int>(field_int(toks[i], "divisors", line)));
                have_divisors = true;
                continue;
            }
            if (field == "element" || field == "shift") {
                expect_arity(toks, scene.finite.moduli.size(), line);
                std::vector<int> e;
                for (std::size_t i = 1; i < toks.size(); ++i)
                    e.push_back(static_cast<int>(field_int(toks[i], field.c_str(), line)));
                (field == "element" ? scene.finite.omega : scene.finite.shifts)
                    .push_back(std::move(e));
                continue;
            }
        }

        throw ParseError("unknown field '" + field + "'", line);
    }

    if (!have_kind) throw ParseError("scene file has no 'kind' directive");
    if (scene.kind == SceneKind::kEuclidean) {
        if (!have_dim) throw ParseError("euclidean scene is missing 'dim'");
        if (!have_periods) throw ParseError("euclidean scene is missing 'periods'");
        if (scene.boxes.empty()) throw ParseError("euclidean scene has no 'box' directives");
    } else {
        if (!have_divisors) throw ParseError("finite scene is missing 'divisors'");
        try {
            validate(scene.finite);
        } catch (const Error& e) {
            throw ParseError(std::string("finite scene: ") + e.what());
        }
    }
    return scene;
}

SceneFile load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scene file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str());
}

std::string serialize_scene(const SceneFile& scene) {
    std::ostringstream out;
    if (scene.kind == SceneKind::kEuclidean) {
        out << "kind euclidean\n";
        out << "dim " << scene.dim << "\n";
        out << "periods";
        for (const auto& p : scene.periods) out << ' ' << to_string(p);
        out << "\n";
        for (const auto& b : scene.boxes) {
            out << "box";
            for (const auto& c : b.lo.coords) out << ' ' << to_string(c);
            for (const auto& c : b.hi.coords) out << ' ' << to_string(c);
            out << "\n";
        }
        for (const auto& s : scene.shifts) {
            out << "shift";
            for (const auto& c : s.coords) out << ' ' << to_string(c);
            out << "\n";
        }
    } else {
        out << "kind finite\n";
        out << "moduli";
        for (int v : scene.finite.moduli) out << ' ' << v;
        out << "\n";
        out << "divisors";
        for (int v : scene.finite.lambda_divisors) out << ' ' << v;
        out << "\n";
        for (const auto& e : scene.finite.omega) {
            out << "element";
            for (int v : e) out << ' ' << v;
            out << "\n";
        }
        for (const auto& s : scene.finite.shifts) {
            out << "shift";
            for (int v : s) out << ' ' << v;
            out << "\n";
        }
    }
    if (scene.ell) out << "ell " << *scene.ell << "\n";
    if (scene.m) out << "m " << *scene.m << "\n";
    if (scene.seed) out << "seed " << *scene.seed << "\n";
    if (scene.max_attempts) out << "max_attempts " << *scene.max_attempts << "\n";
    if (scene.denominator_bound) out << "denominator_bound " << *scene.denominator_bound << "\n";
    if (scene.objective) out << "objective " << objective_name(*scene.objective) << "\n";
    return out.str();
}

BoxRegion scene_region(const SceneFile& scene) {
    if (scene.kind != SceneKind::kEuclidean)
        throw PreconditionError("finite scenes have no euclidean region");
    BoxRegion r = BoxRegion::canonicalize(scene.dim, scene.boxes);
    if (r.empty()) throw EmptyRegionError("scene boxes are all empty");
    return r;
}

SeparableLattice scene_lattice(const SceneFile& scene) {
    if (scene.kind != SceneKind::kEuclidean)
        throw PreconditionError("finite scenes have no euclidean lattice");
    return SeparableLattice(scene.periods);
}

SearchConfig scene_search_config(const SceneFile& scene) {
    SearchConfig cfg;
    if (scene.max_attempts) cfg.max_attempts = *scene.max_attempts;
    if (scene.seed) cfg.seed = *scene.seed;
    if (scene.denominator_bound) cfg.denominator_bound = *scene.denominator_bound;
    if (scene.objective) cfg.objective = *scene.objective;
    return cfg;
}

} // namespace subtile
