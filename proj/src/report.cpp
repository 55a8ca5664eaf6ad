#include "subtile/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace subtile {
namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_double_short(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string jescape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string jstr(const std::string& s) { return "\"" + jescape(s) + "\""; }

std::string jfiber(const FiberSet& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.gammas.size(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t k = 0; k < f.gammas[i].size(); ++k) {
            if (k) out += ", ";
            out += std::to_string(f.gammas[i][k]);
        }
        out += "]";
    }
    return out + "]";
}

std::string jratvec(const RatVec& v) {
    std::string out = "[";
    for (int i = 0; i < v.dim(); ++i) {
        if (i) out += ", ";
        out += jstr(to_string(v[i]));
    }
    return out + "]";
}

std::string jdoubles(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += fmt_double(v[i]);
    }
    return out + "]";
}

std::string jcell(const CellRow& c) {
    std::string out = "{\"fiber\": " + jfiber(c.fiber) + ", \"k\": " + std::to_string(c.k) +
                      ", \"measure\": " + jstr(to_string(c.measure));
    if (!c.eigenvalues.empty()) out += ", \"eigenvalues\": " + jdoubles(c.eigenvalues);
    return out + "}";
}

std::string jbox(const Box& b) {
    return "{\"lo\": " + jratvec(b.lo) + ", \"hi\": " + jratvec(b.hi) + "}";
}

// Accumulates "key": value lines and joins them into one object.
class JsonObject {
public:
    void add(const std::string& key, const std::string& rendered_value) {
        entries_.push_back("  " + jstr(key) + ": " + rendered_value);
    }

    std::string str() const {
        std::string out = "{\n";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            out += entries_[i];
            if (i + 1 < entries_.size()) out += ",";
            out += "\n";
        }
        return out + "}\n";
    }

private:
    std::vector<std::string> entries_;
};

std::string text_fiber(const FiberSet& f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.gammas.size(); ++i) {
        if (i) out += ", ";
        out += "(";
        for (std::size_t k = 0; k < f.gammas[i].size(); ++k) {
            if (k) out += ", ";
            out += std::to_string(f.gammas[i][k]);
        }
        out += ")";
    }
    return out + "}";
}

std::string text_box(const Box& b) {
    std::string out;
    for (int i = 0; i < b.dim(); ++i) {
        if (i) out += " x ";
        out += "[" + to_string(b.lo[i]) + ", " + to_string(b.hi[i]) + ")";
    }
    return out;
}

} // namespace

std::vector<CellRow> cell_rows(const CellDecomposition& dec) {
    std::vector<CellRow> rows;
    rows.reserve(dec.cells.size());
    for (const auto& cell : dec.cells) {
        CellRow r;
        r.fiber = cell.fiber;
        r.k = cell.k;
        r.measure = measure(cell.region);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<CellRow> cell_rows(const FrameReport& rep) {
    std::vector<CellRow> rows;
    rows.reserve(rep.per_cell.size());
    for (const auto& cell : rep.per_cell) {
        CellRow r;
        r.fiber = cell.fiber;
        r.k = cell.k;
        r.measure = cell.cell_measure;
        r.eigenvalues = cell.spectrum.eigenvalues;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string render_text(const Report& rep) {
    std::ostringstream out;
    out << "mode: " << rep.mode << " (" << rep.kind << ")\n";
    if (rep.level) out << "subtiling level: " << *rep.level << "\n";
    if (rep.ell) out << "target level: " << *rep.ell << "\n";
    if (rep.gamma_covolume) out << "annihilator covolume: " << to_string(*rep.gamma_covolume) << "\n";
    if (!rep.cells.empty()) {
        out << "cells:\n";
        for (const auto& c : rep.cells) {
            out << "  fiber " << text_fiber(c.fiber) << "  k=" << c.k
                << "  measure=" << to_string(c.measure);
            if (!c.eigenvalues.empty()) {
                out << "  eigenvalues=[";
                for (std::size_t i = 0; i < c.eigenvalues.size(); ++i) {
                    if (i) out << ", ";
                    out << fmt_double_short(c.eigenvalues[i]);
                }
                out << "]";
            }
            out << "\n";
        }
    }
    if (!rep.shifts.empty()) {
        out << "shifts:";
        for (const auto& s : rep.shifts) out << " " << to_string(s);
        out << "\n";
    }
    if (rep.delta) {
        out << "completion:\n";
        for (const auto& b : rep.delta->boxes) out << "  " << text_box(b) << "\n";
    }
    if (rep.lower) out << "A = " << fmt_double_short(*rep.lower) << "\n";
    if (rep.upper) out << "B = " << fmt_double_short(*rep.upper) << "\n";
    if (rep.defect) out << "tightness defect = " << fmt_double_short(*rep.defect) << "\n";
    if (rep.is_frame) out << "frame: " << (*rep.is_frame ? "yes" : "no") << "\n";
    if (rep.tight) out << "tight: " << (*rep.tight ? "yes" : "no") << "\n";
    if (rep.riesz) out << "riesz basis: " << (*rep.riesz ? "yes" : "no") << "\n";
    if (rep.attempts) out << "attempts used: " << *rep.attempts << "\n";
    if (rep.oracle) {
        const auto& o = *rep.oracle;
        out << "brute force: A = " << fmt_double_short(o.brute_lower)
            << "  B = " << fmt_double_short(o.brute_upper)
            << "  frame = " << (o.brute_frame ? "yes" : "no") << "\n";
        out << "fiberized:   A = " << fmt_double_short(o.fiber_lower)
            << "  B = " << fmt_double_short(o.fiber_upper)
            << "  frame = " << (o.fiber_frame ? "yes" : "no") << "\n";
        out << "max relative error = " << fmt_double_short(o.max_rel_err) << "\n";
    }
    out << "verdict: " << rep.verdict << "\n";
    return out.str();
}

std::string render_json(const Report& rep) {
    JsonObject obj;
    obj.add("mode", jstr(rep.mode));
    obj.add("kind", jstr(rep.kind));
    obj.add("verdict", jstr(rep.verdict));
    obj.add("exit_status", std::to_string(rep.exit_status));
    if (rep.level) obj.add("level", std::to_string(*rep.level));
    if (rep.ell) obj.add("ell", std::to_string(*rep.ell));
    if (rep.gamma_covolume) obj.add("gamma_covolume", jstr(to_string(*rep.gamma_covolume)));
    if (!rep.cells.empty()) {
        std::string cells = "[\n";
        for (std::size_t i = 0; i < rep.cells.size(); ++i) {
            cells += "    " + jcell(rep.cells[i]);
            if (i + 1 < rep.cells.size()) cells += ",";
            cells += "\n";
        }
        cells += "  ]";
        obj.add("cells", cells);
    }
    if (rep.is_frame) obj.add("is_frame", *rep.is_frame ? "true" : "false");
    if (rep.tight) obj.add("tight", *rep.tight ? "true" : "false");
    if (rep.riesz) obj.add("riesz", *rep.riesz ? "true" : "false");
    if (rep.lower) obj.add("lower", fmt_double(*rep.lower));
    if (rep.upper) obj.add("upper", fmt_double(*rep.upper));
    if (rep.defect) obj.add("defect", fmt_double(*rep.defect));
    if (!rep.shifts.empty()) {
        std::string shifts = "[";
        for (std::size_t i = 0; i < rep.shifts.size(); ++i) {
            if (i) shifts += ", ";
            shifts += jratvec(rep.shifts[i]);
        }
        shifts += "]";
        obj.add("shifts", shifts);
    }
    if (rep.delta) {
        std::string delta = "[\n";
        for (std::size_t i = 0; i < rep.delta->boxes.size(); ++i) {
            delta += "    " + jbox(rep.delta->boxes[i]);
            if (i + 1 < rep.delta->boxes.size()) delta += ",";
            delta += "\n";
        }
        delta += "  ]";
        obj.add("delta", delta);
    }
    if (rep.attempts) obj.add("attempts", std::to_string(*rep.attempts));
    if (rep.oracle) {
        const auto& o = *rep.oracle;
        std::string oracle = "{\n";
        oracle += "    \"brute_lower\": " + fmt_double(o.brute_lower) + ",\n";
        oracle += "    \"brute_upper\": " + fmt_double(o.brute_upper) + ",\n";
        oracle += "    \"brute_frame\": " + std::string(o.brute_frame ? "true" : "false") + ",\n";
        oracle += "    \"fiber_lower\": " + fmt_double(o.fiber_lower) + ",\n";
        oracle += "    \"fiber_upper\": " + fmt_double(o.fiber_upper) + ",\n";
        oracle += "    \"fiber_frame\": " + std::string(o.fiber_frame ? "true" : "false") + ",\n";
        oracle += "    \"max_rel_err\": " + fmt_double(o.max_rel_err) + ",\n";
        oracle += "    \"agree\": " + std::string(o.agree ? "true" : "false") + "\n";
        oracle += "  }";
        obj.add("oracle", oracle);
    }
    return obj.str();
}

Report parse_report_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("report JSON: ") + e.what());
    }
    try {
        Report rep;
        rep.mode = j.at("mode").get<std::string>();
        rep.kind = j.at("kind").get<std::string>();
        rep.verdict = j.at("verdict").get<std::string>();
        rep.exit_status = j.at("exit_status").get<int>();
        if (j.contains("level")) rep.level = j["level"].get<int>();
        if (j.contains("ell")) rep.ell = j["ell"].get<int>();
        if (j.contains("gamma_covolume"))
            rep.gamma_covolume = parse_rational(j["gamma_covolume"].get<std::string>());
        if (j.contains("cells")) {
            for (const auto& jc : j["cells"]) {
                CellRow row;
                for (const auto& g : jc.at("fiber"))
                    row.fiber.gammas.push_back(g.get<std::vector<std::int64_t>>());
                row.k = jc.at("k").get<int>();
                row.measure = parse_rational(jc.at("measure").get<std::string>());
                if (jc.contains("eigenvalues"))
                    row.eigenvalues = jc["eigenvalues"].get<std::vector<double>>();
                rep.cells.push_back(std::move(row));
            }
        }
        if (j.contains("is_frame")) rep.is_frame = j["is_frame"].get<bool>();
        if (j.contains("tight")) rep.tight = j["tight"].get<bool>();
        if (j.contains("riesz")) rep.riesz = j["riesz"].get<bool>();
        if (j.contains("lower")) rep.lower = j["lower"].get<double>();
        if (j.contains("upper")) rep.upper = j["upper"].get<double>();
        if (j.contains("defect")) rep.defect = j["defect"].get<double>();
        if (j.contains("shifts")) {
            for (const auto& js : j["shifts"]) {
                RatVec v;
                for (const auto& c : js) v.coords.push_back(parse_rational(c.get<std::string>()));
                rep.shifts.push_back(std::move(v));
            }
        }
        if (j.contains("delta")) {
            std::vector<Box> boxes;
            for (const auto& jb : j["delta"]) {
                Box b;
                for (const auto& c : jb.at("lo")) b.lo.coords.push_back(parse_rational(c.get<std::string>()));
                for (const auto& c : jb.at("hi")) b.hi.coords.push_back(parse_rational(c.get<std::string>()));
                boxes.push_back(std::move(b));
            }
            if (!boxes.empty()) rep.delta = BoxRegion::canonicalize(boxes.front().dim(), boxes);
        }
        if (j.contains("attempts")) rep.attempts = j["attempts"].get<int>();
        if (j.contains("oracle")) {
            const auto& jo = j["oracle"];
            OracleComparison o;
            o.brute_lower = jo.at("brute_lower").get<double>();
            o.brute_upper = jo.at("brute_upper").get<double>();
            o.brute_frame = jo.at("brute_frame").get<bool>();
            o.fiber_lower = jo.at("fiber_lower").get<double>();
            o.fiber_upper = jo.at("fiber_upper").get<double>();
            o.fiber_frame = jo.at("fiber_frame").get<bool>();
            o.max_rel_err = jo.at("max_rel_err").get<double>();
            o.agree = jo.at("agree").get<bool>();
            rep.oracle = o;
        }
        return rep;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("report JSON: ") + e.what());
    }
}

} // namespace subtile
