#include "subtile/rational.hpp"

#include <cctype>

namespace subtile {

namespace {

bool parse_int64(const std::string& s, std::int64_t& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    if (i == s.size()) return false;
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        v = v * 10 + (s[i] - '0');
    }
    out = neg ? -v : v;
    return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    std::int64_t num = 0, den = 1;
    if (slash == std::string::npos) {
        if (!parse_int64(text, num))
            throw Error("invalid rational '" + text + "' (expected \"a\" or \"a/b\")");
    } else {
        if (!parse_int64(text.substr(0, slash), num) ||
            !parse_int64(text.substr(slash + 1), den))
            throw Error("invalid rational '" + text + "' (expected \"a\" or \"a/b\")");
        if (den == 0) throw Error("invalid rational '" + text + "' (zero denominator)");
    }
    return Rat(num, den);
}

std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

RatVec RatVec::operator+(const RatVec& o) const {
    if (dim() != o.dim()) throw DimensionMismatchError("vector dimensions differ");
    RatVec out = *this;
    for (int i = 0; i < dim(); ++i) out[i] += o[i];
    return out;
}

RatVec RatVec::operator-(const RatVec& o) const {
    if (dim() != o.dim()) throw DimensionMismatchError("vector dimensions differ");
    RatVec out = *this;
    for (int i = 0; i < dim(); ++i) out[i] -= o[i];
    return out;
}

RatVec RatVec::operator-() const {
    RatVec out = *this;
    for (auto& c : out.coords) c = -c;
    return out;
}

std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (int i = 0; i < v.dim(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    s += ")";
    return s;
}

} // namespace subtile
