#include "skewtilt/curves.hpp"

#include "skewtilt/errors.hpp"
#include "text.hpp"

#include <cstdlib>
#include <regex>
#include <stdexcept>
#include <utility>

namespace skewtilt {

int mod(long long a, int n) {
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

namespace {

CurveClass make_arc(CurveKind kind, int p, int q) {
    if (p > q) std::swap(p, q);
    if (q - p < 2) throw DomainError("boundary arc needs endpoints at distance at least 2");
    return {kind, p, q};
}

bool is_geometric(const CurveClass& c) {
    return c.kind == CurveKind::Bridge || c.is_arc();
}

int crossing_term(const CurveClass& p, const CurveClass& q, long long t, int n) {
    long long s = t * n;
    if (p.kind == CurveKind::Bridge && q.kind == CurveKind::Bridge) {
        long long u = p.a - q.a - s, v = p.b - q.b - s;
        return (u < 0 && v > 0) || (u > 0 && v < 0) ? 1 : 0;
    }
    if (p.kind == CurveKind::Bridge) {
        long long x = (q.kind == CurveKind::LowerArc) ? p.a : p.b;
        return (q.a + s < x && x < q.b + s) ? 1 : 0;
    }
    if (p.kind != q.kind) return 0;
    long long k = q.a + s, l = q.b + s;
    auto inside = [&](long long x) { return p.a < x && x < p.b; };
    auto outside = [&](long long x) { return x < p.a || x > p.b; };
    return ((inside(k) && outside(l)) || (inside(l) && outside(k))) ? 1 : 0;
}

} // namespace

CurveClass CurveClass::lower_arc(int p, int q) { return make_arc(CurveKind::LowerArc, p, q); }
CurveClass CurveClass::upper_arc(int p, int q) { return make_arc(CurveKind::UpperArc, p, q); }

CurveClass CurveClass::semicircle(int which) {
    if (which != 0 && which != 1) throw DomainError("semicircle index must be 0 or 1");
    return {CurveKind::SemiCircle, which, 0};
}

CurveClass CurveClass::loop_power(int j) {
    if (j < 1) throw DomainError("loop power must be positive");
    return {CurveKind::LoopPower, j, 0};
}

CurveClass canonicalize(const CurveClass& c, int n) {
    switch (c.kind) {
    case CurveKind::Bridge: {
        int shift = c.a - mod(c.a, n);
        return CurveClass::bridge(c.a - shift, c.b - shift);
    }
    case CurveKind::LowerArc:
    case CurveKind::UpperArc: {
        CurveClass o = make_arc(c.kind, c.a, c.b);
        int shift = o.a - mod(o.a, n);
        return {o.kind, o.a - shift, o.b - shift};
    }
    default:
        return c;
    }
}

CurveClass sigma_image(const CurveClass& c) {
    switch (c.kind) {
    case CurveKind::Bridge: return CurveClass::bridge(-c.b, -c.a);
    case CurveKind::LowerArc: return CurveClass::upper_arc(-c.b, -c.a);
    case CurveKind::UpperArc: return CurveClass::lower_arc(-c.b, -c.a);
    default: return c;
    }
}

Cross sigma_fixed_point(const CurveClass& c, int n) {
    if (c.kind != CurveKind::Bridge) throw DomainError("fixed-point test applies to bridges only");
    int s = mod(static_cast<long long>(c.a) + c.b, 2 * n);
    if (s == 0) return Cross::One;
    if (s == n) return Cross::Two;
    return Cross::None;
}

int intersection_number(const CurveClass& c1, const CurveClass& c2, int n) {
    if (!is_geometric(c1) || !is_geometric(c2))
        throw DomainError("intersection numbers are defined for bridges and boundary arcs only");
    CurveClass p = canonicalize(c1, n), q = canonicalize(c2, n);
    bool same = (p == q);
    if (p.is_arc() && q.kind == CurveKind::Bridge) std::swap(p, q);
    int span = std::abs(p.b - p.a) + std::abs(q.b - q.a);
    int bound = span / n + 2;
    int total = 0;
    for (long long t = -bound - 2; t <= bound + 2; ++t) {
        if (same && t == 0) continue;
        int term = crossing_term(p, q, t, n);
        if (term != 0 && std::llabs(t) > bound)
            throw std::logic_error("translate bound violated in intersection_number");
        total += term;
    }
    return total;
}

std::string to_string(const CurveClass& c) {
    switch (c.kind) {
    case CurveKind::Bridge: return "D[" + std::to_string(c.a) + "^" + std::to_string(c.b) + "]";
    case CurveKind::LowerArc: return "D_{" + std::to_string(c.a) + "," + std::to_string(c.b) + "}";
    case CurveKind::UpperArc: return "D^{" + std::to_string(c.a) + "," + std::to_string(c.b) + "}";
    case CurveKind::SemiCircle: return "L" + std::to_string(c.a);
    case CurveKind::LoopPower: return "L^" + std::to_string(c.a);
    }
    return "?";
}

CurveClass parse_curve(std::string_view text) {
    static const std::regex bridge_re(R"(D\[(-?\d+)\^(-?\d+)\])");
    static const std::regex lower_re(R"(D_\{(-?\d+),(-?\d+)\})");
    static const std::regex upper_re(R"(D\^\{(-?\d+),(-?\d+)\})");
    static const std::regex semi_re(R"(L([01]))");
    static const std::regex loop_re(R"(L\^(\d+))");
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    std::smatch m;
    try {
        if (std::regex_match(s, m, bridge_re)) return CurveClass::bridge(std::stoi(m[1]), std::stoi(m[2]));
        if (std::regex_match(s, m, lower_re)) return CurveClass::lower_arc(std::stoi(m[1]), std::stoi(m[2]));
        if (std::regex_match(s, m, upper_re)) return CurveClass::upper_arc(std::stoi(m[1]), std::stoi(m[2]));
        if (std::regex_match(s, m, semi_re)) return CurveClass::semicircle(std::stoi(m[1]));
        if (std::regex_match(s, m, loop_re)) return CurveClass::loop_power(std::stoi(m[1]));
    } catch (const std::out_of_range&) {
        throw ParseError("curve endpoint out of range");
    }
    throw ParseError("unrecognized curve '" + std::string(text) + "'");
}

} // namespace skewtilt
