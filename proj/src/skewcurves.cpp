#include "skewtilt/skewcurves.hpp"

#include "skewtilt/errors.hpp"
#include "text.hpp"

#include <cstdlib>
#include <numeric>
#include <regex>
#include <sstream>

namespace skewtilt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::pair<long long, long long> orbit_rep(long long num, long long den) {
    if (den == 0) throw DomainError("loop parameter has zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(std::llabs(num), den);
    num /= g;
    den /= g;
    if (num == 0 || (den == 1 && std::llabs(num) == 1))
        throw DomainError("homogeneous loop parameter must avoid 0, 1 and -1");
    if (std::llabs(num) < den) {
        long long nn = num < 0 ? -den : den;
        long long dd = std::llabs(num);
        num = nn;
        den = dd;
    }
    return {num, den};
}

std::string rational_text(long long num, long long den) {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

CurveClass shifted_bridge(const CurveClass& b, const LElement& x) {
    long long n = x.n();
    long long bot = b.a - x.l3() - x.l() * n;
    long long top = b.b + x.l3() + (x.l1() + x.l2() + x.l()) * n;
    return CurveClass::bridge(static_cast<int>(bot), static_cast<int>(top));
}

std::string line_inner(const LineBundle& b) {
    std::map<std::string, long long> t;
    switch (b.form) {
    case LineForm::F0: break;
    case LineForm::F12: t["x1"] = 1; t["x2"] = -1; break;
    case LineForm::F1: t["x1"] = 1; break;
    case LineForm::F2: t["x2"] = 1; break;
    }
    t["x3"] = b.i;
    return detail::format_linear(t, {"x1", "x2", "x3"}, false);
}

} // namespace

Half make_half(int cross, int idx, Sign sign) {
    if (cross != 1 && cross != 2) throw DomainError("cross must be 1 or 2");
    return Half{cross, idx, sign};
}

Pair make_pair(int i, int k, int n) {
    if (k < 1 || k > n - 1) throw DomainError("pair parameter k must lie in [1, n-1]");
    return Pair{i, k};
}

TorsPair make_torspair(int res, int len, int n) {
    if (len < 1) throw DomainError("torsion length must be positive");
    return TorsPair{mod(res, n), len};
}

PwLoop make_pwloop(long long num, long long den, int j) {
    if (j < 1) throw DomainError("loop power must be positive");
    auto [a, b] = orbit_rep(num, den);
    return PwLoop{a, b, j};
}

SkewCurve make_sploop(int lam, int j, Sign sign) {
    if (lam != 1 && lam != -1) throw DomainError("special loop parameter must be 1 or -1");
    if (j < 1) throw DomainError("loop power must be positive");
    if (j == 1) {
        Sign other = (lam == 1) ? sign : negate(sign);
        return Star{sign, other};
    }
    return SpLoop{lam, j, sign};
}

SkewCurve canonicalize(const SkewCurve& g, int n) {
    if (n < 2) throw DomainError("weight n must be at least 2");
    return std::visit(overloaded{
        [&](const Half& h) -> SkewCurve { return make_half(h.cross, h.idx, h.sign); },
        [&](const Pair& p) -> SkewCurve { return make_pair(p.i, p.k, n); },
        [&](const TorsPair& t) -> SkewCurve { return make_torspair(t.res, t.len, n); },
        [&](const Star& s) -> SkewCurve { return s; },
        [&](const PwLoop& p) -> SkewCurve { return make_pwloop(p.num, p.den, p.j); },
        [&](const SpLoop& s) -> SkewCurve { return make_sploop(s.lam, s.j, s.sign); }}, g);
}

bool is_half(const SkewCurve& g) { return std::holds_alternative<Half>(g); }
bool is_pair(const SkewCurve& g) { return std::holds_alternative<Pair>(g); }
bool is_torspair(const SkewCurve& g) { return std::holds_alternative<TorsPair>(g); }
bool is_star(const SkewCurve& g) { return std::holds_alternative<Star>(g); }
bool is_loop(const SkewCurve& g) {
    return std::holds_alternative<PwLoop>(g) || std::holds_alternative<SpLoop>(g);
}

CurveClass half_bridge(const Half& h, int n) {
    return h.cross == 1 ? CurveClass::bridge(-h.idx, h.idx) : CurveClass::bridge(-h.idx, n + h.idx);
}

std::vector<CurveClass> curve_set(const SkewCurve& g, int n) {
    return std::visit(overloaded{
        [&](const Half& h) -> std::vector<CurveClass> { return {half_bridge(h, n)}; },
        [&](const Pair& p) -> std::vector<CurveClass> {
            return {CurveClass::bridge(p.i, p.k - p.i), CurveClass::bridge(p.i - p.k, -p.i)};
        },
        [&](const TorsPair& t) -> std::vector<CurveClass> {
            return {CurveClass::upper_arc(t.res - t.len - 1, t.res),
                    CurveClass::lower_arc(-t.res, t.len + 1 - t.res)};
        },
        [&](const Star&) -> std::vector<CurveClass> {
            return {CurveClass::semicircle(0), CurveClass::semicircle(1)};
        },
        [&](const PwLoop& p) -> std::vector<CurveClass> { return {CurveClass::loop_power(p.j)}; },
        [&](const SpLoop& s) -> std::vector<CurveClass> { return {CurveClass::loop_power(s.j)}; }}, g);
}

std::optional<std::pair<int, int>> fixed_bridge_index(const CurveClass& b, int n) {
    Cross c = sigma_fixed_point(b, n);
    long long sum = static_cast<long long>(b.a) + b.b;
    if (c == Cross::One) {
        long long m = sum / (2 * n);
        return std::pair<int, int>{1, static_cast<int>(b.b - m * n)};
    }
    if (c == Cross::Two) {
        long long m = (sum - n) / (2 * n);
        return std::pair<int, int>{2, static_cast<int>(-(b.a - m * n))};
    }
    return std::nullopt;
}

Pair pair_from_bridge(const CurveClass& b, int n) {
    if (b.kind != CurveKind::Bridge) throw DomainError("pair lookup needs a bridge");
    long long sum = static_cast<long long>(b.a) + b.b;
    int s = mod(sum, 2 * n);
    if (s == 0 || s == n) throw DomainError("sigma-fixed bridge does not belong to a pair");
    if (s < n) {
        long long t = (s - sum) / (2 * n);
        return Pair{static_cast<int>(b.a + t * n), s};
    }
    long long t = ((s - 2 * n) - sum) / (2 * n);
    long long bot = b.a + t * n, top = b.b + t * n;
    int i = static_cast<int>(-top);
    return Pair{i, static_cast<int>(i - bot)};
}

std::optional<int> slant(const SkewCurve& g, int n) {
    if (auto h = std::get_if<Half>(&g)) return h->cross == 1 ? 2 * h->idx : n + 2 * h->idx;
    if (auto p = std::get_if<Pair>(&g)) return p->k - 2 * p->i;
    return std::nullopt;
}

SheafName phi(const SkewCurve& g0, int n) {
    SkewCurve g = canonicalize(g0, n);
    return std::visit(overloaded{
        [&](const Half& h) -> SheafName {
            LineForm f = h.cross == 1 ? (h.sign == Sign::Plus ? LineForm::F12 : LineForm::F0)
                                      : (h.sign == Sign::Plus ? LineForm::F1 : LineForm::F2);
            return LineBundle{f, h.idx};
        },
        [&](const Pair& p) -> SheafName { return ExtBundle{p.i, p.k}; },
        [&](const TorsPair& t) -> SheafName { return TorsN{t.res, t.len}; },
        [&](const Star& s) -> SheafName {
            TorsPoint pt = (s.e1 == s.e2) ? TorsPoint::Infty : TorsPoint::Zero;
            return Tors2{pt, s.e1 == Sign::Plus ? 0 : 1, 1};
        },
        [&](const PwLoop& p) -> SheafName { return TorsHom{p.num, p.den, p.j}; },
        [&](const SpLoop& s) -> SheafName {
            TorsPoint pt = s.lam == 1 ? TorsPoint::Infty : TorsPoint::Zero;
            int r = s.sign == Sign::Plus ? (s.j + 1) % 2 : s.j % 2;
            return Tors2{pt, r, s.j};
        }}, g);
}

SkewCurve phi_inv(const SheafName& s, int n) {
    return std::visit(overloaded{
        [&](const LineBundle& b) -> SkewCurve {
            switch (b.form) {
            case LineForm::F12: return Half{1, b.i, Sign::Plus};
            case LineForm::F0: return Half{1, b.i, Sign::Minus};
            case LineForm::F1: return Half{2, b.i, Sign::Plus};
            case LineForm::F2: return Half{2, b.i, Sign::Minus};
            }
            throw DomainError("bad line bundle form");
        },
        [&](const ExtBundle& e) -> SkewCurve { return make_pair(e.i, e.k, n); },
        [&](const TorsN& t) -> SkewCurve { return make_torspair(t.res, t.len, n); },
        [&](const Tors2& t) -> SkewCurve {
            if (t.len < 1) throw DomainError("torsion length must be positive");
            int lam = t.pt == TorsPoint::Infty ? 1 : -1;
            Sign sign = (mod(t.res, 2) == (t.len + 1) % 2) ? Sign::Plus : Sign::Minus;
            return make_sploop(lam, t.len, sign);
        },
        [&](const TorsHom& t) -> SkewCurve { return make_pwloop(t.num, t.den, t.len); }}, s);
}

LElement lelement_of(const LineBundle& b, int n) {
    switch (b.form) {
    case LineForm::F0: return LElement::normalize(n, 0, 0, b.i, 0);
    case LineForm::F12: return LElement::normalize(n, 1, -1, b.i, 0);
    case LineForm::F1: return LElement::normalize(n, 1, 0, b.i, 0);
    case LineForm::F2: return LElement::normalize(n, 0, 1, b.i, 0);
    }
    throw DomainError("bad line bundle form");
}

LineBundle line_bundle_of(const LElement& x) {
    long long n = x.n();
    if (x.l1() == 0 && x.l2() == 0) return {LineForm::F0, static_cast<int>(x.l3() + x.l() * n)};
    if (x.l1() == 1 && x.l2() == 0) return {LineForm::F1, static_cast<int>(x.l3() + x.l() * n)};
    if (x.l1() == 0 && x.l2() == 1) return {LineForm::F2, static_cast<int>(x.l3() + x.l() * n)};
    return {LineForm::F12, static_cast<int>(x.l3() + (x.l() + 1) * n)};
}

SkewCurve shift(const SkewCurve& g0, const LElement& x) {
    int n = x.n();
    SkewCurve g = canonicalize(g0, n);
    return std::visit(overloaded{
        [&](const Half& h) -> SkewCurve {
            auto fixed = fixed_bridge_index(shifted_bridge(half_bridge(h, n), x), n);
            if (!fixed) throw std::logic_error("shift moved a fixed bridge off the crosses");
            return Half{fixed->first, fixed->second, x.l1() == 1 ? negate(h.sign) : h.sign};
        },
        [&](const Pair& p) -> SkewCurve {
            return pair_from_bridge(shifted_bridge(CurveClass::bridge(p.i, p.k - p.i), x), n);
        },
        [&](const TorsPair& t) -> SkewCurve { return make_torspair(t.res + x.l3(), t.len, n); },
        [&](const Star& s) -> SkewCurve {
            bool flip = (s.e1 == s.e2) ? x.l1() == 1 : x.l2() == 1;
            return flip ? Star{negate(s.e1), negate(s.e2)} : s;
        },
        [&](const PwLoop& p) -> SkewCurve { return p; },
        [&](const SpLoop& s) -> SkewCurve {
            bool flip = (s.lam == 1) ? x.l1() == 1 : x.l2() == 1;
            return flip ? SpLoop{s.lam, s.j, negate(s.sign)} : s;
        }}, g);
}

SkewCurve tau(const SkewCurve& g, int n) { return shift(g, LElement::omega(n)); }

SheafName shift_generator(const SheafName& s, Generator gen, int n) {
    return std::visit(overloaded{
        [&](const LineBundle& b) -> SheafName {
            switch (gen) {
            case Generator::X3: return LineBundle{b.form, b.i + 1};
            case Generator::X3Inv: return LineBundle{b.form, b.i - 1};
            case Generator::X1:
                switch (b.form) {
                case LineForm::F0: return LineBundle{LineForm::F1, b.i};
                case LineForm::F12: return LineBundle{LineForm::F2, b.i};
                case LineForm::F1: return LineBundle{LineForm::F0, b.i + n};
                case LineForm::F2: return LineBundle{LineForm::F12, b.i + n};
                }
                break;
            case Generator::X2:
                switch (b.form) {
                case LineForm::F0: return LineBundle{LineForm::F2, b.i};
                case LineForm::F12: return LineBundle{LineForm::F1, b.i};
                case LineForm::F1: return LineBundle{LineForm::F12, b.i + n};
                case LineForm::F2: return LineBundle{LineForm::F0, b.i + n};
                }
                break;
            }
            throw DomainError("bad generator");
        },
        [&](const ExtBundle& e) -> SheafName {
            switch (gen) {
            case Generator::X3: return ExtBundle{e.i - 1, e.k};
            case Generator::X3Inv: return ExtBundle{e.i + 1, e.k};
            default: return ExtBundle{e.i - e.k, n - e.k};
            }
        },
        [&](const TorsN& t) -> SheafName {
            if (gen == Generator::X3) return TorsN{mod(t.res + 1, n), t.len};
            if (gen == Generator::X3Inv) return TorsN{mod(t.res - 1, n), t.len};
            return t;
        },
        [&](const Tors2& t) -> SheafName {
            bool moves = (gen == Generator::X1 && t.pt == TorsPoint::Infty) ||
                         (gen == Generator::X2 && t.pt == TorsPoint::Zero);
            return moves ? Tors2{t.pt, mod(t.res + 1, 2), t.len} : t;
        },
        [&](const TorsHom& t) -> SheafName { return t; }}, s);
}

SkewCurve shift_by_generators(const SkewCurve& g, int n, long long a1, long long a2, long long a3, long long a) {
    SheafName s = phi(g, n);
    auto apply = [&](Generator gen, long long times) {
        for (long long r = 0; r < times; ++r) s = shift_generator(s, gen, n);
    };
    auto apply_x12 = [&](Generator gen, long long count) {
        if (count >= 0) {
            apply(gen, count);
        } else {
            for (long long r = 0; r < -count; ++r) {
                apply(gen, 1);
                apply(Generator::X3Inv, n);
            }
        }
    };
    apply_x12(Generator::X1, a1);
    apply_x12(Generator::X2, a2);
    if (a3 >= 0) apply(Generator::X3, a3); else apply(Generator::X3Inv, -a3);
    if (a >= 0) apply(Generator::X3, a * n); else apply(Generator::X3Inv, -a * n);
    return phi_inv(s, n);
}

std::string equivariant_description(const SkewCurve& g0, int n) {
    SkewCurve g = canonicalize(g0, n);
    std::string lhs = std::visit(overloaded{
        [&](const Half& h) -> std::string {
            long long m = -h.idx;
            bool even = (m % 2 == 0);
            std::string w = detail::format_linear({{"w", m}}, {"w"}, false);
            std::string cw = detail::format_linear({{"c", 1}, {"w", m}}, {"c", "w"}, false);
            if (h.cross == 1) return "(O_Y(" + w + "), alpha" + (h.sign == Sign::Plus ? "+" : "-") + ")";
            bool plus = (h.sign == Sign::Plus) ? !even : even;
            return "(O_Y(" + cw + "), alpha" + (plus ? "+" : "-") + ")";
        },
        [&](const Pair& p) -> std::string {
            long long m = p.i + 2;
            auto term = [&](const char* y) {
                return "O_Y(" + detail::format_linear({{y, p.k}, {"w", m}}, {y, "w"}, false) + ")";
            };
            return "(" + term("y1") + " (+) " + term("y2") + ", alpha)";
        },
        [&](const TorsPair& t) -> std::string {
            std::string sfx = "," + std::to_string(t.res) + "}^{(" + std::to_string(t.len) + ")}";
            return "(S_{0" + sfx + " (+) S_{inf" + sfx + ", alpha)";
        },
        [&](const Star& s) -> std::string {
            int r = s.e1 == Sign::Plus ? 0 : 1;
            return std::string("(S_{") + (s.e1 == s.e2 ? "1" : "-1") + "}^{(1)}, alpha-) with i=" + std::to_string(r);
        },
        [&](const PwLoop& p) -> std::string {
            std::string j = "}^{(" + std::to_string(p.j) + ")}";
            return "(S_{" + rational_text(p.num, p.den) + j + " (+) S_{" + rational_text(p.den * (p.num < 0 ? -1 : 1), std::llabs(p.num)) + j + ", alpha)";
        },
        [&](const SpLoop& s) -> std::string {
            auto name = std::get<Tors2>(phi(s, n));
            return "(S_{" + std::to_string(s.lam) + "}^{(" + std::to_string(s.j) + ")}, alpha-) with i=" + std::to_string(name.res);
        }}, g);
    return lhs + " -> " + display(phi(g, n));
}

std::string display(const SheafName& s) {
    return std::visit(overloaded{
        [&](const LineBundle& b) -> std::string {
            std::string inner = line_inner(b);
            return inner == "0" ? "O" : "O(" + inner + ")";
        },
        [&](const ExtBundle& e) -> std::string {
            std::string x = detail::format_linear({{"x3", e.k - 1}}, {"x3"}, false);
            return "E_{" + display(LineBundle{LineForm::F0, -(e.i + 1)}) + "}<" + x + ">";
        },
        [&](const TorsN& t) -> std::string {
            return "S_{1," + std::to_string(t.res) + "}^{(" + std::to_string(t.len) + ")}";
        },
        [&](const Tors2& t) -> std::string {
            return std::string("S_{") + (t.pt == TorsPoint::Infty ? "inf" : "0") + "," + std::to_string(t.res) +
                   "}^{(" + std::to_string(t.len) + ")}";
        },
        [&](const TorsHom& t) -> std::string {
            return "S_{" + rational_text(t.num, t.den) + "}^{(" + std::to_string(t.len) + ")}";
        }}, s);
}

SheafName parse_sheaf(std::string_view text, int n) {
    static const std::regex line_re(R"(O(?:\((.*)\))?)");
    static const std::regex ext_re(R"(E_\{(.*)\}<(.*)>)");
    static const std::regex torsn_re(R"(S_\{1,(-?\d+)\}\^\{\((\d+)\)\})");
    static const std::regex tors2_re(R"(S_\{(inf|0),(-?\d+)\}\^\{\((\d+)\)\})");
    static const std::regex torsh_re(R"(S_\{(-?\d+)(?:/(\d+))?\}\^\{\((\d+)\)\})");
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    std::smatch m;
    try {
        if (std::regex_match(s, m, line_re)) {
            if (!m[1].matched) return LineBundle{LineForm::F0, 0};
            auto t = detail::parse_linear(m[1].str(), "x1,x2,x3,c");
            return line_bundle_of(LElement::normalize(n, t["x1"], t["x2"], t["x3"], t["c"]));
        }
        if (std::regex_match(s, m, ext_re)) {
            SheafName base = parse_sheaf(m[1].str(), n);
            auto lb = std::get_if<LineBundle>(&base);
            if (!lb || lb->form != LineForm::F0)
                throw DomainError("extension bundle base must have the form O(i*x3)");
            auto t = detail::parse_linear(m[2].str(), "x3");
            long long k = t["x3"] + 1;
            if (k < 1 || k > n - 1) throw DomainError("extension bundle needs 0 <= x <= (n-2)*x3");
            return ExtBundle{-lb->i - 1, static_cast<int>(k)};
        }
        if (std::regex_match(s, m, torsn_re)) {
            int len = std::stoi(m[2]);
            if (len < 1) throw DomainError("torsion length must be positive");
            return TorsN{mod(std::stoll(m[1]), n), len};
        }
        if (std::regex_match(s, m, tors2_re)) {
            int len = std::stoi(m[3]);
            if (len < 1) throw DomainError("torsion length must be positive");
            return Tors2{m[1] == "inf" ? TorsPoint::Infty : TorsPoint::Zero, mod(std::stoll(m[2]), 2), len};
        }
        if (std::regex_match(s, m, torsh_re)) {
            long long den = m[2].matched ? std::stoll(m[2]) : 1;
            int len = std::stoi(m[3]);
            auto p = make_pwloop(std::stoll(m[1]), den, len);
            return TorsHom{p.num, p.den, p.j};
        }
    } catch (const std::out_of_range&) {
        throw ParseError("number out of range in sheaf name");
    }
    throw ParseError("unrecognized sheaf name '" + std::string(text) + "'");
}

std::string to_string(const SkewCurve& g) {
    std::ostringstream os;
    std::visit(overloaded{
        [&](const Half& h) { os << "Half(" << h.cross << "," << h.idx << "," << sign_char(h.sign) << ")"; },
        [&](const Pair& p) { os << "Pair(" << p.i << "," << p.k << ")"; },
        [&](const TorsPair& t) { os << "TorsPair(" << t.res << "," << t.len << ")"; },
        [&](const Star& s) { os << "Star(" << sign_char(s.e1) << "," << sign_char(s.e2) << ")"; },
        [&](const PwLoop& p) { os << "PwLoop(" << rational_text(p.num, p.den) << "," << p.j << ")"; },
        [&](const SpLoop& s) { os << "SpLoop(" << s.lam << "," << s.j << "," << sign_char(s.sign) << ")"; }}, g);
    return os.str();
}

} // namespace skewtilt
