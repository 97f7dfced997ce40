#include "skewtilt/triang.hpp"

#include "skewtilt/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace skewtilt {

namespace {

int floor_half(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
int ceil_half(int v) { return -floor_half(-v); }

std::vector<SkewCurve> halves_at(const std::vector<SkewCurve>& arcs, int cross) {
    std::vector<SkewCurve> out;
    for (const auto& g : arcs)
        if (auto h = std::get_if<Half>(&g); h && h->cross == cross) out.push_back(g);
    return out;
}

bool has_star(const std::vector<SkewCurve>& arcs, Sign e1, Sign e2) {
    return std::find(arcs.begin(), arcs.end(), SkewCurve{Star{e1, e2}}) != arcs.end();
}

int count_stars(const std::vector<SkewCurve>& arcs) {
    return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [](const SkewCurve& g) { return is_star(g); }));
}

} // namespace

PseudoTri::PseudoTri(int n, std::vector<SkewCurve> arcs) : n_(n) {
    if (n < 2) throw DomainError("weight n must be at least 2");
    for (auto& g : arcs) g = canonicalize(g, n);
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    arcs_ = std::move(arcs);
}

bool PseudoTri::contains(const SkewCurve& g) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), canonicalize(g, n_));
}

PseudoTri PseudoTri::without(const SkewCurve& g) const {
    SkewCurve c = canonicalize(g, n_);
    std::vector<SkewCurve> rest;
    for (const auto& a : arcs_)
        if (!(a == c)) rest.push_back(a);
    return PseudoTri(n_, rest);
}

PseudoTri PseudoTri::with(const SkewCurve& g) const {
    auto all = arcs_;
    all.push_back(g);
    return PseudoTri(n_, all);
}

std::vector<SkewCurve> arc_universe(int n, int lo, int hi) {
    std::vector<SkewCurve> out;
    for (int idx = ceil_half(lo); idx <= floor_half(hi); ++idx)
        for (Sign s : {Sign::Plus, Sign::Minus}) out.push_back(Half{1, idx, s});
    for (int idx = ceil_half(lo - n); idx <= floor_half(hi - n); ++idx)
        for (Sign s : {Sign::Plus, Sign::Minus}) out.push_back(Half{2, idx, s});
    for (int k = 1; k <= n - 1; ++k)
        for (int i = ceil_half(k - hi); i <= floor_half(k - lo); ++i) out.push_back(Pair{i, k});
    for (int res = 0; res < n; ++res)
        for (int len = 1; len <= n - 1; ++len) out.push_back(TorsPair{res, len});
    for (Sign a : {Sign::Plus, Sign::Minus})
        for (Sign b : {Sign::Plus, Sign::Minus}) out.push_back(Star{a, b});
    return out;
}

std::vector<SkewCurve> candidate_window(const std::vector<SkewCurve>& arcs, int n) {
    std::optional<int> lo, hi;
    for (const auto& g : arcs) {
        if (auto s = slant(canonicalize(g, n), n)) {
            lo = lo ? std::min(*lo, *s) : *s;
            hi = hi ? std::max(*hi, *s) : *s;
        }
    }
    if (!lo) return arc_universe(n, -2 * n - 2, 2 * n + 2);
    return arc_universe(n, *lo - 2 * n, *hi + 2 * n);
}

bool is_maximal(const std::vector<SkewCurve>& arcs0, int n) {
    std::vector<SkewCurve> arcs;
    for (const auto& g : arcs0) arcs.push_back(canonicalize(g, n));
    for (const auto& cand : candidate_window(arcs, n)) {
        if (std::find(arcs.begin(), arcs.end(), cand) != arcs.end()) continue;
        bool fits = true;
        for (const auto& g : arcs) {
            if (!compatible(cand, g, n)) { fits = false; break; }
        }
        if (fits) return false;
    }
    return true;
}

ValidationReport validate(const std::vector<SkewCurve>& arcs0, int n) {
    ValidationReport rep;
    std::vector<SkewCurve> arcs;
    for (const auto& g : arcs0) {
        SkewCurve c = canonicalize(g, n);
        if (std::find(arcs.begin(), arcs.end(), c) != arcs.end())
            rep.violations.push_back("duplicate arc " + to_string(c));
        else
            arcs.push_back(c);
    }
    bool pairwise = true;
    for (const auto& g : arcs) {
        if (!is_skew_arc(g, n)) {
            rep.violations.push_back("not a skew-arc: " + to_string(g));
            pairwise = false;
        }
    }
    for (size_t x = 0; x < arcs.size(); ++x)
        for (size_t y = x + 1; y < arcs.size(); ++y)
            if (!compatible(arcs[x], arcs[y], n)) {
                rep.violations.push_back("incompatible: " + to_string(arcs[x]) + ", " + to_string(arcs[y]));
                pairwise = false;
            }
    if (arcs.size() != static_cast<size_t>(n + 3))
        rep.violations.push_back("size " + std::to_string(arcs.size()) + ", expected " + std::to_string(n + 3));
    if (pairwise && !is_maximal(arcs, n)) rep.violations.push_back("not maximal");
    rep.ok = rep.violations.empty();
    return rep;
}

Sign ZetaValue::sign() const {
    if (kind == ZetaKind::Pm) throw DomainError("zeta value is not a sign");
    return kind == ZetaKind::Plus ? Sign::Plus : Sign::Minus;
}

std::string ZetaValue::to_string() const {
    switch (kind) {
    case ZetaKind::Plus: return "+";
    case ZetaKind::Minus: return "-";
    case ZetaKind::Pm:
        switch (witness) {
        case Witness::A0: return "pm(0)";
        case Witness::A1: return "pm(1)";
        case Witness::A2: return "pm(2)";
        case Witness::None: return "pm";
        }
    }
    return "?";
}

Zeta zeta_of(const std::vector<SkewCurve>& arcs) {
    Zeta z;
    for (int cross = 1; cross <= 2; ++cross) {
        std::vector<SkewCurve> plus, minus;
        for (const auto& g : arcs) {
            if (auto h = std::get_if<Half>(&g); h && h->cross == cross)
                (h->sign == Sign::Plus ? plus : minus).push_back(g);
            if (auto s = std::get_if<Star>(&g)) {
                Sign e = cross == 1 ? s->e1 : s->e2;
                (e == Sign::Plus ? plus : minus).push_back(g);
            }
        }
        ZetaValue& v = z[cross - 1];
        if (plus.empty() && minus.empty()) throw DomainError("no arc meets cross " + std::to_string(cross));
        if (minus.empty()) { v = {ZetaKind::Plus, Witness::None}; continue; }
        if (plus.empty()) { v = {ZetaKind::Minus, Witness::None}; continue; }
        v.kind = ZetaKind::Pm;
        if (plus.size() == 1 && minus.size() == 1 && is_half(plus[0]) && is_half(minus[0]) &&
            std::get<Half>(plus[0]).idx == std::get<Half>(minus[0]).idx) {
            v.witness = Witness::A0;
        } else if (cross == 1 && ((has_star(arcs, Sign::Minus, Sign::Plus) && has_star(arcs, Sign::Plus, Sign::Plus)) ||
                                  (has_star(arcs, Sign::Minus, Sign::Minus) && has_star(arcs, Sign::Plus, Sign::Minus)))) {
            v.witness = Witness::A1;
        } else if (cross == 2 && ((has_star(arcs, Sign::Minus, Sign::Plus) && has_star(arcs, Sign::Minus, Sign::Minus)) ||
                                  (has_star(arcs, Sign::Plus, Sign::Plus) && has_star(arcs, Sign::Plus, Sign::Minus)))) {
            v.witness = Witness::A2;
        }
    }
    return z;
}

Zeta zeta(const PseudoTri& t) {
    Zeta z = zeta_of(t.arcs());
    for (const auto& v : z)
        if (v.kind == ZetaKind::Pm && v.witness == Witness::None)
            throw DomainError("both signs meet a cross without an A0/A1/A2 witness");
    return z;
}

Zeta zeta_minus(const PseudoTri& t, const SkewCurve& g) {
    if (!t.contains(g)) throw DomainError("arc " + to_string(g) + " is not in the set");
    return zeta_of(t.without(g).arcs());
}

GammaLambda gamma_lambda(const PseudoTri& t) {
    int n = t.n();
    Zeta z = zeta(t);
    GammaLambda out;
    for (const auto& g : t.arcs()) {
        if (is_pair(g) || is_torspair(g))
            for (const auto& c : curve_set(g, n)) out.arcs.push_back({GammaArc::Kind::Curve, c});
    }
    for (int cross = 1; cross <= 2; ++cross) {
        const ZetaValue& v = z[cross - 1];
        if (v.is_sign()) {
            out.punctures.push_back(cross);
            for (const auto& g : halves_at(t.arcs(), cross)) {
                const Half& h = std::get<Half>(g);
                if (h.sign != v.sign()) continue;
                CurveClass b = half_bridge(h, n);
                GammaArc up{GammaArc::Kind::Ray, {}, cross, true, b.top()};
                GammaArc down{GammaArc::Kind::Ray, {}, cross, false, b.bot()};
                out.arcs.push_back(up);
                out.arcs.push_back(down);
            }
        } else if (v.witness == Witness::A0) {
            const Half& h = std::get<Half>(halves_at(t.arcs(), cross).front());
            out.arcs.push_back({GammaArc::Kind::Curve, half_bridge(h, n)});
        } else {
            GammaArc loop;
            loop.kind = GammaArc::Kind::PunctureLoop;
            loop.cross = 3 - cross;
            out.arcs.push_back(loop);
        }
    }
    if (z[0].is_sign() && z[1].is_sign() && count_stars(t.arcs()) > 0) {
        for (int w = 0; w < 2; ++w) {
            GammaArc semi;
            semi.kind = GammaArc::Kind::SemiCircle;
            semi.which = w;
            out.arcs.push_back(semi);
        }
    }
    size_t expected = 2 * n + 3 * out.punctures.size();
    if (out.arcs.size() != expected)
        throw DomainError("triangulation count " + std::to_string(out.arcs.size()) + " differs from " +
                          std::to_string(expected));
    return out;
}

std::optional<FvChains> fv_chains(const PseudoTri& t) {
    int n = t.n();
    std::map<int, int> pair_bot;
    std::vector<Half> h1, h2;
    for (const auto& g : t.arcs()) {
        if (auto h = std::get_if<Half>(&g)) {
            (h->cross == 1 ? h1 : h2).push_back(*h);
        } else if (auto p = std::get_if<Pair>(&g)) {
            if (pair_bot.count(p->k)) return std::nullopt;
            pair_bot[p->k] = p->i;
        } else {
            return std::nullopt;
        }
    }
    auto both_signs = [](const std::vector<Half>& hs) {
        return hs.size() == 2 && hs[0].idx == hs[1].idx && hs[0].sign != hs[1].sign;
    };
    if (!both_signs(h1) || !both_signs(h2) || pair_bot.size() != static_cast<size_t>(n - 1)) return std::nullopt;
    FvChains ch;
    ch.b.push_back(-h1[0].idx);
    ch.a.push_back(h1[0].idx);
    for (int j = 1; j <= n - 1; ++j) {
        ch.b.push_back(pair_bot[j]);
        ch.a.push_back(j - pair_bot[j]);
    }
    ch.b.push_back(-h2[0].idx);
    ch.a.push_back(n + h2[0].idx);
    for (int j = 1; j <= n; ++j)
        if (ch.a[j] < ch.a[j - 1] || ch.b[j] < ch.b[j - 1]) return std::nullopt;
    return ch;
}

namespace {

PseudoTri fv_family(int n, int a, int b, bool top_first) {
    if (a + b != 0) throw DomainError("generator family needs a + b = 0");
    std::vector<SkewCurve> arcs;
    for (Sign s : {Sign::Plus, Sign::Minus}) arcs.push_back(Half{1, a, s});
    for (int j = 1; j <= n - 1; ++j) {
        int bj = top_first ? b + j / 2 : b + (j + 1) / 2;
        arcs.push_back(Pair{bj, j});
    }
    int bn = top_first ? b + n / 2 : b + (n + 1) / 2;
    for (Sign s : {Sign::Plus, Sign::Minus}) arcs.push_back(Half{2, -bn, s});
    return PseudoTri(n, arcs);
}

} // namespace

PseudoTri fv_arrow(int n, int a, int b) { return fv_family(n, a, b, true); }
PseudoTri fv_under(int n, int a, int b) { return fv_family(n, a, b, false); }

std::vector<SheafName> tilting_sheaf(const PseudoTri& t) {
    std::vector<SheafName> out;
    for (const auto& g : t.arcs()) out.push_back(phi(g, t.n()));
    std::sort(out.begin(), out.end());
    return out;
}

int classify_case(const PseudoTri& t) {
    int stars = count_stars(t.arcs());
    if (stars == 2) return 1;
    if (stars == 1) return 2;
    Zeta z = zeta(t);
    if (!z[0].is_sign() && !z[1].is_sign()) return 3;
    if (!z[0].is_sign()) return 4;
    if (!z[1].is_sign()) return 5;
    return 6;
}

PseudoTri shift_all(const PseudoTri& t, const LElement& x) {
    if (x.n() != t.n()) throw DomainError("shift element has a different n");
    std::vector<SkewCurve> out;
    for (const auto& g : t.arcs()) out.push_back(shift(g, x));
    return PseudoTri(t.n(), out);
}

} // namespace skewtilt
