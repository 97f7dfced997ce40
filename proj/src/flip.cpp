#include "skewtilt/flip.hpp"

#include "skewtilt/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewtilt {

namespace {

[[noreturn]] void violation(const PseudoTri& t, const SkewCurve& removed, const SkewCurve& added, const std::string& why) {
    throw DomainError("flip of " + to_string(removed) + " to " + to_string(added) + " (n=" + std::to_string(t.n()) +
                      ") outside the flip table: " + why);
}

Sign require_sign(const ZetaValue& v, const PseudoTri& t, const SkewCurve& r, const SkewCurve& a) {
    if (!v.is_sign()) violation(t, r, a, "expected a sign, found " + v.to_string());
    return v.sign();
}

void expect_equal(const SkewCurve& predicted, const PseudoTri& t, const SkewCurve& r, const SkewCurve& a) {
    if (!(canonicalize(predicted, t.n()) == a))
        violation(t, r, a, "predicted " + to_string(predicted));
}

std::vector<Half> halves_at(const PseudoTri& t, int cross) {
    std::vector<Half> out;
    for (const auto& g : t.arcs())
        if (auto h = std::get_if<Half>(&g); h && h->cross == cross) out.push_back(*h);
    return out;
}

bool is_zero_witness(const ZetaValue& v) { return v.kind == ZetaKind::Pm && v.witness == Witness::A0; }

} // namespace

std::string CaseLabel::to_string() const {
    static const char* roman[] = {"", "I", "II", "III"};
    return std::string(roman[static_cast<int>(type)]) + "(" + std::to_string(sub) + ")";
}

std::vector<SkewCurve> complements(const std::vector<SkewCurve>& almost0, int n) {
    std::vector<SkewCurve> almost;
    for (const auto& g : almost0) almost.push_back(canonicalize(g, n));
    for (size_t x = 0; x < almost.size(); ++x) {
        if (!is_skew_arc(almost[x], n)) throw DomainError("not a skew-arc: " + to_string(almost[x]));
        for (size_t y = x + 1; y < almost.size(); ++y)
            if (!compatible(almost[x], almost[y], n))
                throw DomainError("incompatible: " + to_string(almost[x]) + ", " + to_string(almost[y]));
    }
    std::vector<SkewCurve> out;
    for (const auto& cand : candidate_window(almost, n)) {
        if (std::find(almost.begin(), almost.end(), cand) != almost.end()) continue;
        bool fits = std::all_of(almost.begin(), almost.end(), [&](const SkewCurve& g) { return compatible(cand, g, n); });
        if (!fits) continue;
        auto full = almost;
        full.push_back(cand);
        if (validate(full, n).ok) out.push_back(cand);
    }
    if (out.size() != 2)
        throw DomainError("expected exactly two complements, found " + std::to_string(out.size()));
    return out;
}

FlipResult flip(const PseudoTri& t, const SkewCurve& g0) {
    SkewCurve g = canonicalize(g0, t.n());
    if (!t.contains(g)) throw DomainError("arc " + to_string(g) + " is not in the set");
    PseudoTri rest = t.without(g);
    auto comps = complements(rest.arcs(), t.n());
    if (!(comps[0] == g) && !(comps[1] == g)) throw DomainError("removed arc is not a complement of the rest");
    SkewCurve added = (comps[0] == g) ? comps[1] : comps[0];
    return FlipResult{rest.with(added), g, added, classify_flip(t, g, added)};
}

CaseLabel classify_flip(const PseudoTri& t, const SkewCurve& removed0, const SkewCurve& added0) {
    int n = t.n();
    SkewCurve removed = canonicalize(removed0, n), added = canonicalize(added0, n);
    Zeta z = zeta(t);
    Zeta zm = zeta_minus(t, removed);
    const Half* ah = std::get_if<Half>(&added);

    if (auto rh = std::get_if<Half>(&removed)) {
        int i = rh->cross, j = 3 - rh->cross;
        bool zero = is_zero_witness(z[i - 1]);
        if (ah && ah->cross == i) {
            if (zero) {
                if (ah->sign != require_sign(zm[i - 1], t, removed, added)) violation(t, removed, added, "I(1) sign");
                return {FlipType::I, 1};
            }
            bool endpoint = false;
            PseudoTri rest = t.without(removed);
            for (const auto& g : rest.arcs())
                if (auto h = std::get_if<Half>(&g); h && h->cross == i && h->idx != ah->idx) endpoint = true;
            Sign zi = require_sign(z[i - 1], t, removed, added);
            if (ah->sign != (endpoint ? zi : negate(zi))) violation(t, removed, added, "I(6) sign");
            return {FlipType::I, 6};
        }
        if (is_star(added)) {
            if (zero) {
                Star p{require_sign(zm[0], t, removed, added), require_sign(zm[1], t, removed, added)};
                expect_equal(p, t, removed, added);
                return {FlipType::I, 2};
            }
            Star p{require_sign(z[0], t, removed, added), require_sign(z[1], t, removed, added)};
            (i == 1 ? p.e1 : p.e2) = negate(i == 1 ? p.e1 : p.e2);
            expect_equal(p, t, removed, added);
            return {FlipType::I, 3};
        }
        if (zero) violation(t, removed, added, "zeta is pm(0) at the removed cross");
        if (is_pair(added) || is_torspair(added)) return {FlipType::I, 4};
        if (ah && ah->cross == j) {
            if (ah->sign != require_sign(z[j - 1], t, removed, added)) violation(t, removed, added, "I(5) sign");
            return {FlipType::I, 5};
        }
        violation(t, removed, added, "unexpected added arc");
    }

    if (is_pair(removed) || is_torspair(removed)) {
        if (ah) {
            if (ah->sign != require_sign(z[ah->cross - 1], t, removed, added)) violation(t, removed, added, "II(1) sign");
            return {FlipType::II, 1};
        }
        if (is_pair(added) || is_torspair(added)) return {FlipType::II, 2};
        if (is_star(added)) {
            Star p{require_sign(z[0], t, removed, added), require_sign(z[1], t, removed, added)};
            expect_equal(p, t, removed, added);
            return {FlipType::II, 3};
        }
        violation(t, removed, added, "unexpected added arc");
    }

    if (is_star(removed)) {
        if (is_pair(added) || is_torspair(added)) return {FlipType::III, 1};
        if (ah) {
            int pm_cross = 0;
            for (int c = 1; c <= 2; ++c)
                if (z[c - 1].kind == ZetaKind::Pm &&
                    (z[c - 1].witness == Witness::A1 || z[c - 1].witness == Witness::A2))
                    pm_cross = c;
            if (pm_cross != 0) {
                auto other = halves_at(t, 3 - pm_cross);
                if (other.empty()) violation(t, removed, added, "III(3) without halves at the other cross");
                auto [lo, hi] = std::minmax_element(other.begin(), other.end(),
                                                    [](const Half& x, const Half& y) { return x.idx < y.idx; });
                if (hi->idx - lo->idx != n) violation(t, removed, added, "III(3) halves do not span a full turn");
                int idx = pm_cross == 1 ? hi->idx : lo->idx;
                expect_equal(Half{pm_cross, idx, require_sign(zm[pm_cross - 1], t, removed, added)}, t, removed, added);
                return {FlipType::III, 3};
            }
            int single = 0;
            for (int c = 1; c <= 2; ++c)
                if (halves_at(t, c).size() == 1) single = single == 0 ? c : -1;
            if (single <= 0) violation(t, removed, added, "III(2) needs exactly one cross with a single half");
            Half h = halves_at(t, single).front();
            expect_equal(Half{single, h.idx, negate(require_sign(z[single - 1], t, removed, added))}, t, removed, added);
            return {FlipType::III, 2};
        }
        violation(t, removed, added, "unexpected added arc");
    }
    violation(t, removed, added, "removed arc is not a skew-arc of a pseudo-triangulation");
}

std::vector<FlipResult> mu_hat_steps(const PseudoTri& t, int i) {
    int n = t.n();
    auto ch = fv_chains(t);
    if (!ch) throw DomainError("composite mutation needs an FV set");
    if (i < 0 || i > n) throw DomainError("composite mutation index out of range");
    if (i == 0 || i == n) {
        int cross = i == 0 ? 1 : 2;
        int idx = i == 0 ? ch->a[0] : -ch->b[n];
        Half plus{cross, idx, Sign::Plus}, minus{cross, idx, Sign::Minus};
        FlipResult f1 = flip(t, plus);
        FlipResult f2 = flip(f1.new_tri, minus);
        PseudoTri other = flip(flip(t, minus).new_tri, plus).new_tri;
        if (!(other == f2.new_tri)) throw std::logic_error("end mutation depends on flip order");
        return {f1, f2};
    }
    return {flip(t, Pair{ch->b[i], i})};
}

PseudoTri mu_hat(const PseudoTri& t, int i) { return mu_hat_steps(t, i).back().new_tri; }

bool stable_under_x1_minus_x2(const PseudoTri& t) {
    int n = t.n();
    return shift_all(t, LElement::x1(n) - LElement::x2(n)) == t;
}

std::vector<int> iota(const PseudoTri& t) {
    if (!is_fv(t)) throw DomainError("iota needs an FV set");
    std::vector<int> bits;
    for (int i = 0; i <= t.n(); ++i) {
        PseudoTri m = mu_hat(t, i);
        bool bundles = std::all_of(m.arcs().begin(), m.arcs().end(),
                                   [](const SkewCurve& g) { return is_half(g) || is_pair(g); });
        bits.push_back(bundles && stable_under_x1_minus_x2(m) ? 1 : 0);
    }
    return bits;
}

} // namespace skewtilt
