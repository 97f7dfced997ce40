#include "skewtilt/compat.hpp"

#include "skewtilt/errors.hpp"

#include <cstdlib>
#include <stdexcept>

namespace skewtilt {

namespace {

// Tube label: 1 and -1 for the rank-2 tubes, 0 for the rank-n tube, otherwise the
// homogeneous parameter orbit.
struct Tube {
    int kind;
    long long num;
    long long den;
    bool operator==(const Tube&) const = default;
};

Tube tube_of(const SkewCurve& g) {
    if (auto s = std::get_if<Star>(&g)) return {s->e1 == s->e2 ? 1 : -1, 0, 0};
    if (auto s = std::get_if<SpLoop>(&g)) return {s->lam, 0, 0};
    if (std::holds_alternative<TorsPair>(g)) return {0, 0, 0};
    auto p = std::get<PwLoop>(g);
    return {2, p.num, p.den};
}

bool geometric(const SkewCurve& g) { return is_half(g) || is_pair(g) || is_torspair(g); }

} // namespace

int ext1_dim_star_line(const Tors2& simple, LineForm form) {
    if (simple.len != 1) throw DomainError("Ext table covers simple objects only");
    static const int table[4][4] = {
        // F0 F12 F1 F2
        {1, 0, 0, 1}, // S_{inf,0}
        {0, 1, 1, 0}, // S_{inf,1}
        {1, 0, 1, 0}, // S_{0,0}
        {0, 1, 0, 1}, // S_{0,1}
    };
    int row = (simple.pt == TorsPoint::Infty ? 0 : 2) + mod(simple.res, 2);
    return table[row][static_cast<int>(form)];
}

int curve_set_intersection(const SkewCurve& g1, const SkewCurve& g2, int n) {
    int total = 0;
    for (const auto& c1 : curve_set(g1, n))
        for (const auto& c2 : curve_set(g2, n)) total += intersection_number(c1, c2, n);
    return total;
}

bool is_skew_arc(const SkewCurve& g0, int n) {
    SkewCurve g = canonicalize(g0, n);
    if (is_half(g) || is_pair(g) || is_star(g)) return true;
    if (auto t = std::get_if<TorsPair>(&g)) {
        bool by_curves = curve_set_intersection(g, g, n) == 0;
        bool by_length = t->len <= n - 1;
        if (by_curves != by_length) throw std::logic_error("tube rigidity mismatch");
        return by_length;
    }
    return false;
}

bool compatible(const SkewCurve& a0, const SkewCurve& b0, int n) {
    SkewCurve a = canonicalize(a0, n), b = canonicalize(b0, n);
    if (a == b) return is_skew_arc(a, n);
    if (a.index() > b.index()) std::swap(a, b);

    if (auto h1 = std::get_if<Half>(&a)) {
        if (auto h2 = std::get_if<Half>(&b); h2 && h1->cross == h2->cross) {
            if (h1->idx == h2->idx) return true;
            int meet = intersection_number(half_bridge(*h1, n), half_bridge(*h2, n), n);
            bool near = std::abs(h1->idx - h2->idx) <= n;
            if ((meet == 1) != near) throw std::logic_error("fixed-bridge intersection mismatch");
            return h1->sign == h2->sign && near;
        }
    }
    if (geometric(a) && geometric(b)) return curve_set_intersection(a, b, n) == 0;

    if (auto s = std::get_if<Star>(&b)) {
        if (auto h = std::get_if<Half>(&a)) return h->sign == (h->cross == 1 ? s->e1 : s->e2);
        if (is_pair(a)) return false;
    }
    if (auto s1 = std::get_if<Star>(&a)) {
        if (auto s2 = std::get_if<Star>(&b)) return s1->e1 == s2->e1 || s1->e2 == s2->e2;
    }
    if (is_half(a) || is_pair(a)) return false;
    return !(tube_of(a) == tube_of(b));
}

} // namespace skewtilt
