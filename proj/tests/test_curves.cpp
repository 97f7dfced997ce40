#include "skewtilt/curves.hpp"
#include "skewtilt/errors.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace skewtilt;

namespace {

bool inside(long long x, long long lo, long long hi) { return lo < x && x < hi; }

// Crossing count of the fixed lift of c1 with all translates of c2, over a wide range of t.
int wide_sum(const CurveClass& c1, const CurveClass& c2, int n) {
    bool same = canonicalize(c1, n) == canonicalize(c2, n);
    int total = 0;
    for (long long t = -60; t <= 60; ++t) {
        if (same && c1 == c2 && t == 0) continue;
        long long s = t * n;
        const CurveClass& p = c1;
        const CurveClass& q = c2;
        if (p.kind == CurveKind::Bridge && q.kind == CurveKind::Bridge) {
            total += (p.a - q.a - s) * (p.b - q.b - s) < 0;
        } else if (p.kind == CurveKind::Bridge || q.kind == CurveKind::Bridge) {
            const CurveClass& br = p.kind == CurveKind::Bridge ? p : q;
            const CurveClass& arc = p.kind == CurveKind::Bridge ? q : p;
            long long sh = p.kind == CurveKind::Bridge ? s : -s;
            long long foot = arc.kind == CurveKind::LowerArc ? br.a : br.b;
            total += inside(foot, arc.a + sh, arc.b + sh);
        } else if (p.kind == q.kind) {
            long long k = q.a + s, l = q.b + s;
            bool k_in = inside(k, p.a, p.b), l_in = inside(l, p.a, p.b);
            bool k_out = k < p.a || k > p.b, l_out = l < p.a || l > p.b;
            total += (k_in && l_out) || (l_in && k_out);
        }
    }
    return total;
}

std::vector<CurveClass> sample_classes(int n) {
    std::vector<CurveClass> out;
    for (int a = -n; a < n; ++a)
        for (int b = -2 * n; b <= 2 * n; ++b) out.push_back(CurveClass::bridge(a, b));
    for (int a = -n; a < n; ++a)
        for (int b = a + 2; b <= a + n + 2; ++b) {
            out.push_back(CurveClass::lower_arc(a, b));
            out.push_back(CurveClass::upper_arc(a, b));
        }
    return out;
}

} // namespace

TEST(Curves, CanonicalizeExamples) {
    EXPECT_EQ(canonicalize(CurveClass::bridge(5, 1), 4), CurveClass::bridge(1, -3));
    EXPECT_EQ(canonicalize(CurveClass::lower_arc(7, 3), 4), CurveClass::lower_arc(3, 7));
    EXPECT_EQ(canonicalize(CurveClass::upper_arc(-2, 1), 4), CurveClass::upper_arc(2, 5));
}

TEST(Curves, SigmaExamples) {
    for (int i = -3; i <= 3; ++i)
        for (int k = 1; k <= 3; ++k)
            EXPECT_EQ(sigma_image(CurveClass::bridge(i, k - i)), CurveClass::bridge(i - k, -i));
    EXPECT_EQ(sigma_image(CurveClass::upper_arc(1, 4)), CurveClass::lower_arc(-4, -1));
    EXPECT_EQ(sigma_image(CurveClass::bridge(-3, 3)), CurveClass::bridge(-3, 3));
    EXPECT_EQ(sigma_fixed_point(CurveClass::bridge(-2, 2), 4), Cross::One);
    EXPECT_EQ(sigma_fixed_point(CurveClass::bridge(-1, 5), 4), Cross::Two);
    EXPECT_EQ(sigma_fixed_point(CurveClass::bridge(0, 1), 4), Cross::None);
}

TEST(Curves, SigmaIsInvolution) {
    for (int n = 2; n <= 5; ++n)
        for (const auto& c : sample_classes(n)) EXPECT_EQ(sigma_image(sigma_image(c)), c);
}

TEST(Curves, IntersectionExamples) {
    EXPECT_EQ(intersection_number(CurveClass::bridge(0, 0), CurveClass::bridge(-1, 1), 2), 1);
    EXPECT_EQ(intersection_number(CurveClass::bridge(0, 1), CurveClass::lower_arc(-1, 1), 4), 1);
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            EXPECT_EQ(intersection_number(CurveClass::bridge(a, b), CurveClass::bridge(a, b), 4), 0);
}

TEST(Curves, IntersectionMatchesWideSum) {
    for (int n = 2; n <= 4; ++n) {
        auto cs = sample_classes(n);
        for (const auto& p : cs)
            for (const auto& q : cs) EXPECT_EQ(intersection_number(p, q, n), wide_sum(p, q, n)) << to_string(p) << " " << to_string(q);
    }
}

TEST(Curves, IntersectionSymmetries) {
    std::mt19937 rng(21);
    for (int n = 2; n <= 5; ++n) {
        auto cs = sample_classes(n);
        std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
        for (int trial = 0; trial < 3000; ++trial) {
            const auto& p = cs[pick(rng)];
            const auto& q = cs[pick(rng)];
            int v = intersection_number(p, q, n);
            EXPECT_EQ(v, intersection_number(q, p, n));
            EXPECT_EQ(v, intersection_number(sigma_image(p), sigma_image(q), n));
            EXPECT_EQ(v, intersection_number(canonicalize(p, n), canonicalize(q, n), n));
        }
    }
}

TEST(Curves, SigmaPairsAreDisjoint) {
    for (int n = 2; n <= 6; ++n)
        for (int i = -2 * n; i <= 2 * n; ++i)
            for (int k = 1; k <= n - 1; ++k) {
                CurveClass g = CurveClass::bridge(i, k - i);
                EXPECT_EQ(intersection_number(g, sigma_image(g), n), 0);
            }
}

TEST(Curves, FixedBridgesAtOneCross) {
    for (int n = 2; n <= 6; ++n)
        for (int i = -2 * n; i <= 2 * n; ++i)
            for (int j = i + 1; j <= i + 3 * n; ++j) {
                int v = intersection_number(CurveClass::bridge(-i, i), CurveClass::bridge(-j, j), n);
                EXPECT_GE(v, 1);
                EXPECT_EQ(v == 1, j - i <= n) << n << " " << i << " " << j;
            }
}

TEST(Curves, UpperArcSelfOverlap) {
    for (int n = 2; n <= 6; ++n)
        for (int s = 2; s <= 2 * n; ++s) {
            CurveClass u = CurveClass::upper_arc(0, s);
            EXPECT_EQ(intersection_number(u, u, n) > 0, s > n) << n << " " << s;
        }
}

TEST(Curves, TextRoundTrip) {
    for (const auto& c : sample_classes(3)) EXPECT_EQ(parse_curve(to_string(c)), c) << to_string(c);
    EXPECT_EQ(parse_curve("L0"), CurveClass::semicircle(0));
    EXPECT_EQ(parse_curve("L^3"), CurveClass::loop_power(3));
}

TEST(Curves, Errors) {
    EXPECT_THROW(CurveClass::lower_arc(1, 2), DomainError);
    EXPECT_THROW(sigma_fixed_point(CurveClass::lower_arc(0, 3), 4), DomainError);
    EXPECT_THROW(intersection_number(CurveClass::loop_power(1), CurveClass::bridge(0, 0), 4), DomainError);
    EXPECT_THROW(parse_curve("D[x]"), ParseError);
}
