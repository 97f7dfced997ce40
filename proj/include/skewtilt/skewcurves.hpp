#pragma once

#include "skewtilt/curves.hpp"
#include "skewtilt/lattice.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace skewtilt {

enum class Sign { Plus, Minus };

inline Sign negate(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// Half of the sigma-fixed bridge [D^idx_{-idx}] (cross 1) or [D^{n+idx}_{-idx}] (cross 2).
struct Half {
    int cross = 1;
    int idx = 0;
    Sign sign = Sign::Plus;
    auto operator<=>(const Half&) const = default;
};

// Sigma-pair of bridges {D[i^(k-i)], D[(i-k)^(-i)]}, 1 <= k <= n-1.
struct Pair {
    int i = 0;
    int k = 1;
    auto operator<=>(const Pair&) const = default;
};

// Sigma-pair of boundary arcs {D^{res-len-1,res}, D_{-res,len+1-res}}.
struct TorsPair {
    int res = 0;
    int len = 1;
    auto operator<=>(const TorsPair&) const = default;
};

struct Star {
    Sign e1 = Sign::Plus;
    Sign e2 = Sign::Plus;
    auto operator<=>(const Star&) const = default;
};

// Homogeneous loop class, parameter orbit {lam, 1/lam} stored by the member with |lam| > 1.
struct PwLoop {
    long long num = 2;
    long long den = 1;
    int j = 1;
    auto operator<=>(const PwLoop&) const = default;
};

// Loop with parameter +-1 and power j >= 2; power 1 is represented by Star.
struct SpLoop {
    int lam = 1;
    int j = 2;
    Sign sign = Sign::Plus;
    auto operator<=>(const SpLoop&) const = default;
};

using SkewCurve = std::variant<Half, Pair, TorsPair, Star, PwLoop, SpLoop>;

enum class LineForm { F0, F12, F1, F2 };
enum class TorsPoint { Infty, Zero };

// O(i*x3), O(x1-x2+i*x3), O(x1+i*x3), O(x2+i*x3).
struct LineBundle {
    LineForm form = LineForm::F0;
    int i = 0;
    auto operator<=>(const LineBundle&) const = default;
};

// E_{O(-(i+1)x3)}<(k-1)x3>.
struct ExtBundle {
    int i = 0;
    int k = 1;
    auto operator<=>(const ExtBundle&) const = default;
};

// S_{1,res}^{(len)} in the tube of rank n.
struct TorsN {
    int res = 0;
    int len = 1;
    auto operator<=>(const TorsN&) const = default;
};

// S_{pt,res}^{(len)} in a tube of rank 2.
struct Tors2 {
    TorsPoint pt = TorsPoint::Infty;
    int res = 0;
    int len = 1;
    auto operator<=>(const Tors2&) const = default;
};

struct TorsHom {
    long long num = 2;
    long long den = 1;
    int len = 1;
    auto operator<=>(const TorsHom&) const = default;
};

using SheafName = std::variant<LineBundle, ExtBundle, TorsN, Tors2, TorsHom>;

Half make_half(int cross, int idx, Sign sign);
Pair make_pair(int i, int k, int n);
TorsPair make_torspair(int res, int len, int n);
PwLoop make_pwloop(long long num, long long den, int j);
SkewCurve make_sploop(int lam, int j, Sign sign);

SkewCurve canonicalize(const SkewCurve& g, int n);

bool is_half(const SkewCurve& g);
bool is_pair(const SkewCurve& g);
bool is_torspair(const SkewCurve& g);
bool is_star(const SkewCurve& g);
bool is_loop(const SkewCurve& g);

CurveClass half_bridge(const Half& h, int n);
std::vector<CurveClass> curve_set(const SkewCurve& g, int n);

// The sigma-fixed bridge through a cross as (cross, idx), or nullopt.
std::optional<std::pair<int, int>> fixed_bridge_index(const CurveClass& bridge, int n);
// The Pair containing a bridge that is not sigma-fixed.
Pair pair_from_bridge(const CurveClass& bridge, int n);

// top - bottom of the bridges carried by a Half or Pair; x3 adds 2.
std::optional<int> slant(const SkewCurve& g, int n);

SheafName phi(const SkewCurve& g, int n);
SkewCurve phi_inv(const SheafName& s, int n);

LElement lelement_of(const LineBundle& b, int n);
LineBundle line_bundle_of(const LElement& x);

SkewCurve shift(const SkewCurve& g, const LElement& x);
SkewCurve tau(const SkewCurve& g, int n);

enum class Generator { X1, X2, X3, X3Inv };
SheafName shift_generator(const SheafName& s, Generator gen, int n);
// Shift by a1*x1 + a2*x2 + a3*x3 + a*c through generator steps on sheaf names.
SkewCurve shift_by_generators(const SkewCurve& g, int n, long long a1, long long a2, long long a3, long long a);

std::string equivariant_description(const SkewCurve& g, int n);

std::string display(const SheafName& s);
SheafName parse_sheaf(std::string_view text, int n);

std::string to_string(const SkewCurve& g);

} // namespace skewtilt
