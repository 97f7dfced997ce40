#pragma once

#include "skewtilt/compat.hpp"
#include "skewtilt/skewcurves.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace skewtilt {

// A finite set of skew-curves, held canonicalized, sorted and duplicate-free.
class PseudoTri {
public:
    PseudoTri() = default;
    PseudoTri(int n, std::vector<SkewCurve> arcs);

    int n() const { return n_; }
    const std::vector<SkewCurve>& arcs() const { return arcs_; }
    size_t size() const { return arcs_.size(); }
    bool contains(const SkewCurve& g) const;

    PseudoTri without(const SkewCurve& g) const;
    PseudoTri with(const SkewCurve& g) const;

    auto operator<=>(const PseudoTri&) const = default;

private:
    int n_ = 2;
    std::vector<SkewCurve> arcs_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Halves and Pairs with slant in [lo, hi], all rigid TorsPairs, all four Stars.
std::vector<SkewCurve> arc_universe(int n, int lo, int hi);
// Every skew-arc compatible with all members of `arcs` lies in this list.
std::vector<SkewCurve> candidate_window(const std::vector<SkewCurve>& arcs, int n);

bool is_maximal(const std::vector<SkewCurve>& arcs, int n);
ValidationReport validate(const std::vector<SkewCurve>& arcs, int n);
inline ValidationReport validate(const PseudoTri& t) { return validate(t.arcs(), t.n()); }

enum class ZetaKind { Plus, Minus, Pm };
enum class Witness { None, A0, A1, A2 };

struct ZetaValue {
    ZetaKind kind = ZetaKind::Pm;
    Witness witness = Witness::None;

    bool is_sign() const { return kind != ZetaKind::Pm; }
    Sign sign() const;
    std::string to_string() const;
    bool operator==(const ZetaValue&) const = default;
};

using Zeta = std::array<ZetaValue, 2>;

// Raw classification of any arc set; Pm values may carry Witness::None.
Zeta zeta_of(const std::vector<SkewCurve>& arcs);
Zeta zeta(const PseudoTri& t);
Zeta zeta_minus(const PseudoTri& t, const SkewCurve& g);

struct GammaArc {
    enum class Kind { Curve, Ray, PunctureLoop, SemiCircle };
    Kind kind = Kind::Curve;
    CurveClass curve;
    int cross = 0;
    bool top = false;
    int endpoint = 0;
    int which = 0;
};

struct GammaLambda {
    std::vector<int> punctures;
    std::vector<GammaArc> arcs;
};

GammaLambda gamma_lambda(const PseudoTri& t);

struct FvChains {
    std::vector<int> a;
    std::vector<int> b;
};

std::optional<FvChains> fv_chains(const PseudoTri& t);
inline bool is_fv(const PseudoTri& t) { return fv_chains(t).has_value(); }

PseudoTri fv_arrow(int n, int a, int b);
PseudoTri fv_under(int n, int a, int b);

std::vector<SheafName> tilting_sheaf(const PseudoTri& t);
int classify_case(const PseudoTri& t);

PseudoTri shift_all(const PseudoTri& t, const LElement& x);

} // namespace skewtilt
