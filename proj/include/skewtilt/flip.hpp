#pragma once

#include "skewtilt/triang.hpp"

#include <string>
#include <vector>

namespace skewtilt {

enum class FlipType { I = 1, II = 2, III = 3 };

struct CaseLabel {
    FlipType type = FlipType::I;
    int sub = 1;
    std::string to_string() const;
    bool operator==(const CaseLabel&) const = default;
};

struct FlipResult {
    PseudoTri new_tri;
    SkewCurve removed;
    SkewCurve added;
    CaseLabel label;
};

// All skew-arcs completing an (n+2)-element compatible set to a pseudo-triangulation.
// Throws DomainError unless exactly two exist.
std::vector<SkewCurve> complements(const std::vector<SkewCurve>& almost, int n);

FlipResult flip(const PseudoTri& t, const SkewCurve& g);
CaseLabel classify_flip(const PseudoTri& t, const SkewCurve& removed, const SkewCurve& added);

std::vector<FlipResult> mu_hat_steps(const PseudoTri& t, int i);
PseudoTri mu_hat(const PseudoTri& t, int i);

bool stable_under_x1_minus_x2(const PseudoTri& t);
std::vector<int> iota(const PseudoTri& t);

} // namespace skewtilt
