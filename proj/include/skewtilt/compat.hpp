#pragma once

#include "skewtilt/skewcurves.hpp"

namespace skewtilt {

// dim Ext^1(S, L) for a simple S of a rank-2 tube and a line bundle L of the given form.
int ext1_dim_star_line(const Tors2& simple, LineForm form);

// Sum of pairwise intersection numbers between the curve sets of two skew-curves
// built from bridges and boundary arcs.
int curve_set_intersection(const SkewCurve& g1, const SkewCurve& g2, int n);

bool compatible(const SkewCurve& g1, const SkewCurve& g2, int n);
bool is_skew_arc(const SkewCurve& g, int n);

} // namespace skewtilt
