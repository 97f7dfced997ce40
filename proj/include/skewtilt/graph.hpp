#pragma once

#include "skewtilt/flip.hpp"

#include <functional>
#include <string>
#include <vector>

namespace skewtilt {

struct FlipStep {
    SkewCurve removed;
    SkewCurve added;
    CaseLabel label;
};

using FlipSequence = std::vector<FlipStep>;

// Representative of the x3-shift orbit; the input equals shift_all(tri, shift * x3).
struct CanonicalForm {
    PseudoTri tri;
    int shift = 0;
};

CanonicalForm canonical_form(const PseudoTri& t);

// Pseudo-triangulations whose slants lie in [0, window + 1] with minimum slant 0 or 1.
std::vector<PseudoTri> enumerate(int n, int window);

// Calls `visit` on every compatible set of skew-arcs of the given size whose slants lie in
// [0, window + 1] with minimum slant 0 or 1.
void for_each_anchored_compatible_set(int n, int window, size_t size,
                                      const std::function<void(const std::vector<SkewCurve>&)>& visit);

std::vector<FlipResult> neighbors(const PseudoTri& t);

struct TiltingGraph {
    struct Edge {
        int u = 0;
        int v = 0;
        std::string label;
    };
    int n = 2;
    int window = 4;
    std::vector<PseudoTri> nodes;
    std::vector<Edge> edges;
};

TiltingGraph build_graph(int n, int window);

// Applies the steps, checking each against an actual flip; labels are refreshed in place.
PseudoTri replay(const PseudoTri& t, FlipSequence& steps);
FlipSequence reversed(const FlipSequence& steps);

FlipSequence to_fv(const PseudoTri& t);
FlipSequence fv_to_canonical(const PseudoTri& t);
FlipSequence flip_path(const PseudoTri& from, const PseudoTri& to);

std::string export_dot(const TiltingGraph& g);
std::string export_csv(const TiltingGraph& g);

} // namespace skewtilt
