#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace skewtilt {

enum class CurveKind { Bridge, LowerArc, UpperArc, SemiCircle, LoopPower };

// Homotopy class of a curve on the marked cylinder, given by one lift in the strip.
// Bridge: (a,0) to (b,1). LowerArc/UpperArc: endpoints a < b on the bottom/top boundary.
// SemiCircle: a in {0,1}. LoopPower: a = j.
struct CurveClass {
    CurveKind kind = CurveKind::Bridge;
    int a = 0;
    int b = 0;

    static CurveClass bridge(int bot, int top) { return {CurveKind::Bridge, bot, top}; }
    static CurveClass lower_arc(int p, int q);
    static CurveClass upper_arc(int p, int q);
    static CurveClass semicircle(int which);
    static CurveClass loop_power(int j);

    int bot() const { return a; }
    int top() const { return b; }
    bool is_arc() const { return kind == CurveKind::LowerArc || kind == CurveKind::UpperArc; }

    auto operator<=>(const CurveClass&) const = default;
};

enum class Cross { None = 0, One = 1, Two = 2 };

CurveClass canonicalize(const CurveClass& c, int n);
CurveClass sigma_image(const CurveClass& c);
Cross sigma_fixed_point(const CurveClass& c, int n);
int intersection_number(const CurveClass& c1, const CurveClass& c2, int n);

std::string to_string(const CurveClass& c);
CurveClass parse_curve(std::string_view text);

int mod(long long a, int n);

} // namespace skewtilt
