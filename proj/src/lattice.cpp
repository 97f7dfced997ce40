#include "skewtilt/lattice.hpp"

#include "skewtilt/errors.hpp"
#include "text.hpp"

namespace skewtilt {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

LElement LElement::normalize(int n, long long a1, long long a2, long long a3, long long a) {
    if (n < 2) throw DomainError("weight n must be at least 2");
    long long q1 = floor_div(a1, 2), q2 = floor_div(a2, 2), q3 = floor_div(a3, n);
    return LElement(n, static_cast<int>(a1 - 2 * q1), static_cast<int>(a2 - 2 * q2),
                    static_cast<int>(a3 - n * q3), a + q1 + q2 + q3);
}

void LElement::require_same(const LElement& o) const {
    if (n_ != o.n_) throw DomainError("string group elements with different n");
}

LElement LElement::operator+(const LElement& o) const {
    require_same(o);
    return normalize(n_, l1_ + o.l1_, l2_ + o.l2_, l3_ + o.l3_, l_ + o.l_);
}

LElement LElement::operator-(const LElement& o) const { return *this + (-o); }

LElement LElement::operator-() const { return normalize(n_, -l1_, -l2_, -l3_, -l_); }

LElement LElement::times(long long k) const {
    return normalize(n_, k * l1_, k * l2_, k * l3_, k * l_);
}

bool LElement::in_c_interval() const {
    LElement cc = c(n_);
    return (*this + cc).is_effective() && (cc - *this).is_effective();
}

std::string LElement::to_string() const {
    return detail::format_linear({{"x1", l1_}, {"x2", l2_}, {"x3", l3_}, {"c", l_}},
                                 {"x1", "x2", "x3", "c"}, true);
}

LElement LElement::parse(int n, std::string_view text) {
    auto t = detail::parse_linear(text, "x1,x2,x3,c,w");
    long long w = t["w"];
    return normalize(n, t["x1"] - w, t["x2"] - w, t["x3"] - w, t["c"] + w);
}

} // namespace skewtilt
