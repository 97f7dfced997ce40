#pragma once

#include <string>
#include <string_view>

namespace skewtilt {

// Element of the string group L(2,2,n) = <x1,x2,x3 | 2x1 = 2x2 = n*x3 = c>,
// held in normal form l1*x1 + l2*x2 + l3*x3 + l*c with l1,l2 in {0,1}, 0 <= l3 < n.
class LElement {
public:
    static LElement normalize(int n, long long a1, long long a2, long long a3, long long a);
    static LElement zero(int n) { return normalize(n, 0, 0, 0, 0); }
    static LElement x1(int n) { return normalize(n, 1, 0, 0, 0); }
    static LElement x2(int n) { return normalize(n, 0, 1, 0, 0); }
    static LElement x3(int n) { return normalize(n, 0, 0, 1, 0); }
    static LElement c(int n) { return normalize(n, 0, 0, 0, 1); }
    static LElement omega(int n) { return normalize(n, -1, -1, -1, 1); }

    static LElement parse(int n, std::string_view text);

    int n() const { return n_; }
    int l1() const { return l1_; }
    int l2() const { return l2_; }
    int l3() const { return l3_; }
    long long l() const { return l_; }

    LElement operator+(const LElement& o) const;
    LElement operator-(const LElement& o) const;
    LElement operator-() const;
    LElement times(long long k) const;

    bool operator==(const LElement&) const = default;

    bool is_effective() const { return l_ >= 0; }
    bool in_c_interval() const;
    std::string to_string() const;

private:
    LElement(int n, int l1, int l2, int l3, long long l) : n_(n), l1_(l1), l2_(l2), l3_(l3), l_(l) {}
    void require_same(const LElement& o) const;

    int n_ = 2;
    int l1_ = 0;
    int l2_ = 0;
    int l3_ = 0;
    long long l_ = 0;
};

} // namespace skewtilt
