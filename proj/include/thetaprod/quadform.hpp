#pragma once

#include <array>
#include <string>
#include <vector>

#include "thetaprod/numbers.hpp"

namespace thetaprod {

// Integer quaternion over the basis 1, i, j, k (i^2 = j^2 = k^2 = ijk = -1).
struct Quaternion {
    std::array<long, 4> c{0, 0, 0, 0};

    Quaternion() = default;
    Quaternion(long x0, long x1, long x2, long x3) : c{x0, x1, x2, x3} {}

    Quaternion conj() const { return {c[0], -c[1], -c[2], -c[3]}; }
    long norm() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }
    long real() const { return c[0]; }
    bool operator==(const Quaternion&) const = default;
};

Quaternion operator*(const Quaternion& x, const Quaternion& y);
Quaternion operator+(const Quaternion& x, const Quaternion& y);

// Positive definite binary quadratic (m=1) or hermitian (m=2 over Z[i],
// m=3 over Z[i,j,k] with b4 = 0) form [a, b, c]:
//   A(x,y) = a|x|^2 + tr(x b conj(y))/2 + c|y|^2,  D = |b|^2 - 4ac < 0.
struct QuadForm {
    int m = 1;
    long a = 1;
    std::array<long, 3> b{0, 0, 0};  // only the first m entries are used
    long c = 1;

    QuadForm() = default;
    QuadForm(long a_, long b_, long c_) : m(1), a(a_), b{b_, 0, 0}, c(c_) { validate(); }
    QuadForm(int m_, long a_, std::array<long, 3> b_, long c_) : m(m_), a(a_), b(b_), c(c_) {
        validate();
    }

    long bnorm() const;          // |b|^2 = sum of the m squared components
    long disc() const;           // D = |b|^2 - 4ac
    long abs_disc() const { return -disc(); }
    Quaternion b_quaternion() const;  // b as a quaternion (b4 = 0)

    // "a,b1,c" / "a,b1,b2,c" / "a,b1,b2,b3,c"
    static QuadForm parse(const std::string& text);
    std::string to_string() const;

    void validate() const;  // throws on invalid m, nonpositive a/c, or D >= 0
};

}  // namespace thetaprod
