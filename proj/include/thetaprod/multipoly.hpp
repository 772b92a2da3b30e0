#pragma once

#include <array>
#include <map>
#include <string>

#include "thetaprod/numbers.hpp"

namespace thetaprod {

// Monomial q^(a/2) r1^b1 ... rm^bm s^(g/2); a and g store the doubled
// exponents, grading = a + g.
struct Monomial {
    int a = 0;
    int g = 0;
    std::array<int, 3> b{0, 0, 0};

    auto operator<=>(const Monomial&) const = default;
    int grading() const { return a + g; }
};

// Exact multivariate Laurent polynomial truncated by grading: every stored
// monomial satisfies grading <= bound.
class MultiPoly {
public:
    MultiPoly(int m, int grading_bound) : m_(m), bound_(grading_bound) {}

    int m() const { return m_; }
    int grading_bound() const { return bound_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    void add(const Monomial& mono, const Int& coeff);
    Int coeff(const Monomial& mono) const;

    // multiply in place by sum_k coeffs[k] * base^k (base a single monomial)
    void mul_monomial_poly(const Monomial& base, const std::vector<Int>& coeffs);

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    std::string to_string() const;

private:
    int m_;
    int bound_;
    std::map<Monomial, Int> terms_;
};

}  // namespace thetaprod
