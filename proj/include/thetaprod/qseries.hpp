#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "thetaprod/numbers.hpp"

namespace thetaprod {

// Truncated Laurent series in q^(1/denom) with exact rational coefficients.
//
// A term is addressed by an integer key k and represents coeff * q^(k/denom).
// Coefficients are correct for every grid exponent with key < trunc and
// unspecified beyond; trunc is exclusive and is tracked through every
// operation.  Storage is dense between the first and last nonzero key.
class QSeries {
public:
    QSeries() : denom_(1), lead_(0), trunc_(0) {}

    static QSeries zero(long trunc, long denom = 1);
    static QSeries one(long trunc, long denom = 1);
    // coeff * q^(key/denom), known below trunc
    static QSeries monomial(const Rat& coeff, long key, long trunc, long denom = 1);
    static QSeries from_terms(long denom, long trunc, const std::map<long, Rat>& terms);

    long denom() const { return denom_; }
    long trunc_key() const { return trunc_; }
    Rat trunc_exponent() const { return make_rat(trunc_, denom_); }
    bool is_zero() const { return coeffs_.empty(); }
    // key of the lowest stored nonzero term; trunc_key() for the zero series
    long lead_key() const { return coeffs_.empty() ? trunc_ : lead_; }
    Rat lead_exponent() const { return make_rat(lead_key(), denom_); }

    // coefficient at grid key k (0 when unset; keys >= trunc are out of contract)
    Rat coeff_key(long k) const;
    // coefficient at exact rational exponent (0 when off-grid)
    Rat coeff_at(const Rat& exponent) const;

    // nonzero terms in ascending key order
    std::vector<std::pair<long, Rat>> nonzero_terms() const;
    std::size_t term_count() const;

    QSeries rescaled(long new_denom) const;  // new_denom must be a multiple of denom
    QSeries reduced_grid() const;            // minimal denominator for the stored keys
    QSeries truncated(long new_trunc_key) const;
    QSeries truncated_exponent(const Rat& bound) const;
    // multiply by coeff * q^shift (exact exponent shift; widens the grid as needed)
    QSeries shifted(const Rat& coeff, const Rat& shift) const;
    // substitute tau -> factor*tau, i.e. multiply every exponent by factor > 0
    QSeries scaled_exponents(const Rat& factor) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rat& c, const QSeries& a);

private:
    long denom_;               // exponent grid denominator, > 0
    long lead_;                // key of coeffs_[0]
    long trunc_;               // exclusive knowledge bound, in key units
    std::vector<Rat> coeffs_;  // dense; empty means zero

    void normalize();
    friend QSeries mul_impl(const QSeries&, const QSeries&, bool parallel);
    friend QSeries mul_serial(const QSeries& a, const QSeries& b);
    friend QSeries invert(const QSeries& a);
    friend void collect_common(const QSeries&, const QSeries&, QSeries&, QSeries&);
};

// Schoolbook reference product, kept as the oracle for the parallel kernel.
QSeries mul_serial(const QSeries& a, const QSeries& b);

// Multiplicative inverse: requires a nonzero leading coefficient.  The result
// grid is that of a shifted by the negated leading exponent.
QSeries invert(const QSeries& a);

// a^e by binary powering; negative e through invert().
QSeries pow(const QSeries& a, long e);

// prod_{n>=1} (1 + sign*q^n)^{exps[n]} truncated below q^T (denom 1).
// Evaluated as exp(sum exps[n]*log(1 + sign*q^n)); the result of such a
// product has integer coefficients, which is asserted.
QSeries pow_binomial_product(const std::map<long, Int>& exps, int sign, long T);

// Terms of a whose exponent is congruent to j mod 1; j must lie on a's grid.
QSeries extract_subseries(const QSeries& a, const Rat& j);

// First exponent < min(trunc) where a and b differ, on the common grid.
std::optional<Rat> first_mismatch(const QSeries& a, const QSeries& b);
inline bool agree_to_trunc(const QSeries& a, const QSeries& b) {
    return !first_mismatch(a, b).has_value();
}

struct NumericEval {
    std::complex<double> value;
    double tail_bound;  // estimate for the dropped tail, coeff(k) <= C*k model
};

// Evaluate at tau in the upper half-plane (sum of terms * e^{2 pi i e tau}).
NumericEval evaluate_numeric(const QSeries& a, std::complex<double> tau);

namespace detail {
// Accumulate weight*exps[n]*log(1 + sign*q^n) into log-coefficients L[1..T-1].
void accumulate_binomial_log(std::vector<Rat>& L, const std::map<long, Int>& exps, int sign,
                             long T, int weight = 1);
// exp of a series with zero constant term given by coefficients L[1..T-1].
QSeries exp_from_log(const std::vector<Rat>& L, long T);
}  // namespace detail

}  // namespace thetaprod
