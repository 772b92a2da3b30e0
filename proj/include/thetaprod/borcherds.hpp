#pragma once

#include <map>
#include <optional>
#include <vector>

#include "thetaprod/multipoly.hpp"
#include "thetaprod/qseries.hpp"
#include "thetaprod/quadform.hpp"

namespace thetaprod {

// Integer coordinates (alpha, beta_1..beta_m, gamma) of a dual vector
// lambda = (alpha/4, beta/2, gamma/4) in K' for K = U(4) + m A1(-1).
struct KPrimeVector {
    long alpha = 0;
    std::array<long, 3> beta{0, 0, 0};
    long gamma = 0;
    int m = 1;

    // Q(lambda) = (alpha*gamma - |beta|^2)/4
    long norm4() const;  // 4*Q(lambda), an integer
    Rat norm() const { return make_rat(norm4(), 4); }
    int sign() const {  // (-1)^((alpha+1)(gamma+1))
        return (alpha % 2 == 0 && gamma % 2 == 0) ? -1 : 1;
    }
    // (lambda, A) = alpha*c + gamma*a + sum beta_i b_i
    long pair_with(const QuadForm& A) const;
};

// Class of a K'-vector in K'/K: (alpha mod 4, beta mod 2, gamma mod 4).
struct KPrimeClass {
    int m = 1;
    int alpha4 = 0;
    int gamma4 = 0;
    int beta_odd_mask = 0;  // bit i set when beta_i is odd

    static KPrimeClass of(const KPrimeVector& v);
    int sign() const { return (alpha4 % 2 == 0 && gamma4 % 2 == 0) ? -1 : 1; }
    bool in_two_dual() const;  // lies in 2(K'/K): alpha, gamma even, beta even
    bool is_zero() const { return alpha4 == 0 && gamma4 == 0 && beta_odd_mask == 0; }
    bool is_mu() const {  // alpha = gamma = 2 mod 4, all beta odd
        return alpha4 == 2 && gamma4 == 2 && beta_odd_mask == (1 << m) - 1;
    }
    Rat norm_mod1() const;  // Q(lambda) mod 1 as a representative in [0,1)
    int index() const { return alpha4 + 4 * gamma4 + 16 * beta_odd_mask; }
};

// Precomputed Fourier coefficients of f^m = (1/theta)^m and
// h^m = (eta(2 tau)/eta(4 tau)^2)^m for the weight -m/2 input 2^{m-1}/theta^m.
class FmTables {
public:
    // coefficients of f^m available up to exponent 4*max_arg (inclusive)
    FmTables(int m, long max_arg);

    int m() const { return m_; }
    // c_{F_m}(lambda, n): requires n = Q(lambda) mod 1
    Int coefficient(const KPrimeClass& cls, const Rat& n) const;

    Int fm_at(long k) const;       // coefficient of q^k in f^m
    Int hm_at(const Rat& e) const; // coefficient of q^e in h^m

private:
    int m_;
    long max4_;
    std::vector<Int> fm_;  // f^m[0..max4_]
    QSeries hm_;
};

// 2^{m-1} * (1/theta)^m
QSeries inv_theta_power(int m, long T);

// Product exponents d_A(n) for theta_A = prod ((1+q^n)/(1-q^n))^{d_A(n)}:
//   d_A(n) = sum over alpha*a + beta.b + gamma*c = n, alpha*gamma >= |beta|^2
//            of sign * c_{2^{m-1}/theta^m}(alpha*gamma - |beta|^2),
// enumerated inside 0 <= alpha <= 4nc/|D|, 0 <= gamma <= 4na/|D|.
std::vector<Int> exponents_dA_range(const QuadForm& A, long N, bool parallel = true);
std::vector<Int> exponents_dA_range_serial(const QuadForm& A, long N);
Int exponents_dA(const QuadForm& A, long n);

// prod_{n<T} ((1+q^n)/(1-q^n))^{d_A(n)}
QSeries product_plusminus(const QuadForm& A, long T);

// Vector-valued weight-1/2 form F_A = sum_h sum_l c_A(h,l) q^l e_h with
// h mod 2|D| and l in Z + h^2/4|D|; components live on the grid denom 4|D|.
struct VectorValuedSeries {
    long modulus = 0;               // 2|D|
    std::vector<QSeries> components;  // index h = 0..modulus-1
    QSeries scalarized() const;     // sum_h components[h](4|D| tau), grid denom 1

    const QSeries& component(long h) const;
};

// Borcherds input for theta_A via
//   c_A(h, l) = sum_{lambda in K', (lambda,A)=h} c_{F_m}(lambda, l + Q(lambda) - h^2/4|D|);
// components are complete for scalarized exponents < scalar_trunc.
VectorValuedSeries borcherds_input_FA(const QuadForm& A, long scalar_trunc);

// Independent route for the product exponents (Fourier expansion not needed):
//   c_A(n, n^2/4|D|) = sum_{(lambda,A)=n} c_{F_m}(lambda, Q(lambda)).
Int lift_exponent_direct(const QuadForm& A, const FmTables& tables, long n);

// q^weyl * prod_{n>=1} (1 - q^n)^{e(n)} with e(n) = c(n^2), halved to
// c(n^2)/2 when the halving modulus does not divide n.
QSeries borcherds_lift_weight_half(const std::map<long, Int>& c, const Rat& weyl,
                                   std::optional<long> halving_modulus, long T);

// 1 + 4 sum_n d_A(n) q^n/(1-q^n) with
// d_A(n) = sum_{alpha a + beta b + gamma c = n} chi(gcd) c_theta(alpha gamma - beta^2),
// chi the nontrivial character mod 4; equals theta_A^2.
QSeries lambert_square(const QuadForm& A, long T);

// Automorphic product on O(2,m+2) truncated by grading alpha+gamma <= 2B:
// prod over alpha+gamma>0 of ((1 + sgn q^(a/2) r^b s^(g/2))/(1 - ...))^{c(ag-|b|^2)}.
MultiPoly psi_m_truncated(int m, int B);

// Theta constant sum over pairs of O_m (Z, Z[i], Z[i,j,k]), monomial
// q^(|lambda|^2/2) prod_i r_i^{Re(lambda e_i conj(mu))} s^(|mu|^2/2);
// for m=3 the k-component of z is restricted to 0.
MultiPoly theta_constant_m_truncated(int m, int B);

}  // namespace thetaprod
