#include "thetaprod/borcherds.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "thetaprod/gram.hpp"
#include "thetaprod/modforms.hpp"
#include "thetaprod/parallel.hpp"

namespace thetaprod {

long KPrimeVector::norm4() const {
    long s = alpha * gamma;
    for (int i = 0; i < m; ++i) s -= beta[i] * beta[i];
    return s;
}

long KPrimeVector::pair_with(const QuadForm& A) const {
    if (A.m != m) throw std::invalid_argument("form and vector dimensions differ");
    long s = alpha * A.c + gamma * A.a;
    for (int i = 0; i < m; ++i) s += beta[i] * A.b[i];
    return s;
}

KPrimeClass KPrimeClass::of(const KPrimeVector& v) {
    KPrimeClass c;
    c.m = v.m;
    c.alpha4 = (int)(((v.alpha % 4) + 4) % 4);
    c.gamma4 = (int)(((v.gamma % 4) + 4) % 4);
    c.beta_odd_mask = 0;
    for (int i = 0; i < v.m; ++i)
        if (((v.beta[i] % 2) + 2) % 2 == 1) c.beta_odd_mask |= (1 << i);
    return c;
}

bool KPrimeClass::in_two_dual() const {
    return alpha4 % 2 == 0 && gamma4 % 2 == 0 && beta_odd_mask == 0;
}

Rat KPrimeClass::norm_mod1() const {
    int odd = 0;
    for (int i = 0; i < m; ++i)
        if (beta_odd_mask & (1 << i)) ++odd;
    int r = ((alpha4 * gamma4 - odd) % 4 + 4) % 4;
    return make_rat(r, 4);
}

QSeries inv_theta_power(int m, long T) {
    if (m < 1 || m > 3) throw std::invalid_argument("m must be 1, 2 or 3");
    QSeries f = invert(jacobi_theta(T));
    QSeries p = pow(f, m);
    return Rat(1L << (m - 1)) * p;
}

FmTables::FmTables(int m, long max_arg) : m_(m), max4_(4 * std::max(max_arg, 1L)) {
    QSeries fm = pow(invert(jacobi_theta(max4_ + 1)), m);
    fm_.assign(max4_ + 1, Int(0));
    for (const auto& [k, c] : fm.nonzero_terms()) fm_[k] = c.get_num();
    EtaQuotientSpec spec;
    spec.factors = {{2, 1}, {4, -2}};
    hm_ = pow(eta_quotient(spec, max_arg + 3), m);
}

Int FmTables::fm_at(long k) const {
    if (k < 0) return Int(0);
    if (k > max4_) throw std::logic_error("f^m table too small");
    return fm_[k];
}

Int FmTables::hm_at(const Rat& e) const {
    if (e >= hm_.trunc_exponent()) throw std::logic_error("h^m table too small");
    Rat c = hm_.coeff_at(e);
    return c.get_num();
}

Int FmTables::coefficient(const KPrimeClass& cls, const Rat& n) const {
    if (cls.m != m_) throw std::invalid_argument("class dimension mismatch");
    if (!is_integer(n - cls.norm_mod1()))
        throw std::invalid_argument("exponent off the class grid");
    Int v(0);
    // -sgn(lambda) 2^m g^m_{Q} [n], with g^m[n] = f^m[4n]
    Rat n4 = 4 * n;
    v -= Int(cls.sign()) * Int(1L << m_) * fm_at(is_integer(n4) ? n4.get_num().get_si() : -1);
    if (cls.in_two_dual() && is_integer(n)) {
        int sigma = cls.is_zero() ? -1 : 1;
        v += Int(sigma) * Int(1L << (m_ - 1)) * fm_at(n.get_num().get_si());
    }
    if (cls.is_mu()) v += hm_at(n);
    return v;
}

// --- product exponents -----------------------------------------------------

// Sum over integer beta with sum beta_i b_i = rhs and |beta|^2 <= cap of
// weight * table[cap_total - |beta|^2]; the last nonzero b-component is
// solved from the linear constraint, the others are scanned over the ball.
static void accumulate_beta_sum(const QuadForm& A, long alpha, long gamma, long rhs,
                                const std::vector<Int>& table, int weight, Int& acc) {
    const long cap = alpha * gamma;
    int pivot = -1;
    for (int i = 0; i < A.m; ++i)
        if (A.b[i] != 0) pivot = i;
    std::array<long, 3> beta{0, 0, 0};
    std::function<void(int, long, long)> walk = [&](int i, long rem_rhs, long rem_cap) {
        if (i == A.m) {
            if (rem_rhs == 0) {
                if (weight > 0)
                    acc += table[rem_cap];
                else
                    acc -= table[rem_cap];
            }
            return;
        }
        if (i == pivot) {
            if (A.b[i] == 0) return;  // unreachable
            if (rem_rhs % A.b[i] != 0) return;
            long bi = rem_rhs / A.b[i];
            if (bi * bi > rem_cap) return;
            beta[i] = bi;
            walk(i + 1, 0, rem_cap - bi * bi);
            return;
        }
        long r = isqrt_floor(rem_cap);
        for (long bi = -r; bi <= r; ++bi) {
            beta[i] = bi;
            walk(i + 1, rem_rhs - bi * A.b[i], rem_cap - bi * bi);
        }
    };
    walk(0, rhs, cap);
}

std::vector<Int> exponents_dA_range(const QuadForm& A, long N, bool parallel) {
    A.validate();
    if (N < 1) return {};
    const long aD = A.abs_disc();
    const long amax = 4 * (N - 1) * A.c / aD;
    const long gmax = 4 * (N - 1) * A.a / aD;
    std::vector<Int> table;
    {
        QSeries s = inv_theta_power(A.m, amax * gmax + 1);
        table.assign(amax * gmax + 1, Int(0));
        for (const auto& [k, c] : s.nonzero_terms()) table[k] = c.get_num();
    }
    std::vector<Int> d(N, Int(0));
    const int nthreads = parallel ? thread_count() : 1;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (nthreads > 1)
    for (long n = 1; n < N; ++n) {
        Int acc(0);
        long ah = 4 * n * A.c / aD, gh = 4 * n * A.a / aD;
        for (long alpha = 0; alpha <= ah; ++alpha)
            for (long gamma = 0; gamma <= gh; ++gamma) {
                long rhs = n - alpha * A.a - gamma * A.c;
                int sgn = (alpha % 2 == 0 && gamma % 2 == 0) ? -1 : 1;
                accumulate_beta_sum(A, alpha, gamma, rhs, table, sgn, acc);
            }
        d[n] = acc;
    }
    return d;
}

std::vector<Int> exponents_dA_range_serial(const QuadForm& A, long N) {
    // independent reference: plain box scan over beta without pivot solving
    A.validate();
    if (N < 1) return {};
    const long aD = A.abs_disc();
    std::vector<Int> table;
    {
        long cap = (4 * (N - 1) * A.c / aD) * (4 * (N - 1) * A.a / aD);
        QSeries s = inv_theta_power(A.m, cap + 1);
        table.assign(cap + 1, Int(0));
        for (const auto& [k, c] : s.nonzero_terms()) table[k] = c.get_num();
    }
    std::vector<Int> d(N, Int(0));
    for (long n = 1; n < N; ++n) {
        long ah = 4 * n * A.c / aD, gh = 4 * n * A.a / aD;
        for (long alpha = 0; alpha <= ah; ++alpha)
            for (long gamma = 0; gamma <= gh; ++gamma) {
                long r = isqrt_floor(alpha * gamma);
                std::array<long, 3> lim{r, A.m >= 2 ? r : 0, A.m >= 3 ? r : 0};
                for (long b1 = -lim[0]; b1 <= lim[0]; ++b1)
                    for (long b2 = -lim[1]; b2 <= lim[1]; ++b2)
                        for (long b3 = -lim[2]; b3 <= lim[2]; ++b3) {
                            long nb = b1 * b1 + b2 * b2 + b3 * b3;
                            if (nb > alpha * gamma) continue;
                            long lin = alpha * A.a + gamma * A.c + b1 * A.b[0] + b2 * A.b[1] +
                                       b3 * A.b[2];
                            if (lin != n) continue;
                            int sgn = (alpha % 2 == 0 && gamma % 2 == 0) ? -1 : 1;
                            if (sgn > 0)
                                d[n] += table[alpha * gamma - nb];
                            else
                                d[n] -= table[alpha * gamma - nb];
                        }
            }
    }
    return d;
}

Int exponents_dA(const QuadForm& A, long n) {
    if (n < 1) throw std::invalid_argument("exponent index must be positive");
    return exponents_dA_range(A, n + 1)[n];
}

QSeries product_plusminus(const QuadForm& A, long T) {
    std::vector<Int> d = exponents_dA_range(A, T);
    std::map<long, Int> exps;
    for (long n = 1; n < T; ++n)
        if (d[n] != 0) exps[n] = d[n];
    std::vector<Rat> L(T, Rat(0));
    detail::accumulate_binomial_log(L, exps, +1, T, +1);
    detail::accumulate_binomial_log(L, exps, -1, T, -1);
    QSeries s = detail::exp_from_log(L, T);
    for (const auto& [k, c] : s.nonzero_terms()) {
        (void)k;
        if (!is_integer(c)) throw std::logic_error("plus/minus product must have integer coefficients");
    }
    return s;
}

// --- Borcherds input F_A ---------------------------------------------------

namespace {

// K'-integer-coordinate bilinear form: (u,v) = (u_a v_g + u_g v_a - 2 u_b.v_b)/4
Rat kprime_bilinear(const std::vector<long>& u, const std::vector<long>& v) {
    int d = (int)u.size();
    long s = u[0] * v[d - 1] + u[d - 1] * v[0];
    for (int i = 1; i + 1 < d; ++i) s -= 2 * u[i] * v[i];
    return make_rat(s, 4);
}

struct PairingLattice {
    long g = 0;                              // gcd of the pairing coefficients
    std::vector<long> particular;            // pairing value g
    std::vector<std::vector<long>> kernel;   // pairing value 0, rank m+1
};

// Integer solutions of alpha*c + sum beta_i b_i + gamma*a = h live on
// particular*(h/g) + Z-span(kernel).
PairingLattice pairing_lattice(const QuadForm& A) {
    int d = A.m + 2;
    std::vector<long> w(d);
    w[0] = A.c;
    for (int i = 0; i < A.m; ++i) w[1 + i] = A.b[i];
    w[d - 1] = A.a;
    // column reduction to (g, 0, ..., 0) with a unimodular transform
    std::vector<std::vector<long>> cols(d, std::vector<long>(d, 0));
    for (int i = 0; i < d; ++i) cols[i][i] = 1;
    long g = w[0];
    for (int i = 1; i < d; ++i) {
        if (w[i] == 0) continue;
        if (g == 0) {
            std::swap(cols[0], cols[i]);
            std::swap(g, w[i]);
            continue;
        }
        long old = g;
        long x, y;
        {
            // extended gcd
            long r0 = old, r1 = w[i], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (r1 != 0) {
                long q = r0 / r1;
                std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
                std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
                std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
            }
            if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
            g = r0;
            x = s0;
            y = t0;
        }
        std::vector<long> c0(d), ci(d);
        for (int r = 0; r < d; ++r) {
            c0[r] = x * cols[0][r] + y * cols[i][r];
            ci[r] = -(w[i] / g) * cols[0][r] + (old / g) * cols[i][r];
        }
        cols[0] = c0;
        cols[i] = ci;
        w[i] = 0;
    }
    PairingLattice out;
    out.g = g;
    out.particular = cols[0];
    for (int i = 1; i < d; ++i) out.kernel.push_back(cols[i]);
    return out;
}

// exact solve of sum_i s_i k_i = rhs for s (consistent overdetermined system)
std::vector<Rat> solve_in_span(const std::vector<std::vector<long>>& kernel,
                               const std::vector<Rat>& rhs) {
    int d = (int)rhs.size(), r = (int)kernel.size();
    std::vector<std::vector<Rat>> a(d, std::vector<Rat>(r + 1, Rat(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < r; ++j) a[i][j] = Rat(kernel[j][i]);
        a[i][r] = rhs[i];
    }
    int row = 0;
    std::vector<int> pivot_col(r, -1);
    for (int col = 0; col < r && row < d; ++col) {
        int p = -1;
        for (int i = row; i < d; ++i)
            if (a[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[row], a[p]);
        Rat piv = a[row][col];
        for (int j = col; j <= r; ++j) a[row][j] /= piv;
        for (int i = 0; i < d; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = col; j <= r; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col[col] = row;
        ++row;
    }
    std::vector<Rat> s(r, Rat(0));
    for (int col = 0; col < r; ++col)
        if (pivot_col[col] >= 0) s[col] = a[pivot_col[col]][r];
    // consistency check
    for (int i = 0; i < d; ++i) {
        Rat acc(0);
        for (int j = 0; j < r; ++j) acc += Rat(kernel[j][i]) * s[j];
        if (acc != rhs[i]) throw std::logic_error("offset not in the kernel span");
    }
    return s;
}

// (class index, 4*Q(lambda)) -> count over lambda in K' with (lambda, A) = h
// and -Q(lambda - (h/2|D|)A) <= cap
std::map<std::pair<int, long>, long> pairing_groups(const QuadForm& A, long h, const Rat& cap) {
    std::map<std::pair<int, long>, long> groups;
    if (cap < 0) return groups;
    PairingLattice pl = pairing_lattice(A);
    if (h % pl.g != 0) return groups;
    int d = A.m + 2;
    const long aD = A.abs_disc();
    std::vector<long> lam0(d);
    for (int i = 0; i < d; ++i) lam0[i] = pl.particular[i] * (h / pl.g);
    // The pairing alpha*c + gamma*a + sum beta_i b_i is the K'-bilinear
    // pairing with the vector (a, -b, c); its K'-integer coordinates:
    std::vector<long> AK(d);
    AK[0] = 4 * A.a;
    for (int i = 0; i < A.m; ++i) AK[1 + i] = -2 * A.b[i];
    AK[d - 1] = 4 * A.c;
    // offset x0 = lam0 - (h/2|D|) A, in the span of the kernel
    std::vector<Rat> x0(d);
    for (int i = 0; i < d; ++i) x0[i] = Rat(lam0[i]) - make_rat(h, 2 * aD) * AK[i];
    std::vector<Rat> shift = solve_in_span(pl.kernel, x0);
    // negated complement form: value(t) = -Q(sum (t_i+s_i) k_i)
    int r = d - 1;
    std::vector<std::vector<Rat>> M(r, std::vector<Rat>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            M[i][j] = -kprime_bilinear(pl.kernel[i], pl.kernel[j]) / 2;
    QuadraticEnumerator enu(M);
    enu.enumerate(shift, cap, [&](const std::vector<long>& t, const Rat&) {
        KPrimeVector lam;
        lam.m = A.m;
        std::vector<long> coords(lam0);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < d; ++i) coords[i] += t[j] * pl.kernel[j][i];
        lam.alpha = coords[0];
        for (int i = 0; i < A.m; ++i) lam.beta[i] = coords[1 + i];
        lam.gamma = coords[d - 1];
        groups[{KPrimeClass::of(lam).index(), lam.norm4()}]++;
    });
    return groups;
}

KPrimeClass class_from_index(int m, int idx) {
    KPrimeClass c;
    c.m = m;
    c.alpha4 = idx % 4;
    c.gamma4 = (idx / 4) % 4;
    c.beta_odd_mask = idx / 16;
    return c;
}

}  // namespace

const QSeries& VectorValuedSeries::component(long h) const {
    long r = ((h % modulus) + modulus) % modulus;
    return components[r];
}

QSeries VectorValuedSeries::scalarized() const {
    // component exponent L contributes at integer exponent (2*modulus)*L
    QSeries acc = components.empty() ? QSeries() : components[0];
    for (std::size_t i = 1; i < components.size(); ++i) acc = acc + components[i];
    return acc.scaled_exponents(Rat(2 * modulus));
}

VectorValuedSeries borcherds_input_FA(const QuadForm& A, long scalar_trunc) {
    A.validate();
    const long aD = A.abs_disc();
    const long grid = 4 * aD;
    const int m = A.m;
    FmTables tables(m, std::max(1L, scalar_trunc / grid + 2));
    VectorValuedSeries F;
    F.modulus = 2 * aD;
    F.components.resize(F.modulus);
    for (long h = 0; h < F.modulus; ++h) {
        long jmax = (scalar_trunc - 1 - h * h);
        jmax = jmax >= 0 ? jmax / grid : -((-jmax + grid - 1) / grid);
        Rat cap = Rat(jmax) + make_rat(h * h, grid) + make_rat(m, 4);
        auto groups = pairing_groups(A, h, cap);
        long n4max = 0;
        for (const auto& [key, cnt] : groups) {
            (void)cnt;
            n4max = std::max(n4max, key.second);
        }
        std::map<long, Rat> terms;
        long jmin = groups.empty() ? 0 : rat_ceil(make_rat(-m - n4max, 4));
        for (long j = jmin; j <= jmax; ++j) {
            Int coef(0);
            for (const auto& [key, cnt] : groups) {
                Rat arg = Rat(j) + make_rat(key.second, 4);
                if (arg < make_rat(-m, 4)) continue;
                coef += Int(cnt) * tables.coefficient(class_from_index(m, key.first), arg);
            }
            if (coef != 0) terms[h * h + grid * j] = Rat(coef);
        }
        F.components[h] = QSeries::from_terms(grid, scalar_trunc, terms);
    }
    return F;
}

Int lift_exponent_direct(const QuadForm& A, const FmTables& tables, long n) {
    const long aD = A.abs_disc();
    Rat cap = make_rat(n * n, 4 * aD) + make_rat(A.m, 4);
    Int s(0);
    for (const auto& [key, cnt] : pairing_groups(A, n, cap)) {
        Rat arg = make_rat(key.second, 4);  // Q(lambda)
        if (arg < make_rat(-A.m, 4)) continue;
        s += Int(cnt) * tables.coefficient(class_from_index(A.m, key.first), arg);
    }
    return s;
}

QSeries borcherds_lift_weight_half(const std::map<long, Int>& c, const Rat& weyl,
                                   std::optional<long> halving_modulus, long T) {
    std::map<long, Int> exps;
    for (long n = 1; n < T; ++n) {
        auto it = c.find(n * n);
        if (it == c.end() || it->second == 0) continue;
        Int e = it->second;
        if (halving_modulus && n % *halving_modulus != 0) {
            if (mpz_odd_p(e.get_mpz_t()))
                throw std::invalid_argument("halved exponent is not an integer");
            e /= 2;
        }
        exps[n] = e;
    }
    QSeries s = pow_binomial_product(exps, -1, T);
    if (weyl != 0) s = s.shifted(Rat(1), weyl);
    return s;
}

QSeries lambert_square(const QuadForm& A, long T) {
    if (A.m != 1) throw std::invalid_argument("Lambert identity needs a binary form");
    A.validate();
    const long aD = A.abs_disc();
    const long a = A.a, b = A.b[0], c = A.c;
    auto chi = [](long g) -> int {  // nontrivial character mod 4 of gcd
        if (g % 2 == 0) return 0;
        return (g % 4 == 1) ? 1 : -1;
    };
    auto c_theta = [](long x) -> int {
        if (x < 0) return 0;
        if (x == 0) return 1;
        long r = isqrt_floor(x);
        return r * r == x ? 2 : 0;
    };
    std::vector<Int> coef(T, Int(0));
    coef[0] = 1;
    for (long n = 1; n < T; ++n) {
        Int dt(0);
        long ah = 4 * n * c / aD, gh = 4 * n * a / aD;
        for (long alpha = 0; alpha <= ah; ++alpha)
            for (long gamma = 0; gamma <= gh; ++gamma) {
                long rhs = n - alpha * a - gamma * c;
                if (b != 0) {
                    if (rhs % b != 0) continue;
                    long beta = rhs / b;
                    if (beta * beta > alpha * gamma) continue;
                    int ct = c_theta(alpha * gamma - beta * beta);
                    if (ct == 0) continue;
                    long g = std::gcd(std::gcd(std::abs(alpha), std::abs(beta)), std::abs(gamma));
                    dt += chi(g) * ct;
                } else {
                    if (rhs != 0) continue;
                    long r = isqrt_floor(alpha * gamma);
                    for (long beta = -r; beta <= r; ++beta) {
                        int ct = c_theta(alpha * gamma - beta * beta);
                        if (ct == 0) continue;
                        long g = std::gcd(std::gcd(std::abs(alpha), std::abs(beta)),
                                          std::abs(gamma));
                        dt += chi(g) * ct;
                    }
                }
            }
        if (dt != 0)
            for (long k = n; k < T; k += n) coef[k] += 4 * dt;
    }
    std::map<long, Rat> terms;
    for (long k = 0; k < T; ++k)
        if (coef[k] != 0) terms[k] = Rat(coef[k]);
    return QSeries::from_terms(1, T, terms);
}

// --- multivariate identities ----------------------------------------------

namespace {

// coefficients of ((1+y)/(1-y))^e up to y^kmax, exact
std::vector<Int> binomial_ratio_power(const Int& e, int kmax) {
    std::vector<Rat> L(kmax + 1, Rat(0)), E(kmax + 1, Rat(0));
    for (int k = 1; k <= kmax; k += 2) L[k] = make_rat(2 * e, Int(k));
    E[0] = 1;
    for (int j = 1; j <= kmax; ++j) {
        Rat acc(0);
        for (int k = 1; k <= j; ++k)
            if (L[k] != 0) acc += Rat(k) * L[k] * E[j - k];
        E[j] = acc / j;
    }
    std::vector<Int> out(kmax + 1);
    for (int j = 0; j <= kmax; ++j) {
        if (!is_integer(E[j])) throw std::logic_error("binomial ratio power not integral");
        out[j] = E[j].get_num();
    }
    return out;
}

}  // namespace

MultiPoly psi_m_truncated(int m, int B) {
    if (m < 1 || m > 3 || B < 1) throw std::invalid_argument("need m in {1,2,3} and B >= 1");
    const int bound = 2 * B;
    std::vector<Int> table;
    {
        QSeries s = inv_theta_power(m, (long)B * B + 1);
        table.assign(B * B + 1, Int(0));
        for (const auto& [k, c] : s.nonzero_terms()) table[k] = c.get_num();
    }
    MultiPoly P(m, bound);
    P.add(Monomial{}, Int(1));
    std::array<long, 3> beta{0, 0, 0};
    for (int alpha = 0; alpha <= bound; ++alpha)
        for (int gamma = (alpha == 0 ? 1 : 0); alpha + gamma <= bound; ++gamma) {
            long cap = (long)alpha * gamma;
            int kmax = bound / (alpha + gamma);
            int sgn = (alpha % 2 == 0 && gamma % 2 == 0) ? -1 : 1;
            // scan beta ball |beta|^2 <= alpha*gamma
            std::function<void(int, long)> scan = [&](int i, long rem) {
                if (i == m) {
                    long arg = rem;  // alpha*gamma - |beta|^2
                    if (table[arg] == 0) return;
                    std::vector<Int> kappa = binomial_ratio_power(table[arg], kmax);
                    // incorporate the sign: coefficient of x^k gets sgn^k
                    if (sgn < 0)
                        for (std::size_t k = 1; k < kappa.size(); k += 2) kappa[k] = -kappa[k];
                    Monomial base;
                    base.a = alpha;
                    base.g = gamma;
                    for (int t = 0; t < m; ++t) base.b[t] = (int)beta[t];
                    P.mul_monomial_poly(base, kappa);
                    return;
                }
                long r = isqrt_floor(rem);
                for (long bi = -r; bi <= r; ++bi) {
                    beta[i] = bi;
                    scan(i + 1, rem - bi * bi);
                }
            };
            scan(0, cap);
        }
    return P;
}

MultiPoly theta_constant_m_truncated(int m, int B) {
    if (m < 1 || m > 3 || B < 1) throw std::invalid_argument("need m in {1,2,3} and B >= 1");
    const int bound = 2 * B;
    const int comps = (m == 1) ? 1 : (m == 2 ? 2 : 4);
    static const Quaternion basis[3] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    // all order elements with norm <= bound
    std::vector<Quaternion> elems;
    {
        long r = isqrt_floor(bound);
        std::array<long, 4> x{0, 0, 0, 0};
        std::function<void(int, long)> gen = [&](int i, long rem) {
            if (i == comps) {
                elems.emplace_back(x[0], x[1], x[2], x[3]);
                return;
            }
            long ri = isqrt_floor(rem);
            for (long v = -ri; v <= ri; ++v) {
                x[i] = v;
                gen(i + 1, rem - v * v);
            }
        };
        (void)r;
        gen(0, bound);
    }
    MultiPoly P(m, bound);
    for (const auto& lam : elems) {
        long nl = lam.norm();
        for (const auto& mu : elems) {
            long nm = mu.norm();
            if (nl + nm > bound) continue;
            Monomial mono;
            mono.a = (int)nl;
            mono.g = (int)nm;
            for (int i = 0; i < m; ++i) mono.b[i] = (int)(lam * basis[i] * mu.conj()).real();
            P.add(mono, Int(1));
        }
    }
    return P;
}

}  // namespace thetaprod
