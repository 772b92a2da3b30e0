#include "thetaprod/gram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "thetaprod/parallel.hpp"

namespace thetaprod {

GramMatrix::GramMatrix(std::vector<std::vector<long>> entries, bool even_flag)
    : rank((int)entries.size()), g(std::move(entries)), even(even_flag) {
    validate();
}

void GramMatrix::validate() const {
    if (rank <= 0) throw std::invalid_argument("empty Gram matrix");
    for (int i = 0; i < rank; ++i) {
        if ((int)g[i].size() != rank) throw std::invalid_argument("Gram matrix is not square");
        for (int j = 0; j < rank; ++j)
            if (g[i][j] != g[j][i]) throw std::invalid_argument("Gram matrix is not symmetric");
        if (even && g[i][i] % 2 != 0)
            throw std::invalid_argument("even Gram matrix must have even diagonal");
    }
    if (!positive_definite()) throw std::invalid_argument("Gram matrix is not positive definite");
}

Int GramMatrix::quadratic_value(const std::vector<long>& x) const {
    Int q(0);
    for (int i = 0; i < rank; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < rank; ++j)
            if (x[j] != 0) q += Int(g[i][j]) * x[i] * x[j];
    }
    return even ? q / 2 : q;
}

// fraction-free determinant (Bareiss)
static Int bareiss_det(std::vector<std::vector<Int>> a) {
    int n = (int)a.size();
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return Int(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = t / prev;  // exact by Bareiss
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Int GramMatrix::det() const {
    std::vector<std::vector<Int>> a(rank, std::vector<Int>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) a[i][j] = g[i][j];
    return bareiss_det(std::move(a));
}

bool GramMatrix::positive_definite() const {
    for (int k = 1; k <= rank; ++k) {
        std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) a[i][j] = g[i][j];
        if (bareiss_det(std::move(a)) <= 0) return false;
    }
    return true;
}

std::vector<std::vector<Rat>> GramMatrix::form_matrix() const {
    std::vector<std::vector<Rat>> m(rank, std::vector<Rat>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m[i][j] = even ? make_rat(g[i][j], 2) : Rat(g[i][j]);
    return m;
}

// exact inverse by Gauss-Jordan over the rationals
static std::vector<std::vector<Rat>> rational_inverse(const GramMatrix& G) {
    int n = G.rank;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(G.g[i][j]);
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { p = r; break; }
        if (p < 0) throw std::logic_error("singular Gram matrix");
        std::swap(a[col], a[p]);
        Rat piv = a[col][col];
        for (int j = 0; j < 2 * n; ++j) a[col][j] /= piv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

long GramMatrix::level() const {
    auto inv = rational_inverse(*this);
    Int N(1);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Int den = inv[i][j].get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), N.get_mpz_t(), den.get_mpz_t());
            N = N / g * den;
        }
    // need N * inv to have even diagonal as well
    for (int i = 0; i < rank; ++i) {
        Rat v = Rat(N) * inv[i][i];
        if (!is_integer(v)) throw std::logic_error("level computation inconsistency");
        if (mpz_odd_p(v.get_num_mpz_t())) return 2 * N.get_si();
    }
    if (!N.fits_slong_p()) throw std::overflow_error("level overflow");
    return N.get_si();
}

QuadraticEnumerator::QuadraticEnumerator(std::vector<std::vector<Rat>> form)
    : n_((int)form.size()), d_(n_), u_(n_, std::vector<Rat>(n_, Rat(0))) {
    // Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2
    auto a = std::move(form);
    for (int i = 0; i < n_; ++i) {
        d_[i] = a[i][i];
        if (d_[i] <= 0) throw std::invalid_argument("form is not positive definite");
        for (int j = i + 1; j < n_; ++j) u_[i][j] = a[i][j] / d_[i];
        for (int j = i + 1; j < n_; ++j)
            for (int k = j; k < n_; ++k) a[j][k] -= d_[i] * u_[i][j] * u_[i][k];
        for (int j = i + 1; j < n_; ++j)
            for (int k = i + 1; k < j; ++k) a[j][k] = a[k][j];
    }
}

// integer interval {t : (t + c)^2 * d <= R}, exact endpoints
static void integer_range(const Rat& c, const Rat& d, const Rat& R, long& lo, long& hi) {
    if (R < 0) {
        lo = 0;
        hi = -1;
        return;
    }
    double cd = mpq_get_d(c.get_mpq_t());
    double rd = std::sqrt(std::max(0.0, mpq_get_d(Rat(R / d).get_mpq_t())));
    auto ok = [&](long t) {
        Rat v = (Rat(t) + c);
        return v * v * d <= R;
    };
    lo = (long)std::floor(-cd - rd);
    hi = (long)std::ceil(-cd + rd);
    while (ok(lo - 1)) --lo;
    while (lo <= hi && !ok(lo)) ++lo;
    while (ok(hi + 1)) ++hi;
    while (hi >= lo && !ok(hi)) --hi;
    if (lo > hi) {
        lo = 0;
        hi = -1;
    }
}

void QuadraticEnumerator::descend(
    int level, std::vector<long>& x, std::vector<Rat>& centers, const Rat& remaining,
    const Rat& accumulated, const Rat& bound,
    const std::function<void(const std::vector<long>&, const Rat&)>& visit) const {
    if (level < 0) {
        visit(x, accumulated);
        return;
    }
    long lo, hi;
    integer_range(centers[level], d_[level], remaining, lo, hi);
    for (long t = lo; t <= hi; ++t) {
        x[level] = t;
        Rat z = Rat(t) + centers[level];
        Rat step = d_[level] * z * z;
        if (level == 0) {
            visit(x, accumulated + step);
            continue;
        }
        // fixing x[level] moves the centers of all lower levels
        for (int i = 0; i < level; ++i)
            if (u_[i][level] != 0) centers[i] += u_[i][level] * t;
        descend(level - 1, x, centers, remaining - step, accumulated + step, bound, visit);
        for (int i = 0; i < level; ++i)
            if (u_[i][level] != 0) centers[i] -= u_[i][level] * t;
    }
    x[level] = 0;
}

void QuadraticEnumerator::enumerate(
    const std::vector<Rat>& shift, const Rat& bound,
    const std::function<void(const std::vector<long>&, const Rat&)>& visit) const {
    if ((int)shift.size() != n_) throw std::invalid_argument("shift dimension mismatch");
    // base centers: c_i = s_i + sum_{j>i} u_ij s_j; fixing x_j adds u_ij x_j
    std::vector<Rat> centers(n_);
    for (int i = 0; i < n_; ++i) {
        centers[i] = shift[i];
        for (int j = i + 1; j < n_; ++j)
            if (u_[i][j] != 0) centers[i] += u_[i][j] * shift[j];
    }
    std::vector<long> x(n_, 0);
    descend(n_ - 1, x, centers, bound, Rat(0), bound, visit);
}

GramMatrix hermitian_to_gram(const QuadForm& A) {
    A.validate();
    const int k = A.m == 1 ? 1 : (A.m == 2 ? 2 : 4);
    static const Quaternion basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    Quaternion b = A.b_quaternion();
    int n = 2 * k;
    std::vector<std::vector<long>> g(n, std::vector<long>(n, 0));
    for (int i = 0; i < k; ++i) {
        g[i][i] = 2 * A.a;
        g[k + i][k + i] = 2 * A.c;
    }
    // cross block: coefficient of x_i y_j in tr(x b conj(y)) is 2*Re(e_i b conj(e_j))
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            long v = (basis[i] * b * basis[j].conj()).real();
            g[i][k + j] = v;
            g[k + j][i] = v;
        }
    return GramMatrix(std::move(g), true);
}

QSeries theta_series(const GramMatrix& G, long T, bool parallel) {
    if (T < 1) throw std::invalid_argument("theta series needs T >= 1");
    QuadraticEnumerator enu(G.form_matrix());
    const int n = enu.dim();
    const Rat bound(T - 1);
    // half-space: count x and -x together; the first nonzero coordinate from
    // the top is made positive
    long top_hi = 0;
    {
        long lo;
        integer_range(Rat(0), enu.d_[n - 1], bound, lo, top_hi);
    }
    const int nthreads = parallel ? thread_count() : 1;
    std::vector<std::vector<long long>> hists(top_hi + 1);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (nthreads > 1)
    for (long v = 0; v <= top_hi; ++v) {
        std::vector<long long> hist(T, 0);
        if (n == 1) {
            Rat q = enu.d_[0] * Rat(v) * Rat(v);
            if (q <= bound) hist[rat_floor(q)] += (v == 0) ? 1 : 2;
        } else {
            std::vector<Rat> centers(n, Rat(0));
            for (int i = 0; i < n - 1; ++i) centers[i] = enu.u_[i][n - 1] * v;
            Rat step = enu.d_[n - 1] * Rat(v) * Rat(v);
            std::vector<long> x(n, 0);
            x[n - 1] = v;
            // weight 2 for every vector with some nonzero coordinate; the
            // all-zero prefix branch handles "first nonzero must be > 0"
            std::function<void(int, Rat, Rat, bool)> rec = [&](int level, Rat remaining,
                                                               Rat value, bool zero_prefix) {
                long lo, hi;
                integer_range(centers[level], enu.d_[level], remaining, lo, hi);
                if (zero_prefix && lo < 0) lo = 0;
                for (long t = lo; t <= hi; ++t) {
                    x[level] = t;
                    Rat z = Rat(t) + centers[level];
                    Rat stp = enu.d_[level] * z * z;
                    bool zp = zero_prefix && t == 0;
                    if (level == 0) {
                        Rat q = value + stp;
                        hist[rat_floor(q)] += zp ? 1 : 2;
                        continue;
                    }
                    for (int i = 0; i < level; ++i)
                        if (enu.u_[i][level] != 0) centers[i] += enu.u_[i][level] * t;
                    rec(level - 1, remaining - stp, value + stp, zp);
                    for (int i = 0; i < level; ++i)
                        if (enu.u_[i][level] != 0) centers[i] -= enu.u_[i][level] * t;
                }
                x[level] = 0;
            };
            rec(n - 2, bound - step, step, v == 0);
        }
        hists[v] = std::move(hist);
    }
    std::vector<long long> total(T, 0);
    for (const auto& h : hists)
        for (long k = 0; k < T; ++k) total[k] += h[k];
    std::map<long, Rat> terms;
    for (long k = 0; k < T; ++k)
        if (total[k] != 0) terms[k] = Rat((long)total[k]);
    return QSeries::from_terms(1, T, terms);
}

QSeries theta_series_reference(const GramMatrix& G, long T) {
    // plain box enumeration; Cauchy-Schwarz bound |x_i|^2 <= Q(x) * (G^-1)_ii
    // in the quadratic-form normalization
    auto inv = rational_inverse(G);
    int n = G.rank;
    std::vector<long> bound(n);
    for (int i = 0; i < n; ++i) {
        Rat b = inv[i][i] * (T - 1) * (G.even ? 2 : 1);
        bound[i] = isqrt_floor(rat_floor(b)) + 1;
    }
    std::vector<long long> hist(T, 0);
    std::vector<long> x(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            Int q = G.quadratic_value(x);
            if (q < T) hist[q.get_si()]++;
            return;
        }
        for (long v = -bound[i]; v <= bound[i]; ++v) {
            x[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    std::map<long, Rat> terms;
    for (long k = 0; k < T; ++k)
        if (hist[k] != 0) terms[k] = Rat((long)hist[k]);
    return QSeries::from_terms(1, T, terms);
}

std::vector<std::vector<long>> enumerate_vectors(const GramMatrix& G, long maxnorm) {
    if (maxnorm < 0) return {};
    QuadraticEnumerator enu(G.form_matrix());
    std::vector<std::vector<long>> out;
    std::vector<Rat> shift(G.rank, Rat(0));
    enu.enumerate(shift, Rat(maxnorm), [&](const std::vector<long>& x, const Rat&) {
        out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

DualResult rescaled_dual(const GramMatrix& G, long N) {
    if (N <= 0) return {std::nullopt, "rescale factor must be positive"};
    auto inv = rational_inverse(G);
    int n = G.rank;
    std::vector<std::vector<long>> h(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = Rat(N) * inv[i][j];
            if (!is_integer(v)) return {std::nullopt, "N*G^-1 is not integral"};
            h[i][j] = (long)v.get_num().get_si();
        }
    for (int i = 0; i < n; ++i)
        if (h[i][i] % 2 != 0) return {std::nullopt, "N*G^-1 does not have even diagonal"};
    return {GramMatrix(std::move(h), true), ""};
}

static GramMatrix cartan(const std::vector<std::pair<int, int>>& edges, int n) {
    std::vector<std::vector<long>> g(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = 2;
    for (auto [i, j] : edges) {
        g[i][j] = -1;
        g[j][i] = -1;
    }
    return GramMatrix(std::move(g), true);
}

GramMatrix named_lattice(const std::string& name) {
    if (name == "A2") return cartan({{0, 1}}, 2);
    if (name == "A4") return cartan({{0, 1}, {1, 2}, {2, 3}}, 4);
    if (name == "D4") return cartan({{0, 2}, {1, 2}, {2, 3}}, 4);
    if (name == "D6") return cartan({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}, 6);
    if (name == "E6") return cartan({{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}}, 6);
    if (name == "E8")
        return cartan({{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}}, 8);
    if (name == "sec6.4")
        return GramMatrix({{2, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 4, -1}, {-1, 0, -1, 4}}, true);
    if (name == "sec6.2q")
        // trace form of 2|x|^2 + tr(x conj(y)) + 2|y|^2 over Z[(1+sqrt(-3))/2]
        // in the basis {1, omega} of each variable
        return GramMatrix({{4, 2, 2, 1}, {2, 4, 1, 2}, {2, 1, 4, 2}, {1, 2, 2, 4}}, true);
    throw std::invalid_argument("unknown lattice name: " + name);
}

std::vector<std::string> named_lattice_names() {
    return {"A2", "A4", "D4", "D6", "E6", "E8", "sec6.4", "sec6.2q"};
}

}  // namespace thetaprod
