#include "thetaprod/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "thetaprod/parallel.hpp"

namespace thetaprod {

void QSeries::normalize() {
    if (denom_ <= 0) throw std::invalid_argument("series grid denominator must be positive");
    // drop anything at or beyond the knowledge bound
    if (lead_ + (long)coeffs_.size() > trunc_) {
        long keep = trunc_ - lead_;
        coeffs_.resize(keep > 0 ? keep : 0);
    }
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    std::size_t hi = coeffs_.size();
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    if (lo == hi) {
        coeffs_.clear();
        lead_ = 0;
        return;
    }
    if (lo > 0 || hi < coeffs_.size()) {
        std::vector<Rat> trimmed(coeffs_.begin() + lo, coeffs_.begin() + hi);
        coeffs_.swap(trimmed);
        lead_ += (long)lo;
    }
}

QSeries QSeries::zero(long trunc, long denom) {
    QSeries s;
    s.denom_ = denom;
    s.trunc_ = trunc;
    s.normalize();
    return s;
}

QSeries QSeries::one(long trunc, long denom) { return monomial(Rat(1), 0, trunc, denom); }

QSeries QSeries::monomial(const Rat& coeff, long key, long trunc, long denom) {
    QSeries s;
    s.denom_ = denom;
    s.trunc_ = trunc;
    s.lead_ = key;
    s.coeffs_ = {coeff};
    s.normalize();
    return s;
}

QSeries QSeries::from_terms(long denom, long trunc, const std::map<long, Rat>& terms) {
    QSeries s;
    s.denom_ = denom;
    s.trunc_ = trunc;
    if (!terms.empty()) {
        s.lead_ = terms.begin()->first;
        long last = terms.rbegin()->first;
        s.coeffs_.assign(last - s.lead_ + 1, Rat(0));
        for (const auto& [k, c] : terms) s.coeffs_[k - s.lead_] = c;
    }
    s.normalize();
    return s;
}

Rat QSeries::coeff_key(long k) const {
    if (coeffs_.empty() || k < lead_ || k >= lead_ + (long)coeffs_.size()) return Rat(0);
    return coeffs_[k - lead_];
}

Rat QSeries::coeff_at(const Rat& exponent) const {
    Rat scaled = exponent * denom_;
    if (!is_integer(scaled)) return Rat(0);
    Int k = scaled.get_num();
    if (!k.fits_slong_p()) return Rat(0);
    return coeff_key(k.get_si());
}

std::vector<std::pair<long, Rat>> QSeries::nonzero_terms() const {
    std::vector<std::pair<long, Rat>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(lead_ + (long)i, coeffs_[i]);
    return out;
}

std::size_t QSeries::term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

QSeries QSeries::rescaled(long new_denom) const {
    if (new_denom == denom_) return *this;
    if (new_denom <= 0 || new_denom % denom_ != 0)
        throw std::invalid_argument("rescale target must be a positive multiple of the grid");
    long f = new_denom / denom_;
    QSeries s;
    s.denom_ = new_denom;
    s.trunc_ = trunc_ * f;
    s.lead_ = lead_ * f;
    if (!coeffs_.empty()) {
        s.coeffs_.assign((coeffs_.size() - 1) * f + 1, Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i * f] = coeffs_[i];
    }
    s.normalize();
    return s;
}

QSeries QSeries::reduced_grid() const {
    long g = denom_;
    for (std::size_t i = 0; i < coeffs_.size() && g > 1; ++i)
        if (coeffs_[i] != 0) g = std::gcd(g, lead_ + (long)i);
    g = std::abs(g);
    if (g <= 1) return *this;
    QSeries s;
    s.denom_ = denom_ / g;
    // knowledge below trunc_/denom_ maps to keys k' with k'*g < trunc_
    s.trunc_ = (trunc_ >= 0) ? (trunc_ + g - 1) / g : -((-trunc_) / g);
    s.lead_ = 0;
    std::map<long, Rat> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) terms[(lead_ + (long)i) / g] = coeffs_[i];
    QSeries out = from_terms(s.denom_, s.trunc_, terms);
    return out;
}

QSeries QSeries::truncated(long new_trunc_key) const {
    QSeries s = *this;
    if (new_trunc_key < s.trunc_) s.trunc_ = new_trunc_key;
    s.normalize();
    return s;
}

QSeries QSeries::truncated_exponent(const Rat& bound) const {
    // largest key with key/denom < bound is ceil(bound*denom) - 1 when exact
    Rat scaled = bound * denom_;
    return truncated(rat_ceil(scaled));
}

QSeries QSeries::shifted(const Rat& coeff, const Rat& shift) const {
    long sden = (long)shift.get_den().get_si();
    long nd = lcm_long(denom_, sden);
    QSeries s = rescaled(nd);
    long dk = (long)(shift.get_num().get_si() * (nd / sden));
    s.lead_ += dk;
    s.trunc_ += dk;
    if (coeff != 1)
        for (auto& c : s.coeffs_) c *= coeff;
    s.normalize();
    return s;
}

QSeries QSeries::scaled_exponents(const Rat& factor) const {
    if (factor <= 0) throw std::invalid_argument("exponent scale factor must be positive");
    long fn = (long)factor.get_num().get_si();
    long fd = (long)factor.get_den().get_si();
    QSeries s;
    s.denom_ = denom_ * fd;
    long g = std::gcd(s.denom_, fn);
    // key k -> exponent k*fn/(denom*fd); use grid denom*fd/g with key k*fn/g
    s.denom_ /= g;
    long mult = fn / g;
    s.trunc_ = trunc_ * mult;
    std::map<long, Rat> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) terms[(lead_ + (long)i) * mult] = coeffs_[i];
    return from_terms(s.denom_, s.trunc_, terms).reduced_grid();
}

void collect_common(const QSeries& a, const QSeries& b, QSeries& ra, QSeries& rb) {
    long nd = lcm_long(a.denom_, b.denom_);
    ra = a.rescaled(nd);
    rb = b.rescaled(nd);
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries x, y;
    collect_common(a, b, x, y);
    long t = std::min(x.trunc_, y.trunc_);
    if (x.coeffs_.empty()) return y.truncated(t);
    if (y.coeffs_.empty()) return x.truncated(t);
    QSeries s;
    s.denom_ = x.denom();
    s.trunc_ = t;
    long lo = std::min(x.lead_, y.lead_);
    long hi = std::max(x.lead_ + (long)x.coeffs_.size(), y.lead_ + (long)y.coeffs_.size());
    s.lead_ = lo;
    s.coeffs_.assign(hi - lo, Rat(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) s.coeffs_[x.lead_ + (long)i - lo] = x.coeffs_[i];
    for (std::size_t i = 0; i < y.coeffs_.size(); ++i) s.coeffs_[y.lead_ + (long)i - lo] += y.coeffs_[i];
    s.normalize();
    return s;
}

QSeries operator-(const QSeries& a) {
    QSeries s = a;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const Rat& c, const QSeries& a) {
    if (c == 0) return QSeries::zero(a.trunc_key(), a.denom());
    QSeries s = a;
    for (auto& v : s.coeffs_) v *= c;
    return s;
}

// Knowledge bound of a product: errors of a enter at exponents >= trunc_a and
// get shifted by the lead of b (and vice versa), so the result is correct
// below min(ta+lb, tb+la).  Mixing truncs otherwise takes the plain minimum;
// the lead terms only ever narrow it (negative leads), never extend it.
static long product_trunc(const QSeries& a, const QSeries& b) {
    long ta = a.trunc_key(), tb = b.trunc_key();
    long la = a.lead_key(), lb = b.lead_key();
    return std::min(std::min(ta, tb), std::min(ta + lb, tb + la));
}

QSeries mul_impl(const QSeries& a, const QSeries& b, bool parallel) {
    QSeries x, y;
    collect_common(a, b, x, y);
    QSeries s;
    s.denom_ = x.denom_;
    s.trunc_ = product_trunc(x, y);
    if (x.coeffs_.empty() || y.coeffs_.empty()) {
        s.normalize();
        return s;
    }
    long lc = x.lead_ + y.lead_;
    long len = s.trunc_ - lc;
    if (len <= 0) {
        s.normalize();
        return s;
    }
    s.lead_ = lc;
    s.coeffs_.assign(len, Rat(0));
    const long na = (long)x.coeffs_.size(), nb = (long)y.coeffs_.size();
    const int nthreads = parallel ? thread_count() : 1;
#pragma omp parallel for schedule(static) num_threads(nthreads) if (nthreads > 1)
    for (long c = 0; c < len; ++c) {
        // s[c] = sum_i x[i]*y[c-i], both indices relative to their leads
        long ilo = std::max(0L, c - nb + 1), ihi = std::min(na - 1, c);
        Rat acc(0);
        for (long i = ilo; i <= ihi; ++i) {
            if (x.coeffs_[i] != 0 && y.coeffs_[c - i] != 0) acc += x.coeffs_[i] * y.coeffs_[c - i];
        }
        s.coeffs_[c] = acc;
    }
    s.normalize();
    return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) { return mul_impl(a, b, true); }

QSeries mul_serial(const QSeries& a, const QSeries& b) {
    QSeries x, y;
    collect_common(a, b, x, y);
    QSeries s;
    s.denom_ = x.denom_;
    s.trunc_ = product_trunc(x, y);
    if (x.coeffs_.empty() || y.coeffs_.empty()) {
        s.normalize();
        return s;
    }
    long lc = x.lead_ + y.lead_;
    long len = s.trunc_ - lc;
    if (len <= 0) {
        s.normalize();
        return s;
    }
    s.lead_ = lc;
    s.coeffs_.assign(len, Rat(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
            long c = (long)(i + j);
            if (c >= len) break;
            if (y.coeffs_[j] != 0) s.coeffs_[c] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    s.normalize();
    return s;
}

QSeries invert(const QSeries& a) {
    if (a.coeffs_.empty()) throw std::invalid_argument("cannot invert the zero series");
    const Rat& u = a.coeffs_[0];  // nonzero after normalization
    long la = a.lead_;
    long len = a.trunc_ - la;  // length of the unit part we know
    // normalized unit part (nonzero entries only, as (offset, value))
    std::vector<std::pair<long, Rat>> ah;
    for (std::size_t k = 1; k < a.coeffs_.size(); ++k)
        if (a.coeffs_[k] != 0) ah.emplace_back((long)k, a.coeffs_[k] / u);
    std::vector<Rat> bh(len, Rat(0));
    bh[0] = 1;
    for (long n = 1; n < len; ++n) {
        Rat acc(0);
        for (const auto& [k, v] : ah) {
            if (k > n) break;
            if (bh[n - k] != 0) acc += v * bh[n - k];
        }
        bh[n] = -acc;
    }
    QSeries s;
    s.denom_ = a.denom_;
    s.lead_ = -la;
    s.trunc_ = a.trunc_ - 2 * la;
    s.coeffs_.resize(len);
    for (long n = 0; n < len; ++n) s.coeffs_[n] = bh[n] / u;
    s.normalize();
    return s;
}

QSeries pow(const QSeries& a, long e) {
    if (e < 0) return pow(invert(a), -e);
    if (e == 0) return QSeries::one(a.trunc_key(), a.denom());
    QSeries base = a;
    QSeries acc;
    bool have = false;
    while (e > 0) {
        if (e & 1) {
            acc = have ? acc * base : base;
            have = true;
        }
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

namespace detail {

void accumulate_binomial_log(std::vector<Rat>& L, const std::map<long, Int>& exps, int sign,
                             long T, int weight) {
    if ((long)L.size() < T) L.resize(T, Rat(0));
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    for (const auto& [n, e] : exps) {
        if (n < 1 || n >= T || e == 0) continue;
        Int we = e * weight;
        // log(1 + s q^n) = sum_{k>=1} (-1)^(k+1) s^k q^(nk) / k
        int sk = sign;
        for (long k = 1; n * k < T; ++k) {
            Int num = we * sk * ((k % 2 == 1) ? 1 : -1);
            L[n * k] += make_rat(num, Int(k));
            sk *= sign;
        }
    }
}

QSeries exp_from_log(const std::vector<Rat>& L, long T) {
    // E' = L' E  =>  j*E[j] = sum_{k=1..j} k*L[k]*E[j-k]
    std::vector<Rat> E(T, Rat(0));
    E[0] = 1;
    long maxk = 0;
    for (long k = 1; k < T && k < (long)L.size(); ++k)
        if (L[k] != 0) maxk = k;
    for (long j = 1; j < T; ++j) {
        Rat acc(0);
        long khi = std::min(j, maxk);
        for (long k = 1; k <= khi; ++k)
            if (L[k] != 0 && E[j - k] != 0) acc += Rat(k) * L[k] * E[j - k];
        E[j] = acc / j;
    }
    std::map<long, Rat> terms;
    for (long j = 0; j < T; ++j)
        if (E[j] != 0) terms[j] = E[j];
    return QSeries::from_terms(1, T, terms);
}

}  // namespace detail

QSeries pow_binomial_product(const std::map<long, Int>& exps, int sign, long T) {
    std::vector<Rat> L(T, Rat(0));
    detail::accumulate_binomial_log(L, exps, sign, T);
    QSeries s = detail::exp_from_log(L, T);
    for (const auto& [k, c] : s.nonzero_terms()) {
        (void)k;
        if (!is_integer(c))
            throw std::logic_error("binomial product produced a non-integer coefficient");
    }
    return s;
}

QSeries extract_subseries(const QSeries& a, const Rat& j) {
    Rat scaled = j * a.denom();
    if (!is_integer(scaled))
        throw std::invalid_argument("subseries residue is not representable on the grid");
    long r = ((scaled.get_num().get_si() % a.denom()) + a.denom()) % a.denom();
    std::map<long, Rat> terms;
    for (const auto& [k, c] : a.nonzero_terms())
        if (((k % a.denom()) + a.denom()) % a.denom() == r) terms[k] = c;
    return QSeries::from_terms(a.denom(), a.trunc_key(), terms);
}

std::optional<Rat> first_mismatch(const QSeries& a, const QSeries& b) {
    long nd = lcm_long(a.denom(), b.denom());
    QSeries x = a.rescaled(nd), y = b.rescaled(nd);
    long t = std::min(x.trunc_key(), y.trunc_key());
    long lo = std::min(x.lead_key(), y.lead_key());
    for (long k = lo; k < t; ++k)
        if (x.coeff_key(k) != y.coeff_key(k)) return make_rat(k, nd);
    return std::nullopt;
}

NumericEval evaluate_numeric(const QSeries& a, std::complex<double> tau) {
    if (tau.imag() <= 0) throw std::invalid_argument("evaluation point must have positive imaginary part");
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> val(0.0, 0.0);
    double C = 0.0;
    for (const auto& [k, c] : a.nonzero_terms()) {
        double e = (double)k / (double)a.denom();
        std::complex<double> z = std::exp(std::complex<double>(0.0, two_pi * e) * tau);
        double cd = mpq_get_d(c.get_mpq_t());
        val += cd * z;
        if (k >= 1) C = std::max(C, std::abs(cd) / (double)k);
    }
    // tail model |coeff(k)| <= C*k for k >= trunc, ratio x per grid step
    double x = std::exp(-two_pi * tau.imag() / (double)a.denom());
    double tail = 0.0;
    long N = a.trunc_key();
    if (C > 0.0 && N > 0 && x < 1.0) {
        tail = C * std::pow(x, (double)N) * ((double)N * (1.0 - x) + x) / ((1.0 - x) * (1.0 - x));
    }
    return {val, tail};
}

}  // namespace thetaprod
