#include "thetaprod/modforms.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace thetaprod {

QSeries jacobi_theta(long T) {
    if (T < 1) throw std::invalid_argument("theta needs T >= 1");
    std::map<long, Rat> terms;
    terms[0] = 1;
    for (long n = 1; n * n < T; ++n) terms[n * n] = 2;
    return QSeries::from_terms(1, T, terms);
}

EtaQuotientSpec EtaQuotientSpec::parse(const std::string& text) {
    EtaQuotientSpec spec;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        auto comma = tok.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("eta factor needs scale,exponent: " + text);
        long s = std::stol(tok.substr(0, comma));
        long e = std::stol(tok.substr(comma + 1));
        if (s <= 0) throw std::invalid_argument("eta scale must be positive");
        spec.factors.push_back({s, e});
    }
    if (spec.factors.empty()) throw std::invalid_argument("empty eta quotient spec");
    return spec;
}

Rat EtaQuotientSpec::leading_exponent() const {
    Rat lead(0);
    for (const auto& f : factors) lead += make_rat(f.scale * f.exponent, 24);
    return lead;
}

QSeries eta_quotient(const EtaQuotientSpec& spec, long T) {
    if (spec.factors.empty()) throw std::invalid_argument("empty eta quotient spec");
    Rat lead = spec.leading_exponent();
    if (Rat(T) <= lead) throw std::invalid_argument("T must exceed the leading exponent");
    // the product part prod_n (1-q^n)^{e(n)} with e(n) = sum of exponents of
    // factors whose scale divides n
    long Tprod = T - rat_floor(lead) + 1;
    std::map<long, Int> exps;
    for (const auto& f : spec.factors)
        for (long n = f.scale; n < Tprod; n += f.scale) exps[n] += f.exponent;
    QSeries prod = pow_binomial_product(exps, -1, Tprod);
    return prod.shifted(Rat(1), lead).truncated_exponent(Rat(T)).reduced_grid();
}

QSeries eisenstein(int k, long T) {
    if (T < 1) throw std::invalid_argument("eisenstein needs T >= 1");
    long factor;
    int power;
    switch (k) {
        case 2: factor = -24; power = 1; break;
        case 4: factor = 240; power = 3; break;
        case 6: factor = -504; power = 5; break;
        default: throw std::invalid_argument("eisenstein weight must be 2, 4 or 6");
    }
    // sigma_{k-1} by sieving over divisors
    std::vector<Int> sigma(T, 0);
    for (long d = 1; d < T; ++d) {
        Int dp(d);
        for (int i = 1; i < power; ++i) dp *= d;
        for (long n = d; n < T; n += d) sigma[n] += dp;
    }
    std::map<long, Rat> terms;
    terms[0] = 1;
    for (long n = 1; n < T; ++n)
        if (sigma[n] != 0) terms[n] = Rat(factor) * Rat(sigma[n]);
    return QSeries::from_terms(1, T, terms);
}

QSeries delta(long T) {
    if (T < 2) throw std::invalid_argument("delta needs T >= 2");
    std::map<long, Int> exps;
    for (long n = 1; n < T; ++n) exps[n] = 24;
    return pow_binomial_product(exps, -1, T).shifted(Rat(1), Rat(1)).truncated(T);
}

QSeries j_invariant(long T) {
    if (T < 2) throw std::invalid_argument("j needs T >= 2");
    long Ti = T + 2;  // invert(delta) loses two keys from the q^1 lead
    QSeries e4 = eisenstein(4, Ti);
    QSeries j = pow(e4, 3) * invert(delta(Ti));
    return j.truncated(T);
}

QSeries theta_characteristic(const QuadForm& A, std::pair<int, int> mu, std::pair<int, int> nu,
                             long T) {
    if (A.m != 1) throw std::invalid_argument("theta characteristic needs a binary form");
    auto bit = [](int v) { return ((v % 2) + 2) % 2; };
    int m1 = bit(mu.first), m2 = bit(mu.second), n1 = bit(nu.first), n2 = bit(nu.second);
    if ((m1 * n1 + m2 * n2) % 2 != 0)
        throw std::invalid_argument("characteristic must be even (mu.nu even)");
    const long a = A.a, b = A.b[0], c = A.c, aD = A.abs_disc();
    // 4*A(x,y) = a u^2 + b u v + c v^2 with u = 2x, v = 2y; A < T bounds
    // u^2 <= 16 c T/|D|, v^2 <= 16 a T/|D|
    long ubound = isqrt_floor(16 * c * T / aD) + 2;
    long vbound = isqrt_floor(16 * a * T / aD) + 2;
    std::map<long, Rat> terms;
    for (long x = -(ubound / 2 + 1); x <= ubound / 2 + 1; ++x) {
        long u = 2 * x + m1;
        for (long y = -(vbound / 2 + 1); y <= vbound / 2 + 1; ++y) {
            long v = 2 * y + m2;
            long q4 = a * u * u + b * u * v + c * v * v;  // 4*A(x + mu1/2, y + mu2/2)
            if (q4 >= 4 * T) continue;
            int sign = ((n1 * x + n2 * y) % 2 + 2) % 2;
            terms[q4] += sign ? Rat(-1) : Rat(1);
        }
    }
    return QSeries::from_terms(4, 4 * T, terms);
}

QSeries named_series(const std::string& id, long T) {
    if (id == "theta") return jacobi_theta(T);
    if (id == "inv_theta") return invert(jacobi_theta(T));
    if (id == "E2") return eisenstein(2, T);
    if (id == "E4") return eisenstein(4, T);
    if (id == "E6") return eisenstein(6, T);
    if (id == "delta") return delta(T);
    if (id == "j") return j_invariant(T);
    if (id.rfind("eta:", 0) == 0) return eta_quotient(EtaQuotientSpec::parse(id.substr(4)), T);
    throw std::invalid_argument("unknown series id: " + id);
}

std::vector<std::string> named_series_ids() {
    return {"theta", "inv_theta", "eta:<scale,exp;...>", "E2", "E4", "E6", "delta", "j"};
}

}  // namespace thetaprod
