#pragma once

#include <string>
#include <vector>

#include "thetaprod/qseries.hpp"
#include "thetaprod/quadform.hpp"

namespace thetaprod {

// prod_i eta(scale_i * tau)^{exponent_i}
struct EtaQuotientSpec {
    struct Factor {
        long scale;     // > 0
        long exponent;  // any sign
    };
    std::vector<Factor> factors;

    static EtaQuotientSpec parse(const std::string& text);  // "2,1;4,-2"
    Rat leading_exponent() const;                           // sum scale*exponent/24
};

// theta(tau) = sum_{n in Z} q^{n^2}, known below q^T
QSeries jacobi_theta(long T);

QSeries eta_quotient(const EtaQuotientSpec& spec, long T);

// normalized E2, E4, E6
QSeries eisenstein(int k, long T);

QSeries delta(long T);        // q prod (1-q^n)^24
QSeries j_invariant(long T);  // E4^3 / delta, leading term q^-1

// theta with characteristic for a binary form:
//   sum_{m,n} (-1)^(nu1*m + nu2*n) q^{A(m + mu1/2, n + mu2/2)}
// (mu, nu) must be an even characteristic (mu.nu even).
QSeries theta_characteristic(const QuadForm& A, std::pair<int, int> mu, std::pair<int, int> nu,
                             long T);

// Series exposed by string id: "theta", "inv_theta", "eta:2,1;4,-2",
// "E2", "E4", "E6", "delta", "j".
QSeries named_series(const std::string& id, long T);
std::vector<std::string> named_series_ids();

}  // namespace thetaprod
