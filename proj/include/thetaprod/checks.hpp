#pragma once

#include <string>
#include <vector>

#include "thetaprod/gram.hpp"
#include "thetaprod/qseries.hpp"

namespace thetaprod {

// The 13 j-invariant values at class-number-one CM points.
const std::vector<Int>& class_number_one_j_values();

struct CheckOutcome {
    std::string name;
    bool pass;
    std::string detail;
};

// Necessary Borcherds-product criterion on Gamma_0(N): a Fricke eigenform
// requires disc(L) = N^{rank/2} and theta_L = theta_{L'(N)}.  Compares
// expansions below q^T and reports the first difference.
CheckOutcome fricke_modular_check(const GramMatrix& G, long N, long T = 40);

struct LeechReport {
    QSeries series;      // E4^3 - 720*delta
    bool matches_product;  // equals delta*(j - 720) below q^T
    bool q1_vanishes;
    Int q2_coefficient;
    bool table_excludes_720;
};

LeechReport leech_identity_check(long T);

// theta of the quaternary trace-form lattice over Q(sqrt(-3)) (discriminant 81)
QSeries quaternary_counterexample_theta(long T);
// theta of the discriminant-25, level-5 rank-4 lattice
QSeries sec64_theta(long T);

// the whole battery with one outcome per claim
std::vector<CheckOutcome> run_all_checks(long T);

}  // namespace thetaprod
