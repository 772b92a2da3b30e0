#pragma once

#include <complex>
#include <vector>

#include "thetaprod/qseries.hpp"
#include "thetaprod/quadform.hpp"

namespace thetaprod {

// Heegner point class Q_{N,d,h}: roots of A t^2 + B t + C with N | A, A > 0,
// B = h mod 2N, B^2 - 4AC = d < 0.
struct CMClass {
    long N;
    long d;
    long h;

    CMClass(long N_, long d_, long h_);  // throws unless d < 0 and h^2 = d mod 4N
    auto operator<=>(const CMClass&) const = default;
};

// one tuple of the root search box
struct RootCandidate {
    long alpha, beta, gamma;
    long h, d;
    bool accepted;  // d < 0
};

struct RootSearchResult {
    std::vector<CMClass> classes;          // deduplicated, sorted by (d, h)
    std::vector<RootCandidate> candidates; // every tuple with 0 <= h < 2|D|
};

// All root classes of theta_A: scan 0 < alpha <= 8c, 0 < gamma <= 8a,
// alpha = gamma = 2 mod 4, beta odd, |beta| < sqrt(alpha*gamma); accept
// h = alpha a + beta b + gamma c in [0, 2|D|) with d = D + D(alpha gamma -
// beta^2) + h^2 negative.
RootSearchResult cm_root_classes(const QuadForm& A);

// exact representative (A, B, C) of a Heegner point, tau = (-B + sqrt(d))/(2A)
struct CMPoint {
    long A, B, C;
    std::complex<double> tau(long d) const;
};

// up to `count` representatives, ordered by (A, |B|, B)
std::vector<CMPoint> cm_representatives(const CMClass& cls, int count);

struct RootEvaluation {
    CMPoint point;
    double abs_value;
    double tail_bound;
    bool pass;
};

struct RootReport {
    CMClass cls;
    double tol;
    long trunc;
    std::vector<RootEvaluation> evaluations;
    bool all_pass;
};

// Evaluate theta_A (truncated below q^T) at representatives of cls and test
// |value| < tol.  Throws when the truncation tail estimate at a
// representative is not below tol/2.
RootReport verify_root(const QuadForm& A, const CMClass& cls, long T, double tol,
                       int reps = 3);
RootReport verify_root(const QSeries& theta, const CMClass& cls, long T, double tol,
                       int reps = 3);

}  // namespace thetaprod
