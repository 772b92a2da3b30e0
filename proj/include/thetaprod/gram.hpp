#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thetaprod/numbers.hpp"
#include "thetaprod/qseries.hpp"
#include "thetaprod/quadform.hpp"

namespace thetaprod {

// Integral symmetric positive definite Gram matrix.  With even = true the
// quadratic form is Q(x) = x^T G x / 2 (the diagonal must then be even);
// otherwise Q(x) = x^T G x.
struct GramMatrix {
    int rank = 0;
    std::vector<std::vector<long>> g;
    bool even = true;

    GramMatrix() = default;
    GramMatrix(std::vector<std::vector<long>> entries, bool even_flag);

    Int quadratic_value(const std::vector<long>& x) const;
    Int det() const;
    bool positive_definite() const;  // leading principal minors all positive
    // form matrix M with Q(x) = x^T M x, rational when even
    std::vector<std::vector<Rat>> form_matrix() const;
    // smallest N with N*G^-1 integral and even-diagonal
    long level() const;

    void validate() const;  // throws unless symmetric, PD, and diag parity fits
};

// Exact Fincke-Pohst enumeration of a positive definite rational quadratic
// form Q(x) = x^T M x, decomposed as sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2
// with exact rational Cholesky data, so completeness below the bound is
// guaranteed.  Coordinates are fixed from index n-1 down to 0.
class QuadraticEnumerator {
public:
    explicit QuadraticEnumerator(std::vector<std::vector<Rat>> form);

    // all integer x with Q(x + shift) <= bound
    void enumerate(const std::vector<Rat>& shift, const Rat& bound,
                   const std::function<void(const std::vector<long>&, const Rat&)>& visit) const;

    int dim() const { return n_; }

private:
    int n_;
    std::vector<Rat> d_;
    std::vector<std::vector<Rat>> u_;

    friend QSeries theta_series(const GramMatrix& G, long T, bool parallel);
    void descend(int level, std::vector<long>& x, std::vector<Rat>& centers, const Rat& remaining,
                 const Rat& accumulated, const Rat& bound,
                 const std::function<void(const std::vector<long>&, const Rat&)>& visit) const;
};

// Rank-2m Gram matrix of the real quadratic form obtained by splitting the
// hermitian form into real components; m=1 gives ((2a, b), (b, 2c)).
GramMatrix hermitian_to_gram(const QuadForm& A);

// sum over x with Q(x) < T of q^{Q(x)}; complete enumeration below T.
QSeries theta_series(const GramMatrix& G, long T, bool parallel = true);
// independent brute-force box reference (small ranks/T only)
QSeries theta_series_reference(const GramMatrix& G, long T);

// all x with Q(x) <= maxnorm, each exactly once, lexicographic order
std::vector<std::vector<long>> enumerate_vectors(const GramMatrix& G, long maxnorm);

struct DualResult {
    std::optional<GramMatrix> gram;  // N * G^-1 when it is an even integral Gram
    std::string failure;             // set when gram is empty
};

// Gram matrix of the rescaled dual lattice L'(N); typed failure when N*G^-1
// is not integral with even diagonal.
DualResult rescaled_dual(const GramMatrix& G, long N);

// Built-in lattices: "A2", "A4", "D4", "D6", "E6", "E8", "sec6.4", "sec6.2q".
GramMatrix named_lattice(const std::string& name);
std::vector<std::string> named_lattice_names();

}  // namespace thetaprod
