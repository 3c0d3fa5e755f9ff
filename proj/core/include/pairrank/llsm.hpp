#ifndef PAIRRANK_LLSM_HPP
#define PAIRRANK_LLSM_HPP

#include <string>
#include <vector>

#include "pairrank/matrix.hpp"

namespace pairrank {

/// Normalized priority vector with solver diagnostics. Weights are positive,
/// sum to 1, and are indexed like the matrix the solver consumed.
struct WeightVector {
    std::vector<std::string> labels;
    std::vector<double> weights;
    double objective_value = 0.0; // attained sum of squared log deviations
    double residual_norm = 0.0;   // max-norm residual of the full normal equations
};

/// Minimizes the sum over known entries of [log a_ij - log(w_i/w_j)]^2
/// subject to sum(w) = 1. In log coordinates the first-order conditions are
/// L x = r with L the Laplacian of the comparison graph and
/// r_i = sum_j log a_ij; the gauge is fixed by pinning x_n = 0, the reduced
/// SPD system is solved directly, and the result is exponentiated and
/// normalized. Throws DisconnectedError when the comparison graph has more
/// than one component (the minimizer is not unique there).
WeightVector solve_llsm(const IncompletePairwiseMatrix& m);

/// Closed form for complete matrices: w_i proportional to the geometric mean
/// of row i. Throws ValidationError when any off-diagonal entry is missing.
WeightVector geometric_mean_weights(const IncompletePairwiseMatrix& m);

/// The LLSM objective at an arbitrary positive weight vector: sum over known
/// ordered pairs (i, j) of [log a_ij - log(w_i/w_j)]^2.
double objective_value(const IncompletePairwiseMatrix& m, const std::vector<double>& weights);

} // namespace pairrank

#endif
