#include "pairrank/llsm.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pairrank/errors.hpp"

namespace pairrank {

namespace {

std::string describe_components(const IncompletePairwiseMatrix& m,
                                const std::vector<std::vector<std::size_t>>& components) {
    std::ostringstream out;
    out << "comparison graph is disconnected (" << components.size() << " components):";
    for (const auto& component : components) {
        out << " {";
        for (std::size_t k = 0; k < component.size(); ++k) {
            if (k) out << " ";
            out << m.labels()[component[k]];
        }
        out << "}";
    }
    return out.str();
}

WeightVector from_log_coordinates(const IncompletePairwiseMatrix& m, const Eigen::VectorXd& x) {
    const auto n = static_cast<std::size_t>(x.size());

    // shift before exponentiating, then normalize to the sum-1 constraint
    const double shift = x.maxCoeff();
    std::vector<double> weights(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        weights[i] = std::exp(x[static_cast<Eigen::Index>(i)] - shift);
        sum += weights[i];
    }
    for (double& w : weights) w /= sum;

    WeightVector result;
    result.labels = m.labels();
    result.weights = std::move(weights);
    result.objective_value = 0.0;

    // residual of the full normal equations: row i collects the signed
    // deviations of every comparison incident to i
    std::vector<double> row_residual(n, 0.0);
    for (const auto& [key, value] : m.entries()) {
        const double deviation = std::log(value) - (x[static_cast<Eigen::Index>(key.first)] -
                                                    x[static_cast<Eigen::Index>(key.second)]);
        result.objective_value += deviation * deviation;
        row_residual[key.first] -= deviation;
    }
    for (double r : row_residual)
        result.residual_norm = std::max(result.residual_norm, std::fabs(r));
    return result;
}

} // namespace

WeightVector solve_llsm(const IncompletePairwiseMatrix& m) {
    const auto n = m.size();
    if (n == 0) throw std::invalid_argument("matrix has no alternatives");

    const auto components = connected_components(comparison_graph(m));
    if (components.size() != 1) {
        std::vector<std::vector<std::string>> labeled;
        for (const auto& component : components) {
            std::vector<std::string> labels;
            for (std::size_t v : component) labels.push_back(m.labels()[v]);
            labeled.push_back(std::move(labels));
        }
        throw DisconnectedError(describe_components(m, components), std::move(labeled));
    }

    const auto ni = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(ni, ni);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ni);
    for (const auto& [key, value] : m.entries()) {
        const auto i = static_cast<Eigen::Index>(key.first);
        const auto j = static_cast<Eigen::Index>(key.second);
        rhs[i] += std::log(value);
        if (key.first < key.second) {
            laplacian(i, i) += 1.0;
            laplacian(j, j) += 1.0;
            laplacian(i, j) -= 1.0;
            laplacian(j, i) -= 1.0;
        }
    }

    // gauge: pin x_n = 0; the reduced Laplacian of a connected graph is SPD
    Eigen::VectorXd x = Eigen::VectorXd::Zero(ni);
    if (n > 1) {
        const Eigen::Index r = ni - 1;
        Eigen::LDLT<Eigen::MatrixXd> factorization(laplacian.topLeftCorner(r, r));
        if (factorization.info() != Eigen::Success)
            throw std::runtime_error("reduced normal equations are singular despite a connected "
                                     "comparison graph");
        x.head(r) = factorization.solve(rhs.head(r));
    }

    return from_log_coordinates(m, x);
}

WeightVector geometric_mean_weights(const IncompletePairwiseMatrix& m) {
    const auto n = m.size();
    if (n == 0) throw std::invalid_argument("matrix has no alternatives");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!m.known(i, j))
                throw ValidationError("geometric row means need a complete matrix; entry (" +
                                      m.labels()[i] + ", " + m.labels()[j] + ") is unknown");

    // w_i ~ exp(mean_j log a_ij); the implicit diagonal contributes log 1 = 0
    Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    for (const auto& [key, value] : m.entries())
        x[static_cast<Eigen::Index>(key.first)] += std::log(value);
    x /= static_cast<double>(n);

    return from_log_coordinates(m, x);
}

double objective_value(const IncompletePairwiseMatrix& m, const std::vector<double>& weights) {
    if (weights.size() != m.size())
        throw std::invalid_argument("weight vector does not match the matrix dimension");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");

    double total = 0.0;
    for (const auto& [key, value] : m.entries()) {
        const double deviation = std::log(value) - std::log(weights[key.first] / weights[key.second]);
        total += deviation * deviation;
    }
    return total;
}

} // namespace pairrank
