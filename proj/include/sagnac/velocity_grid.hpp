#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace sagnac {

/// Discrete velocity classes of a thermal sample: nodes v_i with probability
/// weights w_i representing a zero-mean Gaussian.
struct VelocityGrid {
    std::vector<double> nodes;   ///< [m/s]
    std::vector<double> weights; ///< dimensionless, sum to 1
};

/// Gauss-Hermite quadrature for a Gaussian with <v^2> = temperature_ratio *
/// v_rec^2 (Golub-Welsch: eigen-decomposition of the Jacobi matrix). The
/// rule integrates polynomial moments up to degree 2*order - 1 exactly, so
/// the mean, the variance and every moment entering the thermal absorption
/// average are reproduced at quadrature precision. Nodes are symmetrized in
/// +-pairs so the odd moments vanish identically.
inline VelocityGrid velocity_grid(double temperature_ratio, double v_rec, int order) {
    if (order < 1)
        throw std::invalid_argument("velocity_grid: order must be >= 1");
    if (temperature_ratio < 0.0)
        throw std::invalid_argument("velocity_grid: temperature_ratio must be >= 0");
    if (temperature_ratio == 0.0 || v_rec == 0.0)
        return VelocityGrid{{0.0}, {1.0}};

    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
    for (int i = 1; i < order; ++i)
        jacobi(i, i - 1) = jacobi(i - 1, i) = std::sqrt(0.5 * i);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("velocity_grid: Jacobi eigensolve failed");

    // weights w_i = (first eigenvector component)^2 already sum to 1 because
    // the eigenvector matrix is orthogonal
    const double sigma = v_rec * std::sqrt(temperature_ratio);
    std::vector<double> nodes(order), weights(order);
    for (int i = 0; i < order; ++i) {
        nodes[i] = std::sqrt(2.0) * sigma * solver.eigenvalues()(i);
        const double v0 = solver.eigenvectors()(0, i);
        weights[i] = v0 * v0;
    }

    // enforce exact +- symmetry against eigensolver rounding
    for (int i = 0, j = order - 1; i < j; ++i, --j) {
        const double node = 0.5 * (nodes[j] - nodes[i]);
        nodes[j] = node;
        nodes[i] = -node;
        const double w = 0.5 * (weights[i] + weights[j]);
        weights[i] = weights[j] = w;
    }
    if (order % 2 == 1) nodes[order / 2] = 0.0;

    double total = 0.0;
    for (double w : weights) total += w;
    for (double& w : weights) w /= total;
    return VelocityGrid{std::move(nodes), std::move(weights)};
}

} // namespace sagnac
