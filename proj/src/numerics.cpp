#include "absphase/numerics.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include <gsl/gsl_integration.h>

namespace absphase {

void gauss_legendre_rule(double a, double b, int n_points,
                         std::vector<double>& nodes, std::vector<double>& weights) {
    if (n_points < 2)
        throw std::invalid_argument("gauss_legendre_rule: need at least 2 points, got " +
                                    std::to_string(n_points));

    using Table = gsl_integration_glfixed_table;
    const std::unique_ptr<Table, decltype(&gsl_integration_glfixed_table_free)> table(
        gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n_points)),
        &gsl_integration_glfixed_table_free);
    if (!table)
        throw std::runtime_error("gauss_legendre_rule: table allocation failed");

    nodes.resize(static_cast<std::size_t>(n_points));
    weights.resize(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i)
        gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i),
                                      &nodes[static_cast<std::size_t>(i)],
                                      &weights[static_cast<std::size_t>(i)], table.get());
}

PhaseGrid gauss_legendre_grid(int n_points) {
    PhaseGrid grid;
    gauss_legendre_rule(0.0, std::numbers::pi, n_points, grid.nodes, grid.weights);
    grid.scheme = "gauss-legendre-" + std::to_string(n_points);
    return grid;
}

namespace {

template <typename T>
T weighted_sum(std::span<const T> samples, const PhaseGrid& grid) {
    if (samples.size() != grid.size())
        throw std::invalid_argument("integrate: " + std::to_string(samples.size()) +
                                    " samples on a grid of " + std::to_string(grid.size()) +
                                    " nodes");
    T acc{};
    for (std::size_t k = 0; k < samples.size(); ++k)
        acc += grid.weights[k] * samples[k];
    return acc;
}

}  // namespace

Complex integrate(std::span<const Complex> samples, const PhaseGrid& grid) {
    return weighted_sum(samples, grid);
}

double integrate(std::span<const double> samples, const PhaseGrid& grid) {
    return weighted_sum(samples, grid);
}

double hermiticity_defect(const ComplexMatrix& m) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i; j < m.cols(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

bool all_finite(const ComplexMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                return false;
    return true;
}

}  // namespace absphase
