#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace absphase {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Quadrature rule on the phase interval. Nodes are strictly increasing and
/// lie in the open interval (0, pi); weights are positive and sum to pi.
struct PhaseGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::string scheme;

    std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre nodes/weights on an arbitrary interval [a, b].
void gauss_legendre_rule(double a, double b, int n_points,
                         std::vector<double>& nodes, std::vector<double>& weights);

/// Gauss-Legendre rule mapped affinely from [-1, 1] onto [0, pi].
/// Exact for polynomials of degree <= 2*n_points - 1; for the oscillatory
/// integrands used here, n_points >= 8*D keeps D x D matrix elements
/// accurate to better than 1e-12.
/// Throws std::invalid_argument for n_points < 2.
PhaseGrid gauss_legendre_grid(int n_points);

/// Weighted sum over the grid: sum_k weights[k] * samples[k].
/// Throws std::invalid_argument when the sample count does not match the grid.
Complex integrate(std::span<const Complex> samples, const PhaseGrid& grid);
double integrate(std::span<const double> samples, const PhaseGrid& grid);

/// max_{i,j} |M(i,j) - conj(M(j,i))|
double hermiticity_defect(const ComplexMatrix& m);

/// True when no entry is NaN or infinite.
bool all_finite(const ComplexMatrix& m);

}  // namespace absphase
