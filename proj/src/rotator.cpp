#include "absphase/rotator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace absphase {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

AngleGrid angle_grid(int n_points) {
    AngleGrid grid;
    gauss_legendre_rule(-kPi, kPi, n_points, grid.nodes, grid.weights);
    return grid;
}

double rotator_commutator_check(int m) {
    const TruncatedOperator theta = gwg_angle_operator(m);
    const int dim = theta.matrix.rows();
    double worst = 0.0;
    for (int row = 0; row < dim; ++row) {
        for (int col = 0; col < dim; ++col) {
            const int delta = row - col;  // = n - n'
            const Complex lhs = static_cast<double>(delta) * theta.matrix(row, col);
            const double parity = (delta % 2 == 0) ? 1.0 : -1.0;
            const Complex rhs =
                (delta == 0) ? Complex(0.0, 0.0) : Complex(0.0, parity);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

std::vector<double> rotator_angle_distribution(int n, const AngleGrid& grid) {
    std::vector<double> density(grid.size());
    const double amplitude_mag = 1.0 / std::sqrt(2.0 * kPi);
    for (std::size_t k = 0; k < grid.size(); ++k)
        density[k] = std::norm(std::polar(amplitude_mag, -n * grid.nodes[k]));
    return density;
}

PhaseDistribution folded_angle_distribution(int n, const PhaseGrid& grid) {
    if (n < 0)
        throw std::invalid_argument("folded_angle_distribution: n must be >= 0, got " +
                                    std::to_string(n));
    PhaseDistribution dist;
    dist.grid = grid;
    dist.density.resize(grid.size());
    const double plane_wave_mag = 1.0 / std::sqrt(2.0 * kPi);
    // <n|theta>+ = (<n|theta> + <n|-theta>)/sqrt(2); states with n > 0 pick up
    // the same sqrt(2) renormalization the half-interval eigenfunctions carry.
    const double renorm = (n == 0) ? 1.0 : std::numbers::sqrt2;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double theta = grid.nodes[k];
        const Complex folded = (std::polar(plane_wave_mag, static_cast<double>(n) * theta) +
                                std::polar(plane_wave_mag, -static_cast<double>(n) * theta)) /
                               std::numbers::sqrt2;
        dist.density[k] = std::norm(renorm * folded);
    }
    dist.source = DistributionSource::ClosedForm;
    dist.source_detail = "rotator n=" + std::to_string(n);
    return dist;
}

}  // namespace absphase
