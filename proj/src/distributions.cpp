#include "absphase/distributions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace absphase {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

PhaseDistribution number_state_phase_distribution(int n, const PhaseGrid& grid) {
    if (n < 0)
        throw std::invalid_argument("number_state_phase_distribution: n must be >= 0, got " +
                                    std::to_string(n));
    PhaseDistribution dist;
    dist.grid = grid;
    dist.density.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double phi = grid.nodes[k];
        dist.density[k] = (n == 0) ? 1.0 / kPi : (1.0 + std::cos(2.0 * n * phi)) / kPi;
    }
    dist.source = DistributionSource::ClosedForm;
    dist.source_detail = "n=" + std::to_string(n);
    return dist;
}

double phase_moment(int n, int m, const PhaseGrid& grid) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("phase_moment: n and m must be >= 0");
    const PhaseDistribution dist = number_state_phase_distribution(n, grid);
    std::vector<double> samples(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        samples[k] = dist.density[k] * std::pow(grid.nodes[k], m);
    return integrate(std::span<const double>(samples), grid);
}

double classical_moment(int m) {
    if (m < 0)
        throw std::invalid_argument("classical_moment: m must be >= 0");
    return std::pow(kPi, m) / (m + 1.0);
}

double phase_variance(int n) {
    if (n < 0)
        throw std::invalid_argument("phase_variance: n must be >= 0");
    const double base = kPi * kPi / 12.0;
    return (n == 0) ? base : base + 0.5 / (static_cast<double>(n) * n);
}

PhaseDistribution state_phase_distribution(const FockVector& state, const PhaseGrid& grid) {
    if (!state.normalizable())
        throw std::invalid_argument("state_phase_distribution: state is not normalizable "
                                    "(delta-normalized phase state)");
    const auto dim = static_cast<int>(state.dim());
    PhaseDistribution dist;
    dist.grid = grid;
    dist.density.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        Complex amplitude{0.0, 0.0};
        for (int n = 0; n < dim; ++n)
            amplitude += state.coeffs[n] * number_eigenfunction(n, grid.nodes[k]);
        dist.density[k] = std::norm(amplitude);
    }
    dist.source = DistributionSource::FromState;
    dist.source_detail = "dim=" + std::to_string(dim);
    return dist;
}

}  // namespace absphase
