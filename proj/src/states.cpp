#include "absphase/states.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace absphase {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTailBudget = 1e-9;

double poisson_log_pmf(double mean, int n) {
    return -mean + n * std::log(mean) - std::lgamma(n + 1.0);
}

}  // namespace

double number_eigenfunction(int n, double phi) {
    if (n < 0)
        throw std::invalid_argument("number_eigenfunction: n must be >= 0, got " +
                                    std::to_string(n));
    if (!(phi > 0.0 && phi <= kPi))
        throw std::invalid_argument("number_eigenfunction: phi must lie in (0, pi], got " +
                                    std::to_string(phi));
    if (n == 0)
        return 1.0 / std::sqrt(kPi);
    return std::sqrt(2.0 / kPi) * std::cos(n * phi);
}

FockVector phase_state(double phi, int dim) {
    if (dim < 1)
        throw std::invalid_argument("phase_state: dimension must be >= 1");
    FockVector state;
    state.coeffs.resize(dim);
    for (int n = 0; n < dim; ++n)
        state.coeffs[n] = number_eigenfunction(n, phi);
    state.tail_mass = std::numeric_limits<double>::infinity();
    return state;
}

int coherent_dimension(double n_mean) {
    if (n_mean < 0.0)
        throw std::invalid_argument("coherent_dimension: N_mean must be >= 0");
    return static_cast<int>(std::ceil(n_mean + 12.0 * std::sqrt(n_mean) + 20.0));
}

int minimal_coherent_dimension(double n_mean) {
    if (n_mean < 0.0)
        throw std::invalid_argument("minimal_coherent_dimension: N_mean must be >= 0");
    if (n_mean == 0.0)
        return 1;
    const int cap = coherent_dimension(n_mean) + 8;
    double cumulative = 0.0;
    for (int n = 0; n < cap; ++n) {
        cumulative += std::exp(poisson_log_pmf(n_mean, n));
        if (1.0 - cumulative < kTailBudget)
            return n + 1;
    }
    return cap;  // unreachable for the tails the rule above covers
}

FockVector coherent_state(const CoherentParams& params, int dim) {
    if (params.n_mean < 0.0)
        throw std::invalid_argument("coherent_state: N_mean must be >= 0, got " +
                                    std::to_string(params.n_mean));
    if (dim < 1)
        throw std::invalid_argument("coherent_state: dimension must be >= 1");

    FockVector state;
    state.coeffs = Eigen::VectorXcd::Zero(dim);

    if (params.n_mean == 0.0) {
        state.coeffs[0] = 1.0;
        state.tail_mass = 0.0;
        return state;
    }

    const double log_gamma_mag = 0.5 * std::log(params.n_mean);
    double captured = 0.0;
    for (int n = 0; n < dim; ++n) {
        const double log_mag =
            n * log_gamma_mag - 0.5 * std::lgamma(n + 1.0) - 0.5 * params.n_mean;
        const double mag = std::exp(log_mag);
        state.coeffs[n] = std::polar(mag, n * params.theta);
        captured += mag * mag;
    }
    state.tail_mass = std::max(0.0, 1.0 - captured);

    if (state.tail_mass >= kTailBudget)
        throw InsufficientDimensionError(params.n_mean, dim,
                                         minimal_coherent_dimension(params.n_mean));
    return state;
}

Complex expectation(const TruncatedOperator& op, const FockVector& state) {
    if (op.dim() != state.dim())
        throw std::invalid_argument("expectation: operator dimension " +
                                    std::to_string(op.dim()) + " does not match state dimension " +
                                    std::to_string(state.dim()));
    if (!state.normalizable())
        throw std::invalid_argument("expectation: state is not normalizable "
                                    "(delta-normalized phase state)");
    return state.coeffs.dot(op.matrix * state.coeffs);
}

}  // namespace absphase
