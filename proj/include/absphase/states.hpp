#pragma once

#include <stdexcept>
#include <string>

#include "absphase/operators.hpp"

namespace absphase {

/// Truncated state vector in the number basis. tail_mass estimates the
/// probability weight beyond index D-1; +infinity marks delta-normalized
/// states (phase states), which no norm-based invariant applies to.
struct FockVector {
    Eigen::VectorXcd coeffs;
    double tail_mass = 0.0;

    bool normalizable() const { return std::isfinite(tail_mass); }
    Eigen::Index dim() const { return coeffs.size(); }
};

/// gamma = sqrt(N_mean) e^{i theta}.
struct CoherentParams {
    double n_mean = 0.0;
    double theta = 0.0;
};

/// Thrown when a requested truncation cannot hold a coherent state to the
/// 1e-9 tail-mass budget; carries the smallest dimension that can.
class InsufficientDimensionError : public std::runtime_error {
public:
    InsufficientDimensionError(double n_mean, int requested, int required)
        : std::runtime_error("coherent_state: N_mean = " + std::to_string(n_mean) +
                             " needs dimension >= " + std::to_string(required) +
                             " for tail mass < 1e-9, got " + std::to_string(requested)),
          required_dim_(required) {}

    int required_dim() const { return required_dim_; }

private:
    int required_dim_;
};

/// Number eigenfunction on the phase interval:
/// u_0(phi) = 1/sqrt(pi), u_n(phi) = sqrt(2/pi) cos(n phi) for n > 0.
/// Throws std::invalid_argument unless 0 < phi <= pi and n >= 0.
double number_eigenfunction(int n, double phi);

/// Truncated phase state: coefficients u_n(phi) for n < dim. Delta-normalized,
/// so tail_mass is +infinity; meaningful only inside overlaps and integrals.
FockVector phase_state(double phi, int dim);

/// Dimension rule ceil(N + 12 sqrt(N) + 20): twelve Poisson standard
/// deviations past the mean, which pushes the tail mass far below 1e-9.
int coherent_dimension(double n_mean);

/// Smallest dimension whose Poisson tail mass is below 1e-9.
int minimal_coherent_dimension(double n_mean);

/// Coherent state |gamma>: c_n = e^{-N/2} gamma^n / sqrt(n!), evaluated in
/// log space (exp(n ln|gamma| - lgamma(n+1)/... )) so that factorials never
/// overflow. Throws InsufficientDimensionError when the tail mass at the
/// given dimension is >= 1e-9.
FockVector coherent_state(const CoherentParams& params, int dim);

/// <state|op|state>. Requires matching dimensions and a finite-norm state.
Complex expectation(const TruncatedOperator& op, const FockVector& state);

}  // namespace absphase
