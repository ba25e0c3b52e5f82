#pragma once

#include <string>
#include <vector>

#include "absphase/states.hpp"

namespace absphase {

enum class DistributionSource { ClosedForm, FromState };

/// Density samples of an absolute-phase distribution on a quadrature grid.
struct PhaseDistribution {
    PhaseGrid grid;
    std::vector<double> density;
    DistributionSource source = DistributionSource::ClosedForm;
    std::string source_detail;
};

/// Phase distribution of the number state |n>:
/// P_0(phi) = 1/pi, P_n(phi) = (1/pi)(1 + cos(2 n phi)) for n > 0.
PhaseDistribution number_state_phase_distribution(int n, const PhaseGrid& grid);

/// <Phi^m> in the number state |n>, by quadrature over the closed-form
/// density. Independent of the truncated Phi matrix on purpose: powers of
/// the truncated matrix pick up truncation error this route does not have.
double phase_moment(int n, int m, const PhaseGrid& grid);

/// Uniform-phase moment pi^m / (m + 1), the large-n limit of phase_moment.
double classical_moment(int m);

/// Var(Phi) in |n>: pi^2/12 + 1/(2 n^2) for n > 0, pi^2/12 for n = 0.
double phase_variance(int n);

/// |<phi|state>|^2 sampled on the grid. Requires a finite-norm state.
PhaseDistribution state_phase_distribution(const FockVector& state, const PhaseGrid& grid);

}  // namespace absphase
