#pragma once

#include <vector>

#include "absphase/distributions.hpp"

namespace absphase {

/// Plane-rotator momentum basis |n>, n = -m..m, in dimensionless units
/// (hbar = 1, L = 2 pi, so p_n = n and Theta is the angle itself).
struct RotatorBasisSpec {
    int m = 1;
    int dimension() const { return 2 * m + 1; }
};

/// Gauss-Legendre rule on the full angle interval (-pi, pi).
struct AngleGrid {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

AngleGrid angle_grid(int n_points);

/// Entrywise check of the angle-momentum commutator: compares
/// (n - n') <n|Theta|n'> against i((-1)^{n-n'} - delta_{nn'}) over the full
/// basis and returns the largest deviation. The identity is algebraic (no
/// matrix product is involved), so the deviation is at rounding level.
double rotator_commutator_check(int m);

/// |<n|theta>|^2 with <theta|n> = e^{-i n theta}/sqrt(2 pi), sampled on the
/// grid. Uniformly 1/(2 pi): momentum eigenstates carry no angle information.
std::vector<double> rotator_angle_distribution(int n, const AngleGrid& grid);

/// Distribution of the absolute angle in momentum state |n>, from the
/// reflection-even eigenstates (|theta> + |-theta>)/sqrt(2) with the
/// half-interval renormalization (factor sqrt(2) for n > 0). Reproduces the
/// number-state phase distribution sample for sample.
PhaseDistribution folded_angle_distribution(int n, const PhaseGrid& grid);

}  // namespace absphase
