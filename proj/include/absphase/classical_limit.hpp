#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "absphase/distributions.hpp"

namespace absphase {

enum class PhaseQuantity { AbsPhase, SinPhase, CosPhase, Cos2Phase, Sin2Phase };

const char* to_string(PhaseQuantity quantity);
std::optional<PhaseQuantity> parse_quantity(std::string_view name);

struct SweepRecord {
    double n_mean;
    double value;
    double target;
    double abs_error;
};

/// Coherent-state expectation of one phase quantity across a list of field
/// strengths, against its classical value at phase angle theta.
struct SweepResult {
    PhaseQuantity quantity = PhaseQuantity::AbsPhase;
    double theta = 0.0;
    std::vector<SweepRecord> records;  ///< ordered by increasing n_mean
};

/// Partial sum pi/2 - (4/pi) sum_{s=1,3,..,s_max} cos(theta s)/s^2, which
/// converges to |theta| on (-pi, pi]. Tail bound: |partial - |theta|| <= 2/s_max.
/// s_max must be odd and positive.
double fourier_abs_theta(double theta, long s_max);

/// Partial sum 2/pi - (4/pi) sum_{s=2,4,..,s_max} cos(theta s)/(s^2 - 1),
/// which converges to |sin theta|. s_max must be even and positive.
double fourier_abs_sin(double theta, long s_max);

/// Large-field limit of the quantity: |theta|, |sin theta|, cos theta,
/// cos^2 theta or sin^2 theta.
double classical_target(PhaseQuantity quantity, double theta);

/// For each N in n_list (nonnegative, strictly increasing): build the
/// coherent state at its rule dimension, take the expectation of the matching
/// operator, and record the absolute error against the classical target.
/// sin(Phi) has no closed form and is built by quadrature; the supplied grid
/// is upgraded to 8*D points per record whenever it is too coarse for the
/// dimension in play.
SweepResult coherent_sweep(PhaseQuantity quantity, double theta,
                           std::span<const double> n_list, const PhaseGrid& grid);

}  // namespace absphase
