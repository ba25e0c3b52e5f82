#pragma once

#include <functional>
#include <string>
#include <utility>

#include "absphase/numerics.hpp"

namespace absphase {

enum class Basis { Number, Rotator };

/// Dense operator in a truncated basis. Number basis: the D Fock states
/// |0>..|D-1>. Rotator basis: the 2m+1 momentum states |-m>..|+m>, stored
/// with row/column index r = n + m.
struct TruncatedOperator {
    ComplexMatrix matrix;
    Basis basis = Basis::Number;
    int basis_param = 0;  ///< D for Basis::Number, m for Basis::Rotator
    std::string label;

    Eigen::Index dim() const { return matrix.rows(); }
};

/// diag(0, 1, ..., D-1).
TruncatedOperator number_operator(int dim);

/// Susskind-Glogower shift pair in the convention a = Edag N^{1/2}: Edag is
/// the lowering shift (Edag|n> = |n-1>, Edag|0> = 0) and E its adjoint, the
/// raising shift with E|D-1> = 0 under truncation. Returns {E, Edag}.
/// Requires dim >= 2.
std::pair<TruncatedOperator, TruncatedOperator> exponential_phase_operators(int dim);

/// Carruthers-Nieto pair C = (E + Edag)/2, S = (E - Edag)/2i. Returns {C, S}.
std::pair<TruncatedOperator, TruncatedOperator> carruthers_nieto(int dim);

/// Absolute-phase operator in closed form:
///   <n|Phi|n>  = pi/2
///   <n|Phi|0>  = -2 sqrt(2) / (pi n^2)                   for odd n > 0
///   <n|Phi|n'> = -(2/pi) (1/(n+n')^2 + 1/(n-n')^2)       for n,n' > 0, n+n' odd
///   0 otherwise.
/// Real symmetric; structurally-zero entries are stored as exact zeros.
TruncatedOperator abs_phase_operator(int dim);

/// Quadrature route for operators that are functions of the phase:
/// <n|f(Phi)|n'> = sum_k w_k f(x_k) u_n(x_k) u_n'(x_k). This path never
/// touches the closed forms above, so it serves as their independent check.
/// Throws std::domain_error when f is not finite at some grid node.
TruncatedOperator phase_function_operator(const std::function<double(double)>& f, int dim,
                                          const PhaseGrid& grid,
                                          const std::string& label = "f(Phi)");

/// cos(Phi) = C + (1/2)(sqrt(2)-1)(|0><1| + |1><0|). Requires dim >= 3.
TruncatedOperator cos_phase(int dim);

/// sin^2(Phi) = S^2 + (1/4)(1-sqrt(2))(|0><2| + |2><0|)
///            + (1/4)(|0><0| - |1><1|).
/// S^2 is built from the truncated shifts, which corrupts only the
/// (D-1, D-1) entry (1/4 instead of 1/2); that entry is left as-is and
/// excluded from oracle comparisons. Requires dim >= 3.
TruncatedOperator sin2_phase(int dim);

/// Plane-rotator angle operator: <n|Theta|n'> = i (-1)^{n-n'} / (n-n') off
/// the diagonal, 0 on it. Indices n, n' run over -m..m.
TruncatedOperator gwg_angle_operator(int m);

/// Commutator matrix elements <n|[N, A]|n'> = (n - n') <n|A|n'> for a
/// number-basis operator A.
ComplexMatrix number_commutator(const TruncatedOperator& op);

/// Residual of the best rank-one correction fit: if K = i(I - R) held for
/// some rank-one R (the plane-rotator pattern), the second singular value of
/// I -+ iK would vanish for one choice of sign. Returns the smaller of the
/// two second singular values; a value well above zero certifies that no
/// rank-one-corrected canonical commutator reproduces K.
double rank_one_correction_defect(const ComplexMatrix& commutator_elements);

}  // namespace absphase
