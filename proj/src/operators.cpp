#include "absphase/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>

#include "absphase/states.hpp"

namespace absphase {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dim(int dim, int minimum, const char* who) {
    if (dim < minimum)
        throw std::invalid_argument(std::string(who) + ": dimension must be >= " +
                                    std::to_string(minimum) + ", got " + std::to_string(dim));
}

TruncatedOperator number_basis_op(ComplexMatrix m, int dim, std::string label) {
    return TruncatedOperator{std::move(m), Basis::Number, dim, std::move(label)};
}

}  // namespace

TruncatedOperator number_operator(int dim) {
    require_dim(dim, 1, "number_operator");
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n)
        m(n, n) = static_cast<double>(n);
    return number_basis_op(std::move(m), dim, "N");
}

std::pair<TruncatedOperator, TruncatedOperator> exponential_phase_operators(int dim) {
    require_dim(dim, 2, "exponential_phase_operators");
    ComplexMatrix lowering = ComplexMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n)
        lowering(n - 1, n) = 1.0;
    ComplexMatrix raising = lowering.adjoint();
    return {number_basis_op(std::move(raising), dim, "E"),
            number_basis_op(std::move(lowering), dim, "Edag")};
}

std::pair<TruncatedOperator, TruncatedOperator> carruthers_nieto(int dim) {
    auto [e, edag] = exponential_phase_operators(dim);
    ComplexMatrix c = 0.5 * (e.matrix + edag.matrix);
    ComplexMatrix s = (e.matrix - edag.matrix) / Complex(0.0, 2.0);
    return {number_basis_op(std::move(c), dim, "C"), number_basis_op(std::move(s), dim, "S")};
}

TruncatedOperator abs_phase_operator(int dim) {
    require_dim(dim, 1, "abs_phase_operator");
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n)
        m(n, n) = kPi / 2.0;
    for (int n = 1; n < dim; n += 2) {
        const double v = -2.0 * std::numbers::sqrt2 / (kPi * n * n);
        m(n, 0) = v;
        m(0, n) = v;
    }
    for (int n = 1; n < dim; ++n) {
        for (int np = n + 1; np < dim; ++np) {
            if ((n + np) % 2 == 0)
                continue;  // structurally zero, left as exact 0
            const double sum = static_cast<double>(n + np);
            const double diff = static_cast<double>(np - n);
            const double v = -(2.0 / kPi) * (1.0 / (sum * sum) + 1.0 / (diff * diff));
            m(n, np) = v;
            m(np, n) = v;
        }
    }
    return number_basis_op(std::move(m), dim, "Phi");
}

TruncatedOperator phase_function_operator(const std::function<double(double)>& f, int dim,
                                          const PhaseGrid& grid, const std::string& label) {
    require_dim(dim, 1, "phase_function_operator");
    const auto point_count = static_cast<Eigen::Index>(grid.size());

    Eigen::VectorXd weighted_f(point_count);
    for (Eigen::Index k = 0; k < point_count; ++k) {
        const double phi = grid.nodes[static_cast<std::size_t>(k)];
        const double value = f(phi);
        if (!std::isfinite(value))
            throw std::domain_error("phase_function_operator: integrand not finite at node " +
                                    std::to_string(k) + " (phi = " + std::to_string(phi) + ")");
        weighted_f[k] = value * grid.weights[static_cast<std::size_t>(k)];
    }

    Eigen::MatrixXd eigenfunctions(dim, point_count);
    for (Eigen::Index k = 0; k < point_count; ++k)
        for (int n = 0; n < dim; ++n)
            eigenfunctions(n, k) =
                number_eigenfunction(n, grid.nodes[static_cast<std::size_t>(k)]);

    const Eigen::MatrixXd real_matrix =
        eigenfunctions * weighted_f.asDiagonal() * eigenfunctions.transpose();
    return number_basis_op(real_matrix.cast<Complex>(), dim, label);
}

TruncatedOperator cos_phase(int dim) {
    require_dim(dim, 3, "cos_phase");
    auto [c, s] = carruthers_nieto(dim);
    const double correction = 0.5 * (std::numbers::sqrt2 - 1.0);
    ComplexMatrix m = std::move(c.matrix);
    m(0, 1) += correction;
    m(1, 0) += correction;
    return number_basis_op(std::move(m), dim, "cosPhi");
}

TruncatedOperator sin2_phase(int dim) {
    require_dim(dim, 3, "sin2_phase");
    auto [c, s] = carruthers_nieto(dim);
    ComplexMatrix m = s.matrix * s.matrix;
    const double corner = 0.25 * (1.0 - std::numbers::sqrt2);
    m(0, 2) += corner;
    m(2, 0) += corner;
    m(0, 0) += 0.25;
    m(1, 1) -= 0.25;
    return number_basis_op(std::move(m), dim, "sin2Phi");
}

TruncatedOperator gwg_angle_operator(int m) {
    if (m < 1)
        throw std::invalid_argument("gwg_angle_operator: m must be >= 1, got " +
                                    std::to_string(m));
    const int dim = 2 * m + 1;
    ComplexMatrix theta = ComplexMatrix::Zero(dim, dim);
    for (int row = 0; row < dim; ++row) {
        for (int col = 0; col < dim; ++col) {
            if (row == col)
                continue;
            const int delta = row - col;  // = n - n' (the +m offsets cancel)
            const double parity = (delta % 2 == 0) ? 1.0 : -1.0;
            theta(row, col) = Complex(0.0, parity / static_cast<double>(delta));
        }
    }
    return TruncatedOperator{std::move(theta), Basis::Rotator, m, "Theta"};
}

ComplexMatrix number_commutator(const TruncatedOperator& op) {
    const Eigen::Index dim = op.dim();
    ComplexMatrix k(dim, dim);
    for (Eigen::Index n = 0; n < dim; ++n)
        for (Eigen::Index np = 0; np < dim; ++np)
            k(n, np) = static_cast<double>(n - np) * op.matrix(n, np);
    return k;
}

double rank_one_correction_defect(const ComplexMatrix& commutator_elements) {
    const Eigen::Index dim = commutator_elements.rows();
    if (dim < 2)
        throw std::invalid_argument("rank_one_correction_defect: needs a matrix of dim >= 2");
    const ComplexMatrix identity = ComplexMatrix::Identity(dim, dim);
    const Complex i_unit(0.0, 1.0);
    double smallest = std::numeric_limits<double>::infinity();
    for (const double sign : {1.0, -1.0}) {
        const ComplexMatrix residual = identity + sign * i_unit * commutator_elements;
        Eigen::JacobiSVD<ComplexMatrix> svd(residual);
        smallest = std::min(smallest, svd.singularValues()(1));
    }
    return smallest;
}

}  // namespace absphase
