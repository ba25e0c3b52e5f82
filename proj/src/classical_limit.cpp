#include "absphase/classical_limit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace absphase {

namespace {

constexpr double kPi = std::numbers::pi;

TruncatedOperator sweep_operator(PhaseQuantity quantity, int dim, const PhaseGrid& grid) {
    switch (quantity) {
    case PhaseQuantity::AbsPhase:
        return abs_phase_operator(dim);
    case PhaseQuantity::SinPhase: {
        // Quadrature-only route: sin(Phi) has no closed form here.
        const int wanted = 8 * dim;
        if (static_cast<int>(grid.size()) >= wanted)
            return phase_function_operator([](double phi) { return std::sin(phi); }, dim, grid,
                                           "sinPhi");
        return phase_function_operator([](double phi) { return std::sin(phi); }, dim,
                                       gauss_legendre_grid(wanted), "sinPhi");
    }
    case PhaseQuantity::CosPhase:
        return cos_phase(dim);
    case PhaseQuantity::Cos2Phase: {
        TruncatedOperator op = sin2_phase(dim);
        op.matrix = ComplexMatrix::Identity(dim, dim) - op.matrix;  // cos^2 = 1 - sin^2
        op.label = "cos2Phi";
        return op;
    }
    case PhaseQuantity::Sin2Phase:
        return sin2_phase(dim);
    }
    throw std::invalid_argument("coherent_sweep: unknown quantity");
}

}  // namespace

const char* to_string(PhaseQuantity quantity) {
    switch (quantity) {
    case PhaseQuantity::AbsPhase:
        return "AbsPhase";
    case PhaseQuantity::SinPhase:
        return "SinPhase";
    case PhaseQuantity::CosPhase:
        return "CosPhase";
    case PhaseQuantity::Cos2Phase:
        return "Cos2Phase";
    case PhaseQuantity::Sin2Phase:
        return "Sin2Phase";
    }
    return "?";
}

std::optional<PhaseQuantity> parse_quantity(std::string_view name) {
    for (const PhaseQuantity q :
         {PhaseQuantity::AbsPhase, PhaseQuantity::SinPhase, PhaseQuantity::CosPhase,
          PhaseQuantity::Cos2Phase, PhaseQuantity::Sin2Phase}) {
        if (name == to_string(q))
            return q;
    }
    return std::nullopt;
}

double fourier_abs_theta(double theta, long s_max) {
    if (s_max < 1 || s_max % 2 == 0)
        throw std::invalid_argument("fourier_abs_theta: s_max must be odd and positive, got " +
                                    std::to_string(s_max));
    double acc = 0.0;
    for (long s = s_max; s >= 1; s -= 2)  // smallest terms first
        acc += std::cos(theta * s) / (static_cast<double>(s) * s);
    return kPi / 2.0 - (4.0 / kPi) * acc;
}

double fourier_abs_sin(double theta, long s_max) {
    if (s_max < 2 || s_max % 2 != 0)
        throw std::invalid_argument("fourier_abs_sin: s_max must be even and positive, got " +
                                    std::to_string(s_max));
    double acc = 0.0;
    for (long s = s_max; s >= 2; s -= 2)
        acc += std::cos(theta * s) / (static_cast<double>(s) * s - 1.0);
    return 2.0 / kPi - (4.0 / kPi) * acc;
}

double classical_target(PhaseQuantity quantity, double theta) {
    switch (quantity) {
    case PhaseQuantity::AbsPhase:
        return std::abs(theta);
    case PhaseQuantity::SinPhase:
        return std::abs(std::sin(theta));
    case PhaseQuantity::CosPhase:
        return std::cos(theta);
    case PhaseQuantity::Cos2Phase: {
        const double c = std::cos(theta);
        return c * c;
    }
    case PhaseQuantity::Sin2Phase: {
        const double s = std::sin(theta);
        return s * s;
    }
    }
    throw std::invalid_argument("classical_target: unknown quantity");
}

SweepResult coherent_sweep(PhaseQuantity quantity, double theta, std::span<const double> n_list,
                           const PhaseGrid& grid) {
    if (n_list.empty())
        throw std::invalid_argument("coherent_sweep: N list must not be empty");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 0.0)
            throw std::invalid_argument("coherent_sweep: N values must be >= 0");
        if (i > 0 && n_list[i] <= n_list[i - 1])
            throw std::invalid_argument("coherent_sweep: N list must be strictly increasing");
    }

    SweepResult result;
    result.quantity = quantity;
    result.theta = theta;
    const double target = classical_target(quantity, theta);

    for (const double n_mean : n_list) {
        const int dim = coherent_dimension(n_mean);
        const TruncatedOperator op = sweep_operator(quantity, dim, grid);
        const FockVector state = coherent_state({n_mean, theta}, dim);
        const double value = std::real(expectation(op, state));
        result.records.push_back({n_mean, value, target, std::abs(value - target)});
    }
    return result;
}

}  // namespace absphase
