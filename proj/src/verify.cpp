#include "absphase/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace absphase {

namespace {

constexpr double kPi = std::numbers::pi;

class Suite {
public:
    // Passes when measured <= threshold.
    void check(std::string name, double measured, double threshold) {
        report_.checks.push_back({std::move(name),
                                  measured <= threshold ? CheckStatus::Pass : CheckStatus::Fail,
                                  measured, threshold, ""});
    }

    // Passes when measured > floor (for defects that certify a non-identity).
    void check_above(std::string name, double measured, double floor) {
        report_.checks.push_back({std::move(name),
                                  measured > floor ? CheckStatus::Pass : CheckStatus::Fail,
                                  measured, floor, "pass requires measured > threshold"});
    }

    void skip(std::string name, std::string note) {
        report_.checks.push_back(
            {std::move(name), CheckStatus::Skip, 0.0, 0.0, std::move(note)});
    }

    VerifyReport take() { return std::move(report_); }

private:
    VerifyReport report_;
};

double max_abs(const ComplexMatrix& m) {
    return m.cwiseAbs().maxCoeff();
}

double max_abs_excluding_last(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index last = a.rows() - 1;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < last; ++i)
        for (Eigen::Index j = 0; j < last; ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

void quadrature_checks(Suite& suite, const VerifyConfig& config) {
    const PhaseGrid grid = gauss_legendre_grid(config.quad_points);
    double weight_sum = 0.0;
    for (const double w : grid.weights)
        weight_sum += w;
    suite.check("quadrature.weight_sum", std::abs(weight_sum - kPi), 1e-12);

    const PhaseGrid small = gauss_legendre_grid(8);
    double worst = 0.0;
    for (int degree = 0; degree <= 9; ++degree) {
        std::vector<double> samples(small.size());
        for (std::size_t k = 0; k < small.size(); ++k)
            samples[k] = std::pow(small.nodes[k], degree);
        const double exact = std::pow(kPi, degree + 1) / (degree + 1);
        const double err = std::abs(integrate(std::span<const double>(samples), small) - exact);
        worst = std::max(worst, err / std::max(1.0, exact));
    }
    suite.check("quadrature.polynomial_exactness", worst, 1e-10);
}

void operator_checks(Suite& suite, const VerifyConfig& config) {
    const int dim = config.dim;
    const PhaseGrid grid = gauss_legendre_grid(config.quad_points);

    // Hermiticity across every operator the construction declares Hermitian.
    double herm = hermiticity_defect(number_operator(dim).matrix);
    herm = std::max(herm, hermiticity_defect(abs_phase_operator(dim).matrix));
    herm = std::max(herm, hermiticity_defect(gwg_angle_operator(32).matrix));
    if (dim >= 2) {
        auto [c, s] = carruthers_nieto(dim);
        herm = std::max(herm, hermiticity_defect(c.matrix));
        herm = std::max(herm, hermiticity_defect(s.matrix));
    }
    if (dim >= 3) {
        herm = std::max(herm, hermiticity_defect(cos_phase(dim).matrix));
        herm = std::max(herm, hermiticity_defect(sin2_phase(dim).matrix));
    }
    suite.check("hermiticity.declared_operators", herm, 1e-12);

    // Closed forms against the quadrature route.
    ComplexMatrix phi = abs_phase_operator(dim).matrix;
    if (config.phi_perturbation != 0.0 && dim >= 2) {
        phi(0, 1) += config.phi_perturbation;
        phi(1, 0) += config.phi_perturbation;
    }
    const ComplexMatrix phi_quad =
        phase_function_operator([](double p) { return p; }, dim, grid, "Phi").matrix;
    suite.check("oracle.phi_vs_quadrature", max_abs(phi - phi_quad), config.tolerance);

    if (dim >= 3) {
        const ComplexMatrix cos_quad =
            phase_function_operator([](double p) { return std::cos(p); }, dim, grid).matrix;
        suite.check("oracle.cos_phase_vs_quadrature",
                    max_abs(cos_phase(dim).matrix - cos_quad), config.tolerance);

        const ComplexMatrix sin2_quad =
            phase_function_operator([](double p) { return std::sin(p) * std::sin(p); }, dim,
                                    grid)
                .matrix;
        // The truncated S^2 corrupts the (D-1, D-1) entry; the boundary row
        // and column stay out of the comparison.
        suite.check("oracle.sin2_phase_vs_quadrature",
                    max_abs_excluding_last(sin2_phase(dim).matrix, sin2_quad),
                    config.tolerance);

        auto [c, s] = carruthers_nieto(dim);
        ComplexMatrix correction = cos_phase(dim).matrix - c.matrix;
        correction(0, 1) -= 0.5 * (std::numbers::sqrt2 - 1.0);
        correction(1, 0) -= 0.5 * (std::numbers::sqrt2 - 1.0);
        suite.check("correction.cos_phase", max_abs(correction), 1e-12);

        const ComplexMatrix s2 = sin2_phase(dim).matrix;
        const double diag_defect = std::max(std::abs(s2(0, 0) - 0.5), std::abs(s2(1, 1) - 0.25));
        suite.check("correction.sin2_diagonal", diag_defect, 1e-12);
    } else {
        suite.skip("oracle.cos_phase_vs_quadrature", "requires dim >= 3");
        suite.skip("oracle.sin2_phase_vs_quadrature", "requires dim >= 3");
        suite.skip("correction.cos_phase", "requires dim >= 3");
        suite.skip("correction.sin2_diagonal", "requires dim >= 3");
    }

    // cos^2 + sin^2 = 1 survives the quadrature compression exactly ...
    const ComplexMatrix cos2 =
        phase_function_operator([](double p) { return std::cos(p) * std::cos(p); }, dim, grid)
            .matrix;
    const ComplexMatrix sin2 =
        phase_function_operator([](double p) { return std::sin(p) * std::sin(p); }, dim, grid)
            .matrix;
    suite.check("identity.trig_pythagoras",
                max_abs(cos2 + sin2 - ComplexMatrix::Identity(dim, dim)), config.tolerance);

    // ... while C^2 + S^2 falls short of 1 by half a projector at each end.
    if (dim >= 2) {
        auto [c, s] = carruthers_nieto(dim);
        ComplexMatrix deficit =
            ComplexMatrix::Identity(dim, dim) - c.matrix * c.matrix - s.matrix * s.matrix;
        deficit(0, 0) -= 0.5;
        deficit(dim - 1, dim - 1) -= 0.5;
        suite.check("identity.cn_deficit", max_abs(deficit), 1e-12);
    } else {
        suite.skip("identity.cn_deficit", "requires dim >= 2");
    }

    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(abs_phase_operator(dim).matrix);
    const double low = solver.eigenvalues().minCoeff();
    const double high = solver.eigenvalues().maxCoeff();
    suite.check("spectrum.phi_in_range",
                std::max({0.0, -low, high - kPi}), 1e-12);

    const ComplexMatrix phi_clean = abs_phase_operator(dim).matrix;
    double parity_worst = 0.0;
    for (int n = 0; n < dim; ++n)
        for (int np = 0; np < dim; ++np)
            if (n != np && (n + np) % 2 == 0)
                parity_worst = std::max(parity_worst, std::abs(phi_clean(n, np)));
    suite.check("structure.parity_zeros", parity_worst, 0.0);

    if (dim >= 2) {
        suite.check_above(
            "structure.commutator_not_rank_one",
            rank_one_correction_defect(number_commutator(abs_phase_operator(dim))), 1e-6);
    } else {
        suite.skip("structure.commutator_not_rank_one", "requires dim >= 2");
    }
}

void state_checks(Suite& suite, const VerifyConfig& config) {
    const int dim = config.dim;

    // Orthonormality of the number eigenfunctions under quadrature.
    const PhaseGrid fine = gauss_legendre_grid(512);
    const ComplexMatrix gram =
        phase_function_operator([](double) { return 1.0; }, 33, fine, "1").matrix;
    suite.check("states.orthonormality", max_abs(gram - ComplexMatrix::Identity(33, 33)),
                1e-10);

    // Coherent-state bookkeeping: captured norm plus tail is a partition of 1.
    const double n_mean = dim >= 24 ? 4.0 : 0.0;
    const FockVector coherent = coherent_state({n_mean, 0.4}, dim);
    suite.check("states.coherent_norm",
                std::abs(coherent.coeffs.squaredNorm() + coherent.tail_mass - 1.0), 1e-9);
    suite.check("states.coherent_number_mean",
                std::abs(std::real(expectation(number_operator(dim), coherent)) - n_mean),
                1e-9);

    double imag_worst = 0.0;
    std::vector<TruncatedOperator> hermitian;
    hermitian.push_back(number_operator(dim));
    hermitian.push_back(abs_phase_operator(dim));
    if (dim >= 3) {
        hermitian.push_back(cos_phase(dim));
        hermitian.push_back(sin2_phase(dim));
    }
    for (const auto& op : hermitian)
        imag_worst = std::max(imag_worst, std::abs(std::imag(expectation(op, coherent))));
    suite.check("expectation.hermitian_real", imag_worst, 1e-12);
}

void distribution_checks(Suite& suite, const VerifyConfig& config) {
    const PhaseGrid grid = gauss_legendre_grid(config.quad_points);

    double norm_worst = 0.0;
    double negative_worst = 0.0;
    for (int n = 0; n <= 32; ++n) {
        const PhaseDistribution dist = number_state_phase_distribution(n, grid);
        double low = dist.density[0];
        for (const double d : dist.density)
            low = std::min(low, d);
        negative_worst = std::max(negative_worst, -low);
        norm_worst = std::max(
            norm_worst,
            std::abs(integrate(std::span<const double>(dist.density), grid) - 1.0));
    }
    suite.check("distribution.normalized", norm_worst, 1e-9);
    suite.check("distribution.nonnegative", negative_worst, 0.0);

    double mean_worst = 0.0;
    double second_worst = 0.0;
    for (int n = 1; n <= 32; ++n) {
        mean_worst = std::max(mean_worst, std::abs(phase_moment(n, 1, grid) - kPi / 2.0));
        const double expected = kPi * kPi / 3.0 + 0.5 / (static_cast<double>(n) * n);
        second_worst = std::max(second_worst, std::abs(phase_moment(n, 2, grid) - expected));
    }
    suite.check("moments.mean_abs_phase", mean_worst, 1e-12);
    suite.check("moments.second_moment", second_worst, 1e-10);

    // The 1/(2n^2) law: doubling n divides the classical-limit error by 4.
    double ratio_worst = 0.0;
    for (const int n : {4, 8, 16}) {
        const double err_n = std::abs(phase_moment(n, 2, grid) - classical_moment(2));
        const double err_2n = std::abs(phase_moment(2 * n, 2, grid) - classical_moment(2));
        ratio_worst = std::max(ratio_worst, std::abs(err_n / err_2n - 4.0));
    }
    suite.check("moments.error_ratio_m2", ratio_worst, 0.5);

    const PhaseGrid wide = gauss_legendre_grid(1024);
    double classical_worst = 0.0;
    for (int m = 0; m <= 4; ++m)
        classical_worst = std::max(
            classical_worst, std::abs(phase_moment(100, m, wide) - classical_moment(m)));
    suite.check("moments.classical_limit_n100", classical_worst, 1e-3);
}

void rotator_checks(Suite& suite) {
    suite.check("rotator.commutator_identity", rotator_commutator_check(32), 1e-13);

    const AngleGrid angles = angle_grid(128);
    double spread = 0.0;
    double norm_err = 0.0;
    for (const int n : {0, 5}) {
        const std::vector<double> density = rotator_angle_distribution(n, angles);
        double low = density[0];
        double high = density[0];
        double total = 0.0;
        for (std::size_t k = 0; k < density.size(); ++k) {
            low = std::min(low, density[k]);
            high = std::max(high, density[k]);
            total += angles.weights[k] * density[k];
        }
        spread = std::max(spread, high - low);
        norm_err = std::max(norm_err, std::abs(total - 1.0));
    }
    suite.check("rotator.uniform_angle", spread, 1e-15);
    suite.check("rotator.angle_norm", norm_err, 1e-10);

    const PhaseGrid grid = gauss_legendre_grid(256);
    double fold_worst = 0.0;
    for (int n = 0; n <= 16; ++n) {
        const PhaseDistribution folded = folded_angle_distribution(n, grid);
        const PhaseDistribution number = number_state_phase_distribution(n, grid);
        for (std::size_t k = 0; k < grid.size(); ++k)
            fold_worst = std::max(fold_worst, std::abs(folded.density[k] - number.density[k]));
    }
    suite.check("rotator.folded_matches_number", fold_worst, 1e-12);
}

void fourier_checks(Suite& suite) {
    const double thetas[] = {0.0, 0.5, 1.0, kPi / 2.0, 2.5};

    double abs_theta_worst = 0.0;
    double abs_sin_worst = 0.0;
    for (const double theta : thetas) {
        abs_theta_worst = std::max(abs_theta_worst,
                                   std::abs(fourier_abs_theta(theta, 9999) - std::abs(theta)));
        abs_sin_worst = std::max(
            abs_sin_worst, std::abs(fourier_abs_sin(theta, 10000) - std::abs(std::sin(theta))));
    }
    suite.check("fourier.abs_theta", abs_theta_worst, 1e-3);
    suite.check("fourier.abs_sin", abs_sin_worst, 1e-3);

    double bound_worst = 0.0;
    for (const long s_max : {9L, 99L, 999L})
        for (const double theta : thetas)
            bound_worst =
                std::max(bound_worst, std::abs(fourier_abs_theta(theta, s_max) -
                                               std::abs(theta)) *
                                          static_cast<double>(s_max) / 2.0);
    suite.check("fourier.tail_bound", bound_worst, 1.0);
}

void sweep_checks(Suite& suite, const VerifyConfig& config) {
    const PhaseGrid grid = gauss_legendre_grid(config.quad_points);
    const double n_values[] = {4.0, 16.0, 64.0, 256.0};
    const PhaseQuantity quantities[] = {PhaseQuantity::AbsPhase, PhaseQuantity::SinPhase,
                                        PhaseQuantity::CosPhase, PhaseQuantity::Cos2Phase,
                                        PhaseQuantity::Sin2Phase};

    double worst_inversion = 0.0;
    bool decay_ok = true;
    double terminal_worst = 0.0;
    for (const double theta : {0.3, 1.0, 2.0}) {
        for (const PhaseQuantity quantity : quantities) {
            const SweepResult sweep = coherent_sweep(quantity, theta, n_values, grid);
            int inversions = 0;
            double cell_worst = 0.0;
            for (std::size_t i = 1; i < sweep.records.size(); ++i) {
                const double rise =
                    sweep.records[i].abs_error - sweep.records[i - 1].abs_error;
                if (rise > 0.0) {
                    ++inversions;
                    cell_worst = std::max(cell_worst, rise);
                }
            }
            if (inversions > 1 || cell_worst >= 1e-4)
                decay_ok = false;
            worst_inversion = std::max(worst_inversion, cell_worst);
            terminal_worst = std::max(terminal_worst, sweep.records.back().abs_error);
        }
    }
    suite.check("sweep.error_decay", decay_ok ? worst_inversion : 1.0, 1e-4);
    suite.check("sweep.terminal_error", terminal_worst, 0.05);
}

}  // namespace

const char* to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::Pass:
        return "PASS";
    case CheckStatus::Fail:
        return "FAIL";
    case CheckStatus::Skip:
        return "SKIP";
    }
    return "?";
}

bool VerifyReport::all_passed() const {
    return count(CheckStatus::Fail) == 0;
}

int VerifyReport::count(CheckStatus status) const {
    int n = 0;
    for (const auto& check : checks)
        if (check.status == status)
            ++n;
    return n;
}

const CheckResult* VerifyReport::find(std::string_view name) const {
    for (const auto& check : checks)
        if (check.name == name)
            return &check;
    return nullptr;
}

VerifyReport run_verification(const VerifyConfig& config) {
    if (config.dim < 1)
        throw std::invalid_argument("run_verification: dim must be >= 1");
    if (config.quad_points < 8 * config.dim)
        throw std::invalid_argument("run_verification: oracle comparisons need quad_points >= "
                                    "8*dim (got " +
                                    std::to_string(config.quad_points) + " for dim " +
                                    std::to_string(config.dim) + ")");
    Suite suite;
    quadrature_checks(suite, config);
    operator_checks(suite, config);
    state_checks(suite, config);
    distribution_checks(suite, config);
    rotator_checks(suite);
    fourier_checks(suite);
    if (config.include_sweeps)
        sweep_checks(suite, config);
    return suite.take();
}

std::string format_report(const VerifyReport& report) {
    std::string out;
    char line[192];
    for (const auto& check : report.checks) {
        if (check.status == CheckStatus::Skip) {
            std::snprintf(line, sizeof line, "[SKIP] %-36s %s\n", check.name.c_str(),
                          check.note.c_str());
        } else {
            std::snprintf(line, sizeof line, "[%s] %-36s measured=%.6e  threshold=%.6e\n",
                          to_string(check.status), check.name.c_str(), check.measured,
                          check.threshold);
        }
        out += line;
    }
    std::snprintf(line, sizeof line, "verification: %d passed, %d failed, %d skipped\n",
                  report.count(CheckStatus::Pass), report.count(CheckStatus::Fail),
                  report.count(CheckStatus::Skip));
    out += line;
    return out;
}

std::string report_to_csv(const VerifyReport& report) {
    std::string out = "check,status,measured,threshold,note\n";
    for (const auto& check : report.checks) {
        out += check.name;
        out += ',';
        out += to_string(check.status);
        out += ',';
        out += format_double(check.measured);
        out += ',';
        out += format_double(check.threshold);
        out += ',';
        out += check.note;
        out += '\n';
    }
    return out;
}

namespace {

CheckStatus status_from_string(std::string_view text) {
    if (text == "PASS")
        return CheckStatus::Pass;
    if (text == "FAIL")
        return CheckStatus::Fail;
    if (text == "SKIP")
        return CheckStatus::Skip;
    throw std::invalid_argument("report parse: unknown status '" + std::string(text) + "'");
}

}  // namespace

VerifyReport report_from_csv(std::string_view text) {
    VerifyReport report;
    std::size_t start = 0;
    bool header = true;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (line.empty())
            continue;
        if (header) {
            header = false;
            continue;
        }
        CheckResult check;
        std::size_t pos = 0;
        auto next = [&](bool last = false) {
            const std::size_t comma = last ? line.size() : line.find(',', pos);
            if (comma == std::string_view::npos)
                throw std::invalid_argument("report parse: short row");
            const std::string_view cell = line.substr(pos, comma - pos);
            pos = comma + 1;
            return cell;
        };
        check.name = std::string(next());
        check.status = status_from_string(next());
        check.measured = std::stod(std::string(next()));
        check.threshold = std::stod(std::string(next()));
        check.note = std::string(next(true));
        report.checks.push_back(std::move(check));
    }
    return report;
}

std::string report_to_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& check : report.checks) {
        checks.push_back({{"check", check.name},
                          {"status", to_string(check.status)},
                          {"measured", check.measured},
                          {"threshold", check.threshold},
                          {"note", check.note}});
    }
    nlohmann::json j;
    j["checks"] = std::move(checks);
    return j.dump();
}

VerifyReport report_from_json(std::string_view text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    VerifyReport report;
    for (const auto& item : j.at("checks")) {
        CheckResult check;
        check.name = item.at("check").get<std::string>();
        check.status = status_from_string(item.at("status").get<std::string>());
        check.measured = item.at("measured").get<double>();
        check.threshold = item.at("threshold").get<double>();
        check.note = item.at("note").get<std::string>();
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace absphase
