#pragma once

#include <string>
#include <vector>

#include "absphase/classical_limit.hpp"
#include "absphase/rotator.hpp"
#include "absphase/table_io.hpp"

namespace absphase {

struct VerifyConfig {
    int dim = 32;
    int quad_points = 256;  ///< must be >= 8 * dim (oracle comparisons run here)
    double tolerance = 1e-10;

    /// Test hook: added to Phi(0,1) and Phi(1,0) before the oracle
    /// comparison, and nowhere else. Nonzero values must trip
    /// oracle.phi_vs_quadrature.
    double phi_perturbation = 0.0;

    /// The coherent-sweep trend checks dominate the runtime; callers that
    /// only need the algebraic checks can switch them off. The CLI always
    /// runs them.
    bool include_sweeps = true;
};

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus status);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    double measured = 0.0;
    double threshold = 0.0;
    std::string note;

    bool operator==(const CheckResult&) const = default;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    int count(CheckStatus status) const;
    const CheckResult* find(std::string_view name) const;

    bool operator==(const VerifyReport&) const = default;
};

/// Runs every invariant of every module at the given configuration.
/// Throws std::invalid_argument when quad_points < 8 * dim.
VerifyReport run_verification(const VerifyConfig& config);

/// One aligned [PASS]/[FAIL]/[SKIP] line per check plus a summary line.
std::string format_report(const VerifyReport& report);

std::string report_to_csv(const VerifyReport& report);
VerifyReport report_from_csv(std::string_view text);
std::string report_to_json(const VerifyReport& report);
VerifyReport report_from_json(std::string_view text);

}  // namespace absphase
