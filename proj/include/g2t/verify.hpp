#pragma once

// Property suite tying everything together: the twisted period relation,
// eigenspace orthogonality, determinant identities, the generalized linear
// relation, the F_D integral identity, and monodromy checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2t/periods.hpp"

namespace g2t {

inline constexpr const char* kEngineVersion = "g2twist 0.1.0";

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    nlohmann::json metadata;

    static CheckResult make(const std::string& name, double residual,
                            double tolerance, nlohmann::json metadata = {});
    nlohmann::json to_json() const;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::string engine = kEngineVersion;
    double elapsed_seconds = 0.0;
    nlohmann::json config_echo;

    bool all_pass() const;
    nlohmann::json to_json(bool include_timing = true) const;
};

// Candidate conventions for C = sign * Pi^T * W * Pi_dual with
// W = H^{-1} or its transpose.
struct PeriodRelationConvention {
    bool transpose_weight = false;
    int sign = +1;
};

// Freezes the convention by requiring the relation to close on the genus-0
// layer with the closed-form matrices.  Throws ConventionError if no
// candidate closes.
PeriodRelationConvention freeze_convention_on_Y(const ExponentVector& v,
                                                const BranchConfig& cfg,
                                                const QuadratureSpec& q,
                                                double* residual_out = nullptr);

CheckResult check_period_relation(Space space, const ExponentVector& v,
                                  const BranchConfig& cfg,
                                  const QuadratureSpec& q);

CheckResult check_corollary_relation(const ExponentVector& v,
                                     const BranchConfig& cfg,
                                     const QuadratureSpec& q);

CheckResult check_determinants(const ExponentVector& v, const BranchConfig& cfg,
                               std::uint64_t seed, int draws = 20);

CheckResult check_fd_identity(const LauricellaParams& p,
                              const std::array<Complex, 3>& z,
                              const QuadratureSpec& q);

CheckResult check_monodromy(const ExponentVector& v, const BranchConfig& cfg);

// Regularization cross-checks: endpoint-series vs eps-circle on a family
// with one divergent endpoint, and endpoint-series vs Gauss-Jacobi where
// both converge.
CheckResult check_regularization(const BranchConfig& cfg,
                                 const QuadratureSpec& q, std::uint64_t seed,
                                 int draws = 5);

struct SuiteConfig {
    ExponentVector exponents;
    BranchConfig cfg;
    QuadratureSpec quadrature;
    std::uint64_t seed = 20240801;
    std::vector<std::string> suites = {"all"};
};

// Runs the selected checks in a fixed order; never aborts on a failing
// check (errors become failed results).
VerificationReport run_suite(const SuiteConfig& sc);

// Random admissible exponent draws (uniform in (-0.23, 0.35), projected to
// zero sum, rejected near resonance).
enum class DrawFamily { Any, Convergent, DivergentEndpoint };
ExponentVector random_admissible(std::mt19937_64& rng,
                                 DrawFamily family = DrawFamily::Any);

// JSON helpers shared with the CLI.
nlohmann::json complex_to_json(Complex v);
nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);

}  // namespace g2t
