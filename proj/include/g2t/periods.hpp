#pragma once

// Numerical period engine: regularized interval integrals of loaded
// sections against the basis forms, period-matrix assembly, the Lauricella
// F_D series, and the complex gamma function.

#include <vector>

#include <Eigen/Dense>

#include "g2t/cohomology.hpp"
#include "g2t/homology.hpp"
#include "g2t/multivalued.hpp"

namespace g2t {

struct QuadratureSpec {
    enum class Method { EndpointSeries, GaussJacobi };
    Method method = Method::EndpointSeries;
    double rel_tol = 1e-12;
    int max_nodes = 1 << 18;
    double delta_fraction = 0.1;  // endpoint split radius / adjacent gap
    bool extended = false;        // run kernels in long double

    void validate() const {
        if (!(rel_tol > 1e-15 && rel_tol < 1e-3))
            throw Error("quadrature tolerance out of range (1e-15, 1e-3)");
    }
};

struct QuadResult {
    Complex value{0.0};
    double error = 0.0;
};

// Regularized period over the interval cycle (z_j, z_{j+1}) (j = 4 is
// (1, inf), mapped through x = 1/s): the convergent integral of the loaded
// section times the form whenever Re(alpha) > -1 at both endpoints, and its
// analytic continuation in the exponents otherwise.
QuadResult quad_regularized_interval(int j, const FormDescriptor& form,
                                     const TwistSpec& spec,
                                     const BranchConfig& cfg,
                                     const QuadratureSpec& q);

// Same value through the eps-circle (loop-corrected) construction; used as
// a cross-check oracle for the endpoint-series path.
QuadResult quad_interval_circle_oracle(int j, const FormDescriptor& form,
                                       const TwistSpec& spec,
                                       const BranchConfig& cfg,
                                       const QuadratureSpec& q);

// Convergent-case oracle with Gauss-Jacobi weights; requires real effective
// exponents and Re(alpha) > -1 at both endpoints.
QuadResult quad_interval_gauss_jacobi(int j, const FormDescriptor& form,
                                      const TwistSpec& spec,
                                      const BranchConfig& cfg,
                                      const QuadratureSpec& q);

// Loaded integrand value at a real interior point of interval j (section
// times form coefficient), for branch-consistency tests.
Complex interval_integrand_value(int j, double x, const FormDescriptor& form,
                                 const TwistSpec& spec,
                                 const BranchConfig& cfg);

// Regularized integral of the total derivative d(T_eff * g) over the
// interval cycle; zero in exact arithmetic.  g is a polynomial given by its
// coefficients.
QuadResult quad_total_derivative(int j, const std::vector<Complex>& g,
                                 const TwistSpec& spec, const BranchConfig& cfg,
                                 const QuadratureSpec& q);

struct PeriodMatrix {
    std::vector<std::string> row_labels, col_labels;
    Eigen::MatrixXcd entries;
    Eigen::MatrixXd errors;
    TwistSpec spec;
};

// Periods of cycle classes against forms.  Interval symbols integrate
// directly; eigencycles use the involution characterization (so periods
// against opposite-eigenvalue forms vanish identically); lambda symbols
// reduce through their eigencycle expansions.  ySheetSign = -1 integrates
// on the flipped sheet (negates the f-loaded forms).
PeriodMatrix period_matrix(const std::vector<CycleClass>& cycles,
                           const std::vector<FormDescriptor>& forms,
                           const TwistSpec& spec, const BranchConfig& cfg,
                           const QuadratureSpec& q, int ySheetSign = +1);

// Period of a single cycle class against one form.
QuadResult period_of_class(const CycleClass& cycle, const FormDescriptor& form,
                           const TwistSpec& spec, const BranchConfig& cfg,
                           const QuadratureSpec& q, int ySheetSign = +1);

// Lauricella F_D of three variables by its triple series, with a rigorous
// majorant tail bound.  Throws DivergenceError for |z_i| >= 1 and
// TailBoundError if the bound cannot be met within the term cap.
Complex fd_series(const LauricellaParams& p, const std::array<Complex, 3>& z,
                  double tol = 1e-14, long long max_terms = 10000000);

// Complex gamma function (Lanczos with reflection).
Complex gamma_fn(Complex s);

}  // namespace g2t
