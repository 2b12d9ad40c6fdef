#pragma once

// Differential-form descriptors, the closed-form cohomology intersection
// matrices on Y and X, and an independent residue/Laurent-series
// intersection oracle.

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "g2t/multivalued.hpp"
#include "g2t/rational_expr.hpp"

namespace g2t {

struct IntersectionMatrix {
    Eigen::MatrixXcd entries;
    std::vector<std::string> row_labels, col_labels;
    std::string pairing;  // one of h, ch, h0, ch0, h-f, ch-f, h0-f, ch0-f
};

enum class FormKind { Genus0Log, Genus2 };

// A basis 1-form.  The genus-2 forms phi_{i+4} = f * phi_i carry the same
// rational base as phi_i plus the f multiplier; evaluation at a BranchState
// multiplies in the loaded f.
struct FormDescriptor {
    FormKind kind = FormKind::Genus0Log;
    int index = 1;            // 1..4 on Y, 1..8 on X
    int iota_eigenvalue = 1;  // +1 for phi_1..4, -1 for phi_5..8
    bool f_multiplier = false;
    RationalExpr base;        // coefficient of dx, a rational function of x

    std::string label() const { return "phi" + std::to_string(index); }
    Complex eval_genus0(Complex t) const { return base.eval(t); }
    Complex eval(const BranchState& s, const BranchConfig& cfg) const {
        Complex v = base.eval(s.x);
        if (f_multiplier) v *= s.f(cfg);
        return v;
    }
};

// phi_1 = dt/(t-1), phi_2 = dt/(t(t-1)), phi_3 = (1-z1)dt/((t-1)(t-z1)),
// phi_4 = (1-z2)dt/((t-1)(t-z2)).
std::array<FormDescriptor, 4> genus0_forms(const BranchConfig& cfg);

// Pullbacks phi_1..phi_4 plus phi_5 = x dx/y, phi_6 = dx/y,
// phi_7 = (1-z1) x dx/((x-z1)y), phi_8 = (1-z2) x dx/((x-z2)y).
std::array<FormDescriptor, 8> genus2_forms(const BranchConfig& cfg);

// f^2 as a function on Y: t(t-1)/((t-z1)(t-z2)(t-z3)).
RationalExpr f_squared_on_Y(const BranchConfig& cfg);

// 4x4 closed form (the genus-0 cohomology matrix): 2 pi i * M with
// M_ii = 1/(2 c4) + 1/(2 d_i), M_ij = 1/(2 c4), (d_1..d_4) = (c5,c0,c1,c2),
// in the effective exponents of the spec.
IntersectionMatrix intersect_Y_cohomology(const TwistSpec& spec);

// 8x8 closed form: C = 2 pi i * blockdiag(C(1), C(-1)).
IntersectionMatrix build_C(const ExponentVector& v, const BranchConfig& cfg);

// The 4x4 blocks (without the overall 2 pi i).
Eigen::Matrix4cd c_block(int eigenvalue, const ExponentVector& v,
                         const BranchConfig& cfg);

Complex det_C1_closed(const ExponentVector& v);
Complex det_Cm1_closed(const ExponentVector& v, const BranchConfig& cfg);

// Independent oracle: <phi, psi> = 2 pi i * sum_p Res_p(F_p psi) where F_p
// solves dF + F dlog(T_eff) = phi locally at each singular point.  phi, psi
// are rational coefficient functions of 1-forms on Y.
Complex residue_intersection(const RationalExpr& phi, const RationalExpr& psi,
                             const TwistSpec& spec, const BranchConfig& cfg,
                             int truncation = 12);
Complex residue_intersection(const FormDescriptor& phi,
                             const FormDescriptor& psi, const TwistSpec& spec,
                             const BranchConfig& cfg);

// C(-1) assembled through the residue oracle via the f^2-multiplied genus-0
// pairing with the covering factor 2 (the proof route), without the global
// 2 pi i.
Eigen::Matrix4cd c_block_minus_residue_oracle(const ExponentVector& v,
                                              const BranchConfig& cfg);

// Order of vanishing of a genus-2 basis form at puncture p (0..5; 5 = inf)
// in the local coordinate of the curve (negative = pole).
int genus2_form_order(const FormDescriptor& form, int p,
                      const BranchConfig& cfg);

}  // namespace g2t
