#pragma once

// Symbolic twisted-cycle algebra: the registry of named cycles, the
// eigenvectors of the hyperelliptic involution, change of basis, the
// Mizutani-Watanabe linear relation, and the closed-form homology
// intersection matrices.

#include <map>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "g2t/cohomology.hpp"  // IntersectionMatrix
#include "g2t/params.hpp"

namespace g2t {

enum class CycleSymbol {
    S01, S12, S23, S34, S45,
    L1, L2, L3, L4,
    S01p, S12p, S23p, S34p,
    S01m, S12m, S23m, S34m,
};

std::string cycle_name(CycleSymbol s);

// Formal complex-linear combination of named twisted cycles.  The dual flag
// marks classes living in the dual local system (coefficient formulas then
// use the negated exponents).
struct CycleClass {
    std::map<CycleSymbol, Complex> coeffs;
    bool dual = false;

    static CycleClass unit(CycleSymbol s, bool dual = false);
    CycleClass& add(CycleSymbol s, Complex c);
    Complex coeff(CycleSymbol s) const;
    CycleClass operator+(const CycleClass& o) const;
    CycleClass operator-(const CycleClass& o) const;
    CycleClass scaled(Complex s) const;
    bool near(const CycleClass& o, double tol) const;
};

// Eq.-(2.2)-type matrix in the effective exponents of the spec.
IntersectionMatrix intersect_Y_homology(const TwistSpec& spec);

// The two 4x4 blocks: h_block(+1) is the genus-0 matrix, h_block(-1) is the
// same with e(2c_j) replaced by -e(2c_j).
Eigen::Matrix4cd h_block(int eigenvalue, const ExponentVector& v);

// H = 1/2 * blockdiag(H(1), H(-1)) on the eigencycle basis.
IntersectionMatrix build_H(const ExponentVector& v);

// det of h_block(eigenvalue) in closed form:
// (1 - eps*e(-2c5)) / prod_{j=0..4} (1 - eps*e(2c_j)).
Complex det_H_closed(int eigenvalue, const ExponentVector& v);

// The eight eigencycles expanded over {s_{j,j+1}, l_k}, in the order
// s01+, s12+, s23+, s34+, s01-, s12-, s23-, s34-.
std::array<CycleClass, 8> eigen_basis(const ExponentVector& v);

// Applies the involution pushforward linearly on the registry span.
// Throws UnknownSymbolError on s45 (no formula exists for it).
CycleClass involution_pushforward(const CycleClass& c, const ExponentVector& v);

// Coefficient vector over the eigencycle basis.  Defined on the span of
// {s_{j,j+1}, l_k} plus the eigen symbols themselves; s45 is rejected.
Eigen::Matrix<Complex, 8, 1> expand_in_pm_basis(const CycleClass& c,
                                                const ExponentVector& v);

struct ChangeOfBasis {
    Eigen::MatrixXcd Q;  // (s01..s34, l1..l4) = (eigencycles) * Q
    Complex det_numeric;
    Complex det_closed;  // -2^4 e(4c0 - 7c1 - c2 + c3 - c4)
};
ChangeOfBasis change_of_basis_Q(const ExponentVector& v);

// The generalized linear relation: LHS over l1..l4, RHS over s01..s45.
std::pair<CycleClass, CycleClass> mw_relation(const ExponentVector& v);

// Coefficients K_j (j = 0..3) such that pairing the relation with a form of
// the given eigenvalue yields (1 - e(4c5)) I(s45) = sum_j K_j I(s_{j,j+1});
// the fifth entry returns 1 - e(4c5).
std::array<Complex, 5> mw_corollary_coefficients(int eigenvalue,
                                                 const ExponentVector& v);

}  // namespace g2t
