#include "g2t/homology.hpp"

#include <cmath>

#include "g2t/homology_formulas.hpp"

namespace g2t {

std::string cycle_name(CycleSymbol s) {
    switch (s) {
        case CycleSymbol::S01: return "s01";
        case CycleSymbol::S12: return "s12";
        case CycleSymbol::S23: return "s23";
        case CycleSymbol::S34: return "s34";
        case CycleSymbol::S45: return "s45";
        case CycleSymbol::L1: return "l1";
        case CycleSymbol::L2: return "l2";
        case CycleSymbol::L3: return "l3";
        case CycleSymbol::L4: return "l4";
        case CycleSymbol::S01p: return "s01+";
        case CycleSymbol::S12p: return "s12+";
        case CycleSymbol::S23p: return "s23+";
        case CycleSymbol::S34p: return "s34+";
        case CycleSymbol::S01m: return "s01-";
        case CycleSymbol::S12m: return "s12-";
        case CycleSymbol::S23m: return "s23-";
        case CycleSymbol::S34m: return "s34-";
    }
    return "?";
}

CycleClass CycleClass::unit(CycleSymbol s, bool dual) {
    CycleClass c;
    c.dual = dual;
    c.coeffs[s] = 1.0;
    return c;
}

CycleClass& CycleClass::add(CycleSymbol s, Complex c) {
    coeffs[s] += c;
    return *this;
}

Complex CycleClass::coeff(CycleSymbol s) const {
    auto it = coeffs.find(s);
    return it == coeffs.end() ? Complex(0.0) : it->second;
}

CycleClass CycleClass::operator+(const CycleClass& o) const {
    CycleClass r = *this;
    for (const auto& [s, c] : o.coeffs) r.coeffs[s] += c;
    return r;
}

CycleClass CycleClass::operator-(const CycleClass& o) const {
    CycleClass r = *this;
    for (const auto& [s, c] : o.coeffs) r.coeffs[s] -= c;
    return r;
}

CycleClass CycleClass::scaled(Complex s) const {
    CycleClass r = *this;
    for (auto& [sym, c] : r.coeffs) c *= s;
    return r;
}

bool CycleClass::near(const CycleClass& o, double tol) const {
    CycleClass d = *this - o;
    for (const auto& [s, c] : d.coeffs)
        if (std::abs(c) > tol) return false;
    return true;
}

namespace {

// The exponent vector the coefficient formulas should use: dual classes see
// the negated exponents.
ExponentVector formula_exponents(const ExponentVector& v, bool dual) {
    if (!dual) return v;
    ExponentVector w = v;
    for (auto& c : w.c) c = -c;
    w.tag = ExponentTag::Dual;
    return w;
}

constexpr std::array<CycleSymbol, 8> kGeometric = {
    CycleSymbol::S01, CycleSymbol::S12, CycleSymbol::S23, CycleSymbol::S34,
    CycleSymbol::L1,  CycleSymbol::L2,  CycleSymbol::L3,  CycleSymbol::L4,
};
constexpr std::array<CycleSymbol, 8> kEigen = {
    CycleSymbol::S01p, CycleSymbol::S12p, CycleSymbol::S23p, CycleSymbol::S34p,
    CycleSymbol::S01m, CycleSymbol::S12m, CycleSymbol::S23m, CycleSymbol::S34m,
};

int geometric_index(CycleSymbol s) {
    for (int i = 0; i < 8; ++i)
        if (kGeometric[static_cast<size_t>(i)] == s) return i;
    return -1;
}

int eigen_index(CycleSymbol s) {
    for (int i = 0; i < 8; ++i)
        if (kEigen[static_cast<size_t>(i)] == s) return i;
    return -1;
}

Eigen::MatrixXcd to_eigen(const Mat8<Complex>& m) {
    Eigen::MatrixXcd r(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            r(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return r;
}

}  // namespace

Eigen::Matrix4cd h_block(int eigenvalue, const ExponentVector& v) {
    const double eps = (eigenvalue == +1) ? 1.0 : -1.0;
    std::array<Complex, 5> e{};
    for (int j = 0; j < 5; ++j) e[static_cast<size_t>(j)] = eps * unit_phase(2.0 * v[j]);
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    for (int r = 0; r < 4; ++r) {
        const Complex ej = e[static_cast<size_t>(r)], ej1 = e[static_cast<size_t>(r + 1)];
        m(r, r) = (1.0 - ej * ej1) / ((1.0 - ej) * (1.0 - ej1));
        if (r + 1 < 4) {
            m(r, r + 1) = 1.0 / (1.0 - ej1);
            m(r + 1, r) = ej1 / (1.0 - ej1);
        }
    }
    return m;
}

IntersectionMatrix intersect_Y_homology(const TwistSpec& spec) {
    validate_admissible(spec.exponents);
    const auto eff = spec.effective();
    ExponentVector veff;
    for (int j = 0; j < 6; ++j) veff.c[static_cast<size_t>(j)] = eff[static_cast<size_t>(j)];
    IntersectionMatrix m;
    m.entries = h_block(+1, veff);
    for (int j = 0; j < 4; ++j) {
        const std::string name = "s" + std::to_string(j) + std::to_string(j + 1);
        m.row_labels.push_back(name);
        m.col_labels.push_back(name);
    }
    m.pairing = spec.f_twist != 0 ? "h0-f" : "h0";
    return m;
}

IntersectionMatrix build_H(const ExponentVector& v) {
    validate_admissible(v);
    IntersectionMatrix m;
    m.entries = Eigen::MatrixXcd::Zero(8, 8);
    m.entries.topLeftCorner(4, 4) = 0.5 * h_block(+1, v);
    m.entries.bottomRightCorner(4, 4) = 0.5 * h_block(-1, v);
    for (int i = 0; i < 8; ++i) {
        m.row_labels.push_back(cycle_name(kEigen[static_cast<size_t>(i)]));
        m.col_labels.push_back(cycle_name(kEigen[static_cast<size_t>(i)]));
    }
    m.pairing = "h";
    return m;
}

Complex det_H_closed(int eigenvalue, const ExponentVector& v) {
    const double eps = (eigenvalue == +1) ? 1.0 : -1.0;
    Complex num = 1.0 - eps * unit_phase(-2.0 * v[5]);
    Complex den = 1.0;
    for (int j = 0; j < 5; ++j) den *= 1.0 - eps * unit_phase(2.0 * v[j]);
    return num / den;
}

std::array<CycleClass, 8> eigen_basis(const ExponentVector& v) {
    validate_admissible(v);
    CycleFormulas<NumericPhaseRing> F{NumericPhaseRing{v}};
    const Mat8<Complex> p = F.P();
    std::array<CycleClass, 8> basis;
    for (int col = 0; col < 8; ++col) {
        CycleClass c;
        for (int row = 0; row < 8; ++row) {
            const Complex a = p[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (std::abs(a) > 0.0)
                c.add(kGeometric[static_cast<size_t>(row)], a);
        }
        basis[static_cast<size_t>(col)] = c;
    }
    return basis;
}

CycleClass involution_pushforward(const CycleClass& c, const ExponentVector& v) {
    const ExponentVector w = formula_exponents(v, c.dual);
    CycleFormulas<NumericPhaseRing> F{NumericPhaseRing{w}};
    const Mat8<Complex> m = F.involution_geometric();
    CycleClass out;
    out.dual = c.dual;
    for (const auto& [sym, a] : c.coeffs) {
        if (std::abs(a) == 0.0) continue;
        if (sym == CycleSymbol::S45)
            throw UnknownSymbolError("no involution formula for s45");
        const int gi = geometric_index(sym);
        if (gi >= 0) {
            for (int row = 0; row < 8; ++row) {
                const Complex x = m[static_cast<size_t>(row)][static_cast<size_t>(gi)] * a;
                if (x != Complex(0.0)) out.add(kGeometric[static_cast<size_t>(row)], x);
            }
            continue;
        }
        const int ei = eigen_index(sym);
        if (ei < 0) throw UnknownSymbolError("unknown cycle symbol");
        out.add(sym, (ei < 4 ? a : -a));
    }
    return out;
}

Eigen::Matrix<Complex, 8, 1> expand_in_pm_basis(const CycleClass& c,
                                                const ExponentVector& v) {
    const ExponentVector w = formula_exponents(v, c.dual);
    CycleFormulas<NumericPhaseRing> F{NumericPhaseRing{w}};
    const Mat8<Complex> q = F.Q();
    Eigen::Matrix<Complex, 8, 1> out = Eigen::Matrix<Complex, 8, 1>::Zero();
    for (const auto& [sym, a] : c.coeffs) {
        if (std::abs(a) == 0.0) continue;
        if (sym == CycleSymbol::S45)
            throw UnknownSymbolError("s45 is not in the eigencycle span");
        const int gi = geometric_index(sym);
        if (gi >= 0) {
            for (int row = 0; row < 8; ++row)
                out(row) += q[static_cast<size_t>(row)][static_cast<size_t>(gi)] * a;
            continue;
        }
        const int ei = eigen_index(sym);
        if (ei < 0) throw UnknownSymbolError("unknown cycle symbol");
        out(ei) += a;
    }
    return out;
}

ChangeOfBasis change_of_basis_Q(const ExponentVector& v) {
    validate_admissible(v);
    CycleFormulas<NumericPhaseRing> F{NumericPhaseRing{v}};
    ChangeOfBasis cb;
    cb.Q = to_eigen(F.Q());
    cb.det_numeric = cb.Q.determinant();
    cb.det_closed =
        -16.0 * unit_phase(4.0 * v[0] - 7.0 * v[1] - v[2] + v[3] - v[4]);
    return cb;
}

std::pair<CycleClass, CycleClass> mw_relation(const ExponentVector& v) {
    validate_admissible(v);
    CycleFormulas<NumericPhaseRing> F{NumericPhaseRing{v}};
    const auto L = F.mw_lambda_coefficients();
    const auto R = F.mw_sigma_coefficients();
    CycleClass lhs, rhs;
    lhs.add(CycleSymbol::L1, L[0]);
    lhs.add(CycleSymbol::L2, L[1]);
    lhs.add(CycleSymbol::L3, L[2]);
    lhs.add(CycleSymbol::L4, L[3]);
    rhs.add(CycleSymbol::S01, R[0]);
    rhs.add(CycleSymbol::S12, R[1]);
    rhs.add(CycleSymbol::S23, R[2]);
    rhs.add(CycleSymbol::S34, R[3]);
    rhs.add(CycleSymbol::S45, R[4]);
    return {lhs, rhs};
}

std::array<Complex, 5> mw_corollary_coefficients(int eigenvalue,
                                                 const ExponentVector& v) {
    CycleFormulas<NumericPhaseRing> F{NumericPhaseRing{v}};
    const auto K = F.corollary_coefficients(eigenvalue);
    const auto R = F.mw_sigma_coefficients();
    return {K[0], K[1], K[2], K[3], R[4]};
}

}  // namespace g2t
