#include "g2t/cohomology.hpp"

#include <cmath>

namespace g2t {

namespace {
const Complex kTwoPiI(0.0, 2.0 * kPi);
}

std::array<FormDescriptor, 4> genus0_forms(const BranchConfig& cfg) {
    cfg.validate();
    const Complex z1 = cfg.z1, z2 = cfg.z2;
    std::array<FormDescriptor, 4> f;
    f[0] = {FormKind::Genus0Log, 1, +1, false, rx_term(1.0, {{1.0, -1}})};
    f[1] = {FormKind::Genus0Log, 2, +1, false,
            rx_term(1.0, {{0.0, -1}, {1.0, -1}})};
    f[2] = {FormKind::Genus0Log, 3, +1, false,
            rx_term(1.0 - z1, {{1.0, -1}, {z1, -1}})};
    f[3] = {FormKind::Genus0Log, 4, +1, false,
            rx_term(1.0 - z2, {{1.0, -1}, {z2, -1}})};
    return f;
}

std::array<FormDescriptor, 8> genus2_forms(const BranchConfig& cfg) {
    const auto g0 = genus0_forms(cfg);
    std::array<FormDescriptor, 8> f;
    for (int i = 0; i < 4; ++i) {
        f[static_cast<size_t>(i)] = g0[static_cast<size_t>(i)];
        f[static_cast<size_t>(i)].kind = FormKind::Genus2;
        FormDescriptor& m = f[static_cast<size_t>(i + 4)];
        m.kind = FormKind::Genus2;
        m.index = i + 5;
        m.iota_eigenvalue = -1;
        m.f_multiplier = true;
        m.base = g0[static_cast<size_t>(i)].base;
    }
    return f;
}

RationalExpr f_squared_on_Y(const BranchConfig& cfg) {
    return rx_term(1.0, {{0.0, 1}, {1.0, 1}, {cfg.z1, -1}, {cfg.z2, -1}, {cfg.z3, -1}});
}

IntersectionMatrix intersect_Y_cohomology(const TwistSpec& spec) {
    validate_admissible(spec.exponents);
    const auto e = spec.effective();
    const std::array<Complex, 4> d = {e[5], e[0], e[1], e[2]};
    IntersectionMatrix m;
    m.entries.resize(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Complex v = 1.0 / (2.0 * e[4]);
            if (i == j) v += 1.0 / (2.0 * d[static_cast<size_t>(i)]);
            m.entries(i, j) = kTwoPiI * v;
        }
    for (int i = 1; i <= 4; ++i) {
        m.row_labels.push_back("phi" + std::to_string(i));
        m.col_labels.push_back("phi" + std::to_string(i));
    }
    m.pairing = spec.f_twist != 0 ? "ch0-f" : "ch0";
    return m;
}

Eigen::Matrix4cd c_block(int eigenvalue, const ExponentVector& v,
                         const BranchConfig& cfg) {
    const auto& c = v.c;
    Eigen::Matrix4cd m;
    if (eigenvalue == +1) {
        const std::array<Complex, 4> d = {c[5], c[0], c[1], c[2]};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Complex x = 1.0 / c[4];
                if (i == j) x += 1.0 / d[static_cast<size_t>(i)];
                m(i, j) = x;
            }
        return m;
    }
    cfg.validate();
    const Complex z1 = cfg.z1, z2 = cfg.z2, z3 = cfg.z3;
    const Complex c1p = 2.0 * c[1] + 0.5, c1m = 2.0 * c[1] - 0.5;
    const Complex c2p = 2.0 * c[2] + 0.5, c2m = 2.0 * c[2] - 0.5;
    const Complex C33 =
        (1.0 - z1) * z1 / (c1m * c1p * (z1 - z3)) *
        ((2.0 * c[0] - 2.0 * c[1]) / z1 + (2.0 * c[2] + 2.0 * c[1]) / (z1 - z2) +
         (2.0 * c[3] + 2.0 * c[1]) / (z1 - z3) +
         (2.0 * c[1] + 2.0 * c[4]) / (z1 - 1.0));
    const Complex C34 = -1.0 / (z1 - z2) *
                        (z1 * (1.0 - z2) / (c1m * (z1 - z3)) +
                         z2 * (1.0 - z1) / (c2p * (z2 - z3)));
    const Complex C43 = -1.0 / (z1 - z2) *
                        (z1 * (1.0 - z2) / (c1p * (z1 - z3)) +
                         z2 * (1.0 - z1) / (c2m * (z2 - z3)));
    const Complex C44 =
        -(1.0 - z2) * z2 / (c2m * c2p * (z2 - z3)) *
        ((2.0 * c[0] - 2.0 * c[2]) / z2 + (2.0 * c[1] + 2.0 * c[2]) / (z2 - z1) +
         (2.0 * c[3] + 2.0 * c[2]) / (z2 - z3) +
         (2.0 * c[2] + 2.0 * c[4]) / (z2 - 1.0));
    m << Complex(0.0), Complex(0.0), -z1 / (c1p * (z1 - z3)), z2 / (c2p * (z2 - z3)),
        Complex(0.0), Complex(0.0), -1.0 / (c1p * (z1 - z3)), 1.0 / (c2p * (z2 - z3)),
        -z1 / (c1m * (z1 - z3)), -1.0 / (c1m * (z1 - z3)), C33, C34,
        z2 / (c2m * (z2 - z3)), 1.0 / (c2m * (z2 - z3)), C43, C44;
    m *= 2.0 / (z1 - z2);
    return m;
}

IntersectionMatrix build_C(const ExponentVector& v, const BranchConfig& cfg) {
    validate_admissible(v);
    cfg.validate();
    IntersectionMatrix m;
    m.entries = Eigen::MatrixXcd::Zero(8, 8);
    m.entries.topLeftCorner(4, 4) = kTwoPiI * c_block(+1, v, cfg);
    m.entries.bottomRightCorner(4, 4) = kTwoPiI * c_block(-1, v, cfg);
    for (int i = 1; i <= 8; ++i) {
        m.row_labels.push_back("phi" + std::to_string(i));
        m.col_labels.push_back("phi" + std::to_string(i));
    }
    m.pairing = "ch";
    return m;
}

Complex det_C1_closed(const ExponentVector& v) {
    return -v[3] / (v[0] * v[1] * v[2] * v[4] * v[5]);
}

Complex det_Cm1_closed(const ExponentVector& v, const BranchConfig& cfg) {
    const Complex z12 = cfg.z1 - cfg.z2, z13 = cfg.z1 - cfg.z3,
                  z23 = cfg.z2 - cfg.z3;
    const Complex c1 = v[1], c2 = v[2];
    return 256.0 / (z12 * z12 * z13 * z13 * z23 * z23 * (4.0 * c1 - 1.0) *
                    (4.0 * c1 + 1.0) * (4.0 * c2 - 1.0) * (4.0 * c2 + 1.0));
}

namespace {

// Local data of the twist at a singular point: the exponent alpha of
// dlog(T_eff) = (alpha/u + sum t_k u^k) du and the analytic tail t_k.
struct LocalTwist {
    Complex alpha;
    std::vector<Complex> tail;
};

LocalTwist local_twist(const TwistSpec& spec, const BranchConfig& cfg, int p,
                       int N) {
    const auto eff = spec.effective();
    const auto pts = cfg.finite_points();
    LocalTwist lt;
    lt.tail.assign(static_cast<size_t>(N + 1), Complex(0.0));
    if (p < 5) {
        const Complex zp = pts[static_cast<size_t>(p)];
        lt.alpha = 2.0 * eff[static_cast<size_t>(p)];
        for (int k = 0; k < 5; ++k) {
            if (k == p) continue;
            // 2 e_k / ((zp - z_k) + u) expanded in u
            const Complex d = zp - pts[static_cast<size_t>(k)];
            Complex c = 2.0 * eff[static_cast<size_t>(k)] / d;
            for (int m = 0; m <= N; ++m) {
                lt.tail[static_cast<size_t>(m)] += c;
                c *= -1.0 / d;
            }
        }
    } else {
        // s = 1/x: dlog T = (-sum_k beta_k)/s ds - sum_k beta_k z_k/(1 - z_k s) ds.
        // The s-exponent equals 2 e_5 by the zero-sum rule; computed directly.
        lt.alpha = 0.0;
        for (int k = 0; k < 5; ++k) lt.alpha -= 2.0 * eff[static_cast<size_t>(k)];
        for (int k = 0; k < 5; ++k) {
            const Complex zk = pts[static_cast<size_t>(k)];
            if (zk == Complex(0.0)) continue;
            Complex c = -2.0 * eff[static_cast<size_t>(k)] * zk;
            for (int m = 0; m <= N; ++m) {
                lt.tail[static_cast<size_t>(m)] += c;
                c *= zk;
            }
        }
    }
    return lt;
}

}  // namespace

Complex residue_intersection(const RationalExpr& phi, const RationalExpr& psi,
                             const TwistSpec& spec, const BranchConfig& cfg,
                             int truncation) {
    validate_admissible(spec.exponents);
    cfg.validate();
    Complex total = 0.0;
    for (int p = 0; p <= 5; ++p) {
        const int N = truncation;
        const LaurentSeries phis = (p < 5)
            ? form_series_at(phi, cfg.finite_points()[static_cast<size_t>(p)], N)
            : form_series_at_infinity(phi, N);
        const LaurentSeries psis = (p < 5)
            ? form_series_at(psi, cfg.finite_points()[static_cast<size_t>(p)], N)
            : form_series_at_infinity(psi, N);
        const LocalTwist lt = local_twist(spec, cfg, p, N);
        if (near_integer(lt.alpha, 1e-8))
            throw ResonanceError("local exponent within 1e-8 of an integer at point " +
                                 std::to_string(p));

        // Solve F' + F (alpha/u + tail) = phi for F = sum f_n u^n:
        //   f_n (n + alpha) = phi_{n-1} - sum_k tail_k f_{n-1-k}
        const int mphi = std::max(0, -phis.order());
        const int mpsi = std::max(0, -psis.order());
        const int lo = 1 - mphi;
        const int hi = mpsi - 1 + 2;  // small buffer; extra terms pair to zero
        std::vector<Complex> F(static_cast<size_t>(hi - lo + 1), Complex(0.0));
        for (int n = lo; n <= hi; ++n) {
            Complex rhs = phis.coefficient(n - 1);
            for (int k = 0; k <= n - 1 - lo; ++k) {
                if (k >= static_cast<int>(lt.tail.size())) break;
                rhs -= lt.tail[static_cast<size_t>(k)] *
                       F[static_cast<size_t>(n - 1 - k - lo)];
            }
            const Complex denom = Complex(static_cast<double>(n)) + lt.alpha;
            if (std::abs(denom) < 1e-8)
                throw ResonanceError("resonant recursion at point " + std::to_string(p));
            F[static_cast<size_t>(n - lo)] = rhs / denom;
        }
        // Res_p(F psi) = sum_n f_n psi_{-1-n}
        Complex res = 0.0;
        for (int n = lo; n <= hi; ++n)
            res += F[static_cast<size_t>(n - lo)] * psis.coefficient(-1 - n);
        total += res;
    }
    return kTwoPiI * total;
}

Complex residue_intersection(const FormDescriptor& phi,
                             const FormDescriptor& psi, const TwistSpec& spec,
                             const BranchConfig& cfg) {
    if (phi.kind != FormKind::Genus0Log || psi.kind != FormKind::Genus0Log)
        throw Error("residue_intersection operates on the genus-0 layer");
    return residue_intersection(phi.base, psi.base, spec, cfg);
}

Eigen::Matrix4cd c_block_minus_residue_oracle(const ExponentVector& v,
                                              const BranchConfig& cfg) {
    // <phi_{4+i}, phi_{4+j}>_ch = 2 <phi_i, f^2 phi_j>_{ch,0,f}; the 2 pi i
    // that build_C carries globally is divided back out.
    const auto forms = genus0_forms(cfg);
    const RationalExpr rho = f_squared_on_Y(cfg);
    const TwistSpec fspec = f_spec(v);
    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const RationalExpr psi = rho * forms[static_cast<size_t>(j)].base;
            m(i, j) = 2.0 *
                      residue_intersection(forms[static_cast<size_t>(i)].base,
                                           psi, fspec, cfg) /
                      kTwoPiI;
        }
    return m;
}

int genus2_form_order(const FormDescriptor& form, int p,
                      const BranchConfig& cfg) {
    const int N = 24;
    const int yexp = form.f_multiplier ? 1 : 0;  // power of 1/y
    if (p < 5) {
        const Complex zp = cfg.finite_points()[static_cast<size_t>(p)];
        // x = zp + u^2: substitute into the rational base, expand in u.
        RationalExpr base = form.base;
        if (form.f_multiplier) {
            // f = x(x-1)/y: fold the numerator x(x-1) into the rational part.
            base = base * rx_term(1.0, {{0.0, 1}, {1.0, 1}});
        }
        // Series of base(zp + u^2): expand in w = x - zp, then w = u^2.
        const LaurentSeries in_w = base.expand_at(zp, N);
        LaurentSeries in_u;
        in_u.lead = 2 * in_w.lead;
        in_u.coef.assign(2 * in_w.coef.size(), Complex(0.0));
        for (size_t k = 0; k < in_w.coef.size(); ++k)
            in_u.coef[2 * k] = in_w.coef[k];
        // dx = 2u du;  y = u * sqrt(prod_{k != p} (zp - z_k + u^2))
        LaurentSeries dx;
        dx.lead = 1;
        dx.coef = {Complex(2.0)};
        LaurentSeries result = series_mul(in_u, dx, N);
        if (yexp) {
            RationalExpr prod = rx_one();
            for (int k = 0; k < 5; ++k) {
                if (k == p) continue;
                prod = prod * rx_term(1.0, {{cfg.finite_points()[static_cast<size_t>(k)], 1}});
            }
            const LaurentSeries pw = prod.expand_at(zp, N);
            LaurentSeries pu;
            pu.lead = 2 * pw.lead;
            pu.coef.assign(2 * pw.coef.size(), Complex(0.0));
            for (size_t k = 0; k < pw.coef.size(); ++k) pu.coef[2 * k] = pw.coef[k];
            LaurentSeries u1;
            u1.lead = 1;
            u1.coef = {Complex(1.0)};
            LaurentSeries yser = series_mul(u1, series_sqrt(pu, N), N);
            result = series_mul(result, series_inverse(yser, N), N);
        }
        return result.order();
    }
    // p = infinity: x = s^{-2}, dx = -2 s^{-3} ds, y = s^{-5} sqrt(prod(1 - z_k s^2)).
    RationalExpr base = form.base;
    if (form.f_multiplier) base = base * rx_term(1.0, {{0.0, 1}, {1.0, 1}});
    const LaurentSeries in_s1 = base.expand_at_infinity(N);  // base(1/s) in s
    LaurentSeries in_s;                                      // substitute s -> s^2
    in_s.lead = 2 * in_s1.lead;
    in_s.coef.assign(2 * in_s1.coef.size(), Complex(0.0));
    for (size_t k = 0; k < in_s1.coef.size(); ++k) in_s.coef[2 * k] = in_s1.coef[k];
    LaurentSeries dx;
    dx.lead = -3;
    dx.coef = {Complex(-2.0)};
    LaurentSeries result = series_mul(in_s, dx, N);
    if (yexp) {
        RationalExpr prod = rx_one();
        for (int k = 0; k < 5; ++k)
            prod = prod * rx_term(1.0, {{cfg.finite_points()[static_cast<size_t>(k)], 1}});
        const LaurentSeries pw1 = prod.expand_at_infinity(N);  // s^{-5} prod(1-z_k s)
        LaurentSeries pw;
        pw.lead = 2 * pw1.lead;
        pw.coef.assign(2 * pw1.coef.size(), Complex(0.0));
        for (size_t k = 0; k < pw1.coef.size(); ++k) pw.coef[2 * k] = pw1.coef[k];
        const LaurentSeries yser = series_sqrt(pw, N);
        result = series_mul(result, series_inverse(yser, N), N);
    }
    return result.order();
}

}  // namespace g2t
