#include "g2t/periods.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "g2t/homology_formulas.hpp"

namespace g2t {

// ---------------------------------------------------------------------------
// gamma function (Lanczos, g = 607/128, 15 terms; reflection for Re s < 1/2)

Complex gamma_fn(Complex s) {
    static const double g = 607.0 / 128.0;
    static const double coef[15] = {
        0.99999999999999709182,     57.156235665862923517,
        -59.597960355475491248,     14.136097974741747174,
        -0.49191381609762019978,    0.33994649984811888699e-4,
        0.46523628927048575665e-4,  -0.98374475304879564677e-4,
        0.15808870322491248884e-3,  -0.21026444172410488319e-3,
        0.21743961811521264320e-3,  -0.16431810653676389022e-3,
        0.84418223983852743293e-4,  -0.26190838401581408670e-4,
        0.36899182659531622704e-5};

    if (near_integer(s, 1e-14) && s.real() < 0.5)
        throw PoleError("gamma_fn at a non-positive integer");

    if (s.real() < 0.5) {
        // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return kPi / (std::sin(kPi * s) * gamma_fn(1.0 - s));
    }
    const Complex z = s - 1.0;
    Complex sum = coef[0];
    for (int k = 1; k < 15; ++k) sum += coef[k] / (z + static_cast<double>(k));
    const Complex t = z + g + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

// ---------------------------------------------------------------------------
// Lauricella F_D triple series with a rigorous majorant tail bound

Complex fd_series(const LauricellaParams& p, const std::array<Complex, 3>& z,
                  double tol, long long max_terms) {
    double zmax = 0.0;
    for (const auto& zi : z) zmax = std::max(zmax, std::abs(zi));
    if (zmax >= 1.0)
        throw DivergenceError("fd_series requires |z_i| < 1");
    if (near_integer(p.c, 1e-14) && p.c.real() < 0.5)
        throw Error("fd_series: c is a non-positive integer");

    const Complex a = p.a, c = p.c;
    const std::array<Complex, 3> b = {p.b1, p.b2, p.b3};

    // Majorant: |term| <= (A)_N (B1+B2+B3)_N zmax^N / (Chat_N N!) where
    // A = max(|a|,1), B_i = max(|b_i|,1) and Chat_N = prod |c+k| >= prod of
    // the actual denominators.  The inner multinomial sum collapses by the
    // Vandermonde identity, so the majorant level sums w_N obey a two-term
    // recurrence and the tail is glued geometrically.
    const double A = std::max(std::abs(a), 1.0);
    const double Bsum = std::max(std::abs(b[0]), 1.0) +
                        std::max(std::abs(b[1]), 1.0) +
                        std::max(std::abs(b[2]), 1.0);

    const int NMAX = 4000;
    std::vector<Complex> g(static_cast<size_t>(NMAX) + 1);  // (a)_N / (c)_N
    g[0] = 1.0;

    Complex total = 0.0;
    long long used = 0;
    double wN = 1.0;  // majorant of the level-N sum of |terms|

    // per-axis weights w_i[k] = (b_i)_k z_i^k / k!
    std::array<std::vector<Complex>, 3> wv;
    for (auto& v : wv) v.assign(static_cast<size_t>(NMAX) + 1, Complex(0.0));
    for (auto& v : wv) v[0] = 1.0;

    const double cabs = std::abs(c);
    for (int N = 0; N <= NMAX; ++N) {
        if (N > 0) {
            const double dN = static_cast<double>(N);
            g[static_cast<size_t>(N)] = g[static_cast<size_t>(N - 1)] *
                                        (a + (dN - 1.0)) / (c + (dN - 1.0));
            for (int i = 0; i < 3; ++i)
                wv[static_cast<size_t>(i)][static_cast<size_t>(N)] =
                    wv[static_cast<size_t>(i)][static_cast<size_t>(N - 1)] *
                    (b[static_cast<size_t>(i)] + (dN - 1.0)) * z[static_cast<size_t>(i)] / dN;
            const double dM = dN - 1.0;
            wN *= zmax * (A + dM) * (Bsum + dM) /
                  (std::max(dM + 1.0 - cabs, 0.5) * (dM + 1.0));
        }
        Complex level = 0.0;
        for (int m = 0; m <= N; ++m)
            for (int n = 0; n <= N - m; ++n) {
                const int q = N - m - n;
                level += g[static_cast<size_t>(N)] * wv[0][static_cast<size_t>(m)] *
                         wv[1][static_cast<size_t>(n)] * wv[2][static_cast<size_t>(q)];
                ++used;
                if (used > max_terms)
                    throw TailBoundError("fd_series exceeded the term cap");
            }
        total += level;

        // Level ratios beyond N are bounded by the decreasing majorant
        // Q_k = zmax (1 + A/k)(1 + Bsum/k)/(1 - cabs/k); once Q < 1 the tail
        // is geometric.
        const double k = static_cast<double>(N + 1);
        if (k > 2.0 * cabs + 2.0) {
            const double Q = zmax * (1.0 + A / k) * (1.0 + Bsum / k) /
                             (1.0 - cabs / k);
            const double wNext = wN * zmax * (A + k - 1.0) * (Bsum + k - 1.0) /
                                 (std::max(k - cabs, 0.5) * k);
            if (Q < 1.0) {
                const double tail = wNext / (1.0 - Q);
                if (tail <= tol * std::max(1.0, std::abs(total))) return total;
            }
        }
    }
    throw TailBoundError("fd_series tail bound not reached before N = 4000");
}

// ---------------------------------------------------------------------------
// Interval integrand machinery

namespace {

// One branched linear factor on the integration interval:
//   value(x) = scale * base(x)^gamma,   base(x) = x - root or root - x,
// with the principal power; base > 0 on the open interval.
template <class R>
struct BFac {
    R root;
    std::complex<R> gamma;
    bool base_right;  // base = root - x
    std::complex<R> scale;
};

template <class R>
struct ITerm {
    std::complex<R> coeff;
    std::vector<BFac<R>> factors;
};

template <class R>
struct Integrand {
    R a = 0, b = 0;
    std::vector<ITerm<R>> terms;
};

template <class R>
std::complex<R> term_value(const ITerm<R>& t, R x) {
    std::complex<R> v = t.coeff;
    for (const auto& f : t.factors) {
        const R base = f.base_right ? f.root - x : x - f.root;
        v *= f.scale * std::exp(f.gamma * std::log(std::complex<R>(base)));
    }
    return v;
}

template <class R>
std::complex<R> integrand_value(const Integrand<R>& ig, R x) {
    std::complex<R> v = 0;
    for (const auto& t : ig.terms) v += term_value(t, x);
    return v;
}

// Endpoint exponent of a term (sum of gammas rooted at the endpoint).
template <class R>
std::complex<R> term_alpha(const ITerm<R>& t, R p) {
    std::complex<R> alpha = 0;
    for (const auto& f : t.factors)
        if (std::abs(f.root - p) < R(1e-14)) alpha += f.gamma;
    return alpha;
}

// G(u) = term / u^alpha continued to complex u near the endpoint; left is
// x = p + u, right is x = p - u.
template <class R>
std::complex<R> term_G(const ITerm<R>& t, R p, bool left, std::complex<R> u) {
    const std::complex<R> x = left ? std::complex<R>(p) + u : std::complex<R>(p) - u;
    std::complex<R> v = t.coeff;
    for (const auto& f : t.factors) {
        v *= f.scale;
        if (std::abs(f.root - p) < R(1e-14)) continue;  // the u^alpha part
        const std::complex<R> base =
            f.base_right ? std::complex<R>(f.root) - x : x - std::complex<R>(f.root);
        v *= std::exp(f.gamma * std::log(base));
    }
    return v;
}

// distance from endpoint p to the nearest other factor root of any term
template <class R>
R endpoint_radius(const Integrand<R>& ig, R p) {
    R rho = std::abs(ig.b - ig.a);
    for (const auto& t : ig.terms)
        for (const auto& f : t.factors)
            if (std::abs(f.root - p) >= R(1e-14))
                rho = std::min(rho, std::abs(f.root - p));
    return rho;
}

// --- adaptive Gauss-Kronrod (G7K15) ---------------------------------------

template <class R>
struct GKSegment {
    R a, b;
    std::complex<R> integral;
    R err;
};

template <class R, class F>
GKSegment<R> gk15(const F& f, R a, R b) {
    static const double xgk[8] = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.0};
    static const double wgk[8] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static const double wg[4] = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

    const R mid = (a + b) / R(2), h = (b - a) / R(2);
    std::complex<R> ik = 0, ig = 0;
    for (int i = 0; i < 8; ++i) {
        const R dx = h * R(xgk[i]);
        const std::complex<R> fl = f(mid - dx);
        const std::complex<R> fr = (i == 7) ? fl : f(mid + dx);
        const std::complex<R> fsum = (i == 7) ? fl : fl + fr;
        ik += R(wgk[i]) * fsum;
        if (i % 2 == 1) ig += R(wg[i / 2]) * fsum;
    }
    ik *= h;
    ig *= h;
    GKSegment<R> s;
    s.a = a;
    s.b = b;
    s.integral = ik;
    const R diff = std::abs(ik - ig);
    s.err = diff;
    return s;
}

template <class R, class F>
std::pair<std::complex<R>, R> adaptive_gk(const F& f, R a, R b, R tol_abs,
                                          int max_segments) {
    if (!(a < b)) return {std::complex<R>(0), R(0)};
    std::vector<GKSegment<R>> segs;
    segs.push_back(gk15(f, a, b));
    for (int iter = 0; iter < max_segments; ++iter) {
        R total_err = 0, total_mag = 0;
        size_t worst = 0;
        R worst_err = -1;
        for (size_t i = 0; i < segs.size(); ++i) {
            total_err += segs[i].err;
            total_mag += std::abs(segs[i].integral);
            if (segs[i].err > worst_err) {
                worst_err = segs[i].err;
                worst = i;
            }
        }
        if (total_err <= tol_abs) break;
        if (worst_err <= R(8) * std::numeric_limits<R>::epsilon() * total_mag)
            break;  // roundoff floor
        const GKSegment<R> s = segs[worst];
        if (std::abs(s.b - s.a) < R(1e-14) * std::abs(b - a)) break;
        const R mid = (s.a + s.b) / R(2);
        segs[worst] = gk15(f, s.a, mid);
        segs.push_back(gk15(f, mid, s.b));
    }
    std::complex<R> total = 0;
    R err = 0;
    for (const auto& s : segs) {
        total += s.integral;
        err += s.err;
    }
    return {total, err};
}

// --- endpoint series -------------------------------------------------------

// Taylor coefficients of G at the endpoint via sampling on a circle.
template <class R>
std::vector<std::complex<R>> taylor_G(const ITerm<R>& t, R p, bool left,
                                      R radius, int K) {
    const int M = 64;
    std::vector<std::complex<R>> samples(M);
    for (int m = 0; m < M; ++m) {
        const R th = R(2) * R(kPi) * R(m) / R(M);
        samples[static_cast<size_t>(m)] =
            term_G(t, p, left, std::complex<R>(radius * std::cos(th), radius * std::sin(th)));
    }
    std::vector<std::complex<R>> coef(static_cast<size_t>(K));
    for (int k = 0; k < K; ++k) {
        std::complex<R> s = 0;
        for (int m = 0; m < M; ++m) {
            const R th = -R(2) * R(kPi) * R(k) * R(m) / R(M);
            s += samples[static_cast<size_t>(m)] * std::complex<R>(std::cos(th), std::sin(th));
        }
        coef[static_cast<size_t>(k)] = s / (R(M) * std::pow(radius, R(k)));
    }
    return coef;
}

// Regularized integral over (p, p + delta] (left) or [p - delta, p) (right)
// of the term: sum_k g_k delta^{alpha+k+1} / (alpha+k+1).
template <class R>
std::pair<std::complex<R>, R> endpoint_series_value(const ITerm<R>& t, R p,
                                                    bool left, R rho, R delta,
                                                    double rel_tol) {
    const std::complex<R> alpha = term_alpha(t, p);
    {
        // resonance guard: alpha + k + 1 = 0 breaks the continuation
        const double ar = static_cast<double>(alpha.real());
        const double ai = static_cast<double>(alpha.imag());
        if (std::abs(ai) < 1e-8 && std::abs(ar - std::round(ar)) < 1e-8)
            throw ResonanceError("endpoint exponent within 1e-8 of an integer");
    }
    (void)rel_tol;
    const int K = 44;
    const R radius = R(0.5) * rho;
    const auto g = taylor_G(t, p, left, radius, K);
    std::complex<R> sum = 0;
    R last_mag = 0, big_mag = 0;
    const std::complex<R> logd = std::log(std::complex<R>(delta));
    for (int k = 0; k < K; ++k) {
        const std::complex<R> ak1 = alpha + R(k + 1);
        if (std::abs(ak1) < R(1e-8))
            throw ResonanceError("resonant continued moment");
        const std::complex<R> term =
            g[static_cast<size_t>(k)] * std::exp(ak1 * logd) / ak1;
        sum += term;
        last_mag = std::abs(term);
        big_mag = std::max(big_mag, std::abs(term));
    }
    // Terms decay like (delta/radius)^k; bound the tail geometrically from
    // the last computed term, plus a roundoff floor.
    const R ratio = delta / radius;
    const R tail = last_mag * ratio / (R(1) - ratio);
    const R round_err =
        big_mag * R(K) * std::numeric_limits<R>::epsilon() * R(8);
    return {sum, tail + round_err};
}

// --- builder ---------------------------------------------------------------

// effective c-exponents of the loaded section for this form (the f-factor
// of phi_{i+4} shifts the exponents by one f-twist).
std::array<Complex, 6> section_exponents(const FormDescriptor& form,
                                         const TwistSpec& spec) {
    auto e = spec.effective();
    if (form.f_multiplier)
        for (int j = 0; j < 6; ++j) e[static_cast<size_t>(j)] += kFShift[static_cast<size_t>(j)];
    return e;
}

Integrand<double> build_integrand(int j, const RationalExpr& base,
                                  const std::array<Complex, 6>& eff,
                                  const BranchConfig& cfg) {
    if (!cfg.real_ordered())
        throw ConfigError("interval quadrature requires a real-ordered configuration");
    if (j < 0 || j > 4) throw Error("interval index out of range");
    const auto pts = cfg.finite_points();
    std::array<double, 5> zr{};
    for (int k = 0; k < 5; ++k) zr[static_cast<size_t>(k)] = pts[static_cast<size_t>(k)].real();

    Integrand<double> ig;
    if (j < 4) {
        ig.a = zr[static_cast<size_t>(j)];
        ig.b = zr[static_cast<size_t>(j + 1)];
    } else {
        ig.a = 0.0;  // s-coordinate, x = 1/s
        ig.b = 1.0;
    }

    for (const auto& term : base.terms) {
        ITerm<double> t;
        t.coeff = term.coeff;
        // gather the exponent at each special point: 2 e_k plus the integer
        // order of the rational term
        std::array<Complex, 5> gam{};
        for (int k = 0; k < 5; ++k)
            gam[static_cast<size_t>(k)] = 2.0 * eff[static_cast<size_t>(k)] +
                                          Complex(static_cast<double>(
                                              term.order_at(pts[static_cast<size_t>(k)])));
        // any factor not rooted at a special point is unsupported here
        for (const auto& f : term.factors) {
            bool known = false;
            for (int k = 0; k < 5; ++k)
                if (std::abs(f.root - pts[static_cast<size_t>(k)]) < 1e-13) known = true;
            if (!known)
                throw Error("interval integrand has a factor off the branch locus");
        }
        if (j < 4) {
            for (int k = 0; k < 5; ++k) {
                BFac<double> f;
                f.root = zr[static_cast<size_t>(k)];
                f.gamma = gam[static_cast<size_t>(k)];
                f.base_right = (k > j);
                f.scale = f.base_right
                              ? std::exp(Complex(0.0, -kPi) * gam[static_cast<size_t>(k)])
                              : Complex(1.0);
                t.factors.push_back(f);
            }
        } else {
            // x = 1/s on (0,1): (x - z_k)^g = z_k^g (1/z_k - s)^g s^{-g} for
            // z_k > 0 and s^{-g} alone for z_k = 0; dx brings s^{-2}.
            Complex spow = -2.0;
            for (int k = 0; k < 5; ++k) {
                spow -= gam[static_cast<size_t>(k)];
                if (zr[static_cast<size_t>(k)] == 0.0) continue;
                BFac<double> f;
                f.root = 1.0 / zr[static_cast<size_t>(k)];
                f.gamma = gam[static_cast<size_t>(k)];
                f.base_right = true;
                f.scale = std::pow(Complex(zr[static_cast<size_t>(k)]), gam[static_cast<size_t>(k)]);
                t.factors.push_back(f);
            }
            BFac<double> f0;
            f0.root = 0.0;
            f0.gamma = spow;
            f0.base_right = false;
            f0.scale = 1.0;
            t.factors.push_back(f0);
        }
        ig.terms.push_back(std::move(t));
    }
    return ig;
}

template <class R>
Integrand<R> cast_integrand(const Integrand<double>& in) {
    Integrand<R> out;
    out.a = R(in.a);
    out.b = R(in.b);
    for (const auto& t : in.terms) {
        ITerm<R> ot;
        ot.coeff = std::complex<R>(t.coeff.real(), t.coeff.imag());
        for (const auto& f : t.factors)
            ot.factors.push_back(BFac<R>{R(f.root),
                                         std::complex<R>(f.gamma.real(), f.gamma.imag()),
                                         f.base_right,
                                         std::complex<R>(f.scale.real(), f.scale.imag())});
        out.terms.push_back(std::move(ot));
    }
    return out;
}

// --- the three integration strategies --------------------------------------

template <class R>
QuadResult run_endpoint_series(const Integrand<R>& ig, const QuadratureSpec& q) {
    if (ig.terms.empty()) return {};
    const R len = ig.b - ig.a;
    const R rho_a = endpoint_radius(ig, ig.a);
    const R rho_b = endpoint_radius(ig, ig.b);
    R delta_a = std::min(R(q.delta_fraction) * rho_a, R(0.35) * len);
    R delta_b = std::min(R(q.delta_fraction) * rho_b, R(0.35) * len);

    std::complex<R> total = 0;
    R err = 0;
    for (const auto& t : ig.terms) {
        const auto [va, ea] =
            endpoint_series_value(t, ig.a, true, rho_a, delta_a, q.rel_tol);
        const auto [vb, eb] =
            endpoint_series_value(t, ig.b, false, rho_b, delta_b, q.rel_tol);
        total += va + vb;
        err += ea + eb;
    }
    auto f = [&](R x) { return integrand_value(ig, x); };
    // absolute budget from a coarse scale probe
    const R mid = (ig.a + ig.b) / R(2);
    const R scale = std::max(std::abs(total), std::abs(f(mid)) * len) + R(1e-300);
    const auto [vc, ec] = adaptive_gk(f, ig.a + delta_a, ig.b - delta_b,
                                      R(q.rel_tol) * scale,
                                      std::max(64, q.max_nodes / 30));
    total += vc;
    err += ec;
    return {Complex(static_cast<double>(total.real()), static_cast<double>(total.imag())),
            static_cast<double>(err)};
}

template <class R>
QuadResult run_circle_oracle(const Integrand<R>& ig, const QuadratureSpec& q) {
    if (ig.terms.empty()) return {};
    const R len = ig.b - ig.a;
    const R rho_a = endpoint_radius(ig, ig.a);
    const R rho_b = endpoint_radius(ig, ig.b);
    const R eps_a = std::min(R(q.delta_fraction) * rho_a, R(0.35) * len);
    const R eps_b = std::min(R(q.delta_fraction) * rho_b, R(0.35) * len);

    std::complex<R> total = 0;
    R err = 0;
    for (const auto& t : ig.terms) {
        for (int side = 0; side < 2; ++side) {
            const bool left = side == 0;
            const R p = left ? ig.a : ig.b;
            const R eps = left ? eps_a : eps_b;
            const std::complex<R> alpha = term_alpha(t, p);
            const std::complex<R> d =
                std::exp(std::complex<R>(0, 2) * R(kPi) * alpha);
            if (std::abs(d - std::complex<R>(1)) < R(1e-8))
                throw ResonanceError("loop correction undefined at integral exponent");
            // circle integral of u^alpha G(u) du, u = eps e^{i theta}
            auto fc = [&](R th) {
                const std::complex<R> u =
                    eps * std::complex<R>(std::cos(th), std::sin(th));
                const std::complex<R> ua =
                    std::exp(alpha * (std::log(eps) + std::complex<R>(0, 1) * th));
                const std::complex<R> du =
                    std::complex<R>(0, 1) * u;  // du/dtheta
                return ua * term_G(t, p, left, u) * du;
            };
            const R scale_guess =
                std::abs(term_G(t, p, left, std::complex<R>(eps))) *
                    std::pow(eps, alpha.real() + R(1)) * R(8) + R(1e-300);
            const auto [ci, ce] = adaptive_gk(fc, R(0), R(2) * R(kPi),
                                              R(q.rel_tol) * scale_guess, 4096);
            total += ci / (d - std::complex<R>(1));
            err += ce / std::abs(d - std::complex<R>(1));
        }
    }
    auto f = [&](R x) { return integrand_value(ig, x); };
    const R scale = std::abs(total) + R(1);
    const auto [vc, ec] = adaptive_gk(f, ig.a + eps_a, ig.b - eps_b,
                                      R(q.rel_tol) * scale,
                                      std::max(64, q.max_nodes / 30));
    total += vc;
    err += ec;
    return {Complex(static_cast<double>(total.real()), static_cast<double>(total.imag())),
            static_cast<double>(err)};
}

// Gauss-Jacobi nodes and weights for weight (1-x)^a (1+x)^b on (-1, 1).
void gauss_jacobi_rule(int n, double a, double b, std::vector<double>& nodes,
                       std::vector<double>& weights) {
    Eigen::VectorXd diag(n), sub(n - 1 > 0 ? n - 1 : 0);
    const double ab = a + b;
    for (int k = 0; k < n; ++k) {
        if (k == 0)
            diag(k) = (b - a) / (ab + 2.0);
        else
            diag(k) = (b * b - a * a) /
                      ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double bk;
        if (k == 1)
            bk = 4.0 * (1.0 + a) * (1.0 + b) /
                 ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        else
            bk = 4.0 * k * (k + a) * (k + b) * (k + ab) /
                 ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) *
                  (2.0 * k + ab - 1.0));
        sub(k - 1) = std::sqrt(bk);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const double mu0 = std::pow(2.0, ab + 1.0) *
                       (gamma_fn(a + 1.0) * gamma_fn(b + 1.0) / gamma_fn(ab + 2.0))
                           .real();
    nodes.resize(static_cast<size_t>(n));
    weights.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        nodes[static_cast<size_t>(k)] = es.eigenvalues()(k);
        const double v = es.eigenvectors()(0, k);
        weights[static_cast<size_t>(k)] = mu0 * v * v;
    }
}

QuadResult run_gauss_jacobi(const Integrand<double>& ig,
                            const QuadratureSpec& q) {
    if (ig.terms.empty()) return {};
    Complex total = 0.0;
    double err = 0.0;
    const double m = 0.5 * (ig.a + ig.b), h = 0.5 * (ig.b - ig.a);
    for (const auto& t : ig.terms) {
        const Complex alpha_l = term_alpha(t, ig.a);
        const Complex alpha_r = term_alpha(t, ig.b);
        if (std::abs(alpha_l.imag()) > 1e-12 || std::abs(alpha_r.imag()) > 1e-12)
            throw Error("gauss-jacobi oracle requires real endpoint exponents");
        const double al = alpha_l.real(), ar = alpha_r.real();
        if (al <= -1.0 || ar <= -1.0)
            throw DivergenceError("gauss-jacobi oracle requires Re(alpha) > -1");
        // smooth part: the full product with endpoint-rooted factors reduced
        // to their constant scales (their u^gamma went into the weight)
        auto smooth = [&](double x) {
            std::complex<double> v = t.coeff;
            for (const auto& f : t.factors) {
                v *= f.scale;
                if (std::abs(f.root - ig.a) < 1e-14 ||
                    std::abs(f.root - ig.b) < 1e-14)
                    continue;
                const double base = f.base_right ? f.root - x : x - f.root;
                v *= std::exp(f.gamma * std::log(Complex(base)));
            }
            return v;
        };
        Complex prev = 0.0, accepted = 0.0;
        double term_err = 0.0;
        bool have_prev = false, done = false;
        for (int n = 24; n <= 768 && !done; n *= 2) {
            std::vector<double> xs, ws;
            gauss_jacobi_rule(n, ar, al, xs, ws);  // (1-xi)^ar (1+xi)^al
            Complex s = 0.0;
            for (int k = 0; k < n; ++k)
                s += ws[static_cast<size_t>(k)] * smooth(m + h * xs[static_cast<size_t>(k)]);
            s *= std::pow(h, al + ar + 1.0);
            if (have_prev &&
                std::abs(s - prev) <= q.rel_tol * std::max(1.0, std::abs(s)) * 10.0) {
                accepted = s;
                term_err = std::abs(s - prev);
                done = true;
            }
            prev = s;
            have_prev = true;
        }
        if (!done) {
            accepted = prev;
            term_err = std::abs(prev) * 1e-10;
        }
        total += accepted;
        err += term_err;
    }
    return {total, err};
}

}  // namespace

// ---------------------------------------------------------------------------
// public quadrature entry points

QuadResult quad_regularized_interval(int j, const FormDescriptor& form,
                                     const TwistSpec& spec,
                                     const BranchConfig& cfg,
                                     const QuadratureSpec& q) {
    q.validate();
    validate_admissible(spec.exponents);
    const auto eff = section_exponents(form, spec);
    const Integrand<double> ig = build_integrand(j, form.base, eff, cfg);
    if (q.method == QuadratureSpec::Method::GaussJacobi)
        return run_gauss_jacobi(ig, q);
    if (q.extended)
        return run_endpoint_series(cast_integrand<long double>(ig), q);
    return run_endpoint_series(ig, q);
}

QuadResult quad_interval_circle_oracle(int j, const FormDescriptor& form,
                                       const TwistSpec& spec,
                                       const BranchConfig& cfg,
                                       const QuadratureSpec& q) {
    q.validate();
    validate_admissible(spec.exponents);
    const auto eff = section_exponents(form, spec);
    const Integrand<double> ig = build_integrand(j, form.base, eff, cfg);
    if (q.extended)
        return run_circle_oracle(cast_integrand<long double>(ig), q);
    return run_circle_oracle(ig, q);
}

QuadResult quad_interval_gauss_jacobi(int j, const FormDescriptor& form,
                                      const TwistSpec& spec,
                                      const BranchConfig& cfg,
                                      const QuadratureSpec& q) {
    q.validate();
    validate_admissible(spec.exponents);
    const auto eff = section_exponents(form, spec);
    return run_gauss_jacobi(build_integrand(j, form.base, eff, cfg), q);
}

Complex interval_integrand_value(int j, double x, const FormDescriptor& form,
                                 const TwistSpec& spec,
                                 const BranchConfig& cfg) {
    const auto eff = section_exponents(form, spec);
    if (j == 4) {
        // on (1, inf) everything is a plain positive power
        Complex v = form.base.eval(x);
        const auto pts = cfg.finite_points();
        for (int k = 0; k < 5; ++k)
            v *= std::exp(2.0 * eff[static_cast<size_t>(k)] *
                          std::log(Complex(x - pts[static_cast<size_t>(k)].real())));
        return v;
    }
    const Integrand<double> ig = build_integrand(j, form.base, eff, cfg);
    return integrand_value(ig, x);
}

QuadResult quad_total_derivative(int j, const std::vector<Complex>& g,
                                 const TwistSpec& spec, const BranchConfig& cfg,
                                 const QuadratureSpec& q) {
    // d(T_eff g) = T_eff (g' + g dlog T_eff), dlog T_eff = sum 2 e_k/(x-z_k)
    const auto eff = spec.effective();
    const auto pts = cfg.finite_points();
    RationalExpr expr;
    for (size_t m = 0; m < g.size(); ++m) {
        if (g[m] == Complex(0.0)) continue;
        if (m >= 1) {
            ProductTerm t;  // derivative monomial m a_m x^{m-1}
            t.coeff = g[m] * static_cast<double>(m);
            if (m >= 2) t.mul_factor(0.0, static_cast<int>(m) - 1);
            expr.terms.push_back(t);
        }
        for (int k = 0; k < 5; ++k) {
            ProductTerm t;  // a_m x^m * 2 e_k / (x - z_k)
            t.coeff = g[m] * 2.0 * eff[static_cast<size_t>(k)];
            if (m >= 1) t.mul_factor(0.0, static_cast<int>(m));
            t.mul_factor(pts[static_cast<size_t>(k)], -1);
            expr.terms.push_back(t);
        }
    }
    FormDescriptor f;
    f.base = expr;
    TwistSpec plain = spec;  // the shift is already inside eff; rebuild raw
    plain.f_twist = 0;
    plain.dual = false;
    ExponentVector ev;
    for (int k = 0; k < 6; ++k) ev.c[static_cast<size_t>(k)] = eff[static_cast<size_t>(k)];
    plain.exponents = ev;
    return quad_regularized_interval(j, f, plain, cfg, q);
}

// ---------------------------------------------------------------------------
// period assembly

namespace {

int interval_of(CycleSymbol s) {
    switch (s) {
        case CycleSymbol::S01: return 0;
        case CycleSymbol::S12: return 1;
        case CycleSymbol::S23: return 2;
        case CycleSymbol::S34: return 3;
        case CycleSymbol::S45: return 4;
        default: return -1;
    }
}

// eigen symbol -> (interval j, sign)
bool eigen_symbol(CycleSymbol s, int& j, int& sign) {
    switch (s) {
        case CycleSymbol::S01p: j = 0; sign = +1; return true;
        case CycleSymbol::S12p: j = 1; sign = +1; return true;
        case CycleSymbol::S23p: j = 2; sign = +1; return true;
        case CycleSymbol::S34p: j = 3; sign = +1; return true;
        case CycleSymbol::S01m: j = 0; sign = -1; return true;
        case CycleSymbol::S12m: j = 1; sign = -1; return true;
        case CycleSymbol::S23m: j = 2; sign = -1; return true;
        case CycleSymbol::S34m: j = 3; sign = -1; return true;
        default: return false;
    }
}

// lambda symbol -> list of (interval j, pairing exponent index)
bool lambda_reduction(CycleSymbol s, std::vector<int>& js) {
    switch (s) {
        case CycleSymbol::L1: js = {1, 3}; return true;
        case CycleSymbol::L2: js = {3}; return true;
        case CycleSymbol::L3: js = {0}; return true;
        case CycleSymbol::L4: js = {2}; return true;
        default: return false;
    }
}

}  // namespace

QuadResult period_of_class(const CycleClass& cycle, const FormDescriptor& form,
                           const TwistSpec& spec, const BranchConfig& cfg,
                           const QuadratureSpec& q, int ySheetSign) {
    const int fsign = (form.f_multiplier && ySheetSign < 0) ? -1 : +1;
    const auto eff = spec.effective();
    ExponentVector veff;
    for (int k = 0; k < 6; ++k) veff.c[static_cast<size_t>(k)] = eff[static_cast<size_t>(k)];
    const NumericPhaseRing ring{veff};
    CycleFormulas<NumericPhaseRing> F{ring};

    auto quad_interval = [&](int j) {
        QuadResult r = quad_regularized_interval(j, form, spec, cfg, q);
        r.value *= static_cast<double>(fsign);
        return r;
    };

    Complex total = 0.0;
    double err = 0.0;
    for (const auto& [sym, a] : cycle.coeffs) {
        if (a == Complex(0.0)) continue;
        int j = -1, sign = 0;
        if (const int ji = interval_of(sym); ji >= 0) {
            const QuadResult r = quad_interval(ji);
            total += a * r.value;
            err += std::abs(a) * r.error;
            continue;
        }
        if (eigen_symbol(sym, j, sign)) {
            // int over s_{j,+-} of T phi = 1/2 (1 +- eps(phi)) int over s_j:
            // zero against the opposite eigenvalue, the plain interval
            // period against the matching one.
            if (sign != form.iota_eigenvalue) continue;
            const QuadResult r = quad_interval(j);
            total += a * r.value;
            err += std::abs(a) * r.error;
            continue;
        }
        std::vector<int> js;
        if (lambda_reduction(sym, js)) {
            if (cycle.dual != spec.dual)
                throw UnknownSymbolError(
                    "lambda expansion requested with mismatched dual flags");
            for (int ji : js) {
                const Complex phase =
                    (form.iota_eigenvalue == +1) ? (1.0 - F.ep(ji)) : (1.0 + F.ep(ji));
                const QuadResult r = quad_interval(ji);
                total += a * phase * r.value;
                err += std::abs(a * phase) * r.error;
            }
            continue;
        }
        throw UnknownSymbolError("period_of_class: unsupported symbol " +
                                 cycle_name(sym));
    }
    return {total, err};
}

PeriodMatrix period_matrix(const std::vector<CycleClass>& cycles,
                           const std::vector<FormDescriptor>& forms,
                           const TwistSpec& spec, const BranchConfig& cfg,
                           const QuadratureSpec& q, int ySheetSign) {
    PeriodMatrix pm;
    pm.spec = spec;
    const auto rows = static_cast<Eigen::Index>(cycles.size());
    const auto cols = static_cast<Eigen::Index>(forms.size());
    pm.entries.resize(rows, cols);
    pm.errors.resize(rows, cols);
    for (const auto& f : forms) pm.col_labels.push_back(f.label());
    for (Eigen::Index i = 0; i < rows; ++i) {
        std::string lbl;
        for (const auto& [sym, a] : cycles[static_cast<size_t>(i)].coeffs) {
            if (!lbl.empty()) lbl += "+";
            lbl += cycle_name(sym);
        }
        pm.row_labels.push_back(lbl);
        for (Eigen::Index k = 0; k < cols; ++k) {
            const QuadResult r =
                period_of_class(cycles[static_cast<size_t>(i)],
                                forms[static_cast<size_t>(k)], spec, cfg, q,
                                ySheetSign);
            pm.entries(i, k) = r.value;
            pm.errors(i, k) = r.error;
        }
    }
    return pm;
}

}  // namespace g2t
