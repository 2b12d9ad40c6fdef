#include "g2t/multivalued.hpp"

#include <algorithm>
#include <cmath>

namespace g2t {

bool BranchConfig::real_ordered() const {
    const double eps = 1e-14;
    if (std::abs(z1.imag()) > eps || std::abs(z2.imag()) > eps ||
        std::abs(z3.imag()) > eps)
        return false;
    return 0.0 < z1.real() && z1.real() < z2.real() && z2.real() < z3.real() &&
           z3.real() < 1.0;
}

double BranchConfig::min_gap() const {
    const auto p = finite_points();
    double g = std::abs(p[1] - p[0]);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            g = std::min(g, std::abs(p[static_cast<size_t>(j)] -
                                     p[static_cast<size_t>(i)]));
    return g;
}

double BranchConfig::exclusion_radius() const { return 1e-3 * min_gap(); }

void BranchConfig::validate() const {
    const auto p = finite_points();
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (std::abs(p[static_cast<size_t>(i)] - p[static_cast<size_t>(j)]) <
                1e-12)
                throw DegenerateConfigError("coincident branch points");
}

PathSegment PathSegment::line(Complex from, Complex to) {
    PathSegment s;
    s.kind = Kind::Line;
    s.a = from;
    s.b = to;
    return s;
}

PathSegment PathSegment::arc(Complex center, double radius, double theta0,
                             double theta1) {
    PathSegment s;
    s.kind = Kind::Arc;
    s.center = center;
    s.radius = radius;
    s.theta0 = theta0;
    s.theta1 = theta1;
    return s;
}

Complex PathSegment::at(double t) const {
    if (kind == Kind::Line) return a + (b - a) * t;
    const double th = theta0 + (theta1 - theta0) * t;
    return center + radius * Complex(std::cos(th), std::sin(th));
}

Complex BranchState::log_factor(int j, const BranchConfig& cfg) const {
    const Complex d = x - cfg.finite_points()[static_cast<size_t>(j)];
    return Complex(std::log(std::abs(d)), args[static_cast<size_t>(j)]);
}

Complex BranchState::y(const BranchConfig& cfg) const {
    Complex L = 0.0;
    for (int j = 0; j < 5; ++j) L += log_factor(j, cfg);
    return std::exp(0.5 * L);
}

Complex BranchState::f(const BranchConfig& cfg) const {
    return x * (x - 1.0) / y(cfg);
}

Complex BranchState::loaded_section(const std::array<Complex, 6>& eff,
                                    const BranchConfig& cfg) const {
    Complex L = 0.0;
    for (int j = 0; j < 5; ++j)
        L += 2.0 * eff[static_cast<size_t>(j)] * log_factor(j, cfg);
    return std::exp(L);
}

double default_base_point(const BranchConfig& cfg) {
    return 2.0 * std::max(1.0, std::abs(cfg.z3)) + 1.0;
}

BranchState init_base_branch(const BranchConfig& cfg) {
    if (!cfg.real_ordered())
        throw ConfigError("init_base_branch requires 0 < z1 < z2 < z3 < 1");
    BranchState s;
    s.x = default_base_point(cfg);
    s.args.fill(0.0);
    return s;
}

namespace {

// One sub-step of continuation: move x0 -> x1 updating args by principal
// argument increments.  Returns the largest |increment|.
double step_args(BranchState& st, Complex x1, const BranchConfig& cfg) {
    const auto pts = cfg.finite_points();
    double worst = 0.0;
    std::array<double, 5> delta{};
    for (int j = 0; j < 5; ++j) {
        const Complex r =
            (x1 - pts[static_cast<size_t>(j)]) / (st.x - pts[static_cast<size_t>(j)]);
        delta[static_cast<size_t>(j)] = std::arg(r);
        worst = std::max(worst, std::abs(delta[static_cast<size_t>(j)]));
    }
    for (int j = 0; j < 5; ++j) st.args[static_cast<size_t>(j)] += delta[static_cast<size_t>(j)];
    st.x = x1;
    return worst;
}

void check_clearance(Complex x, const BranchConfig& cfg) {
    const auto pts = cfg.finite_points();
    const double excl = cfg.exclusion_radius();
    for (const auto& p : pts)
        if (std::abs(x - p) < excl)
            throw SingularityError("path within exclusion radius of a branch point");
}

}  // namespace

BranchState continue_along_path(BranchState state, const Path& path,
                                const BranchConfig& cfg) {
    constexpr double kMaxJump = kPi / 4.0;
    for (const auto& seg : path) {
        int n = 16;
        if (seg.kind == PathSegment::Kind::Arc)
            n = std::max(n, static_cast<int>(std::ceil(
                                std::abs(seg.theta1 - seg.theta0) / (kPi / 16.0))));
        for (;;) {
            BranchState trial = state;
            bool ok = true;
            for (int i = 1; i <= n; ++i) {
                const Complex xi = seg.at(static_cast<double>(i) / n);
                check_clearance(xi, cfg);
                if (step_args(trial, xi, cfg) >= kMaxJump) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                state = trial;
                break;
            }
            n *= 2;
            if (n > (1 << 22))
                throw SingularityError("step control failed to converge (path too close to a puncture?)");
        }
    }
    return state;
}

Complex interval_phase_factor(int j, const TwistSpec& spec,
                              const BranchConfig& cfg) {
    if (!cfg.real_ordered())
        throw ConfigError("interval_phase_factor requires a real-ordered configuration");
    if (j < 0 || j > 4) throw Error("interval index out of range");
    const auto eff = spec.effective();
    Complex phase = 1.0;
    // Lower-half-plane continuation puts arg(x - z_k) = -pi for z_k right of
    // the interval, i.e. a factor e(-e_k) per such k.
    for (int k = j + 1; k <= 4; ++k)
        phase *= unit_phase(-eff[static_cast<size_t>(k)]);
    return phase;
}

Path lower_half_path(const BranchConfig& cfg, Complex target) {
    const double base = default_base_point(cfg);
    const double depth = 0.35 * std::max(cfg.min_gap(), 1e-3);
    const Complex dip(0.0, -depth);
    Path p;
    p.push_back(PathSegment::line(base, base + dip));
    p.push_back(PathSegment::line(base + dip, target + dip));
    p.push_back(PathSegment::line(target + dip, target));
    return p;
}

Path puncture_loop(const BranchConfig& cfg, int p) {
    const double base = default_base_point(cfg);
    if (p == 5) {
        // Positive loop around infinity = clockwise large circle.
        Path path;
        path.push_back(PathSegment::arc(0.0, base, 0.0, -2.0 * kPi));
        return path;
    }
    const auto pts = cfg.finite_points();
    const Complex c = pts[static_cast<size_t>(p)];
    double r = base;  // distance to nearest other puncture
    for (int k = 0; k < 5; ++k)
        if (k != p) r = std::min(r, std::abs(pts[static_cast<size_t>(k)] - c));
    r *= 0.45;
    const Complex anchor = c + r;  // on the real axis, right of z_p
    Path path = lower_half_path(cfg, anchor);
    path.push_back(PathSegment::arc(c, r, 0.0, 2.0 * kPi));
    // return home along the reverse of the approach
    const double depth = 0.35 * std::max(cfg.min_gap(), 1e-3);
    const Complex dip(0.0, -depth);
    path.push_back(PathSegment::line(anchor, anchor + dip));
    path.push_back(PathSegment::line(anchor + dip, base + dip));
    path.push_back(PathSegment::line(base + dip, base));
    return path;
}

Complex loop_monodromy(int p, Space space, const TwistSpec& spec,
                       const BranchConfig& cfg) {
    validate_admissible(spec.exponents);
    const auto eff = spec.effective();
    const BranchState start = init_base_branch(cfg);
    const Path loop = puncture_loop(cfg, p);
    const int winds = (space == Space::X) ? 2 : 1;

    BranchState end = start;
    for (int w = 0; w < winds; ++w) end = continue_along_path(end, loop, cfg);

    if (space == Space::X) {
        // The doubly-wound loop must close up on the curve.
        const Complex ys = start.y(cfg), ye = end.y(cfg);
        if (std::abs(ye - ys) > 1e-8 * std::abs(ys))
            throw Error("loop_monodromy: y-sheet failed to close on X");
    }
    return end.loaded_section(eff, cfg) / start.loaded_section(eff, cfg);
}

}  // namespace g2t
