#pragma once

// Branch-tracked evaluation of the multivalued sections T, T0, T*f^{+-1}, y
// and f along paths, loop monodromy, and the interval branch-loading
// convention: arg(x - z_j) = 0 on (1, inf), everything else continued
// through the lower half-plane.

#include <array>
#include <vector>

#include "g2t/params.hpp"

namespace g2t {

struct BranchConfig {
    Complex z1{0.2, 0.0}, z2{0.45, 0.0}, z3{0.7, 0.0};

    // {0, z1, z2, z3, 1}; the point at infinity is index 5 everywhere.
    std::array<Complex, 5> finite_points() const {
        return {Complex(0.0), z1, z2, z3, Complex(1.0)};
    }
    bool real_ordered() const;
    double min_gap() const;           // min pairwise gap of finite points
    double exclusion_radius() const;  // 1e-3 * min_gap
    void validate() const;            // distinctness, not in {0,1}
};

enum class Space { X, Y };

struct PathSegment {
    enum class Kind { Line, Arc } kind = Kind::Line;
    Complex a, b;                     // line from a to b
    Complex center;                   // arc data
    double radius = 0.0, theta0 = 0.0, theta1 = 0.0;

    static PathSegment line(Complex from, Complex to);
    static PathSegment arc(Complex center, double radius, double theta0,
                           double theta1);
    Complex at(double t) const;  // t in [0,1]
};

using Path = std::vector<PathSegment>;

// A point of X (or Y) together with continuously tracked arguments of all
// (x - z_j).  y, T and f are derived from the arguments, so the sheet data
// can never drift out of sync with the args.
struct BranchState {
    Complex x;
    std::array<double, 5> args{};  // arg(x - z_j), j = 0..4

    Complex log_factor(int j, const BranchConfig& cfg) const;  // log(x - z_j)
    Complex y(const BranchConfig& cfg) const;              // exp(1/2 sum log)
    Complex f(const BranchConfig& cfg) const;              // x(x-1)/y
    // prod_j (x - z_j)^{2 e_j} for effective exponents e.
    Complex loaded_section(const std::array<Complex, 6>& eff,
                           const BranchConfig& cfg) const;
};

double default_base_point(const BranchConfig& cfg);  // 2*max(1,|z3|) + 1

// State on (1, inf) with all args zero and y > 0.
BranchState init_base_branch(const BranchConfig& cfg);

// Continues the state along the path with adaptive step halving (per-step
// argument jumps < pi/4).  Throws SingularityError near a puncture.
BranchState continue_along_path(BranchState state, const Path& path,
                                const BranchConfig& cfg);

// Constant phase by which the loaded section on (z_j, z_{j+1}) differs from
// the product of real positive powers: prod_{k>j, k<=4} e(-e_k) for the
// effective exponents e_k of the spec.
Complex interval_phase_factor(int j, const TwistSpec& spec,
                              const BranchConfig& cfg);

// Monodromy of the loaded section along a positively oriented loop around
// puncture p (0..5; 5 = infinity), computed by actual continuation.  On X
// the loop winds twice in x around a ramification point (and the y-sheet is
// checked to close up); on Y it winds once.
Complex loop_monodromy(int p, Space space, const TwistSpec& spec,
                       const BranchConfig& cfg);

// Path from the base point to `target` through the lower half-plane.
Path lower_half_path(const BranchConfig& cfg, Complex target);

// Closed loop based at the base point winding once (counterclockwise)
// around puncture p; p = 5 gives a large circle once clockwise (a positive
// loop around infinity).
Path puncture_loop(const BranchConfig& cfg, int p);

}  // namespace g2t
