#pragma once

// Parameter model: Lauricella parameters, exponent vectors, the f-twist
// shift, dualization, and admissibility validation.
//
// The multivalued kernel is T = prod_j (x - z_j)^{2 c_j}; we carry the c_j
// themselves (not 2c_j) so that every formula reads like the closed forms
// it implements.

#include <array>
#include <complex>

#include <boost/rational.hpp>

#include "g2t/errors.hpp"

namespace g2t {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// e(u) = exp(2 pi i u)
inline Complex unit_phase(Complex u) {
    return std::exp(Complex(0.0, 2.0 * kPi) * u);
}

// Tolerances pinned once for the whole library.
inline constexpr double kSumTol = 1e-14;          // |sum c_j| on construction
inline constexpr double kIntegralityTol = 1e-12;  // "4 c_j is an integer" test

// Shift of (c_0,...,c_5) induced by one power of f = x(x-1)/y.
inline constexpr std::array<double, 6> kFShift = {0.25, -0.25, -0.25,
                                                  -0.25, 0.25,  0.25};

enum class ExponentTag { Raw, FShifted, Dual };

struct LauricellaParams {
    Complex a, b1, b2, b3, c;
};

struct ExponentVector {
    std::array<Complex, 6> c{};
    ExponentTag tag = ExponentTag::Raw;

    Complex operator[](int j) const { return c[static_cast<size_t>(j)]; }
    Complex sum() const {
        Complex s = 0;
        for (auto v : c) s += v;
        return s;
    }
};

// Throws AdmissibilityError (with the violating index) if some 4 c_j is an
// integer to tolerance, SumError if the sum is off zero.
void validate_admissible(const ExponentVector& v);

// true iff w is an integer to tolerance `tol` (complex integrality).
bool near_integer(Complex w, double tol);

// c_0 = (b1+b2+b3-c)/2, c_1 = -b1/2, c_2 = -b2/2, c_3 = -b3/2,
// c_4 = (c-a)/2, c_5 = a/2.  Validates the result.
ExponentVector derive_exponents(const LauricellaParams& p);

// Inverse of derive_exponents (used by the CLI to echo configs).
LauricellaParams lauricella_from_exponents(const ExponentVector& v);

// (c_0+1/4, c_1-1/4, c_2-1/4, c_3-1/4, c_4+1/4, c_5+1/4), tagged FShifted.
// Admissibility of the output follows from 4 c_j not an integer; asserted.
ExponentVector shift_exponents(const ExponentVector& v);

// Exact-rational variant of derive_exponents: the sum is exactly zero and
// the admissibility test is exact integer arithmetic.
using Rat = boost::rational<long long>;
std::array<Rat, 6> derive_exponents_exact(Rat a, Rat b1, Rat b2, Rat b3,
                                          Rat c);

// A choice of multivalued kernel: T^{+-1} * f^{f_twist}.
// The effective exponent at z_j is (dual ? -1 : +1) * c_j + f_twist * shift_j.
struct TwistSpec {
    ExponentVector exponents;
    int f_twist = 0;   // power of f multiplying the section, in {-1, 0, +1}
    bool dual = false;  // T vs T^{-1}

    std::array<Complex, 6> effective() const {
        std::array<Complex, 6> e{};
        const double s = dual ? -1.0 : 1.0;
        for (int j = 0; j < 6; ++j)
            e[static_cast<size_t>(j)] =
                s * exponents.c[static_cast<size_t>(j)] +
                static_cast<double>(f_twist) * kFShift[static_cast<size_t>(j)];
        return e;
    }
};

inline TwistSpec raw_spec(const ExponentVector& v) { return TwistSpec{v, 0, false}; }
inline TwistSpec f_spec(const ExponentVector& v) { return TwistSpec{v, 1, false}; }

// Toggles the dual flag and negates the f power: all effective exponents
// are negated.  An involution.
TwistSpec dualize(const TwistSpec& t);

}  // namespace g2t
