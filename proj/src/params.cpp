#include "g2t/params.hpp"

#include <cmath>

namespace g2t {

bool near_integer(Complex w, double tol) {
    if (std::abs(w.imag()) > tol) return false;
    return std::abs(w.real() - std::round(w.real())) <= tol;
}

void validate_admissible(const ExponentVector& v) {
    for (int j = 0; j < 6; ++j) {
        const Complex w = 4.0 * v[j];
        if (near_integer(w, kIntegralityTol))
            throw AdmissibilityError(
                j, "4*c_" + std::to_string(j) + " is an integer: " +
                       std::to_string(w.real()));
    }
    if (std::abs(v.sum()) > kSumTol)
        throw SumError("exponents sum to " + std::to_string(std::abs(v.sum())) +
                       " instead of 0");
}

ExponentVector derive_exponents(const LauricellaParams& p) {
    ExponentVector v;
    v.c = {(p.b1 + p.b2 + p.b3 - p.c) / 2.0,
           -p.b1 / 2.0,
           -p.b2 / 2.0,
           -p.b3 / 2.0,
           (p.c - p.a) / 2.0,
           p.a / 2.0};
    v.tag = ExponentTag::Raw;
    // The sum telescopes to zero; kill the last rounding crumbs so that
    // downstream "sum = 0" identities see an exact zero.
    const Complex s = v.sum();
    v.c[5] -= s;
    validate_admissible(v);
    return v;
}

LauricellaParams lauricella_from_exponents(const ExponentVector& v) {
    LauricellaParams p;
    p.a = 2.0 * v[5];
    p.c = 2.0 * v[4] + p.a;
    p.b1 = -2.0 * v[1];
    p.b2 = -2.0 * v[2];
    p.b3 = -2.0 * v[3];
    return p;
}

ExponentVector shift_exponents(const ExponentVector& v) {
    ExponentVector w;
    for (int j = 0; j < 6; ++j)
        w.c[static_cast<size_t>(j)] = v[j] + kFShift[static_cast<size_t>(j)];
    w.tag = ExponentTag::FShifted;
    validate_admissible(w);  // a theorem, not a precondition
    return w;
}

std::array<Rat, 6> derive_exponents_exact(Rat a, Rat b1, Rat b2, Rat b3,
                                          Rat c) {
    const Rat half(1, 2);
    std::array<Rat, 6> v = {(b1 + b2 + b3 - c) * half, -b1 * half, -b2 * half,
                            -b3 * half, (c - a) * half, a * half};
    Rat sum(0);
    for (const auto& x : v) sum += x;
    if (sum != Rat(0)) throw SumError("exact exponent sum nonzero");
    for (int j = 0; j < 6; ++j) {
        const Rat w = Rat(4) * v[static_cast<size_t>(j)];
        if (w.denominator() == 1)
            throw AdmissibilityError(j, "4*c_j integral in exact mode");
    }
    return v;
}

TwistSpec dualize(const TwistSpec& t) {
    // The stored exponent vector is untouched; dual-ness lives in the flag,
    // which keeps dualize an exact involution.
    TwistSpec d = t;
    d.dual = !t.dual;
    d.f_twist = -t.f_twist;
    return d;
}

}  // namespace g2t
