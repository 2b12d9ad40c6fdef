#pragma once

// Exact arithmetic in the group ring Q(i)[e(u)] where u runs over rational
// combinations of the exponents c_0..c_5.  Used by the symbolic oracles for
// the cycle algebra: round trips, involution identities, and the linear
// relation coefficients can be checked with no floating point at all.
//
// Constant offsets in u with denominator dividing 4 are folded into the
// Gaussian-rational coefficient via e(1/4) = i.

#include <array>
#include <map>
#include <string>

#include <boost/rational.hpp>

#include "g2t/errors.hpp"
#include "g2t/params.hpp"

namespace g2t {

using Rat = boost::rational<long long>;

struct GaussRat {
    Rat re{0}, im{0};

    bool operator==(const GaussRat&) const = default;
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator-() const { return {-re, -im}; }
    bool is_zero() const { return re == Rat(0) && im == Rat(0); }
};

// Exponent of a phase monomial e(q0 c0 + ... + q5 c5).
struct PhaseExponent {
    std::array<Rat, 6> q{};
    auto operator<=>(const PhaseExponent&) const = default;
};

class PhaseSum {
  public:
    PhaseSum() = default;
    static PhaseSum zero() { return {}; }
    static PhaseSum scalar(GaussRat c);
    static PhaseSum scalar(Rat r) { return scalar(GaussRat{r, Rat(0)}); }
    static PhaseSum one() { return scalar(Rat(1)); }
    // e(sum_j q_j c_j + offset); offset must have denominator dividing 4.
    static PhaseSum phase(const std::array<Rat, 6>& q, Rat offset = Rat(0));

    PhaseSum operator+(const PhaseSum& o) const;
    PhaseSum operator-(const PhaseSum& o) const;
    PhaseSum operator*(const PhaseSum& o) const;
    PhaseSum operator-() const;
    bool operator==(const PhaseSum& o) const { return (*this - o).is_zero(); }

    bool is_zero() const;
    // Numeric value at a concrete exponent vector.
    Complex eval(const ExponentVector& v) const;
    std::string str() const;

  private:
    std::map<PhaseExponent, GaussRat> terms_;
    void insert(const PhaseExponent& e, const GaussRat& c);
};

// A ring abstraction that lets the cycle-algebra formulas be written once
// and instantiated both numerically and exactly.
struct NumericPhaseRing {
    using V = Complex;
    const ExponentVector& v;
    V e(const std::array<int, 6>& a) const {
        Complex u = 0.0;
        for (int j = 0; j < 6; ++j)
            u += static_cast<double>(a[static_cast<size_t>(j)]) * v[j];
        return unit_phase(u);
    }
    static V rat(long long num, long long den) {
        return Complex(static_cast<double>(num) / static_cast<double>(den));
    }
    static V one() { return Complex(1.0); }
};

struct ExactPhaseRing {
    using V = PhaseSum;
    V e(const std::array<int, 6>& a) const {
        std::array<Rat, 6> q{};
        for (int j = 0; j < 6; ++j) q[static_cast<size_t>(j)] = Rat(a[static_cast<size_t>(j)]);
        return PhaseSum::phase(q);
    }
    static V rat(long long num, long long den) {
        return PhaseSum::scalar(Rat(num, den));
    }
    static V one() { return PhaseSum::one(); }
};

}  // namespace g2t
