#pragma once

// Rational functions as sums of products of integer powers of linear
// factors, plus numeric Laurent expansions at the special points.  This is
// all the symbolic machinery the residue pairing and the quadrature
// integrands need; there is no general rational-function field here.

#include <complex>
#include <vector>

#include "g2t/errors.hpp"
#include "g2t/params.hpp"

namespace g2t {

// Truncated Laurent series  sum_{k>=0} coef[k] * u^{lead+k}.
struct LaurentSeries {
    int lead = 0;
    std::vector<Complex> coef;

    int order() const;  // exponent of the first nonzero coefficient (trimmed)
    Complex coefficient(int exponent) const;
    size_t size() const { return coef.size(); }
};

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b,
                         int truncation);
LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
// Reciprocal of a series with nonzero leading coefficient.
LaurentSeries series_inverse(const LaurentSeries& a, int truncation);
// Square root of a series of even leading order with nonzero lead
// coefficient (principal root of the lead).
LaurentSeries series_sqrt(const LaurentSeries& a, int truncation);

// (x - root)^power with integer power.
struct ProductFactor {
    Complex root;
    int power;
};

// coeff * prod_m (x - root_m)^{power_m}
struct ProductTerm {
    Complex coeff{1.0, 0.0};
    std::vector<ProductFactor> factors;

    Complex eval(Complex x) const;
    int order_at(Complex p) const;      // sum of powers with root == p
    ProductTerm& mul_factor(Complex root, int power);  // merges equal roots
};

struct RationalExpr {
    std::vector<ProductTerm> terms;

    Complex eval(Complex x) const;
    RationalExpr operator*(const RationalExpr& rhs) const;
    RationalExpr operator+(const RationalExpr& rhs) const;
    RationalExpr scaled(Complex s) const;
    bool empty() const { return terms.empty(); }

    // Laurent expansion in u = x - p, truncated at u^{N}.
    LaurentSeries expand_at(Complex p, int N) const;
    // Expansion at infinity in s = 1/x, truncated at s^{N}.
    LaurentSeries expand_at_infinity(int N) const;
    // Pole order at p (0 if regular), and the residue there.
    int pole_order(Complex p) const;
    Complex residue(Complex p) const;
};

// Convenience constructors.
RationalExpr rx_term(Complex coeff, std::initializer_list<ProductFactor> fs);
RationalExpr rx_one();

// Expansion of a 1-form R(x) dx, as the coefficient series of du with
// u = x - p; at infinity dx = -s^{-2} ds is folded in.
LaurentSeries form_series_at(const RationalExpr& R, Complex p, int N);
LaurentSeries form_series_at_infinity(const RationalExpr& R, int N);

}  // namespace g2t
