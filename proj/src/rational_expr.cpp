#include "g2t/rational_expr.hpp"

#include <algorithm>
#include <cmath>

namespace g2t {

namespace {
constexpr double kRootMatchTol = 1e-13;

bool same_root(Complex a, Complex b) {
    return std::abs(a - b) <= kRootMatchTol * std::max(1.0, std::abs(a));
}
}  // namespace

int LaurentSeries::order() const {
    double scale = 0.0;
    for (const auto& c : coef) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return lead + static_cast<int>(coef.size());
    for (size_t k = 0; k < coef.size(); ++k)
        if (std::abs(coef[k]) > 1e-12 * scale) return lead + static_cast<int>(k);
    return lead + static_cast<int>(coef.size());
}

Complex LaurentSeries::coefficient(int exponent) const {
    const int k = exponent - lead;
    if (k < 0 || k >= static_cast<int>(coef.size())) return 0.0;
    return coef[static_cast<size_t>(k)];
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b,
                         int truncation) {
    LaurentSeries r;
    r.lead = a.lead + b.lead;
    const int n = truncation - r.lead + 1;
    if (n <= 0) return r;
    r.coef.assign(static_cast<size_t>(n), Complex(0.0));
    for (size_t i = 0; i < a.coef.size(); ++i) {
        if (a.coef[i] == Complex(0.0)) continue;
        for (size_t j = 0; j < b.coef.size() && i + j < r.coef.size(); ++j)
            r.coef[i + j] += a.coef[i] * b.coef[j];
    }
    return r;
}

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r;
    r.lead = std::min(a.lead, b.lead);
    const int top = std::max(a.lead + static_cast<int>(a.coef.size()),
                             b.lead + static_cast<int>(b.coef.size()));
    r.coef.assign(static_cast<size_t>(std::max(0, top - r.lead)), Complex(0.0));
    for (size_t k = 0; k < a.coef.size(); ++k)
        r.coef[static_cast<size_t>(a.lead - r.lead) + k] += a.coef[k];
    for (size_t k = 0; k < b.coef.size(); ++k)
        r.coef[static_cast<size_t>(b.lead - r.lead) + k] += b.coef[k];
    return r;
}

LaurentSeries series_inverse(const LaurentSeries& a, int truncation) {
    if (a.coef.empty() || a.coef[0] == Complex(0.0))
        throw Error("series_inverse: zero leading coefficient");
    LaurentSeries r;
    r.lead = -a.lead;
    const int n = truncation - r.lead + 1;
    if (n <= 0) return r;
    r.coef.assign(static_cast<size_t>(n), Complex(0.0));
    r.coef[0] = 1.0 / a.coef[0];
    for (size_t k = 1; k < r.coef.size(); ++k) {
        Complex s = 0.0;
        for (size_t j = 1; j <= k && j < a.coef.size(); ++j)
            s += a.coef[j] * r.coef[k - j];
        r.coef[k] = -s / a.coef[0];
    }
    return r;
}

LaurentSeries series_sqrt(const LaurentSeries& a, int truncation) {
    if (a.coef.empty() || a.coef[0] == Complex(0.0))
        throw Error("series_sqrt: zero leading coefficient");
    if (a.lead % 2 != 0) throw Error("series_sqrt: odd leading order");
    LaurentSeries r;
    r.lead = a.lead / 2;
    const int n = truncation - r.lead + 1;
    if (n <= 0) return r;
    r.coef.assign(static_cast<size_t>(n), Complex(0.0));
    r.coef[0] = std::sqrt(a.coef[0]);
    // (sum r_k u^k)^2 = a  =>  2 r_0 r_k = a_k - sum_{0<j<k} r_j r_{k-j}
    for (size_t k = 1; k < r.coef.size(); ++k) {
        Complex s = (k < a.coef.size()) ? a.coef[k] : Complex(0.0);
        for (size_t j = 1; j < k; ++j) s -= r.coef[j] * r.coef[k - j];
        r.coef[k] = s / (2.0 * r.coef[0]);
    }
    return r;
}

Complex ProductTerm::eval(Complex x) const {
    Complex v = coeff;
    for (const auto& f : factors) {
        const Complex base = x - f.root;
        if (f.power >= 0) {
            for (int i = 0; i < f.power; ++i) v *= base;
        } else {
            for (int i = 0; i < -f.power; ++i) v /= base;
        }
    }
    return v;
}

int ProductTerm::order_at(Complex p) const {
    int n = 0;
    for (const auto& f : factors)
        if (same_root(f.root, p)) n += f.power;
    return n;
}

ProductTerm& ProductTerm::mul_factor(Complex root, int power) {
    for (auto& f : factors) {
        if (same_root(f.root, root)) {
            f.power += power;
            return *this;
        }
    }
    factors.push_back({root, power});
    return *this;
}

Complex RationalExpr::eval(Complex x) const {
    Complex v = 0.0;
    for (const auto& t : terms) v += t.eval(x);
    return v;
}

RationalExpr RationalExpr::operator*(const RationalExpr& rhs) const {
    RationalExpr r;
    for (const auto& a : terms)
        for (const auto& b : rhs.terms) {
            ProductTerm t = a;
            t.coeff *= b.coeff;
            for (const auto& f : b.factors) t.mul_factor(f.root, f.power);
            r.terms.push_back(std::move(t));
        }
    return r;
}

RationalExpr RationalExpr::operator+(const RationalExpr& rhs) const {
    RationalExpr r = *this;
    r.terms.insert(r.terms.end(), rhs.terms.begin(), rhs.terms.end());
    return r;
}

RationalExpr RationalExpr::scaled(Complex s) const {
    RationalExpr r = *this;
    for (auto& t : r.terms) t.coeff *= s;
    return r;
}

namespace {

// Series of (x - root)^power around p (root != p), i.e. ((p-root) + u)^power,
// valid for |u| < |p - root|.  Generalized binomial, works for power < 0.
LaurentSeries binom_series(Complex base, int power, int N) {
    LaurentSeries s;
    s.lead = 0;
    if (N < 0) return s;
    s.coef.assign(static_cast<size_t>(N + 1), Complex(0.0));
    // Integer power of a complex base, computed multiplicatively so there is
    // no branch to choose.
    Complex b = 1.0;
    if (power >= 0)
        for (int i = 0; i < power; ++i) b *= base;
    else
        for (int i = 0; i < -power; ++i) b /= base;
    s.coef[0] = b;
    for (int k = 1; k <= N; ++k) {
        b *= Complex(static_cast<double>(power - k + 1)) /
             (Complex(static_cast<double>(k)) * base);
        s.coef[static_cast<size_t>(k)] = b;
    }
    return s;
}

}  // namespace

LaurentSeries RationalExpr::expand_at(Complex p, int N) const {
    LaurentSeries total;
    total.lead = 0;
    total.coef.clear();
    bool first = true;
    for (const auto& t : terms) {
        LaurentSeries s;
        s.lead = t.order_at(p);
        s.coef.assign(static_cast<size_t>(N - s.lead + 1 > 0 ? N - s.lead + 1 : 0),
                      Complex(0.0));
        if (!s.coef.empty()) s.coef[0] = t.coeff;
        for (const auto& f : t.factors) {
            if (same_root(f.root, p)) continue;  // folded into lead
            s = series_mul(s, binom_series(p - f.root, f.power, N - s.lead), N);
        }
        total = first ? s : series_add(total, s);
        first = false;
    }
    return total;
}

LaurentSeries RationalExpr::expand_at_infinity(int N) const {
    // x = 1/s: (x - r) = s^{-1} (1 - r s).
    LaurentSeries total;
    bool first = true;
    for (const auto& t : terms) {
        int lead = 0;
        for (const auto& f : t.factors) lead -= f.power;
        LaurentSeries s;
        s.lead = lead;
        s.coef.assign(static_cast<size_t>(std::max(0, N - lead + 1)),
                      Complex(0.0));
        if (!s.coef.empty()) s.coef[0] = t.coeff;
        for (const auto& f : t.factors) {
            // (1 - r s)^{power}: binomial series around s = 0 with base 1,
            // i.e. substitute u = -r s into (1 + u)^power.
            LaurentSeries g;
            g.lead = 0;
            const int M = N - s.lead;
            g.coef.assign(static_cast<size_t>(std::max(0, M + 1)), Complex(0.0));
            Complex c = 1.0;
            if (!g.coef.empty()) g.coef[0] = c;
            for (int k = 1; k <= M; ++k) {
                c *= Complex(static_cast<double>(f.power - k + 1)) /
                     Complex(static_cast<double>(k)) * (-f.root);
                g.coef[static_cast<size_t>(k)] = c;
            }
            s = series_mul(s, g, N);
        }
        total = first ? s : series_add(total, s);
        first = false;
    }
    return total;
}

int RationalExpr::pole_order(Complex p) const {
    int worst = 0;
    for (const auto& t : terms) worst = std::min(worst, t.order_at(p));
    if (worst >= 0) return 0;
    const LaurentSeries s = expand_at(p, 4);
    return std::max(0, -s.order());
}

Complex RationalExpr::residue(Complex p) const {
    int worst = 0;
    for (const auto& t : terms) worst = std::min(worst, t.order_at(p));
    if (worst >= 0) return 0.0;
    return expand_at(p, 1).coefficient(-1);
}

RationalExpr rx_term(Complex coeff, std::initializer_list<ProductFactor> fs) {
    RationalExpr r;
    ProductTerm t;
    t.coeff = coeff;
    for (const auto& f : fs) t.mul_factor(f.root, f.power);
    r.terms.push_back(std::move(t));
    return r;
}

RationalExpr rx_one() { return rx_term(1.0, {}); }

LaurentSeries form_series_at(const RationalExpr& R, Complex p, int N) {
    return R.expand_at(p, N);
}

LaurentSeries form_series_at_infinity(const RationalExpr& R, int N) {
    // R(1/s) dx = R(1/s) * (-s^{-2}) ds
    LaurentSeries s = R.expand_at_infinity(N + 2);
    LaurentSeries m;
    m.lead = -2;
    m.coef = {Complex(-1.0)};
    return series_mul(s, m, N);
}

}  // namespace g2t
