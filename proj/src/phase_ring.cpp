#include "g2t/phase_ring.hpp"

#include <sstream>

namespace g2t {

PhaseSum PhaseSum::scalar(GaussRat c) {
    PhaseSum s;
    if (!c.is_zero()) s.terms_[PhaseExponent{}] = c;
    return s;
}

PhaseSum PhaseSum::phase(const std::array<Rat, 6>& q, Rat offset) {
    // Fold e(offset) into the coefficient: e(1/2) = -1, e(1/4) = i.
    GaussRat c{Rat(1), Rat(0)};
    Rat r = offset;
    // reduce r mod 1
    long long whole = r.numerator() / r.denominator();
    r -= Rat(whole);
    if (r < Rat(0)) r += Rat(1);
    const GaussRat im_unit{Rat(0), Rat(1)};
    while (r >= Rat(1, 4)) {
        c = c * im_unit;
        r -= Rat(1, 4);
    }
    if (r != Rat(0))
        throw Error("PhaseSum: constant offset must have denominator dividing 4");
    PhaseSum s;
    PhaseExponent e;
    e.q = q;
    s.terms_[e] = c;
    return s;
}

void PhaseSum::insert(const PhaseExponent& e, const GaussRat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[e] = c;
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

PhaseSum PhaseSum::operator+(const PhaseSum& o) const {
    PhaseSum r = *this;
    for (const auto& [e, c] : o.terms_) r.insert(e, c);
    return r;
}

PhaseSum PhaseSum::operator-(const PhaseSum& o) const {
    PhaseSum r = *this;
    for (const auto& [e, c] : o.terms_) r.insert(e, -c);
    return r;
}

PhaseSum PhaseSum::operator-() const {
    PhaseSum r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

PhaseSum PhaseSum::operator*(const PhaseSum& o) const {
    PhaseSum r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            PhaseExponent e;
            for (int j = 0; j < 6; ++j)
                e.q[static_cast<size_t>(j)] =
                    e1.q[static_cast<size_t>(j)] + e2.q[static_cast<size_t>(j)];
            r.insert(e, c1 * c2);
        }
    return r;
}

bool PhaseSum::is_zero() const { return terms_.empty(); }

Complex PhaseSum::eval(const ExponentVector& v) const {
    Complex total = 0.0;
    for (const auto& [e, c] : terms_) {
        Complex u = 0.0;
        for (int j = 0; j < 6; ++j)
            u += Complex(boost::rational_cast<double>(e.q[static_cast<size_t>(j)])) * v[j];
        total += Complex(boost::rational_cast<double>(c.re),
                         boost::rational_cast<double>(c.im)) *
                 unit_phase(u);
    }
    return total;
}

std::string PhaseSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.re << (c.im >= Rat(0) ? "+" : "") << c.im << "i)";
        os << "*e(";
        bool any = false;
        for (int j = 0; j < 6; ++j) {
            const Rat& q = e.q[static_cast<size_t>(j)];
            if (q == Rat(0)) continue;
            if (any) os << "+";
            os << q << "c" << j;
            any = true;
        }
        if (!any) os << "0";
        os << ")";
    }
    return os.str();
}

}  // namespace g2t
