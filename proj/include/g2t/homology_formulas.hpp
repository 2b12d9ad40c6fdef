#pragma once

// The closed coefficient formulas of the cycle algebra, written once over an
// abstract phase ring so the same tables serve the numeric engine and the
// exact symbolic oracle.
//
// Geometric basis order:  [s01, s12, s23, s34, l1, l2, l3, l4]
// Eigenbasis order:       [s01+, s12+, s23+, s34+, s01-, s12-, s23-, s34-]

#include <array>

#include "g2t/phase_ring.hpp"

namespace g2t {

template <class V>
using Mat8 = std::array<std::array<V, 8>, 8>;

template <class V>
using Vec8 = std::array<V, 8>;

// Exponents u_j of the pairing phases: u_0 = c0-c1 (s01 <-> l3),
// u_1 = c0-2c1-c2 (s12 <-> l1-l2), u_2 = c0-2c1+c3 (s23 <-> l4),
// u_3 = c0-2c1-c4 (s34 <-> l2).
inline constexpr std::array<std::array<int, 6>, 4> kPairingExponent = {{
    {1, -1, 0, 0, 0, 0},
    {1, -2, -1, 0, 0, 0},
    {1, -2, 0, 1, 0, 0},
    {1, -2, 0, 0, -1, 0},
}};

// Geometric index of the lambda cycle paired with s_{j,j+1} (for j = 1 the
// pairing uses l1 - l2; kLambdaIndex gives the leading symbol).
inline constexpr std::array<int, 4> kLambdaIndex = {6, 4, 7, 5};

namespace detail {
template <class T>
std::array<int, 6> negate6(const T& a) {
    std::array<int, 6> r{};
    for (int j = 0; j < 6; ++j) r[static_cast<size_t>(j)] = -a[static_cast<size_t>(j)];
    return r;
}
}  // namespace detail

template <class Ring>
struct CycleFormulas {
    using V = typename Ring::V;
    Ring ring;

    V e(const std::array<int, 6>& a) const { return ring.e(a); }
    V em(int j) const {  // e(-u_j)
        return ring.e(detail::negate6(kPairingExponent[static_cast<size_t>(j)]));
    }
    V ep(int j) const { return ring.e(kPairingExponent[static_cast<size_t>(j)]); }

    static V zero() { return Ring::rat(0, 1); }
    static V one() { return Ring::rat(1, 1); }
    static V half() { return Ring::rat(1, 2); }

    // (s01,...,s34,l1,...,l4) = (s01+,...,s34-) * Q
    Mat8<V> Q() const {
        Mat8<V> q{};
        for (auto& row : q) row.fill(zero());
        for (int j = 0; j < 4; ++j) {
            q[static_cast<size_t>(j)][static_cast<size_t>(j)] = one();
            q[static_cast<size_t>(4 + j)][static_cast<size_t>(j)] = one();
        }
        auto put_lambda = [&](int col, int j) {
            q[static_cast<size_t>(j)][static_cast<size_t>(col)] =
                q[static_cast<size_t>(j)][static_cast<size_t>(col)] + (one() - ep(j));
            q[static_cast<size_t>(4 + j)][static_cast<size_t>(col)] =
                q[static_cast<size_t>(4 + j)][static_cast<size_t>(col)] + (one() + ep(j));
        };
        put_lambda(4, 1);  // l1 over s12
        put_lambda(4, 3);  // l1 over s34
        put_lambda(5, 3);  // l2 over s34
        put_lambda(6, 0);  // l3 over s01
        put_lambda(7, 2);  // l4 over s23
        return q;
    }

    // (s01+,...,s34-) = (s01,...,l4) * P, the closed-form inverse of Q.
    Mat8<V> P() const {
        Mat8<V> p{};
        for (auto& row : p) row.fill(zero());
        for (int j = 0; j < 4; ++j) {
            const V a = em(j);
            // s_{j,+} column
            p[static_cast<size_t>(j)][static_cast<size_t>(j)] = half() * (a + one());
            // s_{j,-} column
            p[static_cast<size_t>(j)][static_cast<size_t>(4 + j)] =
                half() * (one() - a);
            if (j == 1) {
                p[4][static_cast<size_t>(j)] = -half() * a;
                p[5][static_cast<size_t>(j)] = half() * a;
                p[4][static_cast<size_t>(4 + j)] = half() * a;
                p[5][static_cast<size_t>(4 + j)] = -half() * a;
            } else {
                const auto li = static_cast<size_t>(kLambdaIndex[static_cast<size_t>(j)]);
                p[li][static_cast<size_t>(j)] = -half() * a;
                p[li][static_cast<size_t>(4 + j)] = half() * a;
            }
        }
        return p;
    }

    // Pushforward of the involution on geometric coefficient vectors:
    // M = P * diag(1,1,1,1,-1,-1,-1,-1) * Q.
    Mat8<V> involution_geometric() const {
        const Mat8<V> p = P(), q = Q();
        Mat8<V> m{};
        for (auto& row : m) row.fill(zero());
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                V s = zero();
                for (int k = 0; k < 8; ++k) {
                    V t = p[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                          q[static_cast<size_t>(k)][static_cast<size_t>(j)];
                    if (k >= 4) t = -t;
                    s = s + t;
                }
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
            }
        return m;
    }

    // Coefficients of the linear relation: LHS over (l1..l4), RHS over
    // (s01, s12, s23, s34, s45).
    std::array<V, 4> mw_lambda_coefficients() const {
        return {
            one() - e({0, -1, 0, 0, 0, 1}),                        // 1 - e(c5-c1)
            e({-1, -2, 0, 1, 0, 0}) - e({0, -1, 0, 0, 0, 1}),      // e(-c0-2c1+c3) - e(c5-c1)
            e({1, 0, 0, 0, 0, 1}) - e({-1, -1, 0, 0, 0, 0}),       // e(c0+c5) - e(-c0-c1)
            e({-1, -2, 0, 0, -1, 0}) - e({-1, -2, -1, 0, 0, 0}),   // e(-c0-2c1-c4) - e(-c0-2c1-c2)
        };
    }
    std::array<V, 5> mw_sigma_coefficients() const {
        return {
            one() - e({-4, 0, 0, 0, 0, 0}),
            one() - e({-4, -4, 0, 0, 0, 0}),
            one() - e({-4, -4, -4, 0, 0, 0}),
            one() - e({-4, -4, -4, -4, 0, 0}),
            one() - e({0, 0, 0, 0, 0, 4}),
        };
    }

    // Right-hand-side coefficients of the period relation obtained by
    // pairing the linear relation with an eigenform of eigenvalue eps:
    //   (1 - e(4c5)) I(s45) = sum_j K_j I(s_{j,j+1}).
    std::array<V, 4> corollary_coefficients(int eps) const {
        const auto L = mw_lambda_coefficients();
        const auto R = mw_sigma_coefficients();
        const V sgn = (eps == +1) ? -one() : one();
        auto bracket = [&](int j) { return one() + sgn * ep(j); };
        return {
            L[2] * bracket(0) - R[0],
            L[0] * bracket(1) - R[1],
            L[3] * bracket(2) - R[2],
            (L[0] + L[1]) * bracket(3) - R[3],
        };
    }
};

}  // namespace g2t
