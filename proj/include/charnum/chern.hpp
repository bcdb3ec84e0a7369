#pragma once

// Chern numbers s1, s2, s3 of Sym^d applied to a rank-3 bundle whose total
// Chern class is 1 + a + a^2 + a^3, computed from first principles.
//
// With formal roots x1, x2, x3 (elementary symmetric values a, a^2, a^3),
// the roots of Sym^d are { i x1 + j x2 + k x3 : i+j+k = d }.  We take the
// first three power sums of those roots, convert to elementary symmetric
// polynomials by Newton's identities, rewrite in the e-basis and substitute
// e_m -> a^m.  Only the oracle values are used anywhere in this project;
// no closed form for s2 or s3 is hard-coded.

#include <string>

#include "charnum/bigint.hpp"
#include "charnum/errors.hpp"
#include "charnum/ring.hpp"

namespace charnum {

struct SymChern {
    int d = 1;
    Int s1 = 1, s2 = 1, s3 = 1;
};

namespace detail {

// Dense polynomial in x1, x2, x3 of total degree <= 3.
struct Tri {
    Int c[4][4][4] = {};

    Int& at(int i, int j, int k) { return c[i][j][k]; }
    const Int& at(int i, int j, int k) const { return c[i][j][k]; }
};

inline Tri tri_mul(const Tri& p, const Tri& q) {
    Tri r;
    for (int i1 = 0; i1 <= 3; ++i1)
        for (int j1 = 0; i1 + j1 <= 3; ++j1)
            for (int k1 = 0; i1 + j1 + k1 <= 3; ++k1) {
                if (p.c[i1][j1][k1] == 0)
                    continue;
                for (int i2 = 0; i1 + i2 <= 3; ++i2)
                    for (int j2 = 0; i1 + i2 + j1 + j2 <= 3; ++j2)
                        for (int k2 = 0; i1 + i2 + j1 + j2 + k1 + k2 <= 3; ++k2) {
                            if (q.c[i2][j2][k2] == 0)
                                continue;
                            r.c[i1 + i2][j1 + j2][k1 + k2] += p.c[i1][j1][k1] * q.c[i2][j2][k2];
                        }
            }
    return r;
}

inline Tri tri_sub(const Tri& p, const Tri& q) {
    Tri r;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            for (int k = 0; k <= 3; ++k)
                r.c[i][j][k] = p.c[i][j][k] - q.c[i][j][k];
    return r;
}

inline Tri tri_add(const Tri& p, const Tri& q) {
    Tri r;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            for (int k = 0; k <= 3; ++k)
                r.c[i][j][k] = p.c[i][j][k] + q.c[i][j][k];
    return r;
}

inline Tri tri_div_exact(const Tri& p, int den) {
    Tri r;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            for (int k = 0; k <= 3; ++k)
                r.c[i][j][k] = exact_div(p.c[i][j][k], den);
    return r;
}

// m-th power sum of the Sym^d roots, expanded in x1, x2, x3.
inline Tri sym_power_sum(int d, int m) {
    Tri p;
    // multinomial expansion of (i x1 + j x2 + k x3)^m, m <= 3
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            int k = d - i - j;
            for (int e1 = 0; e1 <= m; ++e1)
                for (int e2 = 0; e1 + e2 <= m; ++e2) {
                    int e3 = m - e1 - e2;
                    Int coef = exact_div(factorial(m), factorial(e1) * factorial(e2) * factorial(e3));
                    Int base = 1;
                    for (int t = 0; t < e1; ++t)
                        base *= i;
                    for (int t = 0; t < e2; ++t)
                        base *= j;
                    for (int t = 0; t < e3; ++t)
                        base *= k;
                    p.c[e1][e2][e3] += coef * base;
                }
        }
    return p;
}

} // namespace detail

inline SymChern sym_cubic_chern(int d) {
    if (d < 1)
        throw guard_error("sym_cubic_chern requires d >= 1, got " + std::to_string(d));
    using detail::Tri;
    Tri p1 = detail::sym_power_sum(d, 1);
    Tri p2 = detail::sym_power_sum(d, 2);
    Tri p3 = detail::sym_power_sum(d, 3);

    // Newton's identities: e1 = p1, 2 e2 = e1 p1 - p2, 3 e3 = e2 p1 - e1 p2 + p3.
    Tri e1 = p1;
    Tri e2 = detail::tri_div_exact(detail::tri_sub(detail::tri_mul(e1, p1), p2), 2);
    Tri e3 = detail::tri_div_exact(
        detail::tri_add(detail::tri_sub(detail::tri_mul(e2, p1), detail::tri_mul(e1, p2)), p3), 3);

    // The e_i must come out symmetric in x1, x2, x3.
    if (e2.at(2, 0, 0) != e2.at(0, 2, 0) || e2.at(1, 1, 0) != e2.at(0, 1, 1) ||
        e3.at(2, 1, 0) != e3.at(0, 1, 2) || e3.at(3, 0, 0) != e3.at(0, 0, 3))
        throw internal_error("sym_cubic_chern: asymmetric elementary symmetric polynomial");

    // Rewrite in the e-basis of x1,x2,x3 and substitute e_m -> a^m:
    //   m(1)     = e1            m(2)   = e1^2 - 2 e2      m(1,1) = e2
    //   m(3)     = e1^3 - 3 e1 e2 + 3 e3
    //   m(2,1)   = e1 e2 - 3 e3  m(1,1,1) = e3
    // which collapses to the three coefficient reads below.
    SymChern out;
    out.d = d;
    out.s1 = e1.at(1, 0, 0);
    out.s2 = e2.at(1, 1, 0) - e2.at(2, 0, 0);
    out.s3 = e3.at(3, 0, 0) - 2 * e3.at(2, 1, 0) + e3.at(1, 1, 1);
    return out;
}

// Ring parameters for degree d with k point variables.
inline RingSpec ring_spec(int d, int k) {
    if (d < 1)
        throw guard_error("ring_spec requires d >= 1, got " + std::to_string(d));
    // monomials store the L exponent in 16 bits; products reach 2(n-1)
    if (d > 240)
        throw unsupported_error("degree " + std::to_string(d) +
                                " exceeds the monomial representation bound (d <= 240)");
    if (k < 0 || k > kMaxPointVars)
        throw ring_mismatch("ring_spec: k must be 0..4, got " + std::to_string(k));
    SymChern s = sym_cubic_chern(d);
    RingSpec spec;
    spec.d = d;
    spec.n = 1 + d * (d + 3) / 2;
    spec.s1 = s.s1;
    spec.s2 = s.s2;
    spec.s3 = s.s3;
    spec.k = k;
    return spec;
}

} // namespace charnum
