#pragma once

// Independent computation of the delta-nodal counts N(A1^m, r, s) for
// m <= 4 via Bell polynomials in the universal classes b_1..b_4, used as a
// cross-oracle against the recursion tower.  A term of the Bell polynomial
// P_m with j parts places one b-class at each of j distinct marked points;
// its value is the ambient top coefficient against one incidence factor
// (a + H_i) per point.

#include <map>
#include <vector>

#include "charnum/bigint.hpp"
#include "charnum/classes.hpp"
#include "charnum/errors.hpp"

namespace charnum {

struct BellTerm {
    Int coefficient;
    std::vector<int> parts; // b-indices, one per marked point
};

// Monomials of the Bell polynomial P_m:
//   P_1 = a1                 P_2 = a1^2 + a2
//   P_3 = a1^3 + 3 a1 a2 + a3
//   P_4 = a1^4 + 6 a1^2 a2 + 3 a2^2 + 4 a1 a3 + a4
inline const std::vector<BellTerm>& bell_terms(int m) {
    static const std::vector<std::vector<BellTerm>> tables = {
        {{Int(1), {1}}},
        {{Int(1), {1, 1}}, {Int(1), {2}}},
        {{Int(1), {1, 1, 1}}, {Int(3), {1, 2}}, {Int(1), {3}}},
        {{Int(1), {1, 1, 1, 1}}, {Int(6), {1, 1, 2}}, {Int(3), {2, 2}}, {Int(4), {1, 3}}, {Int(1), {4}}},
    };
    if (m < 1 || m > 4)
        throw unsupported_error("Bell-polynomial node counts cover 1..4 nodes, got " + std::to_string(m));
    return tables[static_cast<std::size_t>(m) - 1];
}

// b_i as a polynomial in v = L + d H, w1 = a - 3H, w2 = a^2 - 2aH + 3H^2
// at the given point.
inline Polynomial bell_b(int i, int point, const ClassLibrary& lib) {
    struct Term {
        int ev, ew1, ew2;
        long long c;
    };
    static const std::vector<std::vector<Term>> tables = {
        {{3, 0, 0, 1}, {2, 1, 0, 1}, {1, 0, 1, 1}},
        {{4, 0, 0, -7}, {3, 1, 0, -13}, {2, 2, 0, -6}, {2, 0, 1, -7}, {1, 1, 1, -6}},
        {{5, 0, 0, 138},
         {4, 1, 0, 394},
         {3, 2, 0, 376},
         {3, 0, 1, 138},
         {2, 3, 0, 120},
         {2, 1, 1, 256},
         {1, 2, 1, 120}},
        {{6, 0, 0, -4824},
         {5, 1, 0, -19134},
         {4, 2, 0, -28842},
         {4, 0, 1, -3888},
         {3, 3, 0, -19572},
         {3, 1, 1, -12438},
         {2, 4, 0, -5040},
         {2, 2, 1, -13596},
         {2, 0, 2, 936},
         {1, 3, 1, -5040},
         {1, 1, 2, 936}},
    };
    if (i < 1 || i > 4)
        throw unsupported_error("bell_b: only b_1..b_4 are available, got b_" + std::to_string(i));
    const RingSpec& spec = lib.spec();
    const Polynomial v = lib.v(point);
    const Polynomial w1 = lib.w1(point);
    const Polynomial w2 = lib.w2(point);
    Polynomial out = zero(spec.k);
    for (const Term& t : tables[static_cast<std::size_t>(i) - 1]) {
        Polynomial term = pow(v, static_cast<unsigned>(t.ev), spec);
        if (t.ew1 > 0)
            term = mul(term, pow(w1, static_cast<unsigned>(t.ew1), spec), spec);
        if (t.ew2 > 0)
            term = mul(term, pow(w2, static_cast<unsigned>(t.ew2), spec), spec);
        out = add(out, scale(term, t.c));
    }
    return out;
}

inline Polynomial bell_b(int i, int point, const RingSpec& spec) {
    return bell_b(i, point, ClassLibrary(spec));
}

// Evaluator for one degree d; caches one ring context per point count.
class KleimanPiene {
public:
    explicit KleimanPiene(int d) : d_(d) {
        if (d < 1)
            throw guard_error("KleimanPiene requires d >= 1");
    }

    int d() const { return d_; }

    // N(A1^m, r, s) with ordered nodes, by the Bell-polynomial algorithm.
    Int nodal(int m, int r, int s) {
        const auto& terms = bell_terms(m); // validates m
        if (r < 0 || s < 0)
            throw guard_error("nodal: r and s must be >= 0");
        Int total = 0;
        for (const BellTerm& term : terms) {
            const int k = static_cast<int>(term.parts.size());
            RingContext& ctx = context(k);
            const RingSpec& spec = ctx.spec();
            Polynomial t = one(k);
            for (int p = 0; p < k; ++p) {
                t = mul(t, ctx.classes().incidence(p), spec);
                t = mul(t, bell_b(term.parts[static_cast<std::size_t>(p)], p, ctx.classes()), spec);
            }
            // only terms carrying H_i^3 at every point can reach the top class
            Polynomial top = zero(k);
            for (const auto& [mono, c] : t.terms()) {
                bool full = true;
                for (int p = 0; p < k; ++p)
                    if (mono.h[static_cast<std::size_t>(p)] != 3) {
                        full = false;
                        break;
                    }
                if (full)
                    top.add_term(mono, c);
            }
            total += term.coefficient * ctx.integrate(top, r, s);
        }
        return total;
    }

private:
    RingContext& context(int k) {
        auto it = contexts_.find(k);
        if (it == contexts_.end())
            it = contexts_.try_emplace(k, d_, k).first;
        return it->second;
    }

    int d_;
    std::map<int, RingContext> contexts_;
};

inline Int kp_nodal(int d, int m, int r, int s) { return KleimanPiene(d).nodal(m, r, s); }

} // namespace charnum
