#pragma once

// Exact sparse polynomial arithmetic in the graded ring
//
//     Z[a, L, H_1..H_k] / ( a^4,  H_i^4,  L^n + s1 a L^{n-1} + s2 a^2 L^{n-2} + s3 a^3 L^{n-3} )
//
// where n = 1 + d(d+3)/2 and s1..s3 depend on the curve degree d (see
// chern.hpp).  Everything is a value type; operations never mutate their
// arguments and are safe to run from several threads at once.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "charnum/bigint.hpp"
#include "charnum/errors.hpp"

namespace charnum {

inline constexpr int kMaxPointVars = 4;

// Quotient-ring parameters for a fixed degree d and point count k.
struct RingSpec {
    int d = 1;
    int n = 3; // 1 + d(d+3)/2
    Int s1 = 1, s2 = 1, s3 = 1;
    int k = 0; // number of point variables H_1..H_k, 0..4

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// Exponent vector of a^a L^lam H_1^h[0] .. H_k^h[k-1].
// In normal form a <= 3, h[i] <= 3 and lam <= n-1; raw monomials may exceed
// these bounds until normalized.  The comparison is the canonical term order:
// lexicographic on (a, lam, h).
struct Monomial {
    std::uint8_t a = 0;
    std::uint16_t lam = 0;
    std::array<std::uint8_t, kMaxPointVars> h{};

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    int degree() const { return int(a) + int(lam) + int(h[0]) + int(h[1]) + int(h[2]) + int(h[3]); }
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int k) : k_(k) {
        if (k < 0 || k > kMaxPointVars)
            throw ring_mismatch("point-variable count must be 0..4, got " + std::to_string(k));
    }

    int var_count() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    // Adds c * m without any ring reduction (raw construction).
    void add_term(const Monomial& m, Int c) {
        if (c == 0)
            return;
        auto [it, fresh] = terms_.try_emplace(m, std::move(c));
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Int coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    int k_ = 0;
    std::map<Monomial, Int> terms_;
};

// ---- construction helpers ----

inline Polynomial zero(int k) { return Polynomial(k); }

inline Polynomial constant(int k, Int c) {
    Polynomial p(k);
    p.add_term(Monomial{}, std::move(c));
    return p;
}

inline Polynomial one(int k) { return constant(k, 1); }

inline Polynomial monomial(int k, const Monomial& m, Int c = 1) {
    Polynomial p(k);
    p.add_term(m, std::move(c));
    return p;
}

inline Polynomial gen_a(int k) {
    Monomial m;
    m.a = 1;
    return monomial(k, m);
}

inline Polynomial gen_lambda(int k) {
    Monomial m;
    m.lam = 1;
    return monomial(k, m);
}

inline Polynomial gen_h(int k, int i) {
    if (i < 0 || i >= k)
        throw ring_mismatch("point variable H_" + std::to_string(i + 1) + " not present in a ring with k=" +
                            std::to_string(k));
    Monomial m;
    m.h[static_cast<std::size_t>(i)] = 1;
    return monomial(k, m);
}

// ---- linear operations (no spec needed) ----

namespace detail {

inline void require_same_ring(const Polynomial& p, const Polynomial& q) {
    if (p.var_count() != q.var_count())
        throw ring_mismatch("mixing rings with k=" + std::to_string(p.var_count()) + " and k=" +
                            std::to_string(q.var_count()));
}

inline void require_ring(const Polynomial& p, const RingSpec& spec) {
    if (p.var_count() != spec.k)
        throw ring_mismatch("polynomial has k=" + std::to_string(p.var_count()) + " but spec has k=" +
                            std::to_string(spec.k));
}

} // namespace detail

inline Polynomial add(const Polynomial& p, const Polynomial& q) {
    detail::require_same_ring(p, q);
    Polynomial r = p;
    for (const auto& [m, c] : q.terms())
        r.add_term(m, c);
    return r;
}

inline Polynomial neg(const Polynomial& p) {
    Polynomial r(p.var_count());
    for (const auto& [m, c] : p.terms())
        r.add_term(m, -c);
    return r;
}

inline Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, neg(q)); }

inline Polynomial scale(const Polynomial& p, const Int& c) {
    Polynomial r(p.var_count());
    if (c == 0)
        return r;
    for (const auto& [m, coef] : p.terms())
        r.add_term(m, coef * c);
    return r;
}

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator-(const Polynomial& p) { return neg(p); }

// ---- normal form ----

namespace detail {

// Accumulates c * m into out, rewriting until m is in normal form.
//
//   a^e        -> 0                      if e > 3
//   H_i^e      -> 0                      if e > 3
//   L^e (e>=n) -> -(s1 a L^{e-1} + s2 a^2 L^{e-2} + s3 a^3 L^{e-3})
//
// Each L-rewrite raises the a-exponent, which is capped at 3, so the
// rewriting terminates after at most three rounds per branch.
inline void reduce_into(std::map<Monomial, Int>& out, Monomial m0, Int c0, const RingSpec& spec) {
    struct Pending {
        Monomial m;
        Int c;
    };
    std::vector<Pending> work;
    work.push_back({m0, std::move(c0)});
    while (!work.empty()) {
        Pending t = std::move(work.back());
        work.pop_back();
        if (t.m.a > 3)
            continue;
        bool dead = false;
        for (int i = 0; i < kMaxPointVars; ++i)
            if (t.m.h[static_cast<std::size_t>(i)] > 3) {
                dead = true;
                break;
            }
        if (dead)
            continue;
        if (int(t.m.lam) >= spec.n) {
            const Int* s[3] = {&spec.s1, &spec.s2, &spec.s3};
            for (int j = 1; j <= 3; ++j) {
                if (int(t.m.a) + j > 3)
                    break;
                Monomial m = t.m;
                m.a = static_cast<std::uint8_t>(m.a + j);
                m.lam = static_cast<std::uint16_t>(m.lam - j);
                work.push_back({m, -t.c * *s[j - 1]});
            }
            continue;
        }
        auto [it, fresh] = out.try_emplace(t.m, t.c);
        if (!fresh) {
            it->second += t.c;
            if (it->second == 0)
                out.erase(it);
        }
    }
}

} // namespace detail

// Fixed point of the rewrite system; idempotent and independent of term order.
inline Polynomial normalize(const Polynomial& p, const RingSpec& spec) {
    detail::require_ring(p, spec);
    std::map<Monomial, Int> out;
    for (const auto& [m, c] : p.terms())
        detail::reduce_into(out, m, c, spec);
    Polynomial r(spec.k);
    for (auto& [m, c] : out)
        r.add_term(m, std::move(c));
    return r;
}

// Normalized product.  Both operands must already be normalized elements of
// the same ring (all ring operations below maintain this).
inline Polynomial mul(const Polynomial& p, const Polynomial& q, const RingSpec& spec) {
    detail::require_ring(p, spec);
    detail::require_ring(q, spec);
    std::map<Monomial, Int> out;
    for (const auto& [m1, c1] : p.terms()) {
        for (const auto& [m2, c2] : q.terms()) {
            int a = int(m1.a) + int(m2.a);
            if (a > 3)
                continue;
            Monomial m;
            m.a = static_cast<std::uint8_t>(a);
            bool dead = false;
            for (std::size_t i = 0; i < kMaxPointVars; ++i) {
                int h = int(m1.h[i]) + int(m2.h[i]);
                if (h > 3) {
                    dead = true;
                    break;
                }
                m.h[i] = static_cast<std::uint8_t>(h);
            }
            if (dead)
                continue;
            m.lam = static_cast<std::uint16_t>(int(m1.lam) + int(m2.lam));
            detail::reduce_into(out, m, c1 * c2, spec);
        }
    }
    Polynomial r(spec.k);
    for (auto& [m, c] : out)
        r.add_term(m, std::move(c));
    return r;
}

inline Polynomial pow(const Polynomial& p, unsigned e, const RingSpec& spec) {
    detail::require_ring(p, spec);
    Polynomial result = one(spec.k);
    Polynomial base = p;
    while (e > 0) {
        if (e & 1u)
            result = mul(result, base, spec);
        e >>= 1u;
        if (e > 0)
            base = mul(base, base, spec);
    }
    return result;
}

// The top monomial a^3 L^{n-1} H_1^3 .. H_k^3 of the ring.
inline Monomial top_monomial(const RingSpec& spec) {
    Monomial m;
    m.a = 3;
    m.lam = static_cast<std::uint16_t>(spec.n - 1);
    for (int i = 0; i < spec.k; ++i)
        m.h[static_cast<std::size_t>(i)] = 3;
    return m;
}

// Coefficient of the top monomial; p must be normalized.  Zero when the
// monomial is absent (in particular for any homogeneous p of other degree).
inline Int top_coefficient(const Polynomial& p, const RingSpec& spec) {
    detail::require_ring(p, spec);
    return p.coefficient(top_monomial(spec));
}

namespace detail {

// Weight that a raw power a^aexp L^lamexp contributes to the coefficient of
// a^3 L^{n-1} once normalized.  Every L-rewrite raises the a-exponent, so the
// recursion dies after at most three levels; no memo is needed.
inline Int lambda_top_weight(int aexp, long lamexp, const RingSpec& spec) {
    if (aexp > 3)
        return 0;
    if (lamexp < spec.n)
        return (aexp == 3 && lamexp == spec.n - 1) ? Int(1) : Int(0);
    Int w = 0;
    if (Int t = lambda_top_weight(aexp + 1, lamexp - 1, spec); t != 0)
        w -= spec.s1 * t;
    if (Int t = lambda_top_weight(aexp + 2, lamexp - 2, spec); t != 0)
        w -= spec.s2 * t;
    if (Int t = lambda_top_weight(aexp + 3, lamexp - 3, spec); t != 0)
        w -= spec.s3 * t;
    return w;
}

} // namespace detail

// top_coefficient(mul(p, q, spec), spec) computed without materializing the
// product.  Exact by linearity of the rewrite system.
inline Int top_coefficient_product(const Polynomial& p, const Polynomial& q, const RingSpec& spec) {
    detail::require_ring(p, spec);
    detail::require_ring(q, spec);
    Int total = 0;
    for (const auto& [m1, c1] : p.terms()) {
        for (const auto& [m2, c2] : q.terms()) {
            bool dead = false;
            for (int i = 0; i < spec.k; ++i)
                if (int(m1.h[static_cast<std::size_t>(i)]) + int(m2.h[static_cast<std::size_t>(i)]) != 3) {
                    dead = true;
                    break;
                }
            if (dead)
                continue;
            Int w = detail::lambda_top_weight(int(m1.a) + int(m2.a), long(m1.lam) + long(m2.lam), spec);
            if (w != 0)
                total += c1 * c2 * w;
        }
    }
    return total;
}

// Deterministic textual form: terms in canonical order, explicit coefficients.
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string factors;
        auto emit = [&factors](const std::string& name, int e) {
            if (e == 0)
                return;
            if (!factors.empty())
                factors += "*";
            factors += name;
            if (e > 1)
                factors += "^" + std::to_string(e);
        };
        emit("a", int(m.a));
        emit("L", int(m.lam));
        for (int i = 0; i < p.var_count(); ++i)
            emit("H" + std::to_string(i + 1), int(m.h[static_cast<std::size_t>(i)]));
        if (factors.empty()) {
            out += abs.str();
        } else if (abs == 1) {
            out += factors;
        } else {
            out += abs.str() + "*" + factors;
        }
    }
    return out;
}

} // namespace charnum
