#pragma once

// The standard cohomology classes and the two direct intersection numbers:
// the smooth count N(r,s,n1,n2) and the one-node count N(A1, r,s,n1,n2,n3).
//
// Incidence convention: the class of "the marked point lies on the marked
// plane" is a + H (the Euler class of the line bundle cut out by the
// evaluation map), not L + H.  The two conventions differ, e.g. at d=2,
// (r,s)=(1,3) they give 3 and 5; only a + H reproduces the reference tables.

#include <string>
#include <vector>

#include "charnum/bigint.hpp"
#include "charnum/chern.hpp"
#include "charnum/errors.hpp"
#include "charnum/ring.hpp"

namespace charnum {

// All classes live in the ring of a fixed RingSpec; point-indexed classes
// take the point index i in [0, k).
class ClassLibrary {
public:
    explicit ClassLibrary(RingSpec spec)
        : spec_(std::move(spec)),
          hl_(add(gen_lambda(spec_.k), scale(gen_a(spec_.k), spec_.d))),
          hp_(mul(gen_lambda(spec_.k), gen_a(spec_.k), spec_)) {}

    const RingSpec& spec() const { return spec_; }

    // H_L = L + d a, class of curves meeting a generic line
    const Polynomial& hyperplane_line() const { return hl_; }

    // H_p = L a, class of curves through a generic point
    const Polynomial& hyperplane_point() const { return hp_; }

    // a + H_i, the marked point lies on the marked plane
    Polynomial incidence(int i) const { return add(gen_a(spec_.k), gen_h(spec_.k, i)); }

    // v = L + d H_i
    Polynomial v(int i) const { return add(gen_lambda(spec_.k), scale(gen_h(spec_.k, i), spec_.d)); }

    // w1 = a - 3 H_i  (minus the first Chern class of the vertical tangent bundle)
    Polynomial w1(int i) const { return sub(gen_a(spec_.k), scale(gen_h(spec_.k, i), 3)); }

    // w2 = a^2 - 2 a H_i + 3 H_i^2
    Polynomial w2(int i) const {
        Polynomial A = gen_a(spec_.k), H = gen_h(spec_.k, i);
        return add(sub(mul(A, A, spec_), scale(mul(A, H, spec_), 2)), scale(mul(H, H, spec_), 3));
    }

    // v (v^2 + v w1 + w2), the Euler factor of the one-node condition
    Polynomial euler_a1(int i) const {
        Polynomial V = v(i);
        Polynomial V2 = mul(V, V, spec_);
        return mul(V, add(add(V2, mul(V, w1(i), spec_)), w2(i)), spec_);
    }

private:
    RingSpec spec_;
    Polynomial hl_, hp_;
};

inline ClassLibrary build_classes(const RingSpec& spec) { return ClassLibrary(spec); }

// One ring plus the cached machinery needed to evaluate many intersection
// numbers in it: powers of H_L and the top-coefficient pairing.
class RingContext {
public:
    RingContext(int d, int k) : lib_(ring_spec(d, k)) { hl_pows_.push_back(one(k)); }

    const RingSpec& spec() const { return lib_.spec(); }
    const ClassLibrary& classes() const { return lib_; }

    const Polynomial& hl_power(int r) {
        if (r < 0)
            throw guard_error("negative exponent of H_L");
        while (static_cast<int>(hl_pows_.size()) <= r)
            hl_pows_.push_back(mul(hl_pows_.back(), lib_.hyperplane_line(), spec()));
        return hl_pows_[static_cast<std::size_t>(r)];
    }

    // Top coefficient of p * H_p^s * H_L^r.
    Int integrate(const Polynomial& p, int r, int s) {
        if (s < 0)
            throw guard_error("negative exponent of H_p");
        if (s > 3)
            return 0; // H_p^s carries a^s
        Monomial hp;
        hp.a = static_cast<std::uint8_t>(s);
        hp.lam = static_cast<std::uint16_t>(s);
        return top_coefficient_product(mul(p, monomial(spec().k, hp), spec()), hl_power(r), spec());
    }

private:
    ClassLibrary lib_;
    std::vector<Polynomial> hl_pows_;
};

// Direct evaluator for one degree d; owns the k=0 and k=1 rings.
class EulerCalc {
public:
    explicit EulerCalc(int d) : d_(d), base_(d, 0), point_(d, 1) {}

    int d() const { return d_; }
    RingContext& base_ring() { return base_; }
    RingContext& point_ring() { return point_; }

    // N(r,s,n1,n2): coefficient of a^3 L^{n-1} in H_L^r H_p^s a^{n1} L^{n2}.
    Int n_plain(int r, int s, int n1, int n2) {
        check_exponents(r, s, n1, n2, 0);
        if (n1 > 3)
            return 0;
        Monomial m;
        m.a = static_cast<std::uint8_t>(n1);
        m.lam = static_cast<std::uint16_t>(n2);
        return base_.integrate(normalize(monomial(0, m), base_.spec()), r, s);
    }

    // N(A1, r,s,n1,n2,n3): coefficient of a^3 L^{n-1} H^3 in
    // (a+H) H_L^r H_p^s a^{n1} L^{n2} H^{n3} * euler_a1.
    Int n_a1_direct(int r, int s, int n1, int n2, int n3) {
        check_exponents(r, s, n1, n2, n3);
        if (n1 > 3 || n3 > 3)
            return 0;
        Monomial m;
        m.a = static_cast<std::uint8_t>(n1);
        m.lam = static_cast<std::uint16_t>(n2);
        m.h[0] = static_cast<std::uint8_t>(n3);
        const RingSpec& spec = point_.spec();
        Polynomial t = mul(point_.classes().incidence(0), monomial(1, m), spec);
        t = mul(t, point_.classes().euler_a1(0), spec);
        return point_.integrate(t, r, s);
    }

private:
    static void check_exponents(int r, int s, int n1, int n2, int n3) {
        if (r < 0 || s < 0 || n1 < 0 || n2 < 0 || n3 < 0)
            throw guard_error("intersection-number exponents must be non-negative");
    }

    int d_;
    RingContext base_;
    RingContext point_;
};

inline Int n_plain(int d, int r, int s, int n1, int n2) { return EulerCalc(d).n_plain(r, s, n1, n2); }

inline Int n_a1_direct(int d, int r, int s, int n1, int n2, int n3) {
    return EulerCalc(d).n_a1_direct(r, s, n1, n2, n3);
}

} // namespace charnum
