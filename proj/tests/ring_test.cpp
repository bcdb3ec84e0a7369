#include <catch2/catch_amalgamated.hpp>

#include <thread>
#include <vector>

#include "charnum/chern.hpp"
#include "charnum/ring.hpp"

#include "support/dense_ring.hpp"
#include "support/random_poly.hpp"

using namespace charnum;

namespace {

Polynomial raw_monomial(int k, int a, int lam, std::initializer_list<int> h = {}) {
    Monomial m;
    m.a = static_cast<std::uint8_t>(a);
    m.lam = static_cast<std::uint16_t>(lam);
    std::size_t i = 0;
    for (int e : h)
        m.h[i++] = static_cast<std::uint8_t>(e);
    return monomial(k, m);
}

} // namespace

TEST_CASE("multiplication applies the nilpotent relations") {
    const RingSpec spec = ring_spec(1, 0);
    Polynomial a2 = raw_monomial(0, 2, 0);
    CHECK(mul(a2, a2, spec).is_zero());
}

TEST_CASE("lambda reduction in the d=1 ring") {
    // n = 3 and s = (1,1,1): L^3 = -(a L^2 + a^2 L + a^3)
    const RingSpec spec = ring_spec(1, 0);
    REQUIRE(spec.n == 3);
    REQUIRE(spec.s1 == 1);
    REQUIRE(spec.s2 == 1);
    REQUIRE(spec.s3 == 1);

    Polynomial lhs = mul(raw_monomial(0, 0, 2), raw_monomial(0, 0, 1), spec);
    Polynomial expected =
        add(add(scale(raw_monomial(0, 1, 2), -1), scale(raw_monomial(0, 2, 1), -1)),
            scale(raw_monomial(0, 3, 0), -1));
    CHECK(lhs == expected);
    CHECK(to_string(lhs) == "-a*L^2 - a^2*L - a^3");

    // L^4 collapses entirely
    CHECK(normalize(raw_monomial(0, 0, 4), spec).is_zero());
}

TEST_CASE("one is the multiplicative identity") {
    std::mt19937 rng(7);
    for (int d = 1; d <= 3; ++d)
        for (int k = 0; k <= 2; ++k) {
            const RingSpec spec = ring_spec(d, k);
            for (int t = 0; t < 10; ++t) {
                Polynomial p = testsupport::random_polynomial(rng, spec);
                CHECK(mul(one(k), p, spec) == p);
                CHECK(pow(p, 1, spec) == p);
            }
        }
}

TEST_CASE("powers") {
    SECTION("monomial power below the lambda bound") {
        const RingSpec spec = ring_spec(2, 0); // n = 6
        Polynomial la = mul(gen_lambda(0), gen_a(0), spec);
        CHECK(pow(la, 3, spec) == raw_monomial(0, 3, 3));
    }
    SECTION("same power reduces to zero in the d=1 ring") {
        const RingSpec spec = ring_spec(1, 0); // n = 3: a^3 L^3 -> -a^4 (...) = 0
        Polynomial la = mul(gen_lambda(0), gen_a(0), spec);
        CHECK(pow(la, 3, spec).is_zero());
    }
    SECTION("binomial with nilpotents") {
        const RingSpec spec = ring_spec(2, 1);
        Polynomial p = pow(add(gen_a(1), gen_h(1, 0)), 4, spec);
        Polynomial expected = add(add(scale(raw_monomial(1, 1, 0, {3}), 4), scale(raw_monomial(1, 2, 0, {2}), 6)),
                                  scale(raw_monomial(1, 3, 0, {1}), 4));
        CHECK(p == expected);
    }
    SECTION("zeroth power") {
        const RingSpec spec = ring_spec(3, 0);
        CHECK(pow(zero(0), 0, spec) == one(0));
    }
}

TEST_CASE("normalize") {
    const RingSpec spec = ring_spec(1, 0);
    SECTION("a^5 L dies") {
        CHECK(normalize(raw_monomial(0, 5, 1), spec).is_zero());
    }
    SECTION("idempotent on random elements") {
        std::mt19937 rng(11);
        for (int t = 0; t < 50; ++t) {
            const RingSpec sp = ring_spec(1 + int(rng() % 3), int(rng() % 3));
            Polynomial p = testsupport::random_polynomial(rng, sp);
            CHECK(normalize(p, sp) == p);
        }
    }
    SECTION("agrees with the order-independent dense oracle") {
        std::mt19937 rng(13);
        for (int t = 0; t < 60; ++t) {
            const int d = 1 + int(rng() % 3);
            const int k = int(rng() % 3);
            const RingSpec sp = ring_spec(d, k);
            testsupport::RawPoly raw;
            const int terms = int(rng() % 6);
            for (int j = 0; j < terms; ++j) {
                testsupport::RawTerm term;
                term.a = int(rng() % 6);
                term.lam = long(rng() % static_cast<unsigned>(2 * sp.n + 2));
                for (int i = 0; i < k; ++i)
                    term.h[static_cast<std::size_t>(i)] = int(rng() % 6);
                term.c = Int(long(rng() % 19) - 9);
                raw.push_back(term);
            }
            auto high = testsupport::dense_normalize(raw, sp, testsupport::RewriteOrder::HighestFirst);
            auto low = testsupport::dense_normalize(raw, sp, testsupport::RewriteOrder::LowestFirst);
            Polynomial via_production = normalize(testsupport::to_polynomial(raw, k), sp);
            // confluence: both rewrite orders and the production path agree
            CHECK(testsupport::equals_polynomial(high, via_production, k));
            CHECK(testsupport::equals_polynomial(low, via_production, k));
        }
    }
}

TEST_CASE("top coefficient") {
    const RingSpec spec1 = ring_spec(2, 1);
    CHECK(top_coefficient(raw_monomial(1, 3, spec1.n - 1, {3}), spec1) == 1);
    CHECK(top_coefficient(raw_monomial(1, 2, spec1.n - 1, {3}), spec1) == 0);
    const RingSpec spec0 = ring_spec(2, 0);
    CHECK(top_coefficient(scale(raw_monomial(0, 3, spec0.n - 1), 7), spec0) == 7);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(17);
    for (int t = 0; t < 60; ++t) {
        const int d = 1 + int(rng() % 3);
        const int k = int(rng() % 3);
        const RingSpec spec = ring_spec(d, k);
        Polynomial p = testsupport::random_polynomial(rng, spec);
        Polynomial q = testsupport::random_polynomial(rng, spec);
        Polynomial w = testsupport::random_polynomial(rng, spec);
        CHECK(mul(p, q, spec) == mul(q, p, spec));
        CHECK(mul(p, mul(q, w, spec), spec) == mul(mul(p, q, spec), w, spec));
        const Int x = 3, y = -5;
        CHECK(top_coefficient(add(scale(p, x), scale(q, y)), spec) ==
              x * top_coefficient(p, spec) + y * top_coefficient(q, spec));
        CHECK(top_coefficient_product(p, q, spec) == top_coefficient(mul(p, q, spec), spec));
    }
}

TEST_CASE("homogeneous products stay homogeneous") {
    // grading: a, L and every H_i have degree 1; the lambda rewrite preserves it
    std::mt19937 rng(19);
    auto degree_of = [](const Polynomial& p) -> int {
        int deg = -1;
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            if (deg == -1)
                deg = m.degree();
            else if (deg != m.degree())
                return -2; // inhomogeneous
        }
        return deg;
    };
    for (int t = 0; t < 40; ++t) {
        const int d = 1 + int(rng() % 2);
        const RingSpec spec = ring_spec(d, 1);
        // random homogeneous monomial pairs
        Polynomial p = zero(1), q = zero(1);
        const int gp = int(rng() % 5), gq = int(rng() % 5);
        for (int j = 0; j < 3; ++j) {
            int a1 = int(rng() % (static_cast<unsigned>(gp) + 1));
            int h1 = int(rng() % static_cast<unsigned>(gp - a1 + 1));
            p = add(p, raw_monomial(1, a1, gp - a1 - h1, {h1}));
            int a2 = int(rng() % (static_cast<unsigned>(gq) + 1));
            int h2 = int(rng() % static_cast<unsigned>(gq - a2 + 1));
            q = add(q, raw_monomial(1, a2, gq - a2 - h2, {h2}));
        }
        p = normalize(p, spec);
        q = normalize(q, spec);
        Polynomial prod = mul(p, q, spec);
        if (!prod.is_zero()) {
            CHECK(degree_of(prod) == gp + gq);
        }
    }
}

TEST_CASE("mixing rings is an error") {
    const RingSpec spec = ring_spec(2, 1);
    CHECK_THROWS_AS(mul(one(0), one(1), spec), ring_mismatch);
    CHECK_THROWS_AS(add(one(0), one(2)), ring_mismatch);
    CHECK_THROWS_AS(gen_h(0, 0), ring_mismatch);
    CHECK_THROWS_AS(gen_h(2, 2), ring_mismatch);
    CHECK_THROWS_AS(normalize(one(0), spec), ring_mismatch);
}

TEST_CASE("ring operations are safe to share across threads") {
    // pure value semantics: concurrent readers of the same operands must
    // produce identical results
    const RingSpec spec = ring_spec(3, 1);
    std::mt19937 rng(23);
    Polynomial p = testsupport::random_polynomial(rng, spec, 8);
    Polynomial q = testsupport::random_polynomial(rng, spec, 8);
    const Polynomial expected = mul(p, q, spec);
    std::vector<Polynomial> results(8);
    std::vector<std::thread> workers;
    for (auto& slot : results)
        workers.emplace_back([&p, &q, &spec, &slot]() { slot = mul(p, q, spec); });
    for (auto& w : workers)
        w.join();
    for (const Polynomial& r : results)
        CHECK(r == expected);
}

TEST_CASE("serialization is deterministic") {
    CHECK(to_string(zero(0)) == "0");
    CHECK(to_string(one(3)) == "1");
    const RingSpec spec = ring_spec(2, 1);
    Polynomial p = add(sub(raw_monomial(1, 0, 1), scale(raw_monomial(1, 1, 0, {2}), 4)), one(1));
    CHECK(to_string(p) == "1 + L - 4*a*H1^2");
}
