#include <catch2/catch_amalgamated.hpp>

#include "charnum/kleiman_piene.hpp"
#include "charnum/recursion.hpp"

using namespace charnum;

TEST_CASE("Bell polynomial structure") {
    CHECK(bell_terms(1).size() == 1);
    CHECK(bell_terms(2).size() == 2);
    CHECK(bell_terms(3).size() == 3);
    CHECK(bell_terms(4).size() == 5);
    // P_m(1,...,1) is the m-th Bell number
    const Int bell_numbers[4] = {1, 2, 5, 15};
    for (int m = 1; m <= 4; ++m) {
        Int sum = 0;
        for (const BellTerm& t : bell_terms(m))
            sum += t.coefficient;
        CHECK(sum == bell_numbers[m - 1]);
        // every part uses an available class and total part weight is m
        int weight = 0;
        for (const BellTerm& t : bell_terms(m)) {
            (void)weight;
            int w = 0;
            for (int part : t.parts) {
                CHECK(part >= 1);
                CHECK(part <= 4);
                w += part;
            }
            CHECK(w == m);
        }
    }
    CHECK_THROWS_AS(bell_terms(5), unsupported_error);
}

TEST_CASE("b_1 is the one-node Euler factor") {
    for (int d = 1; d <= 6; ++d) {
        RingContext ctx(d, 1);
        CHECK(bell_b(1, 0, ctx.classes()) == ctx.classes().euler_a1(0));
    }
}

TEST_CASE("b_2 transcription") {
    RingContext ctx(3, 1);
    const RingSpec& spec = ctx.spec();
    const ClassLibrary& lib = ctx.classes();
    Polynomial v = lib.v(0), w1 = lib.w1(0), w2 = lib.w2(0);
    auto powmul = [&spec](const Polynomial& base, unsigned e) { return pow(base, e, spec); };
    Polynomial expected = scale(powmul(v, 4), -7);
    expected = add(expected, scale(mul(powmul(v, 3), w1, spec), -13));
    expected = add(expected, scale(mul(powmul(v, 2), powmul(w1, 2), spec), -6));
    expected = add(expected, scale(mul(powmul(v, 2), w2, spec), -7));
    expected = add(expected, scale(mul(mul(v, w1, spec), w2, spec), -6));
    CHECK(bell_b(2, 0, lib) == expected);
    CHECK_THROWS_AS(bell_b(5, 0, lib), unsupported_error);
}

TEST_CASE("single-node counts equal the direct evaluation") {
    for (int d = 1; d <= 5; ++d) {
        EulerCalc calc(d);
        KleimanPiene kp(d);
        for (int s = 0; s <= 3; ++s) {
            const int r = d * (d + 3) / 2 + 3 - 1 - 2 * s;
            if (r < 0)
                continue;
            CHECK(kp.nodal(1, r, s) == calc.n_a1_direct(r, s, 0, 0, 0));
        }
    }
    CHECK(kp_nodal(4, 1, 16, 0) == 258300);
    CHECK(kp_nodal(2, 1, 1, 3) == 3);
}

TEST_CASE("multi-node counts equal the ordered recursion") {
    Engine engine;
    SECTION("two nodes at d=4, all line conditions") {
        CHECK(kp_nodal(4, 2, 15, 0) == engine.node_series(1, 4, 15, 0, 0, 0, 0));
    }
    SECTION("spot checks across m") {
        CHECK(kp_nodal(3, 2, 10, 0) == engine.node_series(1, 3, 10, 0, 0, 0, 0));
        CHECK(kp_nodal(5, 3, 20, 0) == engine.node_series(2, 5, 20, 0, 0, 0, 0));
        CHECK(kp_nodal(7, 4, 34, 0) == engine.node_series(3, 7, 34, 0, 0, 0, 0));
    }
}

TEST_CASE("point labels are exchangeable") {
    // placing b_1 at point 0 and b_2 at point 1 integrates the same as the
    // swapped assignment; the term has weight 3, so the three-node budget
    // r + 2s = 14 applies at d = 4
    const int d = 4, r = 14, s = 0;
    RingContext ctx(d, 2);
    const RingSpec& spec = ctx.spec();
    auto assemble = [&](int first, int second) {
        Polynomial t = mul(ctx.classes().incidence(0), bell_b(first, 0, ctx.classes()), spec);
        t = mul(t, ctx.classes().incidence(1), spec);
        t = mul(t, bell_b(second, 1, ctx.classes()), spec);
        return ctx.integrate(t, r, s);
    };
    CHECK(assemble(1, 2) == assemble(2, 1));
    CHECK(assemble(1, 2) != 0);
}

TEST_CASE("argument validation") {
    KleimanPiene kp(4);
    CHECK_THROWS_AS(kp.nodal(0, 10, 0), unsupported_error);
    CHECK_THROWS_AS(kp.nodal(5, 10, 0), unsupported_error);
    CHECK_THROWS_AS(kp.nodal(1, -1, 0), guard_error);
    CHECK_THROWS_AS(KleimanPiene(0), guard_error);
}
