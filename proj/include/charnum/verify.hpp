#pragma once

// Verification harness behind `charnum verify` and the acceptance suite.
// Each suite returns a report with one entry per check; everything is exact
// integer equality.

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "charnum/bigint.hpp"
#include "charnum/chern.hpp"
#include "charnum/classes.hpp"
#include "charnum/kleiman_piene.hpp"
#include "charnum/recursion.hpp"
#include "charnum/reference.hpp"
#include "charnum/request.hpp"

namespace charnum {

struct CheckResult {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    void add(std::string name, std::string expected, std::string got) {
        bool pass = expected == got;
        checks.push_back({std::move(name), std::move(expected), std::move(got), pass});
    }
    void add(std::string name, const Int& expected, const Int& got) {
        add(std::move(name), expected.str(), got.str());
    }
    void add_flag(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), "ok", pass ? "ok" : (detail.empty() ? "FAILED" : detail), pass});
    }
    void merge(const VerifyReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    int passed() const {
        int n = 0;
        for (const auto& c : checks)
            n += c.pass ? 1 : 0;
        return n;
    }
    int failed() const { return static_cast<int>(checks.size()) - passed(); }
    bool all_pass() const { return failed() == 0; }
    int exit_status() const { return all_pass() ? 0 : 1; }
};

enum class Suite { ClosedForms, External, KpCross, Chern, Invariants };

inline const char* name(Suite s) {
    switch (s) {
    case Suite::ClosedForms: return "closed-forms";
    case Suite::External:    return "external";
    case Suite::KpCross:     return "kp-cross";
    case Suite::Chern:       return "chern";
    case Suite::Invariants:  return "invariants";
    }
    throw internal_error("name(Suite): bad enum");
}

inline std::optional<Suite> parse_suite(std::string_view s) {
    if (s == "closed-forms") return Suite::ClosedForms;
    if (s == "external") return Suite::External;
    if (s == "kp-cross") return Suite::KpCross;
    if (s == "chern") return Suite::Chern;
    if (s == "invariants") return Suite::Invariants;
    return std::nullopt;
}

inline const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = {Suite::ClosedForms, Suite::External, Suite::KpCross,
                                              Suite::Chern, Suite::Invariants};
    return suites;
}

// ---- closed-form regression: every family, s 0..3, d from d_min to 10 ----

// The D4 row of the reference table carries the direction-marked normalization:
// it equals N(P D4, theta=0) = 3 N(D4).  This is pinned three ways: the same P D4
// values feed the A1^4 boundary (which matches both its closed form and the
// independent Bell-polynomial count), the A1 A2 family consumes N(D4) =
// N(P D4)/3 and matches its closed form, and at d=3, s=3 the honest count
// N(D4) = 15 is the classical number of three concurrent lines through five
// points.  The closed-form suite therefore compares the D4 row against the
// direction-marked count and separately checks the exact /3 relation.
inline VerifyReport verify_closed_forms(Engine& engine, int d_max = 10) {
    VerifyReport report;
    for (RefFamily family : all_ref_families()) {
        const SingSpec spec = ref_family_spec(family);
        for (int d = ref_d_min(family); d <= d_max; ++d) {
            for (int s = 0; s <= 3; ++s) {
                const int r = ref_r(family, d, s);
                if (r < 0)
                    continue;
                const Int expected = closed_form_value(family, d, s);
                if (family == RefFamily::D4) {
                    const Int marked = engine.p_family(SingKind::D4, 0, d, r, s, 0, 0, 0, 0);
                    report.add("closed-form D4 (direction-marked) d=" + std::to_string(d) + " s=" +
                                   std::to_string(s) + " r=" + std::to_string(r),
                               expected, marked);
                    report.add("closed-form D4 /3 d=" + std::to_string(d) + " s=" + std::to_string(s),
                               exact_div(expected, 3),
                               engine.characteristic_number(d, 0, SingKind::D4, r, s, true));
                    continue;
                }
                const Int got = engine.characteristic_number(d, spec.engine_delta(), spec.engine_sing(), r,
                                                             s, /*ordered=*/true);
                report.add("closed-form " + std::string(ref_family_name(family)) + " d=" +
                               std::to_string(d) + " s=" + std::to_string(s) + " r=" + std::to_string(r),
                           expected, got);
            }
        }
    }
    return report;
}

// ---- published constants ----
//
// The two-node quartic cusp numbers sit below the proven degree bound
// d >= c + 2 delta (4 < 6); they are exactly the published cross-check for
// that regime, so they are computed with the range override and must come
// out flagged.  Everything else must evaluate without the override.

namespace detail {

inline VerifyReport verify_external_sources(std::initializer_list<std::string_view> sources) {
    VerifyReport report;
    Engine forced(EngineOptions{.force = true});
    for (const ExternalValue& ev : external_values()) {
        if (std::find(sources.begin(), sources.end(), ev.source) == sources.end())
            continue;
        const SingSpec spec = ref_family_spec(ev.family);
        const Int got = forced.characteristic_number(ev.d, spec.engine_delta(), spec.engine_sing(), ev.r,
                                                     ev.s, /*ordered=*/!ev.unordered);
        const std::string cell =
            std::string(ev.source) + " (" + std::to_string(ev.r) + "," + std::to_string(ev.s) + ")";
        report.add("external " + cell, ev.value, got);
        const bool below_proven = ev.d < codim(*spec.engine_sing()) + 2 * spec.engine_delta();
        report.add_flag("external " + cell + " range tag",
                        forced.outside_proven_range() == below_proven,
                        below_proven ? "expected outside-proven-range flag" : "unexpected range flag");
    }
    return report;
}

} // namespace detail

inline VerifyReport verify_external_cusps() {
    return detail::verify_external_sources({"cusp-C3", "cusp-C4"});
}

inline VerifyReport verify_external_bps() { return detail::verify_external_sources({"BPS-g2"}); }

inline VerifyReport verify_external() {
    VerifyReport report = verify_external_cusps();
    report.merge(verify_external_bps());
    return report;
}

// ---- Bell-polynomial cross-oracle: m nodes, d from 2m-1 to 8 ----

inline VerifyReport verify_kp_cross(Engine& engine, int d_max = 8) {
    VerifyReport report;
    for (int m = 1; m <= 4; ++m) {
        for (int d = 2 * m - 1; d <= d_max; ++d) {
            KleimanPiene kp(d);
            for (int s = 0; s <= 3; ++s) {
                const int r = d * (d + 3) / 2 + 3 - m - 2 * s;
                if (r < 0)
                    continue;
                const Int left = kp.nodal(m, r, s);
                const Int right = engine.node_series(m - 1, d, r, s, 0, 0, 0);
                report.add("kp-cross m=" + std::to_string(m) + " d=" + std::to_string(d) + " r=" +
                               std::to_string(r) + " s=" + std::to_string(s),
                           left, right);
            }
        }
    }
    return report;
}

// ---- Chern oracle ----

inline VerifyReport verify_chern() {
    VerifyReport report;
    {
        SymChern c = sym_cubic_chern(1);
        report.add("chern d=1 (s1,s2,s3)", std::string("(1,1,1)"),
                   "(" + c.s1.str() + "," + c.s2.str() + "," + c.s3.str() + ")");
    }
    for (int d = 1; d <= 10; ++d) {
        SymChern c = sym_cubic_chern(d);
        report.add("chern s1 closed form d=" + std::to_string(d),
                   exact_div(Int(d) * (d + 1) * (d + 2), 6), c.s1);
    }
    {
        // documented erratum: the rejected closed form for s2 evaluates to 12
        // at d=1 where the oracle forces 1 -- the discrepancy must exist
        const Int rejected = exact_div(Int(1) * 2 * 3 * 4 * 3, 6);
        SymChern c = sym_cubic_chern(1);
        report.add("chern rejected s2 closed form at d=1", Int(12), rejected);
        report.add_flag("chern erratum: oracle s2(1) != rejected closed form", c.s2 == 1 && rejected == 12,
                        "oracle " + c.s2.str() + " vs rejected " + rejected.str());
    }
    return report;
}

// ---- incidence disambiguation ----
// The one-node count at d=2, (r,s)=(1,3) is 3 under the a+H incidence
// convention; the L+H reading gives 5 and is rejected.

inline VerifyReport verify_incidence() {
    VerifyReport report;
    report.add("incidence a+H: N(A1, d=2, r=1, s=3)", Int(3), n_a1_direct(2, 1, 3, 0, 0, 0));
    {
        RingContext ctx(2, 1);
        const RingSpec& spec = ctx.spec();
        Polynomial wrong = add(gen_lambda(1), gen_h(1, 0));
        Polynomial t = mul(wrong, ctx.classes().euler_a1(0), spec);
        report.add("incidence L+H variant yields the rejected value", Int(5), ctx.integrate(t, 1, 3));
    }
    return report;
}

// ---- property suites ----

namespace detail {

inline Polynomial random_polynomial(std::mt19937& rng, const RingSpec& spec, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expa(0, 3);
    std::uniform_int_distribution<int> expl(0, spec.n + 2); // may exceed n-1: raw
    std::uniform_int_distribution<int> exph(0, 3);
    std::uniform_int_distribution<long long> coef(-9, 9);
    Polynomial p(spec.k);
    const int count = nterms(rng);
    for (int t = 0; t < count; ++t) {
        Monomial m;
        m.a = static_cast<std::uint8_t>(expa(rng));
        m.lam = static_cast<std::uint16_t>(expl(rng));
        for (int i = 0; i < spec.k; ++i)
            m.h[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(exph(rng));
        p.add_term(m, Int(coef(rng)));
    }
    return normalize(p, spec);
}

} // namespace detail

inline VerifyReport verify_properties(Engine& engine, int samples = 40) {
    VerifyReport report;

    // ring axioms on random polynomials
    std::mt19937 rng(20240915);
    bool assoc = true, comm = true, idem = true, linear = true, pairing = true;
    for (int t = 0; t < samples; ++t) {
        const int d = 1 + int(rng() % 3);
        const int k = int(rng() % 3);
        const RingSpec spec = ring_spec(d, k);
        Polynomial p = detail::random_polynomial(rng, spec, 6);
        Polynomial q = detail::random_polynomial(rng, spec, 6);
        Polynomial w = detail::random_polynomial(rng, spec, 6);
        assoc = assoc && mul(p, mul(q, w, spec), spec) == mul(mul(p, q, spec), w, spec);
        comm = comm && mul(p, q, spec) == mul(q, p, spec);
        idem = idem && normalize(p, spec) == p;
        const Int a = 3, b = -5;
        linear = linear && top_coefficient(add(scale(p, a), scale(q, b)), spec) ==
                               a * top_coefficient(p, spec) + b * top_coefficient(q, spec);
        pairing = pairing && top_coefficient_product(p, q, spec) == top_coefficient(mul(p, q, spec), spec);
    }
    report.add_flag("ring axiom: multiplication associative", assoc);
    report.add_flag("ring axiom: multiplication commutative", comm);
    report.add_flag("ring axiom: normalize idempotent", idem);
    report.add_flag("ring axiom: top coefficient linear", linear);
    report.add_flag("ring axiom: pairing matches explicit product", pairing);

    // vanishing: n1 >= 4 or n3 >= 4 kills every evaluator
    {
        bool ok = true;
        ok = ok && engine.node_series(1, 5, 10, 0, 4, 0, 0) == 0;
        ok = ok && engine.node_series(0, 4, 10, 0, 0, 0, 4) == 0;
        ok = ok && engine.p_family(SingKind::A2, 0, 4, 10, 0, 4, 0, 0, 0) == 0;
        ok = ok && engine.p_family(SingKind::A3, 0, 5, 10, 0, 0, 0, 4, 2) == 0;
        ok = ok && engine.hat_family(SingKind::D4, 0, 4, 9, 0, 4, 0, 0, 2) == 0;
        report.add_flag("vanishing: n1 >= 4 or n3 >= 4 gives 0", ok);
    }

    // b1 is the one-node Euler factor
    {
        bool ok = true;
        for (int d = 1; d <= 6; ++d) {
            RingContext ctx(d, 1);
            ok = ok && bell_b(1, 0, ctx.classes()) == ctx.classes().euler_a1(0);
        }
        report.add_flag("identity: b_1 equals the one-node Euler factor", ok);
    }

    // integrality of every structural division (projection degree, node
    // factorial, the 18/3 boundary weight) across the full regression grid:
    // the unordered evaluation exercises them all, and ordered = unordered
    // times the node factorial
    {
        bool ok = true;
        try {
            for (RefFamily family : all_ref_families()) {
                const SingSpec spec = ref_family_spec(family);
                for (int d = ref_d_min(family); d <= 10; ++d) {
                    for (int s = 0; s <= 3; ++s) {
                        const int r = ref_r(family, d, s);
                        if (r < 0)
                            continue;
                        const Int unordered = engine.characteristic_number(d, spec.engine_delta(),
                                                                           spec.engine_sing(), r, s, false);
                        const Int ordered = engine.characteristic_number(d, spec.engine_delta(),
                                                                         spec.engine_sing(), r, s, true);
                        ok = ok && ordered == unordered * factorial(ref_node_count(family));
                    }
                }
            }
        } catch (const internal_error&) {
            ok = false;
        }
        report.add_flag("integrality: projection, factorial and boundary divisions exact on the full grid",
                        ok);
    }

    // memo determinism: repeated evaluation, fresh engines and parallel
    // engines all agree
    {
        struct Cell {
            int m, d;
        };
        const std::vector<Cell> cells = {{1, 3}, {2, 5}, {3, 7}};
        std::vector<Int> first;
        for (const Cell& c : cells)
            first.push_back(engine.node_series(c.m, c.d, c.d * (c.d + 3) / 2 + 3 - c.m - 1, 0, 0, 0, 0));
        bool ok = true;
        for (std::size_t i = 0; i < cells.size(); ++i)
            ok = ok && engine.node_series(cells[i].m, cells[i].d,
                                          cells[i].d * (cells[i].d + 3) / 2 + 3 - cells[i].m - 1, 0, 0, 0,
                                          0) == first[i];
        std::vector<std::vector<Int>> parallel(4);
        std::vector<std::thread> workers;
        for (auto& slot : parallel)
            workers.emplace_back([&cells, &slot]() {
                Engine local;
                for (const Cell& c : cells)
                    slot.push_back(
                        local.node_series(c.m, c.d, c.d * (c.d + 3) / 2 + 3 - c.m - 1, 0, 0, 0, 0));
            });
        for (auto& w : workers)
            w.join();
        for (const auto& slot : parallel)
            ok = ok && slot == first;
        report.add_flag("memo determinism under repetition and parallel engines", ok);
    }

    return report;
}

inline VerifyReport run_suite(Suite suite, Engine& engine) {
    switch (suite) {
    case Suite::ClosedForms: return verify_closed_forms(engine);
    case Suite::External:    return verify_external();
    case Suite::KpCross:     return verify_kp_cross(engine);
    case Suite::Chern:       return verify_chern();
    case Suite::Invariants: {
        VerifyReport report = verify_incidence();
        report.merge(verify_properties(engine));
        return report;
    }
    }
    throw internal_error("run_suite: bad suite");
}

} // namespace charnum
