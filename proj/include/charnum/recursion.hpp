#pragma once

// The memoized recursion tower for counts of curves with delta nodes plus one
// marked singularity:
//
//   Nodes  N(A1^delta A1, r,s,n1,n2,n3)          delta extra nodes, marked node
//   P      N(A1^delta PX, r,s,n1,n2,n3,theta)    marked singularity with direction
//   Hat    N(A1^delta X^, r,s,n1,n2,n3,theta)    marked singularity, free direction
//   Plain  N(A1^delta X,  r,s,n1,n2,n3)          marked singularity, no direction
//
// plus the user-facing characteristic numbers.  The engine is deterministic
// and single-threaded; run independent engines for parallel workloads.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "charnum/bigint.hpp"
#include "charnum/classes.hpp"
#include "charnum/errors.hpp"

namespace charnum {

enum class SingKind : std::uint8_t { A1 = 1, A2, A3, A4, D4 };

inline const char* name(SingKind s) {
    switch (s) {
    case SingKind::A1: return "A1";
    case SingKind::A2: return "A2";
    case SingKind::A3: return "A3";
    case SingKind::A4: return "A4";
    case SingKind::D4: return "D4";
    }
    throw internal_error("name(SingKind): bad enum");
}

inline std::optional<SingKind> parse_sing_kind(std::string_view s) {
    if (s == "A1") return SingKind::A1;
    if (s == "A2") return SingKind::A2;
    if (s == "A3") return SingKind::A3;
    if (s == "A4") return SingKind::A4;
    if (s == "D4") return SingKind::D4;
    return std::nullopt;
}

struct SingularityClass {
    SingKind kind = SingKind::A1;

    // number of conditions the singularity imposes
    int codim() const {
        switch (kind) {
        case SingKind::A1: return 1;
        case SingKind::A2: return 2;
        case SingKind::A3: return 3;
        case SingKind::A4: return 4;
        case SingKind::D4: return 4;
        }
        throw internal_error("codim: bad enum");
    }

    // sheet count of the direction-forgetting projection
    int proj_degree() const {
        switch (kind) {
        case SingKind::A1: return 2;
        case SingKind::D4: return 3;
        default:           return 1;
        }
    }
};

inline int codim(SingKind s) { return SingularityClass{s}.codim(); }
inline int proj_degree(SingKind s) { return SingularityClass{s}.proj_degree(); }

enum class Family : std::uint8_t { Nodes, P, Hat, Plain };

inline const char* name(Family f) {
    switch (f) {
    case Family::Nodes: return "nodes";
    case Family::P:     return "p";
    case Family::Hat:   return "hat";
    case Family::Plain: return "plain";
    }
    throw internal_error("name(Family): bad enum");
}

// Canonicalized evaluation request.  N(A1^delta) and N(A1^{delta-1} A1) are
// the same count; the Nodes family always carries the marked-node form, and
// Plain with sing A1 is folded into Nodes before evaluation.
struct Query {
    Family family = Family::Nodes;
    SingKind sing = SingKind::A1;
    int delta = 0;
    int d = 1;
    int r = 0, s = 0;
    int n1 = 0, n2 = 0, n3 = 0;
    int theta = 0;

    friend auto operator<=>(const Query&, const Query&) = default;

    std::string cache_key() const {
        std::string out = name(family);
        auto push = [&out](int v) { out += ':'; out += std::to_string(v); };
        out += ':';
        out += name(sing);
        push(delta);
        push(d);
        push(r);
        push(s);
        push(n1);
        push(n2);
        push(n3);
        push(theta);
        return out;
    }

    static std::optional<Query> from_cache_key(std::string_view key);
};

inline std::optional<Query> Query::from_cache_key(std::string_view key) {
    Query q;
    std::array<std::string_view, 10> fields;
    std::size_t n = 0;
    while (!key.empty() && n < fields.size()) {
        std::size_t pos = key.find(':');
        fields[n++] = key.substr(0, pos);
        if (pos == std::string_view::npos) {
            key = {};
            break;
        }
        key.remove_prefix(pos + 1);
    }
    if (n != fields.size() || !key.empty())
        return std::nullopt;
    if (fields[0] == "nodes") q.family = Family::Nodes;
    else if (fields[0] == "p") q.family = Family::P;
    else if (fields[0] == "hat") q.family = Family::Hat;
    else if (fields[0] == "plain") q.family = Family::Plain;
    else return std::nullopt;
    auto sk = parse_sing_kind(fields[1]);
    if (!sk)
        return std::nullopt;
    q.sing = *sk;
    int* slots[8] = {&q.delta, &q.d, &q.r, &q.s, &q.n1, &q.n2, &q.n3, &q.theta};
    for (int i = 0; i < 8; ++i) {
        const std::string_view f = fields[static_cast<std::size_t>(i) + 2];
        if (f.empty())
            return std::nullopt;
        int value = 0;
        for (char c : f) {
            if (c < '0' || c > '9')
                return std::nullopt;
            value = value * 10 + (c - '0');
        }
        *slots[i] = value;
    }
    return q;
}

struct EngineOptions {
    // Evaluate outside the proven d-range instead of throwing; results are
    // then flagged by outside_proven_range().
    bool force = false;
};

class Engine {
public:
    explicit Engine(EngineOptions opt = {}) : opt_(opt) {}

    // ---- family evaluators ----

    // N(A1^delta A1, r,s,n1,n2,n3), 0 <= delta <= 3, valid for d >= 2 delta + 1
    Int node_series(int delta, int d, int r, int s, int n1, int n2, int n3) {
        return eval(make_query(Family::Nodes, SingKind::A1, delta, d, r, s, n1, n2, n3, 0));
    }

    // N(A1^delta P sing, ..., theta)
    Int p_family(SingKind sing, int delta, int d, int r, int s, int n1, int n2, int n3, int theta) {
        return eval(make_query(Family::P, sing, delta, d, r, s, n1, n2, n3, theta));
    }

    // N(A1^delta sing^, ..., theta)
    Int hat_family(SingKind sing, int delta, int d, int r, int s, int n1, int n2, int n3, int theta) {
        return eval(make_query(Family::Hat, sing, delta, d, r, s, n1, n2, n3, theta));
    }

    // N(A1^delta sing, ...)
    Int plain_family(SingKind sing, int delta, int d, int r, int s, int n1, int n2, int n3) {
        return eval(make_query(Family::Plain, sing, delta, d, r, s, n1, n2, n3, 0));
    }

    // N(r,s,n1,n2), the smooth count
    Int smooth_count(int d, int r, int s, int n1 = 0, int n2 = 0) {
        require(d >= 1, "d must be >= 1");
        return calc(d).n_plain(r, s, n1, n2);
    }

    // Euler-side and boundary-side pieces of the node recursion, exposed for
    // verification; node_series(delta,...) = eul_term - boundary_term.
    Int eul_term(int delta, int d, int r, int s, int n1, int n2, int n3);
    Int boundary_term(int delta, int d, int r, int s, int n1, int n2, int n3);

    // ---- user-facing characteristic number ----
    //
    // delta nodes plus one singularity of the given kind (none = smooth).
    // For kind A1 the marked point is itself a node, so "two plain nodes" is
    // (delta=1, A1).  Ordered counts label the delta + (kind==A1) node points;
    // unordered divides by the factorial of that node count.
    Int characteristic_number(int d, int delta, std::optional<SingKind> sing, int r, int s, bool ordered);

    // set when a forced evaluation went below a proven d-range; sticky until cleared
    bool outside_proven_range() const { return outside_range_; }
    void clear_range_flag() { outside_range_ = false; }

    // deepest evaluation nesting seen so far; the call graph is well-founded
    // on (delta, theta, family rank), so this stays far below the hard bound
    int max_recursion_depth() const { return max_depth_; }

    // ---- memo table ----
    std::size_t memo_size() const { return memo_.size(); }
    const std::map<Query, Int>& memo() const { return memo_; }
    void adopt_memo_entry(const Query& q, Int value) { memo_.emplace(q, std::move(value)); }

private:
    static Query make_query(Family f, SingKind sing, int delta, int d, int r, int s, int n1, int n2, int n3,
                            int theta) {
        if (delta < 0 || d < 1 || r < 0 || s < 0 || n1 < 0 || n2 < 0 || n3 < 0 || theta < 0)
            throw guard_error("query parameters must be non-negative (and d >= 1)");
        Query q{f, sing, delta, d, r, s, n1, n2, n3, theta};
        if (f == Family::Plain && sing == SingKind::A1) {
            // N(A1^delta A1) under its other name
            q.family = Family::Nodes;
        }
        if (f == Family::Nodes || f == Family::Plain)
            q.theta = 0;
        if (f == Family::Nodes)
            q.sing = SingKind::A1;
        return q;
    }

    static void require(bool ok, const std::string& what) {
        if (!ok)
            throw guard_error(what);
    }

    // d-range guards; overridable with EngineOptions::force
    void check_range(bool ok, const std::string& what) {
        if (ok)
            return;
        if (!opt_.force)
            throw guard_error(what);
        outside_range_ = true;
    }

    EulerCalc& calc(int d) {
        auto it = calcs_.find(d);
        if (it == calcs_.end())
            it = calcs_.try_emplace(d, d).first;
        return it->second;
    }

    Int eval(const Query& q);
    Int eval_nodes(const Query& q);
    Int eval_p(const Query& q);
    Int eval_hat(const Query& q);
    Int eval_plain(const Query& q);
    Int lambda_w_reduce(const Query& q);

    static constexpr int kMaxRecursionDepth = 256;

    struct DepthScope {
        Engine& engine;
        explicit DepthScope(Engine& e) : engine(e) {
            if (++engine.depth_ > kMaxRecursionDepth)
                throw internal_error("recursion depth exceeded the structural bound");
            if (engine.depth_ > engine.max_depth_)
                engine.max_depth_ = engine.depth_;
        }
        ~DepthScope() { --engine.depth_; }
    };

    EngineOptions opt_;
    bool outside_range_ = false;
    int depth_ = 0;
    int max_depth_ = 0;
    std::map<Query, Int> memo_;
    std::map<int, EulerCalc> calcs_;
};

// ---- implementation ----

inline Int Engine::eval(const Query& q) {
    DepthScope scope(*this);
    // structural range checks first: these depend only on the query shape
    switch (q.family) {
    case Family::Nodes:
        if (q.delta > 3)
            throw unsupported_error("node recursion covers at most delta = 3 extra nodes");
        if (q.delta >= 1)
            check_range(q.d >= 2 * q.delta + 1, "N(A1^" + std::to_string(q.delta) + " A1) requires d >= " +
                                                    std::to_string(2 * q.delta + 1));
        break;
    case Family::P:
        switch (q.sing) {
        case SingKind::A1:
            if (q.delta > 2)
                throw unsupported_error("P A1 recursion covers at most delta = 2");
            if (q.theta == 1)
                check_range(q.d >= 2 * q.delta + 2, "N(A1^delta P A1, theta=1) requires d >= 2 delta + 2");
            break;
        case SingKind::A2:
            if (q.delta > 2)
                throw unsupported_error("P A2 recursion covers at most delta = 2");
            if (q.delta == 2 && q.theta > 0)
                throw unsupported_error("N(A1^2 P A2) with theta > 0 has an unknown correction term");
            check_range(q.d >= 2 * q.delta + 2, "N(A1^delta P A2) requires d >= 2 delta + 2");
            break;
        case SingKind::A3:
            if (q.delta > 1)
                throw unsupported_error("P A3 recursion covers at most delta = 1");
            check_range(q.d >= 2 * q.delta + 3, "N(A1^delta P A3) requires d >= 2 delta + 3");
            break;
        case SingKind::A4:
            if (q.delta > 0)
                throw unsupported_error("P A4 is only available with no extra nodes");
            check_range(q.d >= 4, "N(P A4) requires d >= 4");
            break;
        case SingKind::D4:
            if (q.delta > 0)
                throw unsupported_error("P D4 is only available with no extra nodes");
            check_range(q.d >= 3, "N(P D4) requires d >= 3");
            break;
        }
        break;
    case Family::Hat:
        break; // inherits the checks of the families it unfolds into
    case Family::Plain:
        switch (q.sing) {
        case SingKind::A1:
            throw internal_error("plain A1 must be canonicalized to the node series");
        case SingKind::A2:
            if (q.delta > 2)
                throw unsupported_error("N(A1^delta A2) covers at most delta = 2");
            break;
        case SingKind::A3:
            if (q.delta > 1)
                throw unsupported_error("N(A1^delta A3) covers at most delta = 1");
            break;
        case SingKind::A4:
        case SingKind::D4:
            if (q.delta > 0)
                throw unsupported_error(std::string("N(A1^delta ") + name(q.sing) +
                                        ") is only available with delta = 0");
            break;
        }
        break;
    }

    // nilpotency: a^4 = H^4 = 0
    if (q.n1 > 3 || q.n3 > 3)
        return 0;

    if (auto it = memo_.find(q); it != memo_.end())
        return it->second;

    Int value;
    switch (q.family) {
    case Family::Nodes: value = eval_nodes(q); break;
    case Family::P:     value = eval_p(q); break;
    case Family::Hat:   value = eval_hat(q); break;
    case Family::Plain: value = eval_plain(q); break;
    default: throw internal_error("eval: bad family");
    }
    memo_.emplace(q, value);
    return value;
}

inline Int Engine::eval_nodes(const Query& q) {
    if (q.delta == 0)
        return calc(q.d).n_a1_direct(q.r, q.s, q.n1, q.n2, q.n3);
    return eul_term(q.delta, q.d, q.r, q.s, q.n1, q.n2, q.n3) -
           boundary_term(q.delta, q.d, q.r, q.s, q.n1, q.n2, q.n3);
}

inline Int Engine::eul_term(int delta, int d, int r, int s, int n1, int n2, int n3) {
    require(1 <= delta && delta <= 3, "eul_term requires 1 <= delta <= 3");
    const Int D = d;
    auto N = [&](int a1, int a2) { return node_series(delta - 1, d, r, s, a1, a2, 0); };
    switch (n3) {
    case 0:
        return (D - 2 * D * D + D * D * D) * N(n1 + 1, n2) + (3 - 6 * D + 3 * D * D) * N(n1, n2 + 1);
    case 1:
        return (D * D - D) * N(n1 + 2, n2) + (3 * D * D - 4 * D + 1) * N(n1 + 1, n2 + 1) +
               (3 * D - 3) * N(n1, n2 + 2);
    case 2:
        return D * N(n1 + 3, n2) + (2 * D - 1) * N(n1 + 2, n2 + 1) + (3 * D - 2) * N(n1 + 1, n2 + 2) +
               N(n1, n2 + 3);
    case 3:
        return N(n1 + 3, n2 + 1) + N(n1 + 2, n2 + 2) + N(n1 + 1, n2 + 3);
    default:
        return 0; // n3 > 3
    }
}

inline Int Engine::boundary_term(int delta, int d, int r, int s, int n1, int n2, int n3) {
    require(1 <= delta && delta <= 3, "boundary_term requires 1 <= delta <= 3");
    Int total = 0;
    // one node collides with the marked point
    {
        Int b1 = node_series(delta - 1, d, r, s, n1, n2 + 1, n3) +
                 Int(d) * node_series(delta - 1, d, r, s, n1, n2, n3 + 1) +
                 3 * p_family(SingKind::A2, delta - 1, d, r, s, n1, n2, n3, 0);
        total += binomial(delta, 1) * b1;
    }
    // two nodes collide with the marked point: a tacnode, multiplicity 4
    if (delta >= 2) {
        Int b2 = 4 * p_family(SingKind::A3, delta - 2, d, r, s, n1, n2, n3, 0);
        total += binomial(delta, 2) * b2;
    }
    // three nodes collide with the marked point: a triple point, multiplicity 18
    // over the 3 sheets of the direction projection
    if (delta >= 3) {
        Int b3 = exact_div(Int(18) * p_family(SingKind::D4, delta - 3, d, r, s, n1, n2, n3, 0), 3);
        total += binomial(delta, 3) * b3;
    }
    return total;
}

inline Int Engine::eval_p(const Query& q) {
    const int delta = q.delta, d = q.d, r = q.r, s = q.s, n1 = q.n1, n2 = q.n2, n3 = q.n3, theta = q.theta;
    const Int D = d;
    switch (q.sing) {
    case SingKind::A1: {
        if (theta == 0)
            return 2 * node_series(delta, d, r, s, n1, n2, n3);
        if (theta == 1) {
            Int v = node_series(delta, d, r, s, n1, n2 + 1, n3) +
                    (D - 6) * node_series(delta, d, r, s, n1, n2, n3 + 1) +
                    2 * node_series(delta, d, r, s, n1 + 1, n2, n3);
            if (delta >= 2)
                v -= 2 * binomial(delta, 2) * p_family(SingKind::D4, delta - 2, d, r, s, n1, n2, n3, 0);
            return v;
        }
        return lambda_w_reduce(q);
    }
    case SingKind::A2: {
        Int v = p_family(SingKind::A1, delta, d, r, s, n1 + 1, n2, n3, theta) +
                p_family(SingKind::A1, delta, d, r, s, n1, n2 + 1, n3, theta) +
                (D - 3) * p_family(SingKind::A1, delta, d, r, s, n1, n2, n3 + 1, theta);
        if (delta >= 1) {
            v -= 2 * binomial(delta, 1) * p_family(SingKind::A3, delta - 1, d, r, s, n1, n2, n3, theta);
            v -= 3 * binomial(delta, 1) * hat_family(SingKind::D4, delta - 1, d, r, s, n1, n2, n3, theta);
        }
        if (delta >= 2)
            v -= 4 * binomial(delta, 2) * p_family(SingKind::D4, delta - 2, d, r, s, n1, n2, n3, theta);
        return v;
    }
    case SingKind::A3: {
        Int v = p_family(SingKind::A2, delta, d, r, s, n1, n2 + 1, n3, theta) +
                3 * p_family(SingKind::A2, delta, d, r, s, n1, n2, n3, theta + 1) +
                D * p_family(SingKind::A2, delta, d, r, s, n1, n2, n3 + 1, theta);
        if (delta >= 1)
            v -= 2 * binomial(delta, 1) * p_family(SingKind::A4, delta - 1, d, r, s, n1, n2, n3, theta);
        return v;
    }
    case SingKind::A4:
        return 2 * p_family(SingKind::A3, 0, d, r, s, n1, n2 + 1, n3, theta) +
               2 * p_family(SingKind::A3, 0, d, r, s, n1, n2, n3, theta + 1) +
               2 * p_family(SingKind::A3, 0, d, r, s, n1 + 1, n2, n3, theta) +
               (2 * D - 6) * p_family(SingKind::A3, 0, d, r, s, n1, n2, n3 + 1, theta);
    case SingKind::D4:
        return p_family(SingKind::A3, 0, d, r, s, n1, n2 + 1, n3, theta) -
               2 * p_family(SingKind::A3, 0, d, r, s, n1, n2, n3, theta + 1) +
               2 * p_family(SingKind::A3, 0, d, r, s, n1 + 1, n2, n3, theta) +
               (D - 6) * p_family(SingKind::A3, 0, d, r, s, n1, n2, n3 + 1, theta);
    }
    throw internal_error("eval_p: bad singularity kind");
}

// lambda_W^2 = -(3H - a) lambda_W - (a^2 - 2aH + 3H^2) eliminates the
// direction class once theta >= 2.
inline Int Engine::lambda_w_reduce(const Query& q) {
    require(q.theta >= 2, "lambda_w_reduce requires theta >= 2");
    auto sub = [this, &q](int n1, int n3, int theta) {
        if (n1 > 3 || n3 > 3)
            return Int(0); // vanishing short-circuit
        return p_family(q.sing, q.delta, q.d, q.r, q.s, n1, q.n2, n3, theta);
    };
    return -3 * sub(q.n1, q.n3 + 1, q.theta - 1) + sub(q.n1 + 1, q.n3, q.theta - 1) -
           sub(q.n1 + 2, q.n3, q.theta - 2) + 2 * sub(q.n1 + 1, q.n3 + 1, q.theta - 2) -
           3 * sub(q.n1, q.n3 + 2, q.theta - 2);
}

inline Int Engine::eval_hat(const Query& q) {
    if (q.theta == 0)
        return 0;
    if (q.theta == 1)
        return q.sing == SingKind::A1
                   ? node_series(q.delta, q.d, q.r, q.s, q.n1, q.n2, q.n3)
                   : plain_family(q.sing, q.delta, q.d, q.r, q.s, q.n1, q.n2, q.n3);
    return hat_family(q.sing, q.delta, q.d, q.r, q.s, q.n1, q.n2 + 1, q.n3, q.theta - 1) -
           hat_family(q.sing, q.delta, q.d, q.r, q.s, q.n1, q.n2, q.n3 + 1, q.theta - 2);
}

inline Int Engine::eval_plain(const Query& q) {
    Int p = p_family(q.sing, q.delta, q.d, q.r, q.s, q.n1, q.n2, q.n3, 0);
    return exact_div(p, proj_degree(q.sing));
}

inline Int Engine::characteristic_number(int d, int delta, std::optional<SingKind> sing, int r, int s,
                                         bool ordered) {
    clear_range_flag();
    require(d >= 1, "d must be >= 1");
    require(delta >= 0, "delta must be >= 0");
    require(r >= 0 && s >= 0, "r and s must be >= 0");
    if (!sing && delta > 0)
        throw guard_error("nodes without a singularity: express delta pure nodes as delta-1 nodes plus a "
                          "marked A1");
    const int c_tail = sing ? codim(*sing) : 0;
    const int total_codim = delta + c_tail;
    if (total_codim > 4)
        throw unsupported_error("total codimension " + std::to_string(total_codim) +
                                " exceeds the supported bound 4");
    const int budget = d * (d + 3) / 2 + 3 - total_codim;
    if (r + 2 * s != budget)
        throw guard_error("r + 2s must equal d(d+3)/2 + 3 - (delta + c) = " + std::to_string(budget) +
                          ", got " + std::to_string(r + 2 * s));
    check_range(d >= c_tail + 2 * delta, "d must be at least c + 2 delta = " +
                                             std::to_string(c_tail + 2 * delta) + ", got " +
                                             std::to_string(d));
    Int value;
    if (!sing)
        value = smooth_count(d, r, s);
    else if (*sing == SingKind::A1)
        value = node_series(delta, d, r, s, 0, 0, 0);
    else
        value = plain_family(*sing, delta, d, r, s, 0, 0, 0);
    if (!ordered) {
        const int nodes = delta + (sing && *sing == SingKind::A1 ? 1 : 0);
        value = exact_div(value, factorial(nodes));
    }
    return value;
}

} // namespace charnum
