#pragma once

// Singularity-specification grammar shared by the CLI and the tables:
//
//   spec := "N" | nodes | tail | nodes ws? tail
//   nodes := "A1" | "A1^" <count>
//   tail  := "A2" | "A3" | "A4" | "D4"
//
// "A1^2 A2" means two plain nodes plus one cusp.  The canonical form uses a
// single space ("A1 A2", "A1^2 A2"); parsing also accepts the glued form
// ("A1A2").  format_sing_spec(parse_sing_spec(x)) is the identity on
// canonical strings.

#include <optional>
#include <string>
#include <string_view>

#include "charnum/errors.hpp"
#include "charnum/recursion.hpp"
#include "charnum/reference.hpp"

namespace charnum {

struct SingSpec {
    int nodes = 0;                     // number of A1 factors
    std::optional<SingKind> tail;      // one of A2..D4, if present

    friend bool operator==(const SingSpec&, const SingSpec&) = default;

    bool smooth() const { return nodes == 0 && !tail; }
    int total_codim() const { return nodes + (tail ? codim(*tail) : 0); }

    // (delta, sing) in the engine's marked-singularity convention
    int engine_delta() const { return tail ? nodes : (nodes > 0 ? nodes - 1 : 0); }
    std::optional<SingKind> engine_sing() const {
        if (tail)
            return tail;
        if (nodes > 0)
            return SingKind::A1;
        return std::nullopt;
    }
};

inline std::string format_sing_spec(const SingSpec& s) {
    if (s.smooth())
        return "N";
    std::string out;
    if (s.nodes == 1)
        out = "A1";
    else if (s.nodes > 1)
        out = "A1^" + std::to_string(s.nodes);
    if (s.tail) {
        if (!out.empty())
            out += ' ';
        out += name(*s.tail);
    }
    return out;
}

inline SingSpec parse_sing_spec(std::string_view text) {
    auto fail = [&text]() -> SingSpec {
        throw guard_error("cannot parse singularity spec '" + std::string(text) +
                          "' (expected e.g. N, A1, A1^2, A2, A1 A2, A1^2 A2)");
    };
    std::string_view rest = text;
    auto skip_ws = [&rest]() {
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t'))
            rest.remove_prefix(1);
    };
    skip_ws();
    while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t'))
        rest.remove_suffix(1);
    SingSpec out;
    if (rest.empty() || rest == "N")
        return out;
    if (rest.starts_with("A1") && (rest.size() == 2 || rest[2] != '0')) {
        // "A1" or "A1^k" node prefix -- but bare "A1" may also start "A1A2"
        std::string_view after = rest.substr(2);
        int count = 1;
        if (after.starts_with('^')) {
            after.remove_prefix(1);
            if (after.empty() || after.front() < '1' || after.front() > '9')
                fail();
            count = 0;
            while (!after.empty() && after.front() >= '0' && after.front() <= '9') {
                count = count * 10 + (after.front() - '0');
                after.remove_prefix(1);
                if (count > 8)
                    fail();
            }
        }
        out.nodes = count;
        rest = after;
        skip_ws();
    }
    skip_ws();
    if (!rest.empty()) {
        auto kind = parse_sing_kind(rest);
        if (!kind || *kind == SingKind::A1)
            fail();
        out.tail = *kind;
    }
    if (out.total_codim() > 4)
        throw guard_error("singularity spec '" + std::string(text) + "' has total codimension " +
                          std::to_string(out.total_codim()) + " > 4");
    return out;
}

// The twelve reference families, as specs.
inline SingSpec ref_family_spec(RefFamily f) {
    switch (f) {
    case RefFamily::Smooth: return {0, std::nullopt};
    case RefFamily::A1:     return {1, std::nullopt};
    case RefFamily::A2:     return {0, SingKind::A2};
    case RefFamily::A3:     return {0, SingKind::A3};
    case RefFamily::A4:     return {0, SingKind::A4};
    case RefFamily::D4:     return {0, SingKind::D4};
    case RefFamily::A1_2:   return {2, std::nullopt};
    case RefFamily::A1A2:   return {1, SingKind::A2};
    case RefFamily::A1A3:   return {1, SingKind::A3};
    case RefFamily::A1_3:   return {3, std::nullopt};
    case RefFamily::A1_2A2: return {2, SingKind::A2};
    case RefFamily::A1_4:   return {4, std::nullopt};
    }
    throw internal_error("ref_family_spec: bad enum");
}

inline std::optional<RefFamily> spec_to_ref_family(const SingSpec& s) {
    for (RefFamily f : all_ref_families())
        if (ref_family_spec(f) == s)
            return f;
    return std::nullopt;
}

enum class Method { Recursion, KP, ClosedForm };

inline std::optional<Method> parse_method(std::string_view s) {
    if (s == "recursion") return Method::Recursion;
    if (s == "kp") return Method::KP;
    if (s == "closed-form") return Method::ClosedForm;
    return std::nullopt;
}

inline const char* name(Method m) {
    switch (m) {
    case Method::Recursion:  return "recursion";
    case Method::KP:         return "kp";
    case Method::ClosedForm: return "closed-form";
    }
    throw internal_error("name(Method): bad enum");
}

struct ComputeRequest {
    int d = 1;
    SingSpec spec;
    int r = 0;
    int s = 0;
    bool ordered = true;
    Method method = Method::Recursion;
};

} // namespace charnum
