#pragma once

// Golden reference data: the twelve closed-form count families (polynomials
// in d, one per s in 0..3) and the externally published check constants
// (cusp characteristic numbers and genus-2 BPS numbers).  These are
// transcribed, not derived; the engine is judged against them.

#include <cstdint>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "charnum/bigint.hpp"
#include "charnum/errors.hpp"

namespace charnum {

enum class RefFamily {
    Smooth, // no singularity
    A1,
    A2,
    A3,
    A4,
    D4,
    A1_2, // two nodes
    A1A2,
    A1A3,
    A1_3,
    A1_2A2,
    A1_4,
};

inline const std::vector<RefFamily>& all_ref_families() {
    static const std::vector<RefFamily> fams = {
        RefFamily::Smooth, RefFamily::A1,   RefFamily::A2,   RefFamily::A3,
        RefFamily::A4,     RefFamily::D4,   RefFamily::A1_2, RefFamily::A1A2,
        RefFamily::A1A3,   RefFamily::A1_3, RefFamily::A1_2A2, RefFamily::A1_4,
    };
    return fams;
}

inline const char* ref_family_name(RefFamily f) {
    switch (f) {
    case RefFamily::Smooth: return "N";
    case RefFamily::A1:     return "A1";
    case RefFamily::A2:     return "A2";
    case RefFamily::A3:     return "A3";
    case RefFamily::A4:     return "A4";
    case RefFamily::D4:     return "D4";
    case RefFamily::A1_2:   return "A1^2";
    case RefFamily::A1A2:   return "A1 A2";
    case RefFamily::A1A3:   return "A1 A3";
    case RefFamily::A1_3:   return "A1^3";
    case RefFamily::A1_2A2: return "A1^2 A2";
    case RefFamily::A1_4:   return "A1^4";
    }
    throw internal_error("ref_family_name: bad enum");
}

// Total codimension of the singularity configuration.
inline int ref_codim(RefFamily f) {
    switch (f) {
    case RefFamily::Smooth: return 0;
    case RefFamily::A1:     return 1;
    case RefFamily::A2:
    case RefFamily::A1_2:   return 2;
    case RefFamily::A3:
    case RefFamily::A1A2:
    case RefFamily::A1_3:   return 3;
    default:                return 4;
    }
}

// Number of A1 factors (the counts are ordered in these; dividing by the
// factorial of this gives the unordered count).
inline int ref_node_count(RefFamily f) {
    switch (f) {
    case RefFamily::A1:     return 1;
    case RefFamily::A1_2:   return 2;
    case RefFamily::A1A2:
    case RefFamily::A1A3:   return 1;
    case RefFamily::A1_3:   return 3;
    case RefFamily::A1_2A2: return 2;
    case RefFamily::A1_4:   return 4;
    default:                return 0;
    }
}

// Smallest degree for which the formula family is proven.
inline int ref_d_min(RefFamily f) {
    switch (f) {
    case RefFamily::Smooth: return 1;
    case RefFamily::A1:     return 1;
    case RefFamily::A2:     return 2;
    case RefFamily::A3:     return 3;
    case RefFamily::A4:     return 4;
    case RefFamily::D4:     return 4;
    case RefFamily::A1_2:   return 3;
    case RefFamily::A1A2:   return 4;
    case RefFamily::A1A3:   return 5;
    case RefFamily::A1_3:   return 5;
    case RefFamily::A1_2A2: return 6;
    case RefFamily::A1_4:   return 7;
    }
    throw internal_error("ref_d_min: bad enum");
}

namespace detail {

// Evaluates c0 + c1 d + c2 d^2 + ... at the given degree.
inline Int poly_at(const Int& d, std::initializer_list<long long> coeffs) {
    Int acc = 0;
    Int p = 1;
    for (long long c : coeffs) {
        acc += c * p;
        p *= d;
    }
    return acc;
}

inline Int closed_form_raw(RefFamily f, int dd, int s) {
    const Int d = dd;
    switch (f) {
    case RefFamily::Smooth:
        switch (s) {
        case 0: return exact_div(d * (d * d - 1) * (d + 2) * (d * d + 4 * d + 6) * poly_at(d, {3, 13, 6, 2}), 324);
        case 1: return exact_div(d * (d * d - 1) * (d + 2) * (2 * d * d + 8 * d + 3), 36);
        case 2: return exact_div(d * (d - 1) * (d + 4), 3);
        case 3: return 1;
        }
        break;
    case RefFamily::A1:
        switch (s) {
        case 0:
            return exact_div(d * (d * d - 1) * (d * d - 1) * (d + 2) * (d + 3) * poly_at(d, {-6, -10, 1, 4, 2}),
                             108);
        case 1: return exact_div(d * (d - 1) * (d - 1) * (d + 3) * poly_at(d, {-2, -3, -9, 6, 2}), 12);
        case 2: return d * (d - 1) * (d - 1) * (d * d + 3 * d - 6);
        case 3: return 3 * (d - 1) * (d - 1);
        }
        break;
    case RefFamily::A2:
        switch (s) {
        case 0:
            return exact_div(d * (d * d - 1) * (d * d - 4) * poly_at(d, {-18, 0, -49, -30, 11, 12, 2}), 27);
        case 1: return exact_div(d * (d - 1) * (d - 2) * poly_at(d, {6, 9, -54, 1, 12, 2}), 3);
        case 2: return 4 * d * (d - 1) * (d - 2) * (d * d + 3 * d - 8);
        case 3: return 12 * (d - 1) * (d - 2);
        }
        break;
    case RefFamily::A3:
        switch (s) {
        case 0:
            return exact_div(
                d * (d - 1) * (d - 2) * poly_at(d, {8208, -11232, 10050, 762, -6625, -2556, 539, 408, 50}), 162);
        case 1:
            return exact_div((d - 2) * (d - 1) * poly_at(d, {-648, 1512, 2172, -2241, -485, 258, 50}), 18);
        case 2: return exact_div(2 * d * (d - 2) * (d + 5) * (25 * d * d - 96 * d + 84), 3);
        case 3: return 2 * (25 * d * d - 96 * d + 84);
        }
        break;
    case RefFamily::A4:
        switch (s) {
        case 0:
            return exact_div(5 * (d - 1) * (d - 3) *
                                 poly_at(d, {-2160, 7164, -7902, 2720, 1529, -715, -445, 41, 50, 6}),
                             27);
        case 1:
            return exact_div(5 * (d - 3) * poly_at(d, {360, -762, -107, 765, -231, -105, 26, 6}), 3);
        case 2: return 20 * d * (d - 3) * (3 * d - 5) * (d * d + 3 * d - 12);
        case 3: return 60 * (d - 3) * (3 * d - 5);
        }
        break;
    case RefFamily::D4:
        switch (s) {
        case 0:
            return exact_div(5 * (d - 1) * (d - 2) * (d - 2) * (d + 4) *
                                 poly_at(d, {108, -270, 234, -91, -66, -1, 12, 2}),
                             36);
        case 1:
            return exact_div(5 * (d - 2) * (d - 2) * poly_at(d, {-48, 90, 85, -102, -15, 12, 2}), 4);
        case 2: return 15 * d * (d - 2) * (d - 2) * (d * d + 3 * d - 12);
        case 3: return 45 * (d - 2) * (d - 2);
        }
        break;
    case RefFamily::A1_2:
        switch (s) {
        case 0:
            return exact_div(d * (d * d - 1) * (d * d - 4) *
                                 poly_at(d, {198, 18, 629, 333, -142, -255, -25, 30, 6}),
                             108);
        case 1:
            return exact_div(d * (d - 1) * (d - 2) * poly_at(d, {-78, -69, 537, 190, -297, -55, 30, 6}), 12);
        case 2: return d * (d - 1) * (d - 2) * (d * d + 3 * d - 8) * (3 * d * d - 3 * d - 11);
        case 3: return 3 * (d - 1) * (d - 2) * (3 * d * d - 3 * d - 11);
        }
        break;
    case RefFamily::A1A2:
        switch (s) {
        case 0:
            return exact_div(d * (d - 1) * (d - 2) * (d - 3) *
                                 poly_at(d, {1836, -2034, 1512, 641, -1422, -1288, -186, 155, 60, 6}),
                             27);
        case 1:
            return exact_div((d * d - 1) * (d - 2) * (d - 3) *
                                 poly_at(d, {-144, 438, 123, -338, -37, 36, 6}),
                             3);
        case 2: return 4 * d * (d - 2) * (d - 3) * (d + 5) * poly_at(d, {18, -11, -6, 3});
        case 3: return 12 * (d - 3) * poly_at(d, {18, -11, -6, 3});
        }
        break;
    case RefFamily::A1A3:
        switch (s) {
        case 0:
            return exact_div((d - 1) * (d - 3) *
                                 poly_at(d, {120960, -402480, 436176, -131080, -112250, 40482, 40955, -3139,
                                             -6967, -489, 358, 50}),
                             54);
        case 1:
            return exact_div((d - 3) * poly_at(d, {-19440, 41808, 7912, -41156, 2359, 14857, -2389, -1471,
                                                   158, 50}),
                             6);
        case 2: return 2 * d * (d - 3) * (d * d + 3 * d - 12) * poly_at(d, {280, -122, -71, 25});
        case 3: return 6 * (d - 3) * poly_at(d, {280, -122, -71, 25});
        }
        break;
    case RefFamily::A1_3:
        switch (s) {
        case 0:
            return exact_div(d * (d - 1) * (d - 2) *
                                 poly_at(d, {110700, -165798, 129360, 7039, -106948, -58136, 19103, 21919,
                                             470, -2664, -315, 108, 18}),
                             108);
        case 1:
            return exact_div((d - 1) * (d - 2) *
                                 poly_at(d, {-8640, 20802, 26955, -20197, -25775, 7774, 6383, -1179, -567,
                                             54, 18}),
                             12);
        case 2:
            return d * (d - 2) * (d + 5) * poly_at(d, {1050, -829, -458, 423, 9, -54, 9});
        case 3: return 3 * poly_at(d, {1050, -829, -458, 423, 9, -54, 9});
        }
        break;
    case RefFamily::A1_2A2:
        switch (s) {
        case 0:
            return exact_div((d - 1) * (d - 3) *
                                 poly_at(d, {-120960, 413280, -452904, 129112, 127254, -39896, -52991, 664,
                                             12169, 1209, -1124, -159, 36, 6}),
                             9);
        case 1:
            return (d - 3) * poly_at(d, {19680, -42896, -7828, 38600, 6389, -20186, 367, 3653, -236, -249,
                                         12, 6});
        case 2:
            return 12 * d * (d - 3) * (d * d + 3 * d - 12) * poly_at(d, {-280, 82, 125, -30, -12, 3});
        case 3: return 36 * (d - 3) * poly_at(d, {-280, 82, 125, -30, -12, 3});
        }
        break;
    case RefFamily::A1_4:
        switch (s) {
        case 0:
            return exact_div((d - 1) * (d - 3) *
                                 poly_at(d, {3404160, -11795040, 12893256, -3282032, -4123550, 1150606,
                                             1773729, 73143, -486678, -75352, 63140, 11660, -3843, -747,
                                             90, 18}),
                             36);
        case 1:
            return exact_div((d - 3) * poly_at(d, {-554880, 1215312, 245636, -1051128, -362481, 653953,
                                                   80206, -164328, -4254, 18590, -261, -945, 18, 18}),
                             4);
        case 2:
            return 3 * d * (d - 3) * (d * d + 3 * d - 12) *
                   poly_at(d, {7880, -1386, -4671, 691, 801, -135, -45, 9});
        case 3: return 9 * (d - 3) * poly_at(d, {7880, -1386, -4671, 691, 801, -135, -45, 9});
        }
        break;
    }
    throw guard_error("closed form: s must be 0..3, got " + std::to_string(s));
}

} // namespace detail

// r from the line/point budget r + 2s = d(d+3)/2 + 3 - codim.
inline int ref_r(RefFamily f, int d, int s) { return d * (d + 3) / 2 + 3 - ref_codim(f) - 2 * s; }

struct ExternalValue {
    const char* source; // "cusp-C3", "cusp-C4", "BPS-g2"
    RefFamily family;
    int d;
    int r;
    int s;
    Int value;
    bool unordered; // value counts unordered nodes (divide engine output by node_count!)
};

namespace detail {

inline void reference_self_check_impl();

inline std::once_flag& ref_check_flag() {
    static std::once_flag flag;
    return flag;
}

} // namespace detail

// Exact closed-form value (ordered node convention, like the engine).
inline Int closed_form_value(RefFamily f, int d, int s) {
    if (s < 0 || s > 3)
        throw guard_error("closed form: s must be 0..3, got " + std::to_string(s));
    if (d < ref_d_min(f))
        throw guard_error(std::string("closed form for ") + ref_family_name(f) + " requires d >= " +
                          std::to_string(ref_d_min(f)) + ", got " + std::to_string(d));
    std::call_once(detail::ref_check_flag(), detail::reference_self_check_impl);
    return detail::closed_form_raw(f, d, s);
}

// (r, value) for one table cell.
inline std::pair<int, Int> closed_form_cell(RefFamily f, int d, int s) {
    return {ref_r(f, d, s), closed_form_value(f, d, s)};
}

inline const std::vector<ExternalValue>& external_values() {
    static const std::vector<ExternalValue> vals = [] {
        std::vector<ExternalValue> v;
        // characteristic numbers of planar cubics with a cusp
        v.push_back({"cusp-C3", RefFamily::A2, 3, 10, 0, Int(17760), false});
        v.push_back({"cusp-C3", RefFamily::A2, 3, 8, 1, Int(2064), false});
        v.push_back({"cusp-C3", RefFamily::A2, 3, 6, 2, Int(240), false});
        v.push_back({"cusp-C3", RefFamily::A2, 3, 4, 3, Int(24), false});
        // planar quartics with two (unordered) nodes and a cusp
        v.push_back({"cusp-C4", RefFamily::A1_2A2, 4, 13, 0, Int(10613184), true});
        v.push_back({"cusp-C4", RefFamily::A1_2A2, 4, 11, 1, Int(760368), true});
        v.push_back({"cusp-C4", RefFamily::A1_2A2, 4, 9, 2, Int(49152), true});
        v.push_back({"cusp-C4", RefFamily::A1_2A2, 4, 7, 3, Int(2304), true});
        // genus-2 degree-4 BPS numbers = one-node planar quartics
        v.push_back({"BPS-g2", RefFamily::A1, 4, 16, 0, Int(258300), false});
        v.push_back({"BPS-g2", RefFamily::A1, 4, 14, 1, Int(15498), false});
        v.push_back({"BPS-g2", RefFamily::A1, 4, 12, 2, Int(792), false});
        v.push_back({"BPS-g2", RefFamily::A1, 4, 10, 3, Int(27), false});
        return v;
    }();
    std::call_once(detail::ref_check_flag(), detail::reference_self_check_impl);
    return vals;
}

inline constexpr int kReferenceDataVersion = 1;

// FNV-1a fingerprint of the full table content: every family over ten
// degrees from its minimum, all s, plus the published constants.  Guards the
// transcribed coefficient lists against silent edits; the expected value is
// pinned in the test suite.
inline std::uint64_t reference_fingerprint() {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& text) {
        for (unsigned char c : text) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (RefFamily f : all_ref_families())
        for (int d = ref_d_min(f); d < ref_d_min(f) + 10; ++d)
            for (int s = 0; s <= 3; ++s)
                mix(std::string(ref_family_name(f)) + "/" + std::to_string(d) + "/" + std::to_string(s) +
                    "/" + detail::closed_form_raw(f, d, s).str());
    for (const ExternalValue& ev : external_values())
        mix(std::string(ev.source) + "/" + std::to_string(ev.r) + "/" + std::to_string(ev.s) + "/" +
            ev.value.str());
    return h;
}

namespace detail {

// Internal consistency of the data module itself, run once on first use:
// the closed forms must reproduce every published constant.
inline void reference_self_check_impl() {
    auto expect = [](const Int& got, const Int& want, const char* what) {
        if (got != want)
            throw internal_error(std::string("reference data inconsistent: ") + what + ": got " + got.str() +
                                 ", want " + want.str());
    };
    const Int bps[4] = {Int(258300), Int(15498), Int(792), Int(27)};
    const Int c3[4] = {Int(17760), Int(2064), Int(240), Int(24)};
    const Int c4[4] = {Int(10613184), Int(760368), Int(49152), Int(2304)};
    for (int s = 0; s <= 3; ++s) {
        expect(closed_form_raw(RefFamily::A1, 4, s), bps[s], "A1 at d=4 vs BPS");
        expect(closed_form_raw(RefFamily::A2, 3, s), c3[s], "A2 at d=3 vs cusp-C3");
        expect(exact_div(closed_form_raw(RefFamily::A1_2A2, 4, s), 2), c4[s], "A1^2 A2 at d=4 vs 2! cusp-C4");
    }
}

} // namespace detail

} // namespace charnum
