// charnum -- exact characteristic numbers of singular planar curves in P^3.
//
// Subcommands:
//   compute   one value: degree, singularity spec, line/point counts
//   table     a family over a degree range (json, csv or latex)
//   verify    the verification harness (closed forms, published constants,
//             cross-oracle, chern oracle, invariants)
//   chern     the Chern numbers s1, s2, s3 for one degree
//
// Exit codes: 0 success, 1 verification failure, 2 usage or guard error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charnum/charnum.hpp"

namespace {

using charnum::Int;
using nlohmann::json;

struct CacheOptions {
    std::string path;  // empty = disabled
    bool enabled = false;
};

CacheOptions resolve_cache(const std::string& cache_flag, bool no_cache) {
    CacheOptions out;
    if (no_cache)
        return out;
    if (!cache_flag.empty()) {
        out.path = cache_flag;
        out.enabled = true;
        return out;
    }
    if (const char* env = std::getenv("CHARNUM_CACHE"); env && *env) {
        out.path = env;
        out.enabled = true;
    }
    return out;
}

void load_cache_if_enabled(charnum::Engine& engine, const CacheOptions& cache) {
    if (cache.enabled)
        charnum::load_cache_file(engine, cache.path);
}

void save_cache_if_enabled(const charnum::Engine& engine, const CacheOptions& cache) {
    if (!cache.enabled)
        return;
    try {
        charnum::save_cache_file(engine, cache.path);
    } catch (const std::exception& e) {
        std::cerr << "warning: could not write cache: " << e.what() << "\n";
    }
}

struct CellValue {
    Int value;
    bool unproven = false;
};

// One table/compute cell under the chosen method.
CellValue evaluate_cell(const charnum::ComputeRequest& req, charnum::Engine& engine) {
    using namespace charnum;
    CellValue out;
    switch (req.method) {
    case Method::Recursion: {
        out.value = engine.characteristic_number(req.d, req.spec.engine_delta(), req.spec.engine_sing(),
                                                 req.r, req.s, req.ordered);
        out.unproven = engine.outside_proven_range();
        return out;
    }
    case Method::KP: {
        if (req.spec.tail || req.spec.nodes < 1 || req.spec.nodes > 4)
            throw guard_error("--method kp covers pure node specs A1..A1^4 only");
        const int budget = req.d * (req.d + 3) / 2 + 3 - req.spec.nodes;
        if (req.r + 2 * req.s != budget)
            throw guard_error("r + 2s must equal d(d+3)/2 + 3 - (delta + c) = " + std::to_string(budget) +
                              ", got " + std::to_string(req.r + 2 * req.s));
        out.value = kp_nodal(req.d, req.spec.nodes, req.r, req.s);
        if (!req.ordered)
            out.value = exact_div(out.value, factorial(req.spec.nodes));
        return out;
    }
    case Method::ClosedForm: {
        auto family = spec_to_ref_family(req.spec);
        if (!family)
            throw guard_error("no closed form for spec '" + format_sing_spec(req.spec) + "'");
        if (req.r != ref_r(*family, req.d, req.s))
            throw guard_error("r + 2s must equal d(d+3)/2 + 3 - (delta + c); the closed-form cell for d=" +
                              std::to_string(req.d) + ", s=" + std::to_string(req.s) + " has r=" +
                              std::to_string(ref_r(*family, req.d, req.s)));
        out.value = closed_form_value(*family, req.d, req.s);
        if (!req.ordered)
            out.value = exact_div(out.value, factorial(ref_node_count(*family)));
        return out;
    }
    }
    throw charnum::internal_error("evaluate_cell: bad method");
}

json cell_record(const charnum::ComputeRequest& req, const CellValue& cell) {
    json rec;
    rec["d"] = req.d;
    rec["spec"] = charnum::format_sing_spec(req.spec);
    rec["r"] = req.r;
    rec["s"] = req.s;
    rec["ordered"] = req.ordered;
    rec["method"] = charnum::name(req.method);
    rec["value"] = cell.value.str(); // decimal string: values exceed 64-bit range
    if (cell.unproven)
        rec["unproven_range"] = true;
    return rec;
}

int cmd_compute(const charnum::ComputeRequest& req, const CacheOptions& cache, bool force,
                const std::string& format) {
    charnum::Engine engine(charnum::EngineOptions{.force = force});
    load_cache_if_enabled(engine, cache);
    CellValue cell = evaluate_cell(req, engine);
    save_cache_if_enabled(engine, cache);
    if (format == "text") {
        std::cout << cell.value.str() << "\n";
        if (cell.unproven)
            std::cerr << "note: computed outside the proven degree range\n";
    } else {
        std::cout << cell_record(req, cell).dump() << "\n";
    }
    return 0;
}

int cmd_table(const charnum::SingSpec& spec, int d_min, int d_max, bool ordered, charnum::Method method,
              bool force, const std::string& format, const std::string& out_path,
              const CacheOptions& cache) {
    using namespace charnum;
    Engine engine(EngineOptions{.force = force});
    load_cache_if_enabled(engine, cache);

    const int family_d_min = (spec.tail ? codim(*spec.tail) : (spec.nodes > 0 ? 1 : 0)) +
                             2 * spec.engine_delta();
    // --force only widens the recursion route; the other methods have no
    // meaning below the family minimum
    const bool force_rows = force && method == Method::Recursion;
    struct Row {
        ComputeRequest req;
        CellValue cell;
    };
    std::vector<Row> rows;
    for (int d = d_min; d <= d_max; ++d) {
        if (d < 1)
            continue;
        if (d < family_d_min && !force_rows)
            continue;
        for (int s = 0; s <= 3; ++s) {
            const int r = d * (d + 3) / 2 + 3 - spec.total_codim() - 2 * s;
            if (r < 0)
                continue;
            ComputeRequest req{d, spec, r, s, ordered, method};
            rows.push_back({req, evaluate_cell(req, engine)});
        }
    }
    save_cache_if_enabled(engine, cache);

    std::string body;
    const std::string family = format_sing_spec(spec);
    if (format == "csv") {
        body = "d,s,r,family,ordered,value\n";
        for (const Row& row : rows)
            body += std::to_string(row.req.d) + "," + std::to_string(row.req.s) + "," +
                    std::to_string(row.req.r) + "," + family + "," + (ordered ? "true" : "false") + "," +
                    row.cell.value.str() + "\n";
    } else if (format == "json") {
        json doc;
        doc["family"] = family;
        doc["rows"] = json::array();
        for (const Row& row : rows)
            doc["rows"].push_back(cell_record(row.req, row.cell));
        body = doc.dump(2) + "\n";
    } else if (format == "latex") {
        body = "\\begin{tabular}{rrrl}\n";
        body += "$d$ & $s$ & $r$ & $N(" + family + ")$ \\\\\n\\hline\n";
        for (const Row& row : rows)
            body += std::to_string(row.req.d) + " & " + std::to_string(row.req.s) + " & " +
                    std::to_string(row.req.r) + " & " + row.cell.value.str() + " \\\\\n";
        body += "\\end{tabular}\n";
    } else {
        throw guard_error("unknown table format '" + format + "' (json, csv or latex)");
    }

    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) {
            std::cerr << "error: cannot open output file " << out_path << "\n";
            return 2;
        }
        out << body;
        if (!out) {
            std::cerr << "error: failed while writing " << out_path << "\n";
            return 2;
        }
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& suite_names) {
    using namespace charnum;
    std::vector<Suite> suites;
    if (suite_names.empty()) {
        suites = all_suites();
    } else {
        for (const std::string& s : suite_names) {
            auto suite = parse_suite(s);
            if (!suite)
                throw guard_error("unknown suite '" + s +
                                  "' (closed-forms, external, kp-cross, chern, invariants)");
            suites.push_back(*suite);
        }
    }
    Engine engine;
    VerifyReport total;
    for (Suite suite : suites) {
        VerifyReport report = run_suite(suite, engine);
        for (const CheckResult& c : report.checks) {
            if (c.pass)
                std::cout << "ok   " << c.name << " = " << c.got << "\n";
            else
                std::cout << "FAIL " << c.name << ": expected " << c.expected << ", got " << c.got << "\n";
        }
        std::cout << "suite " << name(suite) << ": " << report.passed() << "/" << report.checks.size()
                  << " passed\n";
        total.merge(report);
    }
    std::cout << "verify: " << total.passed() << " passed, " << total.failed() << " failed\n";
    return total.exit_status();
}

int cmd_chern(int d) {
    charnum::SymChern c = charnum::sym_cubic_chern(d);
    std::cout << c.s1.str() << " " << c.s2.str() << " " << c.s3.str() << "\n";
    return 0;
}

// Human-readable export of the built-in reference data.
int cmd_reference(const std::string& format) {
    using namespace charnum;
    char fp[32];
    std::snprintf(fp, sizeof fp, "%016llx", static_cast<unsigned long long>(reference_fingerprint()));
    if (format == "json") {
        json doc;
        doc["version"] = kReferenceDataVersion;
        doc["fingerprint"] = fp;
        doc["families"] = json::array();
        for (RefFamily f : all_ref_families()) {
            json fam;
            fam["name"] = ref_family_name(f);
            fam["codim"] = ref_codim(f);
            fam["nodes"] = ref_node_count(f);
            fam["d_min"] = ref_d_min(f);
            doc["families"].push_back(fam);
        }
        doc["external"] = json::array();
        for (const ExternalValue& ev : external_values()) {
            json rec;
            rec["source"] = ev.source;
            rec["family"] = ref_family_name(ev.family);
            rec["d"] = ev.d;
            rec["r"] = ev.r;
            rec["s"] = ev.s;
            rec["unordered"] = ev.unordered;
            rec["value"] = ev.value.str();
            doc["external"].push_back(rec);
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (format != "text")
        throw guard_error("unknown format '" + format + "' (json or text)");
    std::cout << "reference data version " << kReferenceDataVersion << ", fingerprint " << fp << "\n\n";
    std::cout << "families (name, codim, nodes, d_min):\n";
    for (RefFamily f : all_ref_families())
        std::cout << "  " << ref_family_name(f) << "  c=" << ref_codim(f) << "  nodes=" << ref_node_count(f)
                  << "  d_min=" << ref_d_min(f) << "\n";
    std::cout << "\npublished constants:\n";
    for (const ExternalValue& ev : external_values())
        std::cout << "  " << ev.source << "  " << ref_family_name(ev.family) << "  d=" << ev.d << " (r,s)=("
                  << ev.r << "," << ev.s << ")" << (ev.unordered ? " unordered" : "") << "  "
                  << ev.value.str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characteristic numbers of singular planar curves in P^3"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute one characteristic number");
    int c_d = 0, c_r = 0, c_s = 0;
    std::string c_spec = "N", c_method = "recursion", c_format = "json", c_cache;
    bool c_unordered = false, c_no_cache = false, c_force = false;
    compute->add_option("--d", c_d, "curve degree")->required();
    compute->add_option("--spec", c_spec, "singularity spec, e.g. N, A1, A1^2 A2");
    compute->add_option("--r", c_r, "number of generic lines")->required();
    compute->add_option("--s", c_s, "number of generic points")->required();
    compute->add_flag("--unordered", c_unordered, "divide by the factorial of the node count");
    compute->add_option("--method", c_method, "recursion | kp | closed-form");
    compute->add_option("--format", c_format, "json | text");
    compute->add_option("--cache", c_cache, "memo-cache file (default: $CHARNUM_CACHE)");
    compute->add_flag("--no-cache", c_no_cache, "disable the memo cache");
    compute->add_flag("--force", c_force, "compute outside proven degree ranges (tagged)");

    // table
    auto* table = app.add_subcommand("table", "tabulate a family over a degree range");
    int t_dmin = 0, t_dmax = -1;
    std::string t_family, t_method = "recursion", t_format = "csv", t_out, t_cache;
    bool t_unordered = false, t_no_cache = false, t_force = false;
    table->add_option("--family", t_family, "singularity spec, e.g. A1, A1^2 A2")->required();
    table->add_option("--d-min", t_dmin, "first degree")->required();
    table->add_option("--d-max", t_dmax, "last degree")->required();
    table->add_flag("--unordered", t_unordered, "divide by the factorial of the node count");
    table->add_option("--method", t_method, "recursion | kp | closed-form");
    table->add_option("--format", t_format, "json | csv | latex");
    table->add_option("--out", t_out, "write to file instead of stdout");
    table->add_option("--cache", t_cache, "memo-cache file (default: $CHARNUM_CACHE)");
    table->add_flag("--no-cache", t_no_cache, "disable the memo cache");
    table->add_flag("--force", t_force, "include degrees below the proven range (tagged)");

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> v_suites;
    verify->add_option("--suite", v_suites,
                       "closed-forms | external | kp-cross | chern | invariants (default: all)");

    // chern
    auto* chern = app.add_subcommand("chern", "print s1 s2 s3 for one degree");
    int ch_d = 0;
    chern->add_option("--d", ch_d, "curve degree")->required();

    // reference
    auto* reference = app.add_subcommand("reference", "export the built-in reference data");
    std::string ref_format = "text";
    reference->add_option("--format", ref_format, "json | text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*compute) {
            auto method = charnum::parse_method(c_method);
            if (!method)
                throw charnum::guard_error("unknown method '" + c_method +
                                           "' (recursion, kp or closed-form)");
            if (c_format != "json" && c_format != "text")
                throw charnum::guard_error("unknown format '" + c_format + "' (json or text)");
            charnum::ComputeRequest req{c_d, charnum::parse_sing_spec(c_spec), c_r, c_s, !c_unordered,
                                        *method};
            return cmd_compute(req, resolve_cache(c_cache, c_no_cache), c_force, c_format);
        }
        if (*table) {
            auto method = charnum::parse_method(t_method);
            if (!method)
                throw charnum::guard_error("unknown method '" + t_method +
                                           "' (recursion, kp or closed-form)");
            return cmd_table(charnum::parse_sing_spec(t_family), t_dmin, t_dmax, !t_unordered, *method,
                             t_force, t_format, t_out, resolve_cache(t_cache, t_no_cache));
        }
        if (*verify)
            return cmd_verify(v_suites);
        if (*chern)
            return cmd_chern(ch_d);
        if (*reference)
            return cmd_reference(ref_format);
    } catch (const charnum::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
