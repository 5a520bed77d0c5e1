#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "planar/elekes.hpp"
#include "planar/errors.hpp"
#include "planar/exponents.hpp"
#include "planar/io.hpp"
#include "planar/number_set.hpp"
#include "planar/solymosi.hpp"
#include "planar/verify.hpp"

using namespace planar;
using nlohmann::json;

namespace {

std::optional<Rational> parse_alpha(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_rational(text);
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << doc.dump(2) << "\n";
    if (!out) throw UsageError("write failed for " + path);
}

struct GenArgs {
    std::string kind;
    std::uint64_t n = 0;
    std::string alpha;
    std::string out = "a.set";
    std::string out_b = "b.set";
};

int cmd_gen(const GenArgs& args) {
    ConstructionKind kind = parse_construction(args.kind);
    Generated gen = generate(kind, args.n, parse_alpha(args.alpha));

    std::string comment = construction_name(kind) + " n=" + std::to_string(args.n);
    if (!args.alpha.empty()) comment += " alpha=" + args.alpha;
    write_set_file(args.out, gen.a, comment);

    MultiplicityProfile prof = multiplicity(gen.a);
    std::cout << "wrote " << args.out << ": n=" << gen.a.size() << " k=" << prof.k;
    if (prof.alpha) std::cout << " alpha=" << *prof.alpha;
    std::cout << "\n";
    if (gen.b) {
        write_set_file(args.out_b, *gen.b, comment + " (second set)");
        std::cout << "wrote " << args.out_b << ": n=" << gen.b->size() << "\n";
    }
    return 0;
}

struct StatsArgs {
    std::string file;
    std::string file_b;
    std::uint64_t energy_cap = 64;
};

int cmd_stats(const StatsArgs& args) {
    NumberSet a = read_set_file(args.file);
    if (!args.file_b.empty()) {
        NumberSet b = read_set_file(args.file_b);
        std::cout << "|A| = " << a.size() << "\n|B| = " << b.size()
                  << "\n|A+B| = " << cross_sumset(a, b).size()
                  << "\n|A*B| = " << cross_productset(a, b).size() << "\n";
        return 0;
    }

    MultiplicityProfile prof = multiplicity(a);
    std::cout << "|A| = " << a.size() << "\n|A+A| = " << sumset(a).size()
              << "\n|AA| = " << productset(a).size() << "\nk = " << prof.k << "\n";
    if (prof.alpha_decimal50) std::cout << "alpha = " << *prof.alpha_decimal50 << "\n";

    bool invertible = true;
    for (const PlanarNumber& x : a.elements()) invertible = invertible && is_invertible(x);
    if (!invertible) {
        std::cout << "energy skipped: set has non-invertible elements\n";
        return 0;
    }
    if (a.size() > args.energy_cap) {
        std::cout << "energy skipped: |A| exceeds the cap " << args.energy_cap << "\n";
        return 0;
    }
    EnergyReport rep = energy_report(a, args.energy_cap);
    std::cout << "E = " << rep.energy << "\n";
    std::uint64_t fiber_total = 0;
    for (const auto& [lam, r] : rep.r_div_hist) fiber_total += r;
    std::cout << "sum r_div = " << fiber_total << " (n^2 = " << a.size() * a.size() << ")\n";
    return 0;
}

struct IncidenceArgs {
    std::string file;
    std::string sign = "positive";
    std::uint64_t cap = 32;
    std::string json_out;
};

int cmd_incidence(const IncidenceArgs& args) {
    NumberSet a = read_set_file(args.file);
    ElekesConfig cfg = build_elekes(a);

    FamilySign sign = FamilySign::Positive;
    if (args.sign == "negative") {
        sign = FamilySign::Negative;
    } else if (args.sign != "positive") {
        throw UsageError("sign must be positive or negative");
    }
    SpecialIncidenceStats st = classify_incidences(cfg, sign, args.cap);

    std::cout << "|P| = " << cfg.points.size() << "\n|L| = " << cfg.lines.size()
              << "\nI = " << cfg.total_incidences << " (n^3 = "
              << static_cast<std::uint64_t>(a.size()) * a.size() * a.size() << ")\n"
              << "families = " << st.families.size() << "\nspecial = " << st.n_special
              << "\nstandard = " << st.n_standard << "\n";
    for (const std::string& v : st.bound_violations) std::cout << "bound violation: " << v << "\n";

    if (!args.json_out.empty()) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["system"] = a.system() == System::Dual ? "dual" : "double";
        if (st.sign) doc["sign"] = family_sign_name(*st.sign);
        doc["n"] = st.n;
        doc["points"] = cfg.points.size();
        doc["lines"] = cfg.lines.size();
        doc["incidences"] = cfg.total_incidences;
        doc["line_incidences"] = cfg.line_incidences;
        doc["families"] = st.families.size();
        doc["special"] = st.n_special;
        doc["standard"] = st.n_standard;
        doc["bound_violations"] = st.bound_violations;
        json specials = json::array();
        for (const SpecialIncidence& rec : st.specials) {
            std::array<double, 4> ex = incidence_exponents(st, rec);
            specials.push_back({{"point", rec.point_id},
                                {"line", rec.line_id},
                                {"family", rec.family_id},
                                {"group_lines", rec.n_group_lines},
                                {"family_lines", rec.n_family_lines},
                                {"fiber_points", rec.n_fiber_points},
                                {"same_point_families", rec.n_same_point_families},
                                {"exponents", ex}});
        }
        doc["specials"] = std::move(specials);
        json hist = json::array();
        for (const auto& [cls, count] : st.histogram)
            hist.push_back({{"classes", cls}, {"count", count}});
        doc["histogram"] = std::move(hist);
        write_json_file(args.json_out, doc);
        std::cout << "wrote " << args.json_out << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 7;
    std::uint64_t trials = 2000;
    std::uint64_t n = 0; // 0 = suite default (5 for elekes, 16 for solymosi)
    std::uint64_t sets = 10;
    std::string construction = "dual-grid";
    std::string alpha = "1/2";
    std::string json_out;
};

int cmd_verify(const VerifyArgs& args) {
    VerifySuite suite = parse_suite(args.suite);
    std::vector<CheckResult> checks;
    auto run = [&](VerifySuite s) {
        switch (s) {
            case VerifySuite::Lemmas: return verify_lemmas(args.seed, args.trials);
            case VerifySuite::Elekes:
                return verify_elekes(args.seed, args.n ? args.n : 5, args.sets);
            case VerifySuite::Solymosi:
                return verify_solymosi(parse_construction(args.construction),
                                       args.n ? args.n : 16, parse_alpha(args.alpha));
            case VerifySuite::All: break;
        }
        return std::vector<CheckResult>{};
    };
    if (suite == VerifySuite::All) {
        for (VerifySuite s : {VerifySuite::Lemmas, VerifySuite::Elekes, VerifySuite::Solymosi})
            for (CheckResult& c : run(s)) checks.push_back(std::move(c));
    } else {
        checks = run(suite);
    }

    for (const CheckResult& c : checks)
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << " (" << c.detail << ")\n";
    const bool ok = all_pass(checks);
    std::cout << (ok ? "all checks passed" : "checks FAILED") << "\n";

    if (!args.json_out.empty()) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["suite"] = suite_name(suite);
        doc["seed"] = args.seed;
        doc["all_pass"] = ok;
        json arr = json::array();
        for (const CheckResult& c : checks)
            arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        doc["checks"] = std::move(arr);
        write_json_file(args.json_out, doc);
    }
    return ok ? 0 : 1;
}

struct SweepArgs {
    std::string config;
};

int cmd_sweep(const SweepArgs& args) {
    std::ifstream in(args.config);
    if (!in) throw UsageError("cannot open config " + args.config);
    json cfg;
    try {
        cfg = json::parse(in, nullptr, true, true); // allow comments
    } catch (const json::exception& e) {
        throw UsageError(std::string("config parse error: ") + e.what());
    }
    if (!cfg.contains("construction") || !cfg.contains("sizes"))
        throw UsageError("config needs `construction` and `sizes`");
    if (!cfg["sizes"].is_array()) throw UsageError("config `sizes` must be an array");

    ConstructionKind kind = parse_construction(cfg["construction"].get<std::string>());
    std::optional<Rational> alpha;
    if (cfg.contains("alpha")) alpha = parse_rational(cfg["alpha"].get<std::string>());
    std::vector<std::uint64_t> sizes;
    for (const json& s : cfg["sizes"]) {
        if (!s.is_number_unsigned()) throw UsageError("config sizes must be positive integers");
        sizes.push_back(s.get<std::uint64_t>());
    }

    ExponentEstimate est = exponent_sweep(kind, alpha, sizes);
    std::cout << "slope = " << est.slope << " (envelope " << est.envelope << ") over "
              << est.measurements.size() << " sizes\n";
    if (est.theorem_reference)
        std::cout << "theorem exponent = " << est.theorem_reference->str() << " ("
                  << est.theorem_reference->approx() << ")\n";

    if (cfg.contains("csv")) {
        const std::string path = cfg["csv"].get<std::string>();
        std::ofstream out(path);
        if (!out) throw UsageError("cannot write " + path);
        out << "n,sumset,productset,max,seconds\n";
        for (std::size_t i = 0; i < est.measurements.size(); ++i)
            out << est.measurements[i].first << "," << est.sumset_sizes[i] << ","
                << est.productset_sizes[i] << "," << est.measurements[i].second << ","
                << est.seconds[i] << "\n";
        if (!out) throw UsageError("write failed for " + path);
        std::cout << "wrote " << path << "\n";
    }
    if (cfg.contains("json")) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["construction"] = construction_name(kind);
        if (alpha) doc["alpha"] = alpha->str();
        doc["sizes"] = sizes;
        json meas = json::array();
        for (const auto& [n, v] : est.measurements) meas.push_back({n, v});
        doc["measurements"] = std::move(meas);
        doc["sumset_sizes"] = est.sumset_sizes;
        doc["productset_sizes"] = est.productset_sizes;
        doc["slope"] = est.slope;
        doc["envelope"] = est.envelope;
        if (est.theorem_reference) {
            doc["theorem_exponent"] = est.theorem_reference->str();
            doc["theorem_exponent_approx"] = est.theorem_reference->approx();
        } else {
            doc["theorem_exponent"] = nullptr;
        }
        write_json_file(cfg["json"].get<std::string>(), doc);
        std::cout << "wrote " << cfg["json"].get<std::string>() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sum-product and incidence experiments over dual and double numbers"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a construction into a set file");
    gen->add_option("kind", gen_args.kind,
                    "unit-real-dual | dual-grid | double-null-pair | double-diagonal-grid")
        ->required();
    gen->add_option("--n", gen_args.n, "target size")->required();
    gen->add_option("--alpha", gen_args.alpha, "multiplicity exponent p/q (grids)");
    gen->add_option("--out", gen_args.out, "output set file (default a.set)");
    gen->add_option("--out-b", gen_args.out_b, "second set file for the null pair");

    StatsArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "sumset/productset/multiplicity/energy report");
    stats->add_option("file", stats_args.file, "set file")->required();
    stats->add_option("--b", stats_args.file_b, "second set file for cross statistics");
    stats->add_option("--energy-cap", stats_args.energy_cap, "skip energy above this size");

    IncidenceArgs inc_args;
    CLI::App* inc = app.add_subcommand("incidence",
                                       "point-line configuration and incidence classification");
    inc->add_option("file", inc_args.file, "set file")->required();
    inc->add_option("--sign", inc_args.sign, "double-number family sign (positive|negative)");
    inc->add_option("--cap", inc_args.cap, "classification size cap");
    inc->add_option("--json", inc_args.json_out, "write a JSON report");

    VerifyArgs ver_args;
    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", ver_args.suite, "lemmas | elekes | solymosi | all")->required();
    ver->add_option("--seed", ver_args.seed, "rng seed");
    ver->add_option("--trials", ver_args.trials, "random pairs per system (lemmas)");
    ver->add_option("--n", ver_args.n, "set size (elekes) or construction size (solymosi)");
    ver->add_option("--sets", ver_args.sets, "sets per system (elekes)");
    ver->add_option("--construction", ver_args.construction, "construction (solymosi)");
    ver->add_option("--alpha", ver_args.alpha, "construction alpha (solymosi)");
    ver->add_option("--json", ver_args.json_out, "write a JSON report");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "exponent sweep from a JSON config");
    sweep->add_option("--config", sweep_args.config, "JSON config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_args);
        if (stats->parsed()) return cmd_stats(stats_args);
        if (inc->parsed()) return cmd_incidence(inc_args);
        if (ver->parsed()) return cmd_verify(ver_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
