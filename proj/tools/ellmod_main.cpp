// ellmod command-line interface: constants tables, X0(N) genus tables,
// point counts, surjectivity certificates, Chebotarev trace-count tables,
// family scans and the GL2 group-theory verification harness.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ellmod/bounds.hpp"
#include "ellmod/certify.hpp"
#include "ellmod/chebotarev.hpp"
#include "ellmod/closure.hpp"
#include "ellmod/family.hpp"
#include "ellmod/genus_x0.hpp"
#include "ellmod/gl2_counts.hpp"
#include "ellmod/mw_harness.hpp"
#include "ellmod/point_count.hpp"
#include "ellmod/primes.hpp"
#include "ellmod/report.hpp"
#include "ellmod/scan.hpp"
#include "ellmod/trace_sampling.hpp"

namespace {

using ellmod::Json;

struct RangeSpec {
    long lo = 0;
    long hi = 0;
};

RangeSpec parse_range(const std::string& text, const std::string& field) {
    RangeSpec r;
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            r.lo = r.hi = std::stol(text);
        } else {
            r.lo = std::stol(text.substr(0, sep));
            r.hi = std::stol(text.substr(sep + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError(field, "expected N or N..M, got '" + text + "'");
    }
    if (r.lo > r.hi) throw CLI::ValidationError(field, "empty range '" + text + "'");
    return r;
}

std::vector<std::uint32_t> primes_in_range(long lo, long hi) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p : ellmod::primes_up_to(static_cast<std::uint32_t>(std::max(hi, 0L))))
        if (static_cast<long>(p) >= lo) out.push_back(p);
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << text;
    if (!text.empty() && text.back() != '\n') os << '\n';
}

ellmod::FamilySpec load_family(const std::string& family_file,
                               const std::vector<std::string>& curve_args) {
    std::vector<std::string> lines = curve_args;
    if (!family_file.empty()) {
        std::ifstream is(family_file);
        if (!is) throw CLI::ValidationError("--family", "cannot read " + family_file);
        std::string line;
        while (std::getline(is, line)) lines.push_back(line);
    }
    if (lines.empty())
        throw CLI::ValidationError("--curve/--family", "no curves given");
    return ellmod::parse_family_lines(lines);
}


// CLI11 unpacks bracketed values handed to container options, which would
// mangle the [A];[B] curve syntax; a per-occurrence callback keeps each
// argument intact.
void add_curve_option(CLI::App* cmd, std::vector<std::string>& sink) {
    cmd->add_option_function<std::string>(
           "--curve", [&sink](const std::string& v) { sink.push_back(v); },
           "curve [A-coeffs];[B-coeffs], repeatable")
        ->trigger_on_parse();
}

std::vector<ellmod::CurveQ> constant_curves_Q(const ellmod::FamilySpec& fam) {
    std::vector<ellmod::CurveQ> out;
    for (std::size_t i = 0; i < fam.n(); ++i) {
        if (fam.A[i].degree() > 0 || fam.B[i].degree() > 0)
            throw CLI::ValidationError("--curve", "expected constant curves over Q");
        out.push_back(fam.specialize_at(i, ellmod::Rational(0)));
    }
    return out;
}

int run_constants(const RangeSpec& g, const std::string& format, const std::string& out) {
    if (g.lo < 0) throw CLI::ValidationError("--g", "genus must be nonnegative");
    if (format == "csv") write_output(ellmod::constants_csv(g.lo, g.hi), out);
    else write_output(ellmod::constants_json(g.lo, g.hi).dump(2), out);
    return 0;
}

int run_genus(const RangeSpec& range, const std::string& format, const std::string& out) {
    if (range.lo < 1) throw CLI::ValidationError("range", "level must be >= 1");
    if (format == "csv")
        write_output(ellmod::genus_table_csv(range.lo, range.hi), out);
    else
        write_output(ellmod::genus_table_json(range.lo, range.hi).dump(2), out);
    return 0;
}

int run_count(const ellmod::FamilySpec& fam, std::uint64_t p_max,
              std::optional<std::uint32_t> ell, const std::string& format,
              const std::string& out, int threads) {
    const auto curves = constant_curves_Q(fam);
    ellmod::SampleLog log;
    const auto raw = ellmod::sample_traces_Q(curves, p_max, &log, threads);
    if (format == "csv") {
        std::ostringstream os;
        os << "p";
        for (std::size_t i = 0; i < curves.size(); ++i) os << ",a" << i + 1 << ",N" << i + 1;
        if (ell) os << ",det_mod_ell";
        os << "\n";
        for (const auto& r : raw) {
            os << r.place.p;
            for (std::int64_t a : r.traces)
                os << "," << a << "," << (static_cast<std::int64_t>(r.place.p) + 1 - a);
            if (ell) os << "," << r.place.p % *ell;
            os << "\n";
        }
        write_output(os.str(), out);
    } else {
        Json j = ellmod::json_header("point_counts");
        Json cfg;
        cfg["p_max"] = p_max;
        if (ell) cfg["ell"] = *ell;
        j["config"] = cfg;
        Json rows = Json::array();
        for (const auto& r : raw) {
            Json row;
            row["p"] = r.place.p;
            row["a"] = r.traces;
            rows.push_back(row);
        }
        j["rows"] = rows;
        Json skipped = Json::array();
        for (const auto& s : log.skipped) {
            Json e;
            e["p"] = s.place.p;
            e["reason"] = s.reason;
            skipped.push_back(e);
        }
        j["skipped"] = skipped;
        write_output(j.dump(2), out);
    }
    return 0;
}

int run_certify(const ellmod::FamilySpec& fam, const std::vector<std::uint32_t>& ells,
                std::uint64_t p_max, std::optional<std::uint64_t> base_p,
                const std::string& out, int threads) {
    Json j = ellmod::json_header("certificates");
    Json cfg;
    cfg["ells"] = ells;
    cfg["p_max"] = p_max;
    if (base_p) cfg["base_p"] = *base_p;
    j["config"] = cfg;

    std::vector<ellmod::RawTraceData> raw;
    bool geometric = false;
    if (base_p) {
        geometric = true;
        std::vector<ellmod::CurveFt<ellmod::Fp>> curves;
        for (std::size_t i = 0; i < fam.n(); ++i)
            curves.push_back(ellmod::reduce_family_curve(fam.A[i], fam.B[i], *base_p));
        raw = ellmod::sample_traces_Fpt(curves, nullptr);
    } else {
        raw = ellmod::sample_traces_Q(constant_curves_Q(fam), p_max, nullptr, threads);
    }

    Json certs = Json::array();
    for (std::uint32_t ell : ells) {
        if (base_p && *base_p == ell)
            throw CLI::ValidationError("--ell", "ell equal to the base characteristic");
        const auto cert =
            ellmod::certify_product(ellmod::reduce_samples(raw, ell), ell, geometric);
        certs.push_back(ellmod::to_json(cert));
    }
    j["certificates"] = certs;
    write_output(j.dump(2), out);
    return 0;
}

int run_chebotarev(const ellmod::FamilySpec& fam, std::uint64_t p, std::uint32_t ell,
                   const std::string& format, const std::string& out, int threads) {
    const auto table = ellmod::chebotarev_table(fam, p, ell, threads);
    if (format == "csv") write_output(ellmod::chebotarev_csv(table), out);
    else write_output(ellmod::to_json(table, fam).dump(2), out);
    return 0;
}

int run_scan(const ellmod::FamilySpec& fam, const ellmod::ScanConfig& cfg,
             const std::string& out, const std::string& csv_out) {
    const auto report = ellmod::scan_exceptional(fam, cfg);
    write_output(ellmod::to_json(report).dump(2), out);
    if (!csv_out.empty()) write_output(ellmod::scan_summary_csv(report), csv_out);
    return report.partial ? 1 : 0;
}

int run_verify_group(std::uint32_t ell, bool harness, const std::string& format,
                     const std::string& out) {
    std::ostringstream os;
    if (!ellmod::is_prime_u64(ell)) throw CLI::ValidationError("--ell", "ell must be prime");
    const auto& table = ellmod::trace_det_table(ell);
    if (format == "csv") {
        os << "tau,det,count\n";
        for (std::uint32_t tau = 0; tau < ell; ++tau)
            for (std::uint32_t d = 1; d < ell; ++d)
                os << tau << "," << d << "," << table.count(tau, d) << "\n";
    } else {
        Json j = ellmod::json_header("gl2_counts");
        j["ell"] = ell;
        Json rows = Json::array();
        for (std::uint32_t tau = 0; tau < ell; ++tau)
            for (std::uint32_t d = 1; d < ell; ++d) {
                Json r;
                r["tau"] = tau;
                r["det"] = d;
                r["count"] = table.count(tau, d);
                rows.push_back(r);
            }
        j["rows"] = rows;
        os << j.dump(2);
    }
    os << "\n";

    if (harness) {
        if (ell != 5 && ell != 7)
            throw CLI::ValidationError("--harness",
                                       "full-fiber closure is desk-scale for ell in {5, 7}");
        using namespace ellmod;
        const Mat2 f0{1, 2, 3, 4, ell};
        int failures = 0;
        const auto check = [&](const std::string& name, bool ok) {
            os << (ok ? "pass" : "FAIL") << "  " << name << "\n";
            if (!ok) ++failures;
        };
        {
            auto H = closure(graph_subgroup(f0), 10'000'000);
            auto res = verify_mw_instance(H, all_units(ell));
            check("graph subgroup: proper with witness, trivial character",
                  !res.full && !res.witness.chi_nontrivial);
        }
        {
            auto H = closure(twisted_graph_subgroup(f0), 10'000'000);
            auto res = verify_mw_instance(H, all_units(ell));
            check("twisted graph: proper with witness, nontrivial quadratic character",
                  !res.full && res.witness.chi_nontrivial);
        }
        {
            const Mat2 e12{1, 1, 0, 1, ell}, e21{1, 0, 1, 1, ell};
            const Mat2 dg{unit_group_generator(ell), 0, 0, 1, ell};
            auto H = closure({DetLocusElement{{e12, e21}}, DetLocusElement{{e21, e12}},
                              DetLocusElement{{dg, dg}}},
                             10'000'000);
            auto res = verify_mw_instance(H, all_units(ell));
            check("three generators close to the full fiber product", res.full);
        }
        write_output(os.str(), out);
        return failures ? 1 : 0;
    }
    write_output(os.str(), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-ell Galois image toolkit for products of elliptic curves"};
    app.require_subcommand(1);
    app.fallthrough(); // global options are accepted after the subcommand
    app.set_config("--config", "", "flat key=value configuration file; flags take precedence");

    std::string format = "csv";
    std::string out;
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (results are thread-count invariant)")
        ->capture_default_str();

    // constants
    auto* sc_constants = app.add_subcommand("constants", "effective constants and bounds table");
    std::string g_range = "0..10";
    sc_constants->add_option("--g", g_range, "genus range N..M")->capture_default_str();
    sc_constants->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sc_constants->add_option("-o,--output", out);

    // genus-x0
    auto* sc_genus = app.add_subcommand("genus-x0", "genus table of X0(N)");
    std::string n_range = "1..100";
    sc_genus->add_option("range", n_range, "level range N..M")->required();
    sc_genus->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sc_genus->add_option("-o,--output", out);

    // shared curve inputs
    std::vector<std::string> curve_args;
    std::string family_file;

    // count
    auto* sc_count = app.add_subcommand("count", "point counts and Frobenius traces over Q");
    std::uint64_t p_max = 100;
    std::uint32_t ell_single = 0;
    add_curve_option(sc_count, curve_args);
    sc_count->add_option("--family", family_file, "file with one curve per line");
    sc_count->add_option("--p-max", p_max, "sample primes up to this bound")
        ->capture_default_str();
    sc_count->add_option("--ell", ell_single, "also report det = p mod ell");
    sc_count->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sc_count->add_option("-o,--output", out);

    // certify
    auto* sc_certify = app.add_subcommand("certify", "surjectivity certificates");
    std::string ell_range_str;
    std::uint64_t base_p = 0;
    add_curve_option(sc_certify, curve_args);
    sc_certify->add_option("--family", family_file, "file with one curve per line");
    std::uint64_t certify_p_max = 1000;
    sc_certify->add_option("--ell", ell_range_str, "prime or range A..B of levels")->required();
    sc_certify->add_option("--p-max", certify_p_max, "sample budget over Q")
        ->capture_default_str();
    sc_certify->add_option("--base-p", base_p,
                           "certify over F_p(t) at degree-1 places (geometric mode)");
    sc_certify->add_option("-o,--output", out);

    // chebotarev
    auto* sc_cheb = app.add_subcommand("chebotarev", "exact trace-count table over F_p");
    std::uint64_t cheb_p = 1009;
    std::uint32_t cheb_ell = 5;
    add_curve_option(sc_cheb, curve_args);
    sc_cheb->add_option("--family", family_file, "file with one curve per line");
    sc_cheb->add_option("--p", cheb_p, "prime p")->required();
    sc_cheb->add_option("--ell", cheb_ell, "prime ell != p")->required();
    sc_cheb->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sc_cheb->add_option("-o,--output", out);

    // scan
    auto* sc_scan = app.add_subcommand("scan", "exceptional-prime density scan");
    long T = 10;
    std::string scan_ells = "7..37";
    std::uint64_t iso_bound = 100;
    std::string csv_out;
    add_curve_option(sc_scan, curve_args);
    sc_scan->add_option("--family", family_file, "file with one curve per line");
    sc_scan->add_option("--T", T, "enumerate t0 = m/n with max(|m|,|n|) <= T")
        ->capture_default_str();
    sc_scan->add_option("--ell-range", scan_ells, "prime range A..B (primes > 5)")
        ->capture_default_str();
    std::uint64_t scan_p_max = 500;
    sc_scan->add_option("--p-max", scan_p_max, "Frobenius sample budget per t0")
        ->capture_default_str();
    sc_scan->add_option("--iso-bound", iso_bound, "prime bound for the isogeny heuristic")
        ->capture_default_str();
    sc_scan->add_option("-o,--output", out);
    sc_scan->add_option("--csv", csv_out, "also write the summary CSV here");

    // verify-group
    auto* sc_group = app.add_subcommand("verify-group", "GL2 counts and lemma harness");
    std::uint32_t group_ell = 5;
    bool harness = false;
    sc_group->add_option("--ell", group_ell)->capture_default_str();
    sc_group->add_flag("--harness", harness, "run the fiber-product lemma instances");
    sc_group->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sc_group->add_option("-o,--output", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (sc_constants->parsed())
            return run_constants(parse_range(g_range, "--g"), format, out);
        if (sc_genus->parsed())
            return run_genus(parse_range(n_range, "range"), format, out);
        if (sc_count->parsed()) {
            const auto fam = load_family(family_file, curve_args);
            std::optional<std::uint32_t> ell;
            if (ell_single) {
                if (!ellmod::is_prime_u64(ell_single))
                    throw CLI::ValidationError("--ell", "must be prime");
                ell = ell_single;
            }
            return run_count(fam, p_max, ell, format, out, threads);
        }
        if (sc_certify->parsed()) {
            const auto fam = load_family(family_file, curve_args);
            const RangeSpec r = parse_range(ell_range_str, "--ell");
            const auto ells = primes_in_range(r.lo, r.hi);
            if (ells.empty()) throw CLI::ValidationError("--ell", "no primes in range");
            std::optional<std::uint64_t> bp;
            if (base_p) bp = base_p;
            return run_certify(fam, ells, certify_p_max, bp, out, threads);
        }
        if (sc_cheb->parsed()) {
            const auto fam = load_family(family_file, curve_args);
            if (cheb_ell == cheb_p)
                throw CLI::ValidationError("--ell", "ell must differ from p");
            return run_chebotarev(fam, cheb_p, cheb_ell, format, out, threads);
        }
        if (sc_scan->parsed()) {
            const auto fam = load_family(family_file, curve_args);
            const RangeSpec r = parse_range(scan_ells, "--ell-range");
            ellmod::ScanConfig cfg;
            cfg.T = T;
            cfg.ells = primes_in_range(std::max(r.lo, 6L), r.hi);
            cfg.p_max = scan_p_max;
            cfg.isogeny_prime_bound = iso_bound;
            cfg.threads = threads;
            if (cfg.ells.empty())
                throw CLI::ValidationError("--ell-range", "no primes > 5 in range");
            return run_scan(fam, cfg, out, csv_out);
        }
        if (sc_group->parsed()) return run_verify_group(group_ell, harness, format, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ellmod::InvalidInput& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ellmod::InvalidLevel& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ellmod::InvalidModulus& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
