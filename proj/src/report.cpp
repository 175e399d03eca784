#include "ellmod/report.hpp"

#include <set>
#include <sstream>

namespace ellmod {

Json json_header(const std::string& kind) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["kind"] = kind;
    return j;
}

Json to_json(const Place& place) {
    Json j;
    j["p"] = place.p;
    if (place.t0) j["t0"] = *place.t0;
    return j;
}

Json to_json(const TraceSample& sample) {
    Json j;
    j["place"] = to_json(sample.place);
    j["traces"] = sample.traces;
    j["det"] = sample.det;
    return j;
}

Json to_json(const SingleCertificate& cert) {
    Json j;
    j["factor"] = cert.factor;
    j["status"] = to_string(cert.status);
    j["W1"] = cert.w1 ? to_json(*cert.w1) : Json(nullptr);
    j["W2"] = cert.w2 ? to_json(*cert.w2) : Json(nullptr);
    j["W3"] = cert.w3 ? to_json(*cert.w3) : Json(nullptr);
    j["small_ell_mode"] = cert.small_ell_mode;
    j["missing"] = cert.missing;
    return j;
}

Json to_json(const PairCertificate& cert) {
    Json j;
    j["i"] = cert.i;
    j["j"] = cert.j;
    j["status"] = to_string(cert.status);
    j["witness"] = cert.witness ? to_json(*cert.witness) : Json(nullptr);
    j["blocked_on_singles"] = cert.blocked_on_singles;
    return j;
}

Json to_json(const SurjectivityCertificate& cert) {
    Json j;
    j["ell"] = cert.ell;
    j["status"] = to_string(cert.status);
    j["geometric"] = cert.geometric;
    Json singles = Json::array();
    for (const auto& s : cert.singles) singles.push_back(to_json(s));
    j["singles"] = singles;
    Json pairs = Json::array();
    for (const auto& p : cert.pairs) pairs.push_back(to_json(p));
    j["pairs"] = pairs;
    j["notes"] = cert.notes;
    return j;
}

namespace {

Place place_from_json(const Json& j) {
    Place p;
    p.p = j.at("p").get<std::uint64_t>();
    if (j.contains("t0")) p.t0 = j.at("t0").get<std::uint64_t>();
    return p;
}

TraceSample sample_from_json(const Json& j) {
    TraceSample s;
    s.place = place_from_json(j.at("place"));
    s.traces = j.at("traces").get<std::vector<std::uint32_t>>();
    s.det = j.at("det").get<std::uint32_t>();
    return s;
}

CertStatus status_from_json(const Json& j) {
    return j.get<std::string>() == "Certified" ? CertStatus::Certified
                                               : CertStatus::Inconclusive;
}

} // namespace

SurjectivityCertificate certificate_from_json(const Json& j) {
    SurjectivityCertificate cert;
    cert.ell = j.at("ell").get<std::uint32_t>();
    cert.status = status_from_json(j.at("status"));
    cert.geometric = j.at("geometric").get<bool>();
    for (const auto& js : j.at("singles")) {
        SingleCertificate s;
        s.factor = js.at("factor").get<int>();
        s.ell = cert.ell;
        s.status = status_from_json(js.at("status"));
        if (!js.at("W1").is_null()) s.w1 = sample_from_json(js.at("W1"));
        if (!js.at("W2").is_null()) s.w2 = sample_from_json(js.at("W2"));
        if (!js.at("W3").is_null()) s.w3 = sample_from_json(js.at("W3"));
        s.small_ell_mode = js.at("small_ell_mode").get<bool>();
        s.missing = js.at("missing").get<std::vector<std::string>>();
        cert.singles.push_back(std::move(s));
    }
    for (const auto& jp : j.at("pairs")) {
        PairCertificate p;
        p.i = jp.at("i").get<int>();
        p.j = jp.at("j").get<int>();
        p.ell = cert.ell;
        p.status = status_from_json(jp.at("status"));
        if (!jp.at("witness").is_null()) p.witness = sample_from_json(jp.at("witness"));
        p.blocked_on_singles = jp.at("blocked_on_singles").get<bool>();
        cert.pairs.push_back(std::move(p));
    }
    cert.notes = j.at("notes").get<std::vector<std::string>>();
    return cert;
}

std::size_t certificate_witness_count(const SurjectivityCertificate& cert) {
    std::set<Place> places;
    for (const auto& s : cert.singles)
        for (const auto& w : {s.w1, s.w2, s.w3})
            if (w) places.insert(w->place);
    for (const auto& p : cert.pairs)
        if (p.witness) places.insert(p.witness->place);
    return places.size();
}

Json to_json(const ScanReport& report) {
    Json j = json_header("scan_report");
    Json config;
    config["family"] = report.family_lines;
    config["T"] = report.config.T;
    config["ells"] = report.config.ells;
    config["p_max"] = report.config.p_max;
    config["isogeny_prime_bound"] = report.config.isogeny_prime_bound;
    config["seed"] = nullptr; // all sampling is exhaustive and deterministic
    j["config"] = config;
    Json theory;
    theory["union_threshold"] = kUnionThreshold;
    theory["note"] =
        "the theorem's union regime is primes >= 3176533; this desk-scale ell range "
        "lies below it and candidate entries are not claims of exceptionality";
    j["theory"] = theory;

    Json excluded = Json::array();
    for (const auto& bad : report.excluded) {
        Json e;
        e["t0"] = bad.t0.str();
        std::vector<std::string> reasons;
        for (const auto& r : bad.reasons) reasons.push_back(r.str());
        e["reasons"] = reasons;
        excluded.push_back(e);
    }
    j["excluded"] = excluded;
    j["F_size"] = report.F_size();

    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["t0"] = row.t0.str();
        r["skipped_places"] = row.skipped_places;
        Json cells = Json::array();
        for (const auto& cell : row.cells) {
            Json c;
            c["ell"] = cell.ell;
            c["status"] = cell.error ? "Error" : to_string(cell.status);
            if (cell.error) c["error"] = *cell.error;
            else c["certificate"] = to_json(cell.certificate);
            cells.push_back(c);
        }
        r["cells"] = cells;
        rows.push_back(r);
    }
    j["results"] = rows;

    Json densities;
    Json per_ell = Json::array();
    for (std::uint32_t ell : report.config.ells) {
        Json d;
        const std::uint64_t k = report.candidates_at(ell);
        d["ell"] = ell;
        d["candidates"] = k;
        d["total"] = report.F_size();
        d["density"] = report.F_size() ? static_cast<double>(k) / report.F_size() : 0.0;
        per_ell.push_back(d);
    }
    densities["per_ell"] = per_ell;
    Json u;
    const std::uint64_t uk = report.union_candidates();
    u["candidates"] = uk;
    u["total"] = report.F_size();
    u["density"] = report.F_size() ? static_cast<double>(uk) / report.F_size() : 0.0;
    densities["union"] = u;
    j["densities"] = densities;
    j["partial"] = report.partial;
    return j;
}

std::string scan_summary_csv(const ScanReport& report) {
    std::ostringstream os;
    os << "t0_num,t0_den,ell,status,witness_count\n";
    for (const auto& row : report.rows) {
        for (const auto& cell : row.cells) {
            os << row.t0.num().get_str() << "," << row.t0.den().get_str() << "," << cell.ell
               << "," << (cell.error ? "Error" : to_string(cell.status)) << ","
               << certificate_witness_count(cell.certificate) << "\n";
        }
    }
    return os.str();
}

Json to_json(const TraceCountTable& table, const FamilySpec& family) {
    Json j = json_header("chebotarev_table");
    Json config;
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < family.n(); ++i)
        lines.push_back(family.A[i].str() + ";" + family.B[i].str());
    config["family"] = lines;
    config["p"] = table.p;
    config["ell"] = table.ell;
    j["config"] = config;
    j["good_count"] = table.good_count;
    Json counts = Json::array();
    for (std::size_t idx = 0; idx < table.counts.size(); ++idx) {
        Json c;
        c["taus"] = table.taus_of(idx);
        c["count"] = table.counts[idx];
        counts.push_back(c);
    }
    j["counts"] = counts;
    return j;
}

std::string chebotarev_csv(const TraceCountTable& table) {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.n; ++i) os << "tau" << i + 1 << ",";
    os << "count\n";
    for (std::size_t idx = 0; idx < table.counts.size(); ++idx) {
        for (std::uint32_t t : table.taus_of(idx)) os << t << ",";
        os << table.counts[idx] << "\n";
    }
    return os.str();
}

std::string constants_csv(long g_min, long g_max) {
    std::ostringstream os;
    os << "g,c_literal,c_conservative,C,C_tilde_n1,C_tilde_n2,ec_bound_genus,"
          "surface_bound_genus\n";
    for (long g = g_min; g <= g_max; ++g) {
        const CofG c = c_of_g(g);
        os << g << "," << c.literal << "," << c.conservative << "," << C_of_g(g).str() << ","
           << C_tilde(g, 1).str() << "," << C_tilde(g, 2).str() << ","
           << isogeny_bound_ec_genus(g).get_str() << ","
           << isogeny_bound_surface_genus(g).get_str() << "\n";
    }
    return os.str();
}

Json constants_json(long g_min, long g_max) {
    Json j = json_header("constants_table");
    Json config;
    config["g_min"] = g_min;
    config["g_max"] = g_max;
    j["config"] = config;
    j["threshold_note"] =
        "the single-curve theorem applies at ell >= c(g); the product theorems apply "
        "strictly above C~(g) and C'";
    Json rows = Json::array();
    for (long g = g_min; g <= g_max; ++g) {
        const BoundReport r = make_bound_report(g, 2);
        Json row;
        row["g"] = g;
        for (const auto& [k, v] : r.values) row[k] = v;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

std::string genus_table_csv(std::uint64_t n_min, std::uint64_t n_max) {
    std::ostringstream os;
    os << "N,index,nu2,nu3,cusps,genus\n";
    for (std::uint64_t N = n_min; N <= n_max; ++N) {
        const X0Data d = x0_data(N);
        os << N << "," << d.index << "," << d.nu2 << "," << d.nu3 << "," << d.cusps << ","
           << d.genus << "\n";
    }
    return os.str();
}

Json genus_table_json(std::uint64_t n_min, std::uint64_t n_max) {
    Json j = json_header("genus_x0_table");
    Json config;
    config["N_min"] = n_min;
    config["N_max"] = n_max;
    j["config"] = config;
    Json rows = Json::array();
    for (std::uint64_t N = n_min; N <= n_max; ++N) {
        const X0Data d = x0_data(N);
        Json row;
        row["N"] = N;
        row["index"] = d.index;
        row["nu2"] = d.nu2;
        row["nu3"] = d.nu3;
        row["cusps"] = d.cusps;
        row["genus"] = d.genus;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

} // namespace ellmod
