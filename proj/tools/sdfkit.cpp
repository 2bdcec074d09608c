#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdfkit/catalog.hpp"
#include "sdfkit/error.hpp"
#include "sdfkit/fpoly.hpp"
#include "sdfkit/report.hpp"
#include "sdfkit/search.hpp"
#include "sdfkit/spec.hpp"
#include "sdfkit/verify.hpp"
#include "sdfkit/zint.hpp"

namespace {

using namespace sdfkit;

enum Exit { kOk = 0, kUsage = 1, kBound = 2, kRefuted = 3 };

struct Globals {
    std::string format = "json";
    std::size_t catalog_max_order = 256;
    unsigned jobs = 1;
    bool no_timestamp = false;
    std::uint64_t seed = 0;
};

int exit_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::OrderBoundExceeded:
        case ErrorCode::DegreeBoundExceeded: return kBound;
        default: return kUsage;
    }
}

std::uint64_t parse_n(const std::string& tok) {
    if (tok.empty() || tok.size() > 19 || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::ParseError, "not an integer: \"" + tok + "\"");
    }
    const std::uint64_t n = std::stoull(tok);
    if (n < 2 || n >= (std::uint64_t{1} << 63)) {
        throw Error(ErrorCode::OutOfRange, "n must satisfy 2 <= n < 2^63, got " + tok);
    }
    return n;
}

// "2..20", "12", "2,3,5" and any mix across arguments.
std::vector<std::uint64_t> parse_targets(const std::vector<std::string>& args) {
    std::vector<std::uint64_t> out;
    for (const auto& arg : args) {
        for (const auto& tok : split_top_level(arg, ',')) {
            if (tok.empty()) continue;
            const auto dots = tok.find("..");
            if (dots == std::string::npos) {
                out.push_back(parse_n(tok));
                continue;
            }
            const auto lo = parse_n(tok.substr(0, dots));
            const auto hi = parse_n(tok.substr(dots + 2));
            if (hi < lo) throw Error(ErrorCode::ParseError, "empty range " + tok);
            if (hi - lo > 10'000'000) throw Error(ErrorCode::OutOfRange, "range " + tok + " is too long");
            for (auto n = lo; n <= hi; ++n) out.push_back(n);
        }
    }
    if (out.empty()) throw Error(ErrorCode::ParseError, "no integers given");
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string opt_text(const Json& j) { return j.is_null() ? "-" : j.dump(); }

void emit_json(const Globals& g, const std::string& command, Json payload) {
    std::cout << document(command, std::move(payload), !g.no_timestamp).dump(2) << "\n";
}

CatalogOptions catalog_options(const Globals& g) {
    CatalogOptions o;
    o.max_order = g.catalog_max_order;
    o.jobs = g.jobs;
    return o;
}

int cmd_classify_z(const Globals& g, const std::vector<std::string>& args, bool witness) {
    const auto targets = parse_targets(args);
    auto rows = parallel_map<zint::ZClassification>(targets.size(), g.jobs,
                                                     [&](std::size_t k) { return zint::classify_z(targets[k]); });
    const std::string command = "classify-z " + join(args) + (witness ? " --witness" : "");
    if (g.format == "csv") {
        std::cout << kClassifyZColumns << "\n";
        for (const auto& r : rows) std::cout << to_csv_row(r, witness) << "\n";
    } else if (g.format == "text") {
        for (const auto& r : rows) {
            auto j = to_json(r, witness);
            std::cout << "n=" << r.n << " " << j["factorization"].get<std::string>() << " quasi_sdf=" << yes(r.quasi_sdf_theorem)
                      << " sdf_primary=" << opt_text(j["sdf_primary"]) << " quasi_primary=" << yes(r.quasi_primary);
            if (witness) std::cout << " witness=" << opt_text(j["witness"]);
            std::cout << "\n";
        }
    } else {
        Json payload = Json::array();
        for (const auto& r : rows) payload.push_back(to_json(r, witness));
        emit_json(g, command, std::move(payload));
    }
    return kOk;
}

int cmd_ring_report(const Globals& g, const std::string& spec) {
    auto ring = parse_ring(spec);
    auto report = ring_report(ring);
    if (g.format == "csv") {
        std::cout << "ideal,size,radical";
        for (Property p : kProperties) std::cout << "," << property_name(p);
        std::cout << "\n";
        for (const auto& row : report["ideals"]) {
            std::cout << csv_quote(row["ideal"].get<std::string>()) << "," << row["size"].dump() << ","
                      << csv_quote(row["radical"].get<std::string>());
            for (Property p : kProperties) std::cout << "," << row[std::string(property_name(p))].dump();
            std::cout << "\n";
        }
    } else if (g.format == "text") {
        std::cout << report["ring"].get<std::string>() << " order " << report["order"].dump() << " characteristic "
                  << report["characteristic"].dump() << "\n";
        for (const auto& row : report["ideals"]) {
            std::cout << "  " << row["ideal"].get<std::string>() << " size " << row["size"].dump() << " radical "
                      << row["radical"].get<std::string>();
            for (Property p : kProperties) {
                if (row[std::string(property_name(p))].get<bool>()) std::cout << " " << property_name(p);
            }
            std::cout << "\n";
        }
        const auto& star = report["condition_star"];
        std::cout << "condition (*): " << (star["satisfied"].get<bool>() ? "satisfied" : "fails") << " ("
                  << star["violations"].size() << " violations)\n";
        for (const auto& v : star["violations"]) {
            std::cout << "  " << v["ideal"].get<std::string>() << " witness " << v["witness"].get<std::string>() << "\n";
        }
    } else {
        emit_json(g, "ring-report " + ring->spec(), std::move(report));
    }
    return kOk;
}

int cmd_verify(const Globals& g, std::vector<std::string> ids) {
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = theorem_ids();
    const auto& known = theorem_ids();
    for (const auto& id : ids) {
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            throw Error(ErrorCode::UnknownTheoremId,
                        "unknown theorem id \"" + id + "\"; known: all " + join(known));
        }
    }
    Catalog catalog(catalog_options(g));
    std::vector<VerifyReport> reports;
    bool refuted = false;
    for (const auto& id : ids) {
        reports.push_back(run_verify(id, catalog));
        refuted = refuted || reports.back().status == Status::Refuted;
    }
    if (g.format == "csv") {
        std::cout << "id,status,instances_checked,counterexamples,skipped\n";
        for (const auto& r : reports) {
            std::size_t skipped = 0;
            for (const auto& s : r.skipped) skipped += s.count;
            std::cout << r.id << "," << status_name(r.status) << "," << r.instances_checked << ","
                      << r.counterexample_count << "," << skipped << "\n";
        }
    } else if (g.format == "text") {
        for (const auto& r : reports) {
            std::cout << r.id << ": " << status_name(r.status) << ", " << r.instances_checked << " instances, "
                      << r.counterexample_count << " counterexamples";
            if (!g.no_timestamp) std::cout << ", " << r.elapsed_seconds << " s";
            std::cout << "\n";
            for (const auto& s : r.skipped) std::cout << "  skipped " << s.count << ": " << s.reason << "\n";
            for (const auto& c : r.counterexamples) {
                std::cout << "  counterexample " << c.ring << " " << join(c.ideals, " ");
                if (!c.witness.empty()) std::cout << " witness " << c.witness;
                std::cout << ": " << c.detail << "\n";
            }
            for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
        }
    } else {
        Json payload = Json::array();
        for (const auto& r : reports) payload.push_back(to_json(r, !g.no_timestamp));
        emit_json(g, "verify " + join(ids) + " --catalog-max-order " + std::to_string(g.catalog_max_order),
                  std::move(payload));
    }
    return refuted ? kRefuted : kOk;
}

int cmd_search(const Globals& g, const std::string& text, const std::vector<std::string>& specs) {
    auto expr = Expression::parse(text);
    std::vector<RingPtr> rings;
    std::optional<Catalog> catalog;
    if (specs.empty()) {
        catalog.emplace(catalog_options(g));
        rings = catalog->rings();
    } else {
        for (const auto& s : specs) rings.push_back(parse_ring(s));
    }
    auto hits = search(rings, expr, g.jobs);
    if (g.format == "csv") {
        std::cout << "ring,ideal,radical";
        for (Property p : kProperties) std::cout << "," << property_name(p);
        std::cout << "\n";
        for (const auto& h : hits) {
            std::cout << csv_quote(h.ring_spec) << "," << csv_quote(h.ideal) << "," << csv_quote(h.radical);
            for (Property p : kProperties) std::cout << "," << yes(h.facts[p]);
            std::cout << "\n";
        }
    } else if (g.format == "text") {
        for (const auto& h : hits) std::cout << h.ring_spec << " " << h.ideal << " radical " << h.radical << "\n";
        std::cout << hits.size() << " matches\n";
    } else {
        Json list = Json::array();
        for (const auto& h : hits) list.push_back(to_json(h));
        Json payload{{"expression", text}, {"rings_searched", rings.size()}, {"count", hits.size()}, {"hits", list}};
        std::string command = "search " + text;
        for (const auto& s : specs) command += " --ring " + s;
        emit_json(g, command, std::move(payload));
    }
    return kOk;
}

std::uint32_t require_prime(std::uint64_t p) {
    if (!fpoly::is_prime_modulus(p) || p > 1'000'003) {
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
    }
    return static_cast<std::uint32_t>(p);
}

void print_fpoly_text(const FpolyRow& row) {
    std::cout << "(" << row.f.str() << ") over F_" << row.f.modulus() << ": quasi_sdf=" << yes(row.verdict.quasi_sdf)
              << " sdf_primary=" << yes(row.verdict.sdf_primary) << " quasi_primary=" << yes(row.verdict.quasi_primary)
              << " sampler_pairs=" << row.sample.pairs_checked;
    if (row.sample.contradiction()) std::cout << " CONTRADICTS " << join(row.sample.contradictions, ",");
    std::cout << "\n";
}

int cmd_fpoly_classify(const Globals& g, std::uint64_t p_raw, const std::string& f_text, unsigned d,
                       std::uint64_t budget) {
    const auto p = require_prime(p_raw);
    auto f = fpoly::FpPoly::parse(p, f_text);
    auto row = fpoly_row(f, d, budget);
    if (g.format == "text") {
        print_fpoly_text(row);
    } else if (g.format == "csv") {
        std::cout << "p,f,quasi_sdf,sdf_primary,quasi_primary,contradictions\n"
                  << p << "," << csv_quote(f.str()) << "," << yes(row.verdict.quasi_sdf) << ","
                  << yes(row.verdict.sdf_primary) << "," << yes(row.verdict.quasi_primary) << ","
                  << csv_quote(join(row.sample.contradictions, ";")) << "\n";
    } else {
        emit_json(g, "fpoly classify -p " + std::to_string(p) + " -f " + f.str() + " -d " + std::to_string(d),
                  to_json(row));
    }
    return row.sample.contradiction() || !row.criterion ? kRefuted : kOk;
}

int cmd_fpoly_sweep(const Globals& g, std::uint64_t p_raw, unsigned d, unsigned sample_degree, std::uint64_t budget) {
    const auto p = require_prime(p_raw);
    if (d > fpoly::kDegreeBound) {
        throw Error(ErrorCode::DegreeBoundExceeded, "sweep degree " + std::to_string(d) + " exceeds bound " +
                                                        std::to_string(fpoly::kDegreeBound));
    }
    std::vector<fpoly::FpPoly> polys;
    for (unsigned deg = 1; deg <= d; ++deg) {
        std::uint64_t count = 1;
        for (unsigned k = 0; k < deg; ++k) {
            count *= p;
            if (count > 10'000'000) throw Error(ErrorCode::DegreeBoundExceeded, "sweep is too large");
        }
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::int64_t> c(deg + 1, 0);
            auto k = idx;
            for (unsigned i = 0; i < deg; ++i) {
                c[i] = static_cast<std::int64_t>(k % p);
                k /= p;
            }
            c[deg] = 1;
            polys.emplace_back(p, std::move(c));
        }
    }
    auto rows = parallel_map<FpolyRow>(polys.size(), g.jobs,
                                       [&](std::size_t k) { return fpoly_row(polys[k], sample_degree, budget); });
    std::size_t disagreements = 0, contradictions = 0;
    for (const auto& r : rows) {
        disagreements += !r.criterion;
        contradictions += r.sample.contradiction();
    }
    if (g.format == "text") {
        for (const auto& r : rows) print_fpoly_text(r);
        std::cout << rows.size() << " polynomials, " << disagreements << " criterion disagreements, " << contradictions
                  << " sampler contradictions\n";
    } else if (g.format == "csv") {
        std::cout << "p,f,quasi_sdf,sdf_primary,quasi_primary,criterion_agrees,contradictions\n";
        for (const auto& r : rows) {
            std::cout << p << "," << csv_quote(r.f.str()) << "," << yes(r.verdict.quasi_sdf) << ","
                      << yes(r.verdict.sdf_primary) << "," << yes(r.verdict.quasi_primary) << "," << yes(r.criterion)
                      << "," << csv_quote(join(r.sample.contradictions, ";")) << "\n";
        }
    } else {
        Json list = Json::array();
        for (const auto& r : rows) list.push_back(to_json(r));
        Json payload{{"p", p},
                     {"max_degree", d},
                     {"sample_degree", sample_degree},
                     {"polynomials", rows.size()},
                     {"criterion_disagreements", disagreements},
                     {"sampler_contradictions", contradictions},
                     {"rows", list}};
        emit_json(g,
                  "fpoly sweep -p " + std::to_string(p) + " -d " + std::to_string(d) + " --sample-degree " +
                      std::to_string(sample_degree),
                  std::move(payload));
    }
    return disagreements || contradictions ? kRefuted : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi sdf-absorbing ideals in finite rings, Z and F_p[x]", "sdfkit"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--catalog-max-order", g.catalog_max_order, "Largest ring order in the catalog");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
    app.add_flag("--no-timestamp", g.no_timestamp, "Omit timestamps and timings");
    app.add_option("--seed", g.seed, "Reserved; every command is deterministic");

    auto* cz = app.add_subcommand("classify-z", "Classify nZ for integers n");
    std::vector<std::string> cz_args;
    bool cz_witness = false;
    cz->add_option("targets", cz_args, "Integers, lists a,b,c or ranges a..b")->required();
    cz->add_flag("--witness", cz_witness, "Include refuting pairs");

    auto* rr = app.add_subcommand("ring-report", "Classify every ideal of a ring");
    std::string rr_spec;
    rr->add_option("spec", rr_spec, "Ring spec, e.g. Z12 or Z2xZ4")->required();

    auto* vf = app.add_subcommand("verify", "Replay theorems over the catalog");
    std::vector<std::string> vf_ids;
    vf->add_option("ids", vf_ids, "Theorem ids or all");

    auto* se = app.add_subcommand("search", "Find ideals matching a predicate expression");
    std::string se_expr;
    std::vector<std::string> se_rings;
    se->add_option("expression", se_expr, "e.g. \"quasi_sdf & !sdf_primary\"")->required();
    se->add_option("--ring", se_rings, "Search these rings instead of the catalog");

    auto* fp = app.add_subcommand("fpoly", "Principal ideals of F_p[x]");
    fp->require_subcommand(1);
    auto* fc = fp->add_subcommand("classify", "Classify (f)");
    std::uint64_t fc_p = 0;
    std::string fc_f;
    unsigned fc_d = 4;
    std::uint64_t fc_budget = fpoly::kSampleBudget;
    fc->add_option("-p", fc_p, "Prime modulus")->required();
    fc->add_option("-f", fc_f, "Polynomial, e.g. \"x^2+x\"")->required();
    fc->add_option("-d,--sample-degree", fc_d, "Sampler degree bound");
    fc->add_option("--budget", fc_budget, "Sampler pair budget");
    auto* fs = fp->add_subcommand("sweep", "Classify every monic f with 1 <= deg f <= d");
    std::uint64_t fs_p = 0;
    unsigned fs_d = 4;
    unsigned fs_sd = 4;
    std::uint64_t fs_budget = fpoly::kSampleBudget;
    fs->add_option("-p", fs_p, "Prime modulus")->required();
    fs->add_option("-d", fs_d, "Largest degree");
    fs->add_option("--sample-degree", fs_sd, "Sampler degree bound");
    fs->add_option("--budget", fs_budget, "Sampler pair budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (const char* env = std::getenv("SDFKIT_MAX_ORDER")) {
            try {
                limits().max_order = std::stoull(env);
            } catch (const std::exception&) {
                throw Error(ErrorCode::ParseError, std::string("SDFKIT_MAX_ORDER is not a number: ") + env);
            }
        }
        if (cz->parsed()) return cmd_classify_z(g, cz_args, cz_witness);
        if (rr->parsed()) return cmd_ring_report(g, rr_spec);
        if (vf->parsed()) return cmd_verify(g, vf_ids);
        if (se->parsed()) return cmd_search(g, se_expr, se_rings);
        if (fc->parsed()) return cmd_fpoly_classify(g, fc_p, fc_f, fc_d, fc_budget);
        if (fs->parsed()) return cmd_fpoly_sweep(g, fs_p, fs_d, fs_sd, fs_budget);
    } catch (const Error& e) {
        std::cerr << "sdfkit: " << e.what() << "\n";
        return exit_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "sdfkit: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
