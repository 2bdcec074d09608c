// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance <path-to-sdfkit>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>

#include "sdfkit/catalog.hpp"
#include "sdfkit/fpoly.hpp"
#include "sdfkit/predicates.hpp"
#include "sdfkit/report.hpp"
#include "sdfkit/spec.hpp"
#include "sdfkit/verify.hpp"
#include "sdfkit/zint.hpp"

using namespace sdfkit;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

unsigned hw_jobs() { return std::max(1U, std::min(8U, std::thread::hardware_concurrency())); }

Outcome z_differential() {
    std::size_t mismatches = 0;
    for (std::uint64_t n = 2; n <= 20000; ++n) {
        mismatches += zint::classify_z_theorem(n) != zint::oracle_quasi_sdf_z(n).holds;
    }
    return {mismatches == 0, std::to_string(mismatches) + " disagreements over 2..20000"};
}

Outcome four_q_powers() {
    std::size_t ok = 0, total = 0;
    for (std::uint64_t q : {3u, 5u, 7u}) {
        for (unsigned m : {1u, 2u}) {
            ++total;
            const auto n = 4 * ipow(q, m);
            auto c = zint::classify_z(n);
            auto ring = make_zn(n);
            auto i = zero_ideal(ring);
            const auto a = static_cast<Elem>((2 * ipow(q, m) + 1) % n);
            ok += c.quasi_sdf_theorem && c.sdf_primary_oracle == false && sdf_primary_violation(i, a, 1);
        }
    }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " instances confirmed"};
}

Outcome localization_example() {
    auto o = zint::oracle_quasi_sdf_z(15);
    const bool wit = !o.holds && o.witness == zint::IntWitness{4, 1};
    const bool loc = zint::localize_z(15, {5}).quasi_sdf_theorem;
    return {wit && loc, std::string("witness (4,1) ") + (wit ? "found" : "missing") + ", S^-1 I quasi sdf " +
                            (loc ? "true" : "false")};
}

Outcome product_theorem(const Catalog& cat) {
    std::size_t pairs = 0, mismatches = 0;
    for (const auto& p : cat.products()) {
        if (p.left->order() > 12 || p.right->order() > 12) continue;
        for (const auto& i1 : proper_ideals(p.left)) {
            for (const auto& i2 : proper_ideals(p.right)) {
                ++pairs;
                const bool lhs = is_quasi_sdf_absorbing(cross_ideal(p, i1, i2)).holds;
                const bool rhs = is_quasi_sdf_absorbing(i1).holds && is_quasi_sdf_absorbing(i2).holds &&
                                 (radical(i1).contains(p.left->from_int(2)) ||
                                  radical(i2).contains(p.right->from_int(2)));
                mismatches += lhs != rhs;
            }
        }
    }
    auto z15 = make_zn(15);
    auto big = make_product(z15, z15);
    auto rad = radical(cross_ideal(big, principal_ideal(z15, 3), principal_ideal(z15, 5)));
    const bool wit = sdf_violation(rad, big.pair(4, 1), big.pair(1, 4));
    return {mismatches == 0 && wit && pairs > 0, std::to_string(pairs) + " ideal pairs, " +
                                                     std::to_string(mismatches) + " mismatches, Z15xZ15 witness " +
                                                     (wit ? "reproduced" : "missing")};
}

Outcome radical_identities(const Catalog& cat) {
    auto idl = run_verify("idealization", cat);
    auto am = run_verify("amalgamation", cat);
    std::size_t skipped = 0;
    bool skips_ok = idl.skipped.empty();
    for (const auto& s : am.skipped) skipped += s.count;
    std::ostringstream d;
    d << idl.instances_checked << " idealization and " << am.instances_checked << " amalgamation instances, "
      << idl.counterexample_count + am.counterexample_count << " failures, " << skipped << " amalgamation skips";
    return {skips_ok && idl.counterexample_count == 0 && am.counterexample_count == 0 && idl.instances_checked > 0 &&
                am.instances_checked > 0,
            d.str()};
}

Outcome remark_equivalence(const Catalog& cat) {
    auto r = run_verify("remark-rr", cat);
    return {r.counterexample_count == 0 && r.instances_checked >= 500,
            std::to_string(r.instances_checked) + " ideals, " + std::to_string(r.counterexample_count) +
                " disagreements"};
}

Outcome condition_star(const Catalog& cat) {
    std::size_t odd_fail = 0;
    for (std::size_t n = 3; n <= 225; n += 2) odd_fail += !satisfies_condition_star(make_zn(n)).satisfied;
    std::size_t char2 = 0, char2_fail = 0;
    for (const auto& r : cat.rings()) {
        if (ring_char(*r) != 2) continue;
        ++char2;
        char2_fail += !satisfies_condition_star(r).satisfied;
    }
    auto suite = run_verify("condition-star", cat);
    std::ostringstream d;
    d << odd_fail << " odd Z_n failures, " << char2_fail << "/" << char2 << " char-2 failures, "
      << suite.counterexample_count << " transfer violations over " << suite.instances_checked << " instances";
    return {odd_fail == 0 && char2 > 0 && char2_fail == 0 && suite.counterexample_count == 0, d.str()};
}

Outcome fpoly_sweep() {
    std::vector<fpoly::FpPoly> polys;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (unsigned d = 1; d <= 4; ++d) {
            const auto count = ipow(p, d);
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<std::int64_t> c(d + 1);
                auto k = idx;
                for (unsigned i = 0; i < d; ++i, k /= p) c[i] = static_cast<std::int64_t>(k % p);
                c[d] = 1;
                polys.emplace_back(p, std::move(c));
            }
        }
    }
    auto rows = parallel_map<FpolyRow>(polys.size(), hw_jobs(), [&](std::size_t k) {
        return fpoly_row(polys[k], 4, fpoly::kSampleBudget);
    });
    std::size_t disagree = 0, contra = 0, char2_bad = 0, incomplete = 0;
    for (const auto& r : rows) {
        if (r.f.modulus() == 2) {
            char2_bad += !r.verdict.quasi_sdf;
            continue;
        }
        disagree += !r.criterion;
        contra += r.sample.contradiction();
        incomplete += !r.sample.complete;
    }
    std::ostringstream d;
    d << rows.size() << " polynomials, " << disagree << " criterion disagreements, " << contra
      << " sampler contradictions, " << incomplete << " partial samples, " << char2_bad << " char-2 failures";
    return {disagree == 0 && contra == 0 && char2_bad == 0, d.str()};
}

Outcome trunc_poly_analogue() {
    std::size_t checked = 0, mismatches = 0;
    for (std::size_t n = 2; n <= 12; ++n) {
        auto base = make_zn(n);
        auto tp = trunc_poly(base, 2);
        for (const auto& i : proper_ideals(base)) {
            ++checked;
            mismatches += is_quasi_sdf_absorbing(lift_IX(tp, i)).holds != is_quasi_sdf_absorbing(i).holds;
        }
    }
    return {mismatches == 0, std::to_string(checked) + " ideals, " + std::to_string(mismatches) + " mismatches"};
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Outcome verify_all(const std::string& exe) {
    const std::string base = "'" + exe + "' --no-timestamp";
    auto a = run(base + " --jobs 1 verify all");
    auto b = run(base + " --jobs 1 verify all");
    auto c = run(base + " --jobs " + std::to_string(std::max(2U, hw_jobs())) + " verify all");
    const bool same = !a.out.empty() && a.out == b.out && a.out == c.out;
    std::string bad;
    bool statuses_ok = false;
    try {
        auto doc = Json::parse(a.out);
        statuses_ok = true;
        for (const auto& r : doc["payload"]) {
            const auto status = r["status"].get<std::string>();
            const bool skip_ok = status == "skipped" && r["id"] == "amalgamation";
            if (status != "verified" && !skip_ok) {
                statuses_ok = false;
                bad += " " + r["id"].get<std::string>() + "=" + status;
            }
        }
    } catch (const std::exception&) {
        bad = " unparseable output";
    }
    std::ostringstream d;
    d << "exit " << a.exit_code << ", reports " << (same ? "byte-identical" : "differ") << " across runs and jobs";
    if (!bad.empty()) d << ";" << bad;
    return {a.exit_code == 0 && same && statuses_ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-sdfkit>\n";
        return 2;
    }
    const std::string exe = argv[1];
    CatalogOptions opts;
    opts.jobs = hw_jobs();
    const Catalog catalog(opts);

    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria{
        {1, "integer classification differential", 60, z_differential},
        {2, "4q^m examples", 0, four_q_powers},
        {3, "integer localization example", 0, localization_example},
        {4, "product theorem", 120, [&] { return product_theorem(catalog); }},
        {5, "radical identities", 0, [&] { return radical_identities(catalog); }},
        {6, "remark equivalence", 0, [&] { return remark_equivalence(catalog); }},
        {7, "condition (*)", 0, [&] { return condition_star(catalog); }},
        {8, "F_p[x] sweep", 600, fpoly_sweep},
        {9, "truncated polynomial analogue", 0, trunc_poly_analogue},
        {10, "verify all", 0, [&] { return verify_all(exe); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.pass = false;
            o.detail += ", over the time limit";
        }
        failed += !o.pass;
        std::printf("criterion %2d %s: %s (%s; %.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
