#include "sdfkit/report.hpp"

#include <chrono>
#include <ctime>

#include "sdfkit/ideal.hpp"

namespace sdfkit {

namespace {

Json int_witness(const std::optional<zint::IntWitness>& w) {
    if (!w) return nullptr;
    return Json::array({w->first, w->second});
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json poly_witness(const std::optional<fpoly::PolyWitness>& w) {
    if (!w) return nullptr;
    return Json::array({w->first.str(), w->second.str()});
}

std::string label_pair(const Ring& r, const Witness& w) {
    return "(" + r.label(w.first) + ", " + r.label(w.second) + ")";
}

}  // namespace

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

Json to_json(const zint::ZClassification& c, bool with_witness) {
    Json j;
    j["n"] = c.n;
    j["factorization"] = zint::format_factorization(c.factorization);
    j["rad"] = c.rad;
    j["quasi_sdf"] = c.quasi_sdf_theorem;
    j["quasi_sdf_oracle"] = optional_bool(c.quasi_sdf_oracle);
    j["sdf"] = optional_bool(c.sdf_oracle);
    j["sdf_primary"] = optional_bool(c.sdf_primary_oracle);
    j["quasi_primary"] = c.quasi_primary;
    if (with_witness) {
        j["witness"] = int_witness(c.witness());
        j["quasi_sdf_witness"] = int_witness(c.quasi_sdf_witness);
        j["sdf_primary_witness"] = int_witness(c.sdf_primary_witness);
    }
    return j;
}

std::string to_csv_row(const zint::ZClassification& c, bool with_witness) {
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    std::string w;
    if (with_witness && c.witness()) {
        w = "(" + std::to_string(c.witness()->first) + "," + std::to_string(c.witness()->second) + ")";
    }
    return std::to_string(c.n) + "," + zint::format_factorization(c.factorization) + "," + b(c.quasi_sdf_theorem) +
           "," + (c.sdf_primary_oracle ? b(*c.sdf_primary_oracle) : "") + "," + b(c.quasi_primary) + "," +
           csv_quote(w);
}

Json to_json(const VerifyReport& r, bool with_timing) {
    Json j;
    j["id"] = r.id;
    j["status"] = std::string(status_name(r.status));
    if (!r.status_reason.empty()) j["status_reason"] = r.status_reason;
    j["instances_checked"] = r.instances_checked;
    j["counterexample_count"] = r.counterexample_count;
    j["counterexamples"] = Json::array();
    for (const auto& c : r.counterexamples) {
        j["counterexamples"].push_back(
            {{"ring", c.ring}, {"ideals", c.ideals}, {"witness", c.witness}, {"detail", c.detail}});
    }
    j["skipped"] = Json::array();
    for (const auto& s : r.skipped) j["skipped"].push_back({{"reason", s.reason}, {"count", s.count}});
    j["notes"] = r.notes;
    if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

Json to_json(const StarReport& s) {
    Json j;
    j["ring"] = s.ring_spec;
    j["satisfied"] = s.satisfied;
    j["ideals_checked"] = s.ideals_checked;
    j["quasi_sdf_count"] = s.quasi_sdf_count;
    j["violations"] = Json::array();
    for (const auto& v : s.violations) {
        j["violations"].push_back({{"ideal", v.ideal.describe()}, {"witness", label_pair(*v.ideal.ring(), v.witness)}});
    }
    return j;
}

Json to_json(const SearchHit& h) {
    Json j;
    j["ring"] = h.ring_spec;
    j["ideal"] = h.ideal;
    j["radical"] = h.radical;
    for (Property p : kProperties) j[std::string(property_name(p))] = h.facts[p];
    return j;
}

Json ring_report(const RingPtr& r) {
    Json j;
    j["ring"] = r->spec();
    j["order"] = r->order();
    j["characteristic"] = ring_char(*r);
    j["ideals"] = Json::array();
    for (const auto& i : all_ideals(r)) {
        Json row;
        row["ideal"] = i.describe();
        row["size"] = i.size();
        row["proper"] = i.is_proper();
        row["radical"] = radical(i).describe();
        auto f = ideal_facts(i);
        for (Property p : kProperties) row[std::string(property_name(p))] = f[p];
        j["ideals"].push_back(std::move(row));
    }
    j["condition_star"] = to_json(satisfies_condition_star(r));
    return j;
}

FpolyRow fpoly_row(const fpoly::FpPoly& f, unsigned sample_degree, std::uint64_t budget) {
    FpolyRow row{f, fpoly::classify_principal(f), false, {}};
    const bool single = fpoly::factorize_fp(f).size() == 1;
    if (f.modulus() == 2) {
        row.criterion = row.verdict.quasi_sdf && row.verdict.sdf_primary && row.verdict.quasi_primary == single;
    } else {
        row.criterion = row.verdict.quasi_sdf == single && row.verdict.sdf_primary == single &&
                        row.verdict.quasi_primary == single;
    }
    row.sample = fpoly::sample_check_principal(f, sample_degree, budget);
    return row;
}

Json to_json(const FpolyRow& row) {
    Json j;
    j["p"] = row.f.modulus();
    j["f"] = row.f.str();
    Json fac = Json::array();
    for (const auto& [g, e] : fpoly::factorize_fp(row.f)) fac.push_back({{"factor", g.str()}, {"exponent", e}});
    j["factorization"] = fac;
    j["radical"] = fpoly::radical_part(row.f).str();
    j["quasi_sdf"] = row.verdict.quasi_sdf;
    j["sdf_primary"] = row.verdict.sdf_primary;
    j["quasi_primary"] = row.verdict.quasi_primary;
    j["criterion_agrees"] = row.criterion;
    j["sampler"] = {{"pairs_checked", row.sample.pairs_checked},
                    {"complete", row.sample.complete},
                    {"budget_exhausted", row.sample.budget_exhausted},
                    {"contradictions", row.sample.contradictions},
                    {"quasi_sdf_witness", poly_witness(row.sample.quasi_sdf_witness)},
                    {"sdf_primary_witness", poly_witness(row.sample.sdf_primary_witness)},
                    {"quasi_primary_witness", poly_witness(row.sample.quasi_primary_witness)}};
    return j;
}

Json document(const std::string& command, Json payload, bool with_timestamp) {
    Json j;
    j["tool"] = "sdfkit";
    j["version"] = kToolVersion;
    j["command"] = command;
    if (with_timestamp) {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        j["timestamp"] = buf;
    }
    j["payload"] = std::move(payload);
    return j;
}

}  // namespace sdfkit
