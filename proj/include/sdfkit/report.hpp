#pragma once

/**
 * JSON, CSV and text renderings of command payloads. JSON objects use
 * sorted keys, so equal payloads serialize to equal bytes.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "sdfkit/fpoly.hpp"
#include "sdfkit/predicates.hpp"
#include "sdfkit/search.hpp"
#include "sdfkit/verify.hpp"
#include "sdfkit/zint.hpp"

namespace sdfkit {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Columns of `classify-z --format csv`.
inline constexpr const char* kClassifyZColumns = "n,factorization,quasi_sdf,sdf_primary,quasi_primary,witness";

Json to_json(const zint::ZClassification& c, bool with_witness);
std::string to_csv_row(const zint::ZClassification& c, bool with_witness);

Json to_json(const VerifyReport& r, bool with_timing);
Json to_json(const StarReport& s);
Json to_json(const SearchHit& h);

/// Every ideal of r with its properties, followed by the condition (*) report.
Json ring_report(const RingPtr& r);

struct FpolyRow {
    fpoly::FpPoly f;
    fpoly::PrincipalClass verdict;
    bool criterion = false;  ///< verdict agrees with the single-irreducible rule
    fpoly::SampleResult sample;
};

FpolyRow fpoly_row(const fpoly::FpPoly& f, unsigned sample_degree, std::uint64_t budget);
Json to_json(const FpolyRow& row);

/// {"tool", "version", "command", ["timestamp"], "payload"}.
Json document(const std::string& command, Json payload, bool with_timestamp);

std::string csv_quote(const std::string& field);

}  // namespace sdfkit
