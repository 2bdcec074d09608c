#pragma once

/**
 * Theorem replay over the catalog. Each check walks its instances, counts
 * them, and records every instance where the stated property fails.
 * Instances whose hypotheses fail are counted under a skip reason.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sdfkit/catalog.hpp"

namespace sdfkit {

struct Counterexample {
    std::string ring;                 ///< spec that rebuilds the ring
    std::vector<std::string> ideals;  ///< ideals involved, by generators
    std::string witness;              ///< failing pair, when there is one
    std::string detail;
};

struct SkipCount {
    std::string reason;
    std::size_t count = 0;
};

enum class Status { Verified, Refuted, Skipped };

std::string_view status_name(Status s);

struct VerifyReport {
    std::string id;
    std::size_t instances_checked = 0;
    std::size_t counterexample_count = 0;
    /// The first kMaxStoredCounterexamples counterexamples in instance order.
    std::vector<Counterexample> counterexamples;
    std::vector<SkipCount> skipped;
    std::vector<std::string> notes;
    double elapsed_seconds = 0;
    Status status = Status::Verified;
    std::string status_reason;
};

inline constexpr std::size_t kMaxStoredCounterexamples = 50;

/// Known ids in execution order.
const std::vector<std::string>& theorem_ids();

/// Throws UnknownTheoremId.
VerifyReport run_verify(std::string_view id, const Catalog& catalog);

VerifyReport verify_remark_rr(const Catalog& c);
VerifyReport verify_comaximal_theorem(const Catalog& c);
VerifyReport verify_z_classification(const Catalog& c);
VerifyReport verify_product_theorem(const Catalog& c);
VerifyReport verify_hom_transfer(const Catalog& c);
VerifyReport verify_quotient_corollary(const Catalog& c);
VerifyReport verify_localization(const Catalog& c);
VerifyReport verify_colon(const Catalog& c);
VerifyReport verify_intersection(const Catalog& c);
VerifyReport verify_idealization(const Catalog& c);
VerifyReport verify_amalgamation(const Catalog& c);
VerifyReport verify_condition_star_suite(const Catalog& c);
VerifyReport verify_saturation_lemma(const Catalog& c);
VerifyReport verify_trunc_poly(const Catalog& c);

}  // namespace sdfkit
