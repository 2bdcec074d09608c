#pragma once

/**
 * Definitional deciders for the prime / primary / sdf hierarchy.
 *
 * Every pair search runs b in the outer loop and a in the inner loop, both in
 * increasing index order, and reports the first failing pair as (a, b). So the
 * witness is the least pair under the ordering (b, a).
 *
 * sdf-absorbing quantifies over nonzero a, b; sdf-absorbing primary quantifies
 * over all a, b.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdfkit/ideal.hpp"

namespace sdfkit {

using Witness = std::pair<Elem, Elem>;

/// Outcome of a universally quantified check: `witness` is set iff it fails.
struct Check {
    bool holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const noexcept { return holds; }
};

Check is_prime(const Ideal& i);
bool is_maximal(const Ideal& i);
/// ab in I implies a in I or b in rad(I).
Check is_primary(const Ideal& i);
/// rad(I) is prime; the witness is a pair (a, b) with ab in rad(I) and neither in it.
Check is_quasi_primary(const Ideal& i);

Check is_sdf_absorbing(const Ideal& i);
Check is_sdf_absorbing_primary(const Ideal& i);
Check is_quasi_sdf_absorbing(const Ideal& i);

/// True iff (a, b) violates the sdf-absorbing condition for I.
bool sdf_violation(const Ideal& i, Elem a, Elem b);
/// True iff (a, b) violates the sdf-absorbing primary condition for I.
bool sdf_primary_violation(const Ideal& i, Elem a, Elem b);

/// The three equivalent formulations of quasi sdf-absorption.
struct RemarkForms {
    bool radical_is_sdf = false;     ///< is_sdf_absorbing(rad I)
    bool nonzero_pairs = false;      ///< nonzero a, b tested against rad I
    bool all_pairs = false;          ///< all a, b tested against rad I

    bool agree() const noexcept {
        return radical_is_sdf == nonzero_pairs && nonzero_pairs == all_pairs;
    }
};

RemarkForms remark_rr_forms(const Ideal& i);
bool remark_rr_agree(const Ideal& i);

struct StarViolation {
    Ideal ideal;
    Witness witness;
};

/// Result of checking that every quasi sdf-absorbing ideal is sdf-absorbing primary.
struct StarReport {
    std::string ring_spec;
    std::size_t ideals_checked = 0;
    std::size_t quasi_sdf_count = 0;
    std::vector<StarViolation> violations;
    bool satisfied = true;
};

StarReport satisfies_condition_star(const RingPtr& r, const Limits& lim = limits());

/// With 2 a unit: quasi sdf-absorbing == quasi-primary. Throws TwoNotUnit otherwise.
bool two_unit_equivalence(const Ideal& i);

}  // namespace sdfkit
