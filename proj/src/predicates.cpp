#include "sdfkit/predicates.hpp"

#include "sdfkit/error.hpp"

namespace sdfkit {

namespace {

void require_proper(const Ideal& i) {
    if (!i.is_proper()) throw Error(ErrorCode::NotProper, "unit ideal of " + i.ring()->spec());
}

std::vector<Elem> squares(const Ring& r) {
    std::vector<Elem> sq(r.order());
    for (Elem x = 0; x < r.order(); ++x) sq[x] = r.square(x);
    return sq;
}

Check fail(Elem a, Elem b) { return Check{false, Witness{a, b}}; }

// Shared loop: a^2 - b^2 in `lhs` must imply a - b in `minus` or a + b in `plus`.
template <class Skip>
Check square_difference_check(const Ideal& lhs, const Ideal& minus, const Ideal& plus, Skip skip) {
    const Ring& r = *lhs.ring();
    const auto sq = squares(r);
    for (Elem b = 0; b < r.order(); ++b) {
        if (skip(b)) continue;
        for (Elem a = 0; a < r.order(); ++a) {
            if (skip(a)) continue;
            if (!lhs.contains(r.sub(sq[a], sq[b]))) continue;
            if (minus.contains(r.sub(a, b)) || plus.contains(r.add(a, b))) continue;
            return fail(a, b);
        }
    }
    return {};
}

}  // namespace

Check is_prime(const Ideal& i) {
    require_proper(i);
    const Ring& r = *i.ring();
    for (Elem b = 0; b < r.order(); ++b) {
        if (i.contains(b)) continue;
        for (Elem a = 0; a < r.order(); ++a) {
            if (!i.contains(a) && i.contains(r.mul(a, b))) return fail(a, b);
        }
    }
    return {};
}

bool is_maximal(const Ideal& i) {
    require_proper(i);
    const RingPtr& r = i.ring();
    for (Elem x = 0; x < r->order(); ++x) {
        if (i.contains(x)) continue;
        if (sum(i, principal_ideal(r, x)).is_proper()) return false;
    }
    return true;
}

Check is_primary(const Ideal& i) {
    require_proper(i);
    const Ring& r = *i.ring();
    const Ideal rad = radical(i);
    for (Elem b = 0; b < r.order(); ++b) {
        if (rad.contains(b)) continue;
        for (Elem a = 0; a < r.order(); ++a) {
            if (!i.contains(a) && i.contains(r.mul(a, b))) return fail(a, b);
        }
    }
    return {};
}

Check is_quasi_primary(const Ideal& i) {
    require_proper(i);
    return is_prime(radical(i));
}

Check is_sdf_absorbing(const Ideal& i) {
    require_proper(i);
    const Elem zero = i.ring()->zero();
    return square_difference_check(i, i, i, [zero](Elem x) { return x == zero; });
}

Check is_sdf_absorbing_primary(const Ideal& i) {
    require_proper(i);
    const Ideal rad = radical(i);
    return square_difference_check(i, i, rad, [](Elem) { return false; });
}

Check is_quasi_sdf_absorbing(const Ideal& i) {
    require_proper(i);
    return is_sdf_absorbing(radical(i));
}

bool sdf_violation(const Ideal& i, Elem a, Elem b) {
    const Ring& r = *i.ring();
    if (a == r.zero() || b == r.zero()) return false;
    return i.contains(r.sub(r.square(a), r.square(b))) && !i.contains(r.sub(a, b)) &&
           !i.contains(r.add(a, b));
}

bool sdf_primary_violation(const Ideal& i, Elem a, Elem b) {
    const Ring& r = *i.ring();
    if (!i.contains(r.sub(r.square(a), r.square(b)))) return false;
    if (i.contains(r.sub(a, b))) return false;
    return !radical(i).contains(r.add(a, b));
}

RemarkForms remark_rr_forms(const Ideal& i) {
    require_proper(i);
    const Ideal rad = radical(i);
    const Ring& r = *i.ring();
    const auto sq = squares(r);
    RemarkForms forms;
    forms.radical_is_sdf = is_sdf_absorbing(rad).holds;

    // Written out separately so the three forms do not share a code path.
    auto pair_test = [&](bool include_zero) {
        for (Elem a = 0; a < r.order(); ++a) {
            for (Elem b = 0; b < r.order(); ++b) {
                if (!include_zero && (a == r.zero() || b == r.zero())) continue;
                if (rad.contains(r.add(sq[a], r.neg(sq[b]))) && !rad.contains(r.add(a, r.neg(b))) &&
                    !rad.contains(r.add(a, b))) {
                    return false;
                }
            }
        }
        return true;
    };
    forms.nonzero_pairs = pair_test(false);
    forms.all_pairs = pair_test(true);
    return forms;
}

bool remark_rr_agree(const Ideal& i) { return remark_rr_forms(i).agree(); }

StarReport satisfies_condition_star(const RingPtr& r, const Limits& lim) {
    StarReport report;
    report.ring_spec = r->spec();
    for (const Ideal& i : proper_ideals(r, lim)) {
        ++report.ideals_checked;
        if (!is_quasi_sdf_absorbing(i)) continue;
        ++report.quasi_sdf_count;
        if (auto c = is_sdf_absorbing_primary(i); !c) {
            report.violations.push_back(StarViolation{i, *c.witness});
        }
    }
    report.satisfied = report.violations.empty();
    return report;
}

bool two_unit_equivalence(const Ideal& i) {
    require_proper(i);
    const Ring& r = *i.ring();
    if (!is_unit(r, r.from_int(2))) {
        throw Error(ErrorCode::TwoNotUnit, "2 is not a unit in " + r.spec());
    }
    return is_quasi_sdf_absorbing(i).holds == is_quasi_primary(i).holds;
}

}  // namespace sdfkit
