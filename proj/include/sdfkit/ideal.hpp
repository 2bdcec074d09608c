#pragma once

#include <string>
#include <vector>

#include "sdfkit/ring.hpp"

namespace sdfkit {

/// An ideal stored as its sorted element set plus a generating set.
class Ideal {
public:
    /// Validates the ideal axioms (contains 0, closed under +, absorbing).
    /// Throws NotAnIdeal otherwise. When `gens` is empty a small generating
    /// set is discovered greedily in index order.
    static Ideal from_elements(RingPtr ring, std::vector<Elem> elements,
                               std::vector<Elem> gens = {});

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Elem>& elements() const noexcept { return elements_; }
    const std::vector<Elem>& generators() const noexcept { return gens_; }
    bool contains(Elem x) const noexcept { return member_[x] != 0; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool is_proper() const noexcept { return elements_.size() < ring_->order(); }
    bool is_zero() const noexcept { return elements_.size() == 1; }
    bool subset_of(const Ideal& other) const;

    /// "(g1,g2,...)" using ring labels.
    std::string describe() const;
    /// "g1,g2,..." as accepted by the ring-spec grammar; the zero label for (0).
    std::string generator_text() const;
    /// Elements as labels.
    std::vector<std::string> element_labels() const;

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.ring_ == b.ring_ && a.elements_ == b.elements_;
    }

private:
    Ideal() = default;

    RingPtr ring_;
    std::vector<Elem> elements_;
    std::vector<Elem> gens_;
    std::vector<char> member_;
};

/// Ordering used by every enumeration: (size, element set).
bool ideal_less(const Ideal& a, const Ideal& b);

Ideal zero_ideal(const RingPtr& r);
Ideal unit_ideal(const RingPtr& r);

Ideal ideal_from_generators(const RingPtr& r, const std::vector<Elem>& gens);
Ideal principal_ideal(const RingPtr& r, Elem x);

/// {x : x^k in I for some 1 <= k <= |R|}.
Ideal radical(const Ideal& i);

/// (I : a) = {r : ra in I}.
Ideal colon(const Ideal& i, Elem a);

Ideal intersect(const Ideal& i, const Ideal& j);
Ideal sum(const Ideal& i, const Ideal& j);
Ideal product_ideal(const Ideal& i, const Ideal& j);

bool is_comaximal(const Ideal& i, const Ideal& j);

/// Every ideal of R once, sorted by (size, element set).
std::vector<Ideal> all_ideals(const RingPtr& r, const Limits& lim = limits());

/// all_ideals without the unit ideal.
std::vector<Ideal> proper_ideals(const RingPtr& r, const Limits& lim = limits());

bool is_s_saturated(const Ideal& i, const MultSet& s);

/// Smallest S-saturated ideal containing I.
Ideal saturate(const Ideal& i, const MultSet& s);

}  // namespace sdfkit
