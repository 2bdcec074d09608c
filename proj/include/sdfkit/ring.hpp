#pragma once

/**
 * Finite commutative rings with identity.
 *
 * Elements are dense indices 0..order-1. Every constructor tabulates the
 * addition and multiplication once; all later arithmetic is table lookup.
 * Rings are immutable and shared through `RingPtr`, so ideals, homomorphisms
 * and constructions can hold on to the ring they live in.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sdfkit {

using Elem = std::uint32_t;

/// Size limits shared by every constructor.
struct Limits {
    std::size_t validate_order = 512;   ///< exhaustive axiom checks up to this order
    std::size_t max_order = 4096;       ///< hard cap for construction
    std::size_t enumerate_order = 256;  ///< cap for all_ideals and condition (*)
};

/// Process-wide limits. Set once at startup, before worker threads exist.
Limits& limits();

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
public:
    using BinaryFn = std::function<Elem(Elem, Elem)>;
    using LabelFn = std::function<std::string(Elem)>;

    /// Tabulates `add`/`mul` over 0..order-1 and validates the ring axioms when
    /// order <= lim.validate_order. Labels must be pairwise distinct.
    static RingPtr tabulate(std::string spec, std::size_t order, Elem zero, Elem one,
                            const BinaryFn& add, const BinaryFn& mul, const LabelFn& label,
                            const Limits& lim = limits());

    std::size_t order() const noexcept { return order_; }
    Elem zero() const noexcept { return zero_; }
    Elem one() const noexcept { return one_; }
    const std::string& spec() const noexcept { return spec_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[a * order_ + b]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * order_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem square(Elem a) const noexcept { return mul(a, a); }
    Elem pow(Elem a, std::uint64_t k) const noexcept;

    /// k * 1 for k >= 0.
    Elem from_int(std::uint64_t k) const noexcept;

    const std::string& label(Elem a) const { return labels_.at(a); }
    std::optional<Elem> find_label(std::string_view text) const;

private:
    Ring() = default;

    std::string spec_;
    std::size_t order_ = 0;
    Elem zero_ = 0;
    Elem one_ = 0;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> mul_;
    std::vector<std::uint16_t> neg_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Elem> by_label_;
};

/// Exhaustive check of the commutative-ring-with-identity axioms. Returns an
/// empty string when all hold, otherwise a description of the first failure.
std::string check_ring_axioms(const Ring& r);

bool same_ring(const RingPtr& a, const RingPtr& b);

RingPtr make_zn(std::size_t n, const Limits& lim = limits());

/// Least k >= 1 with k * 1 = 0.
std::size_t ring_char(const Ring& r);

bool is_unit(const Ring& r, Elem x);

/// Multiplicative inverse when `x` is a unit.
std::optional<Elem> inverse(const Ring& r, Elem x);

/// Multiplicatively closed subset containing one.
class MultSet {
public:
    /// Closure of {1} and `gens` under multiplication.
    static MultSet generated(RingPtr ring, const std::vector<Elem>& gens);
    /// Validates that `elements` contains one and is multiplicatively closed.
    static MultSet from_elements(RingPtr ring, std::vector<Elem> elements);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Elem>& elements() const noexcept { return elements_; }
    /// Generators as supplied (excluding one).
    const std::vector<Elem>& generators() const noexcept { return gens_; }
    bool contains(Elem x) const noexcept { return member_[x] != 0; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::string describe() const;

private:
    MultSet() = default;

    RingPtr ring_;
    std::vector<Elem> elements_;
    std::vector<Elem> gens_;
    std::vector<char> member_;
};

}  // namespace sdfkit
