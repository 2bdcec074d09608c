#pragma once

#include <utility>
#include <vector>

#include "sdfkit/ideal.hpp"
#include "sdfkit/ring.hpp"

namespace sdfkit {

/// A validated ring homomorphism between finite rings.
class RingHom {
public:
    const RingPtr& source() const noexcept { return source_; }
    const RingPtr& target() const noexcept { return target_; }
    Elem operator()(Elem x) const noexcept { return map_[x]; }
    const std::vector<Elem>& table() const noexcept { return map_; }
    const Ideal& kernel() const noexcept { return kernel_; }
    bool surjective() const noexcept { return surjective_; }
    const std::string& name() const noexcept { return name_; }

private:
    friend RingHom make_hom(RingPtr, RingPtr, std::vector<Elem>, std::string);

    RingHom(RingPtr s, RingPtr t, std::vector<Elem> m, Ideal k, bool surj, std::string name)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)),
          kernel_(std::move(k)), surjective_(surj), name_(std::move(name)) {}

    RingPtr source_;
    RingPtr target_;
    std::vector<Elem> map_;
    Ideal kernel_;
    bool surjective_ = false;
    std::string name_;
};

/// Checks map(0)=0, map(1)=1, additivity and multiplicativity exhaustively.
/// Throws NotAHomomorphism naming the first violated identity.
RingHom make_hom(RingPtr source, RingPtr target, std::vector<Elem> map, std::string name = "");

RingHom identity_hom(const RingPtr& r);

/// The unique map sending 1 to 1, defined when the additive group of `source`
/// is generated by one and char(target) divides char(source).
RingHom canonical_hom(const RingPtr& source, const RingPtr& target);

Ideal preimage_ideal(const RingHom& h, const Ideal& j);

/// h(I). Throws NotAnIdeal when the image is not an ideal of the target
/// (possible for non-surjective h).
Ideal image_ideal(const RingHom& h, const Ideal& i);

RingHom compose(const RingHom& outer, const RingHom& inner);

/// R/I on minimum-index coset representatives, plus the canonical surjection.
struct Quotient {
    RingPtr ring;
    RingHom projection;
};

Quotient make_quotient(const Ideal& i, const Limits& lim = limits());

/// R1 x R2 with element index a * |R2| + b.
struct Product {
    RingPtr ring;
    RingPtr left;
    RingPtr right;

    Elem pair(Elem a, Elem b) const noexcept { return static_cast<Elem>(a * right->order() + b); }
    Elem first(Elem x) const noexcept { return static_cast<Elem>(x / right->order()); }
    Elem second(Elem x) const noexcept { return static_cast<Elem>(x % right->order()); }

    RingHom proj_first() const;
    RingHom proj_second() const;
};

Product make_product(const RingPtr& left, const RingPtr& right, const Limits& lim = limits());

/// I1 x I2 as an ideal of the product ring.
Ideal cross_ideal(const Product& p, const Ideal& left, const Ideal& right);

}  // namespace sdfkit
