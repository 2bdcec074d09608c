#pragma once

/**
 * Ring constructions: idealization R ⋉ M, amalgamation R ⋈^φ J,
 * localization S^-1 R of a finite ring, and truncated polynomial rings
 * R[X]/(X^t), each with the ideal lifts used by the theorem harness.
 */

#include <utility>
#include <vector>

#include "sdfkit/hom.hpp"
#include "sdfkit/ideal.hpp"
#include "sdfkit/ring.hpp"

namespace sdfkit {

/// The R-module M, restricted to R itself or a quotient R/J.
class ModuleSpec {
public:
    static ModuleSpec self(const RingPtr& base);
    static ModuleSpec quotient_by(const Ideal& j);

    const RingPtr& base() const noexcept { return base_; }
    bool is_self() const noexcept { return annihilator_.is_zero(); }
    /// J, the zero ideal for M = R.
    const Ideal& annihilator() const noexcept { return annihilator_; }
    /// The ring R/J that carries M.
    const RingPtr& carrier() const noexcept { return carrier_; }
    std::size_t size() const noexcept { return carrier_->order(); }
    /// r · m = π(r) m.
    Elem act(Elem r, Elem m) const noexcept { return carrier_->mul(reduce_(r), m); }

private:
    ModuleSpec(RingPtr base, Ideal ann, RingPtr carrier, RingHom reduce)
        : base_(std::move(base)), annihilator_(std::move(ann)), carrier_(std::move(carrier)),
          reduce_(std::move(reduce)) {}

    RingPtr base_;
    Ideal annihilator_;
    RingPtr carrier_;
    RingHom reduce_;
};

/// R ⋉ M with element index r * |M| + m.
struct Idealization {
    RingPtr ring;
    ModuleSpec module;

    Elem pair(Elem r, Elem m) const noexcept { return static_cast<Elem>(r * module.size() + m); }
    Elem base_part(Elem x) const noexcept { return static_cast<Elem>(x / module.size()); }
    Elem module_part(Elem x) const noexcept { return static_cast<Elem>(x % module.size()); }
};

Idealization idealize(const ModuleSpec& m, const Limits& lim = limits());

/// I ⋉ M.
Ideal idealization_ideal(const Idealization& idl, const Ideal& i);

/// R ⋈^φ J as the subring {(r, φ(r) + j)} of R × S, carrier sorted by (r, s).
struct Amalgamation {
    RingPtr ring;
    RingHom hom;
    Ideal j;
    std::vector<std::pair<Elem, Elem>> carrier;

    /// Index of (r, s), if that pair lies in the carrier.
    std::optional<Elem> find(Elem r, Elem s) const;
};

Amalgamation amalgamate(const RingHom& phi, const Ideal& j, const Limits& lim = limits());

/// I ⋈^φ J = {(r, φ(r) + j) : r in I, j in J}. Throws NotAnIdeal if the set
/// fails the ideal axioms in the amalgamated ring.
Ideal amalgamation_ideal(const Amalgamation& a, const Ideal& i);

/// S^-1 R for a finite ring. Classes of fractions r/s are represented by
/// their least (r, s) pair.
struct Localization {
    RingPtr ring;
    MultSet s;
    RingHom natural;
    std::vector<std::pair<Elem, Elem>> representatives;
};

/// Throws ZeroRingResult when 0 is in S.
Localization localize(const MultSet& s, const Limits& lim = limits());

/// S^-1 I. Throws ImproperExtension unless I ∩ S = ∅.
Ideal localize_ideal(const Localization& loc, const Ideal& i);

/// R[X]/(X^t); element index is sum a_k |R|^k.
struct TruncatedPolyRing {
    RingPtr ring;
    RingPtr base;
    unsigned t = 2;

    Elem constant(Elem a) const noexcept { return a; }
    Elem indeterminate() const noexcept { return static_cast<Elem>(base->one() * base->order()); }
    Elem coefficient(Elem f, unsigned k) const noexcept;
};

TruncatedPolyRing trunc_poly(const RingPtr& base, unsigned t, const Limits& lim = limits());

/// (I, X): the ideal generated by I as constants together with X.
Ideal lift_IX(const TruncatedPolyRing& tp, const Ideal& i);

}  // namespace sdfkit
