#pragma once

/**
 * The instance catalog shared by the theorem harness and the search command.
 *
 * Entries are built in a fixed order and filtered by `max_order`, so the same
 * options always yield the same catalog.
 */

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "sdfkit/constructions.hpp"
#include "sdfkit/hom.hpp"
#include "sdfkit/ideal.hpp"

namespace sdfkit {

struct CatalogOptions {
    std::size_t max_order = 256;    ///< also capped by limits().enumerate_order
    std::size_t zn_max = 36;        ///< Z_n for 2 <= n <= zn_max
    std::vector<std::size_t> zn_extra{144, 225};
    std::size_t product_max = 12;   ///< Z_m x Z_n for 2 <= m, n <= product_max
    std::size_t idl_max = 8;        ///< idealizations over Z_n, n <= idl_max
    std::size_t amalg_max = 12;     ///< homs Z_m -> Z_n with m <= amalg_max
    std::size_t tp_max = 12;        ///< TP(Z_n, 2), n <= tp_max
    std::size_t quotient_max = 8;   ///< quotients of Z_m x Z_n, m, n <= quotient_max
    std::size_t hom_max = 36;       ///< canonical Z_m -> Z_n, m <= hom_max
    std::uint64_t z_range = 20000;  ///< integer classification range 2..z_range
    unsigned jobs = 1;
};

class Catalog {
public:
    explicit Catalog(CatalogOptions opts = {});

    const CatalogOptions& options() const noexcept { return opts_; }

    const std::vector<RingPtr>& zn() const noexcept { return zn_; }
    const std::vector<Product>& products() const noexcept { return products_; }
    const std::vector<Quotient>& quotients() const noexcept { return quotients_; }
    const std::vector<Idealization>& idealizations() const noexcept { return idealizations_; }
    const std::vector<Amalgamation>& amalgamations() const noexcept { return amalgamations_; }
    const std::vector<TruncatedPolyRing>& trunc_polys() const noexcept { return trunc_; }
    const std::vector<RingHom>& homs() const noexcept { return homs_; }

    /// Every catalog ring in catalog order.
    const std::vector<RingPtr>& rings() const noexcept { return rings_; }

    /// all_ideals(r), memoized; safe to call from several threads.
    const std::vector<Ideal>& ideals(const RingPtr& r) const;
    /// ideals(r) without the unit ideal.
    std::vector<Ideal> proper(const RingPtr& r) const;

    /// Multiplicative sets <x> with 0 not in <x>, one per distinct element set.
    static std::vector<MultSet> cyclic_mult_sets(const RingPtr& r);

private:
    bool fits(std::size_t order) const noexcept {
        return order <= opts_.max_order && order <= limits().enumerate_order && order <= limits().max_order;
    }

    CatalogOptions opts_;
    std::vector<RingPtr> zn_;
    std::vector<Product> products_;
    std::vector<Quotient> quotients_;
    std::vector<Idealization> idealizations_;
    std::vector<Amalgamation> amalgamations_;
    std::vector<TruncatedPolyRing> trunc_;
    std::vector<RingHom> homs_;
    std::vector<RingPtr> rings_;

    struct Memo {
        std::mutex mu;
        std::map<const Ring*, std::pair<RingPtr, std::shared_ptr<const std::vector<Ideal>>>> table;
    };
    std::unique_ptr<Memo> memo_;
};

/// Runs fn(0..n-1) on `jobs` threads; results come back in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, Fn&& fn);

}  // namespace sdfkit

#include "sdfkit/detail/parallel.hpp"
