#include "sdfkit/catalog.hpp"

#include <set>

#include "sdfkit/error.hpp"

namespace sdfkit {

namespace {

std::size_t least_prime_factor(std::size_t n) {
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) return p;
    }
    return n;
}

}  // namespace

Catalog::Catalog(CatalogOptions opts) : opts_(opts), memo_(std::make_unique<Memo>()) {
    std::map<std::size_t, RingPtr> z;
    auto zr = [&](std::size_t n) {
        auto& slot = z[n];
        if (!slot) slot = make_zn(n);
        return slot;
    };

    for (std::size_t n = 2; n <= opts_.zn_max; ++n) {
        if (fits(n)) zn_.push_back(zr(n));
    }
    for (std::size_t n : opts_.zn_extra) {
        if (n > opts_.zn_max && fits(n)) zn_.push_back(zr(n));
    }

    std::vector<std::pair<std::size_t, std::size_t>> dims;
    for (std::size_t m = 2; m <= opts_.product_max; ++m) {
        for (std::size_t n = 2; n <= opts_.product_max; ++n) {
            if (fits(m * n)) dims.emplace_back(m, n);
        }
    }
    for (auto [m, n] : dims) {
        zr(m);
        zr(n);
    }
    products_ = parallel_map<Product>(dims.size(), opts_.jobs, [&](std::size_t k) {
        return make_product(z.at(dims[k].first), z.at(dims[k].second));
    });

    for (std::size_t m = 2; m <= opts_.quotient_max; ++m) {
        for (std::size_t n = m; n <= opts_.quotient_max; ++n) {
            if (!fits(m * n)) continue;
            if (least_prime_factor(m) == m && least_prime_factor(n) == n) continue;
            auto p = make_product(zr(m), zr(n));
            auto g = p.pair(static_cast<Elem>(least_prime_factor(m) % m),
                            static_cast<Elem>(least_prime_factor(n) % n));
            quotients_.push_back(make_quotient(principal_ideal(p.ring, g)));
        }
    }

    for (std::size_t n = 2; n <= opts_.idl_max; ++n) {
        if (!fits(n * n)) continue;
        auto base = zr(n);
        idealizations_.push_back(idealize(ModuleSpec::self(base)));
        for (std::size_t d = 2; d < n; ++d) {
            if (n % d || !fits(n * d)) continue;
            idealizations_.push_back(idealize(ModuleSpec::quotient_by(principal_ideal(base, static_cast<Elem>(d)))));
        }
    }

    std::vector<RingHom> amalg_homs;
    for (std::size_t m = 2; m <= opts_.amalg_max; ++m) {
        amalg_homs.push_back(identity_hom(zr(m)));
        for (std::size_t n = 2; n < m; ++n) {
            if (m % n == 0) amalg_homs.push_back(canonical_hom(zr(m), zr(n)));
        }
    }
    for (const auto& phi : amalg_homs) {
        for (const auto& j : proper_ideals(phi.target())) {
            if (!fits(phi.source()->order() * j.size())) continue;
            amalgamations_.push_back(amalgamate(phi, j));
        }
    }

    for (std::size_t n = 2; n <= opts_.tp_max; ++n) {
        if (fits(n * n)) trunc_.push_back(trunc_poly(zr(n), 2));
    }

    for (std::size_t m = 2; m <= opts_.hom_max; ++m) {
        if (!fits(m)) continue;
        for (std::size_t n = 2; n <= m; ++n) {
            if (m % n == 0) homs_.push_back(n == m ? identity_hom(zr(m)) : canonical_hom(zr(m), zr(n)));
        }
    }
    for (const auto& p : products_) {
        if (p.left->order() <= 6 && p.right->order() <= 6) {
            homs_.push_back(p.proj_first());
            homs_.push_back(p.proj_second());
        }
    }
    for (const auto& q : quotients_) homs_.push_back(q.projection);

    for (const auto& r : zn_) rings_.push_back(r);
    for (const auto& p : products_) rings_.push_back(p.ring);
    for (const auto& q : quotients_) rings_.push_back(q.ring);
    for (const auto& i : idealizations_) rings_.push_back(i.ring);
    for (const auto& a : amalgamations_) rings_.push_back(a.ring);
    for (const auto& t : trunc_) rings_.push_back(t.ring);
}

const std::vector<Ideal>& Catalog::ideals(const RingPtr& r) const {
    {
        std::lock_guard lock(memo_->mu);
        if (auto it = memo_->table.find(r.get()); it != memo_->table.end()) return *it->second.second;
    }
    auto computed = std::make_shared<const std::vector<Ideal>>(all_ideals(r));
    std::lock_guard lock(memo_->mu);
    auto [it, inserted] = memo_->table.emplace(r.get(), std::pair(r, std::move(computed)));
    return *it->second.second;
}

std::vector<Ideal> Catalog::proper(const RingPtr& r) const {
    auto all = ideals(r);
    all.pop_back();
    return all;
}

std::vector<MultSet> Catalog::cyclic_mult_sets(const RingPtr& r) {
    std::vector<MultSet> out;
    std::set<std::vector<Elem>> seen;
    for (Elem x = 0; x < r->order(); ++x) {
        auto s = MultSet::generated(r, {x});
        if (s.contains(r->zero())) continue;
        if (seen.insert(s.elements()).second) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace sdfkit
