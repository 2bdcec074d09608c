#pragma once

/**
 * Per-ideal classification records and the boolean predicate language used
 * by `search`.
 *
 *   expr := term (('|' | '||' | 'or') term)*
 *   term := unary (('&' | '&&' | 'and') unary)*
 *   unary := ('!' | '~' | 'not') unary | '(' expr ')' | name
 *
 * Names: prime, maximal, primary, quasi_primary, sdf, sdf_primary, quasi_sdf.
 */

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sdfkit/catalog.hpp"
#include "sdfkit/ideal.hpp"
#include "sdfkit/predicates.hpp"

namespace sdfkit {

enum class Property { Prime, Maximal, Primary, QuasiPrimary, Sdf, SdfPrimary, QuasiSdf };

inline constexpr std::array<Property, 7> kProperties = {
    Property::Prime, Property::Maximal,    Property::Primary, Property::QuasiPrimary,
    Property::Sdf,   Property::SdfPrimary, Property::QuasiSdf};

std::string_view property_name(Property p);

/// Every property of one ideal. All flags are false for the unit ideal.
struct IdealFacts {
    std::array<bool, 7> flags{};
    bool operator[](Property p) const noexcept { return flags[static_cast<std::size_t>(p)]; }
};

IdealFacts ideal_facts(const Ideal& i);

class Expression {
public:
    /// Throws ExpressionParseError.
    static Expression parse(std::string_view text);
    bool eval(const IdealFacts& f) const;
    const std::string& text() const noexcept { return text_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

struct SearchHit {
    std::string ring_spec;
    std::string ideal;
    std::string radical;
    IdealFacts facts;
};

/// Proper ideals of each ring matching `expr`, in ring order then ideal order.
std::vector<SearchHit> search(const std::vector<RingPtr>& rings, const Expression& expr,
                              unsigned jobs = 1);

}  // namespace sdfkit
