#pragma once

/**
 * Polynomials over F_p and principal ideals (f) of F_p[x].
 *
 * The classifier reads the verdict off the factorization of f. The sampler
 * re-decides the same questions from the definitions by walking polynomial
 * pairs, using the fact that every condition only depends on residues
 * modulo f and modulo its radical.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sdfkit::fpoly {

/// Default degree bound for factorization and classification.
inline constexpr unsigned kDegreeBound = 12;
/// Default number of pair evaluations for the sampler.
inline constexpr std::uint64_t kSampleBudget = 1'000'000;

class FpPoly {
public:
    FpPoly() = default;
    /// Coefficients low to high, reduced mod p; trailing zeros are stripped.
    FpPoly(std::uint32_t p, std::vector<std::int64_t> coeffs);

    static FpPoly zero(std::uint32_t p) { return FpPoly(p, {}); }
    static FpPoly constant(std::uint32_t p, std::int64_t c) { return FpPoly(p, {c}); }
    static FpPoly x(std::uint32_t p) { return FpPoly(p, {0, 1}); }
    /// Accepts sums of terms like "3", "2*x", "2x", "x^3", "-x"; whitespace ignored.
    static FpPoly parse(std::uint32_t p, std::string_view text);

    std::uint32_t modulus() const noexcept { return p_; }
    const std::vector<std::uint32_t>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::uint32_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::uint32_t coefficient(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0; }

    /// "c0+c1*x+c2*x^2" with zero terms dropped and unit coefficients omitted.
    std::string str() const;

    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator<(const FpPoly& a, const FpPoly& b);

private:
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> c_;
};

FpPoly add(const FpPoly& a, const FpPoly& b);
FpPoly sub(const FpPoly& a, const FpPoly& b);
FpPoly mul(const FpPoly& a, const FpPoly& b);
FpPoly scale(const FpPoly& a, std::uint32_t c);
/// Quotient and remainder. Throws DivisionByZeroPoly.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
std::uint32_t eval(const FpPoly& f, std::uint32_t x);
FpPoly monic(const FpPoly& f);
FpPoly derivative(const FpPoly& f);

bool is_prime_modulus(std::uint64_t p);

/// Monic irreducibles of exactly degree d, in degree-then-lexicographic order.
/// Cached per p; safe to call from several threads.
const std::vector<FpPoly>& irreducibles(std::uint32_t p, unsigned d);

using Factorization = std::vector<std::pair<FpPoly, unsigned>>;

/// Monic irreducible factors with multiplicity. Throws DegreeBoundExceeded.
Factorization factorize_fp(const FpPoly& f, unsigned bound = kDegreeBound);
bool is_irreducible(const FpPoly& f, unsigned bound = kDegreeBound);
/// Product of the distinct monic irreducible factors.
FpPoly radical_part(const FpPoly& f, unsigned bound = kDegreeBound);

struct PrincipalClass {
    bool quasi_sdf = false;
    bool sdf_primary = false;
    bool quasi_primary = false;
};

/// Throws ConstantPolynomial, DegreeBoundExceeded.
PrincipalClass classify_principal(const FpPoly& f, unsigned bound = kDegreeBound);

using PolyWitness = std::pair<FpPoly, FpPoly>;

struct SampleResult {
    /// First failing pair (a, b) found for each property, b outer and a inner.
    std::optional<PolyWitness> quasi_sdf_witness;
    std::optional<PolyWitness> sdf_primary_witness;
    std::optional<PolyWitness> quasi_primary_witness;
    std::uint64_t pairs_checked = 0;
    /// Every residue pair was visited, so a missing witness proves the property.
    bool complete = false;
    bool budget_exhausted = false;
    /// Disagreements with classify_principal, e.g. "quasi_sdf".
    std::vector<std::string> contradictions;
    bool contradiction() const noexcept { return !contradictions.empty(); }
};

/// Checks the definitions on pairs of polynomials of degree <= d.
SampleResult sample_check_principal(const FpPoly& f, unsigned d,
                                    std::uint64_t budget = kSampleBudget);

}  // namespace sdfkit::fpoly
