#pragma once

/**
 * Ideals nZ of the integers.
 *
 * The fast classifier reads the verdict off the factorization of n. The
 * oracles decide the same questions by exhaustive search over residue pairs,
 * which is exact because membership in nZ (and in rad(n)Z) depends only on
 * residues.
 */

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sdfkit::zint {

using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;
using IntWitness = std::pair<std::uint64_t, std::uint64_t>;

/// Limit on the modulus for exhaustive residue searches.
inline constexpr std::uint64_t kOracleBound = 1'000'000;

struct OracleResult {
    bool holds = true;
    /// (a, b) lifted to representatives in 1..modulus.
    std::optional<IntWitness> witness;
};

bool is_prime(std::uint64_t n);

/// Ascending prime factorization; 2 <= n < 2^63.
Factorization factorize(std::uint64_t n);

std::uint64_t radical_of(const Factorization& f);

/// nZ is quasi sdf-absorbing iff n has at most one odd prime divisor.
bool classify_z_theorem(std::uint64_t n);

/// Exhaustive: a^2 = b^2 (mod rad n) implies a = ±b (mod rad n). Requires rad(n) <= 10^6.
OracleResult oracle_quasi_sdf_z(std::uint64_t n);

/// Exhaustive: a^2 = b^2 (mod n) implies rad(n) | a + b or n | a - b. Requires n <= 10^6.
OracleResult oracle_sdf_primary_z(std::uint64_t n);

/// Exhaustive: a^2 = b^2 (mod n) implies a = ±b (mod n). Requires n <= 10^6.
OracleResult oracle_sdf_z(std::uint64_t n);

struct ZClassification {
    std::uint64_t n = 0;
    Factorization factorization;
    std::uint64_t rad = 0;
    bool quasi_sdf_theorem = false;
    std::optional<bool> quasi_sdf_oracle;
    std::optional<bool> sdf_oracle;
    std::optional<bool> sdf_primary_oracle;
    bool quasi_primary = false;
    std::optional<IntWitness> quasi_sdf_witness;
    std::optional<IntWitness> sdf_primary_witness;

    /// The first witness refuting a reported property, if any.
    std::optional<IntWitness> witness() const {
        return quasi_sdf_witness ? quasi_sdf_witness : sdf_primary_witness;
    }
};

/// Full record; oracle fields stay empty when n is beyond the oracle bound.
ZClassification classify_z(std::uint64_t n);

/// Classification of S^-1(nZ) in S^-1 Z where S is generated by `inverted`.
/// Throws UnitIdealResult when every prime of n is inverted.
ZClassification localize_z(std::uint64_t n, const std::set<std::uint64_t>& inverted);

std::string format_factorization(const Factorization& f);

}  // namespace sdfkit::zint
