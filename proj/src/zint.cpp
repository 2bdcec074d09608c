#include "sdfkit/zint.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sdfkit/error.hpp"

namespace sdfkit::zint {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1U) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1U;
    }
    return r;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
u64 rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 m = 128;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = rho(n);
    split_into(d, primes);
    split_into(n / d, primes);
}

void require_range(u64 n) {
    if (n < 2 || n >= (u64{1} << 63)) {
        throw Error(ErrorCode::OutOfRange, "n = " + std::to_string(n) + " outside 2..2^63-1");
    }
}

u64 lift(u64 residue, u64 modulus) { return residue == 0 ? modulus : residue; }

// Residues 0..m-1 grouped by their square mod m; each group is ascending.
struct SquareClasses {
    std::vector<std::uint32_t> start;  // group of value v is order[start[v] .. start[v+1])
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> square;

    explicit SquareClasses(u64 m) : start(m + 1, 0), order(m), square(m) {
        for (u64 x = 0; x < m; ++x) {
            square[x] = static_cast<std::uint32_t>(mulmod(x, x, m));
            ++start[square[x] + 1];
        }
        for (u64 v = 0; v < m; ++v) start[v + 1] += start[v];
        std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
        for (u64 x = 0; x < m; ++x) order[fill[square[x]]++] = static_cast<std::uint32_t>(x);
    }

    template <class Fn>
    void roots_of_square_of(u64 b, Fn&& fn) const {
        const auto v = square[b];
        for (auto k = start[v]; k < start[v + 1]; ++k) {
            if (fn(order[k])) return;
        }
    }
};

// Least (b, a) with a^2 = b^2 (mod m) that `violates`.
template <class Violates>
OracleResult search(u64 m, Violates violates) {
    SquareClasses classes(m);
    for (u64 b = 0; b < m; ++b) {
        std::optional<u64> hit;
        classes.roots_of_square_of(b, [&](u64 a) {
            if (violates(a, b)) {
                hit = a;
                return true;
            }
            return false;
        });
        if (hit) return OracleResult{false, IntWitness{lift(*hit, m), lift(b, m)}};
    }
    return {};
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    require_range(n);
    Factorization out;
    for (u64 p = 2; p <= kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) {
        std::vector<u64> primes;
        split_into(n, primes);
        std::sort(primes.begin(), primes.end());
        for (u64 p : primes) {
            if (!out.empty() && out.back().first == p) ++out.back().second;
            else out.emplace_back(p, 1);
        }
    }
    return out;
}

u64 radical_of(const Factorization& f) {
    u64 r = 1;
    for (auto [p, e] : f) r *= p;
    return r;
}

bool classify_z_theorem(u64 n) {
    const auto f = factorize(n);
    return std::count_if(f.begin(), f.end(), [](const auto& pe) { return pe.first != 2; }) <= 1;
}

OracleResult oracle_quasi_sdf_z(u64 n) {
    require_range(n);
    // The radical of nZ is rad(n)Z, and every residue class mod rad(n) contains
    // nonzero integers, so the nonzero-pair condition on Z is the all-pairs
    // condition on residues mod rad(n).
    const u64 m = radical_of(factorize(n));
    if (m > kOracleBound) {
        throw Error(ErrorCode::OutOfRange, "rad(" + std::to_string(n) + ") exceeds oracle bound");
    }
    return search(m, [m](u64 a, u64 b) { return a != b && a != (m - b) % m; });
}

OracleResult oracle_sdf_primary_z(u64 n) {
    require_range(n);
    if (n > kOracleBound) {
        throw Error(ErrorCode::OutOfRange, std::to_string(n) + " exceeds oracle bound");
    }
    const u64 r = radical_of(factorize(n));
    return search(n, [n, r](u64 a, u64 b) { return a != b && (a + b) % n % r != 0; });
}

OracleResult oracle_sdf_z(u64 n) {
    require_range(n);
    if (n > kOracleBound) {
        throw Error(ErrorCode::OutOfRange, std::to_string(n) + " exceeds oracle bound");
    }
    return search(n, [n](u64 a, u64 b) { return a != b && a != (n - b) % n; });
}

ZClassification classify_z(u64 n) {
    ZClassification c;
    c.n = n;
    c.factorization = factorize(n);
    c.rad = radical_of(c.factorization);
    c.quasi_sdf_theorem = std::count_if(c.factorization.begin(), c.factorization.end(),
                                        [](const auto& pe) { return pe.first != 2; }) <= 1;
    c.quasi_primary = c.factorization.size() == 1;
    if (c.rad <= kOracleBound) {
        auto q = oracle_quasi_sdf_z(n);
        c.quasi_sdf_oracle = q.holds;
        c.quasi_sdf_witness = q.witness;
    }
    if (n <= kOracleBound) {
        auto p = oracle_sdf_primary_z(n);
        c.sdf_primary_oracle = p.holds;
        c.sdf_primary_witness = p.witness;
        c.sdf_oracle = oracle_sdf_z(n).holds;
    }
    return c;
}

ZClassification localize_z(u64 n, const std::set<u64>& inverted) {
    u64 rest = 1;
    for (auto [p, e] : factorize(n)) {
        if (inverted.count(p)) continue;
        for (unsigned k = 0; k < e; ++k) rest *= p;
    }
    if (rest == 1) {
        throw Error(ErrorCode::UnitIdealResult,
                    "every prime of " + std::to_string(n) + " is inverted; S^-1(nZ) is the unit ideal");
    }
    return classify_z(rest);
}

std::string format_factorization(const Factorization& f) {
    std::string out;
    for (auto [p, e] : f) {
        if (!out.empty()) out += "*";
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace sdfkit::zint
