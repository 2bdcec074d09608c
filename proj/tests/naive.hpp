#pragma once

// Direct integer definitions on Z_n, used as oracles against the table-driven library.

#include <cstdint>
#include <numeric>
#include <vector>

namespace naive {

// The ideal (d) of Z_n as a membership mask.
inline std::vector<bool> multiples(std::uint64_t n, std::uint64_t d) {
    std::vector<bool> m(n, false);
    const auto g = std::gcd(n, d % n);
    for (std::uint64_t x = 0; x < n; x += (g == 0 ? n : g)) m[x] = true;
    return m;
}

inline std::vector<bool> radical(std::uint64_t n, const std::vector<bool>& in) {
    std::vector<bool> out(n, false);
    for (std::uint64_t x = 0; x < n; ++x) {
        std::uint64_t p = 1 % n;
        for (std::uint64_t k = 0; k < n; ++k) p = p * x % n;
        out[x] = in[p];
    }
    return out;
}

inline std::uint64_t sub(std::uint64_t n, std::uint64_t a, std::uint64_t b) { return (a + n - b) % n; }

inline bool sdf(std::uint64_t n, const std::vector<bool>& in) {
    for (std::uint64_t a = 1; a < n; ++a) {
        for (std::uint64_t b = 1; b < n; ++b) {
            if (in[sub(n, a * a % n, b * b % n)] && !in[sub(n, a, b)] && !in[(a + b) % n]) return false;
        }
    }
    return true;
}

inline bool sdf_primary(std::uint64_t n, const std::vector<bool>& in) {
    const auto rad = radical(n, in);
    for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < n; ++b) {
            if (in[sub(n, a * a % n, b * b % n)] && !in[sub(n, a, b)] && !rad[(a + b) % n]) return false;
        }
    }
    return true;
}

inline bool prime(std::uint64_t n, const std::vector<bool>& in) {
    if (in[1 % n]) return false;
    for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < n; ++b) {
            if (in[a * b % n] && !in[a] && !in[b]) return false;
        }
    }
    return true;
}

// nZ quasi sdf-absorbing, straight from the definition: residues mod rad(n),
// where residue 0 stands for the nonzero integer rad(n).
inline bool int_quasi_sdf(std::uint64_t n) {
    std::uint64_t r = 1, m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        r *= p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) r *= m;
    for (std::uint64_t a = 0; a < r; ++a) {
        for (std::uint64_t b = 0; b < r; ++b) {
            if ((a * a + r * r - b * b % r) % r == 0 && (a + r - b) % r != 0 && (a + b) % r != 0) return false;
        }
    }
    return true;
}

// nZ sdf-absorbing primary: a, b range over all residues mod n.
inline bool int_sdf_primary(std::uint64_t n) {
    std::uint64_t r = 1, m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        r *= p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) r *= m;
    for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < n; ++b) {
            if ((a * a + n * n - b * b) % n == 0 && a != b && (a + b) % r != 0) return false;
        }
    }
    return true;
}

// nZ sdf-absorbing: nonzero integers reach every residue, 0 included.
inline bool int_sdf(std::uint64_t n) {
    for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < n; ++b) {
            if ((a * a + n * n - b * b) % n == 0 && a != b && (a + b) % n != 0) return false;
        }
    }
    return true;
}

}  // namespace naive
