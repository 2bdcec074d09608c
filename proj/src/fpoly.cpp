#include "sdfkit/fpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "sdfkit/error.hpp"

namespace sdfkit::fpoly {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Largest p^d for which irreducibles of degree d are enumerated.
constexpr u64 kEnumerationCap = 20'000'000;

void require_same(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus()) {
        throw Error(ErrorCode::ModulusMismatch, "polynomials over F_" + std::to_string(a.modulus()) +
                                                    " and F_" + std::to_string(b.modulus()));
    }
}

u32 inv_mod(u32 a, u32 p) {
    u64 r = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1U) r = r * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<u32>(r);
}

std::optional<u64> checked_pow(u64 base, unsigned e, u64 cap) {
    u64 r = 1;
    for (unsigned k = 0; k < e; ++k) {
        if (r > cap / base) return std::nullopt;
        r *= base;
    }
    return r;
}

// The polynomial whose coefficients are the base-p digits of k (low first).
FpPoly from_index(u32 p, u64 k, unsigned digits) {
    std::vector<std::int64_t> c(digits);
    for (unsigned i = 0; i < digits; ++i) {
        c[i] = static_cast<std::int64_t>(k % p);
        k /= p;
    }
    return FpPoly(p, std::move(c));
}

FpPoly rem(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

struct IrreducibleCache {
    std::mutex mu;
    std::map<std::pair<u32, unsigned>, std::unique_ptr<std::vector<FpPoly>>> table;
};

IrreducibleCache& cache() {
    static IrreducibleCache c;
    return c;
}

std::vector<FpPoly> enumerate_irreducibles(u32 p, unsigned d,
                                           const std::vector<const std::vector<FpPoly>*>& lower) {
    std::vector<FpPoly> out;
    const u64 count = *checked_pow(p, d, kEnumerationCap);
    for (u64 k = 0; k < count; ++k) {
        auto c = from_index(p, k, d).coefficients();
        std::vector<std::int64_t> coeffs(c.begin(), c.end());
        coeffs.resize(d, 0);
        coeffs.push_back(1);
        FpPoly f(p, std::move(coeffs));
        bool reducible = false;
        for (unsigned e = 1; 2 * e <= d && !reducible; ++e) {
            for (const auto& g : *lower[e]) {
                if (rem(f, g).is_zero()) {
                    reducible = true;
                    break;
                }
            }
        }
        if (!reducible) out.push_back(std::move(f));
    }
    return out;
}

void require_bound(const FpPoly& f, unsigned bound) {
    if (f.degree() > static_cast<int>(bound)) {
        throw Error(ErrorCode::DegreeBoundExceeded, "degree " + std::to_string(f.degree()) +
                                                        " exceeds bound " + std::to_string(bound));
    }
}

}  // namespace

FpPoly::FpPoly(u32 p, std::vector<std::int64_t> coeffs) : p_(p) {
    c_.reserve(coeffs.size());
    for (auto v : coeffs) {
        auto m = v % static_cast<std::int64_t>(p);
        if (m < 0) m += p;
        c_.push_back(static_cast<u32>(m));
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::parse(u32 p, std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    auto fail = [&](const std::string& why) -> FpPoly {
        throw Error(ErrorCode::ParseError, "polynomial \"" + std::string(text) + "\": " + why);
    };
    if (s.empty()) return fail("empty");
    std::vector<std::int64_t> coeffs;
    std::size_t i = 0;
    auto read_int = [&](std::int64_t& out) {
        std::size_t start = i;
        out = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            out = (out * 10 + (s[i] - '0')) % static_cast<std::int64_t>(p);
            if (i - start > 18) fail("number too long");
            ++i;
        }
        return i > start;
    };
    bool first = true;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected + or - at position " + std::to_string(i));
        }
        first = false;
        std::int64_t c = 1;
        std::int64_t digits = 0;
        const bool has_coeff = read_int(digits);
        if (has_coeff) c = digits;
        if (has_coeff && i < s.size() && s[i] == '*') ++i;
        unsigned e = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::int64_t raw = 0;
                std::size_t start = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    raw = raw * 10 + (s[i] - '0');
                    if (raw > 100000) fail("exponent too large");
                    ++i;
                }
                if (i == start) fail("missing exponent");
                e = static_cast<unsigned>(raw);
            }
        } else if (!has_coeff) {
            fail("expected a term at position " + std::to_string(i));
        }
        if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
        coeffs[e] += sign * c;
    }
    return FpPoly(p, std::move(coeffs));
}

std::string FpPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += std::to_string(c_[k]);
            continue;
        }
        if (c_[k] != 1) out += std::to_string(c_[k]) + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

bool operator<(const FpPoly& a, const FpPoly& b) {
    if (a.p_ != b.p_) return a.p_ < b.p_;
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

FpPoly add(const FpPoly& a, const FpPoly& b) {
    require_same(a, b);
    std::vector<std::int64_t> c(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
    return FpPoly(a.modulus(), std::move(c));
}

FpPoly sub(const FpPoly& a, const FpPoly& b) {
    require_same(a, b);
    std::vector<std::int64_t> c(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = static_cast<std::int64_t>(a.coefficient(k)) - b.coefficient(k);
    }
    return FpPoly(a.modulus(), std::move(c));
}

FpPoly mul(const FpPoly& a, const FpPoly& b) {
    require_same(a, b);
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.modulus());
    const u64 p = a.modulus();
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    std::vector<std::int64_t> c(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            c[i + j] = static_cast<std::int64_t>((c[i + j] + u64{x[i]} * y[j]) % p);
        }
    }
    return FpPoly(a.modulus(), std::move(c));
}

FpPoly scale(const FpPoly& a, u32 c) {
    std::vector<std::int64_t> out;
    for (u32 v : a.coefficients()) out.push_back(static_cast<std::int64_t>(u64{v} * c % a.modulus()));
    return FpPoly(a.modulus(), std::move(out));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    require_same(a, b);
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
    const u32 p = a.modulus();
    const u64 inv = inv_mod(b.lead(), p);
    std::vector<std::int64_t> r(a.coefficients().begin(), a.coefficients().end());
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {FpPoly::zero(p), a};
    std::vector<std::int64_t> q(static_cast<std::size_t>(da - db + 1), 0);
    for (int k = da; k >= db; --k) {
        const auto lead = static_cast<u64>(r[static_cast<std::size_t>(k)]);
        if (lead == 0) continue;
        const u64 t = lead * inv % p;
        q[static_cast<std::size_t>(k - db)] = static_cast<std::int64_t>(t);
        for (int j = 0; j <= db; ++j) {
            auto& slot = r[static_cast<std::size_t>(k - db + j)];
            slot = static_cast<std::int64_t>((static_cast<u64>(slot) + p - t * b.coefficient(j) % p) % p);
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    require_same(a, b);
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

u32 eval(const FpPoly& f, u32 x) {
    const u64 p = f.modulus();
    u64 acc = 0;
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * (x % p) + *it) % p;
    return static_cast<u32>(acc);
}

FpPoly monic(const FpPoly& f) {
    if (f.is_zero()) return f;
    return scale(f, inv_mod(f.lead(), f.modulus()));
}

FpPoly derivative(const FpPoly& f) {
    std::vector<std::int64_t> c;
    for (std::size_t k = 1; k < f.coefficients().size(); ++k) {
        c.push_back(static_cast<std::int64_t>(k % f.modulus() * f.coefficient(k) % f.modulus()));
    }
    return FpPoly(f.modulus(), std::move(c));
}

bool is_prime_modulus(u64 p) {
    if (p < 2) return false;
    for (u64 d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

const std::vector<FpPoly>& irreducibles(u32 p, unsigned d) {
    if (!is_prime_modulus(p)) {
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }
    if (d == 0 || !checked_pow(p, d, kEnumerationCap)) {
        throw Error(ErrorCode::DegreeBoundExceeded,
                    "irreducibles of degree " + std::to_string(d) + " over F_" + std::to_string(p) +
                        " are beyond the enumeration cap");
    }
    auto& c = cache();
    std::lock_guard lock(c.mu);
    // Fill every degree up to d so lower tables exist when needed.
    for (unsigned e = 1; e <= d; ++e) {
        auto& slot = c.table[{p, e}];
        if (slot) continue;
        std::vector<const std::vector<FpPoly>*> lower(e + 1, nullptr);
        for (unsigned k = 1; 2 * k <= e; ++k) lower[k] = c.table[{p, k}].get();
        slot = std::make_unique<std::vector<FpPoly>>(enumerate_irreducibles(p, e, lower));
    }
    return *c.table[{p, d}];
}

Factorization factorize_fp(const FpPoly& f, unsigned bound) {
    if (f.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "cannot factor the zero polynomial");
    require_bound(f, bound);
    Factorization out;
    FpPoly rest = monic(f);
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
        for (const auto& g : irreducibles(f.modulus(), d)) {
            if (2 * d > static_cast<unsigned>(rest.degree())) break;
            unsigned e = 0;
            while (true) {
                auto [q, r] = divmod(rest, g);
                if (!r.is_zero()) break;
                rest = std::move(q);
                ++e;
            }
            if (e) out.emplace_back(g, e);
        }
    }
    if (rest.degree() > 0) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& fe) { return fe.first == rest; });
        if (it != out.end()) ++it->second;
        else out.emplace_back(rest, 1);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    FpPoly check = FpPoly::constant(f.modulus(), 1);
    for (const auto& [g, e] : out) {
        for (unsigned k = 0; k < e; ++k) check = mul(check, g);
    }
    if (!(check == monic(f))) {
        throw Error(ErrorCode::DegreeBoundExceeded, "factorization of " + f.str() + " failed its product check");
    }
    return out;
}

bool is_irreducible(const FpPoly& f, unsigned bound) {
    if (f.degree() < 1) return false;
    auto fac = factorize_fp(f, bound);
    return fac.size() == 1 && fac.front().second == 1;
}

FpPoly radical_part(const FpPoly& f, unsigned bound) {
    FpPoly r = FpPoly::constant(f.modulus(), 1);
    for (const auto& [g, e] : factorize_fp(f, bound)) r = mul(r, g);
    return r;
}

PrincipalClass classify_principal(const FpPoly& f, unsigned bound) {
    if (f.degree() < 1) {
        throw Error(ErrorCode::ConstantPolynomial, "(" + f.str() + ") is not a proper nonzero ideal");
    }
    const bool single = factorize_fp(f, bound).size() == 1;
    PrincipalClass c;
    c.quasi_primary = single;
    if (f.modulus() == 2) {
        c.quasi_sdf = true;
        c.sdf_primary = true;
    } else {
        c.quasi_sdf = single;
        c.sdf_primary = single;
    }
    return c;
}

SampleResult sample_check_principal(const FpPoly& f, unsigned d, u64 budget) {
    const auto verdict = classify_principal(f);
    const u32 p = f.modulus();
    const auto n = static_cast<unsigned>(f.degree());
    const FpPoly r = radical_part(f);
    // Polynomials of degree < deg f already are the residues mod f, so sampling
    // beyond that degree revisits the same classes.
    const unsigned digits = std::min(d + 1, n);
    const auto total = checked_pow(p, digits, ~u64{0} / 2);

    // Residues carry a wrapping base-p fingerprint so unequal ones are
    // usually told apart without touching the coefficient vectors.
    struct Residue {
        u64 key = 0;
        FpPoly value;
        explicit Residue(FpPoly v) : value(std::move(v)) {
            for (auto it = value.coefficients().rbegin(); it != value.coefficients().rend(); ++it) {
                key = key * value.modulus() + *it + 1;
            }
        }
        bool operator==(const Residue& o) const { return key == o.key && value == o.value; }
    };
    struct Data {
        FpPoly poly;
        Residue sq_f;
        Residue mod_r;
        Residue neg_r;
        Residue sq_r;
        std::uint32_t divisors;  // bit k set iff the k-th prime factor of r divides the poly
    };
    std::vector<FpPoly> primes;
    for (const auto& [g, e] : factorize_fp(f)) primes.push_back(g);
    const std::uint32_t full = (std::uint32_t{1} << primes.size()) - 1;
    std::vector<Data> data;
    auto get = [&](u64 k) -> const Data& {
        while (data.size() <= k) {
            FpPoly a = from_index(p, data.size(), digits);
            FpPoly sq = mul(a, a);
            FpPoly ar = rem(a, r);
            std::uint32_t mask = 0;
            for (std::size_t i = 0; i < primes.size(); ++i) {
                if (rem(ar, primes[i]).is_zero()) mask |= std::uint32_t{1} << i;
            }
            data.push_back(Data{a, Residue(rem(sq, f)), Residue(ar), Residue(sub(FpPoly::zero(p), ar)),
                                Residue(rem(sq, r)), mask});
        }
        return data[k];
    };

    SampleResult out;
    bool stopped = false;
    const u64 limit = total ? *total : ~u64{0};
    for (u64 b = 0; b < limit && !stopped; ++b) {
        const Data& db = get(b);
        for (u64 a = 0; a <= b; ++a) {
            if (out.pairs_checked == budget) {
                stopped = true;
                break;
            }
            ++out.pairs_checked;
            const Data& da = data[a];
            if (!out.quasi_sdf_witness && da.sq_r == db.sq_r && !(da.mod_r == db.mod_r) &&
                !(da.mod_r == db.neg_r)) {
                out.quasi_sdf_witness = PolyWitness{da.poly, db.poly};
            }
            if (!out.sdf_primary_witness && a != b && da.sq_f == db.sq_f && !(da.mod_r == db.neg_r)) {
                out.sdf_primary_witness = PolyWitness{da.poly, db.poly};
            }
            if (!out.quasi_primary_witness && da.divisors != full && db.divisors != full &&
                (da.divisors | db.divisors) == full) {
                out.quasi_primary_witness = PolyWitness{da.poly, db.poly};
            }
        }
    }
    out.budget_exhausted = stopped;
    out.complete = !stopped && digits == n;

    auto judge = [&](const char* name, bool classified, const std::optional<PolyWitness>& w) {
        if ((classified && w) || (!classified && !w && out.complete)) out.contradictions.emplace_back(name);
    };
    judge("quasi_sdf", verdict.quasi_sdf, out.quasi_sdf_witness);
    judge("sdf_primary", verdict.sdf_primary, out.sdf_primary_witness);
    judge("quasi_primary", verdict.quasi_primary, out.quasi_primary_witness);
    return out;
}

}  // namespace sdfkit::fpoly
