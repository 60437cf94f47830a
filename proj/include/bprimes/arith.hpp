#pragma once

// Word-sized modular arithmetic, unit groups, and the validated parameter
// types shared by every other module.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bprimes/rational.hpp"

namespace bprimes {

/// The representative of x mod m in [0, m).
constexpr std::int64_t least_residue(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

constexpr std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(
        static_cast<__int128>(least_residue(a, m)) * least_residue(b, m) % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Inverse of u mod m; throws NotCoprime when gcd(u, m) != 1.
std::int64_t inverse_mod(std::int64_t u, std::int64_t m);

/// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::int64_t n);

std::int64_t euler_phi(std::int64_t m);

/// Smallest k >= 1 with u^k = 1 mod m. Throws NotCoprime if gcd(u, m) != 1.
/// Brute-force multiplication below 10^4, otherwise descends through the
/// prime factors of phi(m).
std::int64_t mod_order(std::int64_t u, std::int64_t m);

/// Smallest generator of (Z/pZ)^x for an odd prime p.
std::int64_t primitive_root(std::int64_t p);

/// Units of Z/mZ in increasing order (for m == 1 this is {0}).
std::vector<std::int64_t> units(std::int64_t m);

/// mask[v] != 0 iff gcd(v, m) == 1, for 0 <= v < m. Sieve over the prime
/// factors of m, no per-element gcd.
void unit_mask(std::int64_t m, std::vector<std::uint8_t>& mask);

/// Hypergeometric parameter triple (a, b; c) with 0 < a,b,c < 1 and c != a,b.
class HGParams {
public:
    /// Throws InvalidParams unless the invariants hold.
    static HGParams make(Rational a, Rational b, Rational c);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }

    std::string to_string() const;

    friend bool operator==(const HGParams&, const HGParams&) = default;

private:
    HGParams(Rational a, Rational b, Rational c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    Rational a_, b_, c_;
};

struct NormalizedParams {
    HGParams params;
    bool adjusted;  // some input lay outside (0, 1)
};

/// Reduces arbitrary rationals to ({a}, {b}; {c}). Throws IntegralParameter
/// if any of a, b, c, a - c, b - c is an integer.
NormalizedParams normalize_params(const Rational& a, const Rational& b, const Rational& c);

/// m = lcm of the three denominators, with phi(m).
struct Modulus {
    std::int64_t m;
    std::int64_t phi;

    static Modulus of(const HGParams& params);
};

/// Sorted, deduplicated subset of (Z/mZ)^x.
class ResidueSet {
public:
    ResidueSet(std::int64_t modulus, std::vector<std::int64_t> members);

    std::int64_t modulus() const { return modulus_; }
    std::span<const std::int64_t> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(std::int64_t v) const;

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    std::int64_t modulus_;
    std::vector<std::int64_t> members_;
};

}  // namespace bprimes
