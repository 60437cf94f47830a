#pragma once

/**
 * @file padic.hpp
 * @brief Periodic p-adic digits of shifted parameters and the per-prime
 *        boundedness tests.
 *
 * For a in (0,1) with denominator d and a prime p not dividing d, a - 1 lies
 * in (-1, 0) and has a purely periodic p-adic expansion whose period is the
 * order of p mod d. Digit j is
 *
 *     floor({-p^(M-1-j) a} p),   M = ord_d(p).
 *
 * Two independent boundedness tests live here: the digit inequality
 * c_j <= max(a_j, b_j) (valid for p > m), and an empirical scan of the
 * p-adic valuations of the actual series coefficients.
 */

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bprimes/arith.hpp"
#include "bprimes/rational.hpp"

namespace bprimes {

/// Digits are stored as 32-bit words, so primes must be below 2^32.
using Digit = std::uint32_t;

struct DigitExpansion {
    std::int64_t prime;
    Rational value;       // a - 1, in (-1, 0)
    std::int64_t period;  // ord_{den(value)}(prime)
    std::vector<Digit> digits;

    Digit digit(std::int64_t j) const { return digits[static_cast<std::size_t>(j % period)]; }
};

/// Expansion of a_minus_1 (must lie in (-1, 0)) at prime p. Throws
/// NotCoprime if p divides the denominator, std::invalid_argument if the
/// value is out of range or p is not a prime below 2^32.
DigitExpansion padic_digits(const Rational& a_minus_1, std::int64_t p);

/// Limit of a_j(p)/p as p runs over primes congruent to u mod den(a):
/// {-u^(M-1-j) a} with M = ord_{den(a)}(u).
Rational normalized_digit_limit(const Rational& a, std::int64_t u, std::int64_t j);

struct DigitWitness {
    std::int64_t index;
};

struct ValuationWitness {
    std::int64_t n;
    std::int64_t valuation;
};

struct BoundednessVerdict {
    enum class Kind { Bounded, Unbounded };

    Kind kind;
    std::variant<std::monostate, DigitWitness, ValuationWitness> witness;

    bool bounded() const { return kind == Kind::Bounded; }

    static BoundednessVerdict make_bounded() { return {Kind::Bounded, std::monostate{}}; }
    static BoundednessVerdict unbounded_at(DigitWitness w) { return {Kind::Unbounded, w}; }
    static BoundednessVerdict unbounded_at(ValuationWitness w) { return {Kind::Unbounded, w}; }
};

/// Digit criterion over one common period ord_m(p). Requires p prime and
/// p > m; throws PrimeTooSmall otherwise. The witness is the least failing j.
BoundednessVerdict digit_bounded(const HGParams& params, std::int64_t p);

struct ValuationProfile {
    std::int64_t prime;
    std::int64_t upto;
    std::vector<std::int64_t> valuations;  // entry n: v_p of the n-th coefficient
};

/// v_p((a)_n (b)_n / ((c)_n n!)) for n = 0..upto, accumulated term by term.
/// Throws NotCoprime if p divides a parameter denominator.
ValuationProfile coefficient_valuations(const HGParams& params, std::int64_t p, std::int64_t upto);

/// Unbounded with witness (n2, v) as soon as some n1 < n2 <= upto has
/// v(n2) < v(n1) <= -1; bounded (consistent with boundedness up to `upto`)
/// otherwise. Stops at the first witness.
BoundednessVerdict empirical_bounded(const HGParams& params, std::int64_t p, std::int64_t upto);

}  // namespace bprimes
