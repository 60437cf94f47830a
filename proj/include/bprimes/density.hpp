#pragma once

/**
 * @file density.hpp
 * @brief The bounded-residue set B(a,b;c) and the exact density |B|/phi(m).
 *
 * With m the lcm of the parameter denominators, a unit v mod m passes the
 * pointwise test when {-vc} <= max({-va}, {-vb}); B is the set of units u
 * whose whole cyclic subgroup <u> passes. For every prime p > m the series
 * is p-adically bounded iff p mod m lies in B.
 */

#include <cstdint>
#include <vector>

#include "bprimes/arith.hpp"
#include "bprimes/rational.hpp"

namespace bprimes {

struct DensityRecord {
    HGParams params;
    Modulus modulus;
    ResidueSet bounded;
    Rational density;
};

/// Parameters scaled to the common denominator: a = A/m, b = B/m, c = C/m.
struct ScaledParams {
    std::int64_t m;
    std::int64_t a;
    std::int64_t b;
    std::int64_t c;

    static ScaledParams of(const HGParams& params);
};

/**
 * Reusable scratch space for computing B. One kernel per thread.
 *
 * Every u in B other than 1 is an l-th root, l prime, of a member of B of
 * smaller order. The default path grows B from 1 along such roots, found
 * componentwise over the prime-power factors of m and joined by CRT, and
 * evaluates the pointwise test only where the search lands. Moduli with a
 * prime-power factor above kMaxRootComponent use the linear path instead:
 * S over all of Z/mZ by additive stepping, then an orbit check per unit.
 *
 * Per-modulus tables are cached, so consecutive calls with the same m are
 * cheap.
 */
class DensityKernel {
public:
    static constexpr std::int64_t kMaxRootComponent = 4096;

    std::int64_t bounded_count(const ScaledParams& sp);

    /// The members of B in increasing order.
    std::vector<std::int64_t> bounded_members(const ScaledParams& sp);

    /// Same set through the linear path regardless of m.
    std::vector<std::int64_t> bounded_members_linear(const ScaledParams& sp);

private:
    struct Component {
        std::int64_t q;
        std::int64_t idempotent;  // 1 mod q, 0 mod m / q
        // roots[i][r]: residues x mod q with x^primes[i] = r, units only.
        std::vector<std::vector<std::vector<std::int32_t>>> roots;
    };

    void prepare(std::int64_t m);
    bool pointwise(std::int64_t x);
    void run_roots(const ScaledParams& sp);
    void run_linear(const ScaledParams& sp);
    void push_roots(std::int64_t b, std::size_t prime_index);

    std::int64_t m_ = 0;
    bool use_roots_ = false;
    std::vector<std::int64_t> primes_;  // primes dividing the exponent of (Z/m)^*
    std::vector<Component> components_;
    std::vector<std::uint8_t> unit_mask_;

    ScaledParams current_{};
    std::uint64_t epoch_ = 0;
    std::vector<std::uint64_t> tags_;  // epoch << 8 | flags
    std::vector<std::uint8_t> pointwise_;  // linear path
    std::vector<std::uint8_t> state_;
    std::vector<std::int64_t> orbit_;
    std::vector<std::int64_t> members_;
    std::vector<std::int64_t> queue_;
    std::vector<std::int64_t> candidates_;
    std::vector<std::uint8_t> fresh_;
    std::vector<std::int32_t> digits_;
    std::vector<const std::vector<std::int32_t>*> lists_;
    std::int64_t count_ = 0;
};

/// {-vc} <= max({-va}, {-vb}) compared at common denominator m. Throws
/// NotCoprime if v is not a unit mod m.
bool pointwise_condition(const HGParams& params, std::int64_t v);

ResidueSet bounded_residues(const HGParams& params);

Rational density(const HGParams& params);

DensityRecord density_record(const HGParams& params);

/// True iff p mod m is in B. Throws PrimeTooSmall when p <= m.
bool bounded_prime_test(const HGParams& params, std::int64_t p);

/// True iff every power of every member is again a member.
bool is_union_of_cyclic(const ResidueSet& set);

/// c < a and c < b; equivalent to density(params) == 0.
bool zero_density_criterion(const HGParams& params);

/// A nonempty set of divisors of x, no one dividing another.
class DivisorAntichain {
public:
    /// Throws std::invalid_argument if the divisors are empty, do not divide x,
    /// or are not pairwise non-dividing.
    DivisorAntichain(std::int64_t x, std::vector<std::int64_t> divisors);

    std::int64_t x() const { return x_; }
    const std::vector<std::int64_t>& divisors() const { return divisors_; }

private:
    std::int64_t x_;
    std::vector<std::int64_t> divisors_;
};

/// |union of the subgroups of order d, d in J| inside a cyclic group of
/// order x, by inclusion-exclusion over gcds.
std::int64_t subgroup_union_size(const DivisorAntichain& antichain);

}  // namespace bprimes
