#pragma once

/**
 * @file specialcase.hpp
 * @brief Densities for parameters with denominator a prime p = 2 q^r + 1.
 *
 * For such p the unit group is cyclic of order 2 q^r and its subgroups form
 * two ladders: the subgroups of order q^(r-j) inside the quadratic residues,
 * and the subgroups of order 2 q^(r-k) containing -1. Since B is a union of
 * cyclic subgroups it must be empty, one subgroup from either ladder, or the
 * union of one from each (HALF(j) inside FULL(k) only when k <= j). That
 * leaves the shapes
 *
 *     EMPTY           0
 *     HALF(j)         1 / (2 q^j)
 *     FULL(k)         1 / q^k
 *     UNION(j, k)     (q^(k-j) + 1) / (2 q^k),   j < k.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bprimes/arith.hpp"
#include "bprimes/rational.hpp"

namespace bprimes {

struct SpecialPrime {
    std::int64_t p;
    std::int64_t q;
    int r;
};

struct BShape {
    enum class Kind { Empty, Half, Full, Union };

    Kind kind;
    int j = 0;  // HALF(j), UNION(j, k)
    int k = 0;  // FULL(k), UNION(j, k)
    Rational density;

    std::string name() const;

    friend bool operator==(const BShape& lhs, const BShape& rhs) {
        return lhs.kind == rhs.kind && lhs.j == rhs.j && lhs.k == rhs.k;
    }
};

/// (q, r) when p is prime and (p-1)/2 = q^r for an odd prime q.
std::optional<SpecialPrime> parse_special_prime(std::int64_t p);

/// EMPTY, HALF(0..r), FULL(0..r), UNION(j,k) for j < k, with table densities.
std::vector<BShape> enumerate_b_shapes(const SpecialPrime& sp);

/// The residues making up a shape: unions of the subgroups of the right orders.
ResidueSet shape_members(const SpecialPrime& sp, const BShape& shape);

/// Matches a computed B against the enumerated shapes. Throws ShapeMismatch
/// if none fits.
BShape classify_b_set(const SpecialPrime& sp, const ResidueSet& bounded);

/// Requires the params' modulus to be sp.p (std::invalid_argument otherwise).
BShape classify_b(const HGParams& params, const SpecialPrime& sp);

struct MaxDensity {
    Rational density;
    std::array<std::int64_t, 3> witness;  // (x, y, z), lexicographically least
};

/// Maximum of D(x/p, y/p; z/p) over 1 <= x, y, z <= p-1 with z != x, y.
MaxDensity max_density_over_params(const SpecialPrime& sp);

enum class RemarkCase {
    CBelowBoth,   // D = 0
    CAboveBoth,   // D in {1/(2q), 1/2}
    CBetween,     // D in {1/q, (q+1)/(2q)}
};

std::string to_string(RemarkCase c);

/// Case (by the order of a, b, c) for p = 2q + 1, with the density checked
/// against the case's allowed values and D != 1. Throws CaseViolation on a
/// contradiction, std::invalid_argument if r != 1 or the modulus is not p.
RemarkCase remark_case_classification(const HGParams& params, const SpecialPrime& sp);

/// Full (x, y, z) census over one special prime.
struct SpecialSweep {
    SpecialPrime sp;
    std::vector<BShape> shapes;
    std::vector<std::uint64_t> shape_counts;  // parallel to shapes
    std::uint64_t triples = 0;
    std::uint64_t full_density_triples = 0;  // D == 1
    MaxDensity max;
};

/// Classifies every ordered triple over p (ShapeMismatch if any B fails to
/// match) and tracks the maximum density with its least witness.
SpecialSweep special_sweep(const SpecialPrime& sp);

}  // namespace bprimes
