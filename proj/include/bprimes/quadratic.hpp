#pragma once

// Quadratic residues mod p and the sets
//   U_p(x) = { y : [xy]_p < [y]_p },  V_p(x) = { y : [y]_p < [xy]_p },
//   W_p(x) = U_p(x) intersected with the quadratic residues,
// together with the class-number identities that count them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bprimes/rational.hpp"

namespace bprimes {

/// Sorted subset of (Z/pZ)^x, members in [1, p-1].
class ModpSet {
public:
    ModpSet(std::int64_t p, std::vector<std::int64_t> members);

    std::int64_t prime() const { return p_; }
    std::span<const std::int64_t> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(std::int64_t y) const;

    friend bool operator==(const ModpSet&, const ModpSet&) = default;

private:
    std::int64_t p_;
    std::vector<std::int64_t> members_;
};

struct ClassNumber {
    std::int64_t p;
    std::int64_t h;
};

/// Legendre symbol (y/p) for an odd prime p, by the binary Jacobi algorithm.
int legendre(std::int64_t y, std::int64_t p);

/// h(-p) from the character sum -p h = sum_{0<y<p} (y/p) y. Requires p prime,
/// p = 3 mod 4, p > 3 (HypothesisError otherwise).
ClassNumber class_number(std::int64_t p);

/// Smallest n > 1 that is a quadratic nonresidue mod p.
std::int64_t least_nonresidue(std::int64_t p);

ModpSet quadratic_residues(std::int64_t p);

ModpSet u_set(std::int64_t x, std::int64_t p);
ModpSet v_set(std::int64_t x, std::int64_t p);
ModpSet w_set(std::int64_t x, std::int64_t p);

/// w_p(x) = (n + (chi(x) + chi(1-x) - 1) h_p) / 2 with p = 2n + 1.
/// Requires p = 3 mod 4, p > 3, x != 0, 1 mod p.
std::int64_t w_count_formula(std::int64_t x, std::int64_t p);

/// Open interval (lo, hi) with exact rational endpoints.
struct OpenInterval {
    Rational lo;
    Rational hi;
};

/// U_p(-x) as the x disjoint intervals a p/(x+1) < y < a p/x, a = 1..x.
/// Requires 1 <= x <= p-2.
std::vector<OpenInterval> u_interval_decomposition(std::int64_t x, std::int64_t p);

/// Integers strictly inside the intervals, in order.
std::vector<std::int64_t> integer_points(std::span<const OpenInterval> intervals);

struct IntervalSum {
    std::int64_t lhs;  // sum of (y/p) over the intervals of U_p(-x)
    std::int64_t rhs;  // (chi(x+1) - chi(x) - 1) h_p
};

/// Both sides of the restricted Legendre-sum identity; throws
/// IdentityViolation if they differ.
IntervalSum legendre_interval_sum(std::int64_t x, std::int64_t p);

/// { y j : 1 <= j <= floor(p/y) } for y in U_p(x), each member checked.
/// Throws std::invalid_argument if y is not in U_p(x).
std::vector<std::int64_t> multiples_in_u(std::int64_t y, std::int64_t x, std::int64_t p);

/// Least element of W_p(u) and W_p(v) in common, if any. Requires
/// p = 3 mod 4 prime and u, v != 0, 1 mod p.
std::optional<std::int64_t> w_intersection_nonempty(std::int64_t u, std::int64_t v, std::int64_t p);

}  // namespace bprimes
