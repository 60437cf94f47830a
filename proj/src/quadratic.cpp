#include "bprimes/quadratic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bprimes/arith.hpp"
#include "bprimes/errors.hpp"

namespace bprimes {

namespace {

void require_odd_prime(std::int64_t p) {
    if (p < 3 || !is_prime(p)) {
        throw HypothesisError(std::to_string(p) + " is not an odd prime");
    }
}

void require_three_mod_four(std::int64_t p) {
    require_odd_prime(p);
    if (p % 4 != 3 || p <= 3) {
        throw HypothesisError("requires a prime p = 3 mod 4 with p > 3, got " + std::to_string(p));
    }
}

void require_unit(std::int64_t x, std::int64_t p) {
    if (least_residue(x, p) == 0) {
        throw HypothesisError(std::to_string(x) + " = 0 mod " + std::to_string(p));
    }
}

void require_not_zero_or_one(std::int64_t x, std::int64_t p) {
    require_unit(x, p);
    if (least_residue(x, p) == 1) {
        throw HypothesisError(std::to_string(x) + " = 1 mod " + std::to_string(p));
    }
}

}  // namespace

ModpSet::ModpSet(std::int64_t p, std::vector<std::int64_t> members)
    : p_(p), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && (members_.front() < 1 || members_.back() >= p_)) {
        throw std::invalid_argument("ModpSet: member outside [1, p-1]");
    }
}

bool ModpSet::contains(std::int64_t y) const {
    return std::binary_search(members_.begin(), members_.end(), least_residue(y, p_));
}

int legendre(std::int64_t y, std::int64_t p) {
    require_odd_prime(p);
    std::int64_t a = least_residue(y, p), n = p;
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const std::int64_t r = n & 7;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

ClassNumber class_number(std::int64_t p) {
    require_three_mod_four(p);
    std::int64_t sum = 0;
    for (std::int64_t y = 1; y < p; ++y) sum += legendre(y, p) * y;
    if (sum % p != 0 || sum >= 0) {
        throw IdentityViolation("character sum " + std::to_string(sum) +
                                " is not a negative multiple of " + std::to_string(p));
    }
    return {p, -sum / p};
}

std::int64_t least_nonresidue(std::int64_t p) {
    require_odd_prime(p);
    std::int64_t n = 2;
    while (legendre(n, p) != -1) ++n;
    return n;
}

ModpSet quadratic_residues(std::int64_t p) {
    require_odd_prime(p);
    std::vector<std::int64_t> out;
    for (std::int64_t y = 1; y < p; ++y) {
        if (legendre(y, p) == 1) out.push_back(y);
    }
    return ModpSet(p, std::move(out));
}

ModpSet u_set(std::int64_t x, std::int64_t p) {
    require_odd_prime(p);
    require_unit(x, p);
    std::vector<std::int64_t> out;
    for (std::int64_t y = 1; y < p; ++y) {
        if (mul_mod(x, y, p) < y) out.push_back(y);
    }
    return ModpSet(p, std::move(out));
}

ModpSet v_set(std::int64_t x, std::int64_t p) {
    require_odd_prime(p);
    require_unit(x, p);
    std::vector<std::int64_t> out;
    for (std::int64_t y = 1; y < p; ++y) {
        if (y < mul_mod(x, y, p)) out.push_back(y);
    }
    return ModpSet(p, std::move(out));
}

ModpSet w_set(std::int64_t x, std::int64_t p) {
    require_odd_prime(p);
    require_unit(x, p);
    std::vector<std::int64_t> out;
    for (std::int64_t y = 1; y < p; ++y) {
        if (mul_mod(x, y, p) < y && legendre(y, p) == 1) out.push_back(y);
    }
    return ModpSet(p, std::move(out));
}

std::int64_t w_count_formula(std::int64_t x, std::int64_t p) {
    require_three_mod_four(p);
    require_not_zero_or_one(x, p);
    const std::int64_t n = (p - 1) / 2;
    const std::int64_t h = class_number(p).h;
    const std::int64_t twice = n + (legendre(x, p) + legendre(1 - x, p) - 1) * h;
    if (twice % 2 != 0) {
        throw IdentityViolation("w-count numerator " + std::to_string(twice) + " is odd");
    }
    return twice / 2;
}

std::vector<OpenInterval> u_interval_decomposition(std::int64_t x, std::int64_t p) {
    require_odd_prime(p);
    if (x < 1 || x > p - 2) {
        throw HypothesisError("interval decomposition requires 1 <= x <= p-2, got x = " +
                              std::to_string(x));
    }
    std::vector<OpenInterval> out;
    out.reserve(static_cast<std::size_t>(x));
    for (std::int64_t a = 1; a <= x; ++a) {
        out.push_back({Rational(a * p, x + 1), Rational(a * p, x)});
    }
    return out;
}

std::vector<std::int64_t> integer_points(std::span<const OpenInterval> intervals) {
    std::vector<std::int64_t> out;
    for (const OpenInterval& iv : intervals) {
        // Smallest integer > lo and largest integer < hi.
        mpz_class first = iv.lo.floor() + 1;
        mpz_class last = iv.hi.is_integer() ? iv.hi.floor() - 1 : iv.hi.floor();
        for (mpz_class y = first; y <= last; ++y) out.push_back(y.get_si());
    }
    return out;
}

IntervalSum legendre_interval_sum(std::int64_t x, std::int64_t p) {
    require_three_mod_four(p);
    const auto intervals = u_interval_decomposition(x, p);
    IntervalSum out{0, 0};
    for (std::int64_t y : integer_points(intervals)) out.lhs += legendre(y, p);
    out.rhs = (legendre(x + 1, p) - legendre(x, p) - 1) * class_number(p).h;
    if (out.lhs != out.rhs) {
        throw IdentityViolation("interval sum mismatch at p = " + std::to_string(p) +
                                ", x = " + std::to_string(x) + ": " + std::to_string(out.lhs) +
                                " != " + std::to_string(out.rhs));
    }
    return out;
}

std::vector<std::int64_t> multiples_in_u(std::int64_t y, std::int64_t x, std::int64_t p) {
    const ModpSet u = u_set(x, p);
    if (y <= 0 || y >= p || !u.contains(y)) {
        throw std::invalid_argument(std::to_string(y) + " is not in U_" + std::to_string(p) + "(" +
                                    std::to_string(x) + ")");
    }
    std::vector<std::int64_t> out;
    for (std::int64_t j = 1; j <= p / y; ++j) {
        if (y * j >= p) break;  // y j = p only when y = 1, which is never in U
        if (!u.contains(y * j)) {
            throw IdentityViolation(std::to_string(y * j) + " escaped U_" + std::to_string(p) +
                                    "(" + std::to_string(x) + ")");
        }
        out.push_back(y * j);
    }
    return out;
}

std::optional<std::int64_t> w_intersection_nonempty(std::int64_t u, std::int64_t v, std::int64_t p) {
    require_odd_prime(p);
    if (p % 4 != 3) throw HypothesisError("requires p = 3 mod 4, got " + std::to_string(p));
    require_not_zero_or_one(u, p);
    require_not_zero_or_one(v, p);
    for (std::int64_t y = 1; y < p; ++y) {
        if (mul_mod(u, y, p) < y && mul_mod(v, y, p) < y && legendre(y, p) == 1) return y;
    }
    return std::nullopt;
}

}  // namespace bprimes
