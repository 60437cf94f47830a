#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// the production routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "bprimes/arith.hpp"
#include "bprimes/rational.hpp"

namespace oracle {

using bprimes::HGParams;
using bprimes::Rational;

inline std::vector<std::int64_t> to_vec(std::span<const std::int64_t> s) {
    return {s.begin(), s.end()};
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::int64_t k = i * i; k <= n; k += i) composite[k] = true;
    }
    return out;
}

inline std::int64_t order_by_multiplication(std::int64_t u, std::int64_t m) {
    std::int64_t k = 1, x = ((u % m) + m) % m;
    for (std::int64_t y = x; y != 1 % m; y = y * x % m) ++k;
    return k;
}

inline std::int64_t count_units(std::int64_t m) {
    std::int64_t n = 0;
    for (std::int64_t v = 0; v < m; ++v) n += std::gcd(v, m) == 1;
    return n;
}

/// p-adic long division on exact rationals: digit = x mod p, x <- (x - digit)/p.
inline std::vector<std::int64_t> division_digits(const Rational& value, std::int64_t p, std::size_t count) {
    std::vector<std::int64_t> out;
    Rational x = value;
    for (std::size_t i = 0; i < count; ++i) {
        mpz_class num = x.numerator(), den = x.denominator(), inv, digit;
        mpz_class pp(static_cast<long>(p));
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
        digit = num * inv;
        mpz_fdiv_r(digit.get_mpz_t(), digit.get_mpz_t(), pp.get_mpz_t());
        out.push_back(digit.get_si());
        x = (x - Rational(digit.get_si())) / Rational(p);
    }
    return out;
}

inline std::int64_t valuation(const mpz_class& x, std::int64_t p) {
    std::int64_t v = 0;
    mpz_class y = x, pp(static_cast<long>(p));
    while (mpz_divisible_p(y.get_mpz_t(), pp.get_mpz_t())) {
        y /= pp;
        ++v;
    }
    return v;
}

/// v_p of each actual Taylor coefficient, from the full rational products.
inline std::vector<std::int64_t> coefficient_valuations(const HGParams& params, std::int64_t p, std::int64_t n) {
    std::vector<std::int64_t> out{0};
    Rational coef(1);
    for (std::int64_t k = 0; k < n; ++k) {
        coef = coef * (params.a() + Rational(k)) * (params.b() + Rational(k)) /
               ((params.c() + Rational(k)) * Rational(k + 1));
        out.push_back(valuation(coef.numerator(), p) - valuation(coef.denominator(), p));
    }
    return out;
}

/// B straight from its definition, with exact fractional parts.
inline std::vector<std::int64_t> bounded_set(const HGParams& params) {
    const std::int64_t m = std::lcm(std::lcm(params.a().small_denominator(), params.b().small_denominator()),
                                    params.c().small_denominator());
    std::vector<std::int64_t> out;
    for (std::int64_t u = 1; u < m; ++u) {
        if (std::gcd(u, m) != 1) continue;
        bool all = true;
        std::int64_t x = u;
        for (std::int64_t j = 0; j < m && all; ++j) {
            const Rational v(-x);
            all = bprimes::frac_part(v * params.c()) <=
                  std::max(bprimes::frac_part(v * params.a()), bprimes::frac_part(v * params.b()));
            x = x * u % m;
        }
        if (all) out.push_back(u);
    }
    return out;
}

/// Class number of discriminant -p by counting reduced forms (a, b, c):
/// b^2 - 4ac = -p, |b| <= a <= c, and b >= 0 whenever |b| == a or a == c.
inline std::int64_t reduced_form_count(std::int64_t p) {
    std::int64_t h = 0;
    for (std::int64_t a = 1; 3 * a * a <= p; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b + p;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            ++h;
        }
    }
    return h;
}

inline int euler_criterion(std::int64_t y, std::int64_t p) {
    const std::int64_t r = bprimes::pow_mod(y, (p - 1) / 2, p);
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

/// Size of the union of the subgroups of orders in `divisors` inside Z/xZ.
inline std::int64_t union_by_enumeration(std::int64_t x, const std::vector<std::int64_t>& divisors) {
    std::set<std::int64_t> u;
    for (std::int64_t d : divisors) {
        for (std::int64_t k = 0; k < x; k += x / d) u.insert(k);
    }
    return static_cast<std::int64_t>(u.size());
}

/// Every triple whose denominator lcm is at most `max_modulus`.
template <typename Visit>
void params_with_modulus_at_most(std::int64_t max_modulus, Visit&& visit) {
    std::vector<Rational> fractions;
    for (std::int64_t d = 2; d <= max_modulus; ++d) {
        for (std::int64_t n = 1; n < d; ++n) {
            if (std::gcd(n, d) == 1) fractions.emplace_back(n, d);
        }
    }
    for (const Rational& a : fractions) {
        const std::int64_t da = a.small_denominator();
        for (const Rational& b : fractions) {
            const std::int64_t dab = std::lcm(da, b.small_denominator());
            if (dab > max_modulus) continue;
            for (const Rational& c : fractions) {
                if (c == a || c == b) continue;
                if (std::lcm(dab, c.small_denominator()) > max_modulus) continue;
                visit(HGParams::make(a, b, c));
            }
        }
    }
}

}  // namespace oracle
