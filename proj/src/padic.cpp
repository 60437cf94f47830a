#include "bprimes/padic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bprimes/errors.hpp"

namespace bprimes {

namespace {

// floor({-t a} p) where a = A/m, evaluated as floor([-t A]_m p / m).
Digit digit_from_power(std::int64_t scaled_a, std::int64_t m, std::int64_t power, std::int64_t p) {
    std::int64_t r = least_residue(-mul_mod(power, scaled_a, m), m);
    return static_cast<Digit>(static_cast<__int128>(r) * p / m);
}

void require_word_prime(std::int64_t p) {
    if (p > std::numeric_limits<Digit>::max() || !is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not a prime below 2^32");
    }
}

std::int64_t padic_valuation(std::int64_t x, std::int64_t p) {
    std::int64_t v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Streams v_p of successive coefficients; visit(n, v) returns false to stop.
template <typename Visit>
void scan_valuations(const HGParams& params, std::int64_t p, std::int64_t upto, Visit&& visit) {
    if (upto < 0) throw std::invalid_argument("valuation range must be non-negative");
    struct Term {
        std::int64_t num, den;
    };
    Term terms[3];
    const Rational* values[3] = {&params.a(), &params.b(), &params.c()};
    for (int i = 0; i < 3; ++i) {
        terms[i] = {values[i]->small_numerator(), values[i]->small_denominator()};
        if (terms[i].den % p == 0) {
            throw NotCoprime(std::to_string(p) + " divides the denominator of " +
                             values[i]->to_string());
        }
        if (terms[i].den > std::numeric_limits<std::int64_t>::max() / 4 / (upto + 1)) {
            throw std::overflow_error("valuation range too large for machine words");
        }
    }
    std::int64_t v = 0;
    if (!visit(std::int64_t{0}, v)) return;
    for (std::int64_t n = 1; n <= upto; ++n) {
        std::int64_t k = n - 1;
        // v_p(x + k) = v_p(num + k den) since p does not divide den.
        v += padic_valuation(terms[0].num + k * terms[0].den, p);
        v += padic_valuation(terms[1].num + k * terms[1].den, p);
        v -= padic_valuation(terms[2].num + k * terms[2].den, p);
        v -= padic_valuation(n, p);
        if (!visit(n, v)) return;
    }
}

}  // namespace

DigitExpansion padic_digits(const Rational& a_minus_1, std::int64_t p) {
    if (a_minus_1 <= Rational(-1) || a_minus_1 >= Rational(0)) {
        throw std::invalid_argument("expansion requires a value in (-1, 0), got " +
                                    a_minus_1.to_string());
    }
    require_word_prime(p);
    const std::int64_t d = a_minus_1.small_denominator();
    if (d % p == 0) {
        throw NotCoprime(std::to_string(p) + " divides the denominator of " +
                         a_minus_1.to_string());
    }
    const std::int64_t numer = d + a_minus_1.small_numerator();  // a = numer/d
    const std::int64_t period = mod_order(p, d);

    DigitExpansion out{p, a_minus_1, period, std::vector<Digit>(static_cast<std::size_t>(period))};
    std::int64_t power = 1;  // p^(M-1-j) mod d, walking j downward
    for (std::int64_t j = period - 1; j >= 0; --j) {
        out.digits[static_cast<std::size_t>(j)] = digit_from_power(numer, d, power, p);
        power = mul_mod(power, p, d);
    }
    return out;
}

Rational normalized_digit_limit(const Rational& a, std::int64_t u, std::int64_t j) {
    const std::int64_t d = a.small_denominator();
    const std::int64_t period = mod_order(u, d);
    if (j < 0 || j >= period) {
        throw std::invalid_argument("digit index " + std::to_string(j) + " outside period " +
                                    std::to_string(period));
    }
    std::int64_t power = pow_mod(u, period - 1 - j, d);
    std::int64_t r = least_residue(-mul_mod(power, least_residue(a.small_numerator(), d), d), d);
    return Rational(r, d);
}

BoundednessVerdict digit_bounded(const HGParams& params, std::int64_t p) {
    const Modulus mod = Modulus::of(params);
    if (p <= mod.m) {
        throw PrimeTooSmall("digit criterion requires p > m = " + std::to_string(mod.m) +
                            ", got p = " + std::to_string(p));
    }
    require_word_prime(p);
    const std::int64_t m = mod.m;
    const std::int64_t sa = params.a().small_numerator() * (m / params.a().small_denominator());
    const std::int64_t sb = params.b().small_numerator() * (m / params.b().small_denominator());
    const std::int64_t sc = params.c().small_numerator() * (m / params.c().small_denominator());

    // Each parameter's period divides ord_m(p), so one common period covers
    // every index. p^(M-1-j) mod d agrees with the reduction of p^(M-1-j) mod m.
    const std::int64_t period = mod_order(p, m);
    std::vector<std::int64_t> powers(static_cast<std::size_t>(period));
    std::int64_t power = 1;
    for (std::int64_t j = period - 1; j >= 0; --j) {
        powers[static_cast<std::size_t>(j)] = power;
        power = mul_mod(power, p, m);
    }
    for (std::int64_t j = 0; j < period; ++j) {
        const std::int64_t t = powers[static_cast<std::size_t>(j)];
        Digit aj = digit_from_power(sa, m, t, p);
        Digit bj = digit_from_power(sb, m, t, p);
        Digit cj = digit_from_power(sc, m, t, p);
        if (cj > std::max(aj, bj)) return BoundednessVerdict::unbounded_at(DigitWitness{j});
    }
    return BoundednessVerdict::make_bounded();
}

ValuationProfile coefficient_valuations(const HGParams& params, std::int64_t p, std::int64_t upto) {
    ValuationProfile profile{p, upto, {}};
    profile.valuations.reserve(static_cast<std::size_t>(upto + 1));
    scan_valuations(params, p, upto, [&](std::int64_t, std::int64_t v) {
        profile.valuations.push_back(v);
        return true;
    });
    return profile;
}

BoundednessVerdict empirical_bounded(const HGParams& params, std::int64_t p, std::int64_t upto) {
    // Largest earlier valuation that is <= -1; a later value strictly below it
    // is a descent to a new negative level.
    std::optional<std::int64_t> highest_negative;
    std::optional<ValuationWitness> witness;
    scan_valuations(params, p, upto, [&](std::int64_t n, std::int64_t v) {
        if (highest_negative && v < *highest_negative) {
            witness = ValuationWitness{n, v};
            return false;
        }
        if (v <= -1) highest_negative = std::max(highest_negative.value_or(v), v);
        return true;
    });
    return witness ? BoundednessVerdict::unbounded_at(*witness) : BoundednessVerdict::make_bounded();
}

}  // namespace bprimes
