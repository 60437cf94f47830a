#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision fractions.
 *
 * A Rational is always kept in lowest terms with a positive denominator,
 * so equality is structural and zero is uniquely 0/1. Storage is a GMP
 * mpq_class; the rest of the library only ever sees this wrapper.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bprimes {

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT: implicit integer promotion is intended
    Rational(std::int64_t n, std::int64_t d);
    Rational(const mpz_class& n, const mpz_class& d);

    /// Parses "num/den" or "num" (optional leading sign). Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    /// Denominator as a machine word; throws std::overflow_error if it does not fit.
    std::int64_t small_denominator() const;
    std::int64_t small_numerator() const;

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    mpz_class floor() const;

    std::string to_string() const;

    /// Rounds to `places` decimals (half away from zero) using exact integer
    /// arithmetic; for display only.
    std::string to_decimal(int places) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v);

    mpq_class value_{0};
};

/// {q} = q - floor(q), always in [0, 1).
Rational frac_part(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace bprimes
