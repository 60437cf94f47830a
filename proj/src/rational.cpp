#include "bprimes/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bprimes {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    if (s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(std::int64_t n) : value_(mpz_class(static_cast<long>(n))) {}

Rational::Rational(std::int64_t n, std::int64_t d)
    : Rational(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text), mpz_class(1));
    }
    mpz_class num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
    }
    mpz_class den = parse_integer(den_text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::int64_t Rational::small_denominator() const {
    const mpz_class& d = value_.get_den();
    if (!d.fits_slong_p()) throw std::overflow_error("denominator exceeds machine word");
    return d.get_si();
}

std::int64_t Rational::small_numerator() const {
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("numerator exceeds machine word");
    return n.get_si();
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int places) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    mpz_class num = abs(value_.get_num()) * scale * 2 + value_.get_den();
    mpz_class den = value_.get_den() * 2;
    mpz_class scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

    mpz_class whole, rest;
    mpz_fdiv_qr(whole.get_mpz_t(), rest.get_mpz_t(), scaled.get_mpz_t(), scale.get_mpz_t());
    std::string out = (sign() < 0 && scaled != 0) ? "-" : "";
    out += whole.get_str();
    if (places > 0) {
        std::string frac = rest.get_str();
        out += "." + std::string(static_cast<std::size_t>(places) - frac.size(), '0') + frac;
    }
    return out;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero rational");
    value_ /= rhs.value_;
    return *this;
}

Rational frac_part(const Rational& q) {
    return q - Rational(q.floor(), mpz_class(1));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace bprimes
