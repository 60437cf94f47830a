#include "bprimes/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bprimes/errors.hpp"

namespace bprimes {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t result = 1;
    base = least_residue(base, m);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::int64_t inverse_mod(std::int64_t u, std::int64_t m) {
    std::int64_t old_r = least_residue(u, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) {
        throw NotCoprime(std::to_string(u) + " is not a unit mod " + std::to_string(m));
    }
    return least_residue(old_s, m);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

std::int64_t euler_phi(std::int64_t m) {
    std::int64_t phi = m;
    for (auto [p, e] : factorize(m)) phi = phi / p * (p - 1);
    return phi;
}

std::int64_t mod_order(std::int64_t u, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("mod_order: modulus must be positive");
    if (std::gcd(least_residue(u, m), m) != 1) {
        throw NotCoprime("mod_order: " + std::to_string(u) + " is not a unit mod " +
                         std::to_string(m));
    }
    if (m == 1) return 1;
    std::int64_t base = least_residue(u, m);
    if (m < 10000) {
        std::int64_t k = 1;
        for (std::int64_t x = base; x != 1; x = x * base % m) ++k;
        return k;
    }
    std::int64_t order = euler_phi(m);
    for (auto [p, e] : factorize(order)) {
        for (int i = 0; i < e && order % p == 0 && pow_mod(base, order / p, m) == 1; ++i) {
            order /= p;
        }
    }
    return order;
}

std::int64_t primitive_root(std::int64_t p) {
    if (p == 2) return 1;
    if (!is_prime(p)) throw std::invalid_argument("primitive_root: modulus must be prime");
    auto factors = factorize(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool generator = std::all_of(factors.begin(), factors.end(), [&](const auto& f) {
            return pow_mod(g, (p - 1) / f.first, p) != 1;
        });
        if (generator) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

void unit_mask(std::int64_t m, std::vector<std::uint8_t>& mask) {
    mask.assign(static_cast<std::size_t>(m), 1);
    if (m == 1) return;
    mask[0] = 0;
    for (auto [p, e] : factorize(m)) {
        for (std::int64_t k = p; k < m; k += p) mask[static_cast<std::size_t>(k)] = 0;
    }
}

std::vector<std::int64_t> units(std::int64_t m) {
    if (m == 1) return {0};
    std::vector<std::uint8_t> mask;
    unit_mask(m, mask);
    std::vector<std::int64_t> out;
    for (std::int64_t v = 1; v < m; ++v) {
        if (mask[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return out;
}

HGParams HGParams::make(Rational a, Rational b, Rational c) {
    const Rational zero(0), one(1);
    for (const Rational* x : {&a, &b, &c}) {
        if (*x <= zero || *x >= one) {
            throw InvalidParams("parameter " + x->to_string() + " is not in (0,1)");
        }
    }
    if (c == a || c == b) {
        throw InvalidParams("c must differ from a and b");
    }
    return HGParams(std::move(a), std::move(b), std::move(c));
}

std::string HGParams::to_string() const {
    return "(" + a_.to_string() + ", " + b_.to_string() + "; " + c_.to_string() + ")";
}

NormalizedParams normalize_params(const Rational& a, const Rational& b, const Rational& c) {
    struct Named {
        const char* name;
        Rational value;
    };
    for (const Named& x : {Named{"a", a}, Named{"b", b}, Named{"c", c}, Named{"a-c", a - c},
                           Named{"b-c", b - c}}) {
        if (x.value.is_integer()) {
            throw IntegralParameter(std::string(x.name) + " = " + x.value.to_string() +
                                    " is an integer");
        }
    }
    Rational fa = frac_part(a), fb = frac_part(b), fc = frac_part(c);
    bool adjusted = fa != a || fb != b || fc != c;
    return {HGParams::make(std::move(fa), std::move(fb), std::move(fc)), adjusted};
}

Modulus Modulus::of(const HGParams& params) {
    std::int64_t m = std::lcm(std::lcm(params.a().small_denominator(),
                                       params.b().small_denominator()),
                              params.c().small_denominator());
    return {m, euler_phi(m)};
}

ResidueSet::ResidueSet(std::int64_t modulus, std::vector<std::int64_t> members)
    : modulus_(modulus), members_(std::move(members)) {
    if (modulus_ < 1) throw std::invalid_argument("ResidueSet: modulus must be positive");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (std::int64_t v : members_) {
        if (v < 1 || v >= modulus_ || std::gcd(v, modulus_) != 1) {
            throw std::invalid_argument("ResidueSet: " + std::to_string(v) +
                                        " is not a unit mod " + std::to_string(modulus_));
        }
    }
}

bool ResidueSet::contains(std::int64_t v) const {
    return std::binary_search(members_.begin(), members_.end(), least_residue(v, modulus_));
}

}  // namespace bprimes
