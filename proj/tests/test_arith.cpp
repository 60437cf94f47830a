#include <doctest.h>

#include <random>

#include "bprimes/arith.hpp"
#include "bprimes/errors.hpp"
#include "oracles.hpp"

using namespace bprimes;

TEST_CASE("least_residue") {
    CHECK(least_residue(-128, 11) == 4);
    CHECK(least_residue(0, 7) == 0);
    CHECK(least_residue(14, 13) == 1);
}

TEST_CASE("least_residue respects multiplication") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> val(-1000000, 1000000), mod(1, 10000);
    for (int i = 0; i < 5000; ++i) {
        const std::int64_t u = val(rng), v = val(rng), m = mod(rng);
        CHECK(least_residue(u * v, m) == least_residue(least_residue(u, m) * least_residue(v, m), m));
    }
}

TEST_CASE("mod_order") {
    CHECK(mod_order(1, 12) == 1);
    CHECK(mod_order(2, 11) == 10);
    CHECK(mod_order(13, 11) == 10);
    CHECK_THROWS_AS(mod_order(4, 12), NotCoprime);
}

TEST_CASE("mod_order matches repeated multiplication on both code paths") {
    // Below 10^4 the brute-force path runs; above it the factor descent.
    for (std::int64_t m : {2, 9, 35, 97, 360, 9999, 10007, 12345, 65536, 99991, 100000}) {
        for (std::int64_t u = 1; u < std::min<std::int64_t>(m, 400); ++u) {
            if (std::gcd(u, m) != 1) continue;
            const std::int64_t k = mod_order(u, m);
            CHECK(k == oracle::order_by_multiplication(u, m));
            CHECK(euler_phi(m) % k == 0);
        }
    }
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(11) == 10);
    CHECK(euler_phi(47) == 46);
    for (std::int64_t m = 1; m <= 500; ++m) CHECK(euler_phi(m) == oracle::count_units(m));
}

TEST_CASE("is_prime agrees with a sieve") {
    const auto primes = oracle::primes_up_to(20000);
    std::vector<bool> flag(20001, false);
    for (auto p : primes) flag[p] = true;
    for (std::int64_t n = 0; n <= 20000; ++n) CHECK(is_prime(n) == flag[n]);
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(1000000007LL * 998244353LL));
}

TEST_CASE("primitive roots generate") {
    for (std::int64_t p : {3, 5, 7, 11, 23, 47, 59, 83, 107, 1009}) {
        CHECK(mod_order(primitive_root(p), p) == p - 1);
    }
}

TEST_CASE("inverse_mod") {
    CHECK(inverse_mod(3, 11) == 4);
    CHECK(inverse_mod(-1, 7) == 6);
    CHECK_THROWS_AS(inverse_mod(6, 9), NotCoprime);
}

TEST_CASE("normalize_params") {
    auto n = normalize_params(Rational(4, 3), Rational(1, 2), Rational(5, 6));
    CHECK(n.params.a() == Rational(1, 3));
    CHECK(n.params.b() == Rational(1, 2));
    CHECK(n.params.c() == Rational(5, 6));
    CHECK(n.adjusted);

    auto same = normalize_params(Rational(8, 11), Rational(8, 11), Rational(3, 11));
    CHECK_FALSE(same.adjusted);
    CHECK(same.params.a() == Rational(8, 11));
    CHECK(same.params.c() == Rational(3, 11));

    CHECK_THROWS_AS(normalize_params(Rational(1, 2), Rational(1, 2), Rational(1, 2)), IntegralParameter);
    CHECK_THROWS_AS(normalize_params(Rational(3), Rational(1, 2), Rational(1, 3)), IntegralParameter);
    CHECK_THROWS_AS(normalize_params(Rational(3, 2), Rational(1, 3), Rational(1, 2)), IntegralParameter);
}

TEST_CASE("HGParams validation") {
    CHECK_THROWS_AS(HGParams::make(Rational(0), Rational(1, 2), Rational(1, 3)), InvalidParams);
    CHECK_THROWS_AS(HGParams::make(Rational(1, 2), Rational(1, 3), Rational(1, 2)), InvalidParams);
    CHECK_THROWS_AS(HGParams::make(Rational(1, 2), Rational(1, 3), Rational(1)), InvalidParams);
    CHECK_NOTHROW(HGParams::make(Rational(1, 2), Rational(1, 2), Rational(1, 3)));
}

TEST_CASE("modulus is the lcm of denominators; a and a-1 share denominators") {
    auto params = HGParams::make(Rational(1, 4), Rational(5, 6), Rational(2, 9));
    const Modulus mod = Modulus::of(params);
    CHECK(mod.m == 36);
    CHECK(mod.phi == 12);
    for (std::int64_t d = 2; d < 60; ++d) {
        for (std::int64_t n = 1; n < d; ++n) {
            const Rational a(n, d);
            CHECK((a - Rational(1)).denominator() == a.denominator());
        }
    }
}

TEST_CASE("ResidueSet keeps sorted unique units") {
    ResidueSet s(7, {4, 2, 1, 2});
    CHECK(s.size() == 3);
    CHECK(s.members()[0] == 1);
    CHECK(s.contains(9));
    CHECK_FALSE(s.contains(3));
    CHECK_THROWS_AS(ResidueSet(12, {2}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueSet(12, {0}), std::invalid_argument);
}

TEST_CASE("units and unit_mask") {
    CHECK(units(12) == std::vector<std::int64_t>{1, 5, 7, 11});
    std::vector<std::uint8_t> mask;
    unit_mask(10, mask);
    CHECK(mask == std::vector<std::uint8_t>{0, 1, 0, 1, 0, 0, 0, 1, 0, 1});
}
