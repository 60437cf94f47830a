#include <doctest.h>

#include <numeric>
#include <random>

#include "bprimes/density.hpp"
#include "bprimes/errors.hpp"
#include "bprimes/padic.hpp"
#include "oracles.hpp"

using namespace bprimes;

namespace {

HGParams hg(const char* a, const char* b, const char* c) {
    return HGParams::make(Rational::parse(a), Rational::parse(b), Rational::parse(c));
}

HGParams random_params(std::mt19937_64& rng, std::int64_t max_modulus) {
    std::uniform_int_distribution<std::int64_t> den(2, max_modulus);
    for (;;) {
        Rational v[3];
        for (auto& x : v) {
            const std::int64_t d = den(rng);
            std::uniform_int_distribution<std::int64_t> num(1, d - 1);
            x = Rational(num(rng), d);
        }
        if (v[2] == v[0] || v[2] == v[1]) continue;
        const auto params = HGParams::make(v[0], v[1], v[2]);
        if (Modulus::of(params).m <= max_modulus) return params;
    }
}

}  // namespace

TEST_CASE("pointwise_condition examples") {
    CHECK(pointwise_condition(hg("1/3", "1/3", "2/3"), 1));
    CHECK_FALSE(pointwise_condition(hg("1/3", "1/3", "2/3"), 2));
    CHECK_FALSE(pointwise_condition(hg("2/3", "2/3", "1/3"), 1));
    CHECK_THROWS_AS(pointwise_condition(hg("1/3", "1/3", "2/3"), 3), NotCoprime);
}

TEST_CASE("bounded_residues examples") {
    CHECK(oracle::to_vec(bounded_residues(hg("1/3", "1/3", "2/3")).members()) == std::vector<std::int64_t>{1});
    CHECK(bounded_residues(hg("2/3", "2/3", "1/3")).size() == 0);

    std::vector<std::int64_t> squares;
    for (std::int64_t y = 1; y < 47; ++y) squares.push_back(y * y % 47);
    std::sort(squares.begin(), squares.end());
    squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
    const ResidueSet b = bounded_residues(hg("4/47", "18/47", "46/47"));
    CHECK(b.size() == 23);
    CHECK(oracle::to_vec(b.members()) == squares);
}

TEST_CASE("density examples") {
    CHECK(density(hg("2/3", "2/3", "1/3")) == Rational(0));
    CHECK(density(hg("1/3", "1/3", "2/3")) == Rational(1, 2));
    CHECK(density(hg("4/47", "18/47", "46/47")) == Rational(1, 2));
}

TEST_CASE("density record") {
    const DensityRecord r = density_record(hg("1/3", "1/3", "2/3"));
    CHECK(r.modulus.m == 3);
    CHECK(r.modulus.phi == 2);
    CHECK(oracle::to_vec(r.bounded.members()) == std::vector<std::int64_t>{1});
    CHECK(r.density == Rational(1, 2));
}

TEST_CASE("bounded_prime_test") {
    CHECK(bounded_prime_test(hg("1/3", "1/3", "2/3"), 7));
    CHECK_FALSE(bounded_prime_test(hg("1/3", "1/3", "2/3"), 5));
    CHECK_THROWS_AS(bounded_prime_test(hg("1/3", "1/3", "2/3"), 3), PrimeTooSmall);
    CHECK_THROWS_AS(bounded_prime_test(hg("1/3", "1/3", "2/3"), 2), PrimeTooSmall);
    CHECK_THROWS_AS(bounded_prime_test(hg("1/4", "5/6", "2/9"), 31), PrimeTooSmall);
}

TEST_CASE("is_union_of_cyclic examples") {
    CHECK(is_union_of_cyclic(ResidueSet(7, {})));
    CHECK(is_union_of_cyclic(ResidueSet(7, {1, 2, 4})));
    CHECK_FALSE(is_union_of_cyclic(ResidueSet(7, {3})));
}

TEST_CASE("zero_density_criterion examples") {
    CHECK(zero_density_criterion(hg("2/3", "2/3", "1/3")));
    CHECK_FALSE(zero_density_criterion(hg("1/3", "1/3", "2/3")));
    CHECK_FALSE(zero_density_criterion(hg("1/2", "1/4", "1/3")));
}

TEST_CASE("kernel agrees with the definition, m <= 14") {
    oracle::params_with_modulus_at_most(14, [](const HGParams& params) {
        CHECK(oracle::to_vec(bounded_residues(params).members()) == oracle::bounded_set(params));
    });
}

TEST_CASE("random parameters: B is a union of cyclic subgroups, symmetric in a and b") {
    std::mt19937_64 rng(314159);
    for (int i = 0; i < 400; ++i) {
        const HGParams params = random_params(rng, 100);
        const ResidueSet b = bounded_residues(params);
        CHECK(is_union_of_cyclic(b));
        CHECK(oracle::to_vec(b.members()) == oracle::bounded_set(params));
        const auto swapped = HGParams::make(params.b(), params.a(), params.c());
        CHECK(density(swapped) == density(params));
        CHECK(b.contains(1) == (params.c() > std::min(params.a(), params.b())));
        CHECK((b.size() == 0) == zero_density_criterion(params));
    }
}

TEST_CASE("root search and linear scan give the same B") {
    std::mt19937_64 rng(29);
    DensityKernel kernel;
    // Reusing one kernel across moduli also exercises its table cache.
    for (int i = 0; i < 2000; ++i) {
        const ScaledParams sp = ScaledParams::of(random_params(rng, 400));
        const auto linear = kernel.bounded_members_linear(sp);
        CHECK(kernel.bounded_members(sp) == linear);
        CHECK(kernel.bounded_count(sp) == static_cast<std::int64_t>(linear.size()));
    }
    std::uniform_int_distribution<std::int64_t> modulus(3, 20000);
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t m = modulus(rng);
        std::uniform_int_distribution<std::int64_t> num(1, m - 1);
        const ScaledParams sp{m, num(rng), num(rng), num(rng)};
        CHECK(kernel.bounded_members(sp) == kernel.bounded_members_linear(sp));
    }
    // Products of small prime powers, the shape of survey moduli.
    std::uniform_int_distribution<int> pick(0, 7);
    const std::int64_t factors[] = {8, 9, 5, 7, 11, 13, 16, 27};
    for (int i = 0; i < 300; ++i) {
        std::int64_t m = 1;
        for (int k = 0; k < 3; ++k) m = std::lcm(m, factors[pick(rng)]);
        if (m < 3) continue;
        std::uniform_int_distribution<std::int64_t> num(1, m - 1);
        const ScaledParams sp{m, num(rng), num(rng), num(rng)};
        CHECK(kernel.bounded_members(sp) == kernel.bounded_members_linear(sp));
    }
    // A prime-power factor above the root limit takes the linear path.
    const auto big = hg("1/4099", "2/3", "1/2");
    CHECK(oracle::to_vec(bounded_residues(big).members()) ==
          kernel.bounded_members_linear(ScaledParams::of(big)));
}

TEST_CASE("zero-density criterion is exact for m <= 12") {
    oracle::params_with_modulus_at_most(12, [](const HGParams& params) {
        CHECK(zero_density_criterion(params) == (density(params) == Rational(0)));
    });
}

TEST_CASE("criterion equivalence for m <= 10 and primes up to 100") {
    oracle::params_with_modulus_at_most(10, [](const HGParams& params) {
        const std::int64_t m = Modulus::of(params).m;
        for (std::int64_t p : oracle::primes_up_to(100)) {
            if (p <= m) continue;
            CHECK(bounded_prime_test(params, p) == digit_bounded(params, p).bounded());
        }
    });
}

TEST_CASE("subgroup_union_size examples") {
    CHECK(subgroup_union_size(DivisorAntichain(12, {4, 6})) == 8);
    CHECK(subgroup_union_size(DivisorAntichain(10, {10})) == 10);
    CHECK(subgroup_union_size(DivisorAntichain(30, {6, 10, 15})) == 22);
    CHECK_THROWS_AS(DivisorAntichain(12, {2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(DivisorAntichain(12, {5}), std::invalid_argument);
    CHECK_THROWS_AS(DivisorAntichain(12, {}), std::invalid_argument);
}

TEST_CASE("subgroup_union_size matches enumeration for every antichain, x <= 60") {
    for (std::int64_t x = 1; x <= 60; ++x) {
        std::vector<std::int64_t> divs;
        for (std::int64_t d = 1; d <= x; ++d) {
            if (x % d == 0) divs.push_back(d);
        }
        const std::size_t n = divs.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::int64_t> chosen;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask >> i & 1) chosen.push_back(divs[i]);
            }
            bool antichain = true;
            for (std::size_t i = 0; i < chosen.size() && antichain; ++i) {
                for (std::size_t j = 0; j < chosen.size(); ++j) {
                    if (i != j && chosen[j] % chosen[i] == 0) antichain = false;
                }
            }
            if (!antichain) continue;
            CHECK(subgroup_union_size(DivisorAntichain(x, chosen)) == oracle::union_by_enumeration(x, chosen));
        }
    }
}
