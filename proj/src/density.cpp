#include "bprimes/density.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bprimes/errors.hpp"

namespace bprimes {

namespace {

enum : std::uint8_t { kUnknown = 0, kInB = 1, kOutside = 2 };

// Per-call flags in the low byte of a tag.
enum : std::uint64_t { kKnown = 1, kPass = 2, kMember = 4, kRejected = 8 };

constexpr std::int64_t kMaxKernelModulus = std::int64_t{1} << 31;

// Barrett reduction for a fixed modulus below 2^31; valid for any 64-bit input.
struct FastMod {
    std::uint64_t m;
    std::uint64_t inv;

    explicit FastMod(std::uint64_t modulus) : m(modulus), inv(~std::uint64_t{0} / modulus) {}

    std::uint64_t reduce(std::uint64_t a) const {
        const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * inv) >> 64);
        std::uint64_t r = a - q * m;
        if (r >= m) r -= m;
        return r;
    }
};

}  // namespace

ScaledParams ScaledParams::of(const HGParams& params) {
    const std::int64_t m = Modulus::of(params).m;
    auto scale = [m](const Rational& x) {
        return x.small_numerator() * (m / x.small_denominator());
    };
    return {m, scale(params.a()), scale(params.b()), scale(params.c())};
}

void DensityKernel::prepare(std::int64_t m) {
    if (m >= kMaxKernelModulus) throw std::overflow_error("modulus too large for the density kernel");
    if (m == m_) return;
    m_ = m;
    primes_.clear();
    components_.clear();
    unit_mask_.clear();
    const auto factors = factorize(m);
    use_roots_ = std::all_of(factors.begin(), factors.end(), [](const auto& f) {
        std::int64_t q = 1;
        for (int e = 0; e < f.second; ++e) q *= f.first;
        return q <= kMaxRootComponent;
    });
    if (!use_roots_) return;

    for (const auto& [p, e] : factors) {
        std::int64_t q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        for (const auto& [l, unused] : factorize(q / p * (p - 1))) primes_.push_back(l);
        const std::int64_t rest = m / q;
        components_.push_back({q, rest * inverse_mod(rest % q, q) % m, {}});
    }
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    for (Component& comp : components_) {
        const std::int64_t q = comp.q;
        comp.roots.assign(primes_.size(), std::vector<std::vector<std::int32_t>>(static_cast<std::size_t>(q)));
        for (std::int64_t x = 1; x < q; ++x) {
            if (std::gcd(x, q) != 1) continue;
            for (std::size_t i = 0; i < primes_.size(); ++i) {
                comp.roots[i][static_cast<std::size_t>(pow_mod(x, primes_[i], q))].push_back(
                    static_cast<std::int32_t>(x));
            }
        }
    }
}

bool DensityKernel::pointwise(std::int64_t x) {
    std::uint64_t& tag = tags_[static_cast<std::size_t>(x)];
    if (tag >> 8 != epoch_) tag = epoch_ << 8;
    if (!(tag & kKnown)) {
        const FastMod fm(static_cast<std::uint64_t>(current_.m));
        const auto ux = static_cast<std::uint64_t>(x);
        auto neg = [&fm, ux](std::int64_t v) {
            const std::uint64_t r = fm.reduce(ux * static_cast<std::uint64_t>(v));
            return r == 0 ? 0 : fm.m - r;
        };
        const bool pass = neg(current_.c) <= std::max(neg(current_.a), neg(current_.b));
        tag |= kKnown | (pass ? std::uint64_t{kPass} : 0);
    }
    return tag & kPass;
}

// Appends every x with x^l = b, l = primes_[prime_index], to candidates_.
void DensityKernel::push_roots(std::int64_t b, std::size_t prime_index) {
    const std::size_t k = components_.size();
    lists_.clear();
    for (const Component& comp : components_) {
        const auto& list = comp.roots[prime_index][static_cast<std::size_t>(b % comp.q)];
        if (list.empty()) return;
        lists_.push_back(&list);
    }
    digits_.assign(k, 0);
    const FastMod fm(static_cast<std::uint64_t>(m_));
    for (;;) {
        // Each term is below 2^43, so the sum cannot overflow before reducing.
        std::uint64_t x = 0;
        for (std::size_t i = 0; i < k; ++i) {
            x += static_cast<std::uint64_t>((*lists_[i])[static_cast<std::size_t>(digits_[i])]) *
                 static_cast<std::uint64_t>(components_[i].idempotent);
        }
        candidates_.push_back(static_cast<std::int64_t>(fm.reduce(x)));
        std::size_t i = 0;
        for (; i < k; ++i) {
            if (static_cast<std::size_t>(++digits_[i]) < lists_[i]->size()) break;
            digits_[i] = 0;
        }
        if (i == k) return;
    }
}

void DensityKernel::run_roots(const ScaledParams& sp) {
    const std::int64_t m = sp.m;
    current_ = sp;
    count_ = 0;
    members_.clear();
    if (m == 1) return;
    if (tags_.size() < static_cast<std::size_t>(m)) tags_.resize(static_cast<std::size_t>(m), 0);
    ++epoch_;
    if (!pointwise(1)) return;
    auto flags = [this](std::int64_t x) -> std::uint64_t& {
        std::uint64_t& tag = tags_[static_cast<std::size_t>(x)];
        if (tag >> 8 != epoch_) tag = epoch_ << 8;
        return tag;
    };
    flags(1) |= kMember;
    members_.push_back(1);
    // One generator per cyclic subgroup of B: covers of <g> are generated by
    // l-th roots of g itself.
    queue_.assign(1, 1);
    const FastMod fm(static_cast<std::uint64_t>(m));

    for (std::size_t next = 0; next < queue_.size(); ++next) {
        const std::int64_t g = queue_[next];
        for (std::size_t l = 0; l < primes_.size(); ++l) {
            candidates_.clear();
            push_roots(g, l);
            for (std::int64_t u : candidates_) {
                if (flags(u) & (kMember | kRejected)) continue;
                orbit_.clear();
                bool closed = true;
                for (std::int64_t x = u;; x = static_cast<std::int64_t>(fm.reduce(
                                               static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(u)))) {
                    if ((flags(x) & kRejected) || !pointwise(x)) {
                        closed = false;
                        break;
                    }
                    orbit_.push_back(x);
                    if (x == 1) break;
                }
                if (!closed) {
                    flags(u) |= kRejected;
                    continue;
                }
                // orbit_[k - 1] = u^k. A subgroup <u^d> is new iff u^d was not a member.
                const std::size_t n = orbit_.size();
                fresh_.assign(n, 0);
                for (std::size_t k = 0; k < n; ++k) {
                    std::uint64_t& tag = flags(orbit_[k]);
                    if (!(tag & kMember)) {
                        tag |= kMember;
                        members_.push_back(orbit_[k]);
                        fresh_[k] = 1;
                    }
                }
                for (std::size_t d = 1; d < n; ++d) {
                    if (n % d == 0 && fresh_[d - 1]) queue_.push_back(orbit_[d - 1]);
                }
            }
        }
    }
    count_ = static_cast<std::int64_t>(members_.size());
}

void DensityKernel::run_linear(const ScaledParams& sp) {
    const std::int64_t m = sp.m;
    if (m >= kMaxKernelModulus) throw std::overflow_error("modulus too large for the density kernel");
    const auto size = static_cast<std::size_t>(m);
    count_ = 0;
    members_.clear();
    // Any nonempty union of subgroups contains 1.
    if (m == 1 || least_residue(-sp.c, m) > std::max(least_residue(-sp.a, m), least_residue(-sp.b, m))) {
        return;
    }
    if (unit_mask_.size() != size) unit_mask(m, unit_mask_);
    pointwise_.resize(size);
    state_.assign(size, kUnknown);

    // [-vA]_m for v = 0, 1, 2, ... by repeated subtraction.
    std::int64_t ra = 0, rb = 0, rc = 0;
    for (std::size_t v = 0; v < size; ++v) {
        pointwise_[v] = rc <= std::max(ra, rb);
        ra -= sp.a;
        if (ra < 0) ra += m;
        rb -= sp.b;
        if (rb < 0) rb += m;
        rc -= sp.c;
        if (rc < 0) rc += m;
    }
    for (std::int64_t u = 1; u < m; ++u) {
        const auto ui = static_cast<std::size_t>(u);
        if (!unit_mask_[ui] || state_[ui] != kUnknown) continue;
        if (!pointwise_[ui]) {
            state_[ui] = kOutside;
            continue;
        }
        orbit_.clear();
        bool closed = true;
        for (std::int64_t x = u;; x = x * u % m) {
            const auto xi = static_cast<std::size_t>(x);
            if (!pointwise_[xi] || state_[xi] == kOutside) {
                closed = false;
                break;
            }
            orbit_.push_back(x);
            if (x == 1) break;
        }
        if (!closed) {
            state_[ui] = kOutside;
            continue;
        }
        // <u> lies in S, so every element of <u> has its own subgroup in S.
        for (std::int64_t x : orbit_) {
            auto& s = state_[static_cast<std::size_t>(x)];
            if (s != kInB) {
                s = kInB;
                members_.push_back(x);
            }
        }
    }
    count_ = static_cast<std::int64_t>(members_.size());
}

std::int64_t DensityKernel::bounded_count(const ScaledParams& sp) {
    prepare(sp.m);
    if (use_roots_) {
        run_roots(sp);
    } else {
        run_linear(sp);
    }
    return count_;
}

std::vector<std::int64_t> DensityKernel::bounded_members(const ScaledParams& sp) {
    bounded_count(sp);
    std::vector<std::int64_t> out = members_;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> DensityKernel::bounded_members_linear(const ScaledParams& sp) {
    prepare(sp.m);
    run_linear(sp);
    std::vector<std::int64_t> out = members_;
    std::sort(out.begin(), out.end());
    return out;
}

bool pointwise_condition(const HGParams& params, std::int64_t v) {
    const ScaledParams sp = ScaledParams::of(params);
    if (std::gcd(least_residue(v, sp.m), sp.m) != 1) {
        throw NotCoprime(std::to_string(v) + " is not a unit mod " + std::to_string(sp.m));
    }
    const std::int64_t ra = least_residue(-mul_mod(v, sp.a, sp.m), sp.m);
    const std::int64_t rb = least_residue(-mul_mod(v, sp.b, sp.m), sp.m);
    const std::int64_t rc = least_residue(-mul_mod(v, sp.c, sp.m), sp.m);
    return rc <= std::max(ra, rb);
}

ResidueSet bounded_residues(const HGParams& params) {
    const ScaledParams sp = ScaledParams::of(params);
    DensityKernel kernel;
    return ResidueSet(sp.m, kernel.bounded_members(sp));
}

Rational density(const HGParams& params) {
    const ResidueSet b = bounded_residues(params);
    return Rational(static_cast<std::int64_t>(b.size()), euler_phi(b.modulus()));
}

DensityRecord density_record(const HGParams& params) {
    ResidueSet b = bounded_residues(params);
    const Modulus mod = Modulus::of(params);
    Rational d(static_cast<std::int64_t>(b.size()), mod.phi);
    return {params, mod, std::move(b), std::move(d)};
}

bool bounded_prime_test(const HGParams& params, std::int64_t p) {
    const Modulus mod = Modulus::of(params);
    if (p <= mod.m) {
        throw PrimeTooSmall("residue criterion requires p > m = " + std::to_string(mod.m) +
                            ", got p = " + std::to_string(p));
    }
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    return bounded_residues(params).contains(p % mod.m);
}

bool is_union_of_cyclic(const ResidueSet& set) {
    const std::int64_t m = set.modulus();
    for (std::int64_t u : set.members()) {
        for (std::int64_t x = mul_mod(u, u, m); x != u; x = mul_mod(x, u, m)) {
            if (!set.contains(x)) return false;
        }
    }
    return true;
}

bool zero_density_criterion(const HGParams& params) {
    return params.c() < params.a() && params.c() < params.b();
}

DivisorAntichain::DivisorAntichain(std::int64_t x, std::vector<std::int64_t> divisors)
    : x_(x), divisors_(std::move(divisors)) {
    if (x_ < 1) throw std::invalid_argument("antichain: group order must be positive");
    if (divisors_.empty()) throw std::invalid_argument("antichain: empty divisor set");
    if (divisors_.size() > 62) throw std::invalid_argument("antichain: too many divisors");
    std::sort(divisors_.begin(), divisors_.end());
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
        const std::int64_t d = divisors_[i];
        if (d < 1 || x_ % d != 0) {
            throw std::invalid_argument("antichain: " + std::to_string(d) + " does not divide " +
                                        std::to_string(x_));
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (d % divisors_[k] == 0) {
                throw std::invalid_argument("antichain: " + std::to_string(divisors_[k]) +
                                            " divides " + std::to_string(d));
            }
        }
    }
}

std::int64_t subgroup_union_size(const DivisorAntichain& antichain) {
    const auto& js = antichain.divisors();
    const std::uint64_t subsets = std::uint64_t{1} << js.size();
    std::int64_t total = 0;
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        std::int64_t g = 0;
        int bits = 0;
        for (std::size_t i = 0; i < js.size(); ++i) {
            if (mask >> i & 1) {
                g = std::gcd(g, js[i]);
                ++bits;
            }
        }
        total += (bits % 2 == 1) ? g : -g;
    }
    return total;
}

}  // namespace bprimes
