#include "bprimes/specialcase.hpp"

#include <algorithm>
#include <stdexcept>

#include "bprimes/density.hpp"
#include "bprimes/errors.hpp"

namespace bprimes {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Elements of the unique subgroup of the given order in (Z/pZ)^x.
void add_subgroup(std::int64_t p, std::int64_t generator, std::int64_t order,
                  std::vector<std::int64_t>& out) {
    const std::int64_t step = pow_mod(generator, (p - 1) / order, p);
    std::int64_t x = 1;
    for (std::int64_t i = 0; i < order; ++i) {
        out.push_back(x);
        x = mul_mod(x, step, p);
    }
}

void require_modulus(const HGParams& params, const SpecialPrime& sp) {
    if (Modulus::of(params).m != sp.p) {
        throw std::invalid_argument("parameters " + params.to_string() +
                                    " do not have modulus " + std::to_string(sp.p));
    }
}

// Visits every (x, y, z) with x <= y, z != x, y, passing its weight (2 when
// x < y, covering (y, x, z) too) and the members of B.
template <typename Visit>
void for_each_special_triple(const SpecialPrime& sp, Visit&& visit) {
    const std::int64_t p = sp.p;
    DensityKernel kernel;
    for (std::int64_t x = 1; x < p; ++x) {
        for (std::int64_t y = x; y < p; ++y) {
            const std::uint64_t weight = x < y ? 2 : 1;
            for (std::int64_t z = 1; z < p; ++z) {
                if (z == x || z == y) continue;
                visit(x, y, z, weight, kernel.bounded_members({p, x, y, z}));
            }
        }
    }
}

}  // namespace

std::string BShape::name() const {
    switch (kind) {
        case Kind::Empty: return "EMPTY";
        case Kind::Half: return "HALF(" + std::to_string(j) + ")";
        case Kind::Full: return "FULL(" + std::to_string(k) + ")";
        case Kind::Union: return "UNION(" + std::to_string(j) + "," + std::to_string(k) + ")";
    }
    return "?";
}

std::optional<SpecialPrime> parse_special_prime(std::int64_t p) {
    if (p < 5 || !is_prime(p)) return std::nullopt;
    const std::int64_t half = (p - 1) / 2;
    if (half % 2 == 0) return std::nullopt;
    auto factors = factorize(half);
    if (factors.size() != 1) return std::nullopt;
    return SpecialPrime{p, factors[0].first, factors[0].second};
}

std::vector<BShape> enumerate_b_shapes(const SpecialPrime& sp) {
    const std::int64_t q = sp.q;
    std::vector<BShape> out;
    out.push_back({BShape::Kind::Empty, 0, 0, Rational(0)});
    for (int j = 0; j <= sp.r; ++j) {
        out.push_back({BShape::Kind::Half, j, 0, Rational(1, 2 * ipow(q, j))});
    }
    for (int k = 0; k <= sp.r; ++k) {
        out.push_back({BShape::Kind::Full, 0, k, Rational(1, ipow(q, k))});
    }
    for (int j = 0; j <= sp.r; ++j) {
        for (int k = j + 1; k <= sp.r; ++k) {
            out.push_back({BShape::Kind::Union, j, k,
                           Rational(ipow(q, k - j) + 1, 2 * ipow(q, k))});
        }
    }
    return out;
}

ResidueSet shape_members(const SpecialPrime& sp, const BShape& shape) {
    const std::int64_t g = primitive_root(sp.p);
    std::vector<std::int64_t> members;
    const bool half = shape.kind == BShape::Kind::Half || shape.kind == BShape::Kind::Union;
    const bool full = shape.kind == BShape::Kind::Full || shape.kind == BShape::Kind::Union;
    if (half) add_subgroup(sp.p, g, ipow(sp.q, sp.r - shape.j), members);
    if (full) add_subgroup(sp.p, g, 2 * ipow(sp.q, sp.r - shape.k), members);
    return ResidueSet(sp.p, std::move(members));
}

BShape classify_b_set(const SpecialPrime& sp, const ResidueSet& bounded) {
    for (const BShape& shape : enumerate_b_shapes(sp)) {
        const Rational size = shape.density * Rational(sp.p - 1);
        if (size != Rational(static_cast<std::int64_t>(bounded.size()))) continue;
        if (shape_members(sp, shape) == bounded) return shape;
    }
    throw ShapeMismatch("B of size " + std::to_string(bounded.size()) + " mod " +
                        std::to_string(sp.p) + " matches no subgroup-ladder shape");
}

BShape classify_b(const HGParams& params, const SpecialPrime& sp) {
    require_modulus(params, sp);
    return classify_b_set(sp, bounded_residues(params));
}

MaxDensity max_density_over_params(const SpecialPrime& sp) {
    std::int64_t best = -1;
    MaxDensity out{Rational(0), {0, 0, 0}};
    for_each_special_triple(sp, [&](std::int64_t x, std::int64_t y, std::int64_t z, std::uint64_t,
                                    const std::vector<std::int64_t>& members) {
        // Visit order is lexicographic, so the first maximum is the least witness.
        const auto size = static_cast<std::int64_t>(members.size());
        if (size > best) {
            best = size;
            out.witness = {x, y, z};
        }
    });
    out.density = Rational(best, sp.p - 1);
    return out;
}

std::string to_string(RemarkCase c) {
    switch (c) {
        case RemarkCase::CBelowBoth: return "c<a,b";
        case RemarkCase::CAboveBoth: return "a,b<c";
        case RemarkCase::CBetween: return "a<c<b";
    }
    return "?";
}

RemarkCase remark_case_classification(const HGParams& params, const SpecialPrime& sp) {
    if (sp.r != 1) throw std::invalid_argument("case pattern applies only to p = 2q + 1");
    require_modulus(params, sp);
    const Rational d = density(params);
    const std::int64_t q = sp.q;
    if (d == Rational(1)) {
        throw CaseViolation("density 1 for " + params.to_string());
    }
    RemarkCase which;
    std::vector<Rational> allowed;
    const bool a_below = params.a() < params.c();
    const bool b_below = params.b() < params.c();
    if (!a_below && !b_below) {
        which = RemarkCase::CBelowBoth;
        allowed = {Rational(0)};
    } else if (a_below && b_below) {
        which = RemarkCase::CAboveBoth;
        allowed = {Rational(1, 2 * q), Rational(1, 2)};
    } else {
        which = RemarkCase::CBetween;
        allowed = {Rational(1, q), Rational(q + 1, 2 * q)};
    }
    if (std::find(allowed.begin(), allowed.end(), d) == allowed.end()) {
        throw CaseViolation("density " + d.to_string() + " for " + params.to_string() +
                            " contradicts case " + to_string(which));
    }
    return which;
}

SpecialSweep special_sweep(const SpecialPrime& sp) {
    SpecialSweep out{sp, enumerate_b_shapes(sp), {}, 0, 0, {Rational(0), {0, 0, 0}}};
    out.shape_counts.assign(out.shapes.size(), 0);

    std::vector<std::vector<std::int64_t>> shape_sets;
    for (const BShape& shape : out.shapes) {
        const ResidueSet members = shape_members(sp, shape);
        shape_sets.emplace_back(members.members().begin(), members.members().end());
    }

    std::int64_t best = -1;
    for_each_special_triple(sp, [&](std::int64_t x, std::int64_t y, std::int64_t z,
                                    std::uint64_t weight, const std::vector<std::int64_t>& members) {
        auto it = std::find(shape_sets.begin(), shape_sets.end(), members);
        if (it == shape_sets.end()) {
            throw ShapeMismatch("B(" + std::to_string(x) + "/p, " + std::to_string(y) + "/p; " +
                                std::to_string(z) + "/p) mod " + std::to_string(sp.p) +
                                " matches no subgroup-ladder shape");
        }
        out.shape_counts[static_cast<std::size_t>(it - shape_sets.begin())] += weight;
        out.triples += weight;
        const auto size = static_cast<std::int64_t>(members.size());
        if (size == sp.p - 1) out.full_density_triples += weight;
        if (size > best) {
            best = size;
            out.max.witness = {x, y, z};
        }
    });
    out.max.density = Rational(best, sp.p - 1);
    return out;
}

}  // namespace bprimes
