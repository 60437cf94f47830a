#include "bprimes/survey.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "bprimes/density.hpp"

namespace bprimes {

namespace {

struct DensityKey {
    std::int64_t num;
    std::int64_t den;
};

struct DensityKeyLess {
    bool operator()(const DensityKey& x, const DensityKey& y) const {
        return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
    }
};

using LocalHistogram = std::map<DensityKey, std::uint64_t, DensityKeyLess>;

struct Stratum {
    std::int64_t da, db, dc;
    std::uint64_t first_index;  // stratum-major index of its first ordered triple
};

struct SweepPlan {
    std::vector<std::vector<std::int64_t>> numerators;  // indexed by denominator
    std::vector<Stratum> strata;
    std::uint64_t ordered_total = 0;
};

std::uint64_t ordered_in_stratum(const SweepPlan& plan, std::int64_t da, std::int64_t db,
                                 std::int64_t dc) {
    const std::uint64_t fa = plan.numerators[da].size();
    const std::uint64_t fb = plan.numerators[db].size();
    const std::uint64_t fc = plan.numerators[dc].size();
    std::uint64_t n = fa * fb * fc;
    if (dc == da) n -= fa * fb;
    if (dc == db) n -= fa * fb;
    if (da == db && db == dc) n += fa;
    return n;
}

SweepPlan make_plan(HeightBound height, bool symmetric) {
    const std::int64_t n = height.value();
    SweepPlan plan;
    plan.numerators.resize(static_cast<std::size_t>(n + 1));
    for (std::int64_t d = 2; d <= n; ++d) plan.numerators[d] = units(d);
    for (std::int64_t da = 2; da <= n; ++da) {
        for (std::int64_t db = symmetric ? da : 2; db <= n; ++db) {
            for (std::int64_t dc = 2; dc <= n; ++dc) {
                plan.strata.push_back({da, db, dc, plan.ordered_total});
                plan.ordered_total += ordered_in_stratum(plan, da, db, dc);
            }
        }
    }
    return plan;
}

struct StratumContext {
    bool symmetric;
    std::uint64_t stride;
    std::uint64_t phase;
};

std::uint64_t sweep_stratum(const SweepPlan& plan, const Stratum& s, const StratumContext& ctx,
                            DensityKernel& kernel, LocalHistogram& out) {
    const std::int64_t m = std::lcm(std::lcm(s.da, s.db), s.dc);
    const std::int64_t phi = euler_phi(m);
    const std::int64_t ka = m / s.da, kb = m / s.db, kc = m / s.dc;

    std::uint64_t visited = 0;
    // Triples to pass over before the next one in the slice.
    std::uint64_t skip = (ctx.phase + ctx.stride - s.first_index % ctx.stride) % ctx.stride;
    const auto fc = static_cast<std::uint64_t>(plan.numerators[s.dc].size());
    for (std::int64_t na : plan.numerators[s.da]) {
        for (std::int64_t nb : plan.numerators[s.db]) {
            if (ctx.symmetric && s.da == s.db && nb < na) continue;
            const std::uint64_t weight = (ctx.symmetric && (s.da < s.db || na < nb)) ? 2 : 1;
            const std::uint64_t valid = fc - (s.dc == s.da) - (s.dc == s.db && (s.dc != s.da || nb != na));
            if (skip >= valid) {
                skip -= valid;
                continue;
            }
            for (std::int64_t nc : plan.numerators[s.dc]) {
                if ((s.dc == s.da && nc == na) || (s.dc == s.db && nc == nb)) continue;
                if (skip > 0) {
                    --skip;
                    continue;
                }
                skip = ctx.stride - 1;
                const std::int64_t count = kernel.bounded_count({m, na * ka, nb * kb, nc * kc});
                const std::int64_t g = std::gcd(count, phi);
                out[DensityKey{count / g, phi / g}] += weight;
                visited += weight;
            }
        }
    }
    return visited;
}

Histogram to_histogram(const LocalHistogram& local) {
    Histogram h;
    for (const auto& [key, count] : local) h.add(Rational(key.num, key.den), count);
    return h;
}

nlohmann::json checkpoint_json(HeightBound n, const SweepOptions& o, bool symmetric,
                               std::size_t batches_done, const Histogram& h) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [density, count] : h.entries) {
        entries.push_back({density.to_string(), count});
    }
    return {{"version", 1},
            {"height", n.value()},
            {"symmetric", symmetric},
            {"slice_stride", o.slice_stride},
            {"slice_phase", o.slice_phase},
            {"strata_per_batch", o.strata_per_batch},
            {"batches_done", batches_done},
            {"total", h.total},
            {"entries", entries}};
}

void write_checkpoint(const std::string& path, const nlohmann::json& doc) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
        out << doc.dump() << '\n';
        if (!out) throw std::runtime_error("failed writing checkpoint " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

// Returns the number of completed batches and fills `h` from the checkpoint.
std::size_t load_checkpoint(const std::string& path, HeightBound n, const SweepOptions& o,
                            bool symmetric, Histogram& h) {
    std::ifstream in(path);
    if (!in) return 0;
    nlohmann::json doc = nlohmann::json::parse(in);
    const nlohmann::json expected = checkpoint_json(n, o, symmetric, 0, Histogram{});
    for (const char* field : {"version", "height", "symmetric", "slice_stride", "slice_phase",
                              "strata_per_batch"}) {
        if (doc.at(field) != expected.at(field)) {
            throw std::runtime_error("checkpoint " + path + " was written by a different sweep (" +
                                     field + " differs)");
        }
    }
    h = Histogram{};
    for (const auto& entry : doc.at("entries")) {
        h.add(Rational::parse(entry.at(0).get<std::string>()), entry.at(1).get<std::uint64_t>());
    }
    if (h.total != doc.at("total").get<std::uint64_t>()) {
        throw std::runtime_error("checkpoint " + path + " is inconsistent");
    }
    return doc.at("batches_done").get<std::size_t>();
}

}  // namespace

HeightBound::HeightBound(std::int64_t n) : n_(n) {
    if (n < 3) {
        throw std::invalid_argument("height bound must be at least 3, got " + std::to_string(n));
    }
}

void Histogram::add(const Rational& density, std::uint64_t count) {
    if (count == 0) return;
    entries[density] += count;
    total += count;
}

void Histogram::merge(const Histogram& other) {
    for (const auto& [density, count] : other.entries) add(density, count);
}

Histogram Histogram::without_zero() const {
    Histogram out = *this;
    if (auto it = out.entries.find(Rational(0)); it != out.entries.end()) {
        out.total -= it->second;
        out.entries.erase(it);
    }
    return out;
}

std::vector<Rational> height_fractions(HeightBound n) {
    std::vector<Rational> out;
    for (std::int64_t d = 2; d <= n.value(); ++d) {
        for (std::int64_t a : units(d)) out.emplace_back(a, d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_params(HeightBound n) {
    const auto f = static_cast<std::uint64_t>(height_fractions(n).size());
    // a == b leaves f - 1 choices of c, a != b leaves f - 2.
    return f * (f - 1) + f * (f - 1) * (f - 2);
}

void enumerate_params(HeightBound n, const std::function<void(const HGParams&)>& visit) {
    const auto fractions = height_fractions(n);
    for (const Rational& a : fractions) {
        for (const Rational& b : fractions) {
            for (const Rational& c : fractions) {
                if (c == a || c == b) continue;
                visit(HGParams::make(a, b, c));
            }
        }
    }
}

std::uint64_t count_slice(HeightBound n, std::uint64_t stride, std::uint64_t phase) {
    if (stride == 0 || phase >= stride) throw std::invalid_argument("invalid slice");
    const std::uint64_t total = count_params(n);
    return phase < total ? (total - phase + stride - 1) / stride : 0;
}

SweepResult run_sweep(HeightBound n, const SweepOptions& options) {
    if (options.slice_stride == 0 || options.slice_phase >= options.slice_stride) {
        throw std::invalid_argument("slice phase must be below a positive stride");
    }
    if (options.strata_per_batch == 0) throw std::invalid_argument("empty batches");
    const bool symmetric = options.use_symmetry && options.slice_stride == 1;
    const SweepPlan plan = make_plan(n, symmetric);
    const StratumContext ctx{symmetric, options.slice_stride, options.slice_phase};
    const std::size_t batch = options.strata_per_batch;

    SweepResult result;
    result.batches_total = (plan.strata.size() + batch - 1) / batch;
    if (!options.checkpoint_path.empty()) {
        result.batches_done =
            load_checkpoint(options.checkpoint_path, n, options, symmetric, result.histogram);
    }

    const unsigned threads = std::max(1u, options.threads);
    std::vector<DensityKernel> kernels(threads);
    std::size_t ran = 0;

    while (result.batches_done < result.batches_total) {
        if (options.max_batches && ran >= *options.max_batches) break;
        const std::size_t begin = result.batches_done * batch;
        const std::size_t end = std::min(plan.strata.size(), begin + batch);

        std::vector<LocalHistogram> locals(threads);
        auto work = [&](unsigned t) {
            for (std::size_t i = begin + t; i < end; i += threads) {
                sweep_stratum(plan, plan.strata[i], ctx, kernels[t], locals[t]);
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        }
        for (const auto& local : locals) result.histogram.merge(to_histogram(local));

        ++result.batches_done;
        ++ran;
        if (!options.checkpoint_path.empty()) {
            write_checkpoint(options.checkpoint_path,
                             checkpoint_json(n, options, symmetric, result.batches_done,
                                             result.histogram));
        }
        if (options.progress) {
            options.progress({result.batches_done, result.batches_total, result.histogram.total});
        }
    }
    result.complete = result.batches_done == result.batches_total;
    return result;
}

Histogram density_histogram(HeightBound n, bool drop_zero, unsigned threads) {
    SweepOptions options;
    options.threads = threads;
    Histogram h = run_sweep(n, options).histogram;
    return drop_zero ? h.without_zero() : h;
}

Rational beta(const Histogram& histogram, const Rational& r) {
    if (histogram.total == 0) throw std::invalid_argument("beta of an empty histogram");
    std::uint64_t at_most = 0;
    for (const auto& [density, count] : histogram.entries) {
        if (density > r) break;
        at_most += count;
    }
    return Rational(static_cast<std::int64_t>(at_most), static_cast<std::int64_t>(histogram.total));
}

Rational beta(const Rational& r, HeightBound n, unsigned threads) {
    return beta(density_histogram(n, false, threads), r);
}

std::vector<BetaRow> conjecture_trend(const Rational& epsilon, std::span<const std::int64_t> heights,
                                      unsigned threads) {
    std::vector<BetaRow> rows;
    for (std::int64_t h : heights) {
        rows.push_back({epsilon, h, beta(epsilon, HeightBound(h), threads)});
    }
    return rows;
}

void write_histogram_csv(std::ostream& os, const Histogram& histogram) {
    os << "density,count\n";
    for (const auto& [density, count] : histogram.entries) {
        os << density.to_string() << ',' << count << '\n';
    }
}

void write_beta_csv(std::ostream& os, std::span<const BetaRow> rows) {
    os << "epsilon,N,beta\n";
    for (const BetaRow& row : rows) {
        os << row.epsilon.to_string() << ',' << row.height << ',' << row.beta.to_string() << '\n';
    }
}

}  // namespace bprimes
