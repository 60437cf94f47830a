#pragma once

/**
 * @file survey.hpp
 * @brief Sweeps over every parameter triple up to a height bound.
 *
 * The parameter set at height N is every ordered (a, b; c) with a, b, c in
 * (0,1), denominators at most N, and c != a, b. Densities are accumulated
 * into an exact histogram (Rational -> count), from which beta(r, N), the
 * share of triples with density at most r, is read off.
 *
 * The sweep walks denominator strata (da, db, dc) so that the modulus and its
 * unit mask are built once per stratum. Strata are grouped into batches; a
 * checkpoint file written after each batch makes long runs resumable.
 */

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bprimes/arith.hpp"
#include "bprimes/rational.hpp"

namespace bprimes {

class HeightBound {
public:
    /// Throws std::invalid_argument for n < 3 (no valid triple exists).
    explicit HeightBound(std::int64_t n);

    std::int64_t value() const { return n_; }

private:
    std::int64_t n_;
};

struct Histogram {
    std::map<Rational, std::uint64_t> entries;
    std::uint64_t total = 0;

    void add(const Rational& density, std::uint64_t count);
    void merge(const Histogram& other);
    Histogram without_zero() const;

    friend bool operator==(const Histogram&, const Histogram&) = default;
};

/// Fractions in (0,1) with denominator <= N, increasing.
std::vector<Rational> height_fractions(HeightBound n);

/// |P| at height N, ordered triples.
std::uint64_t count_params(HeightBound n);

/// Every triple exactly once, lexicographic in (a, b, c) by value.
void enumerate_params(HeightBound n, const std::function<void(const HGParams&)>& visit);

struct SweepProgress {
    std::size_t batches_done;
    std::size_t batches_total;
    std::uint64_t triples_done;
};

struct SweepOptions {
    unsigned threads = 1;
    /// Count (a, b) and (b, a) from one evaluation. Ignored for sliced runs.
    bool use_symmetry = true;
    /// Keep only triples whose index in stratum-major order is
    /// congruent to slice_phase mod slice_stride.
    std::uint64_t slice_stride = 1;
    std::uint64_t slice_phase = 0;
    /// Resume from / write to this checkpoint file when non-empty.
    std::string checkpoint_path;
    std::size_t strata_per_batch = 256;
    /// Stop after this many batches in this run (the checkpoint stays resumable).
    std::optional<std::size_t> max_batches;
    std::function<void(const SweepProgress&)> progress;
};

struct SweepResult {
    Histogram histogram;
    bool complete = false;
    std::size_t batches_done = 0;
    std::size_t batches_total = 0;
};

SweepResult run_sweep(HeightBound n, const SweepOptions& options);

/// Number of triples a sliced sweep visits (for progress and verification).
std::uint64_t count_slice(HeightBound n, std::uint64_t stride, std::uint64_t phase);

/// Exact histogram over all of P; drop_zero removes the density-0 bucket.
Histogram density_histogram(HeightBound n, bool drop_zero = false, unsigned threads = 1);

/// |{D <= r}| / total. Throws std::invalid_argument for an empty histogram.
Rational beta(const Histogram& histogram, const Rational& r);
Rational beta(const Rational& r, HeightBound n, unsigned threads = 1);

struct BetaRow {
    Rational epsilon;
    std::int64_t height;
    Rational beta;
};

/// beta(eps, N) for each N in the list.
std::vector<BetaRow> conjecture_trend(const Rational& epsilon, std::span<const std::int64_t> heights,
                                      unsigned threads = 1);

/// `density,count`, ascending.
void write_histogram_csv(std::ostream& os, const Histogram& histogram);

/// `epsilon,N,beta`.
void write_beta_csv(std::ostream& os, std::span<const BetaRow> rows);

}  // namespace bprimes
