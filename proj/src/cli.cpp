#include "bprimes/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bprimes/density.hpp"
#include "bprimes/errors.hpp"
#include "bprimes/padic.hpp"
#include "bprimes/quadratic.hpp"
#include "bprimes/serialize.hpp"
#include "bprimes/specialcase.hpp"
#include "bprimes/survey.hpp"

namespace bprimes::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational parse_rational_arg(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError("expected a rational num/den, got '" + text + "'");
    }
}

HGParams params_from_args(const std::string& a, const std::string& b, const std::string& c,
                          std::ostream& err) {
    NormalizedParams np =
        normalize_params(parse_rational_arg(a), parse_rational_arg(b), parse_rational_arg(c));
    if (np.adjusted) {
        err << "note: parameters normalized to " << np.params.to_string() << '\n';
    }
    return np.params;
}

std::string tuple(const std::vector<std::string>& items) {
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
    }
    return out + ")";
}

std::string describe(const BoundednessVerdict& v) {
    std::string out = v.bounded() ? "BOUNDED" : "UNBOUNDED";
    if (const auto* w = std::get_if<DigitWitness>(&v.witness)) {
        out += " j=" + std::to_string(w->index);
    } else if (const auto* w = std::get_if<ValuationWitness>(&v.witness)) {
        out += " n=" + std::to_string(w->n) + " v=" + std::to_string(w->valuation);
    }
    return out;
}

unsigned default_threads() {
    if (const char* env = std::getenv("BPRIMES_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t > 0) return static_cast<unsigned>(t);
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("BPRIMES_THREADS must be a positive integer, got '") + env + "'");
    }
    return 1;
}

struct DigitsArgs {
    std::string a;
    std::int64_t p = 0;
    bool full_period = false;
    bool json = false;
};

void cmd_digits(const DigitsArgs& args, std::ostream& out, std::ostream& err) {
    Rational a = parse_rational_arg(args.a);
    if (a.is_integer()) throw IntegralParameter("parameter " + a.to_string() + " is an integer");
    if (Rational fa = frac_part(a); fa != a) {
        err << "note: parameter normalized to " << fa << '\n';
        a = fa;
    }
    const DigitExpansion e = padic_digits(a - Rational(1), args.p);
    const std::int64_t d = a.small_denominator();

    // When p^(M/2) = -1 mod d the second half of the period is the digitwise
    // complement of the first, so the first half determines the expansion.
    std::int64_t shown = e.period;
    if (!args.full_period && e.period % 2 == 0 && pow_mod(args.p, e.period / 2, d) == d - 1) {
        shown = e.period / 2;
    }
    std::vector<std::string> digits, normalized, limits;
    for (std::int64_t j = 0; j < shown; ++j) {
        digits.push_back(std::to_string(e.digit(j)));
        normalized.push_back(Rational(e.digit(j), args.p).to_decimal(4));
        limits.push_back(normalized_digit_limit(a, args.p % d, j).to_string());
    }
    if (args.json) {
        nlohmann::json doc = to_json(e);
        doc["shown"] = shown;
        doc["limits"] = limits;
        out << doc.dump() << '\n';
        return;
    }
    out << "value " << e.value << " prime " << e.prime << " period " << e.period;
    if (shown != e.period) out << " (first half shown; second half is p-1 minus the first)";
    out << '\n';
    out << "digits " << tuple(digits) << '\n';
    out << "normalized " << tuple(normalized) << '\n';
    out << "limit " << tuple(limits) << '\n';
}

struct SweepArgs {
    std::int64_t height = 0;
    std::string out_path;
    bool drop_zero = false;
    std::optional<unsigned> threads;
    std::vector<std::string> betas;
    std::uint64_t slice_stride = 1;
    std::uint64_t slice_phase = 0;
    std::string checkpoint;
    std::optional<std::size_t> max_batches;
    bool large = false;
    bool progress = false;
    bool no_symmetry = false;
};

constexpr std::int64_t kUngatedHeight = 32;

void cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    if (args.height < 3) throw UsageError("sweep height must be at least 3");
    if (args.height > kUngatedHeight && !args.large) {
        throw UsageError("heights above " + std::to_string(kUngatedHeight) +
                         " take hours of CPU; pass --large to run them");
    }
    std::vector<Rational> epsilons;
    for (const auto& text : args.betas) {
        Rational eps = parse_rational_arg(text);
        if (eps < Rational(0) || eps > Rational(1)) throw UsageError("--beta must lie in [0,1]");
        epsilons.push_back(eps);
    }
    if (args.slice_stride == 0 || args.slice_phase >= args.slice_stride) {
        throw UsageError("--slice-phase must be below a positive --slice-stride");
    }

    SweepOptions options;
    options.threads = args.threads.value_or(default_threads());
    options.use_symmetry = !args.no_symmetry;
    options.slice_stride = args.slice_stride;
    options.slice_phase = args.slice_phase;
    options.checkpoint_path = args.checkpoint;
    options.max_batches = args.max_batches;
    if (args.progress || args.large) {
        options.progress = [&err](const SweepProgress& p) {
            err << "batch " << p.batches_done << "/" << p.batches_total << ", " << p.triples_done
                << " triples\n";
        };
    }
    const HeightBound height(args.height);
    const SweepResult result = run_sweep(height, options);
    if (!result.complete) {
        err << "sweep stopped after batch " << result.batches_done << " of " << result.batches_total;
        if (!args.checkpoint.empty()) err << "; rerun with --checkpoint " << args.checkpoint << " to resume";
        err << '\n';
        return;
    }
    const Histogram shown = args.drop_zero ? result.histogram.without_zero() : result.histogram;

    auto emit_histogram = [&](std::ostream& os) { write_histogram_csv(os, shown); };
    if (!args.out_path.empty()) {
        std::ofstream file(args.out_path, std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open " + args.out_path);
        emit_histogram(file);
    } else if (epsilons.empty()) {
        emit_histogram(out);
    }
    if (!epsilons.empty()) {
        std::vector<BetaRow> rows;
        for (const Rational& eps : epsilons) {
            rows.push_back({eps, args.height, beta(result.histogram, eps)});
        }
        write_beta_csv(out, rows);
    }
}

nlohmann::json special_json(std::int64_t p, bool with_max) {
    auto sp = parse_special_prime(p);
    if (!sp) throw HypothesisError(std::to_string(p) + " is not a prime of the form 2q^r+1");
    nlohmann::json shapes = nlohmann::json::array();
    for (const BShape& shape : enumerate_b_shapes(*sp)) shapes.push_back(to_json(shape));
    nlohmann::json doc = {{"p", sp->p}, {"q", sp->q}, {"r", sp->r}, {"shapes", shapes}};
    if (with_max) {
        const MaxDensity max = max_density_over_params(*sp);
        doc["max_density"] = max.density.to_string();
        doc["witness"] = {{"a", Rational(max.witness[0], p).to_string()},
                          {"b", Rational(max.witness[1], p).to_string()},
                          {"c", Rational(max.witness[2], p).to_string()}};
    }
    return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Densities of p-adically bounded primes for 2F1(a,b;c)", "bprimes"};
    app.require_subcommand(1);
    std::function<void()> action;

    // density / residues
    std::string a, b, c;
    bool json = false;
    auto* density_cmd = app.add_subcommand("density", "exact density |B|/phi(m)");
    density_cmd->add_option("a", a)->required();
    density_cmd->add_option("b", b)->required();
    density_cmd->add_option("c", c)->required();
    density_cmd->add_flag("--json", json, "print the full density record");
    density_cmd->callback([&] {
        action = [&] {
            const DensityRecord record = density_record(params_from_args(a, b, c, err));
            if (json) {
                out << to_json(record).dump() << '\n';
            } else {
                out << record.density << '\n';
            }
        };
    });

    auto* residues_cmd = app.add_subcommand("residues", "the bounded residue classes B mod m");
    residues_cmd->add_option("a", a)->required();
    residues_cmd->add_option("b", b)->required();
    residues_cmd->add_option("c", c)->required();
    residues_cmd->callback([&] {
        action = [&] {
            const DensityRecord record = density_record(params_from_args(a, b, c, err));
            nlohmann::json members = nlohmann::json::array();
            for (std::int64_t u : record.bounded.members()) members.push_back(u);
            out << nlohmann::json{{"m", record.modulus.m}, {"phi", record.modulus.phi}, {"B", members}}
                       .dump()
                << '\n';
        };
    });

    // digits
    DigitsArgs digits_args;
    auto* digits_cmd = app.add_subcommand("digits", "p-adic digits of a-1 and their limits");
    digits_cmd->add_option("a", digits_args.a)->required();
    digits_cmd->add_option("p", digits_args.p)->required();
    digits_cmd->add_flag("--full-period", digits_args.full_period, "always print the whole period");
    digits_cmd->add_flag("--json", digits_args.json);
    digits_cmd->callback([&] { action = [&] { cmd_digits(digits_args, out, err); }; });

    // bounded
    std::int64_t prime = 0;
    std::optional<std::int64_t> empirical;
    auto* bounded_cmd = app.add_subcommand("bounded", "is the series p-adically bounded at p");
    bounded_cmd->add_option("a", a)->required();
    bounded_cmd->add_option("b", b)->required();
    bounded_cmd->add_option("c", c)->required();
    bounded_cmd->add_option("p", prime)->required();
    bounded_cmd->add_option("--empirical", empirical, "also scan coefficient valuations up to N")
        ->check(CLI::PositiveNumber);
    bounded_cmd->callback([&] {
        action = [&] {
            const HGParams params = params_from_args(a, b, c, err);
            out << "digit " << describe(digit_bounded(params, prime)) << '\n';
            out << "residue " << (bounded_prime_test(params, prime) ? "BOUNDED" : "UNBOUNDED") << '\n';
            if (empirical) {
                out << "empirical(" << *empirical << ") "
                    << describe(empirical_bounded(params, prime, *empirical)) << '\n';
            }
        };
    });

    // sweep
    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "density histogram over all triples up to height N");
    sweep_cmd->add_option("N", sweep_args.height)->required();
    sweep_cmd->add_option("--out", sweep_args.out_path, "write the histogram CSV here");
    sweep_cmd->add_flag("--drop-zero", sweep_args.drop_zero, "omit the density-0 bucket");
    sweep_cmd->add_option("--threads", sweep_args.threads, "worker count (default $BPRIMES_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--beta", sweep_args.betas, "print beta(EPS, N); repeatable");
    sweep_cmd->add_option("--slice-stride", sweep_args.slice_stride, "keep every S-th triple");
    sweep_cmd->add_option("--slice-phase", sweep_args.slice_phase, "offset of the kept triples");
    sweep_cmd->add_option("--checkpoint", sweep_args.checkpoint, "resumable checkpoint file");
    sweep_cmd->add_option("--max-batches", sweep_args.max_batches, "stop after this many batches");
    sweep_cmd->add_flag("--large", sweep_args.large, "allow heights above 32");
    sweep_cmd->add_flag("--progress", sweep_args.progress, "report progress on stderr");
    sweep_cmd->add_flag("--no-symmetry", sweep_args.no_symmetry, "evaluate (a,b) and (b,a) separately");
    sweep_cmd->callback([&] { action = [&] { cmd_sweep(sweep_args, out, err); }; });

    // quad
    auto* quad_cmd = app.add_subcommand("quad", "quadratic-residue sets and class numbers");
    quad_cmd->require_subcommand(1);
    std::int64_t qx = 0, qy = 0, qp = 0;
    auto* class_cmd = quad_cmd->add_subcommand("class-number", "h(-p) for p = 3 mod 4");
    class_cmd->add_option("p", qp)->required();
    class_cmd->callback([&] { action = [&] { out << to_json(class_number(qp)).dump() << '\n'; }; });
    auto* nonres_cmd = quad_cmd->add_subcommand("nonresidue", "least quadratic nonresidue");
    nonres_cmd->add_option("p", qp)->required();
    nonres_cmd->callback([&] { action = [&] { out << least_nonresidue(qp) << '\n'; }; });
    auto* uset_cmd = quad_cmd->add_subcommand("uset", "U_p(x)");
    uset_cmd->add_option("x", qx)->required();
    uset_cmd->add_option("p", qp)->required();
    uset_cmd->callback([&] { action = [&] { out << to_json(u_set(qx, qp)).dump() << '\n'; }; });
    auto* wset_cmd = quad_cmd->add_subcommand("wset", "W_p(x)");
    wset_cmd->add_option("x", qx)->required();
    wset_cmd->add_option("p", qp)->required();
    wset_cmd->callback([&] { action = [&] { out << to_json(w_set(qx, qp)).dump() << '\n'; }; });
    auto* intersect_cmd = quad_cmd->add_subcommand("intersect", "least element of W_p(u) and W_p(v)");
    intersect_cmd->add_option("u", qx)->required();
    intersect_cmd->add_option("v", qy)->required();
    intersect_cmd->add_option("p", qp)->required();
    intersect_cmd->callback([&] {
        action = [&] {
            const auto witness = w_intersection_nonempty(qx, qy, qp);
            nlohmann::json doc = {{"nonempty", witness.has_value()}};
            if (witness) doc["witness"] = *witness;
            out << doc.dump() << '\n';
        };
    });
    auto* isum_cmd = quad_cmd->add_subcommand("interval-sum", "Legendre sum over the intervals of U_p(-x)");
    isum_cmd->add_option("x", qx)->required();
    isum_cmd->add_option("p", qp)->required();
    isum_cmd->callback([&] {
        action = [&] {
            const IntervalSum s = legendre_interval_sum(qx, qp);
            out << nlohmann::json{{"lhs", s.lhs}, {"rhs", s.rhs}}.dump() << '\n';
        };
    });

    // special
    std::int64_t sp = 0;
    bool with_max = false;
    auto* special_cmd = app.add_subcommand("special", "B-shapes for a prime p = 2q^r+1");
    special_cmd->add_option("p", sp)->required();
    special_cmd->add_flag("--max-density", with_max, "sweep all (x,y,z) for the largest density");
    special_cmd->callback([&] { action = [&] { out << special_json(sp, with_max).dump() << '\n'; }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (action) action();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const HypothesisError& e) {
        err << "hypothesis violated: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitHypothesis;
    }
}

}  // namespace bprimes::cli
