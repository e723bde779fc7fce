#include "epsicomp/coefficient_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "epsicomp/parallel.hpp"
#include "epsicomp/rng.hpp"

namespace epsicomp {

namespace {

constexpr double kDegeneracyFloor = 1e-12;

std::uint64_t scheme_seed(std::uint64_t base, std::size_t fraction_index,
                          std::size_t scheme_index) {
    return mix_seed(mix_seed(base, fraction_index), scheme_index);
}

// One Monte Carlo cell: selection + best-of-family error. Failed method
// preconditions surface as nullopt so the caller can aggregate.
std::optional<double> scheme_error(const SampledFunction& f, double fraction,
                                   const SweepConfig& config, std::size_t fraction_index,
                                   std::size_t scheme_index) {
    try {
        const std::uint64_t seed =
            scheme_seed(config.rng_seed, fraction_index, scheme_index);
        const SubgridSelection kept =
            config.selection == SelectionMode::Stratified
                ? stratified_selection(f.size(), fraction, seed)
                : uniform_selection(f.size(), fraction, seed);
        return best_reconstruction(f, kept, config.family, config.norm).error;
    } catch (const Error&) {
        return std::nullopt;
    }
}

struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0;
    int count = 0;
};

MeanStd reduce_errors(const std::vector<std::optional<double>>& errors) {
    MeanStd out;
    double sum = 0.0;
    for (const auto& e : errors) {
        if (e) {
            sum += *e;
            ++out.count;
        }
    }
    if (out.count == 0) return out;
    out.mean = sum / out.count;
    double var = 0.0;
    for (const auto& e : errors) {
        if (e) {
            const double d = *e - out.mean;
            var += d * d;
        }
    }
    out.stddev = std::sqrt(var / out.count);
    return out;
}

}  // namespace

SweepConfig SweepConfig::defaults() {
    SweepConfig cfg;
    for (int i = 1; i <= 19; ++i) cfg.fractions.push_back(i * 0.05);
    cfg.family = default_family();
    return cfg;
}

void SweepConfig::validate() const {
    if (fractions.empty()) throw InvalidSpec("sweep needs at least one fraction");
    double prev = 0.0;
    for (double s : fractions) {
        if (!(s > 0.0 && s < 1.0)) throw InvalidSpec("fractions must lie in (0, 1)");
        if (s <= prev) throw InvalidSpec("fractions must be strictly increasing");
        prev = s;
    }
    if (!(fit_alpha > 0.0 && fit_alpha <= fit_beta && fit_beta < 1.0)) {
        throw InvalidSpec("fit interval must satisfy 0 < alpha <= beta < 1");
    }
    int inside = 0;
    for (double s : fractions) {
        if (s >= fit_alpha - 1e-12 && s <= fit_beta + 1e-12) ++inside;
    }
    if (inside < 3) throw InvalidSpec("fit interval must contain at least 3 fractions");
    if (schemes_per_fraction < 1) throw InvalidSpec("need at least one scheme");
    if (family.empty()) throw InvalidSpec("approximation family must be nonempty");
    if (difference_orders < 0) throw InvalidSpec("difference order must be >= 0");
}

SubgridSelection stratified_selection(std::size_t n_total, double fraction,
                                      std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction < 1.0)) {
        throw InvalidSpec("fraction must lie in (0, 1)");
    }
    const std::size_t kept_count =
        static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n_total)));
    if (kept_count < 2) {
        throw TooFewKept("fraction " + std::to_string(fraction) + " of " +
                         std::to_string(n_total) + " keeps fewer than 2 points");
    }

    Rng rng(seed);
    SubgridSelection sel;
    sel.scheme_id = static_cast<std::int64_t>(seed);
    sel.kept_indices.reserve(kept_count);
    for (std::size_t block = 0; block < kept_count; ++block) {
        const std::size_t lo = block * n_total / kept_count;
        const std::size_t hi = (block + 1) * n_total / kept_count;
        std::size_t pick = lo + rng.next_below(hi - lo);
        if (block == 0) pick = 0;
        if (block == kept_count - 1) pick = n_total - 1;
        sel.kept_indices.push_back(pick);
    }
    return sel;
}

SubgridSelection uniform_selection(std::size_t n_total, double fraction,
                                   std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction < 1.0)) {
        throw InvalidSpec("fraction must lie in (0, 1)");
    }
    const std::size_t kept_count =
        static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n_total)));
    if (kept_count < 2) {
        throw TooFewKept("fraction " + std::to_string(fraction) + " of " +
                         std::to_string(n_total) + " keeps fewer than 2 points");
    }

    Rng rng(seed);
    std::vector<std::size_t> pool(n_total);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < kept_count; ++i) {
        const std::size_t j = i + rng.next_below(n_total - i);
        std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> picks(pool.begin(),
                                   pool.begin() + static_cast<std::ptrdiff_t>(kept_count));

    auto contains = [&](std::size_t value) {
        return std::find(picks.begin(), picks.end(), value) != picks.end();
    };
    auto swap_in = [&](std::size_t value) {
        for (auto& p : picks) {
            if (p != 0 && p != n_total - 1) {
                p = value;
                return;
            }
        }
    };
    if (!contains(0)) swap_in(0);
    if (!contains(n_total - 1)) swap_in(n_total - 1);

    std::sort(picks.begin(), picks.end());
    SubgridSelection sel;
    sel.scheme_id = static_cast<std::int64_t>(seed);
    sel.kept_indices = std::move(picks);
    return sel;
}

std::pair<double, double> error_at_fraction(const SampledFunction& f, double fraction,
                                            const SweepConfig& config,
                                            std::size_t fraction_index) {
    if (!f.normalized()) throw InvalidSpec("sweep expects a normalized function");
    const int schemes = config.schemes_per_fraction;
    std::vector<std::optional<double>> errors(static_cast<std::size_t>(schemes));
    for (int si = 0; si < schemes; ++si) {
        errors[static_cast<std::size_t>(si)] =
            scheme_error(f, fraction, config, fraction_index,
                         static_cast<std::size_t>(si));
    }
    const MeanStd agg = reduce_errors(errors);
    if (agg.count == 0) {
        throw AllMethodsFailed("every selection scheme failed at fraction " +
                               std::to_string(fraction));
    }
    return {agg.mean, agg.stddev};
}

RecoveryErrorCurve sweep_error_curve(const SampledFunction& f, const SweepConfig& config,
                                     unsigned threads) {
    if (!f.normalized()) throw InvalidSpec("sweep expects a normalized function");
    if (f.dim() != 1) {
        throw UnsupportedDimension("the estimation sweep supports 1-d series only");
    }
    config.validate();

    const std::size_t n_fractions = config.fractions.size();
    const std::size_t schemes = static_cast<std::size_t>(config.schemes_per_fraction);
    std::vector<std::optional<double>> cells(n_fractions * schemes);

    parallel_for(cells.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t cell = begin; cell < end; ++cell) {
            const std::size_t fi = cell / schemes;
            const std::size_t si = cell % schemes;
            cells[cell] = scheme_error(f, config.fractions[fi], config, fi, si);
        }
    });

    RecoveryErrorCurve curve;
    curve.rows.reserve(n_fractions);
    for (std::size_t fi = 0; fi < n_fractions; ++fi) {
        std::vector<std::optional<double>> slice(
            cells.begin() + static_cast<std::ptrdiff_t>(fi * schemes),
            cells.begin() + static_cast<std::ptrdiff_t>((fi + 1) * schemes));
        const MeanStd agg = reduce_errors(slice);
        if (agg.count == 0) continue;  // fraction unusable on this series
        ErrorCurveRow row;
        row.fraction = config.fractions[fi];
        row.mean_error = agg.mean;
        row.stddev = agg.stddev;
        row.scheme_count = agg.count;
        curve.rows.push_back(row);
    }
    return curve;
}

ComplexityCoefficients fit_complexity(const RecoveryErrorCurve& curve, double alpha,
                                      double beta) {
    if (!(alpha > 0.0 && alpha <= beta && beta < 1.0)) {
        throw InvalidSpec("fit interval must satisfy 0 < alpha <= beta < 1");
    }

    std::vector<double> xs, ys;
    for (const auto& row : curve.rows) {
        if (row.fraction < alpha - 1e-12 || row.fraction > beta + 1e-12) continue;
        if (row.mean_error < kDegeneracyFloor) continue;
        xs.push_back(std::log(row.fraction));
        ys.push_back(std::log(row.mean_error));
    }

    ComplexityCoefficients out;
    out.alpha = alpha;
    out.beta = beta;
    out.n_points_fit = static_cast<int>(xs.size());
    if (xs.size() < 3) {
        out.degenerate = true;
        return out;
    }

    const double n = static_cast<double>(xs.size());
    const double x_mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double y_mean = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
        sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    }
    out.b = sxy / sxx;
    out.a = y_mean - out.b * x_mean;

    double ssr = 0.0, sst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double fit = out.a + out.b * xs[i];
        ssr += (ys[i] - fit) * (ys[i] - fit);
        sst += (ys[i] - y_mean) * (ys[i] - y_mean);
    }
    out.r_squared = sst > 0.0 ? 1.0 - ssr / sst : 1.0;
    out.b_stderr = xs.size() > 2 ? std::sqrt(ssr / (n - 2.0) / sxx) : 0.0;
    return out;
}

std::vector<double> forward_differences(std::span<const double> values, int order) {
    if (order < 0) throw InvalidSpec("difference order must be >= 0");
    std::vector<double> out(values.begin(), values.end());
    for (int pass = 0; pass < order; ++pass) {
        if (out.size() < 2) {
            throw OrderTooHigh("difference order exceeds series length");
        }
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            out[i] = out[i + 1] - out[i];
        }
        out.pop_back();
    }
    return out;
}

SampledFunction difference_series(const SampledFunction& f, int order) {
    if (f.dim() != 1) throw UnsupportedDimension("difference series are 1-d only");
    if (order == 0) return f;
    if (order >= f.points_per_axis() - 1) {
        throw OrderTooHigh("order " + std::to_string(order) + " on " +
                           std::to_string(f.points_per_axis()) + " points");
    }
    std::vector<double> diffs = forward_differences(f.values(), order);
    return normalize(SampledFunction(1, static_cast<int>(diffs.size()), std::move(diffs)));
}

std::vector<ProfileEntry> coefficient_profile(const SampledFunction& f,
                                              const SweepConfig& config,
                                              unsigned threads) {
    config.validate();
    std::vector<ProfileEntry> profile;
    profile.reserve(static_cast<std::size_t>(config.difference_orders) + 1);
    for (int order = 0; order <= config.difference_orders; ++order) {
        ProfileEntry entry;
        entry.order = order;
        // Order 0 keeps the base seed so a plain sweep and the profile agree.
        SweepConfig order_config = config;
        if (order > 0) order_config.rng_seed = mix_seed(config.rng_seed, order);
        try {
            const SampledFunction series = difference_series(f, order);
            entry.curve = sweep_error_curve(series, order_config, threads);
            entry.coefficients =
                fit_complexity(entry.curve, config.fit_alpha, config.fit_beta);
        } catch (const Error& err) {
            entry.coefficients.degenerate = true;
            entry.coefficients.alpha = config.fit_alpha;
            entry.coefficients.beta = config.fit_beta;
            entry.note = err.what();
        }
        profile.push_back(std::move(entry));
    }
    return profile;
}

}  // namespace epsicomp
