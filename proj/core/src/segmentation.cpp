#include "epsicomp/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "epsicomp/parallel.hpp"
#include "epsicomp/rng.hpp"

namespace epsicomp {

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Robust scale: 1.4826 * MAD, falling back to the standard deviation and
// finally to 1 when the coordinate is constant.
double robust_scale(const std::vector<double>& v) {
    const double med = median_of(v);
    std::vector<double> dev;
    dev.reserve(v.size());
    for (double x : v) dev.push_back(std::fabs(x - med));
    double scale = 1.4826 * median_of(dev);
    if (scale > 1e-12) return scale;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    scale = std::sqrt(var / static_cast<double>(v.size()));
    return scale > 1e-12 ? scale : 1.0;
}

struct Point2 {
    double a = 0.0;
    double b = 0.0;
};

// Max over interior splits of the scaled between-means CUSUM statistic.
struct SplitStat {
    double score = 0.0;
    std::size_t split = 0;  // first index of the right part
};

SplitStat max_split_statistic(const std::vector<Point2>& z, std::size_t lo,
                              std::size_t hi) {
    const std::size_t n = hi - lo;
    // Prefix sums in index order keep the result deterministic.
    std::vector<double> pa(n + 1, 0.0), pb(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        pa[i + 1] = pa[i] + z[lo + i].a;
        pb[i + 1] = pb[i] + z[lo + i].b;
    }
    SplitStat best;
    for (std::size_t j = 1; j < n; ++j) {
        const double nl = static_cast<double>(j);
        const double nr = static_cast<double>(n - j);
        const double da = pa[j] / nl - (pa[n] - pa[j]) / nr;
        const double db = pb[j] / nl - (pb[n] - pb[j]) / nr;
        const double score =
            std::sqrt(nl * nr / static_cast<double>(n)) * std::sqrt(da * da + db * db);
        if (score > best.score) {
            best.score = score;
            best.split = lo + j;
        }
    }
    return best;
}

// 95th percentile of the max split statistic over seeded permutations of the
// segment. 199 permutations give the conventional resolution for a 5% test.
double permutation_threshold(const std::vector<Point2>& z, std::size_t lo, std::size_t hi,
                             std::uint64_t seed) {
    constexpr int kPermutations = 199;
    const std::size_t n = hi - lo;
    std::vector<Point2> buffer(z.begin() + static_cast<std::ptrdiff_t>(lo),
                               z.begin() + static_cast<std::ptrdiff_t>(hi));
    std::vector<double> maxima;
    maxima.reserve(kPermutations);
    for (int p = 0; p < kPermutations; ++p) {
        Rng rng(mix_seed(mix_seed(mix_seed(seed, lo), hi), static_cast<std::size_t>(p)));
        for (std::size_t i = n - 1; i > 0; --i) {
            const std::size_t j = rng.next_below(i + 1);
            std::swap(buffer[i], buffer[j]);
        }
        maxima.push_back(max_split_statistic(buffer, 0, n).score);
    }
    std::sort(maxima.begin(), maxima.end());
    return maxima[static_cast<std::size_t>(
        std::ceil(0.95 * (kPermutations + 1)) - 1)];
}

}  // namespace

WindowConfig WindowConfig::defaults() {
    WindowConfig cfg;
    cfg.estimation = SweepConfig::defaults();
    return cfg;
}

void WindowConfig::validate() const {
    if (window_length < 100) throw InvalidSpec("window length must be >= 100");
    if (hop < 1) throw InvalidSpec("hop must be >= 1");
    estimation.validate();
}

CoefficientTrack coefficient_track(const SampledFunction& series,
                                   const WindowConfig& config, unsigned threads) {
    config.validate();
    if (series.dim() != 1) throw UnsupportedDimension("segmentation is 1-d only");
    const std::size_t length = series.size();
    const std::size_t window = static_cast<std::size_t>(config.window_length);
    if (length < window) {
        throw SeriesTooShort("series of " + std::to_string(length) +
                             " samples is shorter than one window of " +
                             std::to_string(window));
    }

    std::vector<std::size_t> starts;
    for (std::size_t start = 0; start + window <= length;
         start += static_cast<std::size_t>(config.hop)) {
        starts.push_back(start);
    }

    CoefficientTrack track;
    track.window_length = config.window_length;
    track.series_length = length;
    track.rows.resize(starts.size());

    parallel_for(starts.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t w = begin; w < end; ++w) {
            const std::size_t start = starts[w];
            TrackRow row;
            row.start = start;
            SweepConfig window_config = config.estimation;
            window_config.rng_seed = mix_seed(config.estimation.rng_seed, w);
            try {
                std::vector<double> slice(
                    series.values().begin() + static_cast<std::ptrdiff_t>(start),
                    series.values().begin() + static_cast<std::ptrdiff_t>(start + window));
                const SampledFunction piece = normalize(
                    SampledFunction(1, config.window_length, std::move(slice)));
                const RecoveryErrorCurve curve = sweep_error_curve(piece, window_config);
                row.coefficients = fit_complexity(curve, window_config.fit_alpha,
                                                  window_config.fit_beta);
            } catch (const Error&) {
                row.coefficients.degenerate = true;
            }
            track.rows[w] = row;
        }
    });
    return track;
}

SegmentationResult detect_changes(const CoefficientTrack& track,
                                  std::size_t min_separation,
                                  double threshold_multiplier,
                                  std::uint64_t detector_seed) {
    if (!(threshold_multiplier > 0.0)) {
        throw InvalidSpec("threshold multiplier must be positive");
    }

    std::vector<std::size_t> usable;  // indices into track.rows
    for (std::size_t i = 0; i < track.rows.size(); ++i) {
        if (!track.rows[i].coefficients.degenerate) usable.push_back(i);
    }
    if (usable.size() < 4) {
        throw TooFewWindows("detection needs >= 4 non-degenerate windows, have " +
                            std::to_string(usable.size()));
    }

    std::vector<double> as, bs;
    as.reserve(usable.size());
    bs.reserve(usable.size());
    for (std::size_t i : usable) {
        as.push_back(track.rows[i].coefficients.a);
        bs.push_back(track.rows[i].coefficients.b);
    }
    const double med_a = median_of(as), scale_a = robust_scale(as);
    const double med_b = median_of(bs), scale_b = robust_scale(bs);
    std::vector<Point2> z(usable.size());
    for (std::size_t i = 0; i < usable.size(); ++i) {
        z[i].a = (as[i] - med_a) / scale_a;
        z[i].b = (bs[i] - med_b) / scale_b;
    }

    SegmentationResult result;
    result.track = track;

    const std::size_t window = static_cast<std::size_t>(track.window_length);
    auto to_sample = [&](std::size_t split) {
        // The split is the first window of the new regime; anchor the change
        // at that window's center.
        return track.rows[usable[split]].start + window / 2;
    };

    // Binary segmentation with a permutation test per segment.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, z.size()}};
    std::vector<ChangeCandidate> flagged;
    while (!stack.empty()) {
        const auto [lo, hi] = stack.back();
        stack.pop_back();
        if (hi - lo < 4) continue;
        const SplitStat stat = max_split_statistic(z, lo, hi);
        if (stat.split == 0) continue;
        const double null95 = permutation_threshold(z, lo, hi, detector_seed);
        ChangeCandidate cand;
        cand.boundary_window = stat.split;
        cand.sample_index = to_sample(stat.split);
        cand.score = stat.score;
        cand.threshold = threshold_multiplier * null95;
        cand.flagged = stat.score > cand.threshold;
        result.candidates.push_back(cand);
        if (cand.flagged) {
            flagged.push_back(cand);
            stack.emplace_back(lo, stat.split);
            stack.emplace_back(stat.split, hi);
        }
    }

    // Keep the strongest candidates subject to the separation constraint.
    std::sort(flagged.begin(), flagged.end(),
              [](const ChangeCandidate& x, const ChangeCandidate& y) {
                  if (x.score != y.score) return x.score > y.score;
                  return x.sample_index < y.sample_index;
              });
    std::vector<std::size_t> kept;
    for (const auto& cand : flagged) {
        bool ok = true;
        for (std::size_t existing : kept) {
            const std::size_t gap = existing > cand.sample_index
                                        ? existing - cand.sample_index
                                        : cand.sample_index - existing;
            if (gap < min_separation) {
                ok = false;
                break;
            }
        }
        if (ok) kept.push_back(cand.sample_index);
    }
    std::sort(kept.begin(), kept.end());
    result.change_points = std::move(kept);
    return result;
}

}  // namespace epsicomp
