#ifndef EPSICOMP_COEFFICIENT_ESTIMATION_HPP
#define EPSICOMP_COEFFICIENT_ESTIMATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "epsicomp/approximation.hpp"
#include "epsicomp/function_model.hpp"

namespace epsicomp {

/// How retained indices are chosen at a given fraction.
enum class SelectionMode {
    Stratified,  // one random pick per contiguous block, boundaries forced
    Uniform      // plain without-replacement sampling, boundaries forced
};

/// Configuration of the retained-fraction sweep.
struct SweepConfig {
    std::vector<double> fractions;           // strictly increasing, in (0,1)
    double fit_alpha = 0.2;                  // fit interval [alpha, beta]
    double fit_beta = 0.8;
    int schemes_per_fraction = 10;           // Monte Carlo repetitions M
    std::uint64_t rng_seed = 0;
    std::vector<ApproximationMethod> family; // defaults to default_family()
    ErrorNorm norm = ErrorNorm::uniform();
    int difference_orders = 0;               // profile depth s_max
    SelectionMode selection = SelectionMode::Stratified;

    /// Fractions 0.05, 0.10, ..., 0.95; interval [0.2, 0.8]; 10 schemes.
    static SweepConfig defaults();

    void validate() const;
};

struct ErrorCurveRow {
    double fraction = 0.0;
    double mean_error = 0.0;   // mean of per-scheme minimal errors
    double stddev = 0.0;       // population stddev across schemes
    int scheme_count = 0;
};

/// Rows ordered by fraction ascending. Fractions where every scheme failed
/// its preconditions are omitted.
struct RecoveryErrorCurve {
    std::vector<ErrorCurveRow> rows;
};

/// Fitted pair of the affine law ln(eps) = a + b*ln(fraction).
struct ComplexityCoefficients {
    double a = 0.0;
    double b = 0.0;
    double r_squared = 0.0;
    double b_stderr = 0.0;     // standard error of the slope
    int n_points_fit = 0;
    double alpha = 0.0;        // fit interval actually used
    double beta = 0.0;
    bool degenerate = false;   // fewer than 3 usable rows in the interval
};

/// Partitions [0, n_total) into floor(fraction*n_total) contiguous blocks and
/// keeps one uniformly random index per block; the first and last block picks
/// are swapped for the boundary indices. Deterministic given the seed.
/// Throws TooFewKept when fewer than 2 indices would be kept.
SubgridSelection stratified_selection(std::size_t n_total, double fraction,
                                      std::uint64_t seed);

/// Comparison mode: floor(fraction*n_total) distinct uniform indices with the
/// boundaries swapped in. Deterministic given the seed.
SubgridSelection uniform_selection(std::size_t n_total, double fraction,
                                   std::uint64_t seed);

/// Mean and population stddev of the best-of-family error over
/// schemes_per_fraction independent selections. Scheme seeds derive from
/// (rng_seed, fraction_index, scheme index), so results do not depend on
/// evaluation order. Throws AllMethodsFailed when every scheme fails.
std::pair<double, double> error_at_fraction(const SampledFunction& f, double fraction,
                                            const SweepConfig& config,
                                            std::size_t fraction_index = 0);

/// The full sweep over config.fractions. The (fraction x scheme) grid may be
/// evaluated on several threads; results are bit-identical for any count.
RecoveryErrorCurve sweep_error_curve(const SampledFunction& f, const SweepConfig& config,
                                     unsigned threads = 1);

/// Ordinary least squares of ln(mean_error) on ln(fraction) over the rows
/// inside [alpha, beta]. Rows with mean_error below 1e-12 are excluded; if
/// fewer than 3 remain the result carries degenerate = true with a = b = 0,
/// signalling an (effectively) exactly-recoverable function.
ComplexityCoefficients fit_complexity(const RecoveryErrorCurve& curve, double alpha,
                                      double beta);

/// Forward differences applied `order` times; result has length n - order.
std::vector<double> forward_differences(std::span<const double> values, int order);

/// Difference series of f: forward differences of the sample values applied
/// `order` times, then renormalized. Order 0 returns f unchanged. Throws
/// OrderTooHigh when fewer than 2 values would remain, ZeroFunction when the
/// differenced series vanishes (e.g. affine input at order >= 2).
SampledFunction difference_series(const SampledFunction& f, int order);

struct ProfileEntry {
    int order = 0;
    RecoveryErrorCurve curve;            // empty when the order degenerated early
    ComplexityCoefficients coefficients;
    std::string note;                    // nonempty when the order failed
};

/// Sweep + fit for f and each difference order up to config.difference_orders.
/// Per-order failures (vanishing series) are reported as degenerate entries
/// and never abort the remaining orders. Order 0 reproduces
/// sweep_error_curve/fit_complexity exactly.
std::vector<ProfileEntry> coefficient_profile(const SampledFunction& f,
                                              const SweepConfig& config,
                                              unsigned threads = 1);

}  // namespace epsicomp

#endif
