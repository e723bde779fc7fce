#ifndef EPSICOMP_SEGMENTATION_HPP
#define EPSICOMP_SEGMENTATION_HPP

#include <cstdint>
#include <vector>

#include "epsicomp/coefficient_estimation.hpp"
#include "epsicomp/function_model.hpp"

namespace epsicomp {

/// Sliding-window setup for coefficient tracks over a long series.
struct WindowConfig {
    int window_length = 1000;  // W >= 100 so each window supports a fit
    int hop = 250;             // >= 1
    SweepConfig estimation;    // per-window sweep settings

    static WindowConfig defaults();
    void validate() const;
};

struct TrackRow {
    std::size_t start = 0;  // first sample index of the window
    ComplexityCoefficients coefficients;
};

struct CoefficientTrack {
    std::vector<TrackRow> rows;
    int window_length = 0;
    std::size_t series_length = 0;
};

struct ChangeCandidate {
    std::size_t boundary_window = 0;  // split position in the usable track
    std::size_t sample_index = 0;
    double score = 0.0;
    double threshold = 0.0;  // multiplier x permutation-null 95th percentile
    bool flagged = false;
};

struct SegmentationResult {
    CoefficientTrack track;
    std::vector<std::size_t> change_points;    // sorted, separated by >= min_separation
    std::vector<ChangeCandidate> candidates;   // per-candidate detector stats
};

/// Estimates (a, b) per window, each window normalized independently so the
/// coefficients reflect shape rather than amplitude. Windows whose sweep
/// degenerates (constant data, exact recovery) carry the degenerate flag.
/// Window seeds derive from (estimation.rng_seed, window index).
/// Throws SeriesTooShort when the series holds no full window.
CoefficientTrack coefficient_track(const SampledFunction& series, const WindowConfig& config,
                                   unsigned threads = 1);

/// CUSUM change detection on the (a, b) track standardized by median/MAD:
/// the max split statistic is compared against threshold_multiplier times the
/// 95th percentile of 199 seeded track permutations; detection recurses into
/// the flanks (binary segmentation) and enforces min_separation between
/// reported change points. Deterministic given detector_seed.
/// Throws TooFewWindows when fewer than 4 windows are non-degenerate.
SegmentationResult detect_changes(const CoefficientTrack& track, std::size_t min_separation,
                                  double threshold_multiplier,
                                  std::uint64_t detector_seed = 0);

}  // namespace epsicomp

#endif
