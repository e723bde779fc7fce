#ifndef EPSICOMP_FUNCTION_MODEL_HPP
#define EPSICOMP_FUNCTION_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "epsicomp/errors.hpp"

namespace epsicomp {

/// Scalar function sampled on the uniform N^k grid over the unit cube.
///
/// The grid has N points per axis spanning [0,1] inclusive, so the spacing is
/// 1/(N-1); values are stored flat, row-major by axis order (axis 0 slowest).
/// Instances are immutable after construction and safe to share across threads.
class SampledFunction {
public:
    SampledFunction(int dim, int points_per_axis, std::vector<double> values,
                    bool normalized = false);

    int dim() const { return dim_; }
    int points_per_axis() const { return points_per_axis_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    bool normalized() const { return normalized_; }

    /// Grid spacing 1/(N-1) along every axis.
    double grid_spacing() const { return 1.0 / (points_per_axis_ - 1); }

    /// Coordinate of node index i along one axis, in [0,1].
    double axis_coordinate(int i) const { return static_cast<double>(i) * grid_spacing(); }

private:
    int dim_;
    int points_per_axis_;
    std::vector<double> values_;
    bool normalized_;
};

/// Norm used to measure reconstruction error between value arrays.
struct ErrorNorm {
    enum class Kind { Uniform, MeanPower };

    Kind kind = Kind::Uniform;
    double q = 2.0;  // MeanPower exponent, >= 1

    static ErrorNorm uniform() { return ErrorNorm{Kind::Uniform, 2.0}; }
    static ErrorNorm mean_power(double q);
};

/// A subset of grid nodes retained for reconstruction.
struct SubgridSelection {
    std::vector<std::size_t> kept_indices;  // sorted strictly ascending
    std::int64_t scheme_id = 0;             // seed or stride tag of the scheme
};

/// Throws unless `sel` is nonempty, strictly ascending, and within [0, size).
void validate_selection(const SubgridSelection& sel, std::size_t size);

/// Scales values by 1/max|v| so the uniform norm becomes exactly 1.
/// Idempotent; relative ordering of values is preserved.
/// Throws ZeroFunction when every value is zero.
SampledFunction normalize(const SampledFunction& f);

/// Distance between two equal-length value arrays under `norm`:
/// Uniform -> max |a_i - b_i|; MeanPower(q) -> (mean |a_i - b_i|^q)^(1/q).
/// Empty arrays compare at distance 0. Throws LengthMismatch.
double error_between(std::span<const double> a, std::span<const double> b,
                     const ErrorNorm& norm);

/// Keeps every m-th node along each axis, always including both boundary
/// nodes, and returns the flat indices of the resulting product grid.
/// Effective spacing is h = m/(N-1). Throws StrideTooLarge when m >= N.
SubgridSelection uniform_subgrid(const SampledFunction& f, int stride);

}  // namespace epsicomp

#endif
