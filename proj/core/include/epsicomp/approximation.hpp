#ifndef EPSICOMP_APPROXIMATION_HPP
#define EPSICOMP_APPROXIMATION_HPP

#include <string>
#include <vector>

#include "epsicomp/function_model.hpp"

namespace epsicomp {

/// One member of the fixed reconstruction family.
struct ApproximationMethod {
    enum class Kind { NearestNeighbor, PiecewiseLinear, CubicSpline, PolynomialLSQ };

    Kind kind = Kind::PiecewiseLinear;
    int degree = 0;  // PolynomialLSQ only, >= 1

    static ApproximationMethod nearest_neighbor() { return {Kind::NearestNeighbor, 0}; }
    static ApproximationMethod piecewise_linear() { return {Kind::PiecewiseLinear, 0}; }
    static ApproximationMethod cubic_spline() { return {Kind::CubicSpline, 0}; }
    static ApproximationMethod polynomial_lsq(int degree);

    /// Short token: "nearest", "linear", "spline", "poly<degree>".
    std::string name() const;
};

/// Parses the tokens produced by ApproximationMethod::name().
ApproximationMethod parse_method(const std::string& token);

/// {linear, spline, poly2, poly5, nearest}: spans the exactness classes
/// (affine, smooth, polynomial) the complexity estimates rely on.
std::vector<ApproximationMethod> default_family();

struct ReconstructionResult {
    std::vector<double> predicted;  // all grid nodes
    ApproximationMethod method;
    double error = 0.0;  // per chosen norm, over discarded nodes only
};

/// Predicts every grid node of `f` from the values at `kept` and measures the
/// error on the discarded nodes. Interpolating methods (nearest, linear,
/// spline) reproduce retained values exactly.
///
/// Dimension support: all methods for dim 1; nearest-neighbor and multilinear
/// for dim 2 (multilinear needs a product-grid kept set). Throws
/// TooFewPoints, UnsupportedDimension or UnsupportedSelection.
ReconstructionResult reconstruct(const SampledFunction& f, const SubgridSelection& kept,
                                 const ApproximationMethod& method, const ErrorNorm& norm);

/// Minimal-error result over the methods of `family` that satisfy their
/// preconditions; ties broken by family order. Method-level failures are
/// skipped; throws AllMethodsFailed when nothing succeeds.
ReconstructionResult best_reconstruction(const SampledFunction& f,
                                         const SubgridSelection& kept,
                                         const std::vector<ApproximationMethod>& family,
                                         const ErrorNorm& norm);

}  // namespace epsicomp

#endif
