#ifndef EPSICOMP_INDIVIDUAL_COMPLEXITY_HPP
#define EPSICOMP_INDIVIDUAL_COMPLEXITY_HPP

#include <vector>

#include "epsicomp/approximation.hpp"
#include "epsicomp/function_model.hpp"
#include "epsicomp/generators.hpp"

namespace epsicomp {

struct DeltaPoint {
    double h = 0.0;         // spacing m/(N-1)
    double delta = 0.0;     // after monotone enforcement
    double raw_delta = 0.0; // as measured (zero-floored)
};

/// Minimal reconstruction error tabulated over all realizable strides.
struct DeltaCurve {
    std::vector<DeltaPoint> points;     // h strictly increasing
    bool monotone_enforced = false;
    bool raw_violation = false;         // raw deltas decreased somewhere
};

/// Tabulates delta(h) = best-of-family error on uniform_subgrid(f, m) for
/// every stride m in [1, N-1], then enforces monotonicity by running maximum.
/// Raw errors at or below 1e-12 are floored to exactly zero so that exactly
/// recoverable functions (e.g. affine under a family containing the linear
/// method) yield an identically zero curve.
/// Requires a normalized f with N >= 3.
DeltaCurve delta_curve(const SampledFunction& f,
                       const std::vector<ApproximationMethod>& family,
                       const ErrorNorm& norm, unsigned threads = 1);

/// Smallest tabulated h with delta(h) > eps; 1 when no tabulated delta
/// exceeds eps (the empty-set branch of the spacing functional).
double h_star(const DeltaCurve& curve, double eps);

/// ln(N^k / floor(h_star*N)^k); throws DiscreteUndefined when floor(h_star*N)
/// is zero.
double discrete_complexity(double h_star, int n_points, int dim);

struct ComplexityValue {
    double epsilon = 0.0;
    double h_star = 1.0;
    double s = 0.0;    // ln(1/h_star)
    double s_n = 0.0;  // discrete variant
    int n_points = 0;
    int dim = 1;
    bool coarse_grid_warning = false;  // floor(h_star*N) < 10
};

/// Individual complexity of f at error level eps under the given family.
ComplexityValue complexity_at(const SampledFunction& f, double eps,
                              const std::vector<ApproximationMethod>& family,
                              const ErrorNorm& norm, unsigned threads = 1);

struct ConvergenceRow {
    int n_points = 0;
    double s_n = 0.0;
    double gap = 0.0;  // |s_n - s at the largest N|
};

/// Samples the generator at each N in the increasing `n_list` (length >= 3)
/// and reports |s_n - s_ref| where s_ref is the continuous-style complexity
/// at the largest N.
std::vector<ConvergenceRow> convergence_check(const GeneratorSpec& spec, double eps,
                                              const std::vector<int>& n_list,
                                              const std::vector<ApproximationMethod>& family,
                                              const ErrorNorm& norm,
                                              unsigned threads = 1);

}  // namespace epsicomp

#endif
