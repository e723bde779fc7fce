#include "epsicomp/individual_complexity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "epsicomp/parallel.hpp"

namespace epsicomp {

namespace {

// Noise floor shared with the coefficient fit: errors this small mean the
// function was recovered exactly up to rounding.
constexpr double kZeroFloor = 1e-12;

}  // namespace

DeltaCurve delta_curve(const SampledFunction& f,
                       const std::vector<ApproximationMethod>& family,
                       const ErrorNorm& norm, unsigned threads) {
    if (!f.normalized()) throw InvalidSpec("delta_curve expects a normalized function");
    const int n = f.points_per_axis();
    if (n < 3) throw InvalidSpec("delta_curve needs at least 3 points per axis");

    const int max_stride = n - 1;
    std::vector<double> raw(static_cast<std::size_t>(max_stride), 0.0);
    parallel_for(static_cast<std::size_t>(max_stride), threads,
                 [&](std::size_t begin, std::size_t end) {
                     for (std::size_t i = begin; i < end; ++i) {
                         const int stride = static_cast<int>(i) + 1;
                         const SubgridSelection kept = uniform_subgrid(f, stride);
                         raw[i] =
                             best_reconstruction(f, kept, family, norm).error;
                     }
                 });

    DeltaCurve curve;
    curve.points.reserve(raw.size());
    double running = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const double floored = raw[i] <= kZeroFloor ? 0.0 : raw[i];
        if (floored < running) curve.raw_violation = true;
        running = std::max(running, floored);
        DeltaPoint point;
        point.h = static_cast<double>(i + 1) / (n - 1);
        point.raw_delta = floored;
        point.delta = running;
        curve.points.push_back(point);
    }
    curve.monotone_enforced = true;
    return curve;
}

double h_star(const DeltaCurve& curve, double eps) {
    if (curve.points.empty() || !curve.monotone_enforced) {
        throw InvalidSpec("h_star needs a nonempty monotone-enforced curve");
    }
    if (eps < 0.0) throw InvalidSpec("eps must be nonnegative");
    for (const auto& point : curve.points) {
        if (point.delta > eps) return point.h;
    }
    return 1.0;
}

double discrete_complexity(double h_star, int n_points, int dim) {
    const double bracket = std::floor(h_star * n_points);
    if (bracket < 1.0) {
        throw DiscreteUndefined("floor(h* N) = 0 at N = " + std::to_string(n_points));
    }
    return dim * std::log(static_cast<double>(n_points) / bracket);
}

ComplexityValue complexity_at(const SampledFunction& f, double eps,
                              const std::vector<ApproximationMethod>& family,
                              const ErrorNorm& norm, unsigned threads) {
    const DeltaCurve curve = delta_curve(f, family, norm, threads);
    ComplexityValue out;
    out.epsilon = eps;
    out.h_star = h_star(curve, eps);
    out.s = std::log(1.0 / out.h_star);
    out.s_n = discrete_complexity(out.h_star, f.points_per_axis(), f.dim());
    out.n_points = f.points_per_axis();
    out.dim = f.dim();
    out.coarse_grid_warning = std::floor(out.h_star * f.points_per_axis()) < 10.0;
    return out;
}

std::vector<ConvergenceRow> convergence_check(const GeneratorSpec& spec, double eps,
                                              const std::vector<int>& n_list,
                                              const std::vector<ApproximationMethod>& family,
                                              const ErrorNorm& norm, unsigned threads) {
    if (n_list.size() < 3) throw InvalidSpec("convergence check needs >= 3 sizes");
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1]) {
            throw InvalidSpec("n_list must be strictly increasing");
        }
    }

    std::vector<ComplexityValue> values;
    values.reserve(n_list.size());
    for (int n : n_list) {
        const SampledFunction f = normalize(generate(spec, n));
        values.push_back(complexity_at(f, eps, family, norm, threads));
    }
    const double s_ref = values.back().s;

    std::vector<ConvergenceRow> rows;
    rows.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        ConvergenceRow row;
        row.n_points = n_list[i];
        row.s_n = values[i].s_n;
        row.gap = std::fabs(values[i].s_n - s_ref);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace epsicomp
