#include "epsicomp/function_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace epsicomp {

namespace {

std::size_t checked_grid_size(int dim, int points_per_axis) {
    std::size_t n = 1;
    for (int d = 0; d < dim; ++d) {
        n *= static_cast<std::size_t>(points_per_axis);
    }
    return n;
}

}  // namespace

SampledFunction::SampledFunction(int dim, int points_per_axis,
                                 std::vector<double> values, bool normalized)
    : dim_(dim), points_per_axis_(points_per_axis), values_(std::move(values)),
      normalized_(normalized) {
    if (dim_ < 1) throw InvalidSpec("grid dimension must be >= 1");
    if (points_per_axis_ < 2) throw InvalidSpec("need at least 2 points per axis");
    if (values_.size() != checked_grid_size(dim_, points_per_axis_)) {
        throw LengthMismatch("value count " + std::to_string(values_.size()) +
                             " does not match grid size N^k");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw InvalidSpec("sample values must be finite");
    }
}

ErrorNorm ErrorNorm::mean_power(double q) {
    if (!(q >= 1.0)) throw InvalidSpec("MeanPower norm requires q >= 1");
    return ErrorNorm{Kind::MeanPower, q};
}

void validate_selection(const SubgridSelection& sel, std::size_t size) {
    if (sel.kept_indices.empty()) throw InvalidSpec("selection keeps no nodes");
    std::size_t prev = sel.kept_indices.front();
    if (prev >= size) throw InvalidSpec("kept index out of range");
    for (std::size_t i = 1; i < sel.kept_indices.size(); ++i) {
        const std::size_t cur = sel.kept_indices[i];
        if (cur <= prev) throw InvalidSpec("kept indices must be strictly ascending");
        if (cur >= size) throw InvalidSpec("kept index out of range");
        prev = cur;
    }
}

SampledFunction normalize(const SampledFunction& f) {
    double max_abs = 0.0;
    for (double v : f.values()) max_abs = std::max(max_abs, std::fabs(v));
    if (max_abs == 0.0) {
        throw ZeroFunction("cannot normalize the zero function");
    }
    std::vector<double> scaled = f.values();
    for (double& v : scaled) v /= max_abs;
    return SampledFunction(f.dim(), f.points_per_axis(), std::move(scaled), true);
}

double error_between(std::span<const double> a, std::span<const double> b,
                     const ErrorNorm& norm) {
    if (a.size() != b.size()) {
        throw LengthMismatch("arrays differ in length: " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
    }
    if (a.empty()) return 0.0;
    if (norm.kind == ErrorNorm::Kind::Uniform) {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            worst = std::max(worst, std::fabs(a[i] - b[i]));
        }
        return worst;
    }
    if (!(norm.q >= 1.0)) throw InvalidSpec("MeanPower norm requires q >= 1");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::pow(std::fabs(a[i] - b[i]), norm.q);
    }
    return std::pow(acc / static_cast<double>(a.size()), 1.0 / norm.q);
}

SubgridSelection uniform_subgrid(const SampledFunction& f, int stride) {
    const int n = f.points_per_axis();
    if (stride < 1) throw InvalidSpec("stride must be positive");
    if (stride >= n) {
        throw StrideTooLarge("stride " + std::to_string(stride) +
                             " leaves fewer than 2 nodes on an axis of " +
                             std::to_string(n) + " points");
    }

    std::vector<int> axis_nodes;
    for (int i = 0; i < n; i += stride) axis_nodes.push_back(i);
    if (axis_nodes.back() != n - 1) axis_nodes.push_back(n - 1);

    const int k = f.dim();
    SubgridSelection sel;
    sel.scheme_id = stride;
    sel.kept_indices.reserve(static_cast<std::size_t>(
        std::pow(static_cast<double>(axis_nodes.size()), k)) + 1);

    // Odometer over the per-axis node lists; flat index is row-major by axis.
    std::vector<std::size_t> digit(static_cast<std::size_t>(k), 0);
    for (;;) {
        std::size_t flat = 0;
        for (int d = 0; d < k; ++d) {
            flat = flat * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(axis_nodes[digit[static_cast<std::size_t>(d)]]);
        }
        sel.kept_indices.push_back(flat);
        int d = k - 1;
        for (; d >= 0; --d) {
            auto& v = digit[static_cast<std::size_t>(d)];
            if (++v < axis_nodes.size()) break;
            v = 0;
        }
        if (d < 0) break;
    }
    std::sort(sel.kept_indices.begin(), sel.kept_indices.end());
    return sel;
}

}  // namespace epsicomp
