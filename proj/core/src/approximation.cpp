#include "epsicomp/approximation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace epsicomp {

namespace {

// ---------------------------------------------------------------------------
// 1-d kernels. Kept nodes are given as sorted indices; coordinates are the
// node indices themselves (the uniform grid makes the scale irrelevant).
// ---------------------------------------------------------------------------

std::vector<double> nearest_neighbor_1d(const std::vector<double>& values,
                                        const std::vector<std::size_t>& kept) {
    const std::size_t n = values.size();
    std::vector<double> out(n);
    std::size_t s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        while (s + 1 < kept.size() && kept[s + 1] <= j) ++s;
        if (s + 1 == kept.size() || j <= kept[s]) {
            out[j] = values[kept[s]];
            continue;
        }
        const std::size_t left = j - kept[s];
        const std::size_t right = kept[s + 1] - j;
        // Ties go to the lower index.
        out[j] = left <= right ? values[kept[s]] : values[kept[s + 1]];
    }
    return out;
}

std::vector<double> piecewise_linear_1d(const std::vector<double>& values,
                                        const std::vector<std::size_t>& kept) {
    const std::size_t n = values.size();
    std::vector<double> out(n);
    std::size_t s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        while (s + 1 < kept.size() && kept[s + 1] < j) ++s;
        if (j <= kept.front()) {
            out[j] = values[kept.front()];
            continue;
        }
        if (j >= kept.back()) {
            out[j] = values[kept.back()];
            continue;
        }
        const std::size_t a = kept[s];
        const std::size_t b = kept[s + 1];
        if (j == a) {
            out[j] = values[a];
            continue;
        }
        const double w = static_cast<double>(j - a) / static_cast<double>(b - a);
        out[j] = values[a] + w * (values[b] - values[a]);
    }
    return out;
}

// Natural cubic spline on non-uniform kept nodes: second derivatives from the
// standard tridiagonal system, zero curvature at both ends.
std::vector<double> cubic_spline_1d(const std::vector<double>& values,
                                    const std::vector<std::size_t>& kept) {
    const std::size_t n = values.size();
    const std::size_t m = kept.size();
    if (m == 2) return piecewise_linear_1d(values, kept);

    std::vector<double> x(m), y(m);
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = static_cast<double>(kept[i]);
        y[i] = values[kept[i]];
    }

    std::vector<double> second(m, 0.0);
    // Thomas solve over the interior unknowns.
    std::vector<double> diag(m, 0.0), upper(m, 0.0), rhs(m, 0.0);
    for (std::size_t i = 1; i + 1 < m; ++i) {
        const double h_lo = x[i] - x[i - 1];
        const double h_hi = x[i + 1] - x[i];
        diag[i] = 2.0 * (h_lo + h_hi);
        upper[i] = h_hi;
        rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h_hi - (y[i] - y[i - 1]) / h_lo);
    }
    for (std::size_t i = 2; i + 1 < m; ++i) {
        const double lower = x[i] - x[i - 1];
        const double factor = lower / diag[i - 1];
        diag[i] -= factor * upper[i - 1];
        rhs[i] -= factor * rhs[i - 1];
    }
    for (std::size_t i = m - 2; i >= 1; --i) {
        second[i] = (rhs[i] - upper[i] * second[i + 1]) / diag[i];
        if (i == 1) break;
    }

    std::vector<double> out(n);
    std::size_t s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j <= kept.front()) {
            out[j] = values[kept.front()];
            continue;
        }
        if (j >= kept.back()) {
            out[j] = values[kept.back()];
            continue;
        }
        while (s + 1 < m && x[s + 1] < static_cast<double>(j)) ++s;
        const double h = x[s + 1] - x[s];
        const double a = (x[s + 1] - static_cast<double>(j)) / h;
        const double b = (static_cast<double>(j) - x[s]) / h;
        out[j] = a * y[s] + b * y[s + 1] +
                 ((a * a * a - a) * second[s] + (b * b * b - b) * second[s + 1]) *
                     (h * h) / 6.0;
    }
    return out;
}

std::vector<double> polynomial_lsq_1d(const std::vector<double>& values,
                                      const std::vector<std::size_t>& kept,
                                      int degree) {
    const std::size_t n = values.size();
    const std::size_t m = kept.size();
    const int cols = degree + 1;

    // Map node index to [-1, 1] for conditioning.
    const double span = static_cast<double>(n - 1);
    auto scaled = [span](std::size_t idx) {
        return 2.0 * static_cast<double>(idx) / span - 1.0;
    };

    Eigen::MatrixXd design(static_cast<Eigen::Index>(m), cols);
    Eigen::VectorXd target(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const double u = scaled(kept[i]);
        double pw = 1.0;
        for (int c = 0; c < cols; ++c) {
            design(static_cast<Eigen::Index>(i), c) = pw;
            pw *= u;
        }
        target(static_cast<Eigen::Index>(i)) = values[kept[i]];
    }
    const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(target);

    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double u = scaled(j);
        double acc = coef(cols - 1);
        for (int c = cols - 2; c >= 0; --c) acc = acc * u + coef(c);
        out[j] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// 2-d kernels.
// ---------------------------------------------------------------------------

std::vector<double> nearest_neighbor_2d(const std::vector<double>& values,
                                        const std::vector<std::size_t>& kept, int n) {
    std::vector<double> out(values.size());
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t j = 0; j < values.size(); ++j) {
        const double r0 = static_cast<double>(j / un);
        const double r1 = static_cast<double>(j % un);
        double best = std::numeric_limits<double>::infinity();
        std::size_t pick = kept.front();
        for (std::size_t idx : kept) {
            const double d0 = static_cast<double>(idx / un) - r0;
            const double d1 = static_cast<double>(idx % un) - r1;
            const double dist = d0 * d0 + d1 * d1;
            if (dist < best) {  // ties keep the lower flat index
                best = dist;
                pick = idx;
            }
        }
        out[j] = values[pick];
    }
    return out;
}

// The kept set must factor as rows x cols for multilinear interpolation.
bool product_axes(const std::vector<std::size_t>& kept, int n,
                  std::vector<int>& axis0, std::vector<int>& axis1) {
    axis0.clear();
    axis1.clear();
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t idx : kept) {
        const int i0 = static_cast<int>(idx / un);
        const int i1 = static_cast<int>(idx % un);
        if (axis0.empty() || axis0.back() != i0) axis0.push_back(i0);
        if (axis0.size() == 1) axis1.push_back(i1);
    }
    if (axis0.size() * axis1.size() != kept.size()) return false;
    std::size_t pos = 0;
    for (int i0 : axis0) {
        for (int i1 : axis1) {
            const std::size_t expect = static_cast<std::size_t>(i0) * un +
                                       static_cast<std::size_t>(i1);
            if (kept[pos++] != expect) return false;
        }
    }
    return true;
}

std::vector<double> multilinear_2d(const std::vector<double>& values,
                                   const std::vector<int>& axis0,
                                   const std::vector<int>& axis1, int n) {
    const auto un = static_cast<std::size_t>(n);
    auto bracket = [](const std::vector<int>& axis, int i, std::size_t& lo) {
        while (lo + 1 < axis.size() && axis[lo + 1] < i) ++lo;
    };
    auto clampi = [](const std::vector<int>& axis, int i) {
        return std::clamp(i, axis.front(), axis.back());
    };

    std::vector<double> out(values.size());
    std::size_t s0 = 0;
    for (int i0 = 0; i0 < n; ++i0) {
        const int c0 = clampi(axis0, i0);
        bracket(axis0, c0, s0);
        const int a0 = axis0[s0];
        const int b0 = axis0[std::min(s0 + 1, axis0.size() - 1)];
        const double w0 = b0 == a0 ? 0.0
                                   : (static_cast<double>(c0) - a0) /
                                         (static_cast<double>(b0) - a0);
        std::size_t s1 = 0;
        for (int i1 = 0; i1 < n; ++i1) {
            const int c1 = clampi(axis1, i1);
            bracket(axis1, c1, s1);
            const int a1 = axis1[s1];
            const int b1 = axis1[std::min(s1 + 1, axis1.size() - 1)];
            const double w1 = b1 == a1 ? 0.0
                                       : (static_cast<double>(c1) - a1) /
                                             (static_cast<double>(b1) - a1);
            auto at = [&](int r, int c) {
                return values[static_cast<std::size_t>(r) * un +
                              static_cast<std::size_t>(c)];
            };
            const double top = at(a0, a1) * (1.0 - w1) + at(a0, b1) * w1;
            const double bot = at(b0, a1) * (1.0 - w1) + at(b0, b1) * w1;
            out[static_cast<std::size_t>(i0) * un + static_cast<std::size_t>(i1)] =
                top * (1.0 - w0) + bot * w0;
        }
    }
    return out;
}

double discarded_error(const SampledFunction& f, const SubgridSelection& kept,
                       const std::vector<double>& predicted, const ErrorNorm& norm) {
    std::vector<double> truth, guess;
    truth.reserve(f.size() - kept.kept_indices.size());
    guess.reserve(truth.capacity());
    std::size_t next = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (next < kept.kept_indices.size() && kept.kept_indices[next] == j) {
            ++next;
            continue;
        }
        truth.push_back(f.values()[j]);
        guess.push_back(predicted[j]);
    }
    return error_between(truth, guess, norm);
}

}  // namespace

ApproximationMethod ApproximationMethod::polynomial_lsq(int degree) {
    if (degree < 1) throw InvalidSpec("polynomial degree must be >= 1");
    return {Kind::PolynomialLSQ, degree};
}

std::string ApproximationMethod::name() const {
    switch (kind) {
        case Kind::NearestNeighbor: return "nearest";
        case Kind::PiecewiseLinear: return "linear";
        case Kind::CubicSpline: return "spline";
        case Kind::PolynomialLSQ: return "poly" + std::to_string(degree);
    }
    return "unknown";
}

ApproximationMethod parse_method(const std::string& token) {
    if (token == "nearest") return ApproximationMethod::nearest_neighbor();
    if (token == "linear") return ApproximationMethod::piecewise_linear();
    if (token == "spline") return ApproximationMethod::cubic_spline();
    if (token.rfind("poly", 0) == 0 && token.size() > 4) {
        char* end = nullptr;
        const long degree = std::strtol(token.c_str() + 4, &end, 10);
        if (end != nullptr && *end == '\0' && degree >= 1) {
            return ApproximationMethod::polynomial_lsq(static_cast<int>(degree));
        }
    }
    throw InvalidSpec("unknown approximation method '" + token + "'");
}

std::vector<ApproximationMethod> default_family() {
    return {ApproximationMethod::piecewise_linear(), ApproximationMethod::cubic_spline(),
            ApproximationMethod::polynomial_lsq(2), ApproximationMethod::polynomial_lsq(5),
            ApproximationMethod::nearest_neighbor()};
}

ReconstructionResult reconstruct(const SampledFunction& f, const SubgridSelection& kept,
                                 const ApproximationMethod& method,
                                 const ErrorNorm& norm) {
    validate_selection(kept, f.size());
    const auto& indices = kept.kept_indices;
    if (indices.size() < 2) {
        throw TooFewPoints("reconstruction needs at least 2 retained nodes");
    }

    std::vector<double> predicted;
    switch (method.kind) {
        case ApproximationMethod::Kind::NearestNeighbor:
            if (f.dim() == 1) {
                predicted = nearest_neighbor_1d(f.values(), indices);
            } else if (f.dim() == 2) {
                predicted = nearest_neighbor_2d(f.values(), indices, f.points_per_axis());
            } else {
                throw UnsupportedDimension("nearest-neighbor supports dim 1 and 2");
            }
            break;
        case ApproximationMethod::Kind::PiecewiseLinear:
            if (f.dim() == 1) {
                predicted = piecewise_linear_1d(f.values(), indices);
            } else if (f.dim() == 2) {
                std::vector<int> axis0, axis1;
                if (!product_axes(indices, f.points_per_axis(), axis0, axis1)) {
                    throw UnsupportedSelection(
                        "multilinear interpolation needs a product-grid kept set");
                }
                predicted = multilinear_2d(f.values(), axis0, axis1, f.points_per_axis());
            } else {
                throw UnsupportedDimension("piecewise-linear supports dim 1 and 2");
            }
            break;
        case ApproximationMethod::Kind::CubicSpline:
            if (f.dim() != 1) throw UnsupportedDimension("cubic spline supports dim 1 only");
            predicted = cubic_spline_1d(f.values(), indices);
            break;
        case ApproximationMethod::Kind::PolynomialLSQ:
            if (f.dim() != 1) {
                throw UnsupportedDimension("polynomial least squares supports dim 1 only");
            }
            if (method.degree < 1) throw InvalidSpec("polynomial degree must be >= 1");
            if (indices.size() <= static_cast<std::size_t>(method.degree)) {
                throw TooFewPoints("degree " + std::to_string(method.degree) +
                                   " needs more than " + std::to_string(method.degree) +
                                   " retained nodes");
            }
            predicted = polynomial_lsq_1d(f.values(), indices, method.degree);
            break;
    }

    ReconstructionResult result;
    result.error = discarded_error(f, kept, predicted, norm);
    result.predicted = std::move(predicted);
    result.method = method;
    return result;
}

ReconstructionResult best_reconstruction(const SampledFunction& f,
                                         const SubgridSelection& kept,
                                         const std::vector<ApproximationMethod>& family,
                                         const ErrorNorm& norm) {
    if (family.empty()) throw InvalidSpec("approximation family must be nonempty");
    ReconstructionResult best;
    bool have_best = false;
    std::string failures;
    for (const auto& method : family) {
        try {
            ReconstructionResult candidate = reconstruct(f, kept, method, norm);
            // Strict comparison keeps the earliest method on ties.
            if (!have_best || candidate.error < best.error) {
                best = std::move(candidate);
                have_best = true;
            }
        } catch (const Error& err) {
            if (!failures.empty()) failures += "; ";
            failures += method.name() + ": " + err.what();
        }
    }
    if (!have_best) {
        throw AllMethodsFailed("every method failed: " + failures);
    }
    return best;
}

}  // namespace epsicomp
