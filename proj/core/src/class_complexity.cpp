#include "epsicomp/class_complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

namespace epsicomp {

ModulusOfContinuity ModulusOfContinuity::holder(double constant, double exponent) {
    if (!(constant > 0.0)) throw InvalidSpec("Holder constant must be positive");
    if (!(exponent > 0.0) || exponent > 1.0) {
        throw InvalidSpec("Holder exponent must lie in (0, 1]");
    }
    ModulusOfContinuity m;
    m.is_holder_ = true;
    m.constant_ = constant;
    m.exponent_ = exponent;
    return m;
}

ModulusOfContinuity ModulusOfContinuity::tabulated(
    std::vector<std::pair<double, double>> knots) {
    if (knots.size() < 2) throw InvalidSpec("tabulated modulus needs at least 2 knots");
    if (knots.front().first != 0.0 || knots.front().second != 0.0) {
        throw InvalidSpec("tabulated modulus must start at (0, 0)");
    }
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i].first > knots[i - 1].first)) {
            throw InvalidSpec("tabulated knots must be strictly increasing in h");
        }
        if (knots[i].second < knots[i - 1].second) {
            throw InvalidSpec("tabulated knots must be nondecreasing in w");
        }
    }
    ModulusOfContinuity m;
    m.is_holder_ = false;
    m.knots_ = std::move(knots);
    return m;
}

double ModulusOfContinuity::holder_constant() const {
    if (!is_holder_) throw NotHolder("modulus is tabulated");
    return constant_;
}

double ModulusOfContinuity::holder_exponent() const {
    if (!is_holder_) throw NotHolder("modulus is tabulated");
    return exponent_;
}

ClassSpec::ClassSpec(ModulusOfContinuity m, double r, int k)
    : modulus(std::move(m)), radius(r), dim(k) {
    if (!(radius > 0.0)) throw InvalidSpec("class radius must be positive");
    if (dim < 1) throw InvalidSpec("class dimension must be >= 1");
}

double modulus_eval(const ModulusOfContinuity& modulus, double h) {
    if (h < 0.0) throw InvalidSpec("modulus argument must be nonnegative");
    if (h == 0.0) return 0.0;
    if (modulus.is_holder()) {
        return modulus.holder_constant() * std::pow(h, modulus.holder_exponent());
    }
    const auto& knots = modulus.knots();
    if (h > knots.back().first) {
        throw OutOfRange("modulus queried at h = " + std::to_string(h) +
                         " beyond last knot " + std::to_string(knots.back().first));
    }
    auto it = std::lower_bound(
        knots.begin(), knots.end(), h,
        [](const std::pair<double, double>& knot, double x) { return knot.first < x; });
    if (it->first == h) return it->second;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (h - lo.first) / (hi.first - lo.first);
    return lo.second + w * (hi.second - lo.second);
}

double modulus_inverse(const ModulusOfContinuity& modulus, double eps) {
    if (!(eps > 0.0)) throw InvalidSpec("modulus inverse requires eps > 0");
    if (modulus.is_holder()) {
        return std::pow(eps / modulus.holder_constant(),
                        1.0 / modulus.holder_exponent());
    }
    const auto& knots = modulus.knots();
    if (eps > knots.back().second) {
        throw NotAttained("eps = " + std::to_string(eps) + " exceeds sup w = " +
                          std::to_string(knots.back().second));
    }
    // First segment whose right value reaches eps; the left-most solution on a
    // flat run is its left endpoint.
    for (std::size_t i = 1; i < knots.size(); ++i) {
        const auto& lo = knots[i - 1];
        const auto& hi = knots[i];
        if (hi.second < eps) continue;
        if (lo.second >= eps) return lo.first;
        const double w = (eps - lo.second) / (hi.second - lo.second);
        return lo.first + w * (hi.first - lo.first);
    }
    return knots.back().first;  // unreachable given the range check
}

double class_complexity(const ClassSpec& spec, double eps) {
    const double inv = modulus_inverse(spec.modulus, eps);
    const double half_diagonal = std::sqrt(static_cast<double>(spec.dim)) / 2.0;
    if (inv > half_diagonal) {
        throw ErrorTooLarge("w^{-1}(eps) = " + std::to_string(inv) +
                            " exceeds sqrt(k)/2 = " + std::to_string(half_diagonal));
    }
    return std::log(half_diagonal / inv) / spec.radius;
}

HolderCoefficients holder_coefficients(const ClassSpec& spec) {
    if (!spec.modulus.is_holder()) {
        throw NotHolder("coefficients are defined for Holder moduli only");
    }
    const double constant = spec.modulus.holder_constant();
    const double exponent = spec.modulus.holder_exponent();
    const double half_diagonal = std::sqrt(static_cast<double>(spec.dim)) / 2.0;
    HolderCoefficients out;
    out.a = (std::log(half_diagonal) + std::log(constant) / exponent) / spec.radius;
    out.b = -1.0 / (exponent * spec.radius);
    return out;
}

double minimax_cell_error_oracle(const ModulusOfContinuity& modulus, double h,
                                 int dim, int tau_resolution, unsigned threads) {
    if (!(h > 0.0) || h > 1.0) throw InvalidSpec("cell spacing must lie in (0, 1]");
    if (dim < 1) throw InvalidSpec("dimension must be >= 1");
    if (tau_resolution < 2) throw InvalidSpec("tau resolution must be >= 2");

    const std::size_t res = static_cast<std::size_t>(tau_resolution);
    const std::size_t k = static_cast<std::size_t>(dim);
    const std::size_t vertex_count = std::size_t{1} << k;
    std::size_t lattice = 1;
    for (std::size_t d = 0; d < k; ++d) lattice *= res;

    // phi(tau) = min over cell vertices of w(||tau - vertex||); the proof's
    // worst case has all vertex values equal, so phi is the cell error.
    auto scan_range = [&](std::size_t begin, std::size_t end) {
        double best = 0.0;
        std::vector<std::size_t> digit(k, 0);
        std::vector<double> tau(k, 0.0);
        for (std::size_t flat = begin; flat < end; ++flat) {
            std::size_t rest = flat;
            for (std::size_t d = k; d-- > 0;) {
                digit[d] = rest % res;
                rest /= res;
            }
            for (std::size_t d = 0; d < k; ++d) {
                tau[d] = h * static_cast<double>(digit[d]) /
                         static_cast<double>(res - 1);
            }
            double nearest = std::numeric_limits<double>::infinity();
            for (std::size_t v = 0; v < vertex_count; ++v) {
                double dist2 = 0.0;
                for (std::size_t d = 0; d < k; ++d) {
                    const double coord = (v >> d) & 1u ? h : 0.0;
                    const double diff = tau[d] - coord;
                    dist2 += diff * diff;
                }
                nearest = std::min(nearest, dist2);
            }
            best = std::max(best, modulus_eval(modulus, std::sqrt(nearest)));
        }
        return best;
    };

    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), lattice);
    std::vector<double> partial_max(workers, 0.0);
    const std::size_t base = lattice / workers;
    const std::size_t extra = lattice % workers;
    if (workers == 1) {
        partial_max[0] = scan_range(0, lattice);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        std::size_t begin = 0;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t len = base + (w < extra ? 1 : 0);
            pool.emplace_back([&, w, begin, len] {
                partial_max[w] = scan_range(begin, begin + len);
            });
            begin += len;
        }
        for (auto& t : pool) t.join();
    }

    double result = 0.0;
    for (double m : partial_max) result = std::max(result, m);
    return result;
}

}  // namespace epsicomp
