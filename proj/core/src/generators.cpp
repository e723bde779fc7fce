#include "epsicomp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "epsicomp/rng.hpp"

namespace epsicomp {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

std::vector<double> sample_weierstrass(double a, int b, int terms, int n) {
    // sum_{m=0}^{terms-1} a^m cos(b^m pi t); truncation tail a^terms/(1-a).
    std::vector<double> values(static_cast<std::size_t>(n), 0.0);
    const double spacing = 1.0 / (n - 1);
    double amplitude = 1.0;
    double frequency = kPi;
    for (int m = 0; m < terms; ++m) {
        for (int i = 0; i < n; ++i) {
            values[static_cast<std::size_t>(i)] +=
                amplitude * std::cos(frequency * (i * spacing));
        }
        amplitude *= a;
        frequency *= b;
    }
    return values;
}

std::vector<double> sample_fbm_midpoint(double hurst, std::uint64_t seed, int n) {
    // Midpoint displacement on the dyadic grid 2^levels + 1 >= n, then linear
    // resampling onto the requested grid. Displacement scale at level l is
    // sigma0 * 2^(-H*l), so the variance shrinks as 2^(-2H*l).
    int levels = 0;
    while ((1 << levels) < n - 1) ++levels;
    const std::size_t dyadic = (std::size_t{1} << levels) + 1;

    Rng rng(mix_seed(seed, 0x66626d00ULL));
    std::vector<double> path(dyadic, 0.0);
    path[0] = 0.0;
    path[dyadic - 1] = rng.next_gaussian();
    const double sigma0 = std::sqrt(1.0 - std::pow(2.0, 2.0 * hurst - 2.0));
    for (int level = 1; level <= levels; ++level) {
        const std::size_t step = std::size_t{1} << (levels - level + 1);
        const double scale = sigma0 * std::pow(2.0, -hurst * level);
        for (std::size_t left = 0; left + step < dyadic; left += step) {
            const std::size_t mid = left + step / 2;
            path[mid] = 0.5 * (path[left] + path[left + step]) +
                        scale * rng.next_gaussian();
        }
    }

    if (dyadic == static_cast<std::size_t>(n)) return path;
    std::vector<double> values(static_cast<std::size_t>(n));
    const double stretch = static_cast<double>(dyadic - 1) / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double pos = i * stretch;
        const std::size_t lo = std::min(static_cast<std::size_t>(pos), dyadic - 2);
        const double w = pos - static_cast<double>(lo);
        values[static_cast<std::size_t>(i)] = path[lo] * (1.0 - w) + path[lo + 1] * w;
    }
    return values;
}

}  // namespace

GeneratorSpec GeneratorSpec::affine(double slope, double intercept, int n) {
    GeneratorSpec s;
    s.kind = Kind::Affine;
    s.slope = slope;
    s.intercept = intercept;
    s.n_points = n;
    return s;
}

GeneratorSpec GeneratorSpec::polynomial(std::vector<double> coeffs, int n) {
    GeneratorSpec s;
    s.kind = Kind::Polynomial;
    s.coeffs = std::move(coeffs);
    s.n_points = n;
    return s;
}

GeneratorSpec GeneratorSpec::sine(double freq, int n) {
    GeneratorSpec s;
    s.kind = Kind::Sine;
    s.freq = freq;
    s.n_points = n;
    return s;
}

GeneratorSpec GeneratorSpec::weierstrass(double a, int b, int terms, int n) {
    GeneratorSpec s;
    s.kind = Kind::Weierstrass;
    s.w_a = a;
    s.w_b = b;
    s.terms = terms;
    s.n_points = n;
    return s;
}

GeneratorSpec GeneratorSpec::fbm_midpoint(double hurst, std::uint64_t seed, int n) {
    GeneratorSpec s;
    s.kind = Kind::FbmMidpoint;
    s.hurst = hurst;
    s.seed = seed;
    s.n_points = n;
    return s;
}

GeneratorSpec GeneratorSpec::logistic_map(double r, double x0, int n) {
    GeneratorSpec s;
    s.kind = Kind::LogisticMap;
    s.r = r;
    s.x0 = x0;
    s.n_points = n;
    return s;
}

SampledFunction generate(const GeneratorSpec& spec) {
    const int n = spec.n_points;
    if (n < 2) throw InvalidSpec("generator needs n_points >= 2");
    const double spacing = 1.0 / (n - 1);
    std::vector<double> values(static_cast<std::size_t>(n));

    switch (spec.kind) {
        case GeneratorSpec::Kind::Affine:
            for (int i = 0; i < n; ++i) {
                values[static_cast<std::size_t>(i)] =
                    spec.slope * (i * spacing) + spec.intercept;
            }
            break;
        case GeneratorSpec::Kind::Polynomial: {
            if (spec.coeffs.empty()) throw InvalidSpec("polynomial needs coefficients");
            for (int i = 0; i < n; ++i) {
                const double t = i * spacing;
                double acc = 0.0;
                for (std::size_t c = spec.coeffs.size(); c-- > 0;) {
                    acc = acc * t + spec.coeffs[c];
                }
                values[static_cast<std::size_t>(i)] = acc;
            }
            break;
        }
        case GeneratorSpec::Kind::Sine:
            for (int i = 0; i < n; ++i) {
                values[static_cast<std::size_t>(i)] =
                    std::sin(2.0 * kPi * spec.freq * (i * spacing));
            }
            break;
        case GeneratorSpec::Kind::Weierstrass: {
            if (!(spec.w_a > 0.0 && spec.w_a < 1.0)) {
                throw InvalidSpec("Weierstrass amplitude must lie in (0, 1)");
            }
            if (spec.w_b < 3 || spec.w_b % 2 == 0) {
                throw InvalidSpec("Weierstrass base must be an odd integer >= 3");
            }
            const double needed = std::log(1e12) / std::log(1.0 / spec.w_a);
            if (spec.terms < 1 || static_cast<double>(spec.terms) < needed) {
                throw InvalidSpec("Weierstrass truncation at " + std::to_string(spec.terms) +
                                  " terms leaves a tail above 1e-12; need >= " +
                                  std::to_string(static_cast<int>(std::ceil(needed))));
            }
            values = sample_weierstrass(spec.w_a, spec.w_b, spec.terms, n);
            break;
        }
        case GeneratorSpec::Kind::FbmMidpoint:
            if (!(spec.hurst > 0.0 && spec.hurst < 1.0)) {
                throw InvalidSpec("Hurst exponent must lie in (0, 1)");
            }
            values = sample_fbm_midpoint(spec.hurst, spec.seed, n);
            break;
        case GeneratorSpec::Kind::LogisticMap: {
            if (!(spec.r > 0.0 && spec.r <= 4.0)) {
                throw InvalidSpec("logistic parameter r must lie in (0, 4]");
            }
            if (!(spec.x0 > 0.0 && spec.x0 < 1.0)) {
                throw InvalidSpec("logistic x0 must lie in (0, 1)");
            }
            double x = spec.x0;
            for (int i = 0; i < n; ++i) {
                values[static_cast<std::size_t>(i)] = x;
                x = spec.r * x * (1.0 - x);
            }
            break;
        }
    }
    return SampledFunction(1, n, std::move(values));
}

SampledFunction generate(const GeneratorSpec& spec, int n_points) {
    GeneratorSpec copy = spec;
    copy.n_points = n_points;
    return generate(copy);
}

std::optional<double> nominal_holder_exponent(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorSpec::Kind::Affine:
        case GeneratorSpec::Kind::Polynomial:
        case GeneratorSpec::Kind::Sine:
            return 1.0;
        case GeneratorSpec::Kind::Weierstrass:
            return std::log(1.0 / spec.w_a) / std::log(static_cast<double>(spec.w_b));
        case GeneratorSpec::Kind::FbmMidpoint:
            return spec.hurst;  // nominal a.s. sample-path exponent
        case GeneratorSpec::Kind::LogisticMap:
            return std::nullopt;
    }
    return std::nullopt;
}

double empirical_holder_constant(const SampledFunction& f, double p) {
    if (f.dim() != 1) throw UnsupportedDimension("Holder scan is 1-d only");
    if (!(p > 0.0) || p > 1.0) throw InvalidSpec("exponent must lie in (0, 1]");
    const auto& v = f.values();
    const std::size_t n = v.size();
    const double spacing = f.grid_spacing();
    double constant = 0.0;
    for (std::size_t lag = 1; lag < n; ++lag) {
        const double denom = std::pow(lag * spacing, p);
        double jump = 0.0;
        for (std::size_t i = 0; i + lag < n; ++i) {
            jump = std::max(jump, std::fabs(v[i + lag] - v[i]));
        }
        constant = std::max(constant, jump / denom);
    }
    return constant;
}

}  // namespace epsicomp
