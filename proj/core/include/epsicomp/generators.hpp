#ifndef EPSICOMP_GENERATORS_HPP
#define EPSICOMP_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "epsicomp/function_model.hpp"

namespace epsicomp {

/// Deterministic 1-d test-function generators spanning known Holder classes
/// (Weierstrass, fractional Brownian paths) and smooth/chaotic controls.
struct GeneratorSpec {
    enum class Kind { Affine, Polynomial, Sine, Weierstrass, FbmMidpoint, LogisticMap };

    Kind kind = Kind::Affine;
    int n_points = 0;

    double slope = 1.0, intercept = 0.0;   // Affine
    std::vector<double> coeffs;            // Polynomial, ascending powers
    double freq = 1.0;                     // Sine
    double w_a = 0.5;                      // Weierstrass amplitude decay, in (0, 1)
    int w_b = 3;                           // Weierstrass frequency base, odd, >= 3
    int terms = 40;                        // Weierstrass truncation
    double hurst = 0.5;                    // FbmMidpoint, in (0, 1)
    std::uint64_t seed = 0;                // FbmMidpoint
    double r = 4.0, x0 = 0.2;              // LogisticMap

    static GeneratorSpec affine(double slope, double intercept, int n);
    static GeneratorSpec polynomial(std::vector<double> coeffs, int n);
    static GeneratorSpec sine(double freq, int n);
    static GeneratorSpec weierstrass(double a, int b, int terms, int n);
    static GeneratorSpec fbm_midpoint(double hurst, std::uint64_t seed, int n);
    static GeneratorSpec logistic_map(double r, double x0, int n);
};

/// Samples the spec on the uniform 1-d grid; deterministic given the spec
/// (including the seed). Throws InvalidSpec on parameter violations, in
/// particular when the Weierstrass truncation leaves a tail above 1e-12.
SampledFunction generate(const GeneratorSpec& spec);

/// Same function sampled at a different resolution.
SampledFunction generate(const GeneratorSpec& spec, int n_points);

/// Analytically known Holder exponent, where one exists:
/// Weierstrass -> ln(1/a)/ln(b); FbmMidpoint -> H; smooth kinds -> 1.
std::optional<double> nominal_holder_exponent(const GeneratorSpec& spec);

/// max over grid lags tau of max_t |x(t+tau) - x(t)| / tau^p: the empirical
/// Holder constant of the sample at exponent p.
double empirical_holder_constant(const SampledFunction& f, double p);

}  // namespace epsicomp

#endif
