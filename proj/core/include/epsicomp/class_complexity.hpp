#ifndef EPSICOMP_CLASS_COMPLEXITY_HPP
#define EPSICOMP_CLASS_COMPLEXITY_HPP

#include <utility>
#include <vector>

#include "epsicomp/errors.hpp"

namespace epsicomp {

/// A continuity modulus: either the Holder form w(h) = L*h^p with L > 0 and
/// 0 < p <= 1, or a table of (h, w) knots interpolated piecewise-linearly.
/// Tabulated knots start at (0,0), are strictly increasing in h and
/// nondecreasing in w; flat segments are allowed so the generalized inverse
/// min{h : w(h) = eps} stays meaningful.
class ModulusOfContinuity {
public:
    static ModulusOfContinuity holder(double constant, double exponent);
    static ModulusOfContinuity tabulated(std::vector<std::pair<double, double>> knots);

    bool is_holder() const { return is_holder_; }
    double holder_constant() const;
    double holder_exponent() const;
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }

private:
    ModulusOfContinuity() = default;

    bool is_holder_ = true;
    double constant_ = 1.0;
    double exponent_ = 1.0;
    std::vector<std::pair<double, double>> knots_;
};

/// A bounded set of functions with a common modulus: sup of norms `radius`
/// over the set, grid dimension `dim`.
struct ClassSpec {
    ModulusOfContinuity modulus;
    double radius = 1.0;
    int dim = 1;

    ClassSpec(ModulusOfContinuity m, double r, int k);
};

/// Coefficients of the affine law S_cl(eps) = a + b * ln(eps) for a Holder
/// class; b is always negative.
struct HolderCoefficients {
    double a = 0.0;
    double b = 0.0;
};

/// w(h). Tabulated moduli throw OutOfRange beyond the last knot.
double modulus_eval(const ModulusOfContinuity& modulus, double h);

/// Generalized inverse min{h : w(h) = eps}; on flat tabulated segments the
/// left endpoint is returned. Throws NotAttained when eps exceeds sup w.
double modulus_inverse(const ModulusOfContinuity& modulus, double eps);

/// Exact class complexity (1/R) * ln(sqrt(k) / (2 * w^{-1}(eps))).
/// Throws ErrorTooLarge when w^{-1}(eps) > sqrt(k)/2, i.e. a single cell
/// covering the cube already achieves error eps.
double class_complexity(const ClassSpec& spec, double eps);

/// The (a, b) pair with class_complexity(spec, eps) = a + b * ln(eps).
/// Requires a Holder modulus; throws NotHolder otherwise.
HolderCoefficients holder_coefficients(const ClassSpec& spec);

/// Brute-force minimax reconstruction error for one grid cell of spacing h:
/// max over a tau_resolution^k lattice inside the cell of
/// min over the 2^k vertices t_i of w(||tau - t_i||).
/// Converges to w(sqrt(k)*h/2) as the resolution grows. The lattice scan may
/// be partitioned across `threads`; the max-reduction makes the result
/// independent of the partitioning.
double minimax_cell_error_oracle(const ModulusOfContinuity& modulus, double h,
                                 int dim, int tau_resolution, unsigned threads = 1);

}  // namespace epsicomp

#endif
