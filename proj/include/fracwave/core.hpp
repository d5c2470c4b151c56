#pragma once

#include <complex>
#include <stdexcept>

namespace fracwave {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 6.28318530717958647693;
inline constexpr double half_pi = 1.57079632679489661923;
inline constexpr double sqrt_pi = 1.77245385090551602730;

/// Real differintegral order. Positive values differentiate, negative
/// values integrate; admissible ranges are documented per operation.
struct Order {
    double value = 0.0;

    Order() = default;
    explicit Order(double v);
};

/// A nonzero complex value carried together with its argument normalized
/// into the branch interval [-pi/2, 3*pi/2). The cut runs along the
/// negative imaginary axis; the lower end is closed so points on the cut
/// get arg = -pi/2.
struct BranchedComplex {
    double re = 0.0;
    double im = 0.0;
    double arg = 0.0;

    explicit BranchedComplex(cplx z);
    cplx value() const { return {re, im}; }
};

/// Argument of z normalized into [-pi/2, 3*pi/2). z must be nonzero.
double branch_arg(cplx z);

/// Gamma function, accurate to >= 12 significant digits on [-170, 170]
/// away from the poles. Throws std::domain_error at non-positive integers
/// and std::overflow_error once |Gamma(x)| leaves double range.
double gamma(double x);

/// Reciprocal gamma, entire: exactly 0 at x in {0, -1, -2, ...}. Total on
/// finite reals; magnitudes beyond double range saturate to +-inf.
double recip_gamma(double x);

/// z^p on the branch with arg(z) in [-pi/2, 3*pi/2). cpow_branch(0, p) = 0
/// for p > 0; z = 0 with p <= 0 throws std::domain_error.
cplx cpow_branch(cplx z, double p);

/// Heaviside step with H(0) = 1/2 (symmetric-limit convention, fixed here
/// as a tested constant).
double heaviside(double x);

} // namespace fracwave
