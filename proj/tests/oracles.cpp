#include "oracles.hpp"

#include <cmath>

namespace oracles {

namespace {

using fracwave::cplx;
using Fn = std::function<cplx(double)>;

cplx simpson(double a, double b, cplx fa, cplx fm, cplx fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

cplx recurse(const Fn& f, double a, double b, cplx fa, cplx fm, cplx fb, cplx whole,
             double tol, int depth) {
    const double m = 0.5 * (a + b);
    const cplx fl = f(0.5 * (a + m));
    const cplx fr = f(0.5 * (m + b));
    const cplx left = simpson(a, m, fa, fl, fm);
    const cplx right = simpson(m, b, fm, fr, fb);
    const cplx delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return recurse(f, a, m, fa, fl, fm, left, tol * 0.5, depth - 1)
         + recurse(f, m, b, fm, fr, fb, right, tol * 0.5, depth - 1);
}

} // namespace

cplx adaptive_simpson(const Fn& f, double a, double b, double tol) {
    if (a == b)
        return {0.0, 0.0};
    const cplx fa = f(a);
    const cplx fb = f(b);
    const cplx fm = f(0.5 * (a + b));
    return recurse(f, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 40);
}

cplx rl_integral(const Fn& f, double alpha, double x, double tol) {
    const auto g = [&](double u) { return f(x - std::pow(u, 1.0 / alpha)); };
    const cplx raw = adaptive_simpson(g, 0.0, std::pow(x, alpha), tol);
    return raw / (alpha * std::tgamma(alpha));
}

} // namespace oracles
