#include "fracwave/acceptance.hpp"

#include "fracwave/core.hpp"
#include "fracwave/differint.hpp"
#include "fracwave/figures.hpp"
#include "fracwave/ftmult.hpp"
#include "fracwave/io.hpp"
#include "fracwave/spectral.hpp"
#include "fracwave/wave_uv.hpp"
#include "fracwave/wave_xt.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace fracwave {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

GridFunction sin_grid(double start, double step, std::size_t count) {
    return sample_grid([](double x) { return cplx(std::sin(x), 0.0); }, start, step, count);
}

ICPair sincos_ic(double lo, double hi, double h) {
    const auto n_neg = static_cast<std::size_t>(std::ceil(std::max(0.0, -lo) / h)) + 6;
    const auto n_pos = static_cast<std::size_t>(std::ceil(std::max(0.0, hi) / h)) + 6;
    GridFunction g = sin_grid(-static_cast<double>(n_neg) * h, h, n_neg + n_pos + 1);
    GridFunction hh = sample_grid([](double x) { return cplx(std::cos(x), 0.0); },
                                  g.start, h, g.size());
    return ICPair(std::move(g), std::move(hh));
}

CriterionResult index_law(double ts) {
    CriterionResult r{1, "index-law composition", false, ""};
    const double tol = 1e-3 * ts;
    const auto t0 = std::chrono::steady_clock::now();
    const GridFunction f = sin_grid(0.0, 1e-3, 6284);
    const GridFunction two_step = frac_integral(frac_integral(f, Order(0.7)), Order(0.3));
    const GridFunction one_step = frac_integral(f, Order(1.0));
    double sup = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        sup = std::max(sup, std::abs(two_step.values[i] - one_step.values[i]));
    const double secs = seconds_since(t0);
    r.passed = sup < tol && secs < 2.0;
    r.detail = "sup_err=" + num(sup) + " (tol " + num(tol) + "), runtime=" + num(secs)
             + "s (budget 2s)";
    return r;
}

CriterionResult eigenrelation(double ts) {
    CriterionResult r{2, "spectral eigenrelation", false, ""};
    const double tol = 1e-12 * ts;
    FourierSpectrum s(1);
    s.ref_at(1) = cplx(1.0, 0.0);
    const FourierSpectrum d = frac_coeffs(s, Order(0.5));
    const cplx expected = cplx(std::sqrt(0.5), std::sqrt(0.5));
    const double err = std::abs(d.at(1) - expected);
    r.passed = err < tol;
    r.detail = "coeff_err=" + num(err) + " (tol " + num(tol) + ")";
    return r;
}

CriterionResult roundtrip(double ts) {
    CriterionResult r{3, "spectral roundtrip", false, ""};
    const double tol = 1e-10 * ts;
    const std::size_t m = 64;
    const double h = two_pi / static_cast<double>(m);
    const GridFunction f = sample_grid(
        [](double x) { return cplx(std::sin(x) + 0.5 * std::cos(3.0 * x), 0.0); }, 0.0, h, m);
    const FourierSpectrum s = analyze(f, 8);
    const FourierSpectrum back = frac_coeffs(frac_coeffs(s, Order(0.5)), Order(-0.5));
    double sq = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        sq += std::norm(synthesize(back, f.x(i)) - f.values[i]) * h;
    const double l2 = std::sqrt(sq);
    r.passed = l2 < tol;
    r.detail = "l2_err=" + num(l2) + " (tol " + num(tol) + ")";
    return r;
}

CriterionResult delta_pairing(double ts) {
    CriterionResult r{4, "delta-series pairing", false, ""};
    const double tol = 1e-10 * ts;
    const double x = 0.9;

    const std::size_t m1 = 64;
    const GridFunction phi1 = sin_grid(0.0, two_pi / static_cast<double>(m1), m1);
    double band_err = 0.0;
    for (int n : {1, 2, 4}) {
        const cplx paired = pair_delta_series(phi1, Order(0.5), n, x);
        const cplx route = synthesize(frac_coeffs(analyze(phi1, n), Order(0.5)), x);
        band_err = std::max(band_err, std::abs(paired - route));
    }

    const double q = 0.7;
    const std::size_t m2 = 512;
    const GridFunction phi2 = sample_grid(
        [&](double y) { return cplx(1.0 / (1.0 - 2.0 * q * std::cos(y) + q * q), 0.0); },
        0.0, two_pi / static_cast<double>(m2), m2);
    const double x2 = 0.7;
    cplx reference(0.0, 0.0);
    for (int n = 1; n <= 1200; ++n) {
        const double cn = std::pow(q, n) / (1.0 - q * q);
        const double nn = static_cast<double>(n);
        reference += cn * (cpow_branch(cplx(0.0, nn), 0.5) * std::polar(1.0, nn * x2)
                           + cpow_branch(cplx(0.0, -nn), 0.5) * std::polar(1.0, -nn * x2));
    }
    double errs[4] = {0, 0, 0, 0};
    const int ns[4] = {8, 16, 32, 64};
    for (int k = 0; k < 4; ++k)
        errs[k] = std::abs(pair_delta_series(phi2, Order(0.5), ns[k], x2) - reference);
    const bool shrinking = errs[1] < errs[0] && errs[2] < errs[1] && errs[3] < errs[2];

    r.passed = band_err < tol && shrinking;
    r.detail = "band_err=" + num(band_err) + " (tol " + num(tol) + "), tail_errs=["
             + num(errs[0]) + "," + num(errs[1]) + "," + num(errs[2]) + "," + num(errs[3])
             + "] each must shrink";
    return r;
}

CriterionResult transform_multiplier(double ts) {
    CriterionResult r{5, "transform multiplier", false, ""};
    const double tol_int = 1e-4 * ts;
    const double tol_frac = 5e-2 * ts;
    const auto t0 = std::chrono::steady_clock::now();

    const GridFunction f = sample_grid(
        [](double t) {
            const double s = t - 2.0;
            if (std::abs(s) >= 1.0)
                return cplx(0.0, 0.0);
            return cplx(std::exp(-1.0 / (1.0 - s * s)), 0.0);
        },
        0.0, 2e-3, 10001);
    std::vector<double> omegas;
    for (double w = 1.0; w <= 4.0 + 1e-12; w += 0.25)
        omegas.push_back(w);

    double e_int = 0.0;
    for (const auto& row : multiplier_check(f, Order(1.0), omegas))
        e_int = std::max(e_int, row.relerr);
    double e_frac = 0.0;
    for (const auto& row : multiplier_check(f, Order(0.5), omegas))
        e_frac = std::max(e_frac, row.relerr);
    const double secs = seconds_since(t0);

    r.passed = e_int < tol_int && e_frac < tol_frac && secs < 5.0;
    r.detail = "relerr_a1=" + num(e_int) + " (tol " + num(tol_int) + "), relerr_a05="
             + num(e_frac) + " (tol " + num(tol_frac) + "), runtime=" + num(secs)
             + "s (budget 5s)";
    return r;
}

CriterionResult laplacian_gap(double ts) {
    CriterionResult r{6, "laplacian symbol gap", false, ""};
    const double tol_eq = 1e-12 * ts;
    double min_gap = 1e300;
    for (double a : {0.25, 0.5, 0.75})
        for (double w : {1.0, -1.0, 2.0, -2.0}) {
            const auto lm = laplacian_multiplier_compare(w, Order(a));
            min_gap = std::min(min_gap, std::abs(lm.composed_mult - lm.modulus_mult));
        }
    double max_eq = 0.0;
    for (double w : {1.0, -1.0, 2.0, -2.0}) {
        const auto lm = laplacian_multiplier_compare(w, Order(1.0));
        max_eq = std::max(max_eq, std::abs(lm.composed_mult - lm.modulus_mult));
    }
    r.passed = min_gap > 1e-6 && max_eq < tol_eq;
    r.detail = "min_gap=" + num(min_gap) + " (must exceed 1e-06), integer_err=" + num(max_eq)
             + " (tol " + num(tol_eq) + ")";
    return r;
}

CriterionResult dalembert(double ts) {
    CriterionResult r{7, "dalembert limit", false, ""};
    const double tol = 1e-6 * ts;
    const Axis ax{0.0, 4.0 * pi / 100.0, 101};
    const double hi = ax.at(ax.count - 1) * 2.0;
    const UvSolver solver(Order(1.0), Order(1.0), sincos_ic(-hi, hi, 5e-4));
    double sup = 0.0;
    for (std::size_t i = 0; i < ax.count; ++i)
        for (std::size_t j = 0; j < ax.count; ++j) {
            const double x = ax.at(i);
            const double t = ax.at(j);
            const double u = x + t;
            const double v = x - t;
            // Independent oracle: g/h averages with the exact antiderivative of cos.
            const double oracle = 0.5 * (std::sin(u) + std::sin(v))
                                + 0.5 * (std::sin(u) - std::sin(v));
            const auto got = solver.at(x, t);
            if (!got)
                throw std::runtime_error("unexpected mask at integer orders");
            sup = std::max(sup, std::abs(*got - cplx(oracle, 0.0)));
        }
    r.passed = sup < tol;
    r.detail = "sup_err=" + num(sup) + " (tol " + num(tol) + ") on 101x101";
    return r;
}

CriterionResult ic_recovery(double ts) {
    CriterionResult r{8, "initial-condition recovery", false, ""};
    const double tol_g = 1e-4 * ts;
    const double tol_h = 1e-2 * ts;
    const double delta = 1e-3;
    double worst_g = 0.0;
    double worst_h = 0.0;
    for (auto [a, b] : {std::pair{0.75, 0.75}, std::pair{0.9, 0.6}}) {
        const UvSolver solver(Order(a), Order(b), sincos_ic(-12.0, 12.0, 1e-3));
        for (double x = 0.5; x <= 10.0 + 1e-12; x += 0.25) {
            const auto f0 = solver.at(x, 0.0);
            const auto fp = solver.at(x, delta);
            const auto fm = solver.at(x, -delta);
            if (!f0 || !fp || !fm)
                throw std::runtime_error("unexpected mask away from the cone boundary");
            worst_g = std::max(worst_g, std::abs(*f0 - cplx(std::sin(x), 0.0)));
            const cplx fd = (*fp - *fm) / (2.0 * delta);
            worst_h = std::max(worst_h, std::abs(fd - cplx(std::cos(x), 0.0)));
        }
    }
    r.passed = worst_g < tol_g && worst_h < tol_h;
    r.detail = "g_err=" + num(worst_g) + " (tol " + num(tol_g) + "), h_err=" + num(worst_h)
             + " (tol " + num(tol_h) + ")";
    return r;
}

CriterionResult eta_consistency(double ts) {
    CriterionResult r{9, "eta self-consistency", false, ""};
    const double tol_match = 1e-4 * ts;
    const double tol_res = 1e-3 * ts;
    const double h = 1e-3;
    const GridFunction g = sin_grid(0.0, h, 10001);
    const GridFunction hh = sample_grid([](double x) { return cplx(std::cos(x), 0.0); },
                                        0.0, h, 10001);
    const GridFunction dg = frac_derivative(g, Order(1.0));

    double worst_match = 0.0;
    double worst_res = 0.0;
    for (auto [a, b] : {std::pair{0.75, 0.75}, std::pair{0.9, 0.6}, std::pair{0.5, 0.8}}) {
        const UvSolver solver(Order(a), Order(b), ICPair(g, hh));
        const GridFunction& eta = solver.eta();
        const GridFunction march = eta_ode_oracle(Order(a), Order(b), g, hh);
        const std::size_t seed = 4;   // oracle starts at x = eps = 4h
        for (std::size_t k = 0; k < march.size(); ++k) {
            if (march.x(k) < 8.0 * h)
                continue;
            worst_match = std::max(worst_match,
                                   std::abs(eta.values[seed + k] - march.values[k]));
        }
        const double ca = a - b;
        const double cb = a + b - 2.0;
        for (std::size_t i = 8; i + 1 < g.size(); ++i) {
            const cplx deta = (eta.values[i + 1] - eta.values[i - 1]) / (2.0 * h);
            const cplx res = (3.0 - a - b) * eta.values[i] + g.x(i) * deta
                           - ca * dg.values[i] - cb * hh.values[i];
            worst_res = std::max(worst_res, std::abs(res));
        }
    }
    r.passed = worst_match < tol_match && worst_res < tol_res;
    r.detail = "ode_match=" + num(worst_match) + " (tol " + num(tol_match) + "), residual="
             + num(worst_res) + " (tol " + num(tol_res) + ")";
    return r;
}

CriterionResult light_cone(double ts) {
    CriterionResult r{10, "light-cone support", false, ""};
    (void)ts;   // both clauses are strict comparisons, not tolerances
    bool outside_zero = true;
    const double pts[][2] = {{1.0, 2.0}, {-0.5, 0.3}, {-1.0, -2.0}, {0.2, 0.5}, {-3.0, 1.0}};
    for (auto ab : {std::pair{0.5, 0.5}, std::pair{0.3, 0.8}})
        for (const auto& p : pts) {
            const auto v = fundamental_solution(Order(ab.first), Order(ab.second), p[0], p[1]);
            if (!v || *v != cplx(0.0, 0.0))
                outside_zero = false;
        }

    const Axis ax{0.0, 4.0 * pi / 80.0, 81};
    auto mean_re_below = [&](double a) {
        const Field2D f = sincos_field(Order(a), Order(a), ax, ax);
        double acc = 0.0;
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < ax.count; ++i)
            for (std::size_t j = 0; j < ax.count; ++j) {
                if (ax.at(i) >= ax.at(j) || f.masked(i, j))
                    continue;
                acc += std::abs(f.at(i, j).real());
                ++cnt;
            }
        return acc / static_cast<double>(cnt);
    };
    const double m_half = mean_re_below(0.5);
    const double m_three_q = mean_re_below(0.75);

    r.passed = outside_zero && m_half < m_three_q;
    r.detail = std::string("outside_cone_zero=") + (outside_zero ? "yes" : "no")
             + ", mean|Re| x<t: a=0.5 " + num(m_half) + " vs a=0.75 " + num(m_three_q)
             + " (must increase)";
    return r;
}

CriterionResult damping_law(double ts) {
    CriterionResult r{11, "damping amplitude law", false, ""};
    const double tol = 1e-10 * ts;
    double worst = 0.0;
    struct Case { double a, b; };
    for (const Case c : {Case{0.5, 1.0}, Case{1.5, 1.0}, Case{1.0, 1.0}}) {
        const double rr = c.a / c.b;
        const double cs = std::cos(rr * half_pi);
        const double sn = std::sin(rr * half_pi);
        for (double t = 0.0; t <= 3.0 + 1e-12; t += 0.5) {
            const double xstar = half_pi - sn * t;   // argmax of |sin(x + sn t)|
            const double amp = std::abs(sin_solution(Order(c.a), Order(c.b), xstar, t));
            const double law = std::exp(cs * t);
            worst = std::max(worst, std::abs(amp - law) / law);
        }
    }

    const Axis xax{0.0, two_pi / 128.0, 128};
    const Axis tax{0.0, 0.5, 7};
    auto amps = [&](double a, double b) {
        const Field2D f = sin_field(Order(a), Order(b), xax, tax);
        std::vector<double> out(tax.count, 0.0);
        for (std::size_t j = 0; j < tax.count; ++j)
            for (std::size_t i = 0; i < xax.count; ++i)
                out[j] = std::max(out[j], std::abs(f.at(i, j)));
        return out;
    };
    const auto grow = amps(0.5, 1.0);
    const auto decay = amps(1.5, 1.0);
    const auto flat = amps(1.0, 1.0);
    bool trends = true;
    for (std::size_t j = 1; j < tax.count; ++j) {
        trends = trends && grow[j] > grow[j - 1] && decay[j] < decay[j - 1]
               && std::abs(flat[j] / flat[0] - 1.0) < 1e-3;
    }

    r.passed = worst < tol && trends;
    r.detail = "law_relerr=" + num(worst) + " (tol " + num(tol) + "), grid trends "
             + (trends ? "hold" : "violated");
    return r;
}

CriterionResult binomial_sum(double ts) {
    CriterionResult r{12, "binomial symbol sum", false, ""};
    const double tol = 1e-6 * ts;
    const BinomialCheck bc = binomial_operator_check(cplx(2.0, 0.0), cplx(1.0, 0.0),
                                                     Order(0.5), 40);
    const double root3 = std::sqrt(3.0);
    const double err = std::abs(bc.partial_sum - cplx(root3, 0.0)) / root3;
    r.passed = err < tol;
    r.detail = "relerr_vs_sqrt3=" + num(err) + " (tol " + num(tol) + ")";
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CriterionResult figure_determinism(double ts) {
    CriterionResult r{13, "figure determinism", false, ""};
    (void)ts;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const fs::path csv_a = dir / "fracwave_det_a.csv";
    const fs::path svg_a = dir / "fracwave_det_a.svg";
    const fs::path csv_b = dir / "fracwave_det_b.csv";
    const fs::path svg_b = dir / "fracwave_det_b.svg";

    {
        const Field2D f = figure_field(4);
        write_field_csv(csv_a.string(), f);
        write_field_svg(svg_a.string(), f);
    }
    {
        const Field2D f = figure_field(4);
        write_field_csv(csv_b.string(), f);
        write_field_svg(svg_b.string(), f);
    }
    const bool csv_same = slurp(csv_a) == slurp(csv_b);
    const bool svg_same = slurp(svg_a) == slurp(svg_b);
    std::error_code ec;
    for (const auto& p : {csv_a, svg_a, csv_b, svg_b})
        fs::remove(p, ec);

    r.passed = csv_same && svg_same;
    r.detail = std::string("csv ") + (csv_same ? "identical" : "differs") + ", svg "
             + (svg_same ? "identical" : "differs");
    return r;
}

using Check = CriterionResult (*)(double);

const std::vector<std::pair<Check, std::pair<int, const char*>>>& registry() {
    static const std::vector<std::pair<Check, std::pair<int, const char*>>> reg = {
        {index_law, {1, "index-law composition"}},
        {eigenrelation, {2, "spectral eigenrelation"}},
        {roundtrip, {3, "spectral roundtrip"}},
        {delta_pairing, {4, "delta-series pairing"}},
        {transform_multiplier, {5, "transform multiplier"}},
        {laplacian_gap, {6, "laplacian symbol gap"}},
        {dalembert, {7, "dalembert limit"}},
        {ic_recovery, {8, "initial-condition recovery"}},
        {eta_consistency, {9, "eta self-consistency"}},
        {light_cone, {10, "light-cone support"}},
        {damping_law, {11, "damping amplitude law"}},
        {binomial_sum, {12, "binomial symbol sum"}},
        {figure_determinism, {13, "figure determinism"}},
    };
    return reg;
}

} // namespace

std::vector<CriterionResult> run_acceptance(double tol_scale) {
    if (!(tol_scale > 0.0))
        throw std::invalid_argument("run_acceptance: tol_scale must be positive");
    std::vector<CriterionResult> out;
    for (const auto& [fn, meta] : registry()) {
        try {
            out.push_back(fn(tol_scale));
        } catch (const std::exception& e) {
            out.push_back(CriterionResult{meta.first, meta.second, false,
                                          std::string("exception: ") + e.what()});
        }
    }
    return out;
}

std::vector<std::pair<int, std::string>> acceptance_list() {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& [fn, meta] : registry())
        out.emplace_back(meta.first, meta.second);
    return out;
}

} // namespace fracwave
