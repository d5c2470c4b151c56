#include <CLI11.hpp>

#include "fracwave/acceptance.hpp"
#include "fracwave/core.hpp"
#include "fracwave/differint.hpp"
#include "fracwave/figures.hpp"
#include "fracwave/grid.hpp"
#include "fracwave/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>

namespace fw = fracwave;

namespace {

constexpr int exit_config = 2;
constexpr int exit_singular = 3;

void apply_thread_cap() {
#ifdef _OPENMP
    const char* env = std::getenv("FRACWAVE_THREADS");
    if (env == nullptr) return;
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1 || n > 4096) {
        std::cerr << "fracwave: ignoring FRACWAVE_THREADS=\"" << env
                  << "\" (want a positive integer)\n";
        return;
    }
    omp_set_num_threads(static_cast<int>(n));
#endif
}

std::function<fw::cplx(double)> builtin_function(const std::string& name) {
    if (name == "const") {
        return [](double) { return fw::cplx{1.0, 0.0}; };
    }
    if (name == "sin") {
        return [](double x) { return fw::cplx{std::sin(x), 0.0}; };
    }
    if (name == "bump") {
        // compactly supported on (1, 3)
        return [](double x) {
            const double u = x - 2.0;
            if (std::abs(u) >= 1.0) return fw::cplx{0.0, 0.0};
            return fw::cplx{std::exp(-1.0 / (1.0 - u * u)), 0.0};
        };
    }
    if (name == "exp") {
        return [](double x) { return std::exp(fw::cplx{0.0, x}); };
    }
    throw std::invalid_argument("unknown function \"" + name + "\"");
}

struct DifferintOptions {
    std::string fn = "sin";
    double alpha = 0.0;
    double x0 = 0.0;
    double x1 = fw::two_pi;
    double step = 1e-3;
    std::string out = "differint.csv";
};

int cmd_differint(const DifferintOptions& opt) {
    if (!std::isfinite(opt.alpha) || opt.alpha < -2.0 || opt.alpha > 4.0) {
        std::cerr << "fracwave: --alpha must lie in [-2, 4] (got " << opt.alpha << ")\n";
        return exit_config;
    }
    if (!std::isfinite(opt.step) || opt.step <= 0.0) {
        std::cerr << "fracwave: --step must be positive\n";
        return exit_config;
    }
    if (!std::isfinite(opt.x0) || !std::isfinite(opt.x1) || opt.x1 <= opt.x0) {
        std::cerr << "fracwave: need --x1 > --x0\n";
        return exit_config;
    }
    const double span = (opt.x1 - opt.x0) / opt.step;
    if (span > 2e7) {
        std::cerr << "fracwave: grid would exceed 2e7 samples; enlarge --step\n";
        return exit_config;
    }
    const auto count = static_cast<std::size_t>(std::llround(span)) + 1;
    if (count < 5) {
        std::cerr << "fracwave: grid too short (" << count << " samples); shrink --step\n";
        return exit_config;
    }

    const auto f = fw::sample_grid(builtin_function(opt.fn), opt.x0, opt.step, count);
    // the CLI order is the exponent of S^alpha, so the signed dispatch sees -alpha
    const auto result = fw::differint(f, fw::Order{-opt.alpha});
    for (const auto& v : result.values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            std::cerr << "fracwave: non-finite value in S^" << opt.alpha << " " << opt.fn
                      << "; aborting before write\n";
            return exit_singular;
        }
    }
    fw::write_grid_csv(opt.out, result);

    const fw::Order half{-opt.alpha / 2.0};
    const auto twice = fw::differint(fw::differint(f, half), half);
    double sup = 0.0;
    for (std::size_t i = 0; i < result.size(); ++i) {
        sup = std::max(sup, std::abs(twice.values[i] - result.values[i]));
    }

    const auto last = result.values.back();
    std::cout << "wrote " << opt.out << ": S^" << opt.alpha << " " << opt.fn << " on ["
              << fw::format_double(opt.x0) << ", " << fw::format_double(result.x_back())
              << "], " << result.size() << " rows, last value "
              << fw::format_double(last.real()) << (last.imag() < 0 ? "" : "+")
              << fw::format_double(last.imag()) << "i\n";
    std::cout << "index-law self-check (two half-order passes vs one): sup err "
              << fw::format_double(sup) << "\n";
    return 0;
}

struct FiguresOptions {
    int id = 0;
    std::string out;
    std::string format = "both";
};

int cmd_figures(const FiguresOptions& opt) {
    fw::FigurePreset preset;
    try {
        preset = fw::figure_preset(opt.id);
    } catch (const std::invalid_argument& e) {
        std::cerr << "fracwave: " << e.what() << "\n";
        return exit_config;
    }
    const std::string base = opt.out.empty() ? "figure" + std::to_string(opt.id) : opt.out;

    const auto field = fw::figure_field(opt.id);
    std::string wrote;
    if (opt.format != "svg") {
        fw::write_field_csv(base + ".csv", field);
        wrote += base + ".csv";
    }
    if (opt.format != "csv") {
        fw::write_field_svg(base + ".svg", field);
        if (!wrote.empty()) wrote += ", ";
        wrote += base + ".svg";
    }

    const char* kind = preset.kind == fw::FigurePreset::Kind::cone ? "cone" : "damped sine";
    std::cout << "figure " << opt.id << " (" << kind << ", alpha "
              << fw::format_double(preset.alpha) << ", beta " << fw::format_double(preset.beta)
              << "): wrote " << wrote << "\n";
    return 0;
}

struct VerifyOptions {
    double tol_scale = 1.0;
    bool list = false;
};

int cmd_verify(const VerifyOptions& opt) {
    if (opt.list) {
        for (const auto& [id, name] : fw::acceptance_list()) {
            std::cout << id << "\t" << name << "\n";
        }
        return 0;
    }
    if (!std::isfinite(opt.tol_scale) || opt.tol_scale <= 0.0) {
        std::cerr << "fracwave: --tol-scale must be positive\n";
        return exit_config;
    }

    const auto results = fw::run_acceptance(opt.tol_scale);
    int passed = 0;
    for (const auto& r : results) {
        std::cout << r.id << "\t" << (r.passed ? "PASS" : "FAIL") << "\t" << r.name << "\t"
                  << r.detail << "\n";
        if (r.passed) ++passed;
    }
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    apply_thread_cap();

    CLI::App app{"fractional differintegrals, spectral multipliers, and wave-field figures"};
    app.require_subcommand(1);

    DifferintOptions dopt;
    auto* di = app.add_subcommand("differint", "apply S^alpha to a built-in function, write CSV");
    di->add_option("--fn", dopt.fn, "built-in function: const | sin | bump | exp")
        ->check(CLI::IsMember({"const", "sin", "bump", "exp"}));
    di->add_option("--alpha", dopt.alpha,
                   "order of S^alpha in [-2, 4]; negative values differentiate")
        ->required();
    di->add_option("--x0", dopt.x0, "grid start (default 0)");
    di->add_option("--x1", dopt.x1, "grid end (default 2pi)");
    di->add_option("--step", dopt.step, "grid step (default 1e-3)");
    di->add_option("--out", dopt.out, "output CSV path (default differint.csv)");

    FiguresOptions fopt;
    auto* fg = app.add_subcommand("figures", "regenerate one stock figure field");
    fg->add_option("--id", fopt.id, "figure id, 1..7")->required();
    fg->add_option("--out", fopt.out, "output base path (default figure<id>)");
    fg->add_option("--format", fopt.format, "csv | svg | both (default both)")
        ->check(CLI::IsMember({"csv", "svg", "both"}));

    VerifyOptions vopt;
    auto* vf = app.add_subcommand("verify", "run the acceptance checks, print one line each");
    vf->add_flag("--list", vopt.list, "print criterion ids and names without running");
    vf->add_option("--tol-scale", vopt.tol_scale,
                   "multiply every error tolerance (0.01 means 100x stricter)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (di->parsed()) return cmd_differint(dopt);
        if (fg->parsed()) return cmd_figures(fopt);
        return cmd_verify(vopt);
    } catch (const std::domain_error& e) {
        std::cerr << "fracwave: numerical singularity: " << e.what() << "\n";
        return exit_singular;
    } catch (const std::overflow_error& e) {
        std::cerr << "fracwave: numerical singularity: " << e.what() << "\n";
        return exit_singular;
    } catch (const std::exception& e) {
        std::cerr << "fracwave: " << e.what() << "\n";
        return exit_config;
    }
}
