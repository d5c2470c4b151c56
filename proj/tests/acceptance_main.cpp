#include "fracwave/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

// Standalone acceptance runner: one line per criterion, nonzero exit when
// any fails. --tol-scale S multiplies every error tolerance.
int main(int argc, char** argv) {
    double tol_scale = 1.0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--tol-scale") == 0 && i + 1 < argc) {
            char* end = nullptr;
            tol_scale = std::strtod(argv[++i], &end);
            if (end == argv[i] || *end != '\0' || !(tol_scale > 0.0)) {
                std::fprintf(stderr, "invalid --tol-scale value '%s'\n", argv[i]);
                return 2;
            }
        } else {
            std::fprintf(stderr, "usage: %s [--tol-scale S]\n", argv[0]);
            return 2;
        }
    }

    const auto results = fracwave::run_acceptance(tol_scale);
    int failed = 0;
    for (const auto& r : results) {
        std::printf("%2d\t%s\t%s\t%s\n", r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        if (!r.passed)
            ++failed;
    }
    std::printf("%zu/%zu criteria passed\n", results.size() - static_cast<std::size_t>(failed),
                results.size());
    return failed == 0 ? 0 : 1;
}
