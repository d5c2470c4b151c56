#include <doctest.h>

#include "fracwave/wave_xt.hpp"

#include <cmath>
#include <utility>

using namespace fracwave;

TEST_CASE("branch enumeration of complex powers") {
    SUBCASE("the k = 0 branch is the declared principal value") {
        const cplx z(1.3, -0.4);
        const auto set = omega_powers(z, 0.37, -2, 2);
        CHECK(set.values.size() == 5);
        CHECK(set.at(0) == cpow_branch(z, 0.37));
    }
    SUBCASE("half powers of i alternate in sign across branches") {
        const auto set = omega_powers(cplx(0.0, 1.0), 0.5, -1, 1);
        const cplx principal = std::polar(1.0, pi / 4.0);
        CHECK(std::abs(set.at(0) - principal) < 1e-15);
        CHECK(std::abs(set.at(1) + principal) < 1e-15);
        CHECK(std::abs(set.at(-1) - std::polar(1.0, -3.0 * pi / 4.0)) < 1e-15);
    }
    SUBCASE("both square roots of -1 appear") {
        const auto set = omega_powers(cplx(-1.0, 0.0), 0.5, 0, 1);
        CHECK(std::abs(set.at(0) - cplx(0.0, 1.0)) < 1e-15);
        CHECK(std::abs(set.at(1) + cplx(0.0, 1.0)) < 1e-15);
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(omega_powers(cplx(0.0, 0.0), 0.5, 0, 1), std::domain_error);
        CHECK_THROWS_AS(omega_powers(cplx(1.0, 0.0), 0.5, 1, 0), std::invalid_argument);
        const auto set = omega_powers(cplx(0.0, 1.0), 0.5, 0, 1);
        CHECK_THROWS_AS(set.at(2), std::out_of_range);
    }
}

TEST_CASE("exponential eigenmodes") {
    SUBCASE("omega = i with orders 2 and 1 gives the damped plane wave") {
        const auto m = mode(cplx(0.0, 1.0), Order(2.0), Order(1.0), 0, 0, 0.7, 1.3);
        REQUIRE(m.has_value());
        const cplx want = std::exp(-1.3) * std::polar(1.0, 0.7);
        CHECK(std::abs(*m - want) < 1e-12);
    }
    SUBCASE("overflowing cells are signalled, large finite ones are not") {
        CHECK_FALSE(mode(cplx(2.0, 0.0), Order(1.0), Order(1.0), 0, 0, 0.0, 400.0).has_value());
        const auto big = mode(cplx(2.0, 0.0), Order(1.0), Order(1.0), 0, 0, 0.0, 340.0);
        REQUIRE(big.has_value());
        CHECK(std::isfinite(big->real()));
        CHECK(big->real() > 1e290);
    }
}

TEST_CASE("sine-data solution matches its real closed form") {
    for (auto [a, b] : {std::pair{0.5, 1.0}, std::pair{1.5, 1.0}, std::pair{1.0, 1.0},
                        std::pair{0.6, 0.8}}) {
        const double r = a / b;
        const double c = std::cos(r * half_pi);
        const double s = std::sin(r * half_pi);
        for (auto [x, t] : {std::pair{0.3, 0.8}, std::pair{2.0, 1.5}, std::pair{-1.2, 0.4}}) {
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(x);
            CAPTURE(t);
            const cplx got = sin_solution(Order(a), Order(b), x, t);
            const double want = std::exp(c * t) * std::sin(x + s * t);
            CHECK(std::abs(got.real() - want) < 1e-12 * (1.0 + std::abs(want)));
            CHECK(std::abs(got.imag()) < 1e-13 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("sine-data solution limits") {
    SUBCASE("equal orders travel undamped") {
        for (double x : {0.0, 1.1})
            CHECK(sin_solution(Order(1.0), Order(1.0), x, 0.9).real()
                  == doctest::Approx(std::sin(x + 0.9)).epsilon(1e-12));
    }
    SUBCASE("ratio 2 is pure exponential decay of a standing profile") {
        CHECK(sin_solution(Order(2.0), Order(1.0), 0.9, 2.0).real()
              == doctest::Approx(std::exp(-2.0) * std::sin(0.9)).epsilon(1e-12));
    }
    SUBCASE("amplitude beyond the double range throws") {
        CHECK_THROWS_AS(sin_solution(Order(0.5), Order(1.0), 0.0, 1100.0),
                        std::overflow_error);
    }
    SUBCASE("zero order in t is rejected") {
        CHECK_THROWS_AS(sin_solution(Order(0.5), Order(0.0), 0.0, 1.0), std::domain_error);
    }
}

TEST_CASE("damping classification by the order ratio") {
    CHECK(damping_classify(Order(0.5), Order(1.0)) == Damping::growth);
    CHECK(damping_classify(Order(1.5), Order(1.0)) == Damping::decay);
    CHECK(damping_classify(Order(1.0), Order(1.0)) == Damping::neutral);
    CHECK(damping_classify(Order(0.75), Order(0.75)) == Damping::neutral);
    CHECK_THROWS_AS(damping_classify(Order(0.5), Order(0.0)), std::domain_error);
    CHECK_THROWS_AS(damping_classify(Order(2.0), Order(1.0)), std::domain_error);
    CHECK_THROWS_AS(damping_classify(Order(-0.5), Order(1.0)), std::domain_error);
}

TEST_CASE("field evaluation masks overflow cells and matches the serial path") {
    const Axis xa{0.0, 0.5, 4};
    const Axis ta{900.0, 100.0, 3}; // growth rate cos(pi/4): only t = 900 stays in range
    const auto par = sin_field(Order(0.5), Order(1.0), xa, ta);
    const auto ser = ref::sin_field(Order(0.5), Order(1.0), xa, ta);
    for (std::size_t i = 0; i < xa.count; ++i) {
        CHECK_FALSE(par.masked(i, 0));
        CHECK(par.masked(i, 1));
        CHECK(par.masked(i, 2));
        for (std::size_t j = 0; j < ta.count; ++j) {
            REQUIRE(par.masked(i, j) == ser.masked(i, j));
            if (!par.masked(i, j)) {
                CHECK(par.at(i, j) == ser.at(i, j));
                CHECK(par.at(i, j) == sin_solution(Order(0.5), Order(1.0), xa.at(i), ta.at(j)));
            }
        }
    }
}
