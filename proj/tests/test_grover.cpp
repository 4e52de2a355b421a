#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "annealgap/errors.hpp"
#include "annealgap/grover.hpp"

using namespace annealgap;

TEST_CASE("log binomial") {
    CHECK(log_binomial(10, 0) == doctest::Approx(0.0));
    CHECK(log_binomial(10, 10) == doctest::Approx(0.0));
    CHECK(log_binomial(10, 3) == doctest::Approx(std::log(120.0)).epsilon(1e-13));
    CHECK(log_binomial(1000, 500) == doctest::Approx(689.467).epsilon(1e-4));
}

TEST_CASE("secular function hand value") {
    // N=2, gamma=1, lambda=-5: (2/4)(1/7 + 2/5 + 1/3) = 46/105.
    CHECK(dispersion_lhs(2, 1.0, -5.0) == doctest::Approx(46.0 / 105.0).epsilon(1e-14));
    CHECK_THROWS_AS(dispersion_lhs(2, 1.0, 2.0), DomainError);  // on a pole
}

TEST_CASE("levels agree with a dense oracle at N=2") {
    for (double gamma : {0.4, 1.0, 1.7}) {
        // Symmetric sector of -N|up..up><up..up| - gamma sum sigma^x.
        Eigen::Matrix3d H;
        double c = gamma * std::sqrt(2.0);
        H << -2.0, -c, 0.0, -c, 0.0, -c, 0.0, -c, 0.0;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(H, Eigen::EigenvaluesOnly);
        LevelPair lp = lowest_two_levels(2, gamma);
        CHECK(lp.lambda0 == doctest::Approx(es.eigenvalues()[0]).epsilon(1e-12));
        CHECK(lp.lambda1 == doctest::Approx(es.eigenvalues()[1]).epsilon(1e-12));
    }
}

TEST_CASE("levels satisfy the secular equation") {
    for (int n : {10, 24, 41}) {
        LevelPair lp = lowest_two_levels(n, 1.1);
        CHECK(dispersion_lhs(n, 1.1, lp.lambda0) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(dispersion_lhs(n, 1.1, lp.lambda1) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(lp.eta == doctest::Approx(lp.lambda0 + 1.1 * n));
        CHECK(lp.gap() > 0.0);
    }
}

TEST_CASE("split-off depth at the symmetric point") {
    // At gamma = 1 the lower level sits ~1 below -N while the upper level is
    // exponentially close to it; the gap stays O(1).
    LevelPair lp = lowest_two_levels(30, 1.0);
    CHECK(lp.eta == doctest::Approx(-1.035996).epsilon(1e-5));
    double eta1 = lp.lambda1 + 30.0;
    CHECK(eta1 == doctest::Approx(7.495919e-07).scale(0.0).epsilon(1e-5));
    CHECK(lp.gap() == doctest::Approx(1.035997).epsilon(1e-5));
}

TEST_CASE("exponentially small splittings keep relative accuracy") {
    // Below the transition the upper level is pinned a distance ~ 4N 2^-N
    // above the pole at -gamma N; the offset coordinate resolves it exactly.
    double prev = 1.0;
    for (int n : {20, 30, 40, 50}) {
        LevelPair lp = lowest_two_levels(n, 0.8);
        double eta1 = lp.lambda1 + 0.8 * n;
        double expect = 4.0 * n * std::exp2(double(-n));
        CHECK(eta1 > 0.0);
        CHECK(eta1 < prev);
        CHECK(eta1 / expect > 0.5);
        CHECK(eta1 / expect < 1.5);
        CHECK(std::isfinite(lp.lambda0));
        prev = eta1;
    }
}

TEST_CASE("asymptotic gap formula") {
    CHECK(min_gap_asymptotic(30) == doctest::Approx(60.0 * std::pow(2.0, -15.0)).epsilon(1e-14));
    CHECK(min_gap_asymptotic(61) == doctest::Approx(122.0 * std::exp2(-30.5)).epsilon(1e-14));
}

TEST_CASE("perturbative ground energy") {
    CHECK(perturbative_gs_energy(50, 0.5) == doctest::Approx(-50.25).epsilon(1e-14));
    CHECK(perturbative_gs_energy(50, 2.0) == doctest::Approx(-100.0).epsilon(1e-14));
    CHECK_THROWS_AS(perturbative_gs_energy(50, 1.0), DomainError);
}

TEST_CASE("minimum gap over the field approaches 2N 2^{-N/2}") {
    struct Ref {
        int n;
        double gamma_min, delta_min, ratio;
    };
    // Reference values frozen from an independent secular-equation solver.
    const Ref refs[] = {
        {20, 1.0599012443, 3.76544971e-02, 0.96395512},
        {30, 1.0372731575, 1.79343689e-03, 0.97945567},
        {40, 1.0271142644, 7.51876319e-05, 0.98549933},
        {50, 1.0213181106, 2.94678348e-06, 0.98877646},
        {60, 1.0175667894, 1.10735081e-07, 0.99084073},
    };
    double prev_ratio = 0.0;
    for (const auto& r : refs) {
        auto [gmin, dmin] = grover_min_gap(r.n);
        CHECK(gmin == doctest::Approx(r.gamma_min).epsilon(1e-6));
        CHECK(dmin == doctest::Approx(r.delta_min).scale(0.0).epsilon(1e-6));
        double ratio = dmin / min_gap_asymptotic(r.n);
        CHECK(ratio == doctest::Approx(r.ratio).epsilon(1e-6));
        CHECK(ratio > prev_ratio);
        prev_ratio = ratio;
    }
    CHECK(prev_ratio > 0.99);
}
