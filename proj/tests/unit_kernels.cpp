#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "skl/kernels.hpp"
#include "skl/rng.hpp"

using namespace skl;
using Catch::Approx;

namespace {

KernelSpec make_spec(double alpha, double beta, double gamma = 1.0) {
    KernelSpec k;
    k.alpha = alpha;
    k.beta = beta;
    k.gamma1 = k.gamma2 = gamma;
    k.L1 = std::exp(-gamma);
    k.L2 = 1.0;
    return k;
}

}  // namespace

TEST_CASE("psi1 profile") {
    KernelSpec k = make_spec(1.0, 1.0);
    CHECK(psi1(k, 0.5) == 1.0);
    CHECK(psi1(k, 1.0) == 1.0);
    CHECK(psi1(make_spec(1.0, 0.0), 7.3) == 1.0);
    CHECK(psi1(make_spec(1.0, 1.0), 2.0) == Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(std::isinf(psi1(make_spec(1.0, kInf), 1.5)));
    CHECK_THROWS_AS(psi1(k, -0.1), std::domain_error);
}

TEST_CASE("psi1 envelope and monotonicity on a log grid") {
    for (double beta : {0.0, 0.7, 1.0, 2.0}) {
        KernelSpec k = make_spec(1.0, beta, 1.3);
        double prev = 0.0;
        for (int i = 0; i <= 60; ++i) {
            double r = std::pow(10.0, -2.0 + 4.0 * i / 60.0);
            double v = psi1(k, r);
            CHECK(v >= prev);
            prev = v;
            if (r > 1.0) {
                double rb = std::pow(r, beta);
                CHECK(v >= k.L1 * std::exp(k.gamma1 * rb) * (1 - 1e-12));
                CHECK(v <= k.L2 * std::exp(k.gamma2 * rb) * (1 + 1e-12));
            } else {
                CHECK(v == 1.0);
            }
        }
    }
}

TEST_CASE("j_small values") {
    KernelSpec k = make_spec(1.0, 0.0);
    CHECK(j_small(k, 0.5) == Approx(4.0).epsilon(1e-14));
    CHECK(j_small(make_spec(1.0, kInf), 1.5) == 0.0);
    KernelSpec k2 = make_spec(1.5, 1.0, 2.0);
    k2.d = 2;
    CHECK(j_small(k2, 2.0) == Approx(0.0119620620638013655).epsilon(1e-13));
    CHECK_THROWS_AS(j_small(k, 0.0), std::domain_error);
    CHECK_THROWS_AS(j_small(k, -1.0), std::domain_error);
}

TEST_CASE("j doubling bound (finite beta; short range below 1/4)") {
    for (double beta : {0.0, 1.0, 2.0}) {
        KernelSpec k = make_spec(0.8, beta, 1.1);
        double r0 = 3.0;
        double bound = (k.L2 / k.L1) *
                       std::exp(k.gamma2 * std::pow(2 * r0, beta)) *
                       std::pow(2.0, k.d + k.alpha);
        for (int i = 1; i <= 40; ++i) {
            double r = r0 * i / 40.0;
            CHECK(j_small(k, r) / j_small(k, 2 * r) <= bound * (1 + 1e-12));
        }
    }
    KernelSpec ki = make_spec(0.8, kInf);
    for (int i = 1; i <= 20; ++i) {
        double r = 0.25 * i / 20.0;
        CHECK(std::isfinite(j_small(ki, r) / j_small(ki, 2 * r)));
    }
}

TEST_CASE("jump kernel symmetry and bounds") {
    KernelSpec k = make_spec(1.2, 1.0);
    k.d = 2;
    k.L3 = 2.0;
    k.kappa = {true, 1.0, 0.4};
    PathRng rng(99, 0);
    for (int i = 0; i < 200; ++i) {
        Vec x(2), y(2);
        for (int j = 0; j < 2; ++j) {
            x[j] = 4.0 * (rng.u01() - 0.5);
            y[j] = 4.0 * (rng.u01() - 0.5);
        }
        if (dist(x, y) < 1e-12) continue;
        double jxy = jump_kernel(k, x, y);
        CHECK(jxy == Approx(jump_kernel(k, y, x)).epsilon(1e-13));
        double j0 = j_small(k, dist(x, y));
        CHECK(jxy <= k.L3 * j0 * (1 + 1e-12));
        CHECK(jxy >= j0 / k.L3 * (1 - 1e-12));
    }
    Vec same{0.3, 0.4};
    CHECK_THROWS_AS(jump_kernel(k, same, same), std::domain_error);
}

TEST_CASE("constant kappa reduces J to j") {
    KernelSpec k = make_spec(0.7, 0.0);
    k.kappa = {false, 1.0, 0.0};
    Vec x{0.2}, y{-1.1};
    CHECK(jump_kernel(k, x, y) == Approx(j_small(k, dist(x, y))).epsilon(1e-14));
}

TEST_CASE("perturbed kappa satisfies the Hoelder condition by sampling") {
    KernelSpec k = make_spec(1.0, 1.0);
    k.d = 2;
    k.L3 = 2.0;
    k.L4 = 1.5;
    k.rho = 0.8;
    k.kappa = {true, 1.0, 0.5};
    REQUIRE(k.validate().empty());
    PathRng rng(7, 0);
    for (int i = 0; i < 500; ++i) {
        Vec x(2), y(2);
        for (int j = 0; j < 2; ++j) x[j] = 6.0 * (rng.u01() - 0.5);
        double r = std::pow(10.0, -4.0 + 4.0 * rng.u01());
        Vec dir(2);
        rng.unit_vector(2, dir);
        for (int j = 0; j < 2; ++j) y[j] = x[j] + r * dir[j];
        double kxy = kappa_eval(k, x, y), kxx = kappa_eval(k, x, x);
        CHECK(kxy >= 1.0 / k.L3);
        CHECK(kxy <= k.L3);
        CHECK(std::abs(kxy - kxx) <= k.L4 * std::pow(r, k.rho) * (1 + 1e-9));
    }
}

TEST_CASE("relativistic profile") {
    KernelSpec k = make_spec(1.0, 1.0);
    k.mass = 1.0;
    CHECK(relativistic_psi(k, 0.0) == Approx(4.0).epsilon(1e-9));
    CHECK(relativistic_psi(k, 2.0) < relativistic_psi(k, 1.0));
    // frozen second-scheme value (and Bessel identity 2*(2r)^nu K_nu(r))
    CHECK(relativistic_psi(k, 1.0) == Approx(2.4076289207889383).epsilon(1e-10));

    KernelSpec k2 = make_spec(0.5, 1.0);
    k2.mass = 2.0;
    for (double r : {0.0, 0.3, 1.0, 4.0, 11.0}) {
        CHECK(relativistic_psi(k2, r) ==
              Approx(oracles::relativistic_psi_simpson(1, 0.5, r)).epsilon(1e-8));
    }
    CHECK_THROWS_AS(relativistic_psi(make_spec(1.0, 1.0), 1.0), std::domain_error);
}

TEST_CASE("relativistic profile asymptotic bracket on [1,50]") {
    // ratio psi(r) / (e^-r (1 + r^{(d+alpha-1)/2})), brackets frozen from a
    // high-precision Bessel evaluation
    struct Row { int d; double a; double lo; double hi; };
    for (auto row : {Row{1, 1.0, 3.0, 4.7}, Row{1, 0.5, 2.1, 3.3},
                     Row{2, 1.0, 6.8, 7.4}}) {
        KernelSpec k = make_spec(row.a, 1.0);
        k.d = row.d;
        k.mass = 1.0;
        double prev = kInf;
        for (double r = 1.0; r <= 50.0; r += 2.45) {
            double ps = relativistic_psi(k, r);
            CHECK(ps < prev);
            prev = ps;
            double ratio = ps / (std::exp(-r) *
                                 (1.0 + std::pow(r, 0.5 * (row.d + row.a - 1))));
            CHECK(ratio >= row.lo);
            CHECK(ratio <= row.hi);
        }
    }
}

TEST_CASE("meyer removal rate") {
    KernelSpec ki = make_spec(1.0, kInf);
    CHECK(meyer_rate(ki, Vec(1)) == Approx(2.0).epsilon(1e-12));

    KernelSpec k1 = make_spec(1.0, 1.0);
    // 2 e E1(1), frozen from the exponential-integral series
    CHECK(meyer_rate(k1, Vec(1)) == Approx(1.1926947246463881).epsilon(1e-10));

    Vec a{0.0}, b{17.3};
    CHECK(meyer_rate(k1, a) == meyer_rate(k1, b));
    CHECK_THROWS_AS(meyer_rate(make_spec(1.0, 0.0), Vec(1)), std::domain_error);

    KernelSpec kp = make_spec(1.0, 2.0);
    kp.L3 = 2.0;
    kp.kappa = {true, 1.0, 0.3};
    double err = 0.0;
    double v0 = meyer_rate(kp, Vec{0.0}, &err);
    CHECK(v0 > 0.0);
    CHECK(err < 1e-3 * v0);
    CHECK(meyer_rate_sup(kp) >= v0);
    double vshift = meyer_rate(kp, Vec{0.8});
    CHECK(meyer_rate_sup(kp) >= vshift);
}

TEST_CASE("radial profile mass and cdf") {
    KernelSpec k = make_spec(1.0, 0.0);
    CHECK(radial_profile_mass(k, 0.1, kInf) == Approx(10.0).epsilon(1e-12));
    KernelSpec ki = make_spec(1.0, kInf);
    CHECK(radial_profile_mass(ki, 0.1, kInf) == Approx(9.0).epsilon(1e-12));
    CHECK(jump_radius_cdf(ki, 0.1, 1.0) == Approx(1.0).epsilon(1e-12));
    KernelSpec k1 = make_spec(0.8, 1.0, 0.5);
    double m_lo = radial_profile_mass(k1, 0.05, 0.7);
    double m_hi = radial_profile_mass(k1, 0.7, kInf);
    CHECK(radial_profile_mass(k1, 0.05, kInf) == Approx(m_lo + m_hi).epsilon(1e-11));
    CHECK(jump_radius_cdf(k1, 0.05, 0.05) == 0.0);
    double c1 = jump_radius_cdf(k1, 0.05, 0.3), c2 = jump_radius_cdf(k1, 0.05, 1.7);
    CHECK(c1 > 0.0);
    CHECK(c2 > c1);
    CHECK(c2 < 1.0);
}

TEST_CASE("kernel spec validation") {
    KernelSpec k = make_spec(1.0, 1.0);
    CHECK(k.validate().empty());
    k.rho = 0.5;
    CHECK_FALSE(k.validate().empty());  // rho must exceed alpha/2
    KernelSpec kp = make_spec(1.0, 1.0);
    kp.L3 = 1.5;
    kp.kappa = {true, 1.0, 10.0};
    CHECK_FALSE(kp.validate().empty());
}
