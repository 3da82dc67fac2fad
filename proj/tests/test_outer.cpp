#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirlab/outer.hpp"

#include <cmath>
#include <random>

using namespace dirlab;

namespace {

complex polar(double r, double theta) {
    return r * complex(std::cos(theta), std::sin(theta));
}

} // namespace

TEST_CASE("constant modulus gives constant outer function") {
    const OuterFunction f(BoundaryFunction::make_constant(2.0), 256);
    for (double r : {0.0, 0.3, 0.7}) {
        for (double theta : {-2.0, 0.0, 1.3}) {
            const complex z = polar(r, theta);
            CHECK(f.poisson_log(z) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
            CHECK(f.conjugate_log(z) == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(std::abs(f.eval(z) - complex(2.0, 0.0)) < 1e-12);
            CHECK(f.dv_dtheta(z) == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("exponential-of-cosine modulus has closed-form potentials") {
    // h = e^{cos t}: u = r cos theta, v = r sin theta, O = e^z.
    const OuterFunction f(BoundaryFunction::make_exp_trig({0.0, 1.0}), 256);
    for (double r : {0.2, 0.5, 0.8}) {
        for (double theta : {-2.5, -0.4, 0.9, 3.0}) {
            const complex z = polar(r, theta);
            CHECK(f.poisson_log(z) == doctest::Approx(r * std::cos(theta)).epsilon(1e-11));
            CHECK(f.conjugate_log(z) == doctest::Approx(r * std::sin(theta)).epsilon(1e-11));
            CHECK(std::abs(f.eval(z) - std::exp(z)) < 1e-10);
            // dv/dtheta of r sin theta is r cos theta
            CHECK(f.dv_dtheta(z) ==
                  doctest::Approx(r * std::cos(theta)).epsilon(1e-9).scale(1.0));
        }
    }
    CHECK(std::abs(f.eval(complex(0.0, 0.0))) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("polynomial modulus reproduces the polynomial") {
    // h = |1 + e^{it}/2| is the boundary modulus of 1 + z/2.
    const OuterFunction f(
        BoundaryFunction::make_poly_modulus({complex(1.0, 0.0), complex(0.5, 0.0)}), 512);
    CHECK(f.poisson_log(complex(0.0, 0.0)) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(std::abs(f.eval(complex(0.3, 0.0)) - complex(1.15, 0.0)) < 1e-9);
    for (double theta : {-1.0, 0.5, 2.2}) {
        const complex z = polar(0.6, theta);
        CHECK(std::abs(f.eval(z) - (complex(1.0, 0.0) + 0.5 * z)) < 1e-9);
    }
}

TEST_CASE("clearance rule refuses near-boundary evaluation") {
    const OuterFunction f(BoundaryFunction::make_constant(1.0), 64);
    const double spacing = 2.0 * pi / 64.0;
    CHECK_NOTHROW(f.eval(complex(1.0 - 5.0 * spacing, 0.0)));
    try {
        f.eval(complex(1.0 - 0.5 * spacing, 0.0));
        FAIL("expected a clearance refusal");
    } catch (const ClearanceError& e) {
        CHECK(e.required_n() > f.grid_size());
    }
}

TEST_CASE("taylor coefficients of known outer functions") {
    const OuterFunction fc(BoundaryFunction::make_constant(3.0), 256);
    const TaylorSeries sc = taylor_coefficients(fc, 8);
    REQUIRE(sc.coeffs.size() == 9);
    CHECK(std::abs(sc.coeffs[0] - complex(3.0, 0.0)) < 1e-12);
    for (std::size_t k = 1; k < sc.coeffs.size(); ++k)
        CHECK(std::abs(sc.coeffs[k]) < 1e-10);

    const OuterFunction fp(
        BoundaryFunction::make_poly_modulus({complex(1.0, 0.0), complex(0.5, 0.0)}), 512);
    const TaylorSeries sp = taylor_coefficients(fp, 8);
    CHECK(std::abs(sp.coeffs[0] - complex(1.0, 0.0)) < 1e-8);
    CHECK(std::abs(sp.coeffs[1] - complex(0.5, 0.0)) < 1e-8);
    for (std::size_t k = 2; k < sp.coeffs.size(); ++k)
        CHECK(std::abs(sp.coeffs[k]) < 1e-8);

    const OuterFunction fe(BoundaryFunction::make_exp_trig({0.0, 1.0}), 512);
    const TaylorSeries se = taylor_coefficients(fe, 12);
    double factorial = 1.0;
    for (std::size_t k = 0; k < se.coeffs.size(); ++k) {
        if (k > 0) factorial *= static_cast<double>(k);
        CHECK(std::abs(se.coeffs[k] - complex(1.0 / factorial, 0.0)) < 1e-9);
    }
    CHECK(se.truncation_error < 1e-8);

    CHECK_THROWS(taylor_coefficients(fe, 300));      // n_max >= n/2
    CHECK_THROWS(taylor_coefficients(fe, 8, 0.999)); // rho above 1 - clearance
}

TEST_CASE("taylor series reconstruction and serialization") {
    const OuterFunction f(BoundaryFunction::make_exp_trig({0.2, 0.5, -0.3}), 512);
    const TaylorSeries s = taylor_coefficients(f, 32, 0.5);
    for (double theta : {-3.0, -1.0, 0.4, 2.0}) {
        const complex z = polar(0.5, theta);
        CHECK(std::abs(s.eval(z) - f.eval(z)) < 1e-10);
    }
    const std::string j = s.to_json();
    CHECK(j.find("\"rho\":0.5") != std::string::npos);
    CHECK(j.find("\"coefficients\":[[") != std::string::npos);
}

TEST_CASE("kernel bound and cancellation") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> ang(-pi, pi);
    std::uniform_real_distribution<double> rad(0.0, 0.99);
    for (int trial = 0; trial < 200; ++trial) {
        const double phi = ang(rng);
        const complex z = polar(rad(rng), ang(rng));
        const double d2 = std::norm(complex(std::cos(phi), std::sin(phi)) - z);
        CHECK(std::abs(kernel_q(phi, z)) <= 2.0 / d2 * (1.0 + 1e-12));
    }

    // mean of Q over the circle vanishes when the grid resolves the kernel
    for (std::size_t n : {256, 1024}) {
        UniformAngularGrid g(n);
        std::uniform_real_distribution<double> r_ok(0.0, 1.0 - 8.0 * g.spacing());
        for (int trial = 0; trial < 20; ++trial) {
            const complex z = polar(r_ok(rng), ang(rng));
            std::vector<double> q(n);
            for (std::size_t j = 0; j < n; ++j) q[j] = kernel_q(g.node(j), z);
            CHECK(std::abs(pairwise_sum(q) * g.spacing()) < 1e-10);
        }
    }
}

TEST_CASE("angular derivative matches finite differences of v") {
    std::vector<BoundaryFunction> corpus;
    corpus.push_back(BoundaryFunction::make_exp_trig({0.0, 1.0}));
    corpus.push_back(BoundaryFunction::make_exp_trig({0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.1}));
    corpus.push_back(BoundaryFunction::make_sin_bump(0.3));
    corpus.push_back(BoundaryFunction::make_step(1.0, 4.0));
    corpus.push_back(
        BoundaryFunction::make_poly_modulus({complex(1.0, 0.0), complex(0.5, 0.0)}));

    std::mt19937 rng(515);
    std::uniform_real_distribution<double> ang(-pi, pi);
    std::uniform_real_distribution<double> rad(0.1, 0.95);
    for (const auto& h : corpus) {
        const OuterFunction f(h, 1024);
        const double delta = f.spacing();
        for (int trial = 0; trial < 10; ++trial) {
            const double r = rad(rng);
            const double theta = ang(rng);
            const double vp = f.conjugate_log(polar(r, theta + delta));
            const double vm = f.conjugate_log(polar(r, theta - delta));
            const double fd = (vp - vm) / (2.0 * delta);
            const double dv = f.dv_dtheta(polar(r, theta));
            CHECK(dv == doctest::Approx(fd).epsilon(1e-4).scale(1.0));
        }
    }
}

TEST_CASE("angular derivative obeys the integral bound") {
    std::vector<BoundaryFunction> corpus;
    corpus.push_back(BoundaryFunction::make_exp_trig({0.0, 1.0}));
    corpus.push_back(BoundaryFunction::make_sin_bump(0.3));
    corpus.push_back(BoundaryFunction::make_step(1.0, 4.0));

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ang(-pi, pi);
    std::uniform_real_distribution<double> rad(0.1, 0.9);
    for (const auto& h : corpus) {
        const std::size_t n = 512;
        const OuterFunction f(h, n);
        for (int trial = 0; trial < 20; ++trial) {
            const double r = rad(rng);
            const double theta = ang(rng);
            const complex z = polar(r, theta);
            const double log_h_theta = std::log(h(theta));
            std::vector<double> terms(n);
            for (std::size_t j = 0; j < n; ++j) {
                const double phi = f.sample_angle(j);
                terms[j] = std::abs(f.log_h_samples()[j] - log_h_theta) /
                           std::norm(complex(std::cos(phi), std::sin(phi)) - z);
            }
            const double bound =
                (1.0 / pi) * (2.0 * pi / static_cast<double>(n)) * pairwise_sum(terms);
            CHECK(std::abs(f.dv_dtheta(z)) <= bound * (1.0 + 1e-10) + 1e-12);
        }
    }
}

TEST_CASE("interior modulus approaches the boundary modulus") {
    const BoundaryFunction h = BoundaryFunction::make_exp_trig({0.0, 1.0});
    const double rhos[] = {0.9, 0.99, 0.999};
    const std::size_t grids[] = {1024, 4096, 32768};
    double prev_err = 1e300;
    for (int i = 0; i < 3; ++i) {
        const OuterFunction f(h, grids[i]);
        double err = 0.0;
        for (double theta : {-2.0, -0.7, 0.1, 1.5, 2.9})
            err = std::max(err,
                           std::abs(std::abs(f.eval(polar(rhos[i], theta))) - h(theta)));
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 1e-2);
}

TEST_CASE("construction refusals") {
    CHECK_THROWS(OuterFunction(BoundaryFunction::make_constant(0.0), 64));
    // sampled function vanishing on a whole stretch: every midpoint inside
    // the stretch interpolates to zero, which must be refused
    UniformAngularGrid g(64);
    std::vector<double> vals(64, 1.0);
    for (std::size_t j = 20; j < 30; ++j) vals[j] = 0.0;
    CHECK_THROWS_AS(OuterFunction(BoundaryFunction::make_sampled(g, vals), 64),
                    std::domain_error);
}
