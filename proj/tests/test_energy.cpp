#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirlab/energy.hpp"

#include <cmath>
#include <random>

using namespace dirlab;

namespace {

TaylorSeries monomial(std::size_t n) {
    std::vector<complex> c(n + 1, complex(0.0, 0.0));
    c[n] = complex(1.0, 0.0);
    return polynomial_series(std::move(c));
}

TaylorSeries random_poly(std::mt19937& rng, std::size_t degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<complex> c(degree + 1);
    for (auto& x : c) x = complex(u(rng), u(rng));
    return polynomial_series(std::move(c));
}

// modified Bessel I1 by series, for the exponential-coefficient oracle
double bessel_i1_series(double x) {
    double sum = 0.0, term = x / 2.0;
    for (int k = 0; k < 40; ++k) {
        if (k > 0) term *= (x / 2.0) * (x / 2.0) / (static_cast<double>(k) * (k + 1.0));
        sum += term;
    }
    return sum;
}

} // namespace

TEST_CASE("area energy closed forms") {
    CHECK(energy_area(monomial(1), 0.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(energy_area(monomial(1), 0.5) == doctest::Approx(8.0 / 15.0).epsilon(1e-9));
    CHECK(energy_area(polynomial_series({complex(5.0, -2.0)}), 0.3) ==
          doctest::Approx(0.0));
    CHECK_THROWS(energy_area(monomial(1), 1.5));
}

TEST_CASE("parseval energy closed forms") {
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(energy_parseval_exact(monomial(n), 0.0) ==
              doctest::Approx(static_cast<double>(n)).epsilon(1e-14));
    CHECK(energy_parseval_exact(monomial(1), 0.5) ==
          doctest::Approx(8.0 / 15.0).epsilon(1e-14));

    // f = e^z: sum n/(n!)^2 = I1(2)
    std::vector<complex> expc(20);
    double fact = 1.0;
    for (std::size_t k = 0; k < 20; ++k) {
        if (k > 0) fact *= static_cast<double>(k);
        expc[k] = complex(1.0 / fact, 0.0);
    }
    const double oracle = bessel_i1_series(2.0);
    CHECK(oracle == doctest::Approx(1.590637).epsilon(1e-6));
    CHECK(energy_parseval_exact(polynomial_series(expc), 0.0) ==
          doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("parseval equivalent form and its band") {
    CHECK(energy_parseval_equiv(monomial(1), 0.0) == doctest::Approx(2.0));
    CHECK(energy_parseval_equiv(monomial(1), 1.0) == doctest::Approx(1.0));

    std::mt19937 rng(31);
    for (double alpha : {0.0, 0.5}) {
        for (int trial = 0; trial < 20; ++trial) {
            const TaylorSeries f = random_poly(rng, 16);
            const double exact = energy_parseval_exact(f, alpha);
            const double equiv = energy_parseval_equiv(f, alpha);
            const double ratio = equiv / exact;
            CHECK(ratio >= 0.25);
            CHECK(ratio <= 4.0);
        }
    }
}

TEST_CASE("area equals parseval for polynomials across weights") {
    std::mt19937 rng(7);
    for (double alpha : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        for (int trial = 0; trial < 4; ++trial) {
            const TaylorSeries f = random_poly(rng, 8);
            const double a = energy_area(f, alpha);
            const double p = energy_parseval_exact(f, alpha);
            CHECK(a == doctest::Approx(p).epsilon(1e-6));
        }
    }
}

TEST_CASE("boundary double integral at the unweighted point") {
    auto trace_of = [](const TaylorSeries& f) {
        return [f](double theta) {
            return f.eval(complex(std::cos(theta), std::sin(theta)));
        };
    };
    CHECK(energy_douglas(trace_of(monomial(1)), 0.0, 256) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(energy_douglas(trace_of(monomial(2)), 0.0, 256) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(energy_douglas([](double) { return complex(4.0, 1.0); }, 0.0, 64) ==
          doctest::Approx(0.0));

    std::mt19937 rng(54);
    for (int trial = 0; trial < 5; ++trial) {
        const TaylorSeries f = random_poly(rng, 8);
        const double d = energy_douglas(trace_of(f), 0.0, 1024);
        const double p = energy_parseval_exact(f, 0.0);
        CHECK(d == doctest::Approx(p).epsilon(0.005));
    }
}

TEST_CASE("slice energies: series, closed forms, and the derivative formula") {
    const TaylorSeries half = polynomial_series({complex(1.0, 0.0), complex(0.5, 0.0)});
    for (double r : {0.2, 0.5, 0.8})
        CHECK(slice_energy_sum(half, r) == doctest::Approx(r * r / 4.0).epsilon(1e-14));
    CHECK(slice_energy_sum(half, 0.0) == doctest::Approx(0.0));
    CHECK(slice_energy_sum(monomial(1), 0.9) == doctest::Approx(0.81).epsilon(1e-14));

    const OuterFunction fc(BoundaryFunction::make_constant(2.5), 256);
    CHECK(slice_energy_cr(fc, 0.5) == doctest::Approx(0.0).epsilon(1e-12));

    const OuterFunction fp(
        BoundaryFunction::make_poly_modulus({complex(1.0, 0.0), complex(0.5, 0.0)}), 1024);
    CHECK(slice_energy_cr(fp, 0.8) == doctest::Approx(0.16).epsilon(1e-6));

    // h = e^{cos t}: D(f_r) = sum n r^{2n}/(n!)^2 = r I1(2r)
    const OuterFunction fe(BoundaryFunction::make_exp_trig({0.0, 1.0}), 1024);
    const double oracle = 0.5 * bessel_i1_series(1.0);
    CHECK(oracle == doctest::Approx(0.282580).epsilon(1e-5));
    CHECK(slice_energy_cr(fe, 0.5) == doctest::Approx(oracle).epsilon(1e-6));

    // identity with the coefficient series at several radii
    const TaylorSeries se = taylor_coefficients(fe, 40, 0.5);
    for (double r : {0.3, 0.6, 0.9})
        CHECK(slice_energy_cr(fe, r) ==
              doctest::Approx(slice_energy_sum(se, r)).epsilon(1e-6));

    CHECK_THROWS_AS(slice_energy_cr(fe, 0.9999), ClearanceError);
}

TEST_CASE("slice route closed form") {
    for (double alpha : {0.1, 0.5, 0.9})
        CHECK(energy_slice_route(monomial(1), alpha) ==
              doctest::Approx(1.0 / (alpha + 1.0)).epsilon(1e-9));
    CHECK(energy_slice_route(polynomial_series({complex(3.0, 0.0)}), 0.5) ==
          doctest::Approx(0.0));
    // ratio to the exact D_alpha(z) = 2/((alpha+1)(alpha+2)) is (alpha+2)/2
    for (double alpha : {0.1, 0.5}) {
        const double ratio =
            energy_slice_route(monomial(1), alpha) / energy_parseval_exact(monomial(1), alpha);
        CHECK(ratio == doctest::Approx((alpha + 2.0) / 2.0).epsilon(1e-8));
    }
}

TEST_CASE("area form of the derivative formula") {
    const OuterFunction fc(BoundaryFunction::make_constant(2.0), 256);
    CHECK(energy_cr_area(fc, 0.5).value == doctest::Approx(0.0).epsilon(1e-10));

    const OuterFunction fp(
        BoundaryFunction::make_poly_modulus({complex(1.0, 0.0), complex(0.5, 0.0)}), 1024);
    const TaylorSeries sp = taylor_coefficients(fp, 16, 0.5);
    for (double alpha : {0.1, 0.5, 0.9}) {
        const CrAreaResult res = energy_cr_area(fp, alpha);
        const double area = energy_area(sp, alpha);
        CHECK(res.value >= 0.0);
        CHECK(res.value / area >= 1.0 / 16.0);
        CHECK(res.value / area <= 16.0);
        CHECK(res.nodes_used + res.nodes_dropped == 64);
    }
}

TEST_CASE("monotonicity of the energy in the weight exponent") {
    std::mt19937 rng(88);
    for (int trial = 0; trial < 10; ++trial) {
        const TaylorSeries f = random_poly(rng, 10);
        double prev = 1e300;
        for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
            const double v = energy_parseval_exact(f, alpha);
            CHECK(v <= prev * (1.0 + 1e-14));
            prev = v;
        }
    }
}

TEST_CASE("equivalence bands over a small corpus") {
    std::vector<BoundaryFunction> corpus;
    corpus.push_back(BoundaryFunction::make_exp_trig({0.0, 1.0}));
    corpus.push_back(BoundaryFunction::make_exp_trig({0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.1}));
    corpus.push_back(BoundaryFunction::make_sin_bump(0.3));
    corpus.push_back(
        BoundaryFunction::make_poly_modulus({complex(1.0, 0.0), complex(0.5, 0.0)}));

    for (const auto& h : corpus) {
        const OuterFunction f(h, 1024);
        const TaylorSeries s = taylor_coefficients(f, 64, 0.5);
        for (double alpha : {0.1, 0.5, 0.9}) {
            const double area = energy_area(s, alpha);
            if (area == 0.0) continue;
            const double slice = energy_slice_route(s, alpha);
            const double cr = energy_cr_area(f, alpha).value;
            CHECK(slice / area >= 1.0 / 16.0);
            CHECK(slice / area <= 16.0);
            CHECK(cr / area >= 1.0 / 16.0);
            CHECK(cr / area <= 16.0);
        }
    }
}

TEST_CASE("energy report structure") {
    const EnergyReport rep =
        compute_energy_report(BoundaryFunction::make_exp_trig({0.0, 1.0}), 0.25, 512);
    CHECK(rep.routes.count("area") == 1);
    CHECK(rep.routes.count("parseval_exact") == 1);
    CHECK(rep.routes.count("parseval_equiv") == 1);
    CHECK(rep.routes.count("douglas") == 1);
    CHECK(rep.routes.count("slice_route") == 1);
    CHECK(rep.routes.count("cr_area") == 1);
    CHECK(rep.routes.at("area") ==
          doctest::Approx(rep.routes.at("parseval_exact")).epsilon(1e-6));
    CHECK_FALSE(rep.flagged);
    for (const auto& [k, v] : rep.routes) CHECK(v >= 0.0);
    const std::string j = rep.to_json();
    CHECK(j.find("\"routes\"") != std::string::npos);
    CHECK(j.find("\"ratios\"") != std::string::npos);
    CHECK(j.find("\"alpha\":0.25") != std::string::npos);
}
