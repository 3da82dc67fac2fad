#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirlab/boundary.hpp"

#include <cmath>
#include <cstdio>
#include <set>

using namespace dirlab;

TEST_CASE("power-log family values and shape") {
    const BoundaryFunction h = BoundaryFunction::make_hbeta(0.5, 1.0);
    REQUIRE(h.hbeta().has_value());
    const HBetaParams& p = *h.hbeta();
    CHECK(p.gamma == doctest::Approx(pi * std::exp(4.0)).epsilon(1e-14));

    // h(pi) = pi^{-1/4} / log(gamma/pi) = pi^{-1/4} / 4.
    const double h_pi = std::pow(pi, -0.25) / 4.0;
    CHECK(h(pi) == doctest::Approx(h_pi).epsilon(1e-13));
    CHECK(h_pi == doctest::Approx(0.18778).epsilon(1e-4));
    CHECK(p.c0 == doctest::Approx(0.5 * h_pi).epsilon(1e-13));
    CHECK(p.c0 == doctest::Approx(0.093891).epsilon(1e-4));
    CHECK(h(-1.0) == doctest::Approx(p.c0));
    CHECK(h(-3.0) == doctest::Approx(p.c0));

    // h(pi^-)/c0 = 2 exactly by construction.
    CHECK(h(pi) / p.c0 == doctest::Approx(2.0).epsilon(1e-14));

    // strictly decreasing on (0, pi]
    double prev = std::numeric_limits<double>::infinity();
    for (double theta : {1e-8, 1e-4, 0.01, 0.1, 0.5, 1.0, 2.0, 3.0, pi}) {
        const double v = h(theta);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(h(1e-12) > 10.0);  // power-times-log blowup toward 0+
    CHECK(h(1e-40) > 1e3);

    CHECK_THROWS(BoundaryFunction::make_hbeta(0.0, 1.0));
    CHECK_THROWS(BoundaryFunction::make_hbeta(1.0, 1.0));
    CHECK_THROWS(BoundaryFunction::make_hbeta(0.5, 0.0));
    CHECK_THROWS(BoundaryFunction::make_hbeta(0.5, -2.0));
}

TEST_CASE("power-log family log-variable evaluation agrees with direct") {
    for (double alpha : {0.1, 0.5}) {
        const BoundaryFunction h = BoundaryFunction::make_hbeta(alpha, 1.2);
        const HBetaParams& p = *h.hbeta();
        for (double s : {5.0, 10.0, 30.0, 100.0}) {
            const double theta = p.gamma * std::exp(-s);
            if (!(theta < 0.99 * pi) || theta <= 0.0) continue;
            CHECK(hbeta_eval_logvar(p, s) ==
                  doctest::Approx(hbeta_eval(p, theta)).epsilon(1e-10));
        }
        // deep values stay finite in the log variable
        CHECK(std::isfinite(hbeta_eval_logvar(p, 500.0)));
    }
}

TEST_CASE("log-integrability admission") {
    auto r1 = check_log_integrability(BoundaryFunction::make_constant(1.0));
    CHECK(r1.status == LogIntegrability::Proved);
    CHECK(r1.integral == doctest::Approx(0.0).epsilon(1e-10));

    auto r2 = check_log_integrability(BoundaryFunction::make_constant(std::exp(1.0)));
    CHECK(r2.integral == doctest::Approx(2.0 * pi).epsilon(1e-10));

    // h vanishing on an interval: sampled function that is 0 on part of the circle.
    UniformAngularGrid g(64);
    std::vector<double> vals(64, 1.0);
    for (std::size_t j = 0; j < 64; ++j)
        if (g.node(j) > 0.0 && g.node(j) < 1.0) vals[j] = 0.0;
    auto r3 = check_log_integrability(BoundaryFunction::make_sampled(g, vals));
    CHECK(r3.status == LogIntegrability::Fail);
    REQUIRE(r3.fail_location.has_value());
    CHECK(*r3.fail_location > 0.0);
    CHECK(*r3.fail_location < 1.0);

    // integrable singularity: log h ~ -(alpha/2) log theta - beta log log(gamma/theta)
    auto r4 = check_log_integrability(BoundaryFunction::make_hbeta(0.5, 1.0));
    CHECK(r4.status == LogIntegrability::Proved);
    CHECK(std::isfinite(r4.integral));

    // independent oracle: int_0^pi log h dtheta for hbeta via adaptive quadrature
    // of the closed form, plus the constant part.
    const BoundaryFunction hb = BoundaryFunction::make_hbeta(0.5, 1.0);
    const HBetaParams& p = *hb.hbeta();
    const double right =
        adaptive_1d([&](double t) { return -0.25 * std::log(t) -
                                           std::log(std::log(p.gamma / t)); },
                    0.0, pi, 1e-10)
            .value;
    const double expected = right + pi * std::log(p.c0);
    CHECK(r4.integral == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("exp-trig and other constructors") {
    const BoundaryFunction one = BoundaryFunction::make_exp_trig({});
    CHECK(one(0.3) == doctest::Approx(1.0));
    CHECK(one.log_status() == LogIntegrability::Proved);

    const BoundaryFunction ec = BoundaryFunction::make_exp_trig({0.0, 1.0});
    for (double t : {-2.0, 0.0, 0.7, 3.0})
        CHECK(ec(t) == doctest::Approx(std::exp(std::cos(t))).epsilon(1e-14));

    // coefficient layout a0, a1, b1, a2, b2, a3, b3: only b3 set.
    const BoundaryFunction s3 =
        BoundaryFunction::make_exp_trig({0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.1});
    double mx = 0.0, mn = 1e300;
    for (int j = 0; j < 1000; ++j) {
        const double v = s3(-pi + 2 * pi * j / 1000.0);
        CHECK(v == doctest::Approx(std::exp(0.1 * std::sin(3.0 * (-pi + 2 * pi * j / 1000.0))))
                       .epsilon(1e-13));
        mx = std::max(mx, v);
        mn = std::min(mn, v);
    }
    CHECK(mx / mn < 2.0); // max/min = e^{0.2}

    const BoundaryFunction poly =
        BoundaryFunction::make_poly_modulus({complex(1.0, 0.0), complex(0.5, 0.0)});
    CHECK(poly(0.0) == doctest::Approx(1.5));
    CHECK(poly(pi) == doctest::Approx(0.5));

    const BoundaryFunction bump = BoundaryFunction::make_sin_bump(0.3);
    CHECK(bump(pi / 2.0) == doctest::Approx(1.3));
    CHECK_THROWS(BoundaryFunction::make_sin_bump(1.0));

    const BoundaryFunction st = BoundaryFunction::make_step(1.0, 4.0);
    CHECK(st(0.5) == doctest::Approx(4.0));
    CHECK(st(-0.5) == doctest::Approx(1.0));
    CHECK_THROWS(BoundaryFunction::make_step(0.0, 1.0));
}

TEST_CASE("level masks partition the grid") {
    UniformAngularGrid g(128);

    auto check_partition = [&](const LevelMasks& m) {
        std::set<std::size_t> all;
        for (auto j : m.comparable) all.insert(j);
        for (auto j : m.above) all.insert(j);
        for (auto j : m.below) all.insert(j);
        CHECK(all.size() == g.size());
        CHECK(m.comparable.size() + m.above.size() + m.below.size() == g.size());
    };

    const BoundaryFunction c = BoundaryFunction::make_constant(3.0);
    auto m1 = level_masks(c, 0.7, g);
    check_partition(m1);
    CHECK(m1.above.empty());
    CHECK(m1.below.empty());
    CHECK(m1.comparable.size() == g.size());

    const BoundaryFunction st = BoundaryFunction::make_step(1.0, 4.0);
    auto m2 = level_masks(st, pi / 2.0, g);
    check_partition(m2);
    CHECK(m2.above.empty());
    for (std::size_t j : m2.below) CHECK(st(g.node(j)) == doctest::Approx(1.0));
    // everything on the low side qualifies: 1 <= 4/2
    std::size_t low_count = 0;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (st(g.node(j)) == 1.0) ++low_count;
    CHECK(m2.below.size() == low_count);

    const BoundaryFunction bump = BoundaryFunction::make_sin_bump(0.3);
    for (double theta : {-2.0, -0.5, 0.0, 1.0, 2.5}) {
        auto m3 = level_masks(bump, theta, g);
        check_partition(m3);
        CHECK(m3.above.empty());
        CHECK(m3.below.empty());
    }

    // boundary comparisons are non-strict
    const BoundaryFunction st2 = BoundaryFunction::make_step(1.0, 2.0);
    auto m4 = level_masks(st2, pi / 2.0, g);
    check_partition(m4);
    CHECK(m4.above.empty());
    CHECK(m4.below.size() > 0); // 1 <= 2/2 exactly

    CHECK_THROWS(level_masks(BoundaryFunction::make_constant(0.0), 0.3, g));
    CHECK_THROWS(level_masks(c, 0.3, g, 1.0)); // factor must exceed 1
}

TEST_CASE("csv round trip") {
    UniformAngularGrid g(32);
    std::vector<double> vals(32);
    for (std::size_t j = 0; j < 32; ++j) vals[j] = 1.0 + 0.25 * std::cos(g.node(j));
    const BoundaryFunction h = BoundaryFunction::make_sampled(g, vals);

    const std::string path = "boundary_roundtrip_test.csv";
    h.to_csv(path, g);
    const BoundaryFunction back = BoundaryFunction::from_csv(path);
    REQUIRE(back.sample_count() == 32);
    for (std::size_t j = 0; j < 32; ++j)
        CHECK(back.samples()[j] == doctest::Approx(vals[j]).epsilon(1e-14));
    std::remove(path.c_str());

    CHECK_THROWS(BoundaryFunction::from_csv("no_such_file_anywhere.csv"));
}

TEST_CASE("sampled interpolation is periodic and exact at nodes") {
    UniformAngularGrid g(16);
    std::vector<double> vals(16);
    for (std::size_t j = 0; j < 16; ++j) vals[j] = 2.0 + std::sin(g.node(j));
    const BoundaryFunction h = BoundaryFunction::make_sampled(g, vals);
    for (std::size_t j = 0; j < 16; ++j)
        CHECK(h(g.node(j)) == doctest::Approx(vals[j]).epsilon(1e-12));
    // midpoint between nodes interpolates linearly
    CHECK(h(0.5 * (g.node(3) + g.node(4))) ==
          doctest::Approx(0.5 * (vals[3] + vals[4])).epsilon(1e-12));
    // periodic wrap
    CHECK(h(g.node(0) + 2.0 * pi) == doctest::Approx(vals[0]).epsilon(1e-12));

    CHECK_THROWS(BoundaryFunction::make_sampled(g, std::vector<double>(15, 1.0)));
    CHECK_THROWS(BoundaryFunction::make_sampled(g, std::vector<double>(16, -1.0)));
}
