#include "dirlab/selftest.hpp"

#include "dirlab/carleson.hpp"
#include "dirlab/energy.hpp"
#include "dirlab/thresholds.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace dirlab {

namespace {

struct Corpus {
    std::vector<BoundaryFunction> members;
    std::vector<std::string> names;
    std::vector<bool> smooth;

    void add(BoundaryFunction h, std::string name, bool is_smooth) {
        members.push_back(std::move(h));
        names.push_back(std::move(name));
        smooth.push_back(is_smooth);
    }
};

Corpus build_corpus(bool quick) {
    Corpus c;
    c.add(BoundaryFunction::make_exp_trig({0.0, 0.2}), "exp(0.2 cos)", true);
    c.add(BoundaryFunction::make_step(1.0, 4.0), "step 1->4", false);
    c.add(BoundaryFunction::make_hbeta(0.5, 1.3), "hbeta(0.5,1.3)", false);
    c.add(BoundaryFunction::make_hbeta(0.25, 1.2), "hbeta(0.25,1.2)", false);
    if (quick) return c;
    c.add(BoundaryFunction::make_exp_trig({0.0, 1.0}), "exp(cos)", true);
    c.add(BoundaryFunction::make_exp_trig({0.0, 0.3, 0.0, 0.0, 0.2}), "exp(trig mix)", true);
    c.add(BoundaryFunction::make_sin_bump(0.3), "sin-bump 0.3", true);
    c.add(BoundaryFunction::make_poly_modulus({complex(1.0, 0.0), complex(0.5, 0.0)}),
          "|1+z/2|", true);
    c.add(BoundaryFunction::make_hbeta(0.5, 0.9), "hbeta(0.5,0.9)", false);
    c.add(BoundaryFunction::make_hbeta(0.5, 1.6), "hbeta(0.5,1.6)", false);
    return c;
}

std::vector<BoundaryFunction> smooth_corpus(const Corpus& c) {
    std::vector<BoundaryFunction> out;
    for (std::size_t i = 0; i < c.members.size(); ++i)
        if (c.smooth[i]) out.push_back(c.members[i]);
    return out;
}

struct Checker {
    bool ok = true;
    double worst_rel = 0.0;
    std::ostringstream detail;

    void rel(double got, double expected, double tol, const std::string& what) {
        const double scale = std::max(std::abs(expected), 1e-300);
        const double r = std::abs(got - expected) / scale;
        worst_rel = std::max(worst_rel, r);
        if (!(r <= tol)) fail(what + ": got " + std::to_string(got) + ", expected " +
                              std::to_string(expected));
    }
    void truth(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
    void fail(const std::string& what) {
        if (ok) detail << what;
        ok = false;
    }
    std::string summary() const {
        if (!detail.str().empty()) return detail.str();
        std::ostringstream os;
        os << "worst relative deviation " << worst_rel;
        return os.str();
    }
};

using CriterionBody = void (*)(const SelfTestOptions&, Checker&);

// 1. Exact double-integral energy for monomials at weight exponent zero.
void criterion_douglas(const SelfTestOptions& opt, Checker& chk) {
    const std::size_t grid = opt.quick ? 512 : 1024;
    for (int n = 1; n <= 8; ++n) {
        auto trace = [n](double t) {
            return complex(std::cos(n * t), std::sin(n * t));
        };
        double value = energy_douglas(trace, 0.0, grid);
        if (opt.mutate_douglas_prefactor) value *= 2.0;
        chk.rel(value, static_cast<double>(n), 0.005, "monomial degree " + std::to_string(n));
    }
}

// 2. The boundary-only energy identity at weight exponent zero.
void criterion_identity(const SelfTestOptions&, Checker& chk) {
    const IdentityCheck a = carleson_identity_check(
        BoundaryFunction::make_poly_modulus({complex(1.0, 0.0), complex(0.5, 0.0)}));
    chk.rel(a.lhs, 0.25, 0.01, "|1+z/2| interior side");
    chk.rel(a.rhs, 0.25, 0.01, "|1+z/2| boundary side");
    const double oracle = 0.2 * std::cyl_bessel_i(1.0, 0.4);
    const IdentityCheck b =
        carleson_identity_check(BoundaryFunction::make_exp_trig({0.0, 0.2}));
    chk.rel(b.lhs, oracle, 0.01, "exp(0.2 cos) interior side");
    chk.rel(b.rhs, oracle, 0.01, "exp(0.2 cos) boundary side");
}

// 3. Area route against the exact coefficient series on random polynomials.
void criterion_cross_route(const SelfTestOptions& opt, Checker& chk) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const int count = opt.quick ? 5 : 10;
    for (int trial = 0; trial < count; ++trial) {
        std::vector<complex> coeffs(9);
        for (auto& c : coeffs) c = complex(unit(rng), unit(rng));
        const TaylorSeries f = polynomial_series(coeffs);
        for (double alpha : {0.1, 0.25, 0.5, 0.75, 0.9})
            chk.rel(energy_area(f, alpha), energy_parseval_exact(f, alpha), 1e-6,
                    "random polynomial " + std::to_string(trial));
    }
    const TaylorSeries z = polynomial_series({complex(0.0, 0.0), complex(1.0, 0.0)});
    chk.rel(energy_parseval_exact(z, 0.5), 8.0 / 15.0, 1e-6, "identity map series");
    chk.rel(energy_area(z, 0.5), 8.0 / 15.0, 1e-6, "identity map area");
}

// 4. Radial-slice energy: boundary form equals the coefficient form.
void criterion_slices(const SelfTestOptions& opt, Checker& chk) {
    const auto smooth = smooth_corpus(build_corpus(opt.quick));
    for (const auto& h : smooth) {
        const OuterFunction f(h, 1024);
        const TaylorSeries series = taylor_coefficients(f, 128, 0.5);
        for (double r : {0.3, 0.6, 0.9})
            chk.rel(slice_energy_cr(f, r), slice_energy_sum(series, r), 1e-6,
                    h.name() + " slice at r = " + std::to_string(r));
    }
}

// 5. Without deep oscillation the split functionals vanish identically.
void criterion_vanishing(const SelfTestOptions&, Checker& chk) {
    const BoundaryFunction cases[] = {
        BoundaryFunction::make_sin_bump(0.3),
        BoundaryFunction::make_exp_trig({0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.1})};
    for (const auto& h : cases) {
        for (double alpha : {0.1, 0.5}) {
            const CarlesonDecomposition dec = theorem_decomposition(h, alpha);
            chk.truth(dec.n.value == 0.0, h.name() + ": n not exactly zero");
            chk.truth(dec.n_tilde.value == 0.0, h.name() + ": n~ not exactly zero");
        }
        const MuProfile prof = mu_profile(h);
        for (double m : prof.mu)
            chk.truth(m == 1.0, h.name() + ": mu not identically one");
    }
}

// 6. Convergence/divergence of the three functionals across their thresholds.
void criterion_trichotomy(const SelfTestOptions&, Checker& chk) {
    const double alpha = 0.5;
    auto verdict = [&](Quantity q, double beta) {
        return classify_convergence(reduced_integrand(q, alpha, beta)).verdict;
    };
    chk.truth(verdict(Quantity::N, 0.3) == Verdict::Divergent, "N at beta 0.3");
    chk.truth(verdict(Quantity::N, 0.8) == Verdict::Convergent, "N at beta 0.8");
    chk.truth(verdict(Quantity::D, 0.6) == Verdict::Divergent, "D at beta 0.6");
    chk.truth(verdict(Quantity::D, 0.9) == Verdict::Convergent, "D at beta 0.9");
    chk.truth(verdict(Quantity::C, 0.8) == Verdict::Divergent, "C at beta 0.8");
    chk.truth(verdict(Quantity::C, 1.3) == Verdict::Convergent, "C at beta 1.3");
    // separation: square-oscillation and energy finite, naive form infinite
    chk.truth(verdict(Quantity::N, 0.9) == Verdict::Convergent, "separation N");
    chk.truth(verdict(Quantity::D, 0.9) == Verdict::Convergent, "separation D");
    chk.truth(verdict(Quantity::C, 0.9) == Verdict::Divergent, "separation C");
}

// 7. Two-sided comparison: bounded ratio, scale invariance, matching flags.
void criterion_equivalence(const SelfTestOptions& opt, Checker& chk) {
    const Corpus corpus = build_corpus(opt.quick);
    const std::vector<double> alphas = opt.quick ? std::vector<double>{0.5}
                                                 : std::vector<double>{0.1, 0.25, 0.5};
    for (std::size_t i = 0; i < corpus.members.size(); ++i) {
        const auto& h = corpus.members[i];
        const auto scaled = BoundaryFunction::make_scaled(h, 7.0);
        for (double alpha : alphas) {
            const CarlesonDecomposition dec = theorem_decomposition(h, alpha);
            const CarlesonDecomposition dec7 = theorem_decomposition(scaled, alpha);
            const std::string tag = corpus.names[i] + " at alpha " + std::to_string(alpha);
            chk.truth(dec.lhs_flagged == dec.rhs_flagged, tag + ": flags disagree");
            chk.truth(dec7.lhs_flagged == dec.lhs_flagged, tag + ": flag not scale-invariant");
            chk.truth(dec7.rhs_flagged == dec.rhs_flagged, tag + ": flag not scale-invariant");
            if (!dec.lhs_flagged && !dec.rhs_flagged) {
                chk.truth(dec.ratio > 1e-3 && dec.ratio < 1e3, tag + ": ratio out of band");
                chk.rel(dec7.ratio, dec.ratio, 1e-8, tag + ": ratio under h -> 7h");
            }
        }
    }
}

// 8. Interior lower bound on the outer modulus against the boundary value.
void criterion_lower_bound(const SelfTestOptions& opt, Checker& chk) {
    const Corpus corpus = build_corpus(opt.quick);
    double smooth_min = 1e300;
    for (std::size_t i = 0; i < corpus.members.size(); ++i) {
        const auto& h = corpus.members[i];
        const int level = opt.quick ? 1 : -1;
        const double m = check_lower_bound_outer(h, mu_profile(h, level));
        chk.truth(m >= std::exp(-41.0), corpus.names[i] + ": bound below exp(-41)");
        if (corpus.smooth[i]) smooth_min = std::min(smooth_min, m);
    }
    chk.truth(smooth_min >= 0.1, "smooth sub-corpus minimum below 0.1");
    std::ostringstream os;
    os << "smooth minimum " << smooth_min;
    if (chk.ok) chk.detail.str(os.str());
}

// 9. The weighted mu-moment stays controlled by the energy.
void criterion_mu_moment(const SelfTestOptions& opt, Checker& chk) {
    for (const auto& h : smooth_corpus(build_corpus(opt.quick))) {
        const MuProfile prof = mu_profile(h);
        for (double alpha : {0.1, 0.5, 0.9}) {
            const double q = check_dauglas_bound(h, alpha, prof);
            chk.truth(q <= 100.0, h.name() + ": quotient " + std::to_string(q) + " > 100");
        }
    }
}

// 10. Classifier calibration on the pure logarithmic models.
void criterion_calibration(const SelfTestOptions&, Checker& chk) {
    const double gamma = pi * std::exp(4.0);
    for (double p : {0.5, 0.8, 1.0, 1.3, 2.0, 3.0}) {
        const ReducedIntegrand f = model_integrand(p, gamma);
        const Verdict v = classify_convergence(f).verdict;
        const Verdict expected = p > 1.0 ? Verdict::Convergent : Verdict::Divergent;
        chk.truth(v == expected, "model p = " + std::to_string(p));
        if (p != 1.0) {
            const double s_lo = std::log(gamma / (pi / 2.0));
            const double s_hi = std::log(gamma / 1e-6);
            const double closed =
                (std::pow(s_lo, 1.0 - p) - std::pow(s_hi, 1.0 - p)) / (p - 1.0);
            chk.rel(truncated_integral(f, 1e-6), closed, 1e-8,
                    "truncated value at p = " + std::to_string(p));
        }
    }
}

} // namespace

std::vector<CriterionResult> run_selftest(const SelfTestOptions& options) {
    struct Entry {
        int id;
        const char* name;
        CriterionBody body;
    };
    const Entry entries[] = {
        {1, "exact double-integral energy for monomials", criterion_douglas},
        {2, "boundary-only energy identity", criterion_identity},
        {3, "area route vs coefficient series", criterion_cross_route},
        {4, "radial slice identity", criterion_slices},
        {5, "vanishing split functionals", criterion_vanishing},
        {6, "power-log trichotomy", criterion_trichotomy},
        {7, "two-sided equivalence band", criterion_equivalence},
        {8, "interior lower bound", criterion_lower_bound},
        {9, "weighted mu-moment bound", criterion_mu_moment},
        {10, "classifier calibration", criterion_calibration},
    };
    std::vector<CriterionResult> results;
    for (const Entry& e : entries) {
        Checker chk;
        const auto start = std::chrono::steady_clock::now();
        e.body(options, chk);
        const auto stop = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        r.passed = chk.ok;
        r.detail = chk.summary();
        r.seconds = std::chrono::duration<double>(stop - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace dirlab
