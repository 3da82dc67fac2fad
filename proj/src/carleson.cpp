#include "dirlab/carleson.hpp"

#include "dirlab/energy.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dirlab {

KernelValue logequiv_kernel(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("logequiv_kernel: arguments must be positive");
    KernelValue out;
    if (a == b) {
        out.value = 0.0;
        out.regime = KernelValue::Regime::Comparable;
        return out;
    }
    out.value = (a * a - b * b) * std::log(a / b);
    if (a >= 2.0 * b)
        out.regime = KernelValue::Regime::AboveDouble;
    else if (a <= 0.5 * b)
        out.regime = KernelValue::Regime::BelowHalf;
    else
        out.regime = KernelValue::Regime::Comparable;
    return out;
}

// ---------------------------------------------------------------------------
// meshes

namespace {

constexpr std::size_t k_graded_uniform_n = 256;
constexpr double k_graded_ds = 0.125;
// Far below every scale the graded meshes can produce (depths bottom out
// near 1e-112), yet safely above the underflow threshold.
constexpr double k_mu_floor = 1e-280;

double mesh_value_at(const BoundaryFunction& h, double theta) {
    const double v = h(theta);
    if (!std::isfinite(v) || v < 0.0)
        throw std::domain_error("mesh: boundary value not finite and non-negative at theta = " +
                                std::to_string(theta));
    return v;
}

} // namespace

AngularMesh AngularMesh::uniform(const BoundaryFunction& h, std::size_t n, bool staggered) {
    if (!is_power_of_two(n) || n < 8)
        throw std::invalid_argument("AngularMesh::uniform: n must be a power of two >= 8");
    AngularMesh mesh;
    mesh.graded = false;
    mesh.theta.resize(n);
    mesh.value.resize(n);
    mesh.weight.assign(n, 2.0 * pi / static_cast<double>(n));
    const double off = staggered ? 0.75 : 0.25;
    for (std::size_t j = 0; j < n; ++j) {
        mesh.theta[j] =
            -pi + (static_cast<double>(j) + off) * 2.0 * pi / static_cast<double>(n);
        mesh.value[j] = mesh_value_at(h, mesh.theta[j]);
    }
    return mesh;
}

AngularMesh AngularMesh::graded_mesh(const BoundaryFunction& h, double s_max, bool staggered) {
    if (!h.hbeta().has_value())
        throw std::invalid_argument("AngularMesh::graded_mesh: needs the power-log family");
    const HBetaParams& p = *h.hbeta();
    const double s0 = std::log(p.gamma / pi);
    if (!(s_max > s0)) throw std::invalid_argument("graded_mesh: s_max must exceed log(gamma/pi)");

    AngularMesh mesh;
    mesh.graded = true;

    const double ds = k_graded_ds;
    const double off_s = staggered ? 1.0 : 0.5;
    const double cell = 2.0 * std::sinh(0.5 * ds); // exact mass of one s-cell / theta

    // The lower half also needs resolution proportional to the distance
    // from 0: the dominant interactions of a node at depth theta pair it
    // with the constant region at angles of size ~theta.  Below the cut
    // the lower half is graded like the upper one (phi = -gamma e^{-s}).
    const double s_cut = s0 + 6.0; // |phi| below ~ pi e^{-6}
    const double phi_cut = -p.gamma * std::exp(-s_cut);

    // uniform part of the lower half, (-pi, phi_cut]
    const std::size_t m = k_graded_uniform_n;
    const double span = phi_cut + pi;
    const double off_u = staggered ? 0.75 : 0.25;
    for (std::size_t j = 0; j < m; ++j) {
        const double theta = -pi + (static_cast<double>(j) + off_u) * span / static_cast<double>(m);
        mesh.theta.push_back(theta);
        mesh.value.push_back(mesh_value_at(h, theta));
        mesh.weight.push_back(span / static_cast<double>(m));
    }

    // geometrically graded half on (0, pi]: theta = gamma e^{-s}, uniform in s
    const std::size_t count = static_cast<std::size_t>(std::llround((s_max - s0) / ds));
    for (std::size_t k = 0; k < count; ++k) {
        const double s = s0 + (static_cast<double>(k) + off_s) * ds;
        const double theta = p.gamma * std::exp(-s);
        mesh.theta.push_back(theta);
        mesh.value.push_back(h.scale() * hbeta_eval_logvar(p, s));
        mesh.weight.push_back(theta * cell);
    }

    // mirrored graded tail on (phi_cut, 0)
    const std::size_t skip = static_cast<std::size_t>(std::llround((s_cut - s0) / ds));
    for (std::size_t k = skip; k < count; ++k) {
        const double s = s0 + (static_cast<double>(k) + off_s) * ds;
        const double theta = -p.gamma * std::exp(-s);
        mesh.theta.push_back(theta);
        mesh.value.push_back(mesh_value_at(h, theta));
        mesh.weight.push_back(-theta * cell);
    }
    return mesh;
}

AngularMesh AngularMesh::for_function(const BoundaryFunction& h, int level, bool staggered) {
    if (level < 0) throw std::invalid_argument("AngularMesh::for_function: level must be >= 0");
    if (!h.singular_at_zero())
        return uniform(h, static_cast<std::size_t>(128) << level, staggered);
    const double s0 = std::log(h.hbeta()->gamma / pi);
    return graded_mesh(h, s0 + 16.0 * std::pow(2.0, level), staggered);
}

int AngularMesh::max_level(const BoundaryFunction& h) { return h.singular_at_zero() ? 4 : 3; }

// ---------------------------------------------------------------------------
// double-sum functionals

namespace {

// SS w_i w_j k(value_i, value_j) / chord^expo over outer x inner nodes.
template <typename Kernel>
double staggered_double_sum(const AngularMesh& outer, const AngularMesh& inner, double expo,
                            Kernel kernel) {
    std::vector<double> rows(outer.theta.size());
    parallel_for(outer.theta.size(), [&](std::size_t i) {
        const double ti = outer.theta[i];
        const double vi = outer.value[i];
        const double wi = outer.weight[i];
        std::vector<double> terms(inner.theta.size());
        for (std::size_t j = 0; j < inner.theta.size(); ++j) {
            const double num = kernel(vi, inner.value[j]);
            terms[j] = num == 0.0 ? 0.0
                                  : wi * inner.weight[j] * num /
                                        std::pow(chord(ti, inner.theta[j]), expo);
        }
        rows[i] = pairwise_sum(terms);
    });
    return pairwise_sum(rows);
}

FunctionalValue classify_refinement(std::vector<double> values) {
    const ConvergenceVerdict cv = classify_sequence(values);
    FunctionalValue out;
    out.value = values.back();
    out.flagged_infinite = cv.verdict == Verdict::Divergent;
    out.inconclusive = cv.verdict == Verdict::Inconclusive;
    out.refinement = std::move(values);
    return out;
}

double n_alpha_level(const BoundaryFunction& h, double alpha, int level) {
    const AngularMesh outer = AngularMesh::for_function(h, level, false);
    const AngularMesh inner = AngularMesh::for_function(h, level, true);
    return staggered_double_sum(outer, inner, 2.0 - alpha, [](double a, double b) {
        const double d = a - b;
        return d * d;
    });
}

double c_alpha_level(const BoundaryFunction& h, double alpha, int level) {
    const AngularMesh outer = AngularMesh::for_function(h, level, false);
    const AngularMesh inner = AngularMesh::for_function(h, level, true);
    return staggered_double_sum(outer, inner, 2.0 - alpha, [](double a, double b) {
        if (a <= 0.0 || b <= 0.0 || a == b) return 0.0; // h > 0 a.e.; zeros carry no mass
        return (a * a - b * b) * std::log(a / b);
    });
}

} // namespace

FunctionalValue big_n_alpha(const BoundaryFunction& h, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("big_n_alpha: alpha must lie in [0,1)");
    std::vector<double> values;
    for (int level = 0; level <= AngularMesh::max_level(h); ++level)
        values.push_back(n_alpha_level(h, alpha, level));
    return classify_refinement(std::move(values));
}

FunctionalValue c_alpha(const BoundaryFunction& h, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("c_alpha: alpha must lie in [0,1)");
    std::vector<double> values;
    for (int level = 0; level <= AngularMesh::max_level(h); ++level)
        values.push_back(c_alpha_level(h, alpha, level));
    return classify_refinement(std::move(values));
}

// ---------------------------------------------------------------------------
// sublevel machinery: per reference node, the nodes with h(phi) <= h(theta)/2
// sorted by chord distance, with the running sums every scan needs.

namespace {

struct SublevelData {
    // grouped by strictly increasing chord distance
    std::vector<double> chord;
    std::vector<double> wlog;    // per group: sum of weight * log(h(theta)/h(phi))
    std::vector<double> pre_log; // pre_log[i] = sum of wlog over groups < i (size m+1)
    std::vector<double> suf_inv; // suf_inv[i] = sum of wlog/chord^2 over groups >= i (size m+1)
};

SublevelData sublevel_data(double theta, double h_theta, const AngularMesh& inner) {
    std::vector<std::pair<double, double>> entries; // (chord, w * logratio)
    for (std::size_t j = 0; j < inner.theta.size(); ++j) {
        const double v = inner.value[j];
        if (!(v > 0.0) || v > 0.5 * h_theta) continue;
        entries.emplace_back(chord(theta, inner.theta[j]),
                             inner.weight[j] * std::log(h_theta / v));
    }
    std::sort(entries.begin(), entries.end());

    SublevelData d;
    for (const auto& [c, wl] : entries) {
        if (!d.chord.empty() && d.chord.back() == c) {
            d.wlog.back() += wl;
        } else {
            d.chord.push_back(c);
            d.wlog.push_back(wl);
        }
    }
    const std::size_t m = d.chord.size();
    d.pre_log.assign(m + 1, 0.0);
    d.suf_inv.assign(m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) d.pre_log[i + 1] = d.pre_log[i] + d.wlog[i];
    for (std::size_t i = m; i-- > 0;)
        d.suf_inv[i] = d.suf_inv[i + 1] + d.wlog[i] / (d.chord[i] * d.chord[i]);
    return d;
}

struct MuResult {
    double mu = 1.0;
    bool floored = false;
};

MuResult finish_mu(double mu) {
    if (mu < k_mu_floor) return {k_mu_floor, true};
    return {std::min(mu, 1.0), false};
}

// Exact scan: between consecutive chord values both running sums are
// constant, so delta * a_delta is increasing and a~_delta / delta is
// decreasing on each piece; the first violation is found analytically.
MuResult mu_from_sublevel(const SublevelData& d) {
    const double four_pi = 4.0 * pi;
    const std::size_t m = d.chord.size();
    if (m == 0) return {1.0, false};
    double prev = 0.0;
    for (std::size_t k = 0; k <= m; ++k) {
        const double ck = k < m ? d.chord[k] : 2.0; // chords never exceed 2
        const double a_sum = d.suf_inv[k];  // 2 pi a_delta for delta in (prev, ck)
        const double t_sum = d.pre_log[k];  // 2 pi a~_delta on the same piece
        const double right = std::min(ck, 1.0);
        if (right > prev) {
            if (t_sum > four_pi * prev) return finish_mu(prev); // a~/delta > 2 just above prev
            if (a_sum * right > four_pi)
                return finish_mu(std::max(prev, four_pi / a_sum)); // delta * a > 2 before right
        }
        if (k < m && ck <= 1.0) {
            // the point delta = ck includes the tying group on both sides
            if (ck * d.suf_inv[k] > four_pi || d.pre_log[k + 1] > four_pi * ck)
                return finish_mu(ck);
        }
        prev = ck;
        if (prev >= 1.0) break;
    }
    return {1.0, false};
}

// inner integrals of the split functionals at distance scale lambda
double far_integral(const SublevelData& d, double lambda) {
    const auto it = std::lower_bound(d.chord.begin(), d.chord.end(), lambda);
    return d.suf_inv[static_cast<std::size_t>(it - d.chord.begin())];
}

double near_integral_weighted(const SublevelData& d, double lambda, double alpha) {
    const auto it = std::upper_bound(d.chord.begin(), d.chord.end(), lambda);
    const std::size_t end = static_cast<std::size_t>(it - d.chord.begin());
    std::vector<double> terms(end);
    for (std::size_t i = 0; i < end; ++i)
        terms[i] = d.wlog[i] * std::pow(d.chord[i], alpha - 2.0);
    return pairwise_sum(terms);
}

double near_integral_plain(const SublevelData& d, double lambda) {
    const auto it = std::upper_bound(d.chord.begin(), d.chord.end(), lambda);
    return d.pre_log[static_cast<std::size_t>(it - d.chord.begin())];
}

struct LevelScan {
    MuProfile profile;
    double n_value = 0.0;
    double n_tilde_value = 0.0;
    double h_norm_sq = 0.0;
};

// One refinement level: mu per node, then the split functionals at
// lambda = mu (or a user-supplied constant lambda when lambda_const > 0).
LevelScan scan_level(const BoundaryFunction& h, double alpha, int level,
                     double lambda_const) {
    const AngularMesh outer = AngularMesh::for_function(h, level, false);
    const AngularMesh inner = AngularMesh::for_function(h, level, true);
    const std::size_t n = outer.theta.size();

    LevelScan scan;
    scan.profile.theta = outer.theta;
    scan.profile.weight = outer.weight;
    scan.profile.h_value = outer.value;
    scan.profile.mu.assign(n, 1.0);
    scan.profile.floored.assign(n, 0);

    std::vector<double> n_terms(n, 0.0), nt_terms(n, 0.0), h2_terms(n);
    parallel_for(n, [&](std::size_t i) {
        const double hi = outer.value[i];
        h2_terms[i] = outer.weight[i] * hi * hi;
        if (!(hi > 0.0)) return;
        const SublevelData d = sublevel_data(outer.theta[i], hi, inner);
        const MuResult mu = mu_from_sublevel(d);
        scan.profile.mu[i] = mu.mu;
        scan.profile.floored[i] = mu.floored ? 1 : 0;
        const double lambda = lambda_const > 0.0 ? lambda_const : mu.mu;
        const double far = far_integral(d, lambda);
        if (far > 0.0)
            n_terms[i] = outer.weight[i] * hi * hi * std::pow(far, 1.0 - alpha);
        nt_terms[i] = outer.weight[i] * hi * hi * near_integral_weighted(d, lambda, alpha);
    });
    scan.n_value = pairwise_sum(n_terms);
    scan.n_tilde_value = pairwise_sum(nt_terms);
    scan.h_norm_sq = pairwise_sum(h2_terms);
    return scan;
}

} // namespace

OscillationAverages oscillation_averages(const BoundaryFunction& h, double lambda,
                                         double theta, std::size_t n) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("oscillation_averages: lambda must be positive");
    const double h_theta = h(theta);
    if (!(h_theta > 0.0))
        throw std::domain_error("oscillation_averages: h must be positive at theta");
    const AngularMesh inner = AngularMesh::uniform(h, n, true);
    const SublevelData d = sublevel_data(theta, h_theta, inner);
    OscillationAverages out;
    out.theta = theta;
    out.lambda = lambda;
    out.a = far_integral(d, lambda) / (2.0 * pi);
    out.a_tilde = near_integral_plain(d, lambda) / (2.0 * pi);
    return out;
}

MuProfile mu_profile(const BoundaryFunction& h, int level) {
    if (level < 0) level = AngularMesh::max_level(h);
    return scan_level(h, 0.5 /* alpha unused for mu */, level, -1.0).profile;
}

NAlphaPair n_alphas(const BoundaryFunction& h, double lambda, double alpha) {
    if (!(lambda > 0.0)) throw std::invalid_argument("n_alphas: lambda must be positive");
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("n_alphas: alpha must lie in [0,1)");
    std::vector<double> vn, vnt;
    for (int level = 0; level <= AngularMesh::max_level(h); ++level) {
        const LevelScan scan = scan_level(h, alpha, level, lambda);
        vn.push_back(scan.n_value);
        vnt.push_back(scan.n_tilde_value);
    }
    return {classify_refinement(std::move(vn)), classify_refinement(std::move(vnt))};
}

// ---------------------------------------------------------------------------
// the norm side

namespace {

double outer_d_alpha_value(const BoundaryFunction& h, double alpha, std::size_t n,
                           std::size_t n_max) {
    const OuterFunction f(h, n);
    const double rho = f.trace_radius();
    const TaylorSeries series = taylor_coefficients(f, n_max, rho);
    return energy_parseval_exact(series, alpha);
}

} // namespace

FunctionalValue outer_norm_sq(const BoundaryFunction& h, double alpha) {
    FunctionalValue out;
    if (!h.singular_at_zero()) {
        std::vector<double> values;
        for (std::size_t n : {256u, 512u, 1024u}) {
            const OuterFunction f(h, n);
            const double o0 = std::norm(f.eval(complex(0.0, 0.0)));
            // extraction near the circle: the noise floor then only cuts
            // coefficients whose rescaled size is still negligible
            const TaylorSeries series =
                taylor_coefficients(f, std::min<std::size_t>(n / 2 - 1, 128), f.trace_radius());
            values.push_back(o0 + energy_parseval_exact(series, alpha));
        }
        out = classify_refinement(std::move(values));
        return out;
    }

    // Power-log family: finiteness from the reduced 1D integrand (interior
    // routes cannot reach the log-scale tail), value from a truncated
    // coefficient series on a large grid.
    const HBetaParams& p = *h.hbeta();
    ReducedIntegrand f;
    f.quantity = Quantity::D;
    f.params = p;
    f.s_lo = std::log(p.gamma / (pi / 2.0));
    const double log_gamma = std::log(p.gamma);
    const double log_c0 = std::log(p.c0);
    const double fam_alpha = p.alpha;
    const double beta = p.beta;
    f.p = 2.0 * beta - 1.0 + alpha;
    f.integrand_s = [=](double s) {
        const double lh = 0.5 * fam_alpha * (s - log_gamma) - beta * std::log(s);
        return std::exp(2.0 * lh + alpha * (log_gamma - s)) *
               std::pow(lh - log_c0, 1.0 - alpha);
    };
    const Verdict verdict = classify_convergence(f).verdict;

    const std::size_t n = 4096;
    const OuterFunction of(h, n);
    const double o0 = std::norm(of.eval(complex(0.0, 0.0)));
    out.value = o0 + outer_d_alpha_value(h, alpha, n, 1024);
    out.flagged_infinite = verdict == Verdict::Divergent;
    out.inconclusive = verdict == Verdict::Inconclusive;
    out.refinement = {out.value};
    return out;
}

IdentityCheck carleson_identity_check(const BoundaryFunction& h) {
    IdentityCheck check;
    const OuterFunction f(h, 1024);
    const TaylorSeries series = taylor_coefficients(f, 128, f.trace_radius());
    check.lhs = energy_parseval_exact(series, 0.0);
    const FunctionalValue c0 = c_alpha(h, 0.0);
    check.rhs = c0.value / (4.0 * pi * pi);
    check.flagged = c0.flagged_infinite;
    const double scale = std::max(std::abs(check.lhs), std::abs(check.rhs));
    check.relative_gap = scale > 0.0 ? std::abs(check.lhs - check.rhs) / scale : 0.0;
    return check;
}

CarlesonDecomposition theorem_decomposition(const BoundaryFunction& h, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("theorem_decomposition: alpha must lie in [0,1)");
    CarlesonDecomposition out;
    out.alpha = alpha;
    out.lambda_provenance = "mu";

    std::vector<double> vN, vn, vnt;
    double h_norm = 0.0;
    for (int level = 0; level <= AngularMesh::max_level(h); ++level) {
        vN.push_back(n_alpha_level(h, alpha, level));
        const LevelScan scan = scan_level(h, alpha, level, -1.0);
        vn.push_back(scan.n_value);
        vnt.push_back(scan.n_tilde_value);
        h_norm = scan.h_norm_sq;
    }
    out.big_n = classify_refinement(std::move(vN));
    out.n = classify_refinement(std::move(vn));
    out.n_tilde = classify_refinement(std::move(vnt));
    out.h_norm_sq = h_norm;

    out.lhs = outer_norm_sq(h, alpha);
    out.rhs = out.h_norm_sq + out.big_n.value + out.n.value + out.n_tilde.value;
    out.rhs_flagged =
        out.big_n.flagged_infinite || out.n.flagged_infinite || out.n_tilde.flagged_infinite;
    out.lhs_flagged = out.lhs.flagged_infinite;
    if (!out.rhs_flagged && !out.lhs_flagged && out.lhs.value > 0.0)
        out.ratio = out.rhs / out.lhs.value;
    return out;
}

double check_lower_bound_outer(const BoundaryFunction& h, const MuProfile& profile,
                               std::size_t n) {
    const OuterFunction f(h, n);
    // nudge above the exact limit so 1 - r never rounds below it
    const double clearance = f.min_clearance() * (1.0 + 1e-9);
    std::vector<double> minima(profile.theta.size(), 1e300);
    parallel_for(profile.theta.size(), [&](std::size_t i) {
        const double hi = profile.h_value[i];
        if (!(hi > 0.0)) return;
        const double mu = profile.mu[i];
        if (mu < clearance) return; // no admissible radius resolves this node
        const double theta = profile.theta[i];
        // radii r >= 1 - mu with 1 - r >= clearance, log-spaced in 1 - r
        const int steps = 6;
        double local = 1e300;
        for (int q = 0; q <= steps; ++q) {
            const double one_minus_r =
                clearance * std::pow(mu / clearance, static_cast<double>(q) / steps);
            const double r = 1.0 - one_minus_r;
            const double ratio =
                std::abs(f.eval(r * complex(std::cos(theta), std::sin(theta)))) / hi;
            local = std::min(local, ratio);
        }
        minima[i] = local;
    });
    double overall = 1e300;
    for (double v : minima) overall = std::min(overall, v);
    if (overall == 1e300)
        throw std::runtime_error("check_lower_bound_outer: no node admits a resolvable radius");
    return overall;
}

double check_dauglas_bound(const BoundaryFunction& h, double alpha,
                           const MuProfile& profile) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("check_dauglas_bound: alpha must lie in (0,1)");
    std::vector<double> num_terms(profile.theta.size(), 0.0),
        h2_terms(profile.theta.size(), 0.0);
    for (std::size_t i = 0; i < profile.theta.size(); ++i) {
        const double hi = profile.h_value[i];
        h2_terms[i] = profile.weight[i] * hi * hi;
        num_terms[i] =
            profile.weight[i] * hi * hi * std::pow(profile.mu[i], alpha - 1.0);
    }
    const double numerator = pairwise_sum(num_terms);
    const double h_norm = pairwise_sum(h2_terms);
    const double d_alpha = outer_d_alpha_value(h, alpha, h.singular_at_zero() ? 4096 : 1024,
                                               h.singular_at_zero() ? 1024 : 128);
    return numerator / (d_alpha + h_norm);
}

// ---------------------------------------------------------------------------
// serialization

namespace {

void append_functional(std::ostringstream& os, const char* name, const FunctionalValue& v) {
    os << "\"" << name << "\":{\"value\":" << v.value
       << ",\"flagged_infinite\":" << (v.flagged_infinite ? "true" : "false")
       << ",\"inconclusive\":" << (v.inconclusive ? "true" : "false") << ",\"refinement\":[";
    for (std::size_t i = 0; i < v.refinement.size(); ++i) {
        if (i) os << ",";
        os << v.refinement[i];
    }
    os << "]}";
}

} // namespace

std::string CarlesonDecomposition::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"alpha\":" << alpha << ",\"h_norm_sq\":" << h_norm_sq << ",";
    append_functional(os, "big_n", big_n);
    os << ",";
    append_functional(os, "n", n);
    os << ",";
    append_functional(os, "n_tilde", n_tilde);
    os << ",";
    append_functional(os, "lhs", lhs);
    os << ",\"rhs\":" << rhs << ",\"ratio\":" << ratio
       << ",\"rhs_flagged\":" << (rhs_flagged ? "true" : "false")
       << ",\"lhs_flagged\":" << (lhs_flagged ? "true" : "false") << ",\"lambda\":\""
       << lambda_provenance << "\"}";
    return os.str();
}

std::string MuProfile::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"theta\":[";
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (i) os << ",";
        os << theta[i];
    }
    os << "],\"mu\":[";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i) os << ",";
        os << mu[i];
    }
    os << "],\"floored\":[";
    for (std::size_t i = 0; i < floored.size(); ++i) {
        if (i) os << ",";
        os << (floored[i] ? "true" : "false");
    }
    os << "]}";
    return os.str();
}

void MuProfile::to_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("MuProfile::to_csv: cannot open " + path);
    out.precision(17);
    out << "theta,mu,floor_flag\n";
    for (std::size_t i = 0; i < theta.size(); ++i)
        out << theta[i] << "," << mu[i] << "," << (floored[i] ? 1 : 0) << "\n";
}

} // namespace dirlab
