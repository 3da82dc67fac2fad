#include "dirlab/energy.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dirlab {

namespace {

std::size_t angular_size_for(const TaylorSeries& f) {
    // |f'|^2 on a circle is a trig polynomial of degree 2(m-1); pick a
    // power of two comfortably above that.
    std::size_t n = 64;
    const std::size_t need = 4 * (f.coeffs.size() + 1);
    while (n < need) n *= 2;
    return n;
}

double angular_mean_sq_deriv(const TaylorSeries& df, double r) {
    const std::size_t n = angular_size_for(df);
    std::vector<double> terms(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
        terms[j] = std::norm(df.eval(r * complex(std::cos(theta), std::sin(theta))));
    }
    return pairwise_sum(terms) / static_cast<double>(n); // (1/2pi) int |f'|^2 dtheta
}

} // namespace

double energy_area(const TaylorSeries& f, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("energy_area: alpha must lie in [0,1)");
    const TaylorSeries df = f.derivative();
    if (df.coeffs.empty()) return 0.0;
    // D_alpha = 2 int_0^1 M(r) (1-r)^alpha r dr with M(r) = (1/2pi) int |f'|^2 dtheta.
    auto g = [&](double r) { return 2.0 * angular_mean_sq_deriv(df, r) * r; };
    if (alpha == 0.0) return adaptive_1d(g, 0.0, 1.0, 1e-10).value;
    // Substitute t = (1-r)^(alpha+1) to absorb the endpoint weight.
    const double p = alpha + 1.0;
    return adaptive_1d([&](double t) { return g(1.0 - std::pow(t, 1.0 / p)) / p; }, 0.0, 1.0,
                       1e-10)
        .value;
}

double energy_parseval_exact(const TaylorSeries& f, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("energy_parseval_exact: alpha must lie in [0,1)");
    std::vector<double> terms;
    terms.reserve(f.coeffs.size());
    for (std::size_t n = 1; n < f.coeffs.size(); ++n) {
        const double nn = static_cast<double>(n);
        const double weight =
            alpha == 0.0 ? nn : 2.0 * nn * nn * std::beta(2.0 * nn, alpha + 1.0);
        terms.push_back(weight * std::norm(f.coeffs[n]));
    }
    return pairwise_sum(std::span<const double>(terms));
}

double energy_parseval_equiv(const TaylorSeries& f, double alpha) {
    std::vector<double> terms;
    terms.reserve(f.coeffs.size());
    for (std::size_t n = 1; n < f.coeffs.size(); ++n)
        terms.push_back(std::norm(f.coeffs[n]) *
                        std::pow(1.0 + static_cast<double>(n), 1.0 - alpha));
    return pairwise_sum(std::span<const double>(terms));
}

double energy_douglas(const std::function<complex(double)>& trace, double alpha,
                      std::size_t n) {
    UniformAngularGrid grid(n);
    const double w = grid.spacing();
    const double half = 0.5 * w;
    std::vector<complex> f_theta(n), f_phi(n);
    for (std::size_t j = 0; j < n; ++j) {
        f_theta[j] = trace(grid.node(j));
        f_phi[j] = trace(grid.node(j) + half);
        if (!std::isfinite(std::norm(f_theta[j])) || !std::isfinite(std::norm(f_phi[j])))
            throw std::domain_error("energy_douglas: non-finite boundary sample at node " +
                                    std::to_string(j));
    }
    const double expo = 2.0 - alpha;
    std::vector<double> rows(n);
    parallel_for(n, [&](std::size_t j) {
        const double theta = grid.node(j);
        std::vector<double> terms(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double phi = grid.node(k) + half;
            terms[k] = std::norm(f_theta[j] - f_phi[k]) / std::pow(chord(theta, phi), expo);
        }
        rows[j] = pairwise_sum(terms);
    });
    double value = w * w * pairwise_sum(rows);
    if (alpha == 0.0) value /= 4.0 * pi * pi;
    return value;
}

double slice_energy_sum(const TaylorSeries& f, double r) {
    if (!(r >= 0.0 && r <= 1.0))
        throw std::invalid_argument("slice_energy_sum: r must lie in [0,1]");
    std::vector<double> terms;
    terms.reserve(f.coeffs.size());
    for (std::size_t n = 1; n < f.coeffs.size(); ++n)
        terms.push_back(static_cast<double>(n) *
                        std::pow(r, 2.0 * static_cast<double>(n)) * std::norm(f.coeffs[n]));
    return pairwise_sum(std::span<const double>(terms));
}

double slice_energy_cr(const OuterFunction& f, double r) {
    if (1.0 - r < f.min_clearance())
        throw ClearanceError(1.0 - r, 2 * f.grid_size());
    const std::size_t n = f.grid_size();
    std::vector<double> terms(n);
    parallel_for(n, [&](std::size_t j) {
        const double theta = f.sample_angle(j);
        const complex z = r * complex(std::cos(theta), std::sin(theta));
        terms[j] = std::norm(f.eval(z)) * f.dv_dtheta(z);
    });
    return pairwise_sum(terms) / static_cast<double>(n);
}

double energy_slice_route(const TaylorSeries& f, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("energy_slice_route: alpha must lie in (0,1)");
    // D(f_r)/r = O(r) near 0, extended by 0 at r = 0.
    return radial_weighted(
        [&](double r) { return r == 0.0 ? 0.0 : slice_energy_sum(f, r) / r; }, alpha);
}

CrAreaResult energy_cr_area(const OuterFunction& f, double alpha, std::size_t radial_points) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("energy_cr_area: alpha must lie in (0,1)");
    const RadialRule rule = RadialRule::make(alpha, radial_points);
    const std::size_t n = f.grid_size();
    const double clearance = f.min_clearance();

    CrAreaResult result;
    std::vector<double> contrib(rule.r_nodes.size(), 0.0);
    std::vector<char> used(rule.r_nodes.size(), 0);
    parallel_for(rule.r_nodes.size(), [&](std::size_t i) {
        const double r = rule.r_nodes[i];
        if (rule.one_minus_r[i] < clearance) return;
        used[i] = 1;
        std::vector<double> terms(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double theta = f.sample_angle(j);
            const complex z = r * complex(std::cos(theta), std::sin(theta));
            terms[j] = std::norm(f.eval(z)) * f.dv_dtheta(z);
        }
        contrib[i] = rule.weights[i] * pairwise_sum(terms) / static_cast<double>(n);
    });
    for (std::size_t i = 0; i < rule.r_nodes.size(); ++i) {
        if (used[i]) {
            ++result.nodes_used;
        } else {
            ++result.nodes_dropped;
            result.truncated_mass += rule.weights[i];
        }
    }
    result.value = pairwise_sum(std::span<const double>(contrib));
    return result;
}

std::string EnergyReport::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"alpha\":" << alpha << ",\"routes\":{";
    bool first = true;
    for (const auto& [k, v] : routes) {
        if (!first) os << ",";
        first = false;
        os << "\"" << k << "\":" << v;
    }
    os << "},\"ratios\":{";
    first = true;
    for (const auto& [k, v] : ratios) {
        if (!first) os << ",";
        first = false;
        os << "\"" << k << "\":" << v;
    }
    os << "},\"grid\":{\"angular_n\":" << angular_n << ",\"radial_points\":" << radial_points
       << ",\"rho\":" << rho << "},\"flagged\":" << (flagged ? "true" : "false") << "}";
    return os.str();
}

EnergyReport compute_energy_report(const BoundaryFunction& h, double alpha, std::size_t n) {
    EnergyReport report;
    report.alpha = alpha;
    report.angular_n = n;
    report.radial_points = 64;

    OuterFunction outer(h, n);
    const std::size_t n_max = std::min<std::size_t>(n / 2 - 1, 128);
    const TaylorSeries series = taylor_coefficients(outer, n_max, 0.5);
    report.rho = series.rho;
    report.flagged = series.truncation_error > 1e-8;

    report.routes["area"] = energy_area(series, alpha);
    report.routes["parseval_exact"] = energy_parseval_exact(series, alpha);
    report.routes["parseval_equiv"] = energy_parseval_equiv(series, alpha);
    // The recovered series converges on the closed disk whenever h is
    // regular enough; truncation beyond tolerance is already flagged above.
    report.routes["douglas"] = energy_douglas(
        [&](double theta) { return series.eval(complex(std::cos(theta), std::sin(theta))); },
        alpha, std::min<std::size_t>(n, 512));
    if (alpha > 0.0) {
        report.routes["slice_route"] = energy_slice_route(series, alpha);
        report.routes["cr_area"] = energy_cr_area(outer, alpha).value;
    }

    const double ref = report.routes["area"];
    for (const auto& [k, v] : report.routes)
        if (k != "area" && ref != 0.0) report.ratios[k + "_over_area"] = v / ref;
    return report;
}

} // namespace dirlab
