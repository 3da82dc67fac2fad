#include "dirlab/thresholds.hpp"

#include "dirlab/quadrature.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dirlab {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Convergent: return "convergent";
        case Verdict::Divergent: return "divergent";
        default: return "inconclusive";
    }
}

const char* quantity_name(Quantity q) {
    switch (q) {
        case Quantity::N: return "N";
        case Quantity::D: return "D";
        default: return "C";
    }
}

ConvergenceVerdict classify_sequence(const std::vector<double>& values, double noise_rel) {
    ConvergenceVerdict out;
    out.values = values;
    if (values.size() < 3) return out;

    for (std::size_t k = 0; k + 1 < values.size(); ++k)
        out.increments.push_back(values[k + 1] - values[k]);

    // Noise is judged against the value an increment refines, not the
    // final one: in a rapidly growing sequence the early increments are
    // tiny compared to the last value yet carry the whole trend.
    auto is_noise = [&](std::size_t k) {
        const double scale = std::max(std::abs(values[k + 1]), 1e-300);
        return std::abs(out.increments[k]) <= noise_rel * scale;
    };

    bool all_stagnant = true;
    for (std::size_t k = 0; k < out.increments.size(); ++k)
        if (!is_noise(k)) all_stagnant = false;
    if (all_stagnant) {
        out.verdict = Verdict::Convergent;
        return out;
    }

    for (std::size_t k = 0; k + 1 < out.increments.size(); ++k) {
        const bool den_noise = is_noise(k), num_noise = is_noise(k + 1);
        if (den_noise && num_noise) continue;
        // a significant increment after a noise-level one is pure growth
        out.ratios.push_back(den_noise ? std::numeric_limits<double>::infinity()
                                       : out.increments[k + 1] / out.increments[k]);
    }
    if (out.ratios.empty()) {
        // only the very last increment rose above noise: no trend visible
        out.verdict = Verdict::Inconclusive;
        return out;
    }

    // Judge by the latest ratios, where the tail behavior dominates.
    const std::size_t tested = std::min<std::size_t>(3, out.ratios.size());
    bool all_low = true, all_high = true;
    for (std::size_t i = out.ratios.size() - tested; i < out.ratios.size(); ++i) {
        if (!(out.ratios[i] <= 0.9)) all_low = false;
        if (!(out.ratios[i] >= 0.98)) all_high = false;
    }
    if (all_low)
        out.verdict = Verdict::Convergent;
    else if (all_high)
        out.verdict = Verdict::Divergent;
    else
        out.verdict = Verdict::Inconclusive;
    return out;
}

ReducedIntegrand reduced_integrand(Quantity q, double alpha, double beta) {
    if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0))
        throw std::invalid_argument("reduced_integrand: need 0 < alpha < 1 and beta > 0");
    HBetaParams p;
    p.alpha = alpha;
    p.beta = beta;
    p.gamma = pi * std::exp(2.0 * beta / alpha);
    p.c0 = 0.5 * std::pow(pi, -0.5 * alpha) * std::pow(2.0 * beta / alpha, -beta);

    ReducedIntegrand f;
    f.quantity = q;
    f.params = p;
    f.s_lo = std::log(p.gamma / (pi / 2.0));

    const double log_gamma = std::log(p.gamma);
    const double log_c0 = std::log(p.c0);
    // On (0, pi/2]: log h = (alpha/2)(s - log gamma) - beta log s, all in s.
    auto log_h = [alpha, beta, log_gamma](double s) {
        return 0.5 * alpha * (s - log_gamma) - beta * std::log(s);
    };
    switch (q) {
        case Quantity::N:
            f.p = 2.0 * beta;
            // (h - c0)^2 theta^(alpha-1) dtheta -> (h - c0)^2 theta^alpha ds
            f.integrand_s = [p, alpha, log_h](double s) {
                const double h = std::exp(log_h(s));
                const double theta_alpha = std::exp(alpha * (std::log(p.gamma) - s));
                const double d = h - p.c0;
                return d * d * theta_alpha;
            };
            break;
        case Quantity::D:
            f.p = 2.0 * beta - 1.0 + alpha;
            // h^2 (log(h/c0)/theta)^(1-alpha) dtheta -> h^2 log(h/c0)^(1-alpha) theta^alpha ds
            f.integrand_s = [p, alpha, log_h, log_c0](double s) {
                const double lh = log_h(s);
                const double h2 = std::exp(2.0 * lh);
                const double theta_alpha = std::exp(alpha * (std::log(p.gamma) - s));
                return h2 * std::pow(lh - log_c0, 1.0 - alpha) * theta_alpha;
            };
            break;
        case Quantity::C:
            f.p = 2.0 * beta - 1.0;
            // h^2 log(h/c0) theta^(alpha-1) dtheta -> h^2 log(h/c0) theta^alpha ds
            f.integrand_s = [p, alpha, log_h, log_c0](double s) {
                const double lh = log_h(s);
                const double h2 = std::exp(2.0 * lh);
                const double theta_alpha = std::exp(alpha * (std::log(p.gamma) - s));
                return h2 * (lh - log_c0) * theta_alpha;
            };
            break;
    }
    return f;
}

ReducedIntegrand model_integrand(double p_exp, double gamma) {
    if (!(gamma > pi)) throw std::invalid_argument("model_integrand: need gamma > pi");
    ReducedIntegrand f;
    f.quantity = Quantity::N; // irrelevant for the model
    f.params.gamma = gamma;
    f.p = p_exp;
    f.s_lo = std::log(gamma / (pi / 2.0));
    // 1/(theta log^p(gamma/theta)) dtheta -> s^(-p) ds
    f.integrand_s = [p_exp](double s) { return std::pow(s, -p_exp); };
    return f;
}

namespace {

constexpr double k_max_depth = 1e6;

double integrate_s(const ReducedIntegrand& f, double s_from, double s_to) {
    if (s_to <= s_from) return 0.0;
    const AdaptiveResult r = adaptive_1d(f.integrand_s, s_from, s_to, 1e-12);
    return r.value;
}

} // namespace

double truncated_integral_depth(const ReducedIntegrand& f, double s_depth) {
    if (s_depth > k_max_depth)
        throw std::invalid_argument("truncated_integral: requested depth " +
                                    std::to_string(s_depth) + " exceeds the budget of " +
                                    std::to_string(k_max_depth));
    return integrate_s(f, f.s_lo, s_depth);
}

double truncated_integral(const ReducedIntegrand& f, double eps) {
    if (!(eps > 0.0 && eps <= pi / 2.0))
        throw std::invalid_argument("truncated_integral: eps must lie in (0, pi/2]");
    return truncated_integral_depth(f, std::log(f.params.gamma / eps));
}

ConvergenceVerdict classify_convergence(const ReducedIntegrand& f, int depth) {
    if (depth < 4) throw std::invalid_argument("classify_convergence: depth must be >= 4");
    const double l0 = std::log(f.params.gamma / (pi / 4.0));
    std::vector<double> depths(depth + 1), values(depth + 1);
    double acc = integrate_s(f, f.s_lo, l0);
    depths[0] = l0;
    values[0] = acc;
    for (int k = 1; k <= depth; ++k) {
        depths[k] = l0 * std::pow(2.0, k);
        // accumulate increments directly so additivity is exact
        acc += integrate_s(f, depths[k - 1], depths[k]);
        values[k] = acc;
    }
    ConvergenceVerdict out = classify_sequence(values);
    out.depths = std::move(depths);
    return out;
}

std::vector<ThresholdRow> threshold_table(double alpha, const std::vector<double>& betas,
                                          int depth) {
    std::vector<ThresholdRow> rows;
    for (Quantity q : {Quantity::N, Quantity::D, Quantity::C}) {
        for (double beta : betas) {
            ThresholdRow row;
            row.quantity = q;
            row.alpha = alpha;
            row.beta = beta;
            double critical = 0.0;
            switch (q) {
                case Quantity::N: critical = 0.5; break;
                case Quantity::D: critical = 1.0 - 0.5 * alpha; break;
                case Quantity::C: critical = 1.0; break;
            }
            row.expected = beta > critical ? Verdict::Convergent : Verdict::Divergent;
            row.verdict = classify_convergence(reduced_integrand(q, alpha, beta), depth).verdict;
            row.agree = row.verdict == row.expected;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string threshold_table_csv(const std::vector<ThresholdRow>& rows) {
    std::ostringstream os;
    os.precision(17);
    os << "quantity,alpha,beta,verdict,expected,agree\n";
    for (const auto& r : rows)
        os << quantity_name(r.quantity) << "," << r.alpha << "," << r.beta << ","
           << verdict_name(r.verdict) << "," << verdict_name(r.expected) << ","
           << (r.agree ? "true" : "false") << "\n";
    return os.str();
}

std::string threshold_table_json(const std::vector<ThresholdRow>& rows) {
    std::ostringstream os;
    os.precision(17);
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i) os << ",";
        os << "{\"quantity\":\"" << quantity_name(r.quantity) << "\",\"alpha\":" << r.alpha
           << ",\"beta\":" << r.beta << ",\"verdict\":\"" << verdict_name(r.verdict)
           << "\",\"expected\":\"" << verdict_name(r.expected) << "\",\"agree\":"
           << (r.agree ? "true" : "false") << "}";
    }
    os << "]";
    return os.str();
}

} // namespace dirlab
