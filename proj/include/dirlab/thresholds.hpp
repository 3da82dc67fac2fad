#ifndef DIRLAB_THRESHOLDS_HPP
#define DIRLAB_THRESHOLDS_HPP

#include "dirlab/boundary.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dirlab {

enum class Verdict { Convergent, Divergent, Inconclusive };

const char* verdict_name(Verdict v);

/// Outcome of the increment-ratio convergence probe.  A truncated positive
/// integral I(depth) is sampled at geometrically growing depths; the ratios
/// rho_k of successive increments discriminate between a finite limit
/// (rho < 1 bounded away) and divergence (rho >= 1).  For a tail behaving
/// like s^{-p} ds under depth doubling, rho = 2^{1-p} exactly.
struct ConvergenceVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<double> values;     // cumulative truncated values per depth
    std::vector<double> increments; // values[k+1] - values[k]
    std::vector<double> ratios;     // increments[k+1] / increments[k]
    std::vector<double> depths;     // depth parameter per value
};

/// Classify a refinement sequence by the ratios of its last increments.
/// Convergent requires every tested ratio <= 0.9; Divergent requires every
/// tested ratio >= 0.98; increments below noise_rel * |final value| count
/// as stagnation (Convergent).  Anything else is Inconclusive.
ConvergenceVerdict classify_sequence(const std::vector<double>& values,
                                     double noise_rel = 1e-8);

enum class Quantity { N, D, C };

const char* quantity_name(Quantity q);

/// One-dimensional reduction of a boundary functional on the power-log
/// family near the singular point, expressed in the log variable
/// s = log(gamma/theta) so that arbitrarily deep truncations stay
/// representable.  integrand_s(s) already includes the Jacobian theta ds.
struct ReducedIntegrand {
    Quantity quantity = Quantity::N;
    HBetaParams params;
    double p = 0.0; // effective log-exponent of the s-tail
    double s_lo = 0.0; // s at theta = pi/2
    std::function<double(double)> integrand_s;
};

/// Dominant 1D forms near 0+ on (0, pi/2]:
///   N: (h(theta) - c0)^2 theta^(alpha-1)        -> tail s^(-2 beta)
///   D: h^2 (log(h/c0)/theta)^(1-alpha)          -> tail s^(1-alpha-2 beta)
///   C: h^2 log(h/c0) theta^(alpha-1)            -> tail s^(1-2 beta)
/// Convergence at 0+ is equivalent to p > 1 with p as recorded.
ReducedIntegrand reduced_integrand(Quantity q, double alpha, double beta);

/// Pure calibration model 1/(theta log^p(gamma/theta)); tail exactly s^(-p).
ReducedIntegrand model_integrand(double p, double gamma);

/// int_eps^{pi/2} f dtheta, evaluated in the s variable.  Throws when the
/// requested depth exceeds the quadrature budget.
double truncated_integral(const ReducedIntegrand& f, double eps);
/// Same integral truncated at s-depth instead of eps (eps = gamma e^{-s}).
double truncated_integral_depth(const ReducedIntegrand& f, double s_depth);

/// Depth schedule L_k = L0 * 2^k with L0 = log(gamma/(pi/4)), k = 0..depth.
ConvergenceVerdict classify_convergence(const ReducedIntegrand& f, int depth = 6);

struct ThresholdRow {
    Quantity quantity;
    double alpha = 0.0;
    double beta = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    Verdict expected = Verdict::Inconclusive;
    bool agree = false;
};

/// One row per (quantity, beta); the expected column applies the closed
/// thresholds beta > 1/2 (N), beta > 1 - alpha/2 (D), beta > 1 (C).
std::vector<ThresholdRow> threshold_table(double alpha, const std::vector<double>& betas,
                                          int depth = 6);

std::string threshold_table_csv(const std::vector<ThresholdRow>& rows);
std::string threshold_table_json(const std::vector<ThresholdRow>& rows);

} // namespace dirlab

#endif
