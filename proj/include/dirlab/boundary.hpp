#ifndef DIRLAB_BOUNDARY_HPP
#define DIRLAB_BOUNDARY_HPP

#include "dirlab/quadrature.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dirlab {

enum class LogIntegrability { Proved, NumericPass, Fail, Unknown };

/// Parameters of the one-sided power-log family
///   h(theta) = theta^(-alpha/2) * log^(-beta)(gamma/theta)  on (0, pi],
///   h(theta) = c0 = h(pi)/2                                 on (-pi, 0),
/// with gamma = pi e^{2 beta / alpha}, which makes h decreasing on (0, pi].
struct HBetaParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double c0 = 0.0;
};

/// Non-negative boundary modulus on (-pi, pi].  Immutable after
/// construction; safe to share across threads.
class BoundaryFunction {
  public:
    enum class Kind { ClosedForm, Sampled };

    double operator()(double theta) const { return eval_(theta); }

    Kind kind() const { return kind_; }
    LogIntegrability log_status() const { return log_status_; }
    bool singular_at_zero() const { return hbeta_.has_value(); }
    const std::optional<HBetaParams>& hbeta() const { return hbeta_; }
    const std::string& name() const { return name_; }

    // Sampled variant only.
    const std::vector<double>& samples() const { return samples_; }
    std::size_t sample_count() const { return samples_.size(); }

    static BoundaryFunction make_constant(double c);
    static BoundaryFunction make_sin_bump(double a);       // 1 + a sin(theta), |a| < 1
    static BoundaryFunction make_step(double lo, double hi); // lo on (-pi,0], hi on (0,pi]
    /// |p(e^{i theta})| for a polynomial with the given coefficients.
    static BoundaryFunction make_poly_modulus(std::vector<complex> coeffs);
    /// e^{p(theta)} for the trig polynomial p(theta) = a0 + sum_k (a_k cos k theta + b_k sin k theta);
    /// coefficient list is a0, a1, b1, a2, b2, ...
    static BoundaryFunction make_exp_trig(std::vector<double> coeffs);
    static BoundaryFunction make_hbeta(double alpha, double beta);
    static BoundaryFunction make_sampled(UniformAngularGrid grid, std::vector<double> values);
    /// c * h, c > 0.  Keeps the power-log parameters (if any) so graded
    /// meshes remain available; scale() reports the accumulated factor.
    static BoundaryFunction make_scaled(const BoundaryFunction& h, double c);
    /// h(theta - theta0).  Not available for functions singular at 0.
    static BoundaryFunction make_rotated(const BoundaryFunction& h, double theta0);

    double scale() const { return scale_; }

    static BoundaryFunction from_csv(const std::string& path);
    void to_csv(const std::string& path, const UniformAngularGrid& grid) const;

  private:
    BoundaryFunction() = default;

    Kind kind_ = Kind::ClosedForm;
    std::function<double(double)> eval_;
    LogIntegrability log_status_ = LogIntegrability::Unknown;
    std::optional<HBetaParams> hbeta_;
    std::string name_;
    std::vector<double> samples_; // sampled variant, on grid_
    std::optional<UniformAngularGrid> grid_;
    double scale_ = 1.0;
};

double hbeta_eval(const HBetaParams& p, double theta);
/// h evaluated at theta = gamma * e^{-s}; stable for large s.
double hbeta_eval_logvar(const HBetaParams& p, double s);

struct LogIntegrabilityReport {
    LogIntegrability status = LogIntegrability::Unknown;
    double integral = 0.0;              // estimate of int_{-pi}^{pi} log h
    std::optional<double> fail_location;
};

LogIntegrabilityReport check_log_integrability(const BoundaryFunction& h);

/// Index sets partitioning the grid nodes by 2-comparability with h(theta):
/// comparable (1/2 h(theta) <= h(phi) <= 2 h(theta)), above (>= factor*h),
/// below (<= h/factor).  Non-strict comparisons on both thresholds.
struct LevelMasks {
    std::vector<std::size_t> comparable;
    std::vector<std::size_t> above;
    std::vector<std::size_t> below;
};

LevelMasks level_masks(const BoundaryFunction& h, double theta,
                       const UniformAngularGrid& grid, double factor = 2.0);

} // namespace dirlab

#endif
