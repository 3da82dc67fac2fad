#ifndef DIRLAB_OUTER_HPP
#define DIRLAB_OUTER_HPP

#include "dirlab/boundary.hpp"
#include "dirlab/quadrature.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dirlab {

/// Thrown when an interior point sits closer to the unit circle than the
/// angular grid can resolve (1 - |z| < 4 * spacing).
class ClearanceError : public std::runtime_error {
  public:
    ClearanceError(double clearance, std::size_t required_n);
    std::size_t required_n() const { return required_n_; }

  private:
    std::size_t required_n_;
};

/// Taylor coefficients of an analytic function, recovered at extraction
/// radius rho.  Serializes to JSON as {"rho":..., "coefficients":[[re,im],...]}.
struct TaylorSeries {
    std::vector<complex> coeffs; // f_hat(0..n_max)
    double rho = 0.0;
    double truncation_error = 0.0;

    complex eval(complex z) const;
    TaylorSeries derivative() const;
    std::string to_json() const;
};

/// Angular derivative kernel of the conjugate Poisson integral:
///   Q(e^{i phi}, z) = r (2(1-r)^2 - |e^{i theta}-e^{i phi}|^2 (1+r^2)) / |e^{i phi}-z|^4,
/// z = r e^{i theta}.  Integrates to zero over the circle.
double kernel_q(double phi, complex z);

/// The outer function with boundary modulus h, O_h = exp(u + i v),
/// normalized by v(0) = 0 so O_h(0) = exp(mean log h) > 0.
/// Backed by midpoint samples of log h on an angular grid of size n.
class OuterFunction {
  public:
    OuterFunction(BoundaryFunction h, std::size_t n);

    double poisson_log(complex z) const;   // u_h(z)
    double conjugate_log(complex z) const; // v_h(z), v_h(0) = 0
    complex eval(complex z) const;         // O_h(z)

    /// dv/dtheta at z via the kernel Q against log(h(phi)/h(theta)).
    /// Requires h > 0 at the base angle of z.
    double dv_dtheta(complex z) const;

    const BoundaryFunction& boundary() const { return h_; }
    std::size_t grid_size() const { return n_; }
    double spacing() const { return 2.0 * pi / static_cast<double>(n_); }
    double min_clearance() const { return 4.0 * spacing(); }
    /// Radius used for boundary traces: 1 - 8 grid spacings, keeping the
    /// Poisson kernel resolved by >= 8 nodes across its width.
    double trace_radius() const { return 1.0 - 8.0 * spacing(); }

    double sample_angle(std::size_t j) const {
        return -pi + (2.0 * static_cast<double>(j) + 1.0) * pi / static_cast<double>(n_);
    }
    const std::vector<double>& log_h_samples() const { return log_h_; }

  private:
    void require_clearance(complex z) const;

    BoundaryFunction h_;
    std::size_t n_;
    std::vector<double> log_h_; // at midpoint angles sample_angle(j)
};

/// f_hat(n) = c_n(rho) / rho^n from Fourier analysis of O_h on the circle
/// of radius rho.  n_max is capped when rho^n would underflow.
TaylorSeries taylor_coefficients(const OuterFunction& f, std::size_t n_max, double rho = 0.5);

/// Taylor series of an explicitly given polynomial (exact, rho recorded as 1).
TaylorSeries polynomial_series(std::vector<complex> coeffs);

} // namespace dirlab

#endif
