#ifndef DIRLAB_ENERGY_HPP
#define DIRLAB_ENERGY_HPP

#include "dirlab/outer.hpp"

#include <map>
#include <string>

namespace dirlab {

/// (1/pi) int_D |f'|^2 (1-|z|)^alpha dA via tensor quadrature: angular
/// trapezoid (exact for the band-limited integrand) times adaptive radial
/// integration in a substituted endpoint variable.
double energy_area(const TaylorSeries& f, double alpha);

/// Exact identity D_alpha(f) = sum_{n>=1} n^2 |f_hat(n)|^2 * 2 B(2n, alpha+1).
/// Reduces to sum n |f_hat(n)|^2 at alpha = 0.
double energy_parseval_exact(const TaylorSeries& f, double alpha);

/// The comparable quantity sum_{n>=1} |f_hat(n)|^2 (1+n)^{1-alpha};
/// reported for ratio studies only.
double energy_parseval_equiv(const TaylorSeries& f, double alpha);

/// Boundary double integral of difference quotients on a staggered tensor
/// grid (phi nodes offset by half a spacing, so the diagonal is never hit).
/// alpha = 0: (1/4 pi^2) SS |f(theta)-f(phi)|^2 / |e^{i phi}-e^{i theta}|^2,
/// exact.  alpha > 0: the same integral with exponent 2-alpha and no
/// prefactor (comparable, not equal, to D_alpha).
double energy_douglas(const std::function<complex(double)>& trace, double alpha,
                      std::size_t n);

/// Exact slice energy D(f_r) = sum_{n>=1} n r^{2n} |f_hat(n)|^2 for
/// 0 <= r <= 1 (r = 1 gives D(f) itself when the series is finite).
double slice_energy_sum(const TaylorSeries& f, double r);

/// Cauchy-Riemann slice formula
///   D(f_r) = (1/2 pi) int |f(r e^{i t})|^2 (dv/dtheta)(r e^{i t}) dt,
/// an exact identity (checked against the coefficient series).
double slice_energy_cr(const OuterFunction& f, double r);

/// alpha int_0^1 D(f_r) (1-r)^{alpha-1} / r dr; equivalent to D_alpha
/// independently of alpha and f.
double energy_slice_route(const TaylorSeries& f, double alpha);

struct CrAreaResult {
    double value = 0.0;
    double truncated_mass = 0.0; // radial measure dropped by the clearance rule
    std::size_t nodes_used = 0;
    std::size_t nodes_dropped = 0;
};

/// (1/2 pi) int_D |O_h|^2 (dv/dtheta) dA_alpha with dA_alpha =
/// alpha (1-r)^{alpha-1} dr dtheta.  The integrand is not sign-definite;
/// radial nodes violating the clearance rule are dropped and their measure
/// recorded.
CrAreaResult energy_cr_area(const OuterFunction& f, double alpha,
                            std::size_t radial_points = 64);

struct EnergyReport {
    double alpha = 0.0;
    std::map<std::string, double> routes;
    std::map<std::string, double> ratios;
    std::size_t angular_n = 0;
    std::size_t radial_points = 0;
    double rho = 0.0;
    bool flagged = false; // series truncation above tolerance
    std::string to_json() const;
};

EnergyReport compute_energy_report(const BoundaryFunction& h, double alpha,
                                   std::size_t n = 1024);

} // namespace dirlab

#endif
