#ifndef DIRLAB_QUADRATURE_HPP
#define DIRLAB_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace dirlab {

inline constexpr double pi = 3.14159265358979323846;

using complex = std::complex<double>;

/// Uniform grid on the circle, theta_j = -pi + 2*pi*j/n.  n must be a
/// power of two, n >= 8.
class UniformAngularGrid {
  public:
    explicit UniformAngularGrid(std::size_t n);

    std::size_t size() const { return n_; }
    double spacing() const { return 2.0 * pi / static_cast<double>(n_); }
    double node(std::size_t j) const {
        return -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(n_);
    }

  private:
    std::size_t n_;
};

bool is_power_of_two(std::size_t n);

// Fixed-order (index-ascending pairwise) reduction; bit-reproducible
// independent of any internal parallelism.
double pairwise_sum(std::span<const double> values);
complex pairwise_sum(std::span<const complex> values);

// Runs body(i) for i in [0, count) across at most DIRLAB_THREADS workers.
// Each index is processed exactly once; callers combine per-index results
// afterwards in index order, so scheduling never changes the output.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);
std::size_t worker_count();

// (2*pi/n) * sum_j f(theta_j).  Spectrally accurate for smooth periodic f.
// Throws std::domain_error naming the node if f returns a non-finite value.
double periodic_trapezoid(const std::function<double(double)>& f,
                          const UniformAngularGrid& grid);

struct AdaptiveResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

/// Adaptive bisection with a nested Gauss-Kronrod 7-15 rule and a hard
/// panel cap.  Unconverged results are flagged, never silently returned.
AdaptiveResult adaptive_1d(const std::function<double(double)>& f, double a,
                           double b, double tol,
                           std::size_t max_panels = std::size_t{1} << 15);

/// integral_0^1 g(r) * alpha * (1-r)^(alpha-1) dr, computed in the
/// substituted variable t = (1-r)^alpha so the endpoint weight is removed
/// exactly.  Requires 0 < alpha < 1.
double radial_weighted(const std::function<double(double)>& g, double alpha,
                       double tol = 1e-10);
AdaptiveResult radial_weighted_full(const std::function<double(double)>& g,
                                    double alpha, double tol = 1e-10);

///// Fixed node set for the measure alpha*(1-r)^(alpha-1) dr on [0,1):
/// Gauss-Legendre points in t = (1-r)^alpha, mapped back to r.  For small
/// alpha the innermost nodes sit so close to the circle that 1-r underflows
/// in r itself, so the distance to the boundary is kept separately.
/// Weights sum to 1.
struct RadialRule {
    double alpha = 0.0;
    std::vector<double> t_nodes;
    std::vector<double> r_nodes;
    std::vector<double> one_minus_r; // exact t^(1/alpha), not 1 - r_nodes
    std::vector<double> weights;

    static RadialRule make(double alpha, std::size_t points = 64);
};

/// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
void gauss_legendre(std::size_t n, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// c_k = (1/n) sum_j samples_j e^{-ik theta_j} on the grid starting at -pi.
/// Returned vector is indexed mod n; use fourier_coefficient() for signed k.
std::vector<complex> fourier_coefficients(std::span<const complex> samples);

complex fourier_coefficient(std::span<const complex> coeffs, long k);

/// Evaluates sum_{k=-n/2}^{n/2-1} c_k e^{ik theta}; inverse of
/// fourier_coefficients on the grid nodes.
complex trig_eval(std::span<const complex> coeffs, double theta);

/// |e^{i a} - e^{i b}| = 2|sin((a-b)/2)|.
double chord(double a, double b);

} // namespace dirlab

#endif
