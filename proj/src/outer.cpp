#include "dirlab/outer.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace dirlab {

ClearanceError::ClearanceError(double clearance, std::size_t required_n)
    : std::runtime_error("interior point too close to the circle: 1-|z| = " +
                         std::to_string(clearance) + ", need grid size >= " +
                         std::to_string(required_n)),
      required_n_(required_n) {}

complex TaylorSeries::eval(complex z) const {
    complex acc(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

TaylorSeries TaylorSeries::derivative() const {
    TaylorSeries d;
    d.rho = rho;
    d.truncation_error = truncation_error;
    if (coeffs.size() > 1) {
        d.coeffs.resize(coeffs.size() - 1);
        for (std::size_t n = 1; n < coeffs.size(); ++n)
            d.coeffs[n - 1] = static_cast<double>(n) * coeffs[n];
    }
    return d;
}

std::string TaylorSeries::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"rho\":" << rho << ",\"truncation_error\":" << truncation_error
       << ",\"coefficients\":[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ",";
        os << "[" << coeffs[i].real() << "," << coeffs[i].imag() << "]";
    }
    os << "]}";
    return os.str();
}

double kernel_q(double phi, complex z) {
    const double r = std::abs(z);
    const double theta = std::arg(z);
    const double d2 = std::norm(complex(std::cos(phi), std::sin(phi)) - z);
    const double c = chord(theta, phi);
    return r * (2.0 * (1.0 - r) * (1.0 - r) - c * c * (1.0 + r * r)) / (d2 * d2);
}

OuterFunction::OuterFunction(BoundaryFunction h, std::size_t n) : h_(std::move(h)), n_(n) {
    UniformAngularGrid grid(n); // validates n
    if (h_.log_status() == LogIntegrability::Fail)
        throw std::invalid_argument("OuterFunction: boundary modulus is not log-integrable");
    log_h_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        const double v = h_(sample_angle(j));
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::domain_error("OuterFunction: h vanishes or is non-finite at theta = " +
                                    std::to_string(sample_angle(j)));
        log_h_[j] = std::log(v);
    }
}

void OuterFunction::require_clearance(complex z) const {
    const double clearance = 1.0 - std::abs(z);
    if (clearance < min_clearance()) {
        std::size_t required = n_;
        while (clearance < 8.0 * pi / static_cast<double>(required)) required *= 2;
        throw ClearanceError(clearance, required);
    }
}

double OuterFunction::poisson_log(complex z) const {
    require_clearance(z);
    std::vector<double> terms(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        const double phi = sample_angle(j);
        const complex w(std::cos(phi), std::sin(phi));
        terms[j] = (((w + z) / (w - z)).real()) * log_h_[j];
    }
    return pairwise_sum(terms) / static_cast<double>(n_);
}

double OuterFunction::conjugate_log(complex z) const {
    require_clearance(z);
    std::vector<double> terms(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        const double phi = sample_angle(j);
        const complex w(std::cos(phi), std::sin(phi));
        terms[j] = (((w + z) / (w - z)).imag()) * log_h_[j];
    }
    return pairwise_sum(terms) / static_cast<double>(n_);
}

complex OuterFunction::eval(complex z) const {
    require_clearance(z);
    std::vector<double> re(n_), im(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        const double phi = sample_angle(j);
        const complex w(std::cos(phi), std::sin(phi));
        const complex k = (w + z) / (w - z);
        re[j] = k.real() * log_h_[j];
        im[j] = k.imag() * log_h_[j];
    }
    const double u = pairwise_sum(std::span<const double>(re)) / static_cast<double>(n_);
    const double v = pairwise_sum(std::span<const double>(im)) / static_cast<double>(n_);
    return std::exp(u) * complex(std::cos(v), std::sin(v));
}

double OuterFunction::dv_dtheta(complex z) const {
    require_clearance(z);
    const double theta = std::arg(z);
    const double h_theta = h_(theta);
    if (!(h_theta > 0.0))
        throw std::domain_error("dv_dtheta: h must be positive at the base angle of z");
    const double log_h_theta = std::log(h_theta);
    std::vector<double> terms(n_);
    for (std::size_t j = 0; j < n_; ++j)
        terms[j] = kernel_q(sample_angle(j), z) * (log_h_[j] - log_h_theta);
    return pairwise_sum(terms) / static_cast<double>(n_);
}

TaylorSeries taylor_coefficients(const OuterFunction& f, std::size_t n_max, double rho) {
    if (!(rho > 0.0) || rho > 1.0 - f.min_clearance())
        throw std::invalid_argument("taylor_coefficients: rho must lie in (0, 1 - clearance)");
    const std::size_t n = f.grid_size();
    if (n_max >= n / 2)
        throw std::invalid_argument("taylor_coefficients: n_max must be below grid size / 2");

    // Cap n_max where rho^n underflows below representable range.
    const double max_n_by_underflow =
        std::log(std::numeric_limits<double>::min() * 1e16) / std::log(rho);
    if (static_cast<double>(n_max) > max_n_by_underflow)
        n_max = static_cast<std::size_t>(max_n_by_underflow);

    UniformAngularGrid grid(n);
    std::vector<complex> samples(n);
    parallel_for(n, [&](std::size_t j) {
        const double theta = grid.node(j);
        samples[j] = f.eval(rho * complex(std::cos(theta), std::sin(theta)));
    });
    const std::vector<complex> c = fourier_coefficients(samples);

    // Circle coefficients below the round-off floor of the samples are
    // indistinguishable from zero; rescaling them by rho^{-k} would turn
    // noise into huge spurious coefficients, so they are dropped.
    double c_max = 0.0;
    for (const complex& ck : c) c_max = std::max(c_max, std::abs(ck));
    const double noise_floor = 1e-13 * c_max;

    TaylorSeries series;
    series.rho = rho;
    series.coeffs.resize(n_max + 1);
    for (std::size_t k = 0; k <= n_max; ++k) {
        const complex ck = fourier_coefficient(c, static_cast<long>(k));
        series.coeffs[k] = std::abs(ck) <= noise_floor
                               ? complex(0.0, 0.0)
                               : ck / std::pow(rho, static_cast<double>(k));
    }
    // Tail-decay estimate: magnitude of the unscaled coefficients just past
    // the kept range.
    double tail = 0.0;
    for (std::size_t k = n_max + 1; k < std::min(n / 2, n_max + 9); ++k)
        tail += std::abs(fourier_coefficient(c, static_cast<long>(k)));
    series.truncation_error = tail;
    return series;
}

TaylorSeries polynomial_series(std::vector<complex> coeffs) {
    TaylorSeries s;
    s.coeffs = std::move(coeffs);
    s.rho = 1.0;
    s.truncation_error = 0.0;
    return s;
}

} // namespace dirlab
