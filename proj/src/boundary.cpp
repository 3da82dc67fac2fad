#include "dirlab/boundary.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dirlab {

namespace {

double wrap_to_pi(double theta) {
    double t = std::fmod(theta + pi, 2.0 * pi);
    if (t <= 0.0) t += 2.0 * pi;
    return t - pi; // in (-pi, pi]
}

} // namespace

BoundaryFunction BoundaryFunction::make_constant(double c) {
    if (!(c >= 0.0)) throw std::invalid_argument("make_constant: c must be non-negative");
    BoundaryFunction h;
    h.eval_ = [c](double) { return c; };
    h.log_status_ = c > 0.0 ? LogIntegrability::Proved : LogIntegrability::Fail;
    h.name_ = "const";
    return h;
}

BoundaryFunction BoundaryFunction::make_sin_bump(double a) {
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("make_sin_bump: need |a| < 1");
    BoundaryFunction h;
    h.eval_ = [a](double theta) { return 1.0 + a * std::sin(theta); };
    h.log_status_ = LogIntegrability::Proved;
    h.name_ = "sin-bump";
    return h;
}

BoundaryFunction BoundaryFunction::make_step(double lo, double hi) {
    if (!(lo > 0.0 && hi > 0.0)) throw std::invalid_argument("make_step: levels must be positive");
    BoundaryFunction h;
    h.eval_ = [lo, hi](double theta) { return wrap_to_pi(theta) > 0.0 ? hi : lo; };
    h.log_status_ = LogIntegrability::Proved;
    h.name_ = "step";
    return h;
}

BoundaryFunction BoundaryFunction::make_poly_modulus(std::vector<complex> coeffs) {
    while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    BoundaryFunction h;
    h.eval_ = [coeffs](double theta) {
        const complex z(std::cos(theta), std::sin(theta));
        complex acc(0.0, 0.0);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
        return std::abs(acc);
    };
    // |p| vanishes at most at finitely many angles, so log|p| is integrable.
    h.log_status_ = LogIntegrability::Proved;
    h.name_ = "poly";
    return h;
}

BoundaryFunction BoundaryFunction::make_exp_trig(std::vector<double> coeffs) {
    BoundaryFunction h;
    h.eval_ = [coeffs](double theta) {
        double p = coeffs.empty() ? 0.0 : coeffs[0];
        for (std::size_t i = 1; i < coeffs.size(); i += 2) {
            const double k = static_cast<double>((i + 1) / 2);
            p += coeffs[i] * std::cos(k * theta);
            if (i + 1 < coeffs.size()) p += coeffs[i + 1] * std::sin(k * theta);
        }
        return std::exp(p);
    };
    h.log_status_ = LogIntegrability::Proved;
    h.name_ = "exp-trig";
    return h;
}

double hbeta_eval(const HBetaParams& p, double theta) {
    // Wrapping tiny theta through fmod would round it away; only wrap when
    // the angle is outside the fundamental domain.
    const double t = (theta > -pi && theta <= pi) ? theta : wrap_to_pi(theta);
    if (t > 0.0)
        return std::pow(t, -0.5 * p.alpha) * std::pow(std::log(p.gamma / t), -p.beta);
    if (t == 0.0) return std::numeric_limits<double>::infinity();
    return p.c0;
}

double hbeta_eval_logvar(const HBetaParams& p, double s) {
    // theta = gamma e^{-s}; log h = (alpha/2)(s - log gamma) - beta log s.
    return std::exp(0.5 * p.alpha * (s - std::log(p.gamma)) - p.beta * std::log(s));
}

BoundaryFunction BoundaryFunction::make_hbeta(double alpha, double beta) {
    if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0))
        throw std::invalid_argument("make_hbeta: need 0 < alpha < 1 and beta > 0");
    HBetaParams p;
    p.alpha = alpha;
    p.beta = beta;
    p.gamma = pi * std::exp(2.0 * beta / alpha);
    p.c0 = 0.5 * std::pow(pi, -0.5 * alpha) * std::pow(2.0 * beta / alpha, -beta);
    BoundaryFunction h;
    h.eval_ = [p](double theta) { return hbeta_eval(p, theta); };
    h.log_status_ = LogIntegrability::Proved;
    h.hbeta_ = p;
    h.name_ = "hbeta";
    return h;
}

BoundaryFunction BoundaryFunction::make_sampled(UniformAngularGrid grid,
                                                std::vector<double> values) {
    if (values.size() != grid.size())
        throw std::invalid_argument("make_sampled: value count must match the grid");
    for (double v : values)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("make_sampled: values must be finite and non-negative");
    BoundaryFunction h;
    h.kind_ = Kind::Sampled;
    h.samples_ = std::move(values);
    h.grid_ = grid;
    auto samples = std::make_shared<std::vector<double>>(h.samples_);
    const std::size_t n = grid.size();
    h.eval_ = [samples, n](double theta) {
        // periodic linear interpolation between grid nodes
        const double t = wrap_to_pi(theta);
        const double x = (t + pi) * static_cast<double>(n) / (2.0 * pi);
        const std::size_t j0 = static_cast<std::size_t>(std::floor(x)) % n;
        const std::size_t j1 = (j0 + 1) % n;
        const double frac = x - std::floor(x);
        return (1.0 - frac) * (*samples)[j0] + frac * (*samples)[j1];
    };
    h.log_status_ = LogIntegrability::Unknown;
    h.name_ = "sampled";
    return h;
}

BoundaryFunction BoundaryFunction::make_scaled(const BoundaryFunction& h, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("make_scaled: factor must be positive");
    BoundaryFunction out = h;
    auto base = h.eval_;
    out.eval_ = [base, c](double theta) { return c * base(theta); };
    out.scale_ = h.scale_ * c;
    for (double& v : out.samples_) v *= c;
    return out;
}

BoundaryFunction BoundaryFunction::make_rotated(const BoundaryFunction& h, double theta0) {
    if (h.singular_at_zero())
        throw std::invalid_argument("make_rotated: not available for singular families");
    BoundaryFunction out = h;
    auto base = h.eval_;
    out.eval_ = [base, theta0](double theta) { return base(theta - theta0); };
    out.samples_.clear();
    out.grid_.reset();
    out.kind_ = Kind::ClosedForm;
    return out;
}

BoundaryFunction BoundaryFunction::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("from_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("from_csv: empty file " + path);
    std::vector<std::pair<double, double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
            throw std::runtime_error("from_csv: malformed row: " + line);
        rows.emplace_back(std::stod(a), std::stod(b));
    }
    if (!is_power_of_two(rows.size()) || rows.size() < 8)
        throw std::runtime_error("from_csv: row count must be a power of two >= 8");
    std::vector<double> values(rows.size());
    UniformAngularGrid grid(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (std::abs(rows[j].first - grid.node(j)) > 1e-9)
            throw std::runtime_error("from_csv: row " + std::to_string(j) +
                                     " is not on the uniform grid");
        values[j] = rows[j].second;
    }
    return make_sampled(grid, std::move(values));
}

void BoundaryFunction::to_csv(const std::string& path, const UniformAngularGrid& grid) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("to_csv: cannot open " + path);
    out.precision(17);
    out << "theta,value\n";
    for (std::size_t j = 0; j < grid.size(); ++j)
        out << grid.node(j) << "," << (*this)(grid.node(j)) << "\n";
}

LogIntegrabilityReport check_log_integrability(const BoundaryFunction& h) {
    LogIntegrabilityReport report;
    if (h.log_status() == LogIntegrability::Fail) {
        report.status = LogIntegrability::Fail;
        return report;
    }

    // Scan for h == 0 on an interval before integrating.
    constexpr std::size_t scan = 4096;
    for (std::size_t j = 0; j < scan; ++j) {
        const double theta = -pi + 2.0 * pi * (static_cast<double>(j) + 0.5) / scan;
        if (h(theta) == 0.0) {
            report.status = LogIntegrability::Fail;
            report.fail_location = theta;
            return report;
        }
    }

    auto integrand = [&h](double theta) { return std::log(h(theta)); };
    // Split at 0: several corpus members have a kink or singularity there.
    const AdaptiveResult left = adaptive_1d(integrand, -pi, 0.0, 1e-8);
    const AdaptiveResult right = adaptive_1d(integrand, 0.0, pi, 1e-8);
    report.integral = left.value + right.value;
    if (!std::isfinite(report.integral)) {
        report.status = LogIntegrability::Fail;
        return report;
    }
    report.status = h.log_status() == LogIntegrability::Proved ? LogIntegrability::Proved
                                                              : LogIntegrability::NumericPass;
    return report;
}

LevelMasks level_masks(const BoundaryFunction& h, double theta, const UniformAngularGrid& grid,
                       double factor) {
    const double ref = h(theta);
    if (!(ref > 0.0))
        throw std::domain_error("level_masks: h(theta) must be positive at the reference angle");
    if (!(factor > 1.0)) throw std::invalid_argument("level_masks: factor must exceed 1");
    LevelMasks masks;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double v = h(grid.node(j));
        if (v >= factor * ref)
            masks.above.push_back(j);
        else if (v <= ref / factor)
            masks.below.push_back(j);
        else
            masks.comparable.push_back(j);
    }
    return masks;
}

} // namespace dirlab
