#include "dirlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <list>
#include <stdexcept>
#include <string>
#include <thread>

namespace dirlab {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

UniformAngularGrid::UniformAngularGrid(std::size_t n) : n_(n) {
    if (n < 8 || !is_power_of_two(n))
        throw std::invalid_argument("UniformAngularGrid: n must be a power of two >= 8, got " +
                                    std::to_string(n));
}

namespace {

template <class T> T pairwise_sum_impl(std::span<const T> v) {
    if (v.empty()) return T{};
    if (v.size() <= 8) {
        T s = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) s += v[i];
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum_impl(v.first(half)) + pairwise_sum_impl(v.subspan(half));
}

} // namespace

double pairwise_sum(std::span<const double> values) { return pairwise_sum_impl(values); }
complex pairwise_sum(std::span<const complex> values) { return pairwise_sum_impl(values); }

std::size_t worker_count() {
    static const std::size_t n = [] {
        if (const char* env = std::getenv("DIRLAB_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1) return static_cast<std::size_t>(std::min<long>(v, 64));
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return static_cast<std::size_t>(std::clamp<unsigned>(hw, 1, 8));
    }();
    return n;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

double periodic_trapezoid(const std::function<double(double)>& f,
                          const UniformAngularGrid& grid) {
    const std::size_t n = grid.size();
    std::vector<double> samples(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = grid.node(j);
        const double v = f(theta);
        if (!std::isfinite(v))
            throw std::domain_error("periodic_trapezoid: non-finite sample at node " +
                                    std::to_string(j) + " (theta = " + std::to_string(theta) + ")");
        samples[j] = v;
    }
    return grid.spacing() * pairwise_sum(samples);
}

namespace {

// QUADPACK dqk15 abscissae/weights on [-1,1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double err;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) resk += kWgk[i] * (fv[i] + fv[14 - i]);
    for (int i = 1; i < 7; i += 2) resg += kWg[i / 2] * (fv[i] + fv[14 - i]);
    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    const double diff = std::abs((resk - resg) * h);
    // QUADPACK-style sharpened estimate.
    p.err = diff;
    if (diff > 0.0) {
        double resasc = 0.0;
        const double mean = resk * 0.5;
        resasc += kWgk[7] * std::abs(fv[7] - mean);
        for (int i = 0; i < 7; ++i)
            resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
        resasc *= std::abs(h);
        if (resasc > 0.0)
            p.err = resasc * std::min(1.0, std::pow(200.0 * diff / resasc, 1.5));
    }
    return p;
}

} // namespace

AdaptiveResult adaptive_1d(const std::function<double(double)>& f, double a, double b,
                           double tol, std::size_t max_panels) {
    if (!(a < b)) throw std::invalid_argument("adaptive_1d: requires a < b");
    constexpr double abs_floor = 1e-14;

    std::list<Panel> panels{gk15(f, a, b)};
    auto total_value = [&] {
        std::vector<double> v;
        v.reserve(panels.size());
        for (const auto& p : panels) v.push_back(p.value);
        return pairwise_sum(v);
    };
    auto total_err = [&] {
        double e = 0.0;
        for (const auto& p : panels) e += p.err;
        return e;
    };

    while (panels.size() < max_panels) {
        const double value = total_value();
        const double err = total_err();
        if (err <= std::max(tol * std::abs(value), abs_floor)) break;
        auto worst = panels.begin();
        for (auto it = panels.begin(); it != panels.end(); ++it)
            if (it->err > worst->err) worst = it;
        const double mid = 0.5 * (worst->a + worst->b);
        if (mid <= worst->a || mid >= worst->b) break; // panel below machine resolution
        const Panel left = gk15(f, worst->a, mid);
        const Panel right = gk15(f, mid, worst->b);
        *worst = left;
        panels.insert(std::next(worst), right);
    }

    // Deterministic final reduction in endpoint order.
    panels.sort([](const Panel& x, const Panel& y) { return x.a < y.a; });
    AdaptiveResult r;
    r.value = total_value();
    r.error_estimate = total_err();
    r.converged = r.error_estimate <= std::max(tol * std::abs(r.value), abs_floor);
    return r;
}

AdaptiveResult radial_weighted_full(const std::function<double(double)>& g, double alpha,
                                    double tol) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument(
            "radial_weighted: alpha must lie in (0,1); use adaptive_1d for alpha = 0");
    const double inv_alpha = 1.0 / alpha;
    return adaptive_1d([&](double t) { return g(1.0 - std::pow(t, inv_alpha)); }, 0.0, 1.0,
                       tol);
}

double radial_weighted(const std::function<double(double)>& g, double alpha, double tol) {
    return radial_weighted_full(g, alpha, tol).value;
}

void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - static_cast<double>(j) * p2) /
                     (static_cast<double>(j) + 1.0);
            }
            pp = static_cast<double>(n) * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

RadialRule RadialRule::make(double alpha, std::size_t points) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("RadialRule: alpha must lie in (0,1)");
    RadialRule rule;
    rule.alpha = alpha;
    std::vector<double> x, w;
    gauss_legendre(points, x, w);
    rule.t_nodes.resize(points);
    rule.r_nodes.resize(points);
    rule.one_minus_r.resize(points);
    rule.weights.resize(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = 0.5 * (x[i] + 1.0);
        rule.t_nodes[i] = t;
        rule.one_minus_r[i] = std::pow(t, 1.0 / alpha);
        rule.r_nodes[i] = 1.0 - rule.one_minus_r[i];
        rule.weights[i] = 0.5 * w[i];
    }
    return rule;
}

namespace {

void fft_inplace(std::vector<complex>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * pi / static_cast<double>(len);
        const complex wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            complex w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const complex u = a[i + j];
                const complex v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

} // namespace

std::vector<complex> fourier_coefficients(std::span<const complex> samples) {
    const std::size_t n = samples.size();
    if (!is_power_of_two(n) || n < 2)
        throw std::invalid_argument("fourier_coefficients: sample count must be a power of two");
    for (std::size_t j = 0; j < n; ++j)
        if (!std::isfinite(samples[j].real()) || !std::isfinite(samples[j].imag()))
            throw std::domain_error("fourier_coefficients: non-finite sample at index " +
                                    std::to_string(j));
    std::vector<complex> a(samples.begin(), samples.end());
    fft_inplace(a, false);
    // Grid starts at -pi, so c_k picks up the phase e^{ik pi} = (-1)^k.
    for (std::size_t k = 0; k < n; ++k) {
        a[k] /= static_cast<double>(n);
        if (k & 1) a[k] = -a[k];
    }
    return a;
}

complex fourier_coefficient(std::span<const complex> coeffs, long k) {
    const long n = static_cast<long>(coeffs.size());
    long idx = k % n;
    if (idx < 0) idx += n;
    return coeffs[static_cast<std::size_t>(idx)];
}

complex trig_eval(std::span<const complex> coeffs, double theta) {
    const long n = static_cast<long>(coeffs.size());
    std::vector<complex> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (long k = -n / 2; k < n / 2; ++k)
        terms.push_back(fourier_coefficient(coeffs, k) *
                        complex(std::cos(k * theta), std::sin(k * theta)));
    return pairwise_sum(std::span<const complex>(terms));
}

double chord(double a, double b) { return 2.0 * std::abs(std::sin(0.5 * (a - b))); }

} // namespace dirlab
