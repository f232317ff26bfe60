// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/bounds.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "wightlab/errors.hpp"
#include "wightlab/parallel.hpp"
#include "wightlab/partitions.hpp"

namespace wightlab {

using std::numbers::pi;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// integral over R of f with integrable singularities at the given points
template <class F>
double line_integral(F&& f, std::vector<double> sing, double tol) {
    static thread_local boost::math::quadrature::tanh_sinh<double> ts(6);
    static thread_local boost::math::quadrature::exp_sinh<double> es(6);
    std::sort(sing.begin(), sing.end());
    sing.erase(std::unique(sing.begin(), sing.end()), sing.end());
    double acc = es.integrate([&](double u) { return f(sing.front() - u); }, 0.0, inf, tol);
    acc += es.integrate([&](double u) { return f(sing.back() + u); }, 0.0, inf, tol);
    for (std::size_t i = 0; i + 1 < sing.size(); ++i)
        acc += ts.integrate(f, sing[i], sing[i + 1], tol);
    return acc;
}

// nested grid on [-w, w] with `points * 2^level - (2^level - 1)` nodes
std::vector<double> axis_nodes(int points, int level, double w) {
    const int m = (points - 1) * (1 << level) + 1;
    std::vector<double> out(m);
    for (int i = 0; i < m; ++i) out[i] = -w + 2 * w * i / (m - 1);
    return out;
}

double inner_bound_c1(double alpha) { return 2 * pi / std::cos(0.5 * pi * alpha); }

double inner_bound_c2(double alpha, double gamma) {
    const double e = gamma - 2 * alpha + 1;
    return std::pow(2.0, 1 - gamma) * (1 + std::pow(2.0, e)) / e;
}

}  // namespace

double double_singular_integral(double alpha, double a, double b, double c, double tol) {
    auto inner = [&](double y) {
        const double t = y + c;
        auto g = [&](double x) {
            double p = std::abs(x * (x + t));
            if (p == 0) return 0.0;
            return std::pow(p, -alpha) / (1 + (x + a) * (x + a));
        };
        return line_integral(g, {0.0, -t, -a}, tol);
    };
    auto outer = [&](double y) {
        if (y == 0) return 0.0;
        return std::pow(std::abs(y), -alpha) * inner(y) / (1 + (y + b) * (y + b));
    };
    return line_integral(outer, {0.0, -c, -b}, 10 * tol);
}

DoubleSupEstimate double_singular_sup(double alpha, double gamma, const BoundGrid& grid) {
    if (!(alpha > 0 && alpha <= 0.5)) throw DomainError("alpha must lie in (0, 1/2]");
    if (!(gamma > 0 && gamma < 0.5 && alpha + gamma < 1)) throw DomainError("gamma must lie in (0, 1/2)");
    if (grid.points < 2 || !(grid.half_width > 0)) throw ConfigError("sup grid needs >= 2 points and a positive box");
    DoubleSupEstimate est;
    est.c1 = inner_bound_c1(alpha);
    est.c2 = inner_bound_c2(alpha, gamma);
    est.ceiling = est.c1 * (2 / (1 - alpha) + pi) + est.c2 * (4 / (1 - alpha - gamma) + 2 * pi);

    // J(a,b,c) = J(b,a,c) = J(-a,-b,-c): evaluate a <= b only and fold the sign of c
    auto sup_over = [&](const std::vector<double>& ax, auto&& keep) {
        std::vector<std::array<double, 3>> pts;
        for (double a : ax)
            for (double b : ax)
                for (double c : ax) {
                    if (a > b || !keep(a, b, c)) continue;
                    if (c < 0 || (c == 0 && a + b < 0)) continue;
                    pts.push_back({a, b, c});
                }
        std::vector<double> vals(pts.size());
        parallel_for(pts.size(), grid.threads, [&](std::size_t i) {
            vals[i] = double_singular_integral(alpha, pts[i][0], pts[i][1], pts[i][2], grid.tolerance);
        });
        std::size_t best = std::max_element(vals.begin(), vals.end()) - vals.begin();
        return std::make_pair(vals[best], pts[best]);
    };
    auto all = [](double, double, double) { return true; };

    double w = grid.half_width;
    for (int level = 0; level <= grid.refinements; ++level) {
        auto [v, arg] = sup_over(axis_nodes(grid.points, level, w), all);
        est.history.push_back(v);
        est.value = v;
        est.argmax = arg;
    }
    // grow the box while its outer shell still beats the interior
    for (int k = 0; k < grid.max_box_doublings; ++k) {
        const double inner_w = w;
        auto shell = [inner_w](double a, double b, double c) {
            return std::max({std::abs(a), std::abs(b), std::abs(c)}) > inner_w * (1 + 1e-12);
        };
        auto [v, arg] = sup_over(axis_nodes(grid.points, 0, 2 * w), shell);
        est.shell_max = v;
        if (v <= est.value) break;
        w *= 2;
        est.value = v;
        est.argmax = arg;
    }
    est.half_width = w;
    const auto& h = est.history;
    est.stable = h.size() >= 2 && std::abs(h.back() - h[h.size() - 2]) <= grid.stability * h.back();
    return est;
}

double spatial_factor(int d) {
    if (d < 1) throw DomainError("dimension must be positive");
    if (d == 1) return 1.0;
    const int m = d - 1;  // integral over R^m of (1 + r^2)^{-m}
    const double surface = 2 * std::pow(pi, 0.5 * m) / std::tgamma(0.5 * m);
    boost::math::quadrature::exp_sinh<double> es;
    double radial = es.integrate([m](double r) { return std::pow(r, m - 1) * std::pow(1 + r * r, -m); },
                                 0.0, inf, 1e-12);
    return surface * radial;
}

namespace {

double energy_integral(double beta, double omega, double tol) {
    auto f = [&](double e) {
        double g = std::abs((e - omega) * (e + omega));
        if (g == 0) return 0.0;
        return std::pow(g, -beta) / (1 + e * e);
    };
    return line_integral(f, {-omega, omega}, tol);
}

}  // namespace

double energy_sup_factor(double beta, double m0, const BoundGrid& grid) {
    if (!(beta > 0 && beta < 1)) throw DomainError("energy exponent must lie in (0, 1)");
    if (!(m0 > 0)) throw DomainError("mass must be positive");
    // the integral depends on omega >= m0 only and is bounded by 2 omega^{-beta} (2/(1-beta) + pi)
    const double tail_const = 2 * (2 / (1 - beta) + pi);
    double best = 0, w = grid.half_width;
    for (int k = 0; k <= grid.max_box_doublings + 8; ++k) {
        for (double x : axis_nodes(grid.points, grid.refinements + 2, w)) {
            if (x < 0) continue;
            best = std::max(best, energy_integral(beta, std::hypot(x, m0), grid.tolerance));
        }
        if (tail_const * std::pow(std::hypot(w, m0), -beta) < best) return best;
        w *= 2;
    }
    return std::max(best, tail_const * std::pow(std::hypot(w, m0), -beta));
}

ScalarBound bound_integral_scalar(int n, const ScalarModel& model, const BoundGrid& grid, double gamma) {
    model.validate();
    if (n < 3) throw DomainError("the factorized scalar bound needs n >= 3");
    const int d = model.dim();
    const double alpha = model.green.alpha, m0 = model.green.m0;
    ScalarBound out;
    out.prefactor = n * std::abs(model.cumulant(n)) * std::ldexp(1.0, n - 1) * std::pow(2 * pi, d - 0.5 * d * n);
    out.spatial = spatial_factor(d);
    out.energy_sup = energy_sup_factor(alpha, m0, grid);
    out.double_sup = double_singular_sup(alpha, gamma, grid);
    out.third = 8 * std::pow(m0, -3 * alpha) * out.double_sup.value;
    out.a_n = out.prefactor * std::pow(out.spatial, n - 1) * std::pow(out.energy_sup, n - 3) * out.third;
    return out;
}

double bound_two_point(const ScalarModel& model, int norm_power, const BoundGrid& grid) {
    model.validate();
    const int d = model.dim();
    const double alpha = model.green.alpha, m0 = model.green.m0;
    const double c2 = std::abs(model.cumulant(2));
    if (alpha < 0.5)
        return 4 * c2 * spatial_factor(d) * energy_sup_factor(2 * alpha, m0, grid);
    // 2 pi |c2| int dk / (2 omega) (1 + omega^2 + |k|^2)^{-N}
    auto integrand = [&](double r) {
        double om = std::sqrt(r * r + m0 * m0);
        return std::pow(1 + om * om + r * r, -norm_power) / (2 * om);
    };
    if (d == 1) return 2 * pi * c2 * integrand(0.0);
    const int m = d - 1;
    const double surface = 2 * std::pow(pi, 0.5 * m) / std::tgamma(0.5 * m);
    boost::math::quadrature::exp_sinh<double> es;
    double radial = es.integrate([&](double r) { return std::pow(r, m - 1) * integrand(r); }, 0.0, inf, 1e-12);
    return 2 * pi * c2 * surface * radial;
}

ScalarBoundTable scalar_bound_table(const ScalarModel& model, int len, const BoundGrid& grid, double gamma) {
    model.validate();
    if (len < 1) throw DomainError("table length must be positive");
    const int d = model.dim();
    ScalarBoundTable out;
    out.a.assign(len, 0.0);
    if (len >= 2) out.a[1] = bound_two_point(model, 2 * d, grid);
    for (int n = 3; n <= len; ++n)
        if (model.cumulant(n) != 0) out.higher_active = true;
    if (!out.higher_active) return out;
    const double alpha = model.green.alpha, m0 = model.green.m0;
    auto& f = out.factors;
    f.spatial = spatial_factor(d);
    f.energy_sup = energy_sup_factor(alpha, m0, grid);
    f.double_sup = double_singular_sup(alpha, gamma, grid);
    f.third = 8 * std::pow(m0, -3 * alpha) * f.double_sup.value;
    for (int n = 3; n <= len; ++n) {
        const double pref =
            n * std::abs(model.cumulant(n)) * std::ldexp(1.0, n - 1) * std::pow(2 * pi, d - 0.5 * d * n);
        out.a[n - 1] = pref * std::pow(f.spatial, n - 1) * std::pow(f.energy_sup, n - 3) * f.third;
    }
    return out;
}

double radial_factor(int gamma) {
    if (gamma < 0 || gamma > 2) throw DomainError("radial exponent must lie in 0..2");
    boost::math::quadrature::exp_sinh<double> es;
    return 4 * pi * es.integrate([gamma](double l) { return std::pow(l, 2 - gamma) * std::pow(1 + l * l, -1.5); },
                                 0.0, inf, 1e-13);
}

double shifted_singular_integral(double a) {
    a = std::abs(a);
    // the sphere average of |k + a|^{-1} is 1 / max(|k|, |a|)
    auto f = [a](double r) { return r / (std::max(r, a) * std::pow(1 + r * r, 1.5)); };
    boost::math::quadrature::tanh_sinh<double> ts;
    boost::math::quadrature::exp_sinh<double> es;
    double inner = a > 0 ? ts.integrate(f, 0.0, a, 1e-12) : 0.0;
    return 4 * pi * (inner + es.integrate([&](double u) { return f(a + u); }, 0.0, inf, 1e-12));
}

VectorSupEstimate shifted_singular_sup(const BoundGrid& grid) {
    VectorSupEstimate est;
    est.ceiling = 4 * pi * pi;
    double w = grid.half_width;
    for (int level = 0; level <= grid.refinements; ++level) {
        double best = 0, arg = 0;
        for (double x : axis_nodes(grid.points, level, w)) {
            if (x < 0) continue;
            double v = shifted_singular_integral(x);
            if (v > best) {
                best = v;
                arg = x;
            }
        }
        est.history.push_back(best);
        est.value = best;
        est.argmax = arg;
    }
    // A(a) <= 8 pi / |a| beyond the box
    for (int k = 0; k < grid.max_box_doublings && 8 * pi / w >= est.value; ++k) {
        for (double x : axis_nodes(grid.points, 0, 2 * w))
            if (x > w) est.value = std::max(est.value, shifted_singular_integral(x));
        w *= 2;
    }
    est.half_width = w;
    const auto& h = est.history;
    est.stable = h.size() >= 2 && std::abs(h.back() - h[h.size() - 2]) <= grid.stability * h.back();
    return est;
}

double bound_integral_vector(int n, int j, const BoundGrid& grid) {
    if (n < 3) throw DomainError("vector bounds need n >= 3");
    if (j < 0 || j > n) throw DomainError("j must lie in 0..n");
    const double pref = std::pow(2 * pi, 3 - n) * std::ldexp(1.0, -n);
    const double r1 = radial_factor(1), sup = shifted_singular_sup(grid).value;
    if (j == 0 || j == n) return pref * std::pow(r1, n - 3) * radial_factor(2) * sup;
    return pref * std::pow(r1, n - 2) * sup;
}

ConstantChain constant_chain(const std::vector<double>& a) {
    const int len = int(a.size());
    if (len > kMaxPartitionOrder) throw SizeLimitError("constant chain longer than the partition cap");
    for (double v : a)
        if (!(v >= 0)) throw DomainError("constants a_n must be nonnegative");
    ConstantChain out;
    for (int n = 1; n <= len; ++n) {
        double b = 0;
        for (const auto& p : enumerate_partitions(n)) {
            double prod = 1;
            for (const auto& blk : p.blocks) prod *= a[blk.size() - 1];
            b += prod;
        }
        out.b.push_back(b);
    }
    for (int n = 1; 2 * n <= len; ++n) {
        double c = 1;
        for (int j = 1; j <= 2 * n; ++j) c = std::max(c, out.b[j - 1]);
        out.c.push_back(c);
    }
    return out;
}

}  // namespace wightlab
