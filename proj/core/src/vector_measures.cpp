// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/vector_measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "wightlab/errors.hpp"
#include "wightlab/parallel.hpp"
#include "wightlab/quadrature.hpp"

namespace wightlab {

using std::numbers::pi;
using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

SlotIntegrand SlotIntegrand::from(const MomentumTestFunction& phi) {
    if (phi.dim() != 4) throw ShapeError("vector-model test functions live on (R^4)^n");
    SlotIntegrand s;
    s.reach.assign(phi.order(), 0.0);
    s.scale = std::numeric_limits<double>::infinity();
    for (const auto& t : phi.terms())
        for (int l = 0; l < phi.order(); ++l) {
            const auto& f = t.factors[l];
            // ball inscribed in the box about its centre
            double c2 = 0, half = 0;
            for (int c = 1; c < 4; ++c) {
                c2 += std::pow(0.5 * (f.box[c].lo + f.box[c].hi), 2);
                half = std::max(half, 0.5 * (f.box[c].hi - f.box[c].lo));
            }
            s.reach[l] = std::max(s.reach[l], std::sqrt(c2) + half);
            s.scale = std::min(s.scale, f.scale);
        }
    s.fn = [phi](const std::vector<std::vector<double>>& k) { return phi(k); };
    return s;
}

namespace {

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

struct Frame {
    Vec3 e, e1, e2;
};

Frame frame_along(Vec3 axis) {
    double n = norm3(axis);
    if (n == 0) return {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    Vec3 e{axis[0] / n, axis[1] / n, axis[2] / n};
    Vec3 t = std::abs(e[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    double dot = t[0] * e[0] + t[1] * e[1] + t[2] * e[2];
    Vec3 e1{t[0] - dot * e[0], t[1] - dot * e[1], t[2] - dot * e[2]};
    double m = norm3(e1);
    for (auto& v : e1) v /= m;
    Vec3 e2{e[1] * e1[2] - e[2] * e1[1], e[2] * e1[0] - e[0] * e1[2], e[0] * e1[1] - e[1] * e1[0]};
    return {e, e1, e2};
}

struct Node {
    Vec3 k;
    double w;
};

struct LevelRules {
    const QuadratureRule* radial;
    std::vector<std::pair<double, double>> smooth;  // Gauss-Legendre on [0, 1]
    std::vector<std::pair<double, double>> polar;    // u in [-1, 1]
    std::vector<std::pair<double, double>> half;     // v in [0, 1], u = 1 - 2 v^2
    std::vector<std::pair<double, double>> azimuth;  // (cos, sin) weights folded in second
    std::vector<double> az_angle;
    std::vector<std::pair<double, double>> s;
    double max_piece;
};

std::vector<std::pair<double, double>> gl_on(double a, double b, int order) {
    const auto& gl = gauss_legendre(order);
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i)
        out.push_back({0.5 * (a + b) + 0.5 * (b - a) * gl.nodes[i], 0.5 * (b - a) * gl.weights[i]});
    return out;
}

LevelRules make_rules(const SphericalQuadrature& q, int level, double scale) {
    LevelRules r;
    const double f = std::pow(q.growth, level);
    auto grown = [f](int base) { return int(std::lround(base * f)); };
    r.radial = &tanh_sinh(q.step / f, q.t_max);
    r.smooth = gl_on(0, 1, grown(q.radial_order));
    r.polar = gl_on(-1, 1, grown(q.polar_order));
    r.half = gl_on(0, 1, grown(q.polar_order));
    const int na = grown(q.azimuth_points);
    for (int i = 0; i < na; ++i) r.az_angle.push_back(2 * pi * (i + 0.5) / na);
    r.s = gl_on(0, 1, grown(q.s_order));
    r.max_piece = q.piece_scale * scale;
    return r;
}

// radial nodes on [0, R] split at the optional break
std::vector<std::pair<double, double>> radial_nodes(const LevelRules& r, double R, double brk) {
    std::vector<double> breaks;
    if (brk > 0 && brk < R) breaks.push_back(brk);
    auto edges = partition_interval(0, R, breaks, r.max_piece);
    std::vector<std::pair<double, double>> out;
    const auto& rule = *r.radial;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        double a = edges[p], b = edges[p + 1], h = 0.5 * (b - a);
        if (a != brk && b != brk) {
            for (const auto& [x, w] : r.smooth) out.push_back({a + (b - a) * x, (b - a) * w});
            continue;
        }
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            double x = rule.nodes[i] < 0 ? a + h * rule.gap[i] : b - h * rule.gap[i];
            if (rule.nodes[i] == 0) x = a + h;
            out.push_back({x, h * rule.weights[i]});
        }
    }
    return out;
}

void spherical_nodes(const LevelRules& r, const Frame& fr, double R, double brk, bool half_polar,
                     std::vector<Node>& out) {
    out.clear();
    const double daz = 2 * pi / double(r.az_angle.size());
    for (const auto& [rad, wr] : radial_nodes(r, R, brk)) {
        for (const auto& [x, wx] : half_polar ? r.half : r.polar) {
            double u = half_polar ? 1 - 2 * x * x : x;
            double wu = half_polar ? 4 * x * wx : wx;
            double st = std::sqrt(std::max(0.0, 1 - u * u));
            for (double ang : r.az_angle) {
                double c = std::cos(ang) * st, s = std::sin(ang) * st;
                Vec3 k;
                for (int i = 0; i < 3; ++i) k[i] = rad * (u * fr.e[i] + c * fr.e1[i] + s * fr.e2[i]);
                out.push_back({k, rad * rad * wr * wu * daz});
            }
        }
    }
}

}  // namespace

std::complex<double> m_n_j_level(int j, const SlotIntegrand& phi, const SphericalQuadrature& q,
                                 int level) {
    const int n = phi.order();
    if (n < 3) throw DomainError("M^n_j needs n >= 3");
    if (j < 0 || j > n) throw DomainError("j must lie in 0..n");
    const int elim = j == 0 ? 0 : j == n ? n - 1 : j;  // 0-based slot fixed by the momentum delta
    std::vector<int> free;
    for (int l = 0; l < n; ++l)
        if (l != elim) free.push_back(l);
    const int inner = free.back();
    const LevelRules rules = make_rules(q, level, phi.scale);
    const double pref = std::pow(2 * pi, 3 - n);

    // fixed-frame nodes for every outer free slot
    std::vector<std::vector<Node>> outer(free.size() - 1);
    for (std::size_t i = 0; i + 1 < free.size(); ++i)
        spherical_nodes(rules, frame_along({0, 0, 1}), phi.reach[free[i]], -1, false, outer[i]);
    std::size_t total = 1;
    for (const auto& o : outer) total *= o.size();

    std::vector<cplx> partial(total);
    parallel_for(total, q.threads, [&](std::size_t idx) {
        std::vector<std::vector<double>> k(n, std::vector<double>(4, 0.0));
        std::vector<Vec3> kv(n);
        double w_outer = 1;
        Vec3 P{0, 0, 0};
        std::size_t r = idx;
        for (std::size_t i = outer.size(); i-- > 0;) {
            const Node& nd = outer[i][r % outer[i].size()];
            r /= outer[i].size();
            kv[free[i]] = nd.k;
            w_outer *= nd.w;
            for (int c = 0; c < 3; ++c) P[c] += nd.k[c];
        }
        std::vector<Node> inner_nodes;
        spherical_nodes(rules, frame_along({-P[0], -P[1], -P[2]}), phi.reach[inner], norm3(P), true,
                        inner_nodes);
        cplx acc = 0;
        std::vector<double> om(n);
        for (const Node& nd : inner_nodes) {
            kv[inner] = nd.k;
            Vec3 e{-P[0] - nd.k[0], -P[1] - nd.k[1], -P[2] - nd.k[2]};
            kv[elim] = e;
            bool zero = false;
            for (int l = 0; l < n; ++l) {
                om[l] = norm3(kv[l]);
                if (om[l] == 0) zero = true;
                for (int c = 0; c < 3; ++c) k[l][c + 1] = kv[l][c];
            }
            if (zero) continue;
            double w = pref * nd.w;
            cplx val = 0;
            if (j == 0) {
                double sum = 0;
                for (int l = 1; l < n; ++l) {
                    k[l][0] = om[l];
                    sum += om[l];
                    w /= 2 * om[l];
                }
                k[0][0] = -sum;
                w /= 2 * om[0] * (k[0][0] - om[0]);
                val = phi.fn(k);
            } else if (j == n) {
                double sum = 0;
                for (int l = 0; l + 1 < n; ++l) {
                    k[l][0] = -om[l];
                    sum += om[l];
                    w /= 2 * om[l];
                }
                k[n - 1][0] = sum;
                w /= 2 * om[n - 1] * (k[n - 1][0] + om[n - 1]);
                val = phi.fn(k);
            } else {
                // 0-based slots a = j-1 (pinned energy) and b = j (eliminated)
                const int a = j - 1, b = j;
                double A = 0, B = 0;
                for (int l = 0; l < a; ++l) {
                    k[l][0] = -om[l];
                    A += om[l];
                    w /= 2 * om[l];
                }
                for (int l = b + 1; l < n; ++l) {
                    k[l][0] = om[l];
                    B += om[l];
                    w /= 2 * om[l];
                }
                w /= 4 * om[a] * om[b];
                for (const auto& [s, ws] : rules.s) {
                    double ea = -((A + om[a]) * s + (om[b] + B) * (1 - s) - A);
                    k[a][0] = ea;
                    k[b][0] = A - ea - B;
                    val += ws * phi.fn(k);
                }
            }
            acc += w * val;
        }
        partial[idx] = w_outer * acc;
    });
    cplx sum = 0;
    for (auto v : partial) sum += v;
    return sum;
}

Evaluation m_n_j_eval(int j, const SlotIntegrand& phi, const SphericalQuadrature& q) {
    if (q.max_level < 1) throw ConfigError("quadrature needs at least one refinement level");
    Evaluation ev;
    for (int level = 0; level <= q.max_level; ++level) {
        ev.history.push_back(m_n_j_level(j, phi, q, level));
        ev.value = ev.history.back();
        if (level == 0) continue;
        ev.error = std::abs(ev.value - ev.history[level - 1]);
        if (ev.error <= std::max(q.abs_tolerance, q.rel_tolerance * std::abs(ev.value))) {
            ev.converged = true;
            return ev;
        }
    }
    throw ToleranceFailure("M^n_j quadrature did not converge", ev.error);
}

Evaluation m_n_j_eval(int j, const MomentumTestFunction& phi, const SphericalQuadrature& q) {
    return m_n_j_eval(j, SlotIntegrand::from(phi), q);
}

SlotIntegrand energy_difference(const SlotIntegrand& phi, int j, double h) {
    const int n = phi.order();
    if (j < 1 || j >= n) throw DomainError("energy difference needs 1 <= j < n");
    if (!(h > 0)) throw DomainError("finite-difference step must be positive");
    SlotIntegrand out = phi;
    auto f = phi.fn;
    out.fn = [f, j, h](const std::vector<std::vector<double>>& k) {
        auto shift = [&](double t) {
            auto m = k;
            m[j - 1][0] += t;
            m[j][0] -= t;
            return f(m);
        };
        return (-shift(2 * h) + 8.0 * shift(h) - 8.0 * shift(-h) + shift(-2 * h)) / (12 * h);
    };
    return out;
}

Evaluation vector_wightman_pairing(const MomentumTestFunction& phi, const MomentumMultiplier& multiplier,
                                   const SphericalQuadrature& q, double fd_step) {
    if (!multiplier) throw ConfigError("the vector-model multiplier has no default; supply one");
    auto base = SlotIntegrand::from(phi);
    auto inner = base.fn;
    base.fn = [inner, multiplier](const std::vector<std::vector<double>>& k) {
        return multiplier(k) * inner(k);
    };
    const int n = base.order();
    Evaluation total;
    total.converged = true;
    for (int j = 0; j <= n; ++j) {
        auto f = j == 0 || j == n ? base : energy_difference(base, j, fd_step);
        auto ev = m_n_j_eval(j, f, q);
        total.value += ev.value;
        total.error += ev.error;
    }
    total.history.push_back(total.value);
    return total;
}

SlotIntegrand reflected(const SlotIntegrand& phi) {
    SlotIntegrand out = phi;
    std::reverse(out.reach.begin(), out.reach.end());
    auto f = phi.fn;
    out.fn = [f](const std::vector<std::vector<double>>& k) {
        std::vector<std::vector<double>> m(k.rbegin(), k.rend());
        for (auto& v : m) v[0] = -v[0];
        return f(m);
    };
    return out;
}

}  // namespace wightlab
