// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/wightman_scalar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wightlab/errors.hpp"
#include "wightlab/parallel.hpp"
#include "wightlab/quadrature.hpp"

namespace wightlab {

using std::numbers::pi;
using cplx = std::complex<double>;

double MinkowskiPoint::square() const {
    double s = energy * energy;
    for (double v : spatial) s -= v * v;
    return s;
}

double mu_eval(const MinkowskiPoint& k, Branch branch, double alpha, double m0) {
    if (!(alpha > 0 && alpha <= 0.5)) throw DomainError("alpha must lie in (0, 1/2]");
    const int d = int(k.spatial.size()) + 1;
    const double gap = k.square() - m0 * m0;
    if (gap == 0) throw SingularPointError("momentum lies on the mass shell");
    const double pref = std::pow(2 * pi, -0.5 * d) * std::pow(std::abs(gap), -alpha);
    switch (branch) {
        case Branch::Plus: return gap > 0 && k.energy > 0 ? std::sin(pi * alpha) * pref : 0.0;
        case Branch::Minus: return gap > 0 && k.energy < 0 ? std::sin(pi * alpha) * pref : 0.0;
        case Branch::Middle: return gap > 0 ? std::cos(pi * alpha) * pref : pref;
    }
    return 0;
}

namespace {

std::vector<std::pair<double, double>> panel_rule(double lo, double hi, double width, int order) {
    std::vector<std::pair<double, double>> out;
    if (!(hi > lo)) return out;
    const int panels = std::max(1, int(std::ceil((hi - lo) / width - 1e-9)));
    const auto& gl = gauss_legendre(order);
    for (int p = 0; p < panels; ++p) {
        double a = lo + (hi - lo) * p / panels, b = lo + (hi - lo) * (p + 1) / panels;
        double c = 0.5 * (a + b), h = 0.5 * (b - a);
        for (std::size_t i = 0; i < gl.nodes.size(); ++i)
            out.push_back({c + h * gl.nodes[i], h * gl.weights[i]});
    }
    return out;
}

void merge_points(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
        if (out.empty() || x - out.back() > 1e-12 * std::max(1.0, std::abs(x))) out.push_back(x);
    v.swap(out);
}

struct EnergyNode {
    int left = -1, right = -1, leaf = -1;
    double lo = 0, hi = 0;
    bool empty = false;
    std::vector<double> sing;
};

// Balanced convolution tree over the energy variables of one spatial point.
class EnergyTree {
  public:
    EnergyTree(int n, double alpha, double pref_plus, double pref_mid_out, double pref_mid_in,
               const QuadratureRule& rule, const QuadratureRule& smooth, double max_piece)
        : alpha_(alpha), plus_(pref_plus), mid_out_(pref_mid_out), mid_in_(pref_mid_in),
          rule_(rule), smooth_(smooth), max_piece_(max_piece) {
        nodes_.reserve(2 * n);
        root_ = build(0, n - 1);
        leaves_.resize(n);
    }

    struct LeafData {
        const MomentumFactor* factor = nullptr;
        std::vector<double> k;  // energy slot rewritten per call
        Branch branch = Branch::Middle;
        double omega = 0;
    };
    std::vector<LeafData>& leaves() { return leaves_; }

    /// Supports and singular sets; returns false if the branch vanishes identically.
    bool prepare() {
        return prepare_node(root_);
    }

    cplx value() { return conv(root_, 0.0); }

  private:
    int build(int a, int b) {
        int id = int(nodes_.size());
        nodes_.push_back({});
        if (a == b) {
            nodes_[id].leaf = a;
            return id;
        }
        int m = (a + b) / 2;
        int l = build(a, m), r = build(m + 1, b);
        nodes_[id].left = l;
        nodes_[id].right = r;
        return id;
    }

    bool prepare_node(int id) {
        auto& nd = nodes_[id];
        nd.sing.clear();
        if (nd.leaf >= 0) {
            auto& lf = leaves_[nd.leaf];
            const Interval box = lf.factor->box[0];
            double lo = box.lo, hi = box.hi, w = lf.omega;
            switch (lf.branch) {
                case Branch::Plus: lo = std::max(lo, w); break;
                case Branch::Minus: hi = std::min(hi, -w); break;
                case Branch::Middle:
                    if (alpha_ == 0.5) {
                        lo = std::max(lo, -w);
                        hi = std::min(hi, w);
                    } else {
                        if (-w > lo && -w < hi) nd.sing.push_back(-w);
                        if (w > lo && w < hi) nd.sing.push_back(w);
                    }
                    break;
            }
            nd.lo = lo;
            nd.hi = hi;
            nd.empty = !(hi > lo);
            nd.sing.push_back(lo);
            nd.sing.push_back(hi);
            merge_points(nd.sing);
            return !nd.empty;
        }
        bool ok = prepare_node(nd.left);
        ok = prepare_node(nd.right) && ok;
        auto& L = nodes_[nd.left];
        auto& R = nodes_[nd.right];
        nd.empty = !ok;
        if (!ok) return false;
        nd.lo = L.lo + R.lo;
        nd.hi = L.hi + R.hi;
        for (double a : L.sing)
            for (double b : R.sing) nd.sing.push_back(a + b);
        merge_points(nd.sing);
        return true;
    }

    cplx leaf_value(int l, double e) {
        auto& lf = leaves_[l];
        const double w = lf.omega;
        double gap = (e - w) * (e + w);
        if (gap == 0) return 0.0;
        double weight;
        switch (lf.branch) {
            case Branch::Plus:
                if (!(e > w)) return 0.0;
                weight = plus_;
                break;
            case Branch::Minus:
                if (!(e < -w)) return 0.0;
                weight = plus_;
                break;
            default: weight = gap > 0 ? mid_out_ : mid_in_;
        }
        if (weight == 0) return 0.0;
        lf.k[0] = e;
        return weight * std::pow(std::abs(gap), -alpha_) * (*lf.factor)(lf.k);
    }

    cplx conv(int id, double t) {
        const auto& nd = nodes_[id];
        if (!(t > nd.lo && t < nd.hi)) return 0.0;
        if (nd.leaf >= 0) return leaf_value(nd.leaf, t);
        const auto& L = nodes_[nd.left];
        const auto& R = nodes_[nd.right];
        double lo = std::max(L.lo, t - R.hi), hi = std::min(L.hi, t - R.lo);
        if (!(hi > lo)) return 0.0;
        std::vector<double> br;
        br.reserve(L.sing.size() + R.sing.size());
        for (double s : L.sing)
            if (s > lo && s < hi) br.push_back(s);
        for (double s : R.sing)
            if (t - s > lo && t - s < hi) br.push_back(t - s);
        const int left = nd.left, right = nd.right;
        return integrate_partition(
            [&](double s) -> cplx {
                cplx a = conv(left, s);
                if (a == 0.0) return 0.0;
                return a * conv(right, t - s);
            },
            lo, hi, std::move(br), max_piece_, rule_, smooth_);
    }

    double alpha_, plus_, mid_out_, mid_in_;
    const QuadratureRule& rule_;
    const QuadratureRule& smooth_;
    double max_piece_;
    std::vector<EnergyNode> nodes_;
    std::vector<LeafData> leaves_;
    int root_ = 0;
};

double term_scale(const ProductTerm& t, double m0) {
    double s = m0;
    for (const auto& f : t.factors) s = std::min(s, f.scale);
    return s;
}

// sum over the spatial product grid; f(point index, coordinates) -> value
template <class F>
cplx spatial_sum(const std::vector<std::vector<std::pair<double, double>>>& axes, unsigned threads,
                 F&& f) {
    std::size_t total = 1;
    for (const auto& a : axes) total *= a.size();
    if (total == 0) return 0.0;
    const std::size_t chunks = std::min<std::size_t>(total, 256);
    std::vector<cplx> partial(chunks);
    parallel_for(chunks, threads, [&](std::size_t c) {
        std::size_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
        std::vector<double> x(axes.size());
        cplx acc = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            std::size_t r = i;
            double w = 1;
            for (std::size_t a = axes.size(); a-- > 0;) {
                const auto& [node, weight] = axes[a][r % axes[a].size()];
                r /= axes[a].size();
                x[a] = node;
                w *= weight;
            }
            acc += w * f(x);
        }
        partial[c] = acc;
    });
    cplx sum = 0;
    for (auto v : partial) sum += v;
    return sum;
}

cplx free_two_point_level(const MomentumTestFunction& phi, const ScalarModel& model,
                          const HyperplaneQuadrature& q, int level) {
    const int d = phi.dim();
    const double m0 = model.green.m0;
    const double c2 = model.cumulant(2);
    cplx total = 0;
    for (const auto& t : phi.terms()) {
        const auto& f1 = t.factors[0];
        const auto& f2 = t.factors[1];
        const double width = q.panel_scale * term_scale(t, m0) / std::ldexp(1.0, level);
        std::vector<std::vector<std::pair<double, double>>> axes;
        for (int c = 1; c < d; ++c) {
            double lo = std::max(f1.box[c].lo, -f2.box[c].hi), hi = std::min(f1.box[c].hi, -f2.box[c].lo);
            axes.push_back(panel_rule(lo, hi, width, q.panel_order));
        }
        cplx v = spatial_sum(axes, q.threads, [&](const std::vector<double>& kv) {
            double w2 = m0 * m0;
            for (double x : kv) w2 += x * x;
            const double w = std::sqrt(w2);
            std::vector<double> k1(d), k2(d);
            k1[0] = -w;
            k2[0] = w;
            for (int c = 1; c < d; ++c) {
                k1[c] = kv[c - 1];
                k2[c] = -kv[c - 1];
            }
            return f1(k1) * f2(k2) / (2 * w);
        });
        total += t.coef * v;
    }
    return 2 * pi * c2 * total;
}

}  // namespace

std::complex<double> w_hat_trunc_scalar_level(const MomentumTestFunction& phi,
                                              const ScalarModel& model,
                                              const HyperplaneQuadrature& q, int level) {
    model.validate();
    const int n = phi.order();
    const int d = phi.dim();
    if (n < 1) throw DomainError("test function has no factors");
    if (d != model.dim()) throw ShapeError("test function dimension does not match the model");
    if (n == 1) return 0.0;
    const double cn = model.cumulant(n);
    if (cn == 0) return 0.0;
    const double alpha = model.green.alpha, m0 = model.green.m0;
    if (n == 2 && alpha == 0.5) return free_two_point_level(phi, model, q, level);

    const double pref = std::pow(2 * pi, -0.5 * d);
    const double plus = pref * std::sin(pi * alpha);
    const double mid_out = alpha == 0.5 ? 0.0 : pref * std::cos(pi * alpha);
    const double mid_in = pref;
    const auto& rule = tanh_sinh(q.step / std::ldexp(1.0, level), q.t_max);
    const auto& smooth = gauss_legendre(q.smooth_order);

    cplx total = 0;
    for (const auto& t : phi.terms()) {
        const double scale = term_scale(t, m0);
        const double width = q.panel_scale * scale / std::ldexp(1.0, level);
        const double max_piece = q.piece_scale * scale / std::ldexp(1.0, level);
        std::vector<std::vector<std::pair<double, double>>> axes;
        for (int l = 0; l + 1 < n; ++l)
            for (int c = 1; c < d; ++c)
                axes.push_back(panel_rule(t.factors[l].box[c].lo, t.factors[l].box[c].hi, width,
                                          q.panel_order));
        const auto& last = t.factors[n - 1];
        // negligible spatial nodes are skipped when every factor carries an envelope
        double envelope_floor = 1;
        for (const auto& f : t.factors) {
            if (!f.envelope) {
                envelope_floor = 0;
                break;
            }
            std::vector<double> c;
            for (int i = 1; i < d; ++i) c.push_back(0.5 * (f.box[i].lo + f.box[i].hi));
            envelope_floor *= f.envelope(c);
        }
        envelope_floor *= 1e-15;
        cplx v = spatial_sum(axes, q.threads, [&](const std::vector<double>& kv) -> cplx {
            thread_local std::vector<double> tail;
            tail.assign(d - 1, 0.0);
            for (int l = 0; l + 1 < n; ++l)
                for (int c = 1; c < d; ++c) tail[c - 1] -= kv[l * (d - 1) + c - 1];
            for (int c = 1; c < d; ++c)
                if (tail[c - 1] < last.box[c].lo || tail[c - 1] > last.box[c].hi) return 0.0;
            if (envelope_floor > 0) {
                double env = 1;
                for (int l = 0; l < n; ++l) {
                    std::span<const double> kl = l + 1 < n ? std::span<const double>(kv).subspan(l * (d - 1), d - 1)
                                                           : std::span<const double>(tail);
                    env *= t.factors[l].envelope(kl);
                }
                if (env < envelope_floor) return 0.0;
            }
            EnergyTree tree(n, alpha, plus, mid_out, mid_in, rule, smooth, max_piece);
            auto& leaves = tree.leaves();
            for (int l = 0; l < n; ++l) {
                auto& lf = leaves[l];
                lf.factor = &t.factors[l];
                lf.k.assign(d, 0.0);
                double w2 = m0 * m0;
                for (int c = 1; c < d; ++c) {
                    lf.k[c] = l + 1 < n ? kv[l * (d - 1) + c - 1] : tail[c - 1];
                    w2 += lf.k[c] * lf.k[c];
                }
                lf.omega = std::sqrt(w2);
            }
            cplx acc = 0;
            for (int j = 0; j < n; ++j) {
                for (int l = 0; l < n; ++l)
                    leaves[l].branch = l < j ? Branch::Minus : l == j ? Branch::Middle : Branch::Plus;
                if (tree.prepare()) acc += tree.value();
            }
            return acc;
        });
        total += t.coef * v;
    }
    return cn * std::ldexp(1.0, n - 1) * std::pow(2 * pi, d) * total;
}

Evaluation w_hat_trunc_scalar(const MomentumTestFunction& phi, const ScalarModel& model,
                              const HyperplaneQuadrature& q) {
    if (q.max_level < 1) throw ConfigError("quadrature needs at least one refinement level");
    Evaluation ev;
    for (int level = 0; level <= q.max_level; ++level) {
        ev.history.push_back(w_hat_trunc_scalar_level(phi, model, q, level));
        ev.value = ev.history.back();
        if (level == 0) continue;
        ev.error = std::abs(ev.value - ev.history[level - 1]);
        if (ev.error <= std::max(q.abs_tolerance, q.rel_tolerance * std::abs(ev.value))) {
            ev.converged = true;
            return ev;
        }
    }
    throw ToleranceFailure("truncated Wightman quadrature did not converge", ev.error);
}

}  // namespace wightlab
