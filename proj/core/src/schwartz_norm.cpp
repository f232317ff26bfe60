// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/schwartz_norm.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <queue>

#include "wightlab/errors.hpp"

namespace wightlab {

void SchwartzNormSpec::validate() const {
    if (K < 0 || N < 0) throw ConfigError("Schwartz norm orders must be nonnegative");
}

namespace {

struct Box {
    std::vector<double> lo, hi;
    double upper;
    bool operator<(const Box& o) const { return upper < o.upper; }
};

class WeightedSup {
  public:
    WeightedSup(const TestFunction& f, int block_dim, int N) : f_(f), bd_(block_dim), N_(N) {
        for (const auto& [e, c] : f.polynomial().terms()) {
            terms_.push_back({e, std::abs(c)});
            cterms_.push_back({e, c});
        }
    }

    double value(const std::vector<double>& x) const {
        return weight(x) * std::abs(f_(x));
    }

    double upper(const std::vector<double>& lo, const std::vector<double>& hi) const {
        const int n = f_.dim();
        const auto& c = f_.center();
        const auto& w = f_.widths();
        double wmax = 1, expo = 0, q = 0;
        for (int i = 0; i < n; ++i) {
            double a = lo[i] - c[i], b = hi[i] - c[i];
            double ymin = a > 0 ? a : b < 0 ? -b : 0.0;
            expo += ymin * ymin / (2 * w[i] * w[i]);
        }
        for (int l = 0; l < n / bd_; ++l) {
            double s = 1;
            for (int i = l * bd_; i < (l + 1) * bd_; ++i)
                s += std::pow(std::max(std::abs(lo[i]), std::abs(hi[i])), 2);
            wmax *= std::pow(s, 0.5 * N_);
        }
        q = shifted_bound(lo, hi);
        return wmax * q * std::exp(-expo);
    }

    // bound outside the box c +- R w, valid once R exceeds sqrt of the total degree
    double tail(double R) const {
        const int n = f_.dim();
        const auto& c = f_.center();
        double wm = *std::max_element(f_.widths().begin(), f_.widths().end());
        double q = 0;
        for (const auto& [e, a] : terms_) {
            int deg = 0;
            for (int v : e) deg += v;
            q += a * std::pow(wm * R, deg);
        }
        double wt = 1;
        for (int l = 0; l < n / bd_; ++l) {
            double c2 = 0;
            for (int i = l * bd_; i < (l + 1) * bd_; ++i) c2 += c[i] * c[i];
            wt *= std::pow(1 + 2 * c2 + 2 * wm * wm * R * R, 0.5 * N_);
        }
        return q * wt * std::exp(-0.5 * R * R);
    }

    int degree() const {
        int d = 0;
        for (const auto& [e, a] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            d = std::max(d, s);
        }
        return d + N_ * (f_.dim() / bd_);
    }

  private:
    // sup of |P| over the box from the Taylor expansion about its midpoint
    double shifted_bound(const std::vector<double>& lo, const std::vector<double>& hi) const {
        const int n = f_.dim();
        const auto& c = f_.center();
        std::map<std::vector<int>, std::complex<double>> shifted;
        std::vector<double> m(n), r(n);
        for (int i = 0; i < n; ++i) {
            m[i] = 0.5 * (lo[i] + hi[i]) - c[i];
            r[i] = 0.5 * (hi[i] - lo[i]);
        }
        std::vector<int> k(n);
        for (const auto& [e, a] : cterms_) {
            // expand prod (m_i + h_i)^{e_i} over all k <= e
            std::fill(k.begin(), k.end(), 0);
            while (true) {
                std::complex<double> v = a;
                for (int i = 0; i < n; ++i)
                    v *= binom(e[i], k[i]) * std::pow(m[i], e[i] - k[i]);
                shifted[k] += v;
                int i = 0;
                while (i < n && k[i] == e[i]) k[i++] = 0;
                if (i == n) break;
                ++k[i];
            }
        }
        double q = 0;
        for (const auto& [kk, v] : shifted) {
            double t = std::abs(v);
            for (int i = 0; i < n; ++i) t *= std::pow(r[i], kk[i]);
            q += t;
        }
        return q;
    }

    static double binom(int n, int k) {
        double b = 1;
        for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
        return b;
    }

    double weight(const std::vector<double>& x) const {
        double wt = 1;
        for (int l = 0; l < int(x.size()) / bd_; ++l) {
            double s = 1;
            for (int i = l * bd_; i < (l + 1) * bd_; ++i) s += x[i] * x[i];
            wt *= std::pow(s, 0.5 * N_);
        }
        return wt;
    }

    const TestFunction& f_;
    int bd_, N_;
    std::vector<std::pair<std::vector<int>, double>> terms_;
    std::vector<std::pair<std::vector<int>, std::complex<double>>> cterms_;
};

NormBracket sup_bracket(const TestFunction& f, int block_dim, int N, double rel) {
    if (f.polynomial().terms().empty()) return {0, 0};
    WeightedSup g(f, block_dim, N);
    const int n = f.dim();
    const auto& c = f.center();
    const auto& w = f.widths();

    double lower = g.value(c);
    // coarse scan for a starting lower bound
    for (int i = 0; i < n; ++i)
        for (double s : {-2.0, -1.0, 1.0, 2.0}) {
            auto x = c;
            x[i] += s * w[i];
            lower = std::max(lower, g.value(x));
        }
    double R = std::max(3.0, std::sqrt(double(g.degree())) + 1);
    while (g.tail(R) > 1e-3 * rel * std::max(lower, 1e-300) && R < 60) R += 1;
    const double tail = g.tail(R);

    std::priority_queue<Box> queue;
    Box root{std::vector<double>(n), std::vector<double>(n), 0};
    for (int i = 0; i < n; ++i) {
        root.lo[i] = c[i] - R * w[i];
        root.hi[i] = c[i] + R * w[i];
    }
    root.upper = g.upper(root.lo, root.hi);
    queue.push(root);
    std::vector<double> mid(n);
    for (int iter = 0; iter < 4000000 && !queue.empty(); ++iter) {
        Box b = queue.top();
        if (b.upper <= lower * (1 + rel)) break;
        queue.pop();
        int axis = 0;
        double best = -1;
        for (int i = 0; i < n; ++i) {
            double s = (b.hi[i] - b.lo[i]) / w[i];
            if (s > best) {
                best = s;
                axis = i;
            }
        }
        double m = 0.5 * (b.lo[axis] + b.hi[axis]);
        Box left = b, right = b;
        left.hi[axis] = m;
        right.lo[axis] = m;
        for (Box* child : {&left, &right}) {
            for (int i = 0; i < n; ++i) mid[i] = 0.5 * (child->lo[i] + child->hi[i]);
            lower = std::max(lower, g.value(mid));
            child->upper = g.upper(child->lo, child->hi);
            if (child->upper > lower) queue.push(*child);
        }
    }
    double upper = std::max(lower, tail);
    if (!queue.empty()) upper = std::max(upper, queue.top().upper);
    return {lower, upper};
}

// all multi-indices on `dim` axes with total order <= K
void multi_indices(int dim, int K, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == dim) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (int v : cur) used += v;
    for (int a = 0; used + a <= K; ++a) {
        cur.push_back(a);
        multi_indices(dim, K, cur, out);
        cur.pop_back();
    }
}

NormBracket block_norm(const TestFunction& f, int block_dim, const SchwartzNormSpec& spec, double rel) {
    // multi-indices bounded blockwise
    const int blocks = f.dim() / block_dim;
    std::vector<std::vector<int>> per_block, full{{}};
    std::vector<int> cur;
    multi_indices(block_dim, spec.K, cur, per_block);
    for (int l = 0; l < blocks; ++l) {
        std::vector<std::vector<int>> next;
        for (const auto& a : full)
            for (const auto& b : per_block) {
                auto m = a;
                m.insert(m.end(), b.begin(), b.end());
                next.push_back(m);
            }
        full = std::move(next);
    }
    NormBracket out;
    for (const auto& alpha : full) {
        auto br = sup_bracket(f.derivative(alpha), block_dim, spec.N, rel);
        out.lower = std::max(out.lower, br.lower);
        out.upper = std::max(out.upper, br.upper);
    }
    return out;
}

}  // namespace

NormBracket schwartz_norm(const TestFunction& f, int block_dim, const SchwartzNormSpec& spec,
                          double rel_width) {
    spec.validate();
    if (block_dim < 1 || f.dim() % block_dim != 0)
        throw ShapeError("dimension is not a multiple of the block size");
    const auto& terms = f.polynomial().terms();
    if (terms.size() != 1 || f.dim() == block_dim) return block_norm(f, block_dim, spec, rel_width);

    // single monomial: split into one factor per block
    const auto& [e, coef] = *terms.begin();
    std::vector<TestFunction> slots;
    for (int l = 0; l < f.dim() / block_dim; ++l) {
        Polynomial p(block_dim);
        p.add_term(std::vector<int>(e.begin() + l * block_dim, e.begin() + (l + 1) * block_dim),
                   l == 0 ? coef : 1.0);
        std::vector<double> c(f.center().begin() + l * block_dim, f.center().begin() + (l + 1) * block_dim);
        std::vector<double> w(f.widths().begin() + l * block_dim, f.widths().begin() + (l + 1) * block_dim);
        slots.emplace_back(std::move(c), std::move(w), std::move(p));
    }
    return schwartz_norm(slots, spec, rel_width);
}

NormBracket schwartz_norm(const std::vector<TestFunction>& slots, const SchwartzNormSpec& spec,
                          double rel_width) {
    spec.validate();
    if (slots.empty()) return {1, 1};
    // per-factor widths compound, so tighten each
    const double rel = rel_width / (2 * double(slots.size()));
    NormBracket out{1, 1};
    for (const auto& s : slots) {
        auto br = block_norm(s, s.dim(), spec, rel);
        out.lower *= br.lower;
        out.upper *= br.upper;
    }
    return out;
}

}  // namespace wightlab
