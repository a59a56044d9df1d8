#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "rmlab/errors.hpp"
#include "rmlab/rng.hpp"

namespace rmlab {

// Path values on the uniform closed grid t_j = j/steps over [0,1].
using Path = std::vector<double>;

// Bundle of n paths on a shared uniform grid, each starting at 0.
struct DiscretePathBundle {
    int steps = 0;
    std::vector<Path> values; // n_paths x (steps+1)

    int n_paths() const { return static_cast<int>(values.size()); }
    double time_at(int j) const { return static_cast<double>(j) / steps; }

    static DiscretePathBundle from_values(int steps, std::vector<Path> values) {
        if (steps < 1 || values.empty())
            throw validation_error("DiscretePathBundle: needs paths and at least one step");
        for (const Path& p : values) {
            if (static_cast<int>(p.size()) != steps + 1)
                throw validation_error("DiscretePathBundle: path length does not match grid");
            if (p[0] != 0.0)
                throw validation_error("DiscretePathBundle: paths must start at 0");
        }
        return DiscretePathBundle{steps, std::move(values)};
    }
};

// Independent standard Brownian motions sampled path by path with Gaussian
// increments of variance 1/steps.
inline DiscretePathBundle sample_bm_bundle(int n_paths, int steps, RngStream& rng) {
    if (n_paths < 1 || steps < 1)
        throw validation_error("sample_bm_bundle: n_paths and steps must be positive");
    const double sd = std::sqrt(1.0 / steps);
    std::vector<Path> values(n_paths, Path(steps + 1, 0.0));
    for (int i = 0; i < n_paths; ++i)
        for (int j = 1; j <= steps; ++j)
            values[i][j] = values[i][j - 1] + sd * rng.gaussian();
    return DiscretePathBundle{steps, std::move(values)};
}

// sup over grid subdivisions 0 = t_0 <= ... <= t_N = 1 of
// sum_i (B_i(t_i) - B_i(t_{i-1})): one column of state, updated per path.
inline double omega_1(const DiscretePathBundle& b) {
    const int n = b.n_paths(), steps = b.steps;
    Path v = b.values[0]; // best using path 1 only, t_1 = t_j
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j <= steps; ++j) {
            const double inc = b.values[i][j] - b.values[i][j - 1];
            v[j] = std::max(v[j], v[j - 1] + inc);
        }
    }
    return v[steps];
}

namespace detail {

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace detail

// sup over k nested grid subdivision families of the summed increments.
//
// A family of nested subdivisions is the same thing as assigning each grid
// column a strictly increasing k-tuple of path indices, the tuple moving
// weakly upward column to column; the boundary pinning of the subdivisions is
// exactly what makes every such tuple sequence admissible. The DP runs over
// the C(n,k) tuples with componentwise domination as the transition.
inline double omega_k(const DiscretePathBundle& b, int k) {
    const int n = b.n_paths(), steps = b.steps;
    if (k < 1 || k > n)
        throw validation_error("omega_k: k out of range");

    const auto states = detail::k_subsets(n, k);
    const int ns = static_cast<int>(states.size());
    std::vector<std::vector<int>> from(ns); // states dominated by each state
    for (int s = 0; s < ns; ++s)
        for (int t = 0; t < ns; ++t) {
            bool ok = true;
            for (int p = 0; p < k && ok; ++p)
                ok = states[t][p] <= states[s][p];
            if (ok)
                from[s].push_back(t);
        }

    auto colsum = [&](int c, int s) {
        double acc = 0.0;
        for (int r : states[s])
            acc += b.values[r][c] - b.values[r][c - 1];
        return acc;
    };

    std::vector<double> d(ns), dn(ns);
    for (int s = 0; s < ns; ++s)
        d[s] = colsum(1, s);
    for (int c = 2; c <= steps; ++c) {
        for (int s = 0; s < ns; ++s) {
            double best = d[from[s][0]];
            for (std::size_t idx = 1; idx < from[s].size(); ++idx)
                best = std::max(best, d[from[s][idx]]);
            dn[s] = best + colsum(c, s);
        }
        d.swap(dn);
    }
    return *std::max_element(d.begin(), d.end());
}

// f (x) g(t) = inf_{0<=s<=t} (f(s) + g(t) - g(s)), grid-restricted.
inline Path otimes(const Path& f, const Path& g) {
    if (f.size() != g.size() || f.empty())
        throw validation_error("otimes: paths must share a grid");
    Path out(f.size());
    double run = f[0] - g[0];
    for (std::size_t t = 0; t < f.size(); ++t) {
        run = std::min(run, f[t] - g[t]);
        out[t] = g[t] + run;
    }
    return out;
}

// f (.) g(t) = sup_{0<=s<=t} (f(s) + g(t) - g(s)), grid-restricted.
inline Path odot(const Path& f, const Path& g) {
    if (f.size() != g.size() || f.empty())
        throw validation_error("odot: paths must share a grid");
    Path out(f.size());
    double run = f[0] - g[0];
    for (std::size_t t = 0; t < f.size(); ++t) {
        run = std::max(run, f[t] - g[t]);
        out[t] = g[t] + run;
    }
    return out;
}

// Recursive path transformation: component 1 is the full left-to-right
// (x)-product f_1 (x) ... (x) f_N; the remaining components are the transform
// of (f_2 (.) f_1, f_3 (.) (f_1 (x) f_2), ..., f_N (.) (f_1 (x) ... (x) f_{N-1})).
inline DiscretePathBundle gamma(const DiscretePathBundle& b) {
    const int n = b.n_paths();
    if (n < 2)
        throw validation_error("gamma: needs at least two paths");
    std::vector<Path> out(n);
    std::vector<Path> cur = b.values;
    for (int level = 0; level + 1 < n; ++level) {
        std::vector<Path> next(cur.size() - 1);
        Path prefix = cur[0];
        for (std::size_t i = 1; i < cur.size(); ++i) {
            next[i - 1] = odot(cur[i], prefix);
            prefix = otimes(prefix, cur[i]);
        }
        out[level] = std::move(prefix);
        cur = std::move(next);
    }
    out[n - 1] = std::move(cur[0]);
    return DiscretePathBundle{b.steps, std::move(out)};
}

// Terminal-time sum of the top k transform components.
inline double gamma_top_sum(const DiscretePathBundle& b, int k) {
    const int n = b.n_paths();
    if (k < 1 || k > n)
        throw validation_error("gamma_top_sum: k out of range");
    const DiscretePathBundle g = gamma(b);
    double acc = 0.0;
    for (int i = n - k; i < n; ++i)
        acc += g.values[i][b.steps];
    return acc;
}

} // namespace rmlab
