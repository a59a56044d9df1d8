#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rmlab/errors.hpp"

namespace rmlab {

// Sorted batch of real observations plus run metadata (seed, parameters, ...).
struct EmpiricalSample {
    std::vector<double> values; // ascending
    std::map<std::string, std::string> meta;

    static EmpiricalSample from_values(std::vector<double> v,
                                       std::map<std::string, std::string> meta = {}) {
        if (v.empty())
            throw validation_error("EmpiricalSample: needs at least one observation");
        std::sort(v.begin(), v.end());
        return EmpiricalSample{std::move(v), std::move(meta)};
    }

    std::size_t size() const { return values.size(); }
};

// Fraction of observations <= x.
inline double ecdf_at(const EmpiricalSample& s, double x) {
    if (s.values.empty())
        throw validation_error("ecdf_at: empty sample");
    const auto it = std::upper_bound(s.values.begin(), s.values.end(), x);
    return static_cast<double>(it - s.values.begin()) / static_cast<double>(s.values.size());
}

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
    std::size_t n1 = 0;
    std::size_t n2 = 0; // 0 for one-sample tests
};

// Kolmogorov survival function Q(x) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 x^2),
// truncated once a term drops below 1e-12.
inline double kolmogorov_q(double x) {
    if (x <= 1e-8)
        return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k < 100000; ++k) {
        const double term = std::exp(-2.0 * static_cast<double>(k) * k * x * x);
        sum += sign * term;
        sign = -sign;
        if (term < 1e-12)
            break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

// Exact sup-distance between two empirical CDFs by merge scan; asymptotic
// p-value from the Kolmogorov law at x = D * sqrt(n1 n2 / (n1 + n2)).
inline KsResult ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b) {
    if (a.values.empty() || b.values.empty())
        throw validation_error("ks_two_sample: empty sample");
    const std::size_t n1 = a.size(), n2 = b.size();
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < n1 && j < n2) {
        const double x = std::min(a.values[i], b.values[j]);
        while (i < n1 && a.values[i] == x)
            ++i;
        while (j < n2 && b.values[j] == x)
            ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / n1 - static_cast<double>(j) / n2));
    }
    if (i < n1)
        d = std::max(d, 1.0 - static_cast<double>(i) / n1);
    if (j < n2)
        d = std::max(d, 1.0 - static_cast<double>(j) / n2);
    const double neff = std::sqrt(static_cast<double>(n1) * n2 / (static_cast<double>(n1) + n2));
    return KsResult{d, kolmogorov_q(d * neff), n1, n2};
}

// One-sample sup-distance against a monotone CDF; p-value at x = D * sqrt(n).
inline KsResult ks_against_cdf(const EmpiricalSample& a,
                               const std::function<double(double)>& cdf) {
    if (a.values.empty())
        throw validation_error("ks_against_cdf: empty sample");
    const std::size_t n = a.size();
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(a.values[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return KsResult{d, kolmogorov_q(d * std::sqrt(static_cast<double>(n))), n, 0};
}

struct MomentSummary {
    double mean = 0.0;
    double variance = 0.0;       // unbiased
    double standard_error = 0.0; // of the mean
};

inline MomentSummary moment_summary(const EmpiricalSample& a) {
    const std::size_t n = a.size();
    if (n < 2)
        throw validation_error("moment_summary: needs at least two observations");
    double mean = 0.0;
    for (double v : a.values)
        mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : a.values)
        ss += (v - mean) * (v - mean);
    const double var = ss / static_cast<double>(n - 1);
    return MomentSummary{mean, var, std::sqrt(var / static_cast<double>(n))};
}

} // namespace rmlab
