#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "rmlab/errors.hpp"

namespace rmlab {

using cplx = std::complex<double>;

// Square complex matrix with conjugate symmetry. Mutation goes through
// set_diag/set_upper, which write both mirrored entries, so constructed
// matrices satisfy the invariant exactly.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, cplx{0.0, 0.0}) {
        if (n < 1)
            throw validation_error("HermitianMatrix: dimension must be positive");
    }

    // Builds from a full row-major entry list, validating conjugate symmetry
    // (absolute tolerance 1e-12).
    static HermitianMatrix from_entries(int n, const std::vector<cplx>& entries) {
        if (n < 1 || entries.size() != static_cast<std::size_t>(n) * n)
            throw validation_error("HermitianMatrix: bad entry count");
        HermitianMatrix h(n);
        constexpr double tol = 1e-12;
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                const cplx up = entries[static_cast<std::size_t>(i) * n + j];
                const cplx lo = entries[static_cast<std::size_t>(j) * n + i];
                if (std::abs(up - std::conj(lo)) > tol)
                    throw validation_error("HermitianMatrix: conjugate symmetry violated");
                if (i == j && std::abs(up.imag()) > tol)
                    throw validation_error("HermitianMatrix: diagonal must be real");
                h.a_[static_cast<std::size_t>(i) * n + j] = up;
                h.a_[static_cast<std::size_t>(j) * n + i] = std::conj(up);
            }
        }
        for (int i = 0; i < n; ++i)
            h.a_[static_cast<std::size_t>(i) * n + i] = cplx{h(i, i).real(), 0.0};
        return h;
    }

    int dim() const { return n_; }

    const cplx& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

    void set_diag(int i, double v) { a_[static_cast<std::size_t>(i) * n_ + i] = cplx{v, 0.0}; }

    void set_upper(int i, int j, cplx v) {
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = std::conj(v);
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i)
            t += (*this)(i, i).real();
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& v : a_)
            s += std::norm(v);
        return std::sqrt(s);
    }

    // sum_{ij} |h_ij|^2, which equals Tr H^2 for Hermitian H.
    double trace_square() const {
        double s = 0.0;
        for (const cplx& v : a_)
            s += std::norm(v);
        return s;
    }

    bool is_hermitian(double tol = 1e-12) const {
        for (int i = 0; i < n_; ++i) {
            if (std::abs((*this)(i, i).imag()) > tol)
                return false;
            for (int j = i + 1; j < n_; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol)
                    return false;
        }
        return true;
    }

private:
    int n_;
    std::vector<cplx> a_;
};

// Real eigenvalues in ascending order.
struct Spectrum {
    std::vector<double> values;

    int dim() const { return static_cast<int>(values.size()); }
    double max() const { return values.back(); }
    double min() const { return values.front(); }
};

// values[n-1] + ... + values[n-k]
inline double sum_top_k(const Spectrum& s, int k) {
    const int n = s.dim();
    if (k < 1 || k > n)
        throw validation_error("sum_top_k: k out of range");
    double acc = 0.0;
    for (int i = n - k; i < n; ++i)
        acc += s.values[i];
    return acc;
}

namespace detail {

// Implicit-shift QL iteration on a real symmetric tridiagonal matrix.
// d holds the diagonal, e the subdiagonal (e[i] couples d[i] and d[i+1];
// e must have size n, the last slot is scratch). An off-diagonal element is
// treated as zero once |e[i]| <= eps*(|d[i]|+|d[i+1]|) with eps = machine
// epsilon; more than 60 sweeps for one eigenvalue is an error.
inline void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    const double eps = std::numeric_limits<double>::epsilon();
    if (n == 1)
        return;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                if (std::abs(e[m]) <= eps * (std::abs(d[m]) + std::abs(d[m + 1])))
                    break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw convergence_error("tridiagonal_ql: too many sweeps");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace detail

// All eigenvalues of a Hermitian matrix, ascending.
//
// Householder reflections reduce the matrix to tridiagonal form with a rank-2
// update per column; a diagonal unitary similarity then strips the phases of
// the subdiagonal so one real QL kernel serves every input.
inline Spectrum eigenvalues_sorted(const HermitianMatrix& h) {
    if (!h.is_hermitian())
        throw validation_error("eigenvalues_sorted: input is not Hermitian");
    const int n = h.dim();
    std::vector<cplx> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] = h(i, j);
    auto at = [&](int i, int j) -> cplx& { return a[static_cast<std::size_t>(i) * n + j]; };

    for (int k = 0; k + 2 < n; ++k) {
        // Householder vector for column k below the diagonal
        double norm2 = 0.0;
        for (int i = k + 1; i < n; ++i)
            norm2 += std::norm(at(i, k));
        const double norm = std::sqrt(norm2);
        if (norm == 0.0)
            continue;
        const cplx x0 = at(k + 1, k);
        const cplx phase = (x0 == cplx{0.0, 0.0}) ? cplx{1.0, 0.0} : x0 / std::abs(x0);
        const cplx alpha = -phase * norm;

        std::vector<cplx> v(n - k - 1);
        v[0] = x0 - alpha;
        for (int i = k + 2; i < n; ++i)
            v[i - k - 1] = at(i, k);
        double vnorm2 = 0.0;
        for (const cplx& vi : v)
            vnorm2 += std::norm(vi);
        if (vnorm2 == 0.0) // column already reduced
            continue;
        const double vinv = 1.0 / std::sqrt(vnorm2);
        for (cplx& vi : v)
            vi *= vinv;

        // rank-2 update of the trailing block: B <- B - u v* - v u*,
        // u = 2(Bv - (v*Bv) v)
        const int blk = n - k - 1;
        std::vector<cplx> w(blk, cplx{0.0, 0.0});
        for (int i = 0; i < blk; ++i)
            for (int j = 0; j < blk; ++j)
                w[i] += at(k + 1 + i, k + 1 + j) * v[j];
        cplx mu{0.0, 0.0};
        for (int i = 0; i < blk; ++i)
            mu += std::conj(v[i]) * w[i];
        std::vector<cplx> u(blk);
        for (int i = 0; i < blk; ++i)
            u[i] = 2.0 * (w[i] - mu * v[i]);
        for (int i = 0; i < blk; ++i)
            for (int j = 0; j < blk; ++j)
                at(k + 1 + i, k + 1 + j) -= u[i] * std::conj(v[j]) + v[i] * std::conj(u[j]);

        at(k + 1, k) = alpha;
        at(k, k + 1) = std::conj(alpha);
        for (int i = k + 2; i < n; ++i) {
            at(i, k) = cplx{0.0, 0.0};
            at(k, i) = cplx{0.0, 0.0};
        }
    }

    std::vector<double> d(n), e(n, 0.0);
    for (int i = 0; i < n; ++i)
        d[i] = at(i, i).real();
    for (int i = 0; i + 1 < n; ++i)
        e[i] = std::abs(at(i + 1, i)); // phase strip

    detail::tridiagonal_ql(d, e);
    std::sort(d.begin(), d.end());
    return Spectrum{std::move(d)};
}

} // namespace rmlab
