#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace agk {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(double s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Vec unit_vector(std::size_t n, std::size_t k) {
    Vec e(n, 0.0);
    e.at(k) = 1.0;
    return e;
}

/// Dense square real matrix, row-major.
class Matrix {
public:
    Matrix() = default;

    explicit Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {
        if (n == 0) throw std::invalid_argument("Matrix: dimension must be >= 1");
    }

    Matrix(std::initializer_list<std::initializer_list<double>> rows) {
        n_ = rows.size();
        if (n_ == 0) throw std::invalid_argument("Matrix: dimension must be >= 1");
        a_.reserve(n_ * n_);
        for (const auto& r : rows) {
            if (r.size() != n_) throw std::invalid_argument("Matrix: not square");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(const Vec& d) {
        Matrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t dim() const { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    Matrix operator*(const Matrix& o) const {
        check_dim(o);
        Matrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const double aik = (*this)(i, k);
                if (aik == 0.0) continue;
                for (std::size_t j = 0; j < n_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    Vec operator*(const Vec& x) const {
        if (x.size() != n_) throw std::invalid_argument("Matrix*vec: size mismatch");
        Vec r(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r[i] += (*this)(i, j) * x[j];
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        check_dim(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_dim(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Matrix operator*(double s) const {
        Matrix r = *this;
        for (double& v : r.a_) v *= s;
        return r;
    }

    Matrix transpose() const {
        Matrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    double frobenius() const {
        double s = 0.0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    bool all_finite() const {
        return std::all_of(a_.begin(), a_.end(), [](double v) { return std::isfinite(v); });
    }

    Vec column(std::size_t j) const {
        Vec c(n_);
        for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Vec row(std::size_t i) const {
        Vec r(n_);
        for (std::size_t j = 0; j < n_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    /// Copies `b` into the square block anchored at (i0, j0).
    void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
        if (i0 + b.dim() > n_ || j0 + b.dim() > n_)
            throw std::invalid_argument("set_block: out of range");
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    Matrix block(std::size_t i0, std::size_t j0, std::size_t m) const {
        if (i0 + m > n_ || j0 + m > n_) throw std::invalid_argument("block: out of range");
        Matrix b(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

private:
    void check_dim(const Matrix& o) const {
        if (o.n_ != n_) throw std::invalid_argument("Matrix: dimension mismatch");
    }

    std::size_t n_ = 0;
    Vec a_;
};

inline Matrix operator*(double s, const Matrix& m) { return m * s; }

inline double distance(const Matrix& a, const Matrix& b) { return (a - b).frobenius(); }

/// Determinant via LU with partial pivoting.
inline double det(const Matrix& m) {
    const std::size_t n = m.dim();
    Matrix lu = m;
    double d = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
        if (lu(p, k) == 0.0) return 0.0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(p, j), lu(k, j));
            d = -d;
        }
        d *= lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu(i, k) / lu(k, k);
            for (std::size_t j = k; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return d;
}

/// Scale-invariant singularity guard: |det| > 1e-12 times the Hadamard bound
/// (the product of row norms, which always dominates |det|).
inline bool is_invertible(const Matrix& m) {
    double bound = 1e-12;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        const double r = norm(m.row(i));
        if (r == 0.0 || !std::isfinite(r)) return false;
        bound *= r;
    }
    return std::abs(det(m)) > bound;
}

/// Solves M X = I by Gauss-Jordan with partial pivoting.
inline Matrix inverse(const Matrix& m) {
    const std::size_t n = m.dim();
    Matrix w = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(w(i, k)) > std::abs(w(p, k))) p = i;
        if (w(p, k) == 0.0) throw std::domain_error("inverse: singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(p, j), w(k, j));
                std::swap(inv(p, j), inv(k, j));
            }
        const double piv = w(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            w(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const double f = w(i, k);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= f * w(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    // One Newton refinement step X <- X (2I - M X) knocks the forward error
    // down to the order of eps * cond(M).
    Matrix r = Matrix::identity(n) * 2.0 - m * inv;
    return inv * r;
}

/// Cyclic Jacobi eigensolver for symmetric matrices. Returns eigenvalues in
/// `values` and orthonormal eigenvectors as columns of `vectors`.
inline void symmetric_eigen(const Matrix& s, Vec& values, Matrix& vectors) {
    const std::size_t n = s.dim();
    Matrix a = s;
    Matrix v = Matrix::identity(n);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-300) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0 ||
                    std::abs(apq) < 1e-30 * (std::abs(a(p, p)) + std::abs(a(q, q)) + 1e-300))
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - sn * akq;
                    a(k, q) = sn * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - sn * aqk;
                    a(q, k) = sn * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
    }
    values.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
    vectors = v;
}

}  // namespace agk
