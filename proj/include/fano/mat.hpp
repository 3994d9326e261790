#ifndef FANO_MAT_HPP
#define FANO_MAT_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fano {

// Dense row-major matrix over an exact field element type T.
// T is Fp or Rat; all algorithms below are plain exact elimination.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols) {}
    Mat(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), a_((size_t)rows * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(int i, int j) { return a_[(size_t)i * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[(size_t)i * cols_ + j]; }

    const std::vector<T>& data() const { return a_; }
    std::vector<T>& data() { return a_; }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat col(int j) const {
        Mat r(rows_, 1);
        for (int i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
        return r;
    }

    Mat row(int i) const {
        Mat r(1, cols_);
        for (int j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
        return r;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat: shape mismatch in +");
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat: shape mismatch in -");
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: shape mismatch in *");
        Mat r(a.rows_, b.cols_);
        if (a.cols_ == 0) return r;
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + x * b(k, j);
            }
        return r;
    }
    friend Mat operator*(const T& s, const Mat& a) {
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = s * a.a_[i];
        return r;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] == b.a_[i])) return false;
        return true;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    bool is_zero() const {
        for (const T& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

template <class T>
Mat<T> hstack(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Mat<T> r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

// Row-reduce m in place; returns pivot columns. Plain Gauss-Jordan over the
// field, no pivot-size heuristics (everything is exact).
template <class T>
std::vector<int> rref_inplace(Mat<T>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        m.swap_rows(r, pr);
        T piv_inv = m(r, c).inv();
        for (int j = c; j < m.cols(); ++j) m(r, j) = piv_inv * m(r, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            T f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
int rank(Mat<T> m) {
    return (int)rref_inplace(m).size();
}

// Basis of the right kernel, one basis vector per column.
// m * kernel_basis(m) = 0 exactly and cols = m.cols() - rank(m).
template <class T>
Mat<T> kernel_basis(const Mat<T>& m) {
    Mat<T> r = m;
    std::vector<int> pivots = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    int nfree = m.cols() - (int)pivots.size();
    if (m.cols() == 0 || nfree == 0) return Mat<T>(m.cols(), 0);

    const T* sample = nullptr;
    for (const T& x : m.data())
        if (has_field(x)) { sample = &x; break; }
    if (!sample) throw std::invalid_argument("kernel_basis: matrix carries no field information");
    T zero = zero_like(*sample);
    T one = one_like(*sample);

    Mat<T> ker(m.cols(), nfree, zero);
    int kcol = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        ker(c, kcol) = one;
        for (size_t pi = 0; pi < pivots.size(); ++pi) ker(pivots[pi], kcol) = -r((int)pi, c);
        ++kcol;
    }
    return ker;
}

// Exact determinant by Gaussian elimination (fine over F_p where division is cheap).
template <class T>
T det_gauss(Mat<T> m, const T& one) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    int n = m.rows();
    if (n == 0) return one;
    T res = one;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) return zero_like(one);
        if (pr != c) { m.swap_rows(c, pr); res = -res; }
        res = res * m(c, c);
        T piv_inv = m(c, c).inv();
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            T f = m(i, c) * piv_inv;
            for (int j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return res;
}

// Fraction-free Bareiss determinant. Intermediate entries stay integral when
// the input is integral, which keeps big-rational growth under control.
template <class T>
T det_bareiss(Mat<T> m, const T& one) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    int n = m.rows();
    if (n == 0) return one;
    T sign = one;
    T prev = one;
    for (int k = 0; k < n - 1; ++k) {
        int pr = -1;
        for (int i = k; i < n; ++i)
            if (!m(i, k).is_zero()) { pr = i; break; }
        if (pr < 0) return zero_like(one);
        if (pr != k) { m.swap_rows(k, pr); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = zero_like(one);
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// Pfaffian of a skew-symmetric matrix by Parlett-Reid congruence elimination.
// pfaffian(m)^2 = det(m); odd size or non-skew input is rejected.
template <class T>
T pfaffian(Mat<T> m, const T& one) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: matrix not square");
    int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (!(m(i, j) == -m(j, i))) throw std::invalid_argument("pfaffian: matrix not skew-symmetric");
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
    if (n == 0) return one;

    T res = one;
    for (int k = 0; k + 1 < n; k += 2) {
        int pr = -1;
        for (int i = k + 1; i < n; ++i)
            if (!m(k, i).is_zero()) { pr = i; break; }
        if (pr < 0) return zero_like(one);
        if (pr != k + 1) {
            // congruent transposition: swap rows and columns together, sign flips
            m.swap_rows(k + 1, pr);
            m.swap_cols(k + 1, pr);
            res = -res;
        }
        T piv = m(k, k + 1);
        res = res * piv;
        T piv_inv = piv.inv();
        // clear row k beyond column k+1 by the congruence row_i -= tau_i row_{k+1};
        // only the trailing block feeds the recursion, so only it is updated
        for (int i = k + 2; i < n; ++i) {
            T tau_i = m(k, i) * piv_inv;
            for (int j = k + 2; j < n; ++j) {
                T tau_j = m(k, j) * piv_inv;
                m(i, j) = m(i, j) + tau_i * m(j, k + 1) - tau_j * m(i, k + 1);
            }
        }
    }
    return res;
}

// Solve A x = b. Returns a particular solution, or nullopt when inconsistent.
template <class T>
std::optional<Mat<T>> solve(const Mat<T>& a, const Mat<T>& b, const T& zero) {
    if (a.rows() != b.rows() || b.cols() != 1) throw std::invalid_argument("solve: shape mismatch");
    Mat<T> aug = hstack(a, b);
    std::vector<int> pivots = rref_inplace(aug);
    for (int c : pivots)
        if (c == a.cols()) return std::nullopt; // pivot in the b column
    Mat<T> x(a.cols(), 1, zero);
    for (size_t i = 0; i < pivots.size(); ++i) x(pivots[i], 0) = aug((int)i, a.cols());
    return x;
}

// Inverse via Gauss-Jordan; nullopt when singular.
template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& a, const T& zero, const T& one) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    int n = a.rows();
    Mat<T> eye(n, n, zero);
    for (int i = 0; i < n; ++i) eye(i, i) = one;
    Mat<T> aug = hstack(a, eye);
    std::vector<int> pivots = rref_inplace(aug);
    if ((int)pivots.size() != n) return std::nullopt;
    for (int c : pivots)
        if (c >= n) return std::nullopt;
    Mat<T> r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

// Pivot columns of m (a basis of the column space is m restricted to them).
template <class T>
std::vector<int> pivot_columns(Mat<T> m) {
    return rref_inplace(m);
}

// For a full-column-rank C (N x r), a left inverse P (r x N) with P * C = I.
template <class T>
Mat<T> left_inverse(const Mat<T>& c, const T& zero, const T& one) {
    int nrows = c.rows(), r = c.cols();
    Mat<T> eye(nrows, nrows, zero);
    for (int i = 0; i < nrows; ++i) eye(i, i) = one;
    Mat<T> aug = hstack(c, eye);
    std::vector<int> pivots = rref_inplace(aug);
    int got = 0;
    for (int p : pivots)
        if (p < r) ++got;
    if (got != r) throw std::invalid_argument("left_inverse: matrix does not have full column rank");
    // after reduction row i (i < r) reads  e_i | E_i  with E * C = [I; 0]
    Mat<T> res(r, nrows);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < nrows; ++j) res(i, j) = aug(i, r + j);
    return res;
}

} // namespace fano

#endif
