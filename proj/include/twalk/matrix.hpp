#pragma once

// Small dense square matrices (row-major) for desk-scale spectral work.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace twalk {

// Thrown when an iterative routine fails to converge or a numeric
// post-condition (residual, unitarity) is violated.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n, T fill = T{}) : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {
        if (n < 0) throw std::invalid_argument("matrix order must be nonnegative");
    }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    int order() const { return n_; }

    T& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const T& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    bool operator==(const SquareMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<T> a_;
};

using RealMatrix = SquareMatrix<double>;
using ComplexMatrix = SquareMatrix<std::complex<double>>;

template <typename T>
SquareMatrix<T> operator*(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("matrix order mismatch");
    const int n = a.order();
    SquareMatrix<T> c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const T aik = a(i, k);
            if (aik == T{}) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    const int n = a.order();
    ComplexMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = std::conj(a(j, i));
    return b;
}

inline RealMatrix transpose(const RealMatrix& a) {
    const int n = a.order();
    RealMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = a(j, i);
    return b;
}

// max_ij |a_ij - b_ij|
template <typename T>
double max_abs_diff(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("matrix order mismatch");
    double worst = 0.0;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

// ||U U* - I||_max
inline double unitarity_error(const ComplexMatrix& u) {
    return max_abs_diff(u * adjoint(u), ComplexMatrix::identity(u.order()));
}

inline ComplexMatrix to_complex(const RealMatrix& a) {
    ComplexMatrix b(a.order());
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j) b(i, j) = a(i, j);
    return b;
}

// Real symmetric matrix; symmetry is enforced exactly at construction.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(RealMatrix m) : m_(std::move(m)) {
        for (int i = 0; i < m_.order(); ++i)
            for (int j = i + 1; j < m_.order(); ++j)
                if (m_(i, j) != m_(j, i)) throw std::invalid_argument("matrix is not symmetric");
    }

    int order() const { return m_.order(); }
    const RealMatrix& matrix() const { return m_; }
    double operator()(int r, int c) const { return m_(r, c); }

private:
    RealMatrix m_;
};

}  // namespace twalk
