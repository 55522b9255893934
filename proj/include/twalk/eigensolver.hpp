#pragma once

// Brute-force numerical oracle: dense symmetric eigendecomposition by cyclic
// Jacobi rotations, and the Hermitian matrix exponential built from it.
// Everything here is deliberately independent of the closed-form threshold
// machinery it is used to validate.

#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <vector>

#include "twalk/matrix.hpp"

namespace twalk {

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    RealMatrix eigenvectors;          // orthonormal columns, column k pairs with eigenvalues[k]
};

namespace detail {

inline double offdiag_frobenius(const RealMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace detail

// Cyclic Jacobi sweeps annihilating off-diagonal entries, stopping when the
// off-diagonal Frobenius norm drops below 1e-13 (sweep cap 100). Adequate for
// the desk scale (n <= 64) this library targets.
inline EigenDecomposition eigh(const SymmetricMatrix& input) {
    constexpr double kOffTol = 1e-13;
    constexpr int kMaxSweeps = 100;

    const int n = input.order();
    RealMatrix a = input.matrix();
    RealMatrix v = RealMatrix::identity(n);

    double off = detail::offdiag_frobenius(a);
    for (int sweep = 0; sweep < kMaxSweeps && off > kOffTol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p);
                        const double arq = a(r, q);
                        a(r, p) = arp - s * (arq + tau * arp);
                        a(r, q) = arq + s * (arp - tau * arq);
                        a(p, r) = a(r, p);
                        a(q, r) = a(r, q);
                    }
                    const double vrp = v(r, p);
                    const double vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
        off = detail::offdiag_frobenius(a);
    }
    if (off > kOffTol) {
        std::ostringstream msg;
        msg << "jacobi eigensolver did not converge: off-diagonal residual " << off
            << " after " << kMaxSweeps << " sweeps (n = " << n << ")";
        throw NumericError(msg.str());
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) { return a(x, x) < a(y, y); });

    EigenDecomposition d;
    d.eigenvalues.resize(n);
    d.eigenvectors = RealMatrix(n);
    for (int k = 0; k < n; ++k) {
        d.eigenvalues[k] = a(perm[k], perm[k]);
        for (int r = 0; r < n; ++r) d.eigenvectors(r, k) = v(r, perm[k]);
    }

    // Post-conditions: V Lambda V^T reconstructs the input and V is orthonormal.
    RealMatrix recon(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += d.eigenvectors(i, k) * d.eigenvalues[k] * d.eigenvectors(j, k);
            recon(i, j) = s;
        }
    const double recon_err = max_abs_diff(recon, input.matrix());
    const double ortho_err = max_abs_diff(transpose(d.eigenvectors) * d.eigenvectors, RealMatrix::identity(n));
    if (recon_err > 1e-10 || ortho_err > 1e-10) {
        std::ostringstream msg;
        msg << "jacobi eigensolver residuals out of tolerance: reconstruction " << recon_err
            << ", orthonormality " << ortho_err;
        throw NumericError(msg.str());
    }
    return d;
}

// U_t = V diag(e^{-i lambda_k t}) V^T for a real symmetric generator.
inline ComplexMatrix expm_hermitian(const SymmetricMatrix& a, double t) {
    const EigenDecomposition d = eigh(a);
    const int n = a.order();
    std::vector<std::complex<double>> phase(n);
    for (int k = 0; k < n; ++k) phase[k] = std::polar(1.0, -d.eigenvalues[k] * t);

    ComplexMatrix u(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < n; ++k) s += d.eigenvectors(i, k) * d.eigenvectors(j, k) * phase[k];
            u(i, j) = s;
        }
    return u;
}

// Eigenvalues snapped to the nearest integer; only meaningful when every
// residual |lambda - round(lambda)| is at most `tol` (returns empty otherwise).
inline std::vector<int> snap_to_integers(const std::vector<double>& eigenvalues, double tol = 1e-8) {
    std::vector<int> snapped;
    snapped.reserve(eigenvalues.size());
    for (double x : eigenvalues) {
        const double r = std::round(x);
        if (std::abs(x - r) > tol) return {};
        snapped.push_back(static_cast<int>(r));
    }
    return snapped;
}

}  // namespace twalk
