#pragma once

// Exact eigensystem of a threshold-graph Laplacian in block-form coordinates.
//
// For the internal even form (m_1,...,m_2k) with partial sums sigma_l and
// n = sigma_2k, the Laplacian decomposes into one integer-eigenvalue
// component per block plus the null component J/n:
//
//   block 1 (only when m_1 >= 2):
//     eigenvalue  lambda_0(1) = m_2 + m_4 + ... + m_2k
//     projector   I - J/m_1 on the first block, multiplicity m_1 - 1
//   block j = 2..2k:
//     eigenvalue  lambda_0(j) = m_{j+1} + m_{j+3} + ... + m_2k   (j odd)
//                 lambda_1(j) = sigma_j + m_{j+2} + ...          (j even)
//     projector   [ m_j/(sigma_{j-1} sigma_j) J  |  -J/sigma_j   | 0 ]
//                 [       -J/sigma_j             | I - J/sigma_j | 0 ]
//                 [            0                 |       0       | 0 ]
//     multiplicity m_j
//   null: J/n with eigenvalue 0.
//
// The propagator is U_t = sum_c e^{-i t lambda_c} P_c. Every off-diagonal
// entry of U_t whose larger block index is j0 equals
//
//   z(j0, t) = e^{-i t lambda(j0)} (-1/sigma_j0)
//            + sum_{j > j0} e^{-i t lambda(j)} m_j/(sigma_{j-1} sigma_j)
//            + 1/n,
//
// and the coefficients telescope: sum_{j > j0} m_j/(sigma_{j-1} sigma_j)
// + 1/sigma_2k = 1/sigma_j0 exactly, so |z| <= 2/sigma_j0.

#include <complex>
#include <numbers>
#include <vector>

#include "twalk/block_form.hpp"
#include "twalk/matrix.hpp"
#include "twalk/rational.hpp"

namespace twalk {

struct SpectralComponent {
    int block_index;  // internal block index 1..2k, 0 for the null component
    int eigenvalue;
    int multiplicity;
    RealMatrix projector;
};

class ThresholdSpectralSystem {
public:
    ThresholdSpectralSystem(BlockForm form, std::vector<SpectralComponent> components)
        : form_(std::move(form)), components_(std::move(components)) {}

    const BlockForm& form() const { return form_; }
    const std::vector<SpectralComponent>& components() const { return components_; }
    int order() const { return form_.order(); }

    // Eigenvalues with multiplicity, nonincreasing.
    std::vector<int> spectrum() const {
        std::vector<int> s;
        for (const auto& c : components_) s.insert(s.end(), static_cast<std::size_t>(c.multiplicity), c.eigenvalue);
        std::sort(s.rbegin(), s.rend());
        return s;
    }

private:
    BlockForm form_;
    std::vector<SpectralComponent> components_;
};

namespace detail {

// lambda_0(j) for odd j, lambda_1(j) for even j (internal indexing).
inline int block_eigenvalue(const BlockForm& form, int j) {
    const auto& m = form.internal_blocks();
    const int two_k = form.block_count();
    int value = (j % 2 == 0) ? form.sigma(j) : 0;
    for (int i = j + 1; i <= two_k; ++i)
        if (i % 2 == 0) value += m[static_cast<std::size_t>(i - 1)];
    return value;
}

}  // namespace detail

inline ThresholdSpectralSystem build_spectral_system(const BlockForm& form) {
    const auto& m = form.internal_blocks();
    const int two_k = form.block_count();
    const int n = form.order();
    std::vector<SpectralComponent> components;

    if (m[0] >= 2) {
        RealMatrix p(n);
        for (int r = 0; r < m[0]; ++r)
            for (int c = 0; c < m[0]; ++c) p(r, c) = (r == c ? 1.0 : 0.0) - 1.0 / m[0];
        components.push_back({1, detail::block_eigenvalue(form, 1), m[0] - 1, std::move(p)});
    }

    for (int j = 2; j <= two_k; ++j) {
        const int mj = m[static_cast<std::size_t>(j - 1)];
        const int sig_prev = form.sigma(j - 1);
        const int sig = form.sigma(j);
        RealMatrix p(n);
        for (int r = 0; r < sig_prev; ++r)
            for (int c = 0; c < sig_prev; ++c) p(r, c) = static_cast<double>(mj) / (static_cast<double>(sig_prev) * sig);
        for (int r = 0; r < sig_prev; ++r)
            for (int c = sig_prev; c < sig; ++c) {
                p(r, c) = -1.0 / sig;
                p(c, r) = -1.0 / sig;
            }
        for (int r = sig_prev; r < sig; ++r)
            for (int c = sig_prev; c < sig; ++c) p(r, c) = (r == c ? 1.0 : 0.0) - 1.0 / sig;
        components.push_back({j, detail::block_eigenvalue(form, j), mj, std::move(p)});
    }

    RealMatrix null_p(n, 1.0 / n);
    components.push_back({0, 0, 1, std::move(null_p)});
    return ThresholdSpectralSystem(form, std::move(components));
}

struct Propagator {
    double t = 0.0;
    ComplexMatrix matrix;

    // U_t must be unitary; construction rejects anything that is not.
    Propagator(double time, ComplexMatrix u) : t(time), matrix(std::move(u)) {
        const double err = unitarity_error(matrix);
        if (err > 1e-10) {
            throw NumericError("propagator is not unitary: ||U U* - I||_max = " + std::to_string(err));
        }
    }
};

inline Propagator propagator(const ThresholdSpectralSystem& sys, double t) {
    const int n = sys.order();
    ComplexMatrix u(n);
    for (const auto& comp : sys.components()) {
        const std::complex<double> phase = std::polar(1.0, -t * comp.eigenvalue);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                const double p = comp.projector(r, c);
                if (p != 0.0) u(r, c) += phase * p;
            }
    }
    return Propagator(t, std::move(u));
}

// p_G(i, j, t) = |<j| U_t |i>|^2, vertices 1-based.
inline double fidelity(const Propagator& u, int i, int j) {
    const int n = u.matrix.order();
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("vertex index out of range");
    return std::norm(u.matrix(j - 1, i - 1));
}

// z(j0, t) as a finite Fourier series: pairs (eigenvalue, real coefficient).
struct OffdiagSeries {
    std::vector<std::pair<int, double>> terms;

    std::complex<double> eval(double t) const {
        std::complex<double> z = 0.0;
        for (const auto& [eigenvalue, coeff] : terms) z += coeff * std::polar(1.0, -t * eigenvalue);
        return z;
    }

    // Grid-scan fast path: phases[k] must hold e^{-i k t}; integer
    // eigenvalues make every factor a power of e^{-i t}.
    std::complex<double> eval_with_phases(const std::vector<std::complex<double>>& phases) const {
        std::complex<double> z = 0.0;
        for (const auto& [eigenvalue, coeff] : terms) z += coeff * phases[static_cast<std::size_t>(eigenvalue)];
        return z;
    }
};

// Series for the off-diagonal entries whose larger block index is j0
// (internal indexing). Needs sigma_j0 >= 2 so that such a pair exists.
inline OffdiagSeries offdiag_series(const BlockForm& form, int j0) {
    const int two_k = form.block_count();
    if (j0 < 1 || j0 > two_k) throw std::invalid_argument("block index out of range");
    if (form.sigma(j0) < 2) throw std::invalid_argument("no vertex pair lies in the first block alone");

    const auto& m = form.internal_blocks();
    OffdiagSeries series;
    series.terms.push_back({detail::block_eigenvalue(form, j0), -1.0 / form.sigma(j0)});
    for (int j = j0 + 1; j <= two_k; ++j) {
        const double coeff = static_cast<double>(m[static_cast<std::size_t>(j - 1)]) /
                             (static_cast<double>(form.sigma(j - 1)) * form.sigma(j));
        series.terms.push_back({detail::block_eigenvalue(form, j), coeff});
    }
    series.terms.push_back({0, 1.0 / form.order()});
    return series;
}

inline std::complex<double> offdiag_entry(const BlockForm& form, int j0, double t) {
    return offdiag_series(form, j0).eval(t);
}

// Exact telescoping tail: sum_{j > j0} m_j/(sigma_{j-1} sigma_j) + 1/sigma_2k.
// Equals 1/sigma_j0 for every form and every j0.
inline Rational offdiag_tail_sum(const BlockForm& form, int j0) {
    const int two_k = form.block_count();
    if (j0 < 1 || j0 > two_k) throw std::invalid_argument("block index out of range");
    const auto& m = form.internal_blocks();
    Rational sum(1, form.sigma(two_k));
    for (int j = j0 + 1; j <= two_k; ++j)
        sum = sum + Rational(m[static_cast<std::size_t>(j - 1)],
                             static_cast<long long>(form.sigma(j - 1)) * form.sigma(j));
    return sum;
}

}  // namespace twalk
