#pragma once

// Faulty-node analysis: the cosine max-min lemma, the closed-form bounds on
// |U_t[1,2]| after deleting one vertex from a PST threshold graph, and the
// exact modulus for last-block deletions. The bounds stay strictly below 1,
// which is why no node-detection protocol is built on top of them.
//
// All block sizes and partial sums in the bound formulas refer to the
// deleted graph; the `a` in the cosine term is the corresponding eigenvalue
// difference of the deleted graph's spectral system, which keeps it odd and
// Lemma-compatible. Each bound is additionally verifiable against the
// brute-force propagator on a t-grid (see oracle_grid_max_offdiag12).

#include <cmath>
#include <numbers>
#include <string>

#include "twalk/eigensolver.hpp"
#include "twalk/graph.hpp"
#include "twalk/pst.hpp"
#include "twalk/spectral_system.hpp"

namespace twalk {

enum class CosVariant { I, II };

struct CosMaxMin {
    double t_star;
    double value;     // grid maximum of the min of the three cosines
    double analytic;  // cos(pi/a), the exact maximum
};

// max over t in [0, 2pi] of min{-cos 2t, -+cos at, +-cos (a-2)t} = cos(pi/a)
// for odd a >= 3 (sign pattern per variant).
inline CosMaxMin lemma_cos_maxmin(int a, CosVariant variant, double grid_step = 1e-5) {
    if (a < 3 || a % 2 == 0) throw std::invalid_argument("need odd a >= 3");
    if (grid_step <= 0.0) throw std::invalid_argument("grid step must be positive");

    const double sign = (variant == CosVariant::I) ? 1.0 : -1.0;
    double best_t = 0.0;
    double best = -2.0;
    const long long steps = static_cast<long long>(2 * std::numbers::pi / grid_step);
    for (long long k = 0; k <= steps; ++k) {
        const double t = k * grid_step;
        const double v = std::min({-std::cos(2 * t), -sign * std::cos(a * t), sign * std::cos((a - 2) * t)});
        if (v > best) {
            best = v;
            best_t = t;
        }
    }
    return {best_t, best, std::cos(std::numbers::pi / a)};
}

enum class DeletionCase { I, II, III };

inline std::string to_string(DeletionCase c) {
    switch (c) {
        case DeletionCase::I: return "i";
        case DeletionCase::II: return "ii";
        case DeletionCase::III: return "iii";
    }
    return "?";
}

struct NodeDeletionBound {
    BlockForm original;
    int deleted_block;       // canonical block index l the vertex was removed from
    BlockForm deleted_form;  // normalized
    DeletionCase kind;
    double bound;  // upper bound on |U_t[1,2]| of the deleted graph, all t
    double g;      // (alpha + beta + gamma)^2, cases ii/iii only
    int a;         // odd cosine argument, cases ii/iii only
};

namespace detail {

inline void require_pst_form(const BlockForm& form) {
    if (!pst_certificate(form).has_pst)
        throw std::invalid_argument("form does not satisfy the perfect-state-transfer conditions");
}

}  // namespace detail

// Theorem-2 bounds for deleting one vertex from canonical block l of an
// even-length PST form.
inline NodeDeletionBound node_deletion_bound(const BlockForm& form, int l) {
    detail::require_pst_form(form);
    if (form.odd_origin())
        throw std::invalid_argument("node deletion bounds are stated for even-length forms");
    const int two_k = form.block_count();
    if (l < 1 || l > two_k) throw std::invalid_argument("block index out of range");

    const BlockForm deleted = delete_vertex_block_form(form, l);

    if (l == 1) {
        // Gamma(1, m_2, ...) = Gamma(m_2 + 1, m_3, ...): every pair now sits
        // at block index >= 2 of the deleted graph, so 2/(m_2 + 1) bounds all
        // off-diagonal entries.
        const int m2 = form.internal_blocks()[1];
        return {form, l, deleted, DeletionCase::I, 2.0 / (m2 + 1), 0.0, 0};
    }

    // In the (1,2) entry of the deleted propagator, three aligned terms are
    // bounded through the cosine lemma and the remainder telescopes:
    //   alpha = 1/sigma_1 = 1/2, beta = m_2/(sigma_1 sigma_2),
    //   gamma = 1/sigma_2k        (l even)
    //   gamma = m_{l+1}/(sigma_l sigma_{l+1})   (l >= 3 odd),
    // with every quantity taken on the deleted graph.
    const auto& m = deleted.internal_blocks();
    const double alpha = 0.5;
    const double beta = static_cast<double>(m[1]) / (static_cast<double>(deleted.sigma(1)) * deleted.sigma(2));

    DeletionCase kind;
    double gamma;
    int a;
    if (l % 2 == 0) {
        kind = DeletionCase::II;
        gamma = 1.0 / deleted.sigma(two_k);
        a = detail::block_eigenvalue(deleted, 2);
    } else {
        kind = DeletionCase::III;
        gamma = static_cast<double>(m[static_cast<std::size_t>(l)]) /
                (static_cast<double>(deleted.sigma(l)) * deleted.sigma(l + 1));
        a = 0;
        for (int i = 1; i <= l; i += 2) a += m[static_cast<std::size_t>(i - 1)];
    }

    const double g = (alpha + beta + gamma) * (alpha + beta + gamma);
    const double head = std::sqrt(g - (1.0 - std::cos(std::numbers::pi / a)) * beta * gamma);
    const double tail = 0.5 - beta - gamma;
    return {form, l, deleted, kind, head + tail, g, a};
}

// Deleting one vertex from the last block of a PST form leaves
// |U_{pi/2}[1,2]| = sqrt(1 - 2 (sigma - 1)/sigma^2) with sigma the deleted
// graph's vertex count: large, but still strictly below 1. The closed form is
// cross-checked against the block spectral system before returning.
inline double last_block_deletion_modulus(const BlockForm& form) {
    detail::require_pst_form(form);
    const BlockForm deleted = delete_vertex_block_form(form, form.canonical_block_count());

    const double sigma = deleted.order();
    const double value = std::sqrt(1.0 - 2.0 * (sigma - 1.0) / (sigma * sigma));

    const int j0 = deleted.odd_origin() ? 2 : 1;  // block pair holding vertices (1,2)
    const double direct = std::abs(offdiag_entry(deleted, j0, std::numbers::pi / 2));
    if (std::abs(direct - value) > 1e-10)
        throw NumericError("closed-form deleted-vertex modulus disagrees with the spectral system: " +
                           std::to_string(value) + " vs " + std::to_string(direct));
    return value;
}

// Brute-force verifier for the bounds: max over the t-grid of |U_t[1,2]|
// computed from the eigendecomposition of the given Laplacian.
inline double oracle_grid_max_offdiag12(const SymmetricMatrix& lap, double grid_step = 1e-3) {
    if (lap.order() < 2) throw std::invalid_argument("need at least two vertices");
    if (grid_step <= 0.0) throw std::invalid_argument("grid step must be positive");
    const EigenDecomposition d = eigh(lap);
    const int n = lap.order();
    std::vector<double> weight(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) weight[static_cast<std::size_t>(k)] = d.eigenvectors(0, k) * d.eigenvectors(1, k);

    double worst = 0.0;
    const long long steps = static_cast<long long>(2 * std::numbers::pi / grid_step);
    for (long long s = 0; s <= steps; ++s) {
        const double t = s * grid_step;
        std::complex<double> z = 0.0;
        for (int k = 0; k < n; ++k) z += weight[static_cast<std::size_t>(k)] * std::polar(1.0, -d.eigenvalues[static_cast<std::size_t>(k)] * t);
        worst = std::max(worst, std::abs(z));
    }
    return worst;
}

}  // namespace twalk
