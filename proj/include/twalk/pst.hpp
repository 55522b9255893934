#pragma once

// Perfect state transfer on threshold graphs. The arithmetic certificate is
// the decider: a connected threshold graph admits PST exactly between
// vertices 1 and 2, at t = pi/2 and 3pi/2, when the canonical blocks satisfy
// m_1 = 2, m_2 = 2 (mod 4) and m_j = 0 (mod 4) for j >= 3. The grid scan is
// an independent numeric verifier, not a decider: it evaluates the
// closed-form propagator entries and reports near-unit moduli.

#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "twalk/spectral_system.hpp"

namespace twalk {

struct PstCertificate {
    bool has_pst = false;
    std::pair<int, int> pair{0, 0};     // (1,2) when has_pst
    std::vector<double> times;          // {pi/2, 3pi/2} when has_pst
    std::vector<std::string> violated_conditions;
};

inline PstCertificate pst_certificate(const BlockForm& form) {
    const std::vector<int> blocks = form.canonical_blocks();
    PstCertificate cert;

    if (blocks[0] != 2) cert.violated_conditions.push_back("m1≠2");
    if (blocks.size() >= 2 && blocks[1] % 4 != 2) cert.violated_conditions.push_back("m2 mod 4 ≠ 2");
    for (std::size_t j = 3; j <= blocks.size(); ++j)
        if (blocks[j - 1] % 4 != 0)
            cert.violated_conditions.push_back("m_j mod 4 ≠ 0 at j=" + std::to_string(j));

    cert.has_pst = cert.violated_conditions.empty();
    if (cert.has_pst) {
        cert.pair = {1, 2};
        cert.times = {std::numbers::pi / 2, 3 * std::numbers::pi / 2};
    }
    return cert;
}

// 2/sigma_j0 over canonical blocks; below 1 for every j0 >= 2, so only the
// first-block pair can ever reach unit modulus.
inline double offdiag_upper_bound(const BlockForm& form, int j0) {
    const std::vector<int> blocks = form.canonical_blocks();
    if (j0 < 1 || j0 > static_cast<int>(blocks.size())) throw std::invalid_argument("block index out of range");
    int sigma = 0;
    for (int p = 0; p < j0; ++p) sigma += blocks[static_cast<std::size_t>(p)];
    return 2.0 / sigma;
}

struct UnitModulusHit {
    double t;
    int i, j;  // vertex pair, i < j
    double modulus;
};

// Evaluates every off-diagonal propagator entry on the grid t = 0, step, ...,
// 2pi and returns those with modulus >= 1 - tol. Entries sharing the larger
// block index are equal, so one series per block covers them all; a hit is
// expanded to the vertex pairs it stands for.
inline std::vector<UnitModulusHit> scan_unit_modulus(const BlockForm& form, double grid_step = 1e-3,
                                                     double tol = 1e-6) {
    if (grid_step <= 0.0) throw std::invalid_argument("grid step must be positive");

    const int two_k = form.block_count();
    const int first = form.odd_origin() ? 2 : 1;  // internal block 1 holds a pair only when m_1 >= 2

    struct BlockSeries {
        int j0;
        OffdiagSeries series;
    };
    std::vector<BlockSeries> all;
    for (int j0 = first; j0 <= two_k; ++j0) all.push_back({j0, offdiag_series(form, j0)});

    std::vector<UnitModulusHit> hits;
    const double t_max = 2 * std::numbers::pi;
    const long long steps = static_cast<long long>(t_max / grid_step);
    std::vector<std::complex<double>> phases(static_cast<std::size_t>(form.order()) + 1);
    for (long long k = 0; k <= steps; ++k) {
        const double t = k * grid_step;
        const std::complex<double> w = std::polar(1.0, -t);
        phases[0] = 1.0;
        for (int e = 1; e <= form.order(); ++e) phases[static_cast<std::size_t>(e)] = phases[static_cast<std::size_t>(e - 1)] * w;
        for (const auto& bs : all) {
            const double modulus = std::abs(bs.series.eval_with_phases(phases));
            if (modulus < 1.0 - tol) continue;
            // All pairs whose larger block index is j0: (r, s) with s in
            // block j0 and r anywhere before it.
            const int lo = form.sigma(bs.j0 - 1) + 1;
            const int hi = form.sigma(bs.j0);
            for (int s = lo; s <= hi; ++s)
                for (int r = 1; r < s; ++r) hits.push_back({t, r, s, modulus});
        }
    }
    return hits;
}

}  // namespace twalk
