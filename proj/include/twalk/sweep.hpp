#pragma once

// Exhaustive sweeps over canonical block forms: one row per form, with the
// arithmetic PST certificate and the largest off-diagonal propagator modulus
// at t = pi/2. Rows are evaluated concurrently but emitted in enumeration
// order.

#include <future>
#include <numbers>
#include <ostream>
#include <thread>

#include "twalk/pst.hpp"

namespace twalk {

struct SweepRow {
    std::string form;  // canonical blocks, comma-separated
    int n = 0;
    bool has_pst = false;
    double max_offdiag_modulus = 0.0;  // at t = pi/2
    std::string violations;
};

// All canonical forms with min_n <= n <= max_n: compositions of n whose first
// part is at least 2 (even length = Lemma case (i), odd length = case (ii)).
// Deterministic order: by n, then lexicographic.
inline std::vector<BlockForm> enumerate_canonical_forms(int min_n, int max_n) {
    std::vector<BlockForm> forms;
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            forms.push_back(BlockForm::from_canonical(parts));
            return;
        }
        const int lo = parts.empty() ? 2 : 1;
        for (int part = lo; part <= remaining; ++part) {
            parts.push_back(part);
            self(self, remaining - part);
            parts.pop_back();
        }
    };
    for (int n = std::max(2, min_n); n <= max_n; ++n) recurse(recurse, n);
    return forms;
}

// Largest |z(j0, pi/2)| over the blocks holding at least one vertex pair.
inline double max_offdiag_modulus_half_pi(const BlockForm& form) {
    const double t = std::numbers::pi / 2;
    double worst = 0.0;
    for (int j0 = form.odd_origin() ? 2 : 1; j0 <= form.block_count(); ++j0)
        worst = std::max(worst, std::abs(offdiag_entry(form, j0, t)));
    return worst;
}

inline SweepRow evaluate_sweep_row(const BlockForm& form) {
    const PstCertificate cert = pst_certificate(form);
    std::string violations;
    for (const auto& v : cert.violated_conditions) {
        if (!violations.empty()) violations += "; ";
        violations += v;
    }
    return {form.str(), form.order(), cert.has_pst, max_offdiag_modulus_half_pi(form), violations};
}

inline std::vector<SweepRow> run_sweep(int max_n, unsigned threads = std::thread::hardware_concurrency()) {
    if (max_n > 16) throw std::invalid_argument("desk-scale guard: sweep supports max-n up to 16");
    if (max_n < 2) throw std::invalid_argument("need max-n >= 2");

    const std::vector<BlockForm> forms = enumerate_canonical_forms(2, max_n);
    std::vector<SweepRow> rows(forms.size());
    if (threads < 2 || forms.size() < 64) {
        for (std::size_t i = 0; i < forms.size(); ++i) rows[i] = evaluate_sweep_row(forms[i]);
        return rows;
    }

    std::vector<std::future<void>> workers;
    const std::size_t chunk = (forms.size() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(forms.size(), begin + chunk);
        if (begin >= end) break;
        workers.push_back(std::async(std::launch::async, [&forms, &rows, begin, end] {
            for (std::size_t i = begin; i < end; ++i) rows[i] = evaluate_sweep_row(forms[i]);
        }));
    }
    for (auto& f : workers) f.get();
    return rows;
}

namespace detail {

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "form,n,has_pst,max_offdiag_modulus,violations\n";
    for (const auto& row : rows) {
        os << detail::csv_quote(row.form) << ',' << row.n << ',' << (row.has_pst ? "true" : "false") << ',';
        const auto flags = os.flags();
        const auto precision = os.precision();
        os.precision(15);
        os << row.max_offdiag_modulus;
        os.flags(flags);
        os.precision(precision);
        os << ',' << detail::csv_quote(row.violations) << '\n';
    }
}

}  // namespace twalk
