#pragma once

// Agent protocols locating hidden faults in K_n by free evolution. On n = 4m
// vertices, U_{pi/2} of K_n minus a matching is exactly the permutation that
// swaps each missing pair and fixes everything else, so one evolution plus a
// projective measurement at the start vertex reveals whether the start vertex
// is an endpoint of a missing edge, and if so which.

#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "twalk/eigensolver.hpp"
#include "twalk/graph.hpp"

namespace twalk {

class HiddenFault {
public:
    enum class Kind { SingleEdge, Matching };

    static HiddenFault single_edge(int n, Edge e) {
        return HiddenFault(Kind::SingleEdge, n, {normalize(n, e)});
    }

    static HiddenFault matching(int n, std::vector<Edge> edges) {
        std::set<int> seen;
        for (auto& e : edges) {
            e = normalize(n, e);
            if (!seen.insert(e.first).second || !seen.insert(e.second).second)
                throw std::invalid_argument("matching edges must be vertex-disjoint");
        }
        return HiddenFault(Kind::Matching, n, std::move(edges));
    }

    Kind kind() const { return kind_; }
    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool contains(int vertex) const {
        for (const auto& [a, b] : edges_)
            if (a == vertex || b == vertex) return true;
        return false;
    }

private:
    HiddenFault(Kind kind, int n, std::vector<Edge> edges) : kind_(kind), n_(n), edges_(std::move(edges)) {}

    static Edge normalize(int n, Edge e) {
        if (e.first < 1 || e.first > n || e.second < 1 || e.second > n)
            throw std::invalid_argument("edge endpoint out of range");
        return make_edge(e.first, e.second);
    }

    Kind kind_;
    int n_;
    std::vector<Edge> edges_;
};

struct DetectionStep {
    int start;
    double t;
    int measured;
    bool moved;  // outcome: moved / stayed
};

struct FoundEdge {
    Edge edge;
    bool inferred;  // deduced by elimination, without an evolution
};

struct DetectionTranscript {
    int n = 0;
    std::string protocol;
    std::vector<DetectionStep> steps;
    std::vector<FoundEdge> found_edges;
    int evolutions_used = 0;
    bool success = false;
};

namespace detail {

// Samples the standard-basis distribution |U_t[., start]|^2 by inverse CDF.
// Sampling is hand-rolled so seeded transcripts are reproducible across
// standard libraries; at t = pi/2 with n = 4m the distribution is 0/1 anyway.
template <typename Urbg>
int sample_measurement(const ComplexMatrix& u, int start, Urbg& rng) {
    const int n = u.order();
    const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double cumulative = 0.0;
    for (int j = 1; j <= n; ++j) {
        cumulative += std::norm(u(j - 1, start - 1));
        if (x < cumulative) return j;
    }
    return n;
}

template <typename Urbg>
int evolve_and_measure_impl(int n, const std::vector<Edge>& missing, int start, double t, Urbg& rng) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (start < 1 || start > n) throw std::invalid_argument("start vertex out of range");
    Graph g = complete_graph(n);
    std::set<int> seen;
    for (const auto& [a, b] : missing) {
        const Edge e = make_edge(a, b);
        if (e.first < 1 || e.second > n) throw std::invalid_argument("edge endpoint out of range");
        if (!seen.insert(e.first).second || !seen.insert(e.second).second)
            throw std::invalid_argument("missing edges must be vertex-disjoint");
        g.set_edge(e.first, e.second, false);
    }
    const ComplexMatrix u = expm_hermitian(laplacian(g), t);
    return sample_measurement(u, start, rng);
}

inline void require_protocol_order(int n) {
    if (n < 4 || n % 4 != 0) throw std::invalid_argument("protocol requires n = 4m");
}

}  // namespace detail

// One evolution of K_n minus the given vertex-disjoint edges, followed by a
// projective measurement at `start`'s walker position.
inline int evolve_and_measure(int n, const std::vector<Edge>& missing, int start, double t,
                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return detail::evolve_and_measure_impl(n, missing, start, t, rng);
}

// Corollary-1 protocol: probe vertices in ascending order, each probe one
// pi/2 evolution measured at the start vertex. A move reveals the edge; once
// only two vertices are unprobed they must be the edge, so the worst case is
// n - 2 evolutions.
inline DetectionTranscript detect_missing_edge(int n, Edge hidden, std::uint64_t seed = 0) {
    detail::require_protocol_order(n);
    const HiddenFault fault = HiddenFault::single_edge(n, hidden);
    const std::vector<Edge>& missing = fault.edges();
    const double t = std::numbers::pi / 2;
    std::mt19937_64 rng(seed);

    DetectionTranscript out;
    out.n = n;
    out.protocol = "edge";

    std::set<int> unresolved;
    for (int v = 1; v <= n; ++v) unresolved.insert(v);

    while (out.found_edges.empty()) {
        if (unresolved.size() == 2) {
            const int a = *unresolved.begin();
            const int b = *std::next(unresolved.begin());
            out.found_edges.push_back({make_edge(a, b), true});
            break;
        }
        const int v = *unresolved.begin();
        const int measured = detail::evolve_and_measure_impl(n, missing, v, t, rng);
        out.steps.push_back({v, t, measured, measured != v});
        if (measured != v) {
            out.found_edges.push_back({make_edge(v, measured), false});
        } else {
            unresolved.erase(v);
        }
    }

    out.evolutions_used = static_cast<int>(out.steps.size());
    out.success = out.found_edges.size() == 1 && out.found_edges.front().edge == missing.front();
    return out;
}

// Corollary-2 protocol. Probing an unresolved vertex either reveals its
// missing partner (two vertices resolved) or shows it unmatched. A single
// unresolved vertex cannot be matched, and under a known perfect matching the
// final two must be partners, so perfect matchings cost exactly n/2 - 1
// evolutions.
inline DetectionTranscript detect_missing_matching(int n, const std::vector<Edge>& hidden,
                                                   std::optional<int> known_size = std::nullopt,
                                                   std::uint64_t seed = 0) {
    detail::require_protocol_order(n);
    const HiddenFault fault = HiddenFault::matching(n, hidden);
    if (known_size && *known_size != static_cast<int>(fault.edges().size()))
        throw std::invalid_argument("known_size does not match the hidden matching");
    const double t = std::numbers::pi / 2;
    std::mt19937_64 rng(seed);

    DetectionTranscript out;
    out.n = n;
    out.protocol = "matching";

    std::set<int> unresolved;
    for (int v = 1; v <= n; ++v) unresolved.insert(v);

    while (!unresolved.empty()) {
        if (known_size && static_cast<int>(out.found_edges.size()) == *known_size) break;
        if (unresolved.size() == 1) break;  // no partner left: unmatched
        if (known_size && *known_size == n / 2 && unresolved.size() == 2) {
            const int a = *unresolved.begin();
            const int b = *std::next(unresolved.begin());
            out.found_edges.push_back({make_edge(a, b), true});
            break;
        }
        const int v = *unresolved.begin();
        const int measured = detail::evolve_and_measure_impl(n, fault.edges(), v, t, rng);
        out.steps.push_back({v, t, measured, measured != v});
        unresolved.erase(v);
        if (measured != v) {
            out.found_edges.push_back({make_edge(v, measured), false});
            unresolved.erase(measured);
        }
    }

    out.evolutions_used = static_cast<int>(out.steps.size());
    std::set<Edge> got, want(fault.edges().begin(), fault.edges().end());
    for (const auto& f : out.found_edges) got.insert(f.edge);
    out.success = got == want;
    return out;
}

struct StepBudgets {
    int quantum_edge;        // O(n-1) pi/2 evolutions for a single missing edge
    int quantum_matching;    // exactly n/2 - 1 evolutions for a perfect matching
    int classical_matching;  // deterministic search: sum of odd 3..n-1 = n^2/4 - 1
};

inline StepBudgets step_budgets(int n) {
    detail::require_protocol_order(n);
    return {n - 1, n / 2 - 1, n * n / 4 - 1};
}

}  // namespace twalk
