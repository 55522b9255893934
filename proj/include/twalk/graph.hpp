#pragma once

// Simple graphs with 1-based vertices, their Laplacians, and the threshold
// specifics: block-form construction, the conjugate-partition spectrum, and
// linear-strip recognition.

#include <optional>
#include <utility>
#include <vector>

#include "twalk/block_form.hpp"
#include "twalk/matrix.hpp"

namespace twalk {

using Edge = std::pair<int, int>;  // normalized i < j

inline Edge make_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("self-loop is not an edge");
    return i < j ? Edge{i, j} : Edge{j, i};
}

class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    }

    int order() const { return n_; }

    bool adjacent(int i, int j) const {
        check(i);
        check(j);
        return adj_[idx(i, j)] != 0;
    }

    void set_edge(int i, int j, bool present = true) {
        check(i);
        check(j);
        if (i == j) throw std::invalid_argument("self-loop is not an edge");
        adj_[idx(i, j)] = present ? 1 : 0;
        adj_[idx(j, i)] = present ? 1 : 0;
    }

    int degree(int i) const {
        check(i);
        int d = 0;
        for (int j = 1; j <= n_; ++j) d += adj_[idx(i, j)];
        return d;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (adj_[idx(i, j)]) out.push_back({i, j});
        return out;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
    }
    void check(int i) const {
        if (i < 1 || i > n_) throw std::out_of_range("vertex index out of range");
    }

    int n_;
    std::vector<std::uint8_t> adj_;
};

using DegreeSequence = std::vector<int>;

inline DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d;
    d.reserve(static_cast<std::size_t>(g.order()));
    for (int i = 1; i <= g.order(); ++i) d.push_back(g.degree(i));
    std::sort(d.begin(), d.end());
    return d;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.set_edge(i, j);
    return g;
}

// Vertices are laid out block by block in index order; every clique block is
// joined to everything built before it, empty blocks contribute no edges.
inline Graph block_form_to_graph(const BlockForm& form) {
    Graph g(form.order());
    const auto& blocks = form.internal_blocks();
    int start = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const int size = blocks[b];
        if (b % 2 == 1) {
            for (int u = start + 1; u <= start + size; ++u) {
                for (int v = 1; v < u; ++v) g.set_edge(u, v);
            }
        }
        start += size;
    }
    return g;
}

// Diagonal = degrees, off-diagonal -1 on edges; rows sum to zero.
inline SymmetricMatrix laplacian(const Graph& g) {
    const int n = g.order();
    RealMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        m(i - 1, i - 1) = g.degree(i);
        for (int j = i + 1; j <= n; ++j)
            if (g.adjacent(i, j)) {
                m(i - 1, j - 1) = -1.0;
                m(j - 1, i - 1) = -1.0;
            }
    }
    return SymmetricMatrix(std::move(m));
}

// lambda_j = #{i : d(i) >= j}, j = 1..n: for a threshold graph the degree
// sequence and the nonzero Laplacian eigenvalues are conjugate partitions of
// 2|E|. Nonincreasing, with lambda_n = 0.
inline std::vector<int> conjugate_spectrum(const DegreeSequence& degrees) {
    const int n = static_cast<int>(degrees.size());
    std::vector<int> spectrum;
    spectrum.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        int count = 0;
        for (int d : degrees)
            if (d >= j) ++count;
        spectrum.push_back(count);
    }
    return spectrum;
}

// Strips a dominating or isolated vertex until the seed remains; the letters
// read back give the creation sequence. Returns nullopt when some step has
// neither vertex type (the graph is not threshold). Only degrees are tracked:
// removing a dominating vertex lowers every remaining degree by one, removing
// an isolated vertex changes nothing.
inline std::optional<CreationSequence> recognize_threshold(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> active(static_cast<std::size_t>(n), true);
    for (int i = 1; i <= n; ++i) deg[static_cast<std::size_t>(i - 1)] = g.degree(i);

    std::string word;
    for (int remaining = n; remaining > 1; --remaining) {
        int pick = -1;
        bool dominating = false;
        for (int i = 0; i < n; ++i) {
            if (!active[static_cast<std::size_t>(i)]) continue;
            if (deg[static_cast<std::size_t>(i)] == remaining - 1) {
                pick = i;
                dominating = true;
                break;
            }
            if (deg[static_cast<std::size_t>(i)] == 0) pick = i;
        }
        if (pick < 0) return std::nullopt;
        active[static_cast<std::size_t>(pick)] = false;
        if (dominating)
            for (int i = 0; i < n; ++i)
                if (active[static_cast<std::size_t>(i)]) --deg[static_cast<std::size_t>(i)];
        word.push_back(dominating ? '1' : '0');
    }
    word.push_back('0');  // seed vertex
    std::reverse(word.begin(), word.end());
    return CreationSequence(std::move(word));
}

}  // namespace twalk
