#pragma once

// Shared test helpers, including the independent construction oracles the
// library results are checked against.

#include <string>
#include <vector>

#include "twalk/graph.hpp"

namespace twalk::testing {

// Oracle construction: build the graph vertex by vertex straight from the
// creation word (0 = isolated, 1 = dominating), independent of the block-form
// pipeline under test.
inline Graph graph_from_word(const std::string& word) {
    Graph g(static_cast<int>(word.size()));
    for (int v = 2; v <= static_cast<int>(word.size()); ++v)
        if (word[static_cast<std::size_t>(v - 1)] == '1')
            for (int u = 1; u < v; ++u) g.set_edge(u, v);
    return g;
}

// All creation words of the given length starting with 0.
inline std::vector<std::string> all_words(int length) {
    std::vector<std::string> words;
    const int middle = length - 1;
    for (int mask = 0; mask < (1 << middle); ++mask) {
        std::string w = "0";
        for (int b = 0; b < middle; ++b) w += ((mask >> b) & 1) ? '1' : '0';
        words.push_back(std::move(w));
    }
    return words;
}

inline std::vector<std::string> all_connected_words(int length) {
    std::vector<std::string> out;
    for (auto& w : all_words(length))
        if (w.back() == '1') out.push_back(std::move(w));
    return out;
}

// All perfect matchings of {1..n}, n even.
inline std::vector<std::vector<Edge>> perfect_matchings(int n) {
    std::vector<std::vector<Edge>> result;
    std::vector<Edge> current;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    auto recurse = [&](auto&& self) -> void {
        int first = 0;
        for (int v = 1; v <= n; ++v)
            if (!used[static_cast<std::size_t>(v)]) {
                first = v;
                break;
            }
        if (first == 0) {
            result.push_back(current);
            return;
        }
        used[static_cast<std::size_t>(first)] = true;
        for (int w = first + 1; w <= n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = true;
            current.push_back({first, w});
            self(self);
            current.pop_back();
            used[static_cast<std::size_t>(w)] = false;
        }
        used[static_cast<std::size_t>(first)] = false;
    };
    recurse(recurse);
    return result;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.set_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.set_edge(n, 1);
    return g;
}

}  // namespace twalk::testing
