#pragma once

// Creation sequences: binary words building a threshold graph one vertex at a
// time (0 = isolated vertex, 1 = dominating vertex). The word determines the
// graph completely; it is connected exactly when the last letter is 1.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace twalk {

class CreationSequence {
public:
    // The first letter describes the seed vertex, for which "isolated" and
    // "dominating" coincide; it is normalized to 0 so that run-grouping into
    // block forms is unambiguous.
    explicit CreationSequence(std::string word) : word_(std::move(word)) {
        if (word_.empty()) throw std::invalid_argument("creation sequence is empty");
        for (char c : word_)
            if (c != '0' && c != '1')
                throw std::invalid_argument(std::string("invalid character '") + c +
                                            "' in creation sequence (expected 0/1)");
        word_[0] = '0';
    }

    int size() const { return static_cast<int>(word_.size()); }
    bool connected() const { return word_.back() == '1'; }
    bool bit(int pos) const { return word_.at(static_cast<std::size_t>(pos) - 1) == '1'; }  // 1-indexed
    const std::string& word() const { return word_; }

    bool operator==(const CreationSequence&) const = default;

private:
    std::string word_;
};

inline CreationSequence parse_creation_sequence(const std::string& text) {
    return CreationSequence(text);
}

// Seeded helper for randomized sweeps: uniform word of length n with the last
// letter forced to 1, so the resulting graph is connected.
template <typename Urbg>
CreationSequence random_connected_creation_sequence(int n, Urbg& rng) {
    if (n < 2) throw std::invalid_argument("need n >= 2 for a connected creation sequence");
    std::string w(static_cast<std::size_t>(n), '0');
    for (int i = 1; i + 1 < n; ++i) w[static_cast<std::size_t>(i)] = (rng() & 1u) ? '1' : '0';
    w.back() = '1';
    return CreationSequence(std::move(w));
}

}  // namespace twalk
