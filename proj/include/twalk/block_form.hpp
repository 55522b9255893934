#pragma once

// Block forms Gamma(m_1,...,m_r): every connected threshold graph on >= 2
// vertices is an alternating union/join of empty blocks O and clique blocks K.
// Two canonical shapes exist: an even-length form starting with O_{m_1},
// m_1 >= 2, and an odd-length form starting with a clique K_{m_1}, m_1 >= 2.
//
// Internally a single even-length encoding is used for both, via
// K_m = O_1 v K_{m-1}: odd-origin forms are stored as (1, m_1 - 1, m_2, ...).
// One spectral engine then covers both shapes; the user-facing canonical
// blocks are recovered on display.

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "twalk/creation_sequence.hpp"

namespace twalk {

class BlockForm {
public:
    // `blocks` is the internal even-length encoding: alternating O,K,...,K
    // sizes, all >= 1, first block 1 (odd origin) or >= 2 (even origin).
    static BlockForm from_internal(std::vector<int> blocks) { return BlockForm(std::move(blocks)); }

    // `blocks` is a user-facing canonical form. Odd length means the Lemma
    // case (ii) clique-first shape and is re-encoded with the O_1 prefix.
    // An even-length list with first entry 1 is accepted as an already
    // internal encoding, so K_2 can be written as "1,1".
    static BlockForm from_canonical(const std::vector<int>& blocks) {
        if (blocks.empty()) throw std::invalid_argument("block form is empty");
        if (blocks.size() % 2 == 0) return BlockForm(blocks);
        if (blocks.front() < 2)
            throw std::invalid_argument("odd-length block form needs a leading clique of size >= 2");
        std::vector<int> internal;
        internal.reserve(blocks.size() + 1);
        internal.push_back(1);
        internal.push_back(blocks.front() - 1);
        internal.insert(internal.end(), blocks.begin() + 1, blocks.end());
        return BlockForm(std::move(internal));
    }

    // Comma-separated canonical form, e.g. "2,6,4,4" or "7" (= K_7).
    static BlockForm parse(const std::string& text) {
        std::vector<int> blocks;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(item, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid block size '" + item + "'");
            }
            if (used != item.size()) throw std::invalid_argument("invalid block size '" + item + "'");
            blocks.push_back(value);
        }
        return from_canonical(blocks);
    }

    const std::vector<int>& internal_blocks() const { return blocks_; }

    // Lemma case (ii) shapes are stored with the O_1 prefix; true for those.
    bool odd_origin() const { return blocks_.front() == 1; }

    std::vector<int> canonical_blocks() const {
        if (!odd_origin()) return blocks_;
        std::vector<int> c;
        c.reserve(blocks_.size() - 1);
        c.push_back(1 + blocks_[1]);
        c.insert(c.end(), blocks_.begin() + 2, blocks_.end());
        return c;
    }

    int order() const { return std::accumulate(blocks_.begin(), blocks_.end(), 0); }
    int block_count() const { return static_cast<int>(blocks_.size()); }  // internal 2k
    int canonical_block_count() const { return block_count() - (odd_origin() ? 1 : 0); }

    // sigma_l = m_1 + ... + m_l over internal blocks, 1-based.
    int sigma(int l) const {
        int s = 0;
        for (int p = 0; p < l; ++p) s += blocks_[static_cast<std::size_t>(p)];
        return s;
    }

    // Canonical form as "m1,m2,...".
    std::string str() const {
        std::string out;
        for (int m : canonical_blocks()) {
            if (!out.empty()) out += ',';
            out += std::to_string(m);
        }
        return out;
    }

    bool operator==(const BlockForm&) const = default;

private:
    explicit BlockForm(std::vector<int> blocks) : blocks_(std::move(blocks)) {
        if (blocks_.size() < 2 || blocks_.size() % 2 != 0)
            throw std::invalid_argument("internal block form must have even length >= 2");
        for (int m : blocks_)
            if (m < 1) throw std::invalid_argument("block sizes must be positive");
    }

    std::vector<int> blocks_;
};

// Maximal runs of 0s and 1s become the alternating O/K blocks. A run-length
// word 0^a1 1^b1 ... 0^ar 1^br yields Gamma(a1,b1,...,ar,br); when a1 = 1 that
// is already the internal odd-origin encoding.
inline BlockForm creation_to_block_form(const CreationSequence& seq) {
    if (!seq.connected()) throw std::invalid_argument("disconnected: creation sequence must end in 1");
    std::vector<int> runs;
    const std::string& w = seq.word();
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        runs.push_back(static_cast<int>(j - i));
        i = j;
    }
    return BlockForm::from_internal(std::move(runs));
}

// Removes one vertex from canonical block l (1-based) and renormalizes:
// an emptied interior block merges its equal-type neighbours, an emptied
// leading clique turns the next empty block into the new leading one.
inline BlockForm delete_vertex_block_form(const BlockForm& form, int l) {
    const int canonical_count = form.canonical_block_count();
    if (l < 1 || l > canonical_count) throw std::invalid_argument("block index out of range");

    std::vector<int> v = form.internal_blocks();
    // Canonical block l sits at internal index l-1 (even origin) or l
    // (odd origin: the O_1 seed is glued to the first clique, so deleting
    // from canonical block 1 removes a clique vertex). The internal leading
    // block never empties: even-origin forms have m_1 >= 2 and odd-origin
    // deletions start at internal index 1.
    const std::size_t i = static_cast<std::size_t>(form.odd_origin() ? l : l - 1);
    v[i] -= 1;

    if (v[i] == 0) {
        if (i + 1 == v.size()) {
            // Final clique gone: the preceding empty block is left unjoined.
            if (v.size() == 2 && v[0] == 1)
                throw std::invalid_argument("deletion leaves a single vertex");
            throw std::invalid_argument("disconnects: final join block would vanish");
        }
        // Interior block vanished: its two neighbours have equal type.
        v[i - 1] += v[i + 1];
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    }
    return BlockForm::from_internal(std::move(v));
}

}  // namespace twalk
