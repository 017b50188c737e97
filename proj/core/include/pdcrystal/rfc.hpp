#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdcrystal/pipe_dream.hpp"

namespace pdcrystal {

// A reduced word together with a compatible sequence of row indices: beta is
// weakly increasing, beta[k] <= a[k], strictly increasing across ascents of a.
struct CompatibleSequence {
    Word word;
    std::vector<int> beta;
    bool operator==(const CompatibleSequence&) const = default;
};

// All compatible sequences of the word a, in lexicographic order.
std::vector<std::vector<int>> compatible_sequences(const Word& a);

// Sum of x^weight(beta) over all reduced words of w and compatible sequences.
SparsePolynomial schubert_via_compatible_sequences(const Permutation& w);

// Reduced factorization with cutoff: n-1 blocks of strictly increasing letters,
// block i's smallest letter at least i, whose concatenation reading blocks
// n-1 down to 1 is a reduced word. Displayed as "( r^{n-1} )...( r^1 )".
class RFC {
public:
    RFC(int n, std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    const std::vector<int>& block(int i) const { return blocks_[i - 1]; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    Composition weight() const;     // letters per block, padded to n parts
    Word reading_word() const;      // blocks n-1 down to 1, left to right
    // Product of the reading word; throws when the word is not reduced.
    Permutation target() const;

    std::string to_text() const;    // "( 4 )( 3 )(  )( 1 4 )"
    std::string to_json() const;    // {"n": .., "blocks": [[..], ..]}, blocks[0] = block 1
    static RFC from_json(const std::string& text);

    bool operator==(const RFC&) const = default;
    bool operator<(const RFC& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return blocks_ < o.blocks_;
    }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;   // blocks_[i-1] = block i
};

// All RFCs whose reading word is a reduced word of w, sorted.
std::vector<RFC> enumerate_rfc(const Permutation& w);

// Sum of x^weight(r) over enumerate_rfc(w.inverse()).
SparsePolynomial schubert_via_rfc(const Permutation& w);

// Pairing between blocks i and i+1: letters of block i scanned largest to
// smallest, each pairing with the smallest unpaired strictly larger letter of
// block i+1. Requires 1 <= i <= n-2.
struct BlockPairing {
    int block = 0;
    std::vector<std::pair<int, int>> pairs;   // (block-i letter, its block-(i+1) partner)
    std::vector<int> unpaired_block_i;        // in scan (largest-first) order
    std::vector<int> unpaired_block_i1;       // increasing
};

BlockPairing pair_block(const RFC& r, int i);

// Lowering operator on factorizations: the smallest unpaired letter u of block
// i leaves, and t = max{z <= u : z-1 not in block i} joins block i+1; absent
// when everything is paired or the result is not a valid factorization.
std::optional<RFC> lower(const RFC& r, int i);

// Raising operator: the largest unpaired letter v of block i+1 leaves, and
// s = min{z >= v : z+1 not in block i+1} joins block i.
std::optional<RFC> raise(const RFC& r, int i);

bool is_highest_weight(const RFC& r);
bool is_lowest_weight(const RFC& r);

// Crosses read in canonical order: (i,j) contributes letter i+j-1 at row i.
CompatibleSequence to_compatible_sequence(const PipeDream& d);
PipeDream pipe_dream_from_compatible(const CompatibleSequence& s, int n);

// Letter a[k] joins block beta[k].
RFC rfc_from_compatible(const CompatibleSequence& s, int n);

// The weight-preserving bijection RP(w) -> RFC(w^{-1}) and its inverse.
RFC rfc_from_pipe_dream(const PipeDream& d);
PipeDream pipe_dream_from_rfc(const RFC& r);

}  // namespace pdcrystal
