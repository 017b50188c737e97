#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdcrystal/crystal.hpp"
#include "pdcrystal/pipe_dream.hpp"
#include "pdcrystal/polynomial.hpp"
#include "pdcrystal/rfc.hpp"

namespace pdcrystal {

// Insertion tableau: rows of positive letters, bottom row first, each weakly
// increasing left to right. No column condition is imposed; bumping can create
// repeated letters within a row.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& row(int i) const { return rows_[i - 1]; }   // 1 = bottom
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    std::string to_string() const;   // one row per line, bottom row last

    bool operator==(const Tableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

// One step of Edelman-Greene insertion: x bumps the first larger entry upward
// row by row; an equal pair (x, x+1) already present passes through untouched;
// an append ends the insertion.
Tableau eg_insert(Tableau p, int x);

// Left-to-right insertion of every letter, starting from the empty tableau.
Tableau insertion_tableau(const Word& a);

// Sparse left-justified filling: row index -> letters. Row indices need not be
// contiguous; the weight is the vector of row lengths.
class KeyShapedFilling {
public:
    KeyShapedFilling() = default;
    explicit KeyShapedFilling(std::map<int, std::vector<int>> rows);

    const std::map<int, std::vector<int>>& rows() const { return rows_; }
    Composition weight(int n) const;

    std::string to_string() const;

    bool operator==(const KeyShapedFilling&) const = default;

private:
    std::map<int, std::vector<int>> rows_;
};

// Raises tableau entries column by column: first-column entries move to the row
// matching their value, later columns rise to the highest free row whose left
// neighbor is strictly smaller, keeping each column's top-to-bottom order.
KeyShapedFilling lift(const Tableau& p);

// Rearranges a highest weight pipe dream: shift row i right by i-1, then drop
// crosses down their columns round by round so the round-l cross of each row
// becomes the l-th cross of its landing row, never passing a cross or landing
// left of a settled one. Entries record column indices. Throws unless the input
// is highest weight.
KeyShapedFilling rearranged_filling(const PipeDream& d);

// Shortest permutation sorting the rearranged weight; satisfies
// permute(result, d.weight()) == rearranged_filling(d).weight(n).
Permutation truncating_permutation(const PipeDream& d);

// Same data computed on the factorization side: insert the reading word,
// lift, and sort the lifted weight.
Permutation truncating_permutation(const RFC& r);

// Weight multiset of the Demazure crystal: the closure of the highest weight
// tableau of shape lambda under lowering operators taken along a reduced word
// of pi, rightmost letter first. Sorted, with multiplicity.
std::vector<Composition> demazure_crystal_weights(const Composition& lambda,
                                                  const Permutation& pi, int n);

// Same closure along an explicit operator word; the result is independent of
// which reduced word of pi is supplied.
std::vector<Composition> demazure_crystal_weights(const Composition& lambda,
                                                  const Word& word, int n);

struct CrystalComponent {
    std::vector<PipeDream> members;
    PipeDream highest;
    Composition lambda;            // weight of the highest vertex
    Permutation pi;                // truncating permutation sorting a
    Composition a;                 // extremal (lex-least) member weight,
                                   // equals permute(pi, lambda)
    SparsePolynomial character;    // sum of x^weight over members
    bool verified;                 // character == key_polynomial(a)

    std::string to_json() const;
};

// Thrown when the decomposition identity fails; what() carries a JSON report.
struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Splits the crystal of w into components and indexes each one by its extremal
// weight a (the lexicographically least member weight) and the shortest
// permutation sorting a. Checks per component that the character equals the
// key polynomial of a, and globally that the characters sum to the Schubert
// polynomial of w; any failure throws DecompositionError.
std::vector<CrystalComponent> key_decomposition(const Permutation& w);

}  // namespace pdcrystal
