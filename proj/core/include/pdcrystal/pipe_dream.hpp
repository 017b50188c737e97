#pragma once

#include <string>
#include <vector>

#include "pdcrystal/permutation.hpp"
#include "pdcrystal/polynomial.hpp"

namespace pdcrystal {

struct Cross {
    int row;
    int col;
    bool operator==(const Cross&) const = default;
    // Canonical order: rows top to bottom, right to left within a row.
    bool operator<(const Cross& o) const {
        return row != o.row ? row < o.row : col > o.col;
    }
};

// Subset of the staircase {(i,j) : i+j <= n} in an n x n grid, drawn with
// crossing tiles at its members and elbows elsewhere.
class PipeDream {
public:
    PipeDream(int n, std::vector<Cross> crosses);

    int n() const { return n_; }
    // Always in canonical order.
    const std::vector<Cross>& crosses() const { return crosses_; }
    size_t cross_count() const { return crosses_.size(); }
    bool has_cross(int i, int j) const;

    // Crosses per row, n parts.
    Composition weight() const;

    // Permutation realized by the pipes: the pipe entering at the left of row i
    // exits at the top of column w(i).
    Permutation trace_pipes() const;

    std::vector<Cross> crosses_in_row(int i) const;   // canonical (right-to-left) order

    std::string to_ascii() const;                     // '+' crosses, '.' elbows, staircase rows
    std::string id_string() const;                    // "1,4;1,1;2,2;3,2", "-" when empty
    std::string to_json() const;                      // {"n": .., "crosses": [[i,j], ..]}
    static PipeDream from_json(const std::string& text);

    bool operator==(const PipeDream&) const = default;
    bool operator<(const PipeDream& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return crosses_ < o.crosses_;
    }

private:
    int n_;
    std::vector<Cross> crosses_;
};

// True when the cross count equals the length of the traced permutation.
bool is_reduced(const PipeDream& d);

// All reduced pipe dreams for w, enumerated through reduced words and their
// compatible sequences, in canonical sorted order.
std::vector<PipeDream> reduced_pipe_dreams(const Permutation& w);

// Sum of x^weight(D) over reduced_pipe_dreams(w).
SparsePolynomial schubert_via_pipe_dreams(const Permutation& w);

// All single chute moves applicable to d: a cross (i,j) with (i+1,j) free moves
// to (i+1,j-m) across a full 2-row rectangle of crosses, no pairing involved.
std::vector<PipeDream> chute_moves(const PipeDream& d);

}  // namespace pdcrystal
