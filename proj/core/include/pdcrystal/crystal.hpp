#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdcrystal/pipe_dream.hpp"

namespace pdcrystal {

// Outcome of the row pairing process between rows i and i+1: crosses in row i
// are scanned right to left, each one pairing with the leftmost unpaired cross
// of row i+1 weakly to its right, if any.
struct RowPairing {
    int row = 0;
    std::vector<std::pair<Cross, Cross>> pairs;   // (row-i cross, its row-(i+1) partner)
    std::vector<Cross> unpaired_upper;            // row i, in scan (right-to-left) order
    std::vector<Cross> unpaired_lower;            // row i+1, left to right
};

RowPairing pair_row(const PipeDream& d, int i);

// Lowering operator: moves the leftmost unpaired cross of row i into row i+1
// across the maximal two-row rectangle of crosses; absent when every row-i
// cross is paired or the move is blocked at the wall.
std::optional<PipeDream> lower(const PipeDream& d, int i);

// Raising operator, inverse to lower: moves the rightmost unpaired cross of
// row i+1 up to row i at the first free column to its right.
std::optional<PipeDream> raise(const PipeDream& d, int i);

bool is_highest_weight(const PipeDream& d);   // raise(d, i) absent for all i
bool is_lowest_weight(const PipeDream& d);    // lower(d, i) absent for all i

struct CrystalEdge {
    int source;   // vertex indices
    int op;       // operator index i
    int target;
    bool operator==(const CrystalEdge&) const = default;
};

struct CrystalGraph {
    Permutation w;
    std::vector<PipeDream> vertices;   // canonical sorted order
    std::vector<CrystalEdge> edges;    // sorted by (source, op)

    std::string to_dot() const;
    std::string to_json() const;
};

CrystalGraph crystal_graph(const Permutation& w);

// Connected component of the crystal graph together with its distinguished
// highest weight vertex.
struct Component {
    std::vector<PipeDream> members;   // canonical sorted order
    PipeDream highest;
    Composition lambda;               // weight of the highest vertex, a partition
};

std::vector<Component> crystal_components(const CrystalGraph& g);
std::vector<Component> crystal_components(const Permutation& w);

}  // namespace pdcrystal
