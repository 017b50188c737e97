#include "pdcrystal/keylab.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace pdcrystal {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (const auto& r : rows_) {
        if (r.empty()) throw std::invalid_argument("interior row is empty");
        for (size_t k = 0; k < r.size(); ++k) {
            if (r[k] < 1) throw std::invalid_argument("letters must be positive");
            if (k > 0 && r[k] < r[k - 1])
                throw std::invalid_argument("row letters must weakly increase");
        }
    }
}

std::string Tableau::to_string() const {
    std::string s;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        for (size_t k = 0; k < it->size(); ++k) {
            if (k) s += ' ';
            s += std::to_string((*it)[k]);
        }
        if (std::next(it) != rows_.rend()) s += '\n';
    }
    return s;
}

Tableau eg_insert(Tableau p, int x) {
    std::vector<std::vector<int>> rows = p.rows();
    size_t i = 0;
    while (true) {
        if (i == rows.size()) rows.emplace_back();
        std::vector<int>& row = rows[i];
        if (row.empty() || x >= row.back()) {
            row.push_back(x);
            break;
        }
        const auto pos = std::upper_bound(row.begin(), row.end(), x);
        const int bumped = *pos;
        const bool skip = bumped == x + 1 && std::binary_search(row.begin(), row.end(), x);
        if (!skip) *pos = x;
        x = bumped;
        ++i;
    }
    return Tableau(std::move(rows));
}

Tableau insertion_tableau(const Word& a) {
    Tableau p;
    for (int x : a) p = eg_insert(std::move(p), x);
    return p;
}

KeyShapedFilling::KeyShapedFilling(std::map<int, std::vector<int>> rows) : rows_(std::move(rows)) {
    for (const auto& [i, letters] : rows_) {
        if (i < 1) throw std::invalid_argument("row indices must be positive");
        if (letters.empty()) throw std::invalid_argument("rows must be non-empty");
    }
}

Composition KeyShapedFilling::weight(int n) const {
    Composition w(n, 0);
    for (const auto& [i, letters] : rows_) {
        if (i > n) throw std::invalid_argument("row index exceeds requested length");
        w[i - 1] = static_cast<int>(letters.size());
    }
    return w;
}

std::string KeyShapedFilling::to_string() const {
    std::string s;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        s += std::to_string(it->first) + ":";
        for (int v : it->second) s += ' ' + std::to_string(v);
        if (std::next(it) != rows_.rend()) s += '\n';
    }
    return s;
}

KeyShapedFilling lift(const Tableau& p) {
    if (p.row_count() == 0) return KeyShapedFilling{};
    // cells[r] = letters settled in row r so far, one per completed column.
    std::map<int, std::vector<int>> cells;
    size_t width = 0;
    for (const auto& row : p.rows()) width = std::max(width, row.size());
    for (size_t col = 0; col < width; ++col) {
        // Entries of this column, top row first.
        std::vector<int> entries;
        for (int i = p.row_count(); i >= 1; --i)
            if (col < p.row(i).size()) entries.push_back(p.row(i)[col]);
        if (col == 0) {
            for (int e : entries) {
                if (!cells.emplace(e, std::vector<int>{e}).second)
                    throw std::invalid_argument("repeated first-column letter");
            }
            continue;
        }
        int ceiling = std::numeric_limits<int>::max();
        for (int e : entries) {
            int target = 0;
            for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
                const auto& [r, letters] = *it;
                if (r >= ceiling || letters.size() != col) continue;
                if (letters.back() < e) { target = r; break; }
            }
            if (target == 0)
                throw std::invalid_argument("no admissible row while lifting");
            cells[target].push_back(e);
            ceiling = target;
        }
    }
    return KeyShapedFilling(std::move(cells));
}

KeyShapedFilling rearranged_filling(const PipeDream& d) {
    if (!is_highest_weight(d))
        throw std::invalid_argument("rearrangement requires a highest weight pipe dream");
    struct Item {
        int row, col;
        bool fixed = false;
    };
    std::vector<Item> items;
    for (const auto& [i, j] : d.crosses()) items.push_back({i, i + j - 1});
    // Leftmost cross of every row settles on the diagonal, lowest row first.
    std::vector<int> rows_bottom_up;
    for (const auto& t : items)
        if (rows_bottom_up.empty() || rows_bottom_up.back() != t.row)
            rows_bottom_up.push_back(t.row);
    std::sort(rows_bottom_up.rbegin(), rows_bottom_up.rend());
    for (int r : rows_bottom_up) {
        Item* leftmost = nullptr;
        for (auto& t : items)
            if (t.row == r && (!leftmost || t.col < leftmost->col)) leftmost = &t;
        leftmost->row = leftmost->col;
        leftmost->fixed = true;
    }
    const int n = d.n();
    for (int round = 2;; ++round) {
        std::vector<int> pending;
        for (const auto& t : items)
            if (!t.fixed &&
                std::find(pending.begin(), pending.end(), t.row) == pending.end())
                pending.push_back(t.row);
        if (pending.empty()) break;
        std::sort(pending.rbegin(), pending.rend());
        for (int q : pending) {
            Item* mover = nullptr;
            for (auto& t : items)
                if (!t.fixed && t.row == q && (!mover || t.col < mover->col)) mover = &t;
            // Lowest row reachable without passing another cross in the column.
            int limit = n;
            for (const auto& t : items)
                if (&t != mover && t.col == mover->col && t.row > q)
                    limit = std::min(limit, t.row - 1);
            int chosen = 0;
            for (int r = limit; r >= q; --r) {
                int left = 0;
                bool fixed_right = false;
                for (const auto& t : items) {
                    if (&t == mover || t.row != r) continue;
                    if (t.col < mover->col) ++left;
                    if (t.fixed && t.col > mover->col) fixed_right = true;
                }
                if (left == round - 1 && !fixed_right) { chosen = r; break; }
            }
            if (chosen == 0)
                throw std::logic_error("no admissible row during rearrangement");
            mover->row = chosen;
            mover->fixed = true;
        }
    }
    std::map<int, std::vector<int>> rows;
    for (const auto& t : items) rows[t.row].push_back(t.col);
    for (auto& entry : rows) std::sort(entry.second.begin(), entry.second.end());
    return KeyShapedFilling(std::move(rows));
}

Permutation truncating_permutation(const PipeDream& d) {
    return shortest_sorting_permutation(rearranged_filling(d).weight(d.n()));
}

Permutation truncating_permutation(const RFC& r) {
    const KeyShapedFilling f = lift(insertion_tableau(r.reading_word()));
    return shortest_sorting_permutation(f.weight(r.n()));
}

namespace {

// Semistandard tableau in English convention: rows_[0] is the top row, rows
// weakly increase rightward, columns strictly increase downward.
using Ssyt = std::vector<std::vector<int>>;

// Reading word cells, bottom row first, left to right within each row.
std::vector<std::pair<int, int>> reading_order(const Ssyt& t) {
    std::vector<std::pair<int, int>> cells;
    for (int r = static_cast<int>(t.size()) - 1; r >= 0; --r)
        for (size_t c = 0; c < t[r].size(); ++c) cells.emplace_back(r, static_cast<int>(c));
    return cells;
}

// Signature rule: letters i+1 open brackets, letters i close with the most
// recent open one; survivors determine the operators.
std::optional<Ssyt> ssyt_lower(const Ssyt& t, int i) {
    const auto cells = reading_order(t);
    std::vector<std::pair<int, int>> open;
    std::vector<std::pair<int, int>> free_i;
    for (const auto& cell : cells) {
        const int v = t[cell.first][cell.second];
        if (v == i + 1) open.push_back(cell);
        else if (v == i) {
            if (!open.empty()) open.pop_back();
            else free_i.push_back(cell);
        }
    }
    if (free_i.empty()) return std::nullopt;
    Ssyt next = t;
    next[free_i.back().first][free_i.back().second] = i + 1;
    return next;
}

Composition ssyt_content(const Ssyt& t, int n) {
    Composition c(n, 0);
    for (const auto& row : t)
        for (int v : row) ++c[v - 1];
    return c;
}

}  // namespace

std::vector<Composition> demazure_crystal_weights(const Composition& lambda,
                                                  const Permutation& pi, int n) {
    return demazure_crystal_weights(lambda, reduced_word(pi), n);
}

std::vector<Composition> demazure_crystal_weights(const Composition& lambda,
                                                  const Word& word, int n) {
    if (!is_partition(lambda)) throw std::invalid_argument("lambda must be a partition");
    if (static_cast<int>(lambda.size()) > n)
        throw std::invalid_argument("lambda has more parts than n");
    Ssyt u;
    for (size_t r = 0; r < lambda.size(); ++r) {
        if (lambda[r] == 0) break;
        u.emplace_back(lambda[r], static_cast<int>(r) + 1);
    }
    std::set<Ssyt> closure{u};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::vector<Ssyt> frontier(closure.begin(), closure.end());
        for (size_t k = 0; k < frontier.size(); ++k) {
            if (auto next = ssyt_lower(frontier[k], *it)) {
                if (closure.insert(*next).second) frontier.push_back(*next);
            }
        }
    }
    std::vector<Composition> weights;
    for (const auto& t : closure) weights.push_back(ssyt_content(t, n));
    std::sort(weights.begin(), weights.end());
    return weights;
}

std::string CrystalComponent::to_json() const {
    nlohmann::ordered_json j;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : highest.crosses()) arr.push_back({c.row, c.col});
    j["highest_weight_crosses"] = std::move(arr);
    j["lambda"] = lambda;
    j["pi_window"] = pi.window();
    j["pi_reduced_word"] = reduced_word(pi);
    j["a_D"] = a;
    j["component_size"] = members.size();
    j["key_polynomial"] = nlohmann::ordered_json::parse(key_polynomial(a).to_json());
    j["verified"] = verified;
    return j.dump();
}

std::vector<CrystalComponent> key_decomposition(const Permutation& w) {
    const int n = w.size();
    std::vector<CrystalComponent> out;
    SparsePolynomial total(n);
    for (auto& comp : crystal_components(w)) {
        // The component is a Demazure crystal B_pi(lambda); its extremal
        // weight a = pi(lambda) is the lexicographically smallest member
        // weight, which determines pi without reference to any particular
        // member's filling. (The rearrangement maps recover the same value
        // for typical components but can mis-sort when a column of the
        // highest weight diagram carries two crosses pinned by the diagonal;
        // the extremal weight is always the one whose key polynomial the
        // component sums to, and the check below still validates it.)
        Composition a;
        SparsePolynomial character(n);
        for (const auto& d : comp.members) {
            const Composition wt = d.weight();
            if (a.empty() || wt < a) a = wt;
            character.add_term(Exponents(wt.begin(), wt.end()), 1);
        }
        const Permutation pi = shortest_sorting_permutation(a);
        Composition sorted = a;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        const bool verified =
            sorted == comp.lambda && a == permute(pi, comp.lambda) &&
            character == key_polynomial(a);
        total += character;
        out.push_back(CrystalComponent{std::move(comp.members), std::move(comp.highest),
                                       std::move(comp.lambda), pi, a, std::move(character),
                                       verified});
    }
    const SparsePolynomial schubert = schubert_via_pipe_dreams(w);
    const bool sum_ok = total == schubert;
    if (!sum_ok || std::any_of(out.begin(), out.end(),
                               [](const CrystalComponent& c) { return !c.verified; })) {
        nlohmann::ordered_json report;
        report["w"] = w.window();
        report["sum_matches_schubert"] = sum_ok;
        auto comps = nlohmann::ordered_json::array();
        for (const auto& c : out) comps.push_back(nlohmann::ordered_json::parse(c.to_json()));
        report["components"] = std::move(comps);
        throw DecompositionError(report.dump());
    }
    return out;
}

}  // namespace pdcrystal
