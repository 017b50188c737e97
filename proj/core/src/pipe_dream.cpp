#include "pdcrystal/pipe_dream.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace pdcrystal {

PipeDream::PipeDream(int n, std::vector<Cross> crosses) : n_(n), crosses_(std::move(crosses)) {
    if (n < 1) throw std::invalid_argument("grid size must be positive");
    std::sort(crosses_.begin(), crosses_.end());
    for (size_t k = 0; k < crosses_.size(); ++k) {
        const auto& [i, j] = crosses_[k];
        if (i < 1 || j < 1 || i + j > n)
            throw std::invalid_argument("cross outside the staircase region");
        if (k > 0 && crosses_[k] == crosses_[k - 1])
            throw std::invalid_argument("duplicate cross");
    }
}

bool PipeDream::has_cross(int i, int j) const {
    return std::binary_search(crosses_.begin(), crosses_.end(), Cross{i, j});
}

Composition PipeDream::weight() const {
    Composition w(n_, 0);
    for (const auto& c : crosses_) ++w[c.row - 1];
    return w;
}

Permutation PipeDream::trace_pipes() const {
    std::vector<int> window(n_);
    for (int i = 1; i <= n_; ++i) {
        int r = i, c = 1;
        bool east = true;   // heading of the pipe as it enters tile (r, c)
        while (r >= 1) {
            if (has_cross(r, c)) {
                // straight through
                if (east) ++c;
                else --r;
            } else {
                // elbow: west->north, south->east
                if (east) { --r; east = false; }
                else { ++c; east = true; }
            }
        }
        window[i - 1] = c;
    }
    return Permutation(std::move(window));
}

std::vector<Cross> PipeDream::crosses_in_row(int i) const {
    std::vector<Cross> out;
    for (const auto& c : crosses_)
        if (c.row == i) out.push_back(c);
    return out;
}

std::string PipeDream::to_ascii() const {
    std::string s;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_ - i + 1; ++j) s += has_cross(i, j) ? '+' : '.';
        if (i < n_) s += '\n';
    }
    return s;
}

std::string PipeDream::id_string() const {
    if (crosses_.empty()) return "-";
    std::string s;
    for (size_t k = 0; k < crosses_.size(); ++k) {
        if (k) s += ';';
        s += std::to_string(crosses_[k].row) + "," + std::to_string(crosses_[k].col);
    }
    return s;
}

std::string PipeDream::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : crosses_) arr.push_back({c.row, c.col});
    j["crosses"] = std::move(arr);
    return j.dump();
}

PipeDream PipeDream::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("crosses"))
        throw std::invalid_argument("pipe dream JSON needs \"n\" and \"crosses\"");
    const int n = j["n"].get<int>();
    std::vector<Cross> crosses;
    for (const auto& c : j["crosses"]) {
        if (!c.is_array() || c.size() != 2)
            throw std::invalid_argument("each cross must be a [row, col] pair");
        crosses.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return PipeDream(n, std::move(crosses));
}

bool is_reduced(const PipeDream& d) {
    return d.trace_pipes().length() == static_cast<int>(d.cross_count());
}

namespace {

// Joint DFS over reduced words of w and their compatible sequences. fn receives
// the word and the weakly increasing sequence of row indices.
template <typename F>
void word_compatible_rec(const Permutation& v, Word& word, std::vector<int>& beta, F& fn) {
    if (v.is_identity()) {
        fn(const_cast<const Word&>(word), const_cast<const std::vector<int>&>(beta));
        return;
    }
    const int n = v.size();
    for (int i = 1; i < n; ++i) {
        if (!v.left_descent(i)) continue;
        int lo = 1;
        if (!beta.empty()) lo = beta.back() + (word.back() < i ? 1 : 0);
        if (lo > i) continue;
        std::vector<int> win = v.window();
        for (auto& x : win) {
            if (x == i) x = i + 1;
            else if (x == i + 1) x = i;
        }
        const Permutation next(std::move(win));
        word.push_back(i);
        for (int b = lo; b <= i; ++b) {
            beta.push_back(b);
            word_compatible_rec(next, word, beta, fn);
            beta.pop_back();
        }
        word.pop_back();
    }
}

template <typename F>
void for_each_word_compatible(const Permutation& w, F&& fn) {
    Word word;
    std::vector<int> beta;
    word_compatible_rec(w, word, beta, fn);
}

}  // namespace

std::vector<PipeDream> reduced_pipe_dreams(const Permutation& w) {
    const int n = w.size();
    std::set<PipeDream> out;
    for_each_word_compatible(w, [&](const Word& a, const std::vector<int>& beta) {
        std::vector<Cross> crosses(a.size());
        for (size_t k = 0; k < a.size(); ++k)
            crosses[k] = Cross{beta[k], a[k] - beta[k] + 1};
        out.emplace(n, std::move(crosses));
    });
    return {out.begin(), out.end()};
}

SparsePolynomial schubert_via_pipe_dreams(const Permutation& w) {
    SparsePolynomial p(w.size());
    for (const auto& d : reduced_pipe_dreams(w)) {
        const Composition wt = d.weight();
        p.add_term(Exponents(wt.begin(), wt.end()), 1);
    }
    return p;
}

std::vector<PipeDream> chute_moves(const PipeDream& d) {
    std::vector<PipeDream> out;
    const int n = d.n();
    for (const auto& [i, j] : d.crosses()) {
        if (i + 1 > n || d.has_cross(i + 1, j)) continue;
        for (int m = 1; j - m >= 1; ++m) {
            const bool src_free = !d.has_cross(i, j - m);
            const bool dst_free = !d.has_cross(i + 1, j - m);
            if (src_free && dst_free) {
                std::vector<Cross> crosses = d.crosses();
                std::erase(crosses, Cross{i, j});
                crosses.push_back({i + 1, j - m});
                out.emplace_back(n, std::move(crosses));
                break;
            }
            if (!src_free && !dst_free) continue;   // rectangle column fully crossed
            break;                                  // mixed column blocks the chute
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pdcrystal
