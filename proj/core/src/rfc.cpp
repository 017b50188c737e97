#include "pdcrystal/rfc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace pdcrystal {

std::vector<std::vector<int>> compatible_sequences(const Word& a) {
    std::vector<std::vector<int>> out;
    std::vector<int> beta;
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == a.size()) {
            out.push_back(beta);
            return;
        }
        int lo = 1;
        if (k > 0) lo = beta[k - 1] + (a[k - 1] < a[k] ? 1 : 0);
        for (int b = lo; b <= a[k]; ++b) {
            beta.push_back(b);
            self(self, k + 1);
            beta.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

SparsePolynomial schubert_via_compatible_sequences(const Permutation& w) {
    SparsePolynomial p(w.size());
    Exponents wt(w.size(), 0);
    for_each_reduced_word(w, [&](const Word& a) {
        for (const auto& beta : compatible_sequences(a)) {
            std::fill(wt.begin(), wt.end(), 0);
            for (int b : beta) ++wt[b - 1];
            p.add_term(wt, 1);
        }
    });
    return p;
}

RFC::RFC(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n < 1) throw std::invalid_argument("grid size must be positive");
    if (static_cast<int>(blocks_.size()) != n - 1)
        throw std::invalid_argument("expected exactly n-1 blocks");
    for (int i = 1; i <= n - 1; ++i) {
        const auto& b = blocks_[i - 1];
        for (size_t k = 0; k < b.size(); ++k) {
            if (b[k] < 1 || b[k] > n - 1)
                throw std::invalid_argument("letter out of range in block");
            if (k > 0 && b[k] <= b[k - 1])
                throw std::invalid_argument("block letters must strictly increase");
        }
        if (!b.empty() && b.front() < i)
            throw std::invalid_argument("block letters must be at least the block index");
    }
}

Composition RFC::weight() const {
    Composition w(n_, 0);
    for (int i = 0; i < n_ - 1; ++i) w[i] = static_cast<int>(blocks_[i].size());
    return w;
}

Word RFC::reading_word() const {
    Word a;
    for (int i = n_ - 1; i >= 1; --i)
        a.insert(a.end(), blocks_[i - 1].begin(), blocks_[i - 1].end());
    return a;
}

Permutation RFC::target() const {
    const Word a = reading_word();
    if (!is_reduced_word(a, n_))
        throw std::invalid_argument("reading word is not reduced");
    return permutation_from_word(a, n_);
}

std::string RFC::to_text() const {
    std::string s;
    for (int i = n_ - 1; i >= 1; --i) {
        s += "( ";
        const auto& b = blocks_[i - 1];
        for (size_t k = 0; k < b.size(); ++k) {
            if (k) s += ' ';
            s += std::to_string(b[k]);
        }
        s += " )";
    }
    return s;
}

std::string RFC::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    j["blocks"] = blocks_;
    return j.dump();
}

RFC RFC::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
        throw std::invalid_argument("factorization JSON needs \"n\" and \"blocks\"");
    return RFC(j["n"].get<int>(), j["blocks"].get<std::vector<std::vector<int>>>());
}

std::vector<RFC> enumerate_rfc(const Permutation& w) {
    const int n = w.size();
    std::set<RFC> out;
    std::vector<std::vector<int>> blocks(n - 1);
    for_each_reduced_word(w, [&](const Word& a) {
        // Split a into consecutive segments assigned to blocks n-1, n-2, ..., 1.
        // cur is the block holding the previous letter; only blocks at or below
        // it may receive the next one.
        auto rec = [&](auto&& self, size_t pos, int cur) -> void {
            if (pos == a.size()) {
                out.emplace(n, blocks);
                return;
            }
            const int x = a[pos];
            for (int k = std::min(cur, n - 1); k >= 1; --k) {
                auto& blk = blocks[k - 1];
                const bool ok = blk.empty() ? x >= k : (k == cur && x > blk.back());
                if (!ok) continue;
                blk.push_back(x);
                self(self, pos + 1, k);
                blk.pop_back();
            }
        };
        rec(rec, 0, n - 1);
    });
    return {out.begin(), out.end()};
}

SparsePolynomial schubert_via_rfc(const Permutation& w) {
    SparsePolynomial p(w.size());
    for (const auto& r : enumerate_rfc(w.inverse())) {
        const Composition wt = r.weight();
        p.add_term(Exponents(wt.begin(), wt.end()), 1);
    }
    return p;
}

BlockPairing pair_block(const RFC& r, int i) {
    if (i < 1 || i > r.n() - 2) throw std::invalid_argument("block index out of range");
    BlockPairing p;
    p.block = i;
    const auto& bi = r.block(i);
    const auto& bi1 = r.block(i + 1);
    std::vector<char> taken(bi1.size(), 0);
    for (auto it = bi.rbegin(); it != bi.rend(); ++it) {
        bool paired = false;
        for (size_t k = 0; k < bi1.size(); ++k) {
            if (taken[k] || bi1[k] <= *it) continue;
            taken[k] = 1;
            p.pairs.emplace_back(*it, bi1[k]);
            paired = true;
            break;
        }
        if (!paired) p.unpaired_block_i.push_back(*it);
    }
    for (size_t k = 0; k < bi1.size(); ++k)
        if (!taken[k]) p.unpaired_block_i1.push_back(bi1[k]);
    return p;
}

namespace {

// Rebuild with block i losing `out` and block j gaining `in`; nullopt when the
// result is not a factorization of the same permutation.
std::optional<RFC> moved(const RFC& r, int from, int out, int to, int in) {
    std::vector<std::vector<int>> blocks = r.blocks();
    auto& src = blocks[from - 1];
    src.erase(std::find(src.begin(), src.end(), out));
    auto& dst = blocks[to - 1];
    const auto pos = std::lower_bound(dst.begin(), dst.end(), in);
    if (pos != dst.end() && *pos == in) return std::nullopt;   // duplicate letter
    dst.insert(pos, in);
    if (!dst.empty() && dst.front() < to) return std::nullopt; // cutoff violated
    RFC moved_rfc(r.n(), std::move(blocks));
    const Word a = moved_rfc.reading_word();
    if (!is_reduced_word(a, r.n())) return std::nullopt;
    if (!(permutation_from_word(a, r.n()) == r.target())) return std::nullopt;
    return moved_rfc;
}

}  // namespace

std::optional<RFC> lower(const RFC& r, int i) {
    if (i < 1 || i >= r.n()) throw std::invalid_argument("operator index out of range");
    if (i == r.n() - 1) return std::nullopt;   // no block to receive the letter
    const BlockPairing p = pair_block(r, i);
    if (p.unpaired_block_i.empty()) return std::nullopt;
    const int u = p.unpaired_block_i.back();   // smallest unpaired letter of block i
    const auto& bi = r.block(i);
    int t = u;
    while (std::binary_search(bi.begin(), bi.end(), t - 1)) --t;
    return moved(r, i, u, i + 1, t);
}

std::optional<RFC> raise(const RFC& r, int i) {
    if (i < 1 || i >= r.n()) throw std::invalid_argument("operator index out of range");
    if (i == r.n() - 1) return std::nullopt;   // block i+1 is the virtual empty block
    const BlockPairing p = pair_block(r, i);
    if (p.unpaired_block_i1.empty()) return std::nullopt;
    const int v = p.unpaired_block_i1.back();  // largest unpaired letter of block i+1
    const auto& bi1 = r.block(i + 1);
    int s = v;
    while (std::binary_search(bi1.begin(), bi1.end(), s + 1)) ++s;
    return moved(r, i + 1, v, i, s);
}

bool is_highest_weight(const RFC& r) {
    for (int i = 1; i < r.n(); ++i)
        if (raise(r, i)) return false;
    return true;
}

bool is_lowest_weight(const RFC& r) {
    for (int i = 1; i < r.n(); ++i)
        if (lower(r, i)) return false;
    return true;
}

CompatibleSequence to_compatible_sequence(const PipeDream& d) {
    CompatibleSequence s;
    for (const auto& [i, j] : d.crosses()) {
        s.word.push_back(i + j - 1);
        s.beta.push_back(i);
    }
    return s;
}

PipeDream pipe_dream_from_compatible(const CompatibleSequence& s, int n) {
    if (s.word.size() != s.beta.size())
        throw std::invalid_argument("word and sequence lengths differ");
    std::vector<Cross> crosses(s.word.size());
    for (size_t k = 0; k < s.word.size(); ++k)
        crosses[k] = Cross{s.beta[k], s.word[k] - s.beta[k] + 1};
    return PipeDream(n, std::move(crosses));
}

RFC rfc_from_compatible(const CompatibleSequence& s, int n) {
    if (s.word.size() != s.beta.size())
        throw std::invalid_argument("word and sequence lengths differ");
    std::vector<std::vector<int>> blocks(n - 1);
    for (size_t k = 0; k < s.word.size(); ++k) {
        if (s.beta[k] < 1 || s.beta[k] > n - 1)
            throw std::invalid_argument("sequence entry out of block range");
        blocks[s.beta[k] - 1].push_back(s.word[k]);
    }
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    return RFC(n, std::move(blocks));
}

RFC rfc_from_pipe_dream(const PipeDream& d) {
    return rfc_from_compatible(to_compatible_sequence(d), d.n());
}

PipeDream pipe_dream_from_rfc(const RFC& r) {
    std::vector<Cross> crosses;
    for (int i = 1; i <= r.n() - 1; ++i)
        for (int letter : r.block(i)) crosses.push_back({i, letter - i + 1});
    return PipeDream(r.n(), std::move(crosses));
}

}  // namespace pdcrystal
