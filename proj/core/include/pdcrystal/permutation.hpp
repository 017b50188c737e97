#pragma once

#include <string>
#include <vector>

namespace pdcrystal {

// Letters of reduced words: values in 1..n-1 index simple transpositions.
using Word = std::vector<int>;

// Weak composition (all entries >= 0), padded to n parts by convention.
using Composition = std::vector<int>;

// Permutation of {1..n} in one-line notation, 1-indexed.
class Permutation {
public:
    explicit Permutation(std::vector<int> window);

    static Permutation identity(int n);
    static Permutation simple(int i, int n);   // s_i
    static Permutation longest(int n);         // n, n-1, ..., 1
    // Accepts "2,1,5,4,3" or a digit string "21543" (the latter only for n <= 9).
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(window_.size()); }
    int operator()(int i) const { return window_[i - 1]; }
    const std::vector<int>& window() const { return window_; }

    int length() const;                        // number of inversions
    Permutation inverse() const;
    // (this o other)(i) = this(other(i)); sizes must agree.
    Permutation compose(const Permutation& other) const;

    bool is_identity() const;
    bool left_descent(int i) const;            // length(s_i o *this) < length(*this)
    bool right_descent(int i) const;           // length(*this o s_i) < length(*this)

    std::string to_string() const;             // "2,1,5,4,3"

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return window_ < o.window_; }

private:
    std::vector<int> window_;
};

// Product s_{a_1} o s_{a_2} o ... o s_{a_p} in S_n.
Permutation permutation_from_word(const Word& a, int n);

// True when |a| equals the length of its product.
bool is_reduced_word(const Word& a, int n);

// All reduced words of w, in lexicographic order.
std::vector<Word> reduced_words(const Permutation& w);

// Visits every reduced word of w once, in lexicographic order.
template <typename F>
void for_each_reduced_word(const Permutation& w, F&& fn);

// Lexicographically smallest reduced word of pi.
Word reduced_word(const Permutation& pi);

// Entries of v pushed to permuted positions: result[pi(i)] = v[i] (1-indexed).
Composition permute(const Permutation& pi, const Composition& v);

// Shortest permutation pi with permute(pi, sorted_decreasing(a)) == a: stable
// sort of the values in decreasing order, ties kept in position order.
Permutation shortest_sorting_permutation(const Composition& a);

Composition sorted_decreasing(const Composition& a);
bool is_partition(const Composition& a);

std::string to_string(const Composition& a);    // "(2,1,1,0,0)"
std::string word_to_string(const Word& a);      // "3143"; commas past 9; "-" if empty

namespace detail {
template <typename F>
void reduced_word_rec(Permutation v, Word& prefix, F& fn) {
    if (v.is_identity()) {
        fn(const_cast<const Word&>(prefix));
        return;
    }
    const int n = v.size();
    for (int i = 1; i < n; ++i) {
        if (!v.left_descent(i)) continue;
        std::vector<int> win = v.window();
        for (auto& x : win) {
            if (x == i) x = i + 1;
            else if (x == i + 1) x = i;
        }
        prefix.push_back(i);
        reduced_word_rec(Permutation(std::move(win)), prefix, fn);
        prefix.pop_back();
    }
}
}  // namespace detail

template <typename F>
void for_each_reduced_word(const Permutation& w, F&& fn) {
    Word prefix;
    detail::reduced_word_rec(w, prefix, fn);
}

}  // namespace pdcrystal
