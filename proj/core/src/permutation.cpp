#include "pdcrystal/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pdcrystal {

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
    if (window_.empty()) throw std::invalid_argument("empty permutation window");
    std::vector<char> seen(window_.size(), 0);
    for (int v : window_) {
        if (v < 1 || v > static_cast<int>(window_.size()) || seen[v - 1])
            throw std::invalid_argument("window is not a permutation of 1..n");
        seen[v - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::swap(w[i - 1], w[i]);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw std::invalid_argument("bad permutation entry: " + item);
            w.push_back(v);
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("digit-string permutations need entries 1..9");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

int Permutation::length() const {
    int inv = 0;
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (window_[i] > window_[j]) ++inv;
    return inv;
}

Permutation Permutation::inverse() const {
    std::vector<int> w(window_.size());
    for (int i = 0; i < static_cast<int>(window_.size()); ++i) w[window_[i] - 1] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("size mismatch in composition");
    std::vector<int> w(window_.size());
    for (int i = 0; i < size(); ++i) w[i] = window_[other.window_[i] - 1];
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (window_[i] != i + 1) return false;
    return true;
}

bool Permutation::left_descent(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("descent index out of range");
    // s_i * w swaps the values i, i+1; it shortens w iff i+1 appears before i.
    const Permutation inv = inverse();
    return inv(i) > inv(i + 1);
}

bool Permutation::right_descent(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("descent index out of range");
    return window_[i - 1] > window_[i];
}

std::string Permutation::to_string() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (i) s += ',';
        s += std::to_string(window_[i]);
    }
    return s;
}

Permutation permutation_from_word(const Word& a, int n) {
    Permutation w = Permutation::identity(n);
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        w = Permutation::simple(*it, n).compose(w);
    return w;
}

bool is_reduced_word(const Word& a, int n) {
    return permutation_from_word(a, n).length() == static_cast<int>(a.size());
}

std::vector<Word> reduced_words(const Permutation& w) {
    std::vector<Word> out;
    for_each_reduced_word(w, [&](const Word& a) { out.push_back(a); });
    return out;
}

Word reduced_word(const Permutation& pi) {
    Word out;
    Permutation v = pi;
    while (!v.is_identity()) {
        const int n = v.size();
        for (int i = 1; i < n; ++i) {
            if (!v.left_descent(i)) continue;
            out.push_back(i);
            std::vector<int> win = v.window();
            for (auto& x : win) {
                if (x == i) x = i + 1;
                else if (x == i + 1) x = i;
            }
            v = Permutation(std::move(win));
            break;
        }
    }
    return out;
}

Composition permute(const Permutation& pi, const Composition& v) {
    if (static_cast<int>(v.size()) != pi.size())
        throw std::invalid_argument("composition length must match permutation size");
    Composition out(v.size());
    for (int i = 1; i <= pi.size(); ++i) out[pi(i) - 1] = v[i - 1];
    return out;
}

Permutation shortest_sorting_permutation(const Composition& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) throw std::invalid_argument("empty composition");
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int p, int q) { return a[p] > a[q]; });
    // idx[k] = source position of the k-th largest value, ties by position.
    // pi(k) = idx[k] + 1, so that permute(pi, sorted_decreasing(a)) == a.
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = idx[k] + 1;
    return Permutation(std::move(w));
}

Composition sorted_decreasing(const Composition& a) {
    Composition b = a;
    std::sort(b.begin(), b.end(), std::greater<int>());
    return b;
}

bool is_partition(const Composition& a) {
    for (size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] < a[i + 1]) return false;
    return a.empty() || a.back() >= 0;
}

std::string to_string(const Composition& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a[i]);
    }
    return s + ")";
}

std::string word_to_string(const Word& a) {
    if (a.empty()) return "-";
    const bool wide = std::any_of(a.begin(), a.end(), [](int x) { return x > 9; });
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i && wide) s += ',';
        s += std::to_string(a[i]);
    }
    return s;
}

}  // namespace pdcrystal
