#include "pdcrystal/polynomial.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pdcrystal {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

SparsePolynomial::SparsePolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("nvars must be positive");
}

SparsePolynomial SparsePolynomial::constant(int nvars, Int c) {
    SparsePolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::monomial(Exponents exp, Int c) {
    SparsePolynomial p(static_cast<int>(exp.size()));
    for (int e : exp)
        if (e < 0) throw std::invalid_argument("negative exponent");
    p.add_term(exp, c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
    Exponents e(nvars, 0);
    e[i - 1] = 1;
    return monomial(std::move(e));
}

Int SparsePolynomial::coefficient(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void SparsePolynomial::add_term(const Exponents& exp, const Int& c) {
    if (static_cast<int>(exp.size()) != nvars_)
        throw std::invalid_argument("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    r += o;
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    r -= o;
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    SparsePolynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

SparsePolynomial SparsePolynomial::swap_vars(int i) const {
    if (i < 1 || i >= nvars_) throw std::invalid_argument("swap index out of range");
    SparsePolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        std::swap(f[i - 1], f[i]);
        r.add_term(f, c);
    }
    return r;
}

int SparsePolynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // Graded-lex keeps the highest total degree at the end of the map.
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

bool SparsePolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree();
    const auto& e0 = terms_.begin()->first;
    return std::accumulate(e0.begin(), e0.end(), 0) == d;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        const Int mag = c > 0 ? c : Int(-c);
        std::vector<std::string> factors;
        if (mag != 1) factors.push_back(mag.str());
        for (int k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            std::string f = "x" + std::to_string(k + 1);
            if (e[k] > 1) f += "^" + std::to_string(e[k]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) factors.push_back(mag.str());
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k) s += "*";
            s += factors[k];
        }
    }
    return s;
}

std::string SparsePolynomial::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        nlohmann::ordered_json t;
        const Int& c = it->second;
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            t["coeff"] = static_cast<long long>(c);
        else
            t["coeff"] = c.str();
        t["exp"] = it->first;
        arr.push_back(std::move(t));
    }
    return arr.dump();
}

SparsePolynomial divided_difference(int i, const SparsePolynomial& p) {
    const int n = p.nvars();
    if (i < 1 || i >= n) throw std::invalid_argument("divided difference index out of range");
    SparsePolynomial num = p - p.swap_vars(i);
    // Divide exactly by x_i - x_{i+1}: repeatedly cancel the graded-lex leading
    // term of the numerator against the divisor's leading term x_i.
    SparsePolynomial q(n);
    while (!num.is_zero()) {
        // Copy the leading term: cancelling it below erases its map node.
        const auto [e, c] = *num.terms().rbegin();
        if (e[i - 1] == 0)
            throw std::logic_error("divided difference: non-exact division");
        Exponents f = e;
        f[i - 1] -= 1;
        q.add_term(f, c);
        // num -= c * x^f * (x_i - x_{i+1})
        num.add_term(e, -c);
        Exponents g = f;
        g[i] += 1;
        num.add_term(g, c);
    }
    return q;
}

SparsePolynomial demazure(int i, const SparsePolynomial& p) {
    return divided_difference(i, SparsePolynomial::variable(p.nvars(), i) * p);
}

SparsePolynomial schubert_via_divided_differences(const Permutation& w) {
    const int n = w.size();
    Permutation v = w;
    // Walk up to the longest element along ascents, recording the indices.
    std::vector<int> ascents;
    Permutation w0 = Permutation::longest(n);
    while (!(v == w0)) {
        for (int i = 1; i < n; ++i) {
            if (!v.right_descent(i)) {
                ascents.push_back(i);
                std::vector<int> win = v.window();
                std::swap(win[i - 1], win[i]);
                v = Permutation(std::move(win));
                break;
            }
        }
    }
    Exponents staircase(n, 0);
    for (int k = 0; k < n; ++k) staircase[k] = n - 1 - k;
    SparsePolynomial p = SparsePolynomial::monomial(staircase);
    for (auto it = ascents.rbegin(); it != ascents.rend(); ++it)
        p = divided_difference(*it, p);
    return p;
}

SparsePolynomial key_polynomial(const Composition& a) {
    const int n = static_cast<int>(a.size());
    for (int x : a)
        if (x < 0) throw std::invalid_argument("composition entries must be nonnegative");
    Composition lambda = sorted_decreasing(a);
    Exponents e(lambda.begin(), lambda.end());
    SparsePolynomial p = SparsePolynomial::monomial(e);
    if (n == 1) return p;
    const Word word = reduced_word(shortest_sorting_permutation(a));
    for (auto it = word.rbegin(); it != word.rend(); ++it) p = demazure(*it, p);
    return p;
}

namespace {

// DFS over semistandard tableaux of shape lambda with entries <= n, row by row,
// accumulating x^content.
void ssyt_rec(const Composition& lambda, int n, size_t row, std::vector<std::vector<int>>& rows,
              Exponents& content, SparsePolynomial& acc) {
    if (row == lambda.size() || lambda[row] == 0) {
        acc.add_term(content, 1);
        return;
    }
    std::vector<int>& cur = rows[row];
    cur.assign(lambda[row], 0);
    // Fill the row left to right with weakly increasing entries, strictly larger
    // than the entry above (the previous row).
    auto fill = [&](auto&& self, int col) -> void {
        if (col == lambda[row]) {
            ssyt_rec(lambda, n, row + 1, rows, content, acc);
            return;
        }
        int lo = col > 0 ? cur[col - 1] : 1;
        if (row > 0) lo = std::max(lo, rows[row - 1][col] + 1);
        for (int v = lo; v <= n; ++v) {
            cur[col] = v;
            ++content[v - 1];
            self(self, col + 1);
            --content[v - 1];
        }
    };
    fill(fill, 0);
    cur.clear();
}

}  // namespace

SparsePolynomial schur_polynomial(const Composition& lambda, int n) {
    if (!is_partition(lambda)) throw std::invalid_argument("lambda must be a partition");
    SparsePolynomial acc(n);
    std::vector<std::vector<int>> rows(lambda.size());
    Exponents content(n, 0);
    ssyt_rec(lambda, n, 0, rows, content, acc);
    return acc;
}

}  // namespace pdcrystal
