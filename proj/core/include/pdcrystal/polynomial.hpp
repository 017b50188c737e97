#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "pdcrystal/permutation.hpp"

namespace pdcrystal {

using Int = boost::multiprecision::cpp_int;
using Exponents = std::vector<int>;

// Total degree first, then lexicographic on the exponent vector.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial over Z in variables x1..xn, sparse exponent map.
class SparsePolynomial {
public:
    explicit SparsePolynomial(int nvars);
    static SparsePolynomial constant(int nvars, Int c);
    static SparsePolynomial monomial(Exponents exp, Int c = 1);
    static SparsePolynomial variable(int nvars, int i);   // x_i, 1-indexed

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Int, GradedLexLess>& terms() const { return terms_; }
    Int coefficient(const Exponents& exp) const;

    void add_term(const Exponents& exp, const Int& c);

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    bool operator==(const SparsePolynomial& o) const = default;

    // Image under swapping the variables x_i and x_{i+1}.
    SparsePolynomial swap_vars(int i) const;

    int total_degree() const;                 // max over terms; -1 for the zero polynomial
    bool is_homogeneous() const;

    // Terms in descending graded-lex order: "x1^2*x2^2 + 2*x1^2*x2*x3 + ...".
    std::string to_string() const;
    // JSON list [{"coeff": c, "exp": [..]}, ...] in the same order.
    std::string to_json() const;

private:
    int nvars_;
    std::map<Exponents, Int, GradedLexLess> terms_;
};

// (p - swap_vars(i)(p)) / (x_i - x_{i+1}); exact by antisymmetry.
SparsePolynomial divided_difference(int i, const SparsePolynomial& p);

// divided_difference(i, x_i * p); idempotent.
SparsePolynomial demazure(int i, const SparsePolynomial& p);

// Schubert polynomial of w via the divided-difference recursion from the
// staircase monomial of the longest element.
SparsePolynomial schubert_via_divided_differences(const Permutation& w);

// Key polynomial of a weak composition: Demazure operators along the
// lexicographically smallest reduced word of shortest_sorting_permutation(a),
// applied right to left to x^(sorted a).
SparsePolynomial key_polynomial(const Composition& a);

// Schur polynomial s_lambda(x1..xn) by direct semistandard tableau enumeration.
SparsePolynomial schur_polynomial(const Composition& lambda, int n);

}  // namespace pdcrystal
