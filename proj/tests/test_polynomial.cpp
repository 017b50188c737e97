#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pdcrystal/permutation.hpp>
#include <pdcrystal/polynomial.hpp>

#include <json.hpp>

using namespace pdcrystal;

namespace {

SparsePolynomial x_to(const Exponents& e) { return SparsePolynomial::monomial(e, 1); }

// Frozen expansion of the Schubert polynomial of 21543 in five variables.
SparsePolynomial schubert_21543_fixture() {
    SparsePolynomial p(5);
    p.add_term({2, 2, 0, 0, 0}, 1);
    p.add_term({2, 1, 1, 0, 0}, 2);
    p.add_term({2, 0, 2, 0, 0}, 1);
    p.add_term({1, 1, 2, 0, 0}, 1);
    p.add_term({3, 1, 0, 0, 0}, 1);
    p.add_term({3, 0, 1, 0, 0}, 1);
    p.add_term({3, 0, 0, 1, 0}, 1);
    p.add_term({2, 1, 0, 1, 0}, 1);
    p.add_term({2, 0, 1, 1, 0}, 1);
    p.add_term({1, 2, 1, 0, 0}, 1);
    p.add_term({1, 2, 0, 1, 0}, 1);
    p.add_term({1, 1, 1, 1, 0}, 1);
    p.add_term({1, 0, 2, 1, 0}, 1);
    return p;
}

}  // namespace

TEST_CASE("arithmetic and term access") {
    auto p = x_to({1, 0}) + x_to({0, 1});
    auto q = x_to({1, 0}) - x_to({0, 1});
    auto prod = p * q;
    CHECK(prod == x_to({2, 0}) - x_to({0, 2}));
    CHECK(prod.coefficient({1, 1}) == 0);
    CHECK(prod.coefficient({2, 0}) == 1);
    CHECK(p.total_degree() == 1);
    CHECK(prod.is_homogeneous());
    CHECK((p + SparsePolynomial::constant(2, -1)).is_homogeneous() == false);
}

TEST_CASE("swap_vars exchanges adjacent variables") {
    auto p = SparsePolynomial::monomial({2, 1, 0}, 3);
    CHECK(p.swap_vars(1) == SparsePolynomial::monomial({1, 2, 0}, 3));
    CHECK(p.swap_vars(2) == SparsePolynomial::monomial({2, 0, 1}, 3));
    // Symmetric polynomial in x1,x2 is fixed by swap_vars(1).
    auto sym = x_to({1, 1, 0}) + x_to({2, 0, 0}) + x_to({0, 2, 0});
    CHECK(sym.swap_vars(1) == sym);
}

TEST_CASE("to_string uses graded lex descending") {
    auto p = x_to({2, 2, 0}) + x_to({2, 1, 1}) + x_to({2, 1, 1}) + x_to({1, 0, 0});
    CHECK(p.to_string() == "x1^2*x2^2 + 2*x1^2*x2*x3 + x1");
    CHECK(SparsePolynomial(3).to_string() == "0");
    CHECK(SparsePolynomial::constant(3, 5).to_string() == "5");
}

TEST_CASE("divided difference fixtures") {
    // d_2 of x1^2 x2^2 = x1^2 x2 + x1^2 x3.
    auto p = x_to({2, 2, 0});
    auto d = divided_difference(2, p);
    CHECK(d == x_to({2, 1, 0}) + x_to({2, 0, 1}));
    // d_1 of x1 = 1; d_1 of a symmetric polynomial = 0.
    CHECK(divided_difference(1, x_to({1, 0})) == SparsePolynomial::constant(2, 1));
    CHECK(divided_difference(1, x_to({1, 1, 0})) == SparsePolynomial(3));
    // d_i twice is zero.
    auto q = x_to({3, 1, 2}) + x_to({2, 2, 1});
    CHECK(divided_difference(1, divided_difference(1, q)) == SparsePolynomial(3));
    CHECK(divided_difference(2, divided_difference(2, q)) == SparsePolynomial(3));
}

TEST_CASE("divided differences satisfy the braid relation") {
    auto q = x_to({3, 1, 2}) + x_to({0, 2, 4}) + x_to({1, 1, 1});
    auto lhs = divided_difference(1, divided_difference(2, divided_difference(1, q)));
    auto rhs = divided_difference(2, divided_difference(1, divided_difference(2, q)));
    CHECK(lhs == rhs);
}

TEST_CASE("demazure operator fixtures") {
    // pi_2 of x1^2 x2^2 = x1^2 x2^2 + x1^2 x2 x3 + x1^2 x3^2.
    auto p = x_to({2, 2, 0});
    CHECK(demazure(2, p) == x_to({2, 2, 0}) + x_to({2, 1, 1}) + x_to({2, 0, 2}));
    // Idempotent: pi_i pi_i = pi_i.
    auto q = x_to({3, 1, 2}) + x_to({2, 2, 1});
    CHECK(demazure(1, demazure(1, q)) == demazure(1, q));
    CHECK(demazure(2, demazure(2, q)) == demazure(2, q));
}

TEST_CASE("schubert polynomials by divided differences") {
    // Longest element: staircase monomial.
    CHECK(schubert_via_divided_differences(Permutation::longest(3)) == x_to({2, 1, 0}));
    // Identity: 1.
    CHECK(schubert_via_divided_differences(Permutation::identity(3)) ==
          SparsePolynomial::constant(3, 1));
    // Simple transposition s1 in S_3: x1.
    CHECK(schubert_via_divided_differences(Permutation({2, 1, 3})) == x_to({1, 0, 0}));
    // s2: x1 + x2.
    CHECK(schubert_via_divided_differences(Permutation({1, 3, 2})) ==
          x_to({1, 0, 0}) + x_to({0, 1, 0}));
    CHECK(schubert_via_divided_differences(Permutation({2, 1, 5, 4, 3})) ==
          schubert_21543_fixture());
}

TEST_CASE("key polynomials") {
    // For a partition the key polynomial is the single monomial.
    CHECK(key_polynomial({2, 1, 0}) == x_to({2, 1, 0}));
    CHECK(key_polynomial({3, 3, 3}) == x_to({3, 3, 3}));
    // Reversed partition gives the full Schur polynomial.
    CHECK(key_polynomial({0, 1, 2}) == schur_polynomial({2, 1, 0}, 3));
    CHECK(key_polynomial({0, 0, 3}) == schur_polynomial({3, 0, 0}, 3));
    // Fixture: kappa_(2,0,2,0) = x1^2 x2^2 + x1^2 x2 x3 + x1^2 x3^2.
    CHECK(key_polynomial({2, 0, 2, 0}) ==
          x_to({2, 2, 0, 0}) + x_to({2, 1, 1, 0}) + x_to({2, 0, 2, 0}));
    CHECK(key_polynomial({1, 0, 2, 1}).coefficient({1, 1, 1, 1}) == 1);
    // Single variable degenerate case.
    CHECK(key_polynomial({4}) == SparsePolynomial::monomial({4}, 1));
}

TEST_CASE("schur polynomial fixtures") {
    // s_(2,1) in three variables has 8 tableaux, 7 distinct monomials.
    auto s = schur_polynomial({2, 1, 0}, 3);
    CHECK(s.coefficient({1, 1, 1}) == 2);
    CHECK(s.coefficient({2, 1, 0}) == 1);
    CHECK(s.coefficient({0, 1, 2}) == 1);
    Int total = 0;
    for (const auto& [e, c] : s.terms()) total += c;
    CHECK(total == 8);
    // s_(1,1): elementary symmetric e_2.
    CHECK(schur_polynomial({1, 1, 0}, 3) ==
          x_to({1, 1, 0}) + x_to({1, 0, 1}) + x_to({0, 1, 1}));
}

TEST_CASE("json serialization round trips ordering") {
    auto p = x_to({2, 2, 0}) + x_to({2, 1, 1}) + x_to({2, 1, 1});
    auto j = nlohmann::json::parse(p.to_json());
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["exp"] == nlohmann::json::array({2, 2, 0}));
    CHECK(j[0]["coeff"] == 1);
    CHECK(j[1]["exp"] == nlohmann::json::array({2, 1, 1}));
    CHECK(j[1]["coeff"] == 2);
}
