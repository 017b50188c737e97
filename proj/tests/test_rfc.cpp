#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pdcrystal/crystal.hpp>
#include <pdcrystal/polynomial.hpp>
#include <pdcrystal/rfc.hpp>

#include <algorithm>
#include <set>

using namespace pdcrystal;

namespace {

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> win(n);
    for (int i = 0; i < n; ++i) win[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(win);
    } while (std::next_permutation(win.begin(), win.end()));
    return out;
}

std::set<std::vector<int>> beta_set(const Word& a) {
    auto all = compatible_sequences(a);
    return {all.begin(), all.end()};
}

using Blocks = std::vector<std::vector<int>>;

std::set<RFC> rfc_set(int n, const std::vector<Blocks>& blocks) {
    std::set<RFC> out;
    for (const auto& b : blocks) out.emplace(n, b);
    return out;
}

}  // namespace

TEST_CASE("compatible sequences of every reduced word of 21543") {
    CHECK(beta_set({3, 1, 4, 3}) == std::set<std::vector<int>>{
                                        {1, 1, 2, 2}, {1, 1, 2, 3}, {1, 1, 3, 3}});
    CHECK(beta_set({1, 3, 4, 3}) == std::set<std::vector<int>>{{1, 2, 3, 3}});
    CHECK(beta_set({4, 3, 1, 4}) == std::set<std::vector<int>>{
                                        {1, 1, 1, 2}, {1, 1, 1, 3}, {1, 1, 1, 4}});
    CHECK(beta_set({4, 1, 3, 4}) == std::set<std::vector<int>>{
                                        {1, 1, 2, 3}, {1, 1, 2, 4}, {1, 1, 3, 4}});
    CHECK(beta_set({1, 4, 3, 4}) == std::set<std::vector<int>>{
                                        {1, 2, 2, 3}, {1, 2, 2, 4}, {1, 2, 3, 4}, {1, 3, 3, 4}});
    CHECK(beta_set({3, 4, 1, 3}).empty());
    CHECK(beta_set({3, 4, 3, 1}).empty());
    CHECK(beta_set({4, 3, 4, 1}).empty());
    CHECK(beta_set({1}) == std::set<std::vector<int>>{{1}});
    // 3 + 1 + 3 + 3 + 4 sequences across the eight reduced words.
    size_t total = 0;
    for (const auto& a : reduced_words(Permutation({2, 1, 5, 4, 3})))
        total += compatible_sequences(a).size();
    CHECK(total == 14);
}

TEST_CASE("schubert polynomial via compatible sequences") {
    for (const auto& w : all_permutations(4))
        CHECK(schubert_via_compatible_sequences(w) == schubert_via_divided_differences(w));
    CHECK(schubert_via_compatible_sequences(Permutation({2, 1, 5, 4, 3})) ==
          schubert_via_divided_differences(Permutation({2, 1, 5, 4, 3})));
}

TEST_CASE("rfc validation") {
    CHECK_NOTHROW(RFC(5, {{1, 4}, {3}, {4}, {}}));
    // Blocks must strictly increase.
    CHECK_THROWS_AS(RFC(5, {{4, 1}, {3}, {4}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(RFC(5, {{1, 1}, {}, {}, {}}), std::invalid_argument);
    // Block i's smallest letter is at least i.
    CHECK_THROWS_AS(RFC(5, {{1}, {1}, {}, {}}), std::invalid_argument);
    // Letters index simple transpositions, so they stay below n.
    CHECK_THROWS_AS(RFC(5, {{5}, {}, {}, {}}), std::invalid_argument);
    // Exactly n-1 blocks.
    CHECK_THROWS_AS(RFC(5, {{1}, {}, {}}), std::invalid_argument);
}

TEST_CASE("rfc accessors and rendering") {
    RFC r(5, {{1, 4}, {3}, {4}, {}});
    CHECK(r.block(1) == std::vector<int>{1, 4});
    CHECK(r.block(2) == std::vector<int>{3});
    CHECK(r.weight() == Composition{2, 1, 1, 0, 0});
    CHECK(r.reading_word() == Word{4, 3, 1, 4});
    CHECK(r.target() == Permutation({2, 1, 5, 4, 3}));
    CHECK(r.to_text() == "(  )( 4 )( 3 )( 1 4 )");
    CHECK(r.to_json() == R"({"n":5,"blocks":[[1,4],[3],[4],[]]})");
    CHECK(RFC::from_json(r.to_json()) == r);

    RFC padded(5, {{1}, {}, {3}, {4}});
    CHECK(padded.weight() == Composition{1, 0, 1, 1, 0});
}

TEST_CASE("rfc enumeration reproduces the factorization table of 21543") {
    auto all = enumerate_rfc(Permutation({2, 1, 5, 4, 3}));
    CHECK(all.size() == 14);
    std::set<RFC> got(all.begin(), all.end());
    CHECK(got.size() == 14);

    std::set<RFC> expected = rfc_set(5, {
        // word 3413
        {{1, 3}, {3, 4}, {}, {}},
        {{1, 3}, {4}, {3}, {}},
        {{1, 3}, {}, {3, 4}, {}},
        // word 3431
        {{1}, {3}, {3, 4}, {}},
        // word 4134
        {{1, 3, 4}, {4}, {}, {}},
        {{1, 3, 4}, {}, {4}, {}},
        {{1, 3, 4}, {}, {}, {4}},
        // word 4314
        {{1, 4}, {3}, {4}, {}},
        {{1, 4}, {3}, {}, {4}},
        {{1, 4}, {}, {3}, {4}},
        // word 4341
        {{1}, {3, 4}, {4}, {}},
        {{1}, {3, 4}, {}, {4}},
        {{1}, {4}, {3}, {4}},
        {{1}, {}, {3, 4}, {4}},
    });
    CHECK(got == expected);

    for (const auto& r : all) CHECK(r.target() == Permutation({2, 1, 5, 4, 3}));
}

TEST_CASE("identity admits exactly the empty factorization") {
    auto all = enumerate_rfc(Permutation::identity(4));
    REQUIRE(all.size() == 1);
    CHECK(all[0] == RFC(4, {{}, {}, {}}));
    CHECK(all[0].weight() == Composition{0, 0, 0, 0});
}

TEST_CASE("schubert polynomial via factorizations of the inverse") {
    for (const auto& w : all_permutations(4))
        CHECK(schubert_via_rfc(w) == schubert_via_divided_differences(w));
    CHECK(schubert_via_rfc(Permutation({2, 1, 5, 4, 3})) ==
          schubert_via_divided_differences(Permutation({2, 1, 5, 4, 3})));
}

TEST_CASE("factorization and pipe dream counts match through inversion") {
    for (const auto& w : all_permutations(4))
        CHECK(enumerate_rfc(w.inverse()).size() == reduced_pipe_dreams(w).size());
}

TEST_CASE("block pairing walkthroughs") {
    // Block 1 = {1,3,4}, block 2 = {4}: 3 pairs with 4; 4 and 1 stay unpaired.
    RFC r1(5, {{1, 3, 4}, {4}, {}, {}});
    auto p1 = pair_block(r1, 1);
    CHECK(p1.block == 1);
    REQUIRE(p1.pairs.size() == 1);
    CHECK(p1.pairs[0] == std::pair<int, int>{3, 4});
    CHECK(p1.unpaired_block_i == std::vector<int>{4, 1});
    CHECK(p1.unpaired_block_i1.empty());

    // Block 1 = {1,4}, block 2 = {3}: 1 pairs with 3; 4 stays unpaired.
    RFC r2(5, {{1, 4}, {3}, {4}, {}});
    auto p2 = pair_block(r2, 1);
    REQUIRE(p2.pairs.size() == 1);
    CHECK(p2.pairs[0] == std::pair<int, int>{1, 3});
    CHECK(p2.unpaired_block_i == std::vector<int>{4});

    // Empty block i pairs nothing.
    auto p3 = pair_block(RFC(5, {{}, {3}, {}, {}}), 1);
    CHECK(p3.pairs.empty());
    CHECK(p3.unpaired_block_i1 == std::vector<int>{3});
}

TEST_CASE("factorization crystal operators") {
    RFC r(5, {{1, 4}, {3}, {4}, {}});
    auto down = lower(r, 1);
    REQUIRE(down.has_value());
    CHECK(*down == RFC(5, {{1}, {3, 4}, {4}, {}}));
    CHECK_FALSE(raise(r, 1).has_value());
    CHECK(raise(*down, 1) == r);
    CHECK(down->weight() == Composition{1, 2, 1, 0, 0});
    // Block n-1 has no block to lower into.
    CHECK_FALSE(lower(r, 4).has_value());
    CHECK_FALSE(raise(r, 4).has_value());
}

TEST_CASE("canonical cross reading gives the compatible sequence") {
    PipeDream table1(5, {{1, 1}, {2, 2}, {2, 3}, {4, 1}});
    auto s1 = to_compatible_sequence(table1);
    CHECK(s1.word == Word{1, 4, 3, 4});
    CHECK(s1.beta == std::vector<int>{1, 2, 2, 4});
    CHECK(pipe_dream_from_compatible(s1, 5) == table1);

    PipeDream d(5, {{1, 1}, {1, 4}, {2, 2}, {3, 2}});
    auto s2 = to_compatible_sequence(d);
    CHECK(s2.word == Word{4, 1, 3, 4});
    CHECK(s2.beta == std::vector<int>{1, 1, 2, 3});

    PipeDream empty(4, {});
    auto s3 = to_compatible_sequence(empty);
    CHECK(s3.word.empty());
    CHECK(s3.beta.empty());
    CHECK(pipe_dream_from_compatible(s3, 4) == empty);
}

TEST_CASE("letters route to the blocks named by beta") {
    CHECK(rfc_from_compatible({{3, 1, 4, 3}, {1, 1, 2, 2}}, 5) ==
          RFC(5, {{1, 3}, {3, 4}, {}, {}}));
    CHECK(rfc_from_compatible({{4, 1, 3, 4}, {1, 1, 2, 3}}, 5) ==
          RFC(5, {{1, 4}, {3}, {4}, {}}));
}

TEST_CASE("the combined bijection and its inverse") {
    PipeDream d(5, {{1, 1}, {1, 4}, {2, 2}, {3, 2}});
    RFC r = rfc_from_pipe_dream(d);
    CHECK(r == RFC(5, {{1, 4}, {3}, {4}, {}}));
    CHECK(r.to_text() == "(  )( 4 )( 3 )( 1 4 )");
    CHECK(pipe_dream_from_rfc(r) == d);
    CHECK(r.weight() == d.weight());

    // Bijection RP(w) -> RFC(w^-1), weight preserving, for every w in S_4.
    for (const auto& w : all_permutations(4)) {
        auto dreams = reduced_pipe_dreams(w);
        auto rfcs = enumerate_rfc(w.inverse());
        std::set<RFC> image;
        for (const auto& dd : dreams) {
            RFC rr = rfc_from_pipe_dream(dd);
            CHECK(rr.weight() == dd.weight());
            CHECK(pipe_dream_from_rfc(rr) == dd);
            image.insert(rr);
        }
        CHECK(image == std::set<RFC>(rfcs.begin(), rfcs.end()));
    }
}

TEST_CASE("operators commute with the bijection on S_4 and 21543") {
    std::vector<Permutation> cases = all_permutations(4);
    cases.push_back(Permutation({2, 1, 5, 4, 3}));
    for (const auto& w : cases) {
        const int n = w.size();
        for (const auto& d : reduced_pipe_dreams(w)) {
            RFC r = rfc_from_pipe_dream(d);
            for (int i = 1; i < n; ++i) {
                auto fd = lower(d, i);
                auto fr = lower(r, i);
                CHECK(fd.has_value() == fr.has_value());
                if (fd) CHECK(rfc_from_pipe_dream(*fd) == *fr);
                auto ed = raise(d, i);
                auto er = raise(r, i);
                CHECK(ed.has_value() == er.has_value());
                if (ed) CHECK(rfc_from_pipe_dream(*ed) == *er);
            }
        }
    }
}
