#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pdcrystal/crystal.hpp>
#include <pdcrystal/polynomial.hpp>

#include <algorithm>
#include <map>
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

Composition minus_alpha(Composition wt, int i) {
    --wt[i - 1];
    ++wt[i];
    return wt;
}

}  // namespace

TEST_CASE("row pairing walkthroughs") {
    // (1,3) pairs with (2,3); (1,4) and (1,1) stay unpaired.
    PipeDream d1(5, {{1, 1}, {1, 3}, {1, 4}, {2, 3}});
    auto p1 = pair_row(d1, 1);
    CHECK(p1.row == 1);
    REQUIRE(p1.pairs.size() == 1);
    CHECK(p1.pairs[0].first == Cross{1, 3});
    CHECK(p1.pairs[0].second == Cross{2, 3});
    CHECK(p1.unpaired_upper == std::vector<Cross>{{1, 4}, {1, 1}});
    CHECK(p1.unpaired_lower.empty());

    // (1,4) has no partner weakly right; (1,1) pairs with (2,2).
    PipeDream d2(5, {{1, 1}, {1, 4}, {2, 2}, {3, 2}});
    auto p2 = pair_row(d2, 1);
    REQUIRE(p2.pairs.size() == 1);
    CHECK(p2.pairs[0].first == Cross{1, 1});
    CHECK(p2.pairs[0].second == Cross{2, 2});
    CHECK(p2.unpaired_upper == std::vector<Cross>{{1, 4}});

    // Empty row pairs nothing.
    auto p3 = pair_row(d2, 4);
    CHECK(p3.pairs.empty());
    CHECK(p3.unpaired_upper.empty());
    CHECK(p3.unpaired_lower.empty());
}

TEST_CASE("lowering fixtures") {
    PipeDream d(5, {{1, 1}, {1, 4}, {2, 2}, {3, 2}});
    auto f1 = lower(d, 1);
    REQUIRE(f1.has_value());
    CHECK(*f1 == PipeDream(5, {{1, 1}, {2, 2}, {2, 3}, {3, 2}}));

    // The cross jumps the fully crossed column to the far elbow.
    auto f2 = lower(*f1, 2);
    REQUIRE(f2.has_value());
    CHECK(*f2 == PipeDream(5, {{1, 1}, {2, 2}, {3, 1}, {3, 2}}));

    // All unpaired crosses blocked at the wall: lowering vanishes.
    CHECK_FALSE(lower(PipeDream(5, {{1, 1}, {1, 3}, {1, 4}, {2, 3}}), 1).has_value());
    CHECK_FALSE(lower(PipeDream(4, {}), 1).has_value());
    // The last row never lowers.
    CHECK_FALSE(lower(d, 4).has_value());
}

TEST_CASE("raising fixtures") {
    CHECK(raise(PipeDream(5, {{1, 1}, {2, 2}, {3, 1}, {3, 2}}), 2) ==
          PipeDream(5, {{1, 1}, {2, 2}, {2, 3}, {3, 2}}));
    CHECK_FALSE(raise(PipeDream(5, {{1, 1}, {1, 4}, {2, 2}, {3, 2}}), 1).has_value());
    CHECK_FALSE(raise(PipeDream(4, {}), 2).has_value());
}

TEST_CASE("highest and lowest weight detection") {
    CHECK(is_highest_weight(PipeDream(5, {{1, 1}, {1, 4}, {2, 2}, {3, 2}})));
    CHECK(is_highest_weight(PipeDream(5, {{1, 1}, {1, 3}, {1, 4}, {2, 3}})));
    CHECK(is_highest_weight(PipeDream(5, {{1, 1}, {1, 3}, {2, 2}, {2, 3}})));
    CHECK_FALSE(is_highest_weight(PipeDream(5, {{1, 1}, {2, 2}, {2, 3}, {3, 2}})));
    PipeDream empty(4, {});
    CHECK(is_highest_weight(empty));
    CHECK(is_lowest_weight(empty));
}

TEST_CASE("crystal graph of 21543") {
    CrystalGraph g = crystal_graph(Permutation({2, 1, 5, 4, 3}));
    CHECK(g.vertices.size() == 14);
    // 8+3+3 components carry 8+2+2 operator arrows; the big component
    // holds a commuting square, so the graph is one edge above a forest.
    CHECK(g.edges.size() == 12);

    auto comps = crystal_components(g);
    REQUIRE(comps.size() == 3);
    std::multiset<size_t> sizes;
    std::set<Composition> lambdas;
    for (const auto& c : comps) {
        sizes.insert(c.members.size());
        lambdas.insert(c.lambda);
        CHECK(is_partition(c.lambda));
        CHECK(is_highest_weight(c.highest));
        CHECK(c.highest.weight() == c.lambda);
    }
    CHECK(sizes == std::multiset<size_t>{3, 3, 8});
    CHECK(lambdas == std::set<Composition>{
                         {2, 1, 1, 0, 0}, {2, 2, 0, 0, 0}, {3, 1, 0, 0, 0}});
}

TEST_CASE("degenerate crystal graphs") {
    CrystalGraph id = crystal_graph(Permutation::identity(3));
    CHECK(id.vertices.size() == 1);
    CHECK(id.edges.empty());
    CHECK(crystal_components(id).size() == 1);

    CrystalGraph w0 = crystal_graph(Permutation({3, 2, 1}));
    CHECK(w0.vertices.size() == 1);
    CHECK(w0.edges.empty());
}

TEST_CASE("operators are mutually inverse and shift weight by alpha_i over S_4") {
    for (const auto& w : all_permutations(4)) {
        for (const auto& d : reduced_pipe_dreams(w)) {
            for (int i = 1; i < 4; ++i) {
                auto down = lower(d, i);
                if (down) {
                    CHECK(down->trace_pipes() == w);
                    CHECK(is_reduced(*down));
                    CHECK(down->weight() == minus_alpha(d.weight(), i));
                    CHECK(raise(*down, i) == d);
                }
                auto up = raise(d, i);
                if (up) {
                    CHECK(up->trace_pipes() == w);
                    CHECK(minus_alpha(up->weight(), i) == d.weight());
                    CHECK(lower(*up, i) == d);
                }
            }
        }
    }
}

TEST_CASE("highest weight vertices have partition weight with aligned columns") {
    for (const auto& w : all_permutations(4)) {
        for (const auto& d : reduced_pipe_dreams(w)) {
            if (!is_highest_weight(d)) continue;
            CHECK(is_partition(d.weight()));
            // Left-to-right column lists per row.
            std::vector<std::vector<int>> cols(d.n() + 1);
            for (const auto& c : d.crosses()) cols[c.row].push_back(c.col);
            for (auto& v : cols) std::sort(v.begin(), v.end());
            // The l-th cross moves weakly right going down the rows...
            for (int i = 1; i + 1 <= d.n(); ++i)
                for (size_t l = 0; l < cols[i].size() && l < cols[i + 1].size(); ++l)
                    CHECK(cols[i][l] <= cols[i + 1][l]);
            // ...and strictly right after shifting row i by i-1.
            for (int i = 1; i + 1 <= d.n(); ++i)
                for (size_t l = 0; l < cols[i].size() && l < cols[i + 1].size(); ++l)
                    CHECK(cols[i][l] + i < cols[i + 1][l] + i + 1);
        }
    }
}

TEST_CASE("each component has a unique highest weight vertex reachable downward") {
    for (const auto& w : all_permutations(4)) {
        for (const auto& comp : crystal_components(w)) {
            int hw = 0;
            for (const auto& d : comp.members)
                if (is_highest_weight(d)) ++hw;
            CHECK(hw == 1);
            // Lowering closure from the highest vertex covers the component.
            std::set<PipeDream> seen{comp.highest};
            std::vector<PipeDream> frontier{comp.highest};
            while (!frontier.empty()) {
                PipeDream cur = frontier.back();
                frontier.pop_back();
                for (int i = 1; i < 4; ++i)
                    if (auto down = lower(cur, i); down && seen.insert(*down).second)
                        frontier.push_back(*down);
            }
            std::set<PipeDream> members(comp.members.begin(), comp.members.end());
            CHECK(seen == members);
        }
    }
}

TEST_CASE("crystal edges are chute moves") {
    for (const auto& w : all_permutations(4)) {
        CrystalGraph g = crystal_graph(w);
        for (const auto& e : g.edges) {
            auto general = chute_moves(g.vertices[e.source]);
            CHECK(std::find(general.begin(), general.end(), g.vertices[e.target]) !=
                  general.end());
        }
    }
}

TEST_CASE("dot and json exports") {
    CrystalGraph g = crystal_graph(Permutation({2, 1, 5, 4, 3}));
    std::string dot = g.to_dot();
    CHECK(dot.rfind("digraph crystal {", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '\n') > 14);
    size_t arrows = 0;
    for (size_t pos = dot.find(" -> "); pos != std::string::npos;
         pos = dot.find(" -> ", pos + 1))
        ++arrows;
    CHECK(arrows == 12);
    // Deterministic output.
    CHECK(g.to_dot() == crystal_graph(Permutation({2, 1, 5, 4, 3})).to_dot());
    CHECK(g.to_json() == crystal_graph(Permutation({2, 1, 5, 4, 3})).to_json());
}
