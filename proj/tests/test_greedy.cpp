#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dts/greedy.hpp"

using namespace dts;
using namespace dts::greedy;

TEST_CASE("set_greedy hand-checked instances") {
    CHECK(set_greedy(1, 2).blocks == std::vector<Block>{{0, 1, 3}});
    CHECK(set_greedy(1, 1).blocks == std::vector<Block>{{0, 1}});

    const TriangleSet t = set_greedy(2, 2);
    CHECK(t.blocks == std::vector<Block>{{0, 1, 3}, {0, 4, 9}});
    CHECK(t.scope() == 9);
}

TEST_CASE("transversal_greedy hand-checked instances") {
    CHECK(transversal_greedy(1, 1).blocks == std::vector<Block>{{0, 1}});

    const TriangleSet t = transversal_greedy(2, 2);
    CHECK(t.blocks == std::vector<Block>{{0, 1, 4}, {0, 2, 7}});
    CHECK(t.scope() == 7);

    CHECK(transversal_greedy(4, 2).scope() == 14);
}

TEST_CASE("both algorithms stay verifier-valid across the parameter grid") {
    for (int n = 1; n <= 50; n += (n < 8 ? 1 : 7)) {
        for (int k = 1; k <= 8; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const TriangleSet a = set_greedy(n, k);
            const TriangleSet b = transversal_greedy(n, k);
            CHECK(verify_triangle_set(a).valid());
            CHECK(verify_triangle_set(b).valid());
            // Any valid set sits above the best lower bound.
            const Value bound = best_lower_bound(n, k).best;
            CHECK(a.scope() >= bound);
            CHECK(b.scope() >= bound);
        }
    }
}

TEST_CASE("k = 1 yields blocks {0, i} with scope n") {
    for (int n : {1, 2, 5, 17, 50}) {
        for (const TriangleSet& t : {set_greedy(n, 1), transversal_greedy(n, 1)}) {
            CHECK(t.scope() == n);
            for (int i = 0; i < n; ++i) CHECK(t.blocks[static_cast<std::size_t>(i)] == Block{0, i + 1});
        }
    }
}

TEST_CASE("transversal first column is 1..n") {
    const TriangleSet t = transversal_greedy(9, 3);
    for (int i = 0; i < 9; ++i) CHECK(t.blocks[static_cast<std::size_t>(i)][1] == i + 1);
}

TEST_CASE("wythoff recursion pairs") {
    CHECK(wythoff_pairs(1) == std::vector<WythoffPair>{{1, 1, 2}});
    CHECK(wythoff_pairs(3) == std::vector<WythoffPair>{{1, 1, 2}, {2, 3, 5}, {3, 4, 7}});
    CHECK(wythoff_pairs(5).back() == WythoffPair{5, 8, 13});
}

TEST_CASE("wythoff closed form") {
    CHECK(wythoff_connell(1) == WythoffPair{1, 1, 2});
    CHECK(wythoff_connell(2) == WythoffPair{2, 3, 5});
    CHECK(wythoff_connell(3) == WythoffPair{3, 4, 7});
}

TEST_CASE("recursion matches closed form over a long prefix") {
    const auto pairs = wythoff_pairs(20000);
    for (const auto& p : pairs) CHECK(p == wythoff_connell(p.index));
}

TEST_CASE("retrograde game analysis matches the recursion") {
    CHECK(wythoff_winning_positions_bruteforce(0) ==
          std::vector<std::pair<Value, Value>>{{0, 0}});
    CHECK(wythoff_winning_positions_bruteforce(2) ==
          std::vector<std::pair<Value, Value>>{{0, 0}, {1, 2}});
    CHECK(wythoff_winning_positions_bruteforce(7) ==
          std::vector<std::pair<Value, Value>>{{0, 0}, {1, 2}, {3, 5}, {4, 7}});

    const Value r_max = 300;
    const auto safe = wythoff_winning_positions_bruteforce(r_max);
    std::vector<std::pair<Value, Value>> expected{{0, 0}};
    for (const auto& p : wythoff_pairs(r_max)) {
        if (p.v > r_max) break;
        expected.emplace_back(p.u, p.v);
    }
    CHECK(safe == expected);

    CHECK_THROWS_AS(wythoff_winning_positions_bruteforce(2001), std::invalid_argument);
}

TEST_CASE("column-2 identity r_i2 = n + i + u_i") {
    CHECK(wythoff_column_check(1).ok);
    CHECK(wythoff_column_check(2).ok);
    CHECK(wythoff_column_check(50).ok);
    CHECK(wythoff_column_check(200).ok);
}

TEST_CASE("k = 2 scope identity and ratio") {
    for (int n = 1; n <= 200; ++n) {
        const Value scope = transversal_greedy(n, 2).scope();
        CHECK(scope == 2 * n + wythoff_connell(n).u);
    }
    const double ratio = static_cast<double>(transversal_greedy(400, 2).scope()) / (3.0 * 400);
    CHECK(ratio > 1.19);
    CHECK(ratio < 1.22);
}
