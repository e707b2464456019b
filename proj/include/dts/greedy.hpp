#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dts/core.hpp"

namespace dts::greedy {

// Fills R(n, k) row by row: each empty cell receives the smallest positive
// integer that keeps the grid a valid partial set. Deterministic.
TriangleSet set_greedy(int n, int k);

// Fills R(n, k) column by column (first empty cell of the leftmost
// incomplete column). After column 1, r_{i1} = i for all rows.
TriangleSet transversal_greedy(int n, int k);

struct WythoffPair {
    std::int64_t index = 0;  // 1-based
    Value u = 0;
    Value v = 0;  // v = u + index

    bool operator==(const WythoffPair&) const = default;
};

// Pairs by the recursion: u_1 = 1, v_i = u_i + i, u_{i+1} = smallest
// positive integer not among the previous u's and v's.
std::vector<WythoffPair> wythoff_pairs(std::int64_t count);

// Closed form u_i = floor((1 + sqrt(5)) i / 2), evaluated in integer
// arithmetic (no floating point near half-integers).
WythoffPair wythoff_connell(std::int64_t i);

// Retrograde analysis of the two-pile game: a position is safe to leave iff
// every move from it reaches an unsafe one. Returns all safe (u, v) with
// u <= v <= r_max, including (0, 0). Oracle scale: r_max <= 2000.
std::vector<std::pair<Value, Value>> wythoff_winning_positions_bruteforce(Value r_max);

struct ColumnCheck {
    bool ok = true;
    std::int64_t first_bad_index = 0;  // 1-based row, 0 when ok
    Value expected = 0;                // u_i from the recursion
    Value actual = 0;                  // r_{i2} - n - i from the greedy grid
};

// Runs transversal_greedy(n, 2) and checks r_{i2} = n + i + u_i for every
// row against the recursion pairs.
ColumnCheck wythoff_column_check(int n);

}  // namespace dts::greedy
