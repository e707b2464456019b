#include "dts/greedy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dts/grid.hpp"
#include "dts/intmath.hpp"

namespace dts::greedy {

namespace {

Value fill_smallest(CellGrid& grid, int i, int j) {
    Value c = 0;
    for (int l = j - 1; l >= 0; --l) {
        if (grid.filled(i, l)) {
            c = grid.at(i, l);
            break;
        }
    }
    const DiffLedger& ledger = grid.ledger();
    for (++c;; ++c) {
        // c - 0 is always one of the new differences, so a used c can be
        // skipped without the full placement check.
        if (c <= ledger.capacity() && ledger.contains(c)) continue;
        if (grid.can_place(i, j, c)) {
            grid.place(i, j, c);
            return c;
        }
    }
}

}  // namespace

TriangleSet set_greedy(int n, int k) {
    CellGrid grid(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= k; ++j) fill_smallest(grid, i, j);
    return grid.to_triangle_set();
}

TriangleSet transversal_greedy(int n, int k) {
    CellGrid grid(n, k);
    for (int j = 1; j <= k; ++j)
        for (int i = 0; i < n; ++i) fill_smallest(grid, i, j);
    return grid.to_triangle_set();
}

std::vector<WythoffPair> wythoff_pairs(std::int64_t count) {
    if (count < 1) throw std::invalid_argument("wythoff_pairs: need count >= 1");

    std::vector<WythoffPair> pairs;
    pairs.reserve(static_cast<std::size_t>(count));
    // v_count < 3 * count + 4 comfortably bounds every value generated.
    std::vector<bool> taken(static_cast<std::size_t>(3 * count + 4), false);
    Value mex = 1;
    for (std::int64_t i = 1; i <= count; ++i) {
        const Value u = mex;
        const Value v = u + i;
        pairs.push_back({i, u, v});
        taken[static_cast<std::size_t>(u)] = true;
        taken[static_cast<std::size_t>(v)] = true;
        while (taken[static_cast<std::size_t>(mex)]) ++mex;
    }
    return pairs;
}

WythoffPair wythoff_connell(std::int64_t i) {
    if (i < 1) throw std::invalid_argument("wythoff_connell: need i >= 1");
    // floor((1 + sqrt(5)) i / 2) = (i + isqrt(5 i^2)) / 2: sqrt(5 i^2) is
    // irrational, so flooring the inner square root first is exact.
    const Value root = static_cast<Value>(isqrt(u128(5) * u128(i) * u128(i)));
    const Value u = (i + root) / 2;
    return {i, u, u + i};
}

std::vector<std::pair<Value, Value>> wythoff_winning_positions_bruteforce(Value r_max) {
    if (r_max < 0 || r_max > 2000)
        throw std::invalid_argument("wythoff_winning_positions_bruteforce: r_max must be in [0, 2000]");

    constexpr Value kNone = std::numeric_limits<Value>::max();
    // At most one safe pair exists per coordinate, so a single slot each.
    std::vector<Value> safe_min_for_max(static_cast<std::size_t>(r_max) + 1, kNone);
    std::vector<Value> safe_max_for_min(static_cast<std::size_t>(r_max) + 1, kNone);
    std::vector<Value> diag_min(static_cast<std::size_t>(r_max) + 1, kNone);
    std::vector<std::pair<Value, Value>> safe;

    for (Value v = 0; v <= r_max; ++v) {
        for (Value u = 0; u <= v; ++u) {
            // Attacked iff some already-safe position is reachable: shrink
            // the u pile, shrink the v pile (possibly below u), or move
            // along the diagonal.
            const bool attacked = (safe_min_for_max[static_cast<std::size_t>(v)] < u) ||
                                  (safe_max_for_min[static_cast<std::size_t>(u)] < v) ||
                                  (safe_min_for_max[static_cast<std::size_t>(u)] < u) ||
                                  (diag_min[static_cast<std::size_t>(v - u)] < u);
            if (attacked) continue;
            safe.emplace_back(u, v);
            safe_min_for_max[static_cast<std::size_t>(v)] = std::min(safe_min_for_max[static_cast<std::size_t>(v)], u);
            safe_max_for_min[static_cast<std::size_t>(u)] = std::min(safe_max_for_min[static_cast<std::size_t>(u)], v);
            diag_min[static_cast<std::size_t>(v - u)] = std::min(diag_min[static_cast<std::size_t>(v - u)], u);
        }
    }
    return safe;
}

ColumnCheck wythoff_column_check(int n) {
    if (n < 1) throw std::invalid_argument("wythoff_column_check: need n >= 1");

    const TriangleSet t = transversal_greedy(n, 2);
    const std::vector<WythoffPair> pairs = wythoff_pairs(n);
    for (int i = 1; i <= n; ++i) {
        const Value r_i2 = t.blocks[static_cast<std::size_t>(i - 1)][2];
        const Value actual = r_i2 - n - i;
        const Value expected = pairs[static_cast<std::size_t>(i - 1)].u;
        if (actual != expected) return {false, i, expected, actual};
    }
    return {};
}

}  // namespace dts::greedy
