#pragma once

// Brute-force reference implementations used only by tests. They share no
// logic with the library paths they check: duplicate detection is a plain
// O(d^2) pairwise scan and enumeration carries no pruning or canonical form.

#include <algorithm>
#include <vector>

#include "dts/core.hpp"
#include "dts/grid.hpp"

namespace oracles {

// Validity by definition: normalized equal-length blocks whose pooled
// positive differences contain no repeats.
inline bool naive_valid(const std::vector<dts::Block>& blocks) {
    if (blocks.empty()) return false;
    const std::size_t len = blocks.front().size();
    if (len == 0) return false;
    for (const auto& b : blocks) {
        if (b.size() != len || b.front() != 0) return false;
        for (std::size_t j = 1; j < b.size(); ++j)
            if (b[j] <= b[j - 1]) return false;
    }
    std::vector<dts::Value> diffs;
    for (const auto& b : blocks)
        for (std::size_t lo = 0; lo + 1 < b.size(); ++lo)
            for (std::size_t hi = lo + 1; hi < b.size(); ++hi) diffs.push_back(b[hi] - b[lo]);
    for (std::size_t a = 0; a < diffs.size(); ++a)
        for (std::size_t b2 = a + 1; b2 < diffs.size(); ++b2)
            if (diffs[a] == diffs[b2]) return false;
    return true;
}

// All normalized blocks 0 < a_1 < ... < a_k <= m, in lexicographic order.
inline std::vector<dts::Block> all_blocks(int k, dts::Value m) {
    std::vector<dts::Block> out;
    dts::Block cur(static_cast<std::size_t>(k) + 1, 0);
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == k + 1) {
            out.push_back(cur);
            return;
        }
        for (dts::Value v = cur[static_cast<std::size_t>(idx) - 1] + 1; v <= m; ++v) {
            cur[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1);
        }
    };
    if (k == 0) out.push_back({0});
    else rec(rec, 1);
    return out;
}

// Existence by full enumeration over unordered block multisets, with no
// canonical-form or ledger pruning.
inline bool naive_exists_dts(int n, int k, dts::Value m) {
    const std::vector<dts::Block> candidates = all_blocks(k, m);
    std::vector<dts::Block> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(chosen.size()) == n) return naive_valid(chosen);
        for (std::size_t i = from; i < candidates.size(); ++i) {
            chosen.push_back(candidates[i]);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

// Generate-and-filter completions of a partial grid: every tuple of values
// in [0, s]^e for the e empty cells, kept iff the full rows are strictly
// increasing from 0 and the pooled differences have no repeats.
inline std::vector<std::vector<dts::Value>> naive_completions(const dts::CellGrid& grid, dts::Value s) {
    std::vector<std::pair<int, int>> empties;
    for (int i = 0; i < grid.rows(); ++i)
        for (int j = 1; j < grid.cols(); ++j)
            if (!grid.filled(i, j)) empties.emplace_back(i, j);

    std::vector<std::vector<dts::Value>> rows(static_cast<std::size_t>(grid.rows()));
    std::vector<std::vector<dts::Value>> found;
    std::vector<dts::Value> tuple(empties.size());

    auto build_and_check = [&]() {
        for (int i = 0; i < grid.rows(); ++i) {
            auto& row = rows[static_cast<std::size_t>(i)];
            row.clear();
            for (int j = 0; j < grid.cols(); ++j) row.push_back(grid.filled(i, j) ? grid.at(i, j) : -1);
        }
        for (std::size_t e = 0; e < empties.size(); ++e)
            rows[static_cast<std::size_t>(empties[e].first)][static_cast<std::size_t>(empties[e].second)] =
                tuple[e];
        if (naive_valid(rows)) found.push_back(tuple);
    };
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == empties.size()) {
            build_and_check();
            return;
        }
        for (dts::Value v = 0; v <= s; ++v) {
            tuple[idx] = v;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace oracles
