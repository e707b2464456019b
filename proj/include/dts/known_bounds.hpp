#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dts/core.hpp"

namespace dts::tables {

// One catalog row: the improved upper bound on m(n, k) alongside the best
// previously published bound and its source. Cells that are not clearly
// legible in the source table are left out rather than guessed.
struct KnownBoundEntry {
    int n = 0;
    int k = 0;
    Value improved = 0;
    Value previous = 0;
    const char* previous_source = "";  // Klove | Chen-Fan-Jin | Chen
};

std::span<const KnownBoundEntry> known_upper_bounds();

const KnownBoundEntry* find_known_bound(int n, int k);

enum class CompareStatus { MatchedPublished, AbovePublished, ImprovedOnPublished };

struct ComparisonRow {
    KnownBoundEntry entry;
    Value local = 0;
    CompareStatus status = CompareStatus::MatchedPublished;
};

// Pairs locally achieved scopes with catalog entries; (n, k) keys without a
// catalog entry are skipped. Rows come back sorted by (n, k). This is a
// target ledger, not a gate: no status is an error.
std::vector<ComparisonRow> compare_with_known(
    const std::vector<std::pair<std::pair<int, int>, Value>>& local_results);

std::string format_comparison(const std::vector<ComparisonRow>& rows);
std::string format_catalog();

}  // namespace dts::tables
