#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dts/core.hpp"

namespace dts::search {

// Bump when the canonical form or prefix enumeration order changes:
// nonexistence certificates cite it.
inline constexpr const char* kCanonicalizationVersion = "dts-canon-1";

struct Shard {
    int depth = 1;           // prefix depth, in filled cells
    std::int64_t index = 0;  // 0 <= index < count
    std::int64_t count = 1;

    bool operator==(const Shard&) const = default;
};

struct SearchProblem {
    int n = 1;
    int k = 1;
    Value max_scope = 0;
    std::optional<Shard> shard;
    std::uint64_t node_budget = 0;  // 0 = unlimited
    // Lower-bound prune on the sum of the smallest unused differences.
    // Disabling it keeps the search complete but slower; the two settings
    // must agree, which the tests exploit.
    bool use_gap_pruning = true;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<TriangleSet> witness;  // verified, scope <= max_scope
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0;
};

// Depth-first search over canonical forms only: blocks ordered by their
// first nonzero element, each block reflection-normalized (first difference
// <= last difference). Exhausted is a proof that no (n, k) set of scope
// <= max_scope exists; a blown budget is reported distinctly, never as
// nonexistence.
SearchOutcome exists_dts(const SearchProblem& p);

// Searches only the subtrees under canonical prefixes of depth p.shard->depth
// whose enumeration index is congruent to p.shard->index mod p.shard->count.
// The union of all shards is equivalent to the unsharded search. Node counts
// cover the post-prefix subtrees only.
SearchOutcome shard_search(const SearchProblem& p);

// Partitions the tree into `jobs` depth-`depth` shards, runs them on that
// many threads, and merges: any witness wins (lowest shard index on ties),
// all-exhausted proves nonexistence, otherwise the budget was hit. The
// merged outcome is deterministic for fixed (jobs, depth).
SearchOutcome parallel_exists_dts(SearchProblem p, int jobs, int depth);

struct MValue {
    std::optional<Value> exact;
    Value lower = 0;  // smallest scope not yet excluded
    Value upper = 0;  // best constructive upper bound when inexact
    std::uint64_t nodes = 0;

    bool operator==(const MValue&) const = default;
};

// Iterates the scope cap upward from max(best_lower_bound(n, k).best,
// user_lower); the first satisfiable cap is m(n, k). On budget exhaustion
// returns the bracketing interval instead.
MValue compute_m(int n, int k, std::uint64_t node_budget = 0, Value user_lower = 0);

}  // namespace dts::search
