#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dts/core.hpp"
#include "dts/grid.hpp"
#include "dts/rng.hpp"

namespace dts::heuristics {

struct Cell {
    int row = 0;  // 0-based
    int col = 0;  // 1..k; column 0 holds the fixed zeros and is never deleted

    bool operator==(const Cell&) const = default;
};

using CellTemplate = std::vector<Cell>;

// h1 empties a single cell, h2 an entire row, h3 one cell per row.
enum class Family { SingleCell, Row, Transversal };

Family family_from_name(const std::string& name);  // "h1" | "h2" | "h3"
std::string family_name(Family family);

struct HeuristicConfig {
    Family family = Family::SingleCell;
    std::int64_t iterations = 1;
    std::uint64_t seed = 0;
    std::int64_t completion_cap = 100000;
    std::optional<Value> target_scope;  // stop early once reached
};

// Uniform draw from the family on an n x (k+1) grid: a single cell, a full
// row, or one independently drawn column per row. The transversal family is
// sampled, never materialized (k^n members).
CellTemplate draw_template(Family family, Rng& rng, int n, int k);

// Empties the listed cells and releases their differences. Rejects
// out-of-bounds and column-0 cells. Returns the removed values for rollback.
std::vector<std::pair<Cell, Value>> delete_template(CellGrid& grid, const CellTemplate& t);

struct CompletionSet {
    std::vector<Cell> cells;                   // the empty cells, row-major
    std::vector<std::vector<Value>> fillings;  // one value per cell, aligned with cells
    bool exact = true;                         // false when truncated at the cap
};

// Backtracking over the empty cells in row-major order: every filled value
// respects in-row monotonicity, global difference distinctness, and
// value <= scope_bound. Stops at cap completions (exact flag cleared). With
// an rng, candidate values are tried in shuffled order so a truncated
// prefix is not biased toward small values.
CompletionSet enumerate_completions(const CellGrid& grid, Value scope_bound, std::int64_t cap,
                                    Rng* value_order_rng = nullptr);

// One delete-and-refill move on a complete grid: draw a template from the
// family, delete it, refill with a uniformly sampled completion bounded by
// the pre-deletion scope. Dead ends roll back to the original grid. Returns
// the scope after the move (never larger than before).
Value heuristic_step(CellGrid& grid, Family family, Rng& rng, std::int64_t cap);

struct ImprovementEvent {
    int stage = 0;  // pipeline stage index
    std::int64_t iteration = 0;
    Value scope = 0;
    std::uint64_t seed = 0;
};

struct HeuristicResult {
    TriangleSet best;
    std::vector<ImprovementEvent> trace;  // strictly decreasing scopes
};

// Runs config.iterations steps from a valid initial set. Fully reproducible
// from the seed.
HeuristicResult run_heuristic(const TriangleSet& initial, const HeuristicConfig& config);

// Feeds each stage's output to the next; the trace records the stage index
// of every improvement.
HeuristicResult run_pipeline(const TriangleSet& initial, const std::vector<HeuristicConfig>& stages);

// Parses "h1:1000,h3:500,h2:250" into stage configs; stage s gets seed
// base_seed + s.
std::vector<HeuristicConfig> parse_pipeline(const std::string& spec, std::uint64_t base_seed,
                                            std::int64_t completion_cap,
                                            std::optional<Value> target_scope);

// Independent restarts of the same pipeline, run on up to `jobs` threads.
// The coordinator keeps the best-scoped result; ties break toward the
// earliest stage list, so the answer does not depend on jobs.
HeuristicResult run_restarts(const TriangleSet& initial,
                             const std::vector<std::vector<HeuristicConfig>>& restarts, int jobs);

}  // namespace dts::heuristics
