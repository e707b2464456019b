#include "dts/heuristics.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace dts::heuristics {

Family family_from_name(const std::string& name) {
    if (name == "h1") return Family::SingleCell;
    if (name == "h2") return Family::Row;
    if (name == "h3") return Family::Transversal;
    throw std::invalid_argument("unknown heuristic family '" + name + "' (expected h1, h2, or h3)");
}

std::string family_name(Family family) {
    switch (family) {
        case Family::SingleCell: return "h1";
        case Family::Row: return "h2";
        case Family::Transversal: return "h3";
    }
    return "?";
}

std::vector<std::pair<Cell, Value>> delete_template(CellGrid& grid, const CellTemplate& t) {
    if (t.empty()) throw std::invalid_argument("delete_template: empty template");
    for (const Cell& c : t) {
        if (c.row < 0 || c.row >= grid.rows() || c.col < 0 || c.col >= grid.cols())
            throw std::invalid_argument("delete_template: cell (" + std::to_string(c.row) + "," +
                                        std::to_string(c.col) + ") out of bounds");
        if (c.col == 0) throw std::invalid_argument("delete_template: column 0 holds fixed zeros");
    }
    std::vector<std::pair<Cell, Value>> removed;
    removed.reserve(t.size());
    for (const Cell& c : t) {
        if (!grid.filled(c.row, c.col)) continue;
        removed.emplace_back(c, grid.clear_cell(c.row, c.col));
    }
    return removed;
}

namespace {

struct CompletionSearch {
    CellGrid grid;
    Value bound;
    std::int64_t cap;
    Rng* rng;
    CompletionSet out;
    std::vector<Value> current;
    std::vector<Value> right_limit;  // per empty cell: nearest originally-filled right value, or bound+1

    bool descend(std::size_t idx) {  // returns false once the cap is hit
        if (idx == out.cells.size()) {
            out.fillings.push_back(current);
            return static_cast<std::int64_t>(out.fillings.size()) < cap;
        }
        const Cell c = out.cells[idx];

        Value lo = 1;
        for (int l = c.col - 1; l >= 0; --l) {
            if (grid.filled(c.row, l)) {
                lo = grid.at(c.row, l) + 1;
                break;
            }
        }
        const Value hi = std::min(bound, right_limit[idx] - 1);
        if (hi < lo) return true;

        std::vector<Value> candidates;
        candidates.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (Value v = lo; v <= hi; ++v) candidates.push_back(v);
        if (rng) rng->shuffle(candidates);

        for (Value v : candidates) {
            if (!grid.can_place(c.row, c.col, v)) continue;
            grid.place(c.row, c.col, v);
            current[idx] = v;
            const bool keep_going = descend(idx + 1);
            grid.clear_cell(c.row, c.col);
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

CellTemplate draw_template(Family family, Rng& rng, int n, int k) {
    CellTemplate t;
    switch (family) {
        case Family::SingleCell: {
            const auto idx = rng.below(static_cast<std::uint64_t>(n) * k);
            t.push_back({static_cast<int>(idx / static_cast<std::uint64_t>(k)),
                         1 + static_cast<int>(idx % static_cast<std::uint64_t>(k))});
            break;
        }
        case Family::Row: {
            const int row = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            for (int j = 1; j <= k; ++j) t.push_back({row, j});
            break;
        }
        case Family::Transversal: {
            for (int i = 0; i < n; ++i)
                t.push_back({i, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)))});
            break;
        }
    }
    return t;
}

CompletionSet enumerate_completions(const CellGrid& grid, Value scope_bound, std::int64_t cap,
                                    Rng* value_order_rng) {
    if (cap < 1) throw std::invalid_argument("enumerate_completions: cap must be >= 1");
    if (scope_bound < grid.scope())
        throw std::invalid_argument("enumerate_completions: scope bound below current maximum entry");

    CompletionSearch search{grid, scope_bound, cap, value_order_rng, {}, {}, {}};
    for (int i = 0; i < grid.rows(); ++i)
        for (int j = 1; j < grid.cols(); ++j)
            if (!grid.filled(i, j)) search.out.cells.push_back({i, j});
    search.current.resize(search.out.cells.size());

    search.right_limit.reserve(search.out.cells.size());
    for (const Cell& c : search.out.cells) {
        Value limit = scope_bound + 1;
        for (int r = c.col + 1; r < grid.cols(); ++r) {
            if (grid.filled(c.row, r)) {
                limit = grid.at(c.row, r);
                break;
            }
        }
        search.right_limit.push_back(limit);
    }

    search.out.exact = search.descend(0);
    return search.out;
}

Value heuristic_step(CellGrid& grid, Family family, Rng& rng, std::int64_t cap) {
    if (!grid.complete()) throw std::invalid_argument("heuristic_step: grid must be complete");

    const Value s = grid.scope();
    const CellTemplate t = draw_template(family, rng, grid.rows(), grid.order());
    const auto removed = delete_template(grid, t);

    CompletionSet completions = enumerate_completions(grid, s, cap, &rng);
    if (completions.fillings.empty()) {
        for (const auto& [cell, value] : removed) grid.place(cell.row, cell.col, value);
        return s;
    }

    const auto pick = completions.fillings[rng.below(completions.fillings.size())];
    for (std::size_t i = 0; i < completions.cells.size(); ++i)
        grid.place(completions.cells[i].row, completions.cells[i].col, pick[i]);
    return grid.scope();
}

HeuristicResult run_heuristic(const TriangleSet& initial, const HeuristicConfig& config) {
    return run_pipeline(initial, {config});
}

HeuristicResult run_pipeline(const TriangleSet& initial, const std::vector<HeuristicConfig>& stages) {
    if (stages.empty()) throw std::invalid_argument("run_pipeline: no stages");
    for (const auto& stage : stages)
        if (stage.iterations < 1) throw std::invalid_argument("run_pipeline: iterations must be >= 1");

    CellGrid grid = CellGrid::from_triangle_set(initial);
    HeuristicResult result;
    Value best = grid.scope();

    for (std::size_t s = 0; s < stages.size(); ++s) {
        const HeuristicConfig& stage = stages[s];
        Rng rng(stage.seed);
        if (stage.target_scope && best <= *stage.target_scope) break;
        for (std::int64_t it = 1; it <= stage.iterations; ++it) {
            const Value scope = heuristic_step(grid, stage.family, rng, stage.completion_cap);
            if (scope < best) {
                best = scope;
                result.trace.push_back({static_cast<int>(s), it, scope, stage.seed});
            }
            if (stage.target_scope && best <= *stage.target_scope) break;
        }
    }

    result.best = grid.to_triangle_set();
    return result;
}

HeuristicResult run_restarts(const TriangleSet& initial,
                             const std::vector<std::vector<HeuristicConfig>>& restarts, int jobs) {
    if (restarts.empty()) throw std::invalid_argument("run_restarts: no restarts");
    if (jobs < 1) throw std::invalid_argument("run_restarts: need jobs >= 1");

    std::vector<HeuristicResult> results(restarts.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t r = next.fetch_add(1); r < restarts.size(); r = next.fetch_add(1))
            results[r] = run_pipeline(initial, restarts[r]);
    };
    std::vector<std::thread> pool;
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), restarts.size());
    for (std::size_t i = 0; i + 1 < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t best = 0;
    for (std::size_t r = 1; r < results.size(); ++r)
        if (results[r].best.scope() < results[best].best.scope()) best = r;
    return results[best];
}

std::vector<HeuristicConfig> parse_pipeline(const std::string& spec, std::uint64_t base_seed,
                                            std::int64_t completion_cap,
                                            std::optional<Value> target_scope) {
    std::vector<HeuristicConfig> stages;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t end = spec.find(',', pos);
        if (end == std::string::npos) end = spec.size();
        const std::string part = spec.substr(pos, end - pos);
        const std::size_t colon = part.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("pipeline stage '" + part + "' must look like h1:1000");
        HeuristicConfig cfg;
        cfg.family = family_from_name(part.substr(0, colon));
        cfg.iterations = std::stoll(part.substr(colon + 1));
        cfg.seed = base_seed + stages.size();
        cfg.completion_cap = completion_cap;
        cfg.target_scope = target_scope;
        stages.push_back(cfg);
        pos = end + 1;
    }
    if (stages.empty()) throw std::invalid_argument("pipeline spec is empty");
    return stages;
}

}  // namespace dts::heuristics
