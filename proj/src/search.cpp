#include "dts/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "dts/greedy.hpp"

namespace dts::search {

namespace {

enum class Step { Found, Exhausted, Budget };

struct Dfs {
    int n, k;
    Value m;
    bool gap_pruning;
    std::uint64_t budget;  // 0 = unlimited
    std::uint64_t nodes = 0;

    // Sharding: at depth shard_depth, only prefixes with index % shard_count
    // == shard_index are descended into. Nodes deeper than the prefix are
    // the ones counted.
    int shard_depth = 0;  // 0 = unsharded
    std::int64_t shard_index = 0;
    std::int64_t shard_count = 1;
    std::int64_t prefix_counter = 0;

    std::vector<std::vector<Value>> blocks;
    DiffLedger ledger;
    TriangleSet witness;

    Dfs(const SearchProblem& p)
        : n(p.n), k(p.k), m(p.max_scope), gap_pruning(p.use_gap_pruning), budget(p.node_budget),
          ledger(std::max<Value>(p.max_scope, 1)) {
        blocks.assign(static_cast<std::size_t>(n), {});
        for (auto& b : blocks) b.reserve(static_cast<std::size_t>(k) + 1);
        blocks[0].push_back(0);
    }

    int depth(int bi) const {
        // Filled non-zero cells: full blocks before bi plus the tail of bi.
        return bi * k + static_cast<int>(blocks[static_cast<std::size_t>(bi)].size()) - 1;
    }

    // Smallest possible total increment to append `need` more elements: the
    // `need` smallest unused differences (each consecutive gap is a distinct
    // unused difference).
    Value min_remaining(int need) const {
        if (!gap_pruning) return need;
        Value sum = 0;
        int found = 0;
        for (Value d = 1; d <= m && found < need; ++d) {
            if (!ledger.contains(d)) {
                sum += d;
                ++found;
            }
        }
        if (found < need) return m + 1;  // cannot finish at all
        return sum;
    }

    Step place(int bi) {
        auto& block = blocks[static_cast<std::size_t>(bi)];
        const int j = static_cast<int>(block.size());  // next index to fill, 1..k

        Value lo = block.back() + 1;
        if (j == 1 && bi > 0) lo = std::max(lo, blocks[static_cast<std::size_t>(bi) - 1][1] + 1);
        const Value hi = m - min_remaining(k - j);

        for (Value v = lo; v <= hi; ++v) {
            // All differences against this block must be free.
            int inserted = 0;
            bool ok = true;
            for (int t = 0; t < j; ++t) {
                if (!ledger.insert(v - block[static_cast<std::size_t>(t)])) {
                    ok = false;
                    break;
                }
                ++inserted;
            }
            if (!ok) {
                for (int t = 0; t < inserted; ++t) ledger.remove(v - block[static_cast<std::size_t>(t)]);
                continue;
            }
            block.push_back(v);

            if (shard_depth == 0 || bi * k + j > shard_depth) {
                ++nodes;
                if (budget && nodes > budget) {
                    unplace(bi);
                    return Step::Budget;
                }
            }

            Step result = descend(bi);
            unplace(bi);
            if (result != Step::Exhausted) return result;
        }
        return Step::Exhausted;
    }

    void unplace(int bi) {
        auto& block = blocks[static_cast<std::size_t>(bi)];
        const Value v = block.back();
        block.pop_back();
        for (std::size_t t = 0; t < block.size(); ++t) ledger.remove(v - block[t]);
    }

    Step descend(int bi) {
        auto& block = blocks[static_cast<std::size_t>(bi)];
        const bool block_done = static_cast<int>(block.size()) == k + 1;

        // Reflection canonicalization, checked once per completed block:
        // first gap must not exceed last gap.
        if (block_done && block[1] - block[0] > block[static_cast<std::size_t>(k)] - block[static_cast<std::size_t>(k) - 1])
            return Step::Exhausted;

        if (shard_depth > 0 && depth(bi) == shard_depth) {
            const std::int64_t idx = prefix_counter++;
            if (idx % shard_count != shard_index) return Step::Exhausted;
        }
        return search_below(bi, block_done);
    }

    Step search_below(int bi, bool block_done) {
        if (!block_done) return place(bi);
        if (bi + 1 == n) {
            witness.blocks = blocks;
            return Step::Found;
        }
        blocks[static_cast<std::size_t>(bi) + 1].push_back(0);
        const Step result = place(bi + 1);
        blocks[static_cast<std::size_t>(bi) + 1].clear();
        return result;
    }
};

}  // namespace

SearchOutcome exists_dts(const SearchProblem& p) {
    if (p.n < 1 || p.k < 1) throw std::invalid_argument("exists_dts: need n, k >= 1");
    if (p.max_scope < 0) throw std::invalid_argument("exists_dts: negative scope cap");
    if (p.shard) {
        if (p.shard->count < 1 || p.shard->index < 0 || p.shard->index >= p.shard->count)
            throw std::invalid_argument("exists_dts: shard index out of range");
        if (p.shard->depth < 1) throw std::invalid_argument("exists_dts: shard depth must be >= 1");
    }

    const auto start = std::chrono::steady_clock::now();
    Dfs dfs(p);
    if (p.shard) {
        dfs.shard_depth = std::min(p.shard->depth, p.n * p.k);
        dfs.shard_index = p.shard->index;
        dfs.shard_count = p.shard->count;
    }

    const Step step = dfs.place(0);

    SearchOutcome out;
    out.nodes = dfs.nodes;
    out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    switch (step) {
        case Step::Found: {
            out.status = SearchStatus::Found;
            const Verdict v = verify_triangle_set(dfs.witness);
            if (!v.valid() || v.scope > p.max_scope)
                throw std::logic_error("exists_dts: witness failed verification: " + v.describe());
            out.witness = std::move(dfs.witness);
            break;
        }
        case Step::Exhausted:
            out.status = SearchStatus::Exhausted;
            break;
        case Step::Budget:
            out.status = SearchStatus::BudgetExceeded;
            break;
    }
    return out;
}

SearchOutcome shard_search(const SearchProblem& p) {
    if (!p.shard) throw std::invalid_argument("shard_search: problem has no shard");
    return exists_dts(p);
}

SearchOutcome parallel_exists_dts(SearchProblem p, int jobs, int depth) {
    if (jobs < 1) throw std::invalid_argument("parallel_exists_dts: need jobs >= 1");
    if (jobs == 1 && !p.shard) return exists_dts(p);

    const auto start = std::chrono::steady_clock::now();
    std::vector<SearchOutcome> outcomes(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) {
        SearchProblem shard_problem = p;
        shard_problem.shard = Shard{depth, i, jobs};
        workers.emplace_back([&outcomes, i, shard_problem] {
            outcomes[static_cast<std::size_t>(i)] = exists_dts(shard_problem);
        });
    }
    for (auto& w : workers) w.join();

    SearchOutcome merged;
    merged.status = SearchStatus::Exhausted;
    for (const auto& out : outcomes) {
        merged.nodes += out.nodes;
        if (out.status == SearchStatus::Found && merged.status != SearchStatus::Found) {
            merged.status = SearchStatus::Found;
            merged.witness = out.witness;
        } else if (out.status == SearchStatus::BudgetExceeded && merged.status == SearchStatus::Exhausted) {
            merged.status = SearchStatus::BudgetExceeded;
        }
    }
    merged.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return merged;
}

MValue compute_m(int n, int k, std::uint64_t node_budget, Value user_lower) {
    if (n < 1 || k < 1) throw std::invalid_argument("compute_m: need n, k >= 1");

    MValue result;
    Value m = std::max(best_lower_bound(n, k).best, user_lower);
    std::uint64_t remaining = node_budget;

    while (true) {
        SearchProblem p;
        p.n = n;
        p.k = k;
        p.max_scope = m;
        p.node_budget = remaining;
        const SearchOutcome out = exists_dts(p);
        result.nodes += out.nodes;

        if (out.status == SearchStatus::Found) {
            result.exact = m;
            result.lower = m;
            result.upper = m;
            return result;
        }
        if (out.status == SearchStatus::BudgetExceeded) {
            result.lower = m;
            result.upper = dts::greedy::transversal_greedy(n, k).scope();
            return result;
        }
        if (node_budget) {
            remaining -= std::min<std::uint64_t>(out.nodes, remaining);
            if (remaining == 0) {
                result.lower = m + 1;
                result.upper = dts::greedy::transversal_greedy(n, k).scope();
                return result;
            }
        }
        ++m;
    }
}

}  // namespace dts::search
