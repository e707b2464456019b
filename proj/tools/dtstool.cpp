// dtstool: construct, improve, verify, and search difference triangle sets.
//
// Exit codes: 0 success (search: witness found), 1 search space exhausted,
// 2 invalid input, 3 verification failure, 4 budget exceeded.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dts/algebraic.hpp"
#include "dts/core.hpp"
#include "dts/greedy.hpp"
#include "dts/heuristics.hpp"
#include "dts/io.hpp"
#include "dts/known_bounds.hpp"
#include "dts/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExhausted = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitVerifyFailure = 3;
constexpr int kExitBudget = 4;

// Collects written artifacts and drops a manifest next to the first one.
class ArtifactSink {
public:
    ArtifactSink(std::string command, std::vector<std::string> parameters, std::uint64_t seed,
                 std::string manifest_path)
        : start_(std::chrono::steady_clock::now()), manifest_path_(std::move(manifest_path)) {
        manifest_.command = std::move(command);
        manifest_.parameters = std::move(parameters);
        manifest_.seed = seed;
    }

    void write(const std::string& path, const std::string& contents) {
        dts::io::write_file(path, contents);
        manifest_.artifact_hashes[path] = dts::io::fnv1a64_hex(contents);
        if (manifest_path_.empty()) manifest_path_ = path + ".manifest.json";
    }

    ~ArtifactSink() {
        if (manifest_.artifact_hashes.empty()) return;
        manifest_.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        try {
            dts::io::write_file(manifest_path_, dts::io::emit_manifest(manifest_));
        } catch (const std::exception& e) {
            std::cerr << "warning: could not write manifest: " << e.what() << '\n';
        }
    }

private:
    std::chrono::steady_clock::time_point start_;
    std::string manifest_path_;
    dts::io::RunManifest manifest_;
};

std::vector<std::string> collect_args(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) out.emplace_back(argv[i]);
    return out;
}

int run_construct(const std::string& algo, int n, int k, const std::string& out_path,
                  const std::string& json_path, const std::string& recipe_path, ArtifactSink& sink) {
    dts::TriangleSet t;
    if (algo == "set-greedy") {
        t = dts::greedy::set_greedy(n, k);
    } else if (algo == "transversal-greedy") {
        t = dts::greedy::transversal_greedy(n, k);
    } else if (algo == "asymptotic") {
        auto [set, recipe] = dts::algebraic::asymptotic_construct(n, k);
        t = std::move(set);
        if (!recipe_path.empty()) {
            nlohmann::json j{{"n", recipe.n},
                             {"k", recipe.k},
                             {"q", recipe.q},
                             {"packing_modulus", recipe.packing_modulus},
                             {"packing_block_size", recipe.packing_block_size},
                             {"reductions", recipe.reductions},
                             {"shortenings", recipe.shortenings}};
            if (recipe.p) j["p"] = *recipe.p;
            sink.write(recipe_path, j.dump(2) + "\n");
        }
    } else {
        std::cerr << "unknown algorithm '" << algo << "'\n";
        return kExitInvalidInput;
    }

    const std::string text = dts::io::emit_dts(t);
    std::cout << algo << " (" << n << "," << k << "): scope " << t.scope() << '\n';
    if (!out_path.empty()) sink.write(out_path, text);
    else std::cout << text;
    if (!json_path.empty())
        sink.write(json_path, dts::io::emit_dts_json({t, algo, 0}));
    return kExitOk;
}

int run_improve(const std::string& in_path, int n, int k, const std::string& pipeline,
                std::uint64_t seed, std::int64_t cap, std::optional<dts::Value> target, int restarts,
                int jobs, const std::string& out_path, const std::string& trace_path,
                ArtifactSink& sink) {
    dts::TriangleSet initial;
    if (!in_path.empty()) {
        initial = dts::io::parse_dts(dts::io::read_file(in_path));
    } else if (n >= 1 && k >= 1) {
        initial = dts::greedy::transversal_greedy(n, k);  // the default starting point
    } else {
        std::cerr << "improve needs --in FILE or -n/-k for a transversal-greedy start\n";
        return kExitInvalidInput;
    }
    const dts::Verdict v = verify_triangle_set(initial);
    if (!v.valid()) {
        std::cerr << "input is not a valid set: " << v.describe() << '\n';
        return kExitVerifyFailure;
    }

    const auto stages = dts::heuristics::parse_pipeline(pipeline, seed, cap, target);
    dts::heuristics::HeuristicResult result;
    if (restarts > 1) {
        std::vector<std::vector<dts::heuristics::HeuristicConfig>> stage_sets;
        for (int r = 0; r < restarts; ++r)
            stage_sets.push_back(dts::heuristics::parse_pipeline(
                pipeline, seed + static_cast<std::uint64_t>(r) * 1000003ull, cap, target));
        result = dts::heuristics::run_restarts(initial, stage_sets, jobs);
    } else {
        result = dts::heuristics::run_pipeline(initial, stages);
    }
    std::cout << "improved scope " << initial.scope() << " -> " << result.best.scope() << " ("
              << result.trace.size() << " improvements)\n";

    if (!out_path.empty()) sink.write(out_path, dts::io::emit_dts(result.best));
    else std::cout << dts::io::emit_dts(result.best);

    if (!trace_path.empty()) {
        nlohmann::json trace = nlohmann::json::array();
        for (const auto& e : result.trace)
            trace.push_back({{"stage", e.stage},
                             {"family", family_name(stages[static_cast<std::size_t>(e.stage)].family)},
                             {"iteration", e.iteration},
                             {"scope", e.scope},
                             {"seed", e.seed}});
        nlohmann::json doc{{"initial_scope", initial.scope()},
                           {"final_scope", result.best.scope()},
                           {"pipeline", pipeline},
                           {"seed", seed},
                           {"improvements", trace}};
        sink.write(trace_path, doc.dump(2) + "\n");
    }
    return kExitOk;
}

int run_verify(const std::string& path) {
    const dts::TriangleSet t = dts::io::parse_dts(dts::io::read_file(path));
    const dts::Verdict v = verify_triangle_set(t);
    std::cout << v.describe() << '\n';
    return v.valid() ? kExitOk : kExitVerifyFailure;
}

int run_search(int n, int k, std::optional<dts::Value> max_scope, bool exact, std::uint64_t budget,
               const std::string& shard_spec, int depth, int jobs, dts::Value lower_bound,
               const std::string& out_path, ArtifactSink& sink) {
    if (exact) {
        const dts::search::MValue m = dts::search::compute_m(n, k, budget, lower_bound);
        if (m.exact) {
            std::cout << "m(" << n << "," << k << ") = " << *m.exact << " (" << m.nodes << " nodes)\n";
            return kExitOk;
        }
        std::cout << "m(" << n << "," << k << ") in [" << m.lower << ", " << m.upper
                  << "] (budget exceeded after " << m.nodes << " nodes)\n";
        return kExitBudget;
    }

    dts::search::SearchProblem p;
    p.n = n;
    p.k = k;
    p.max_scope = *max_scope;
    p.node_budget = budget;
    if (!shard_spec.empty()) {
        const std::size_t slash = shard_spec.find('/');
        if (slash == std::string::npos) {
            std::cerr << "--shard expects i/S\n";
            return kExitInvalidInput;
        }
        dts::search::Shard shard;
        shard.index = std::stoll(shard_spec.substr(0, slash));
        shard.count = std::stoll(shard_spec.substr(slash + 1));
        shard.depth = depth;
        p.shard = shard;
    }

    const dts::search::SearchOutcome out = (jobs > 1 && !p.shard)
                                               ? dts::search::parallel_exists_dts(p, jobs, depth)
                                               : dts::search::exists_dts(p);
    switch (out.status) {
        case dts::search::SearchStatus::Found: {
            std::cout << "found witness with scope " << out.witness->scope() << " (" << out.nodes
                      << " nodes, " << out.elapsed_seconds << " s)\n";
            if (!out_path.empty()) sink.write(out_path, dts::io::emit_dts(*out.witness));
            else std::cout << dts::io::emit_dts(*out.witness);
            return kExitOk;
        }
        case dts::search::SearchStatus::Exhausted:
            std::cout << "exhausted: no (" << n << "," << k << ") set of scope <= " << p.max_scope
                      << " exists [certificate: nodes=" << out.nodes
                      << " canonicalization=" << dts::search::kCanonicalizationVersion;
            if (p.shard)
                std::cout << " shard=" << p.shard->index << "/" << p.shard->count
                          << " depth=" << p.shard->depth;
            std::cout << "]\n";
            return kExitExhausted;
        case dts::search::SearchStatus::BudgetExceeded:
            std::cout << "budget exceeded after " << out.nodes << " nodes\n";
            return kExitBudget;
    }
    return kExitInvalidInput;
}

int run_bounds(int n, int k) {
    const dts::BoundsReport r = dts::best_lower_bound(n, k);
    std::cout << "m(" << n << "," << k << ") >= " << r.best << "\n  trivial " << r.trivial
              << "\n  klove   " << r.klove << '\n';
    if (r.exact) std::cout << "  exact   " << *r.exact << '\n';
    const auto* known = dts::tables::find_known_bound(n, k);
    if (known) std::cout << "  known upper bound " << known->improved << '\n';
    return kExitOk;
}

int run_singer(dts::Value q, dts::Value max_q, const std::string& out_path, ArtifactSink& sink) {
    const dts::Packing p = dts::algebraic::singer_difference_set(q, max_q);
    std::cout << "1-DP(" << p.modulus << "," << p.k() << ")\n";
    if (!out_path.empty()) sink.write(out_path, dts::io::emit_packing(p));
    else std::cout << dts::io::emit_packing(p);
    return kExitOk;
}

int run_compose(const std::string& base_path, dts::Value n, const std::string& out_path,
                ArtifactSink& sink) {
    const dts::Packing base = dts::io::parse_packing(dts::io::read_file(base_path));
    const dts::Packing out = dts::algebraic::cfj_composition(base, n);
    std::cout << n << "-DP(" << out.modulus << "," << out.k() << ")\n";
    if (!out_path.empty()) sink.write(out_path, dts::io::emit_packing(out));
    else std::cout << dts::io::emit_packing(out);
    return kExitOk;
}

int run_table(const std::vector<std::string>& result_paths) {
    if (result_paths.empty()) {
        std::cout << dts::tables::format_catalog();
        return kExitOk;
    }
    std::vector<std::pair<std::pair<int, int>, dts::Value>> results;
    for (const auto& path : result_paths) {
        const dts::TriangleSet t = dts::io::parse_dts(dts::io::read_file(path));
        const dts::Verdict v = verify_triangle_set(t);
        if (!v.valid()) {
            std::cerr << path << ": " << v.describe() << '\n';
            return kExitVerifyFailure;
        }
        results.push_back({{t.n(), t.k()}, t.scope()});
    }
    std::cout << dts::tables::format_comparison(dts::tables::compare_with_known(results));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"difference triangle set toolkit"};
    app.require_subcommand(1);

    std::string algo = "transversal-greedy", pipeline, in_path, out_path, json_path, trace_path, manifest_path;
    std::string recipe_path, shard_spec, base_path;
    std::vector<std::string> result_paths;
    int n = 0, k = 0, depth = 2, jobs = 1, restarts = 1;
    std::uint64_t seed = 0, budget = 0;
    std::int64_t cap = 100000;
    dts::Value q = 2, max_q = 101, compose_n = 3, lower_bound = 0;
    dts::Value max_scope_value = 0;
    std::optional<dts::Value> target;
    bool exact = false;

    app.add_option("--manifest", manifest_path, "manifest path (default: <out>.manifest.json)");

    auto* construct = app.add_subcommand("construct", "run a construction");
    construct->add_option("--algo", algo, "set-greedy | transversal-greedy | asymptotic")
        ->check(CLI::IsMember({"set-greedy", "transversal-greedy", "asymptotic"}));
    construct->add_option("-n", n, "number of blocks")->required();
    construct->add_option("-k", k, "order (block length - 1)")->required();
    construct->add_option("-o,--out", out_path, "output .dts path");
    construct->add_option("--json", json_path, "also write the JSON form");
    construct->add_option("--recipe", recipe_path, "write the asymptotic construction recipe as JSON");

    auto* improve = app.add_subcommand("improve", "randomized delete-and-refill pipeline");
    improve->add_option("--in", in_path, "input .dts file (default: transversal-greedy from -n/-k)");
    improve->add_option("-n", n, "blocks for the default start");
    improve->add_option("-k", k, "order for the default start");
    improve->add_option("--pipeline", pipeline, "stages, e.g. h1:2000,h3:800,h2:400")->required();
    improve->add_option("--seed", seed, "rng seed (stage s uses seed+s)");
    improve->add_option("--cap", cap, "completion enumeration cap");
    improve->add_option("--target", max_scope_value, "stop once this scope is reached");
    improve->add_option("--restarts", restarts, "independent restarts with strided seeds");
    improve->add_option("--jobs", jobs, "worker threads for restarts");
    improve->add_option("-o,--out", out_path, "output .dts path");
    improve->add_option("--trace", trace_path, "write the improvement trace as JSON");

    auto* verify = app.add_subcommand("verify", "verify a .dts file");
    verify->add_option("file", in_path, "path to .dts file")->required();

    auto* search = app.add_subcommand("search", "exhaustive backtracking search");
    search->add_option("-n", n, "number of blocks")->required();
    search->add_option("-k", k, "order")->required();
    search->add_option("-m,--max-scope", max_scope_value, "scope cap for the existence question");
    search->add_flag("--exact", exact, "determine m(n,k) by iterating the cap upward");
    search->add_option("--budget", budget, "node budget (0 = unlimited)");
    search->add_option("--shard", shard_spec, "search shard i of S, as i/S");
    search->add_option("--depth", depth, "prefix depth for sharding");
    search->add_option("--jobs", jobs, "run that many shards on threads (needs no --shard)");
    search->add_option("--lower-bound", lower_bound, "extra lower bound to start --exact from");
    search->add_option("-o,--out", out_path, "write the witness here");

    auto* bounds = app.add_subcommand("bounds", "lower bounds for m(n,k)");
    bounds->add_option("-n", n, "number of blocks")->required();
    bounds->add_option("-k", k, "order")->required();

    auto* singer = app.add_subcommand("singer", "Singer difference set for a prime q");
    singer->add_option("-q", q, "prime field size")->required();
    singer->add_option("--max-q", max_q, "largest accepted q");
    singer->add_option("-o,--out", out_path, "output packing path");

    auto* compose = app.add_subcommand("compose", "compose a single-block packing to n blocks");
    compose->add_option("--base", base_path, "input packing file")->required();
    compose->add_option("-n", compose_n, "prime block count")->required();
    compose->add_option("-o,--out", out_path, "output packing path");

    auto* table = app.add_subcommand("table", "compare results against the published bounds");
    table->add_option("--results", result_paths, "local .dts result files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalidInput;
    }

    ArtifactSink sink(app.get_subcommands().front()->get_name(), collect_args(argc, argv), seed,
                      manifest_path);
    try {
        if (construct->parsed())
            return run_construct(algo, n, k, out_path, json_path, recipe_path, sink);
        if (improve->parsed()) {
            if (improve->count("--target")) target = max_scope_value;
            return run_improve(in_path, n, k, pipeline, seed, cap, target, restarts, jobs, out_path,
                               trace_path, sink);
        }
        if (verify->parsed()) return run_verify(in_path);
        if (search->parsed()) {
            if (!exact && !search->count("--max-scope")) {
                std::cerr << "search needs --max-scope or --exact\n";
                return kExitInvalidInput;
            }
            std::optional<dts::Value> max_scope;
            if (search->count("--max-scope")) max_scope = max_scope_value;
            return run_search(n, k, max_scope, exact, budget, shard_spec, depth, jobs, lower_bound,
                              out_path, sink);
        }
        if (bounds->parsed()) return run_bounds(n, k);
        if (singer->parsed()) return run_singer(q, max_q, out_path, sink);
        if (compose->parsed()) return run_compose(base_path, compose_n, out_path, sink);
        if (table->parsed()) return run_table(result_paths);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
