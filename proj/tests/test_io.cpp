#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dts/greedy.hpp"
#include "dts/heuristics.hpp"
#include "dts/io.hpp"
#include "dts/known_bounds.hpp"

using namespace dts;
using namespace dts::io;

TEST_CASE("dts text format is a bit-exact round trip") {
    const TriangleSet t = dts::greedy::transversal_greedy(2, 2);
    const std::string text = emit_dts(t);
    CHECK(text == "2 2 7\n0 1 4\n0 2 7\n");
    CHECK(parse_dts(text) == t);
    CHECK(emit_dts(parse_dts(text)) == text);

    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 5; ++k) {
            const TriangleSet s = dts::greedy::set_greedy(n, k);
            CHECK(parse_dts(emit_dts(s)) == s);
        }
    }
}

TEST_CASE("dts text parse errors") {
    CHECK_THROWS_AS(parse_dts(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_dts("2 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dts("1 2 7\n0 1 x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dts("1 2 9\n0 1 4\n"), std::invalid_argument);  // scope mismatch
    CHECK_THROWS_AS(parse_dts("2 2 7\n0 1 4\n"), std::invalid_argument);  // missing block
}

TEST_CASE("dts json round trip") {
    DtsDocument doc;
    doc.set = dts::greedy::transversal_greedy(3, 3);
    doc.algorithm = "transversal-greedy";
    doc.seed = 17;

    const std::string text = emit_dts_json(doc);
    const DtsDocument back = parse_dts_json(text);
    CHECK(back.set == doc.set);
    CHECK(back.algorithm == doc.algorithm);
    CHECK(back.seed == doc.seed);
    CHECK(emit_dts_json(back) == text);
}

TEST_CASE("packing format round trip") {
    const Packing p{21, {{0, 1, 3}, {0, 8, 17}, {0, 10, 15}}};
    const std::string text = emit_packing(p);
    CHECK(text == "21 3 3\n0 1 3\n0 8 17\n0 10 15\n");
    CHECK(parse_packing(text) == p);
    CHECK_THROWS_AS(parse_packing("21 3\n"), std::invalid_argument);
}

TEST_CASE("fnv1a64 known vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
}

TEST_CASE("manifest round trip") {
    RunManifest m;
    m.command = "construct";
    m.parameters = {"--algo", "transversal-greedy", "-n", "5", "-k", "5"};
    m.seed = 99;
    m.artifact_hashes["out.dts"] = "cbf29ce484222325";
    m.wall_time_ms = 12.5;

    const RunManifest back = parse_manifest(emit_manifest(m));
    CHECK(back.command == m.command);
    CHECK(back.parameters == m.parameters);
    CHECK(back.seed == m.seed);
    CHECK(back.artifact_hashes == m.artifact_hashes);
}

TEST_CASE("known-bounds catalog is internally consistent") {
    const auto entries = dts::tables::known_upper_bounds();
    CHECK(entries.size() > 40);
    for (const auto& e : entries) {
        CAPTURE(e.n);
        CAPTURE(e.k);
        CHECK(e.improved <= e.previous);
        CHECK(e.improved >= best_lower_bound(e.n, e.k).best);
    }
}

TEST_CASE("catalog lookups and comparisons") {
    const auto* e55 = dts::tables::find_known_bound(5, 5);
    REQUIRE(e55 != nullptr);
    CHECK(e55->improved == 110);
    CHECK(e55->previous == 111);
    CHECK(dts::tables::find_known_bound(2, 8)->improved == 100);
    CHECK(dts::tables::find_known_bound(4, 4) == nullptr);

    using dts::tables::CompareStatus;
    const auto rows = dts::tables::compare_with_known({
        {{5, 5}, 110},
        {{2, 8}, 102},
        {{4, 4}, 50},   // no catalog entry: skipped
        {{3, 6}, 116},
    });
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].entry.n == 2);
    CHECK(rows[0].status == CompareStatus::AbovePublished);
    CHECK(rows[1].entry.n == 3);
    CHECK(rows[1].status == CompareStatus::ImprovedOnPublished);
    CHECK(rows[2].entry.n == 5);
    CHECK(rows[2].status == CompareStatus::MatchedPublished);

    const std::string report = dts::tables::format_comparison(rows);
    CHECK(report.find("matched published") != std::string::npos);
    CHECK(report.find("above published") != std::string::npos);
}
