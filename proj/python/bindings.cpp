#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dts/algebraic.hpp"
#include "dts/core.hpp"
#include "dts/greedy.hpp"
#include "dts/heuristics.hpp"
#include "dts/io.hpp"
#include "dts/known_bounds.hpp"
#include "dts/search.hpp"

namespace py = pybind11;

namespace {

using Blocks = std::vector<dts::Block>;

py::dict verdict_to_dict(const dts::Verdict& v) {
    py::dict d;
    switch (v.status) {
        case dts::Verdict::Status::Valid:
            d["status"] = "valid";
            d["scope"] = v.scope;
            break;
        case dts::Verdict::Status::Collision:
            d["status"] = "collision";
            d["value"] = v.value;
            d["first"] = py::make_tuple(v.first.block, v.first.hi, v.first.lo);
            d["second"] = py::make_tuple(v.second.block, v.second.hi, v.second.lo);
            break;
        case dts::Verdict::Status::Malformed:
            d["status"] = "malformed";
            d["reason"] = v.reason;
            break;
    }
    d["description"] = v.describe();
    return d;
}

py::dict bounds_to_dict(const dts::BoundsReport& r) {
    py::dict d;
    d["trivial"] = r.trivial;
    d["klove"] = r.klove;
    d["best"] = r.best;
    if (r.exact) d["exact"] = *r.exact;
    else d["exact"] = py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_dts, m) {
    m.doc() = "difference triangle set toolkit";

    m.def("verify_triangle_set",
          [](const Blocks& blocks) { return verdict_to_dict(dts::verify_triangle_set(blocks)); },
          py::arg("blocks"));
    m.def("positive_differences", &dts::positive_differences, py::arg("block"));
    m.def("verify_packing",
          [](dts::Value modulus, const Blocks& blocks) {
              return verdict_to_dict(dts::verify_packing({modulus, blocks}));
          },
          py::arg("modulus"), py::arg("blocks"));
    m.def("packing_to_triangle_set",
          [](dts::Value modulus, const Blocks& blocks) {
              return dts::packing_to_triangle_set({modulus, blocks}).blocks;
          },
          py::arg("modulus"), py::arg("blocks"));
    m.def("reduce",
          [](const Blocks& blocks) { return dts::reduce(dts::TriangleSet{blocks}).blocks; },
          py::arg("blocks"));
    m.def("shorten",
          [](const Blocks& blocks) { return dts::shorten(dts::TriangleSet{blocks}).blocks; },
          py::arg("blocks"));

    m.def("trivial_lower_bound", &dts::trivial_lower_bound, py::arg("n"), py::arg("k"));
    m.def("klove_lower_bound", &dts::klove_lower_bound, py::arg("n"), py::arg("k"));
    m.def("best_lower_bound",
          [](dts::Value n, dts::Value k) { return bounds_to_dict(dts::best_lower_bound(n, k)); },
          py::arg("n"), py::arg("k"));

    m.def("set_greedy", [](int n, int k) { return dts::greedy::set_greedy(n, k).blocks; },
          py::arg("n"), py::arg("k"));
    m.def("transversal_greedy",
          [](int n, int k) { return dts::greedy::transversal_greedy(n, k).blocks; }, py::arg("n"),
          py::arg("k"));
    m.def("wythoff_pairs",
          [](std::int64_t count) {
              std::vector<std::pair<dts::Value, dts::Value>> out;
              for (const auto& p : dts::greedy::wythoff_pairs(count)) out.emplace_back(p.u, p.v);
              return out;
          },
          py::arg("count"));
    m.def("wythoff_connell",
          [](std::int64_t i) {
              const auto p = dts::greedy::wythoff_connell(i);
              return py::make_tuple(p.u, p.v);
          },
          py::arg("i"));

    m.def("next_prime_at_least", &dts::algebraic::next_prime_at_least, py::arg("x"));
    m.def("singer_difference_set",
          [](dts::Value q, dts::Value max_q) {
              const dts::Packing p = dts::algebraic::singer_difference_set(q, max_q);
              return py::make_tuple(p.modulus, p.blocks);
          },
          py::arg("q"), py::arg("max_q") = 101);
    m.def("cfj_composition",
          [](dts::Value modulus, const Blocks& blocks, dts::Value n) {
              const dts::Packing out = dts::algebraic::cfj_composition({modulus, blocks}, n);
              return py::make_tuple(out.modulus, out.blocks);
          },
          py::arg("modulus"), py::arg("blocks"), py::arg("n"));
    m.def("asymptotic_construct",
          [](dts::Value n, dts::Value k) {
              const auto [t, recipe] = dts::algebraic::asymptotic_construct(n, k);
              py::dict r;
              r["blocks"] = t.blocks;
              r["scope"] = t.scope();
              r["q"] = recipe.q;
              r["p"] = recipe.p ? py::cast(*recipe.p) : py::none().cast<py::object>();
              r["packing_modulus"] = recipe.packing_modulus;
              r["reductions"] = recipe.reductions;
              r["shortenings"] = recipe.shortenings;
              return r;
          },
          py::arg("n"), py::arg("k"));

    m.def("improve",
          [](const Blocks& blocks, const std::string& pipeline, std::uint64_t seed, std::int64_t cap,
             std::optional<dts::Value> target) {
              const auto stages = dts::heuristics::parse_pipeline(pipeline, seed, cap, target);
              const auto result = dts::heuristics::run_pipeline(dts::TriangleSet{blocks}, stages);
              py::dict d;
              d["blocks"] = result.best.blocks;
              d["scope"] = result.best.scope();
              py::list trace;
              for (const auto& e : result.trace)
                  trace.append(py::make_tuple(e.stage, e.iteration, e.scope));
              d["trace"] = trace;
              return d;
          },
          py::arg("blocks"), py::arg("pipeline"), py::arg("seed") = 0, py::arg("cap") = 100000,
          py::arg("target") = py::none());

    m.def("exists_dts",
          [](int n, int k, dts::Value max_scope, std::uint64_t budget) {
              dts::search::SearchProblem p;
              p.n = n;
              p.k = k;
              p.max_scope = max_scope;
              p.node_budget = budget;
              const auto out = dts::search::exists_dts(p);
              py::dict d;
              d["nodes"] = out.nodes;
              switch (out.status) {
                  case dts::search::SearchStatus::Found:
                      d["status"] = "found";
                      d["witness"] = out.witness->blocks;
                      break;
                  case dts::search::SearchStatus::Exhausted:
                      d["status"] = "exhausted";
                      break;
                  case dts::search::SearchStatus::BudgetExceeded:
                      d["status"] = "budget-exceeded";
                      break;
              }
              return d;
          },
          py::arg("n"), py::arg("k"), py::arg("max_scope"), py::arg("budget") = 0);
    m.def("compute_m",
          [](int n, int k, std::uint64_t budget, dts::Value lower) {
              const auto m = dts::search::compute_m(n, k, budget, lower);
              py::dict d;
              d["exact"] = m.exact ? py::cast(*m.exact) : py::none().cast<py::object>();
              d["lower"] = m.lower;
              d["upper"] = m.upper;
              d["nodes"] = m.nodes;
              return d;
          },
          py::arg("n"), py::arg("k"), py::arg("budget") = 0, py::arg("lower") = 0);

    m.def("emit_dts", [](const Blocks& blocks) { return dts::io::emit_dts(dts::TriangleSet{blocks}); },
          py::arg("blocks"));
    m.def("parse_dts", [](const std::string& text) { return dts::io::parse_dts(text).blocks; },
          py::arg("text"));

    m.def("known_upper_bounds", []() {
        py::list out;
        for (const auto& e : dts::tables::known_upper_bounds()) {
            py::dict d;
            d["n"] = e.n;
            d["k"] = e.k;
            d["improved"] = e.improved;
            d["previous"] = e.previous;
            d["previous_source"] = e.previous_source;
            out.append(d);
        }
        return out;
    });
}
