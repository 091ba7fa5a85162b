#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "stallings/graph.hpp"
#include "stallings/json_io.hpp"
#include "stallings/positivize.hpp"
#include "stallings/pullback.hpp"
#include "stallings/search.hpp"
#include "stallings/words.hpp"

namespace py = pybind11;
using namespace stallings;

namespace {

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<Word> parse_all(const std::vector<std::string>& texts, const Alphabet& alphabet) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_word(t, alphabet));
  return out;
}

std::vector<std::string> render_all(const std::vector<Word>& words, const Alphabet& alphabet) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(render(w, alphabet));
  return out;
}

TrialConfig make_config(const std::string& mode, std::uint64_t seed, std::uint64_t trials,
                        int rank, int k_min, int k_max, int max_length, bool positive_only,
                        int threads) {
  auto parsed = parse_search_mode(mode);
  if (!parsed) throw std::invalid_argument("unknown search mode: " + mode);
  TrialConfig cfg;
  cfg.mode = *parsed;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.source_rank = rank;
  cfg.k_min = k_min;
  cfg.k_max = k_max;
  cfg.max_length = max_length;
  cfg.positive_only = positive_only;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_stallings, m) {
  m.doc() = "Stallings subgroup graphs: folding, intersection inequality, valence-3 census";

  py::class_<StallingsGraph>(m, "Graph")
      .def_property_readonly("vertices", &StallingsGraph::vertex_count)
      .def_property_readonly("edges", &StallingsGraph::edge_count)
      .def_property_readonly("base", &StallingsGraph::base)
      .def_property_readonly("rank", [](const StallingsGraph& g) { return rank(g); })
      .def_property_readonly("chi0", [](const StallingsGraph& g) { return chi0(g); })
      .def("membership",
           [](const StallingsGraph& g, const std::string& w) {
             return membership(g, parse_word(w, g.alphabet()));
           },
           py::arg("word"))
      .def("basis",
           [](const StallingsGraph& g) { return render_all(basis(g), g.alphabet()); })
      .def("census",
           [](const StallingsGraph& g, bool cyclic) {
             return to_py(census_to_json(census(cyclic ? core(g, false) : g)));
           },
           py::arg("cyclic") = true)
      .def("to_dot", [](const StallingsGraph& g) { return to_dot(g); })
      .def("__eq__", [](const StallingsGraph& a, const StallingsGraph& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const StallingsGraph& g) {
        return "<Graph vertices=" + std::to_string(g.vertex_count()) +
               " edges=" + std::to_string(g.edge_count()) + " rank=" + std::to_string(rank(g)) +
               ">";
      });

  m.def(
      "subgroup_graph",
      [](const std::vector<std::string>& generators, int rank, bool keep_base) {
        const Alphabet alphabet(rank);
        return subgroup_graph(parse_all(generators, alphabet), alphabet, keep_base);
      },
      py::arg("generators"), py::arg("rank") = 2, py::arg("keep_base") = true,
      "Fold the generators into the canonical core graph of the subgroup they generate.");

  m.def(
      "reduce",
      [](const std::string& word, int rank) {
        const Alphabet alphabet(rank);
        return render(parse_word(word, alphabet), alphabet);
      },
      py::arg("word"), py::arg("rank") = 2, "Freely reduce a word given in text syntax.");

  m.def(
      "shnc_check",
      [](const std::vector<std::string>& gens_u, const std::vector<std::string>& gens_v, int rank,
         bool witnesses) {
        const Alphabet alphabet(rank);
        ShncResult res =
            shnc_check(parse_all(gens_u, alphabet), parse_all(gens_v, alphabet), alphabet);
        nlohmann::json j;
        j["verdict"] = verdict_to_json(res.verdict);
        j["pullback"] = pullback_to_json(res.report);
        if (witnesses) {
          nlohmann::json ws = nlohmann::json::array();
          for (const auto& comp : res.report.components)
            ws.push_back(witness_to_json(make_witness(comp, res.gU, res.gV), alphabet));
          j["witnesses"] = std::move(ws);
        }
        return to_py(j);
      },
      py::arg("gens_u"), py::arg("gens_v"), py::arg("rank") = 2, py::arg("witnesses") = false,
      "Verify the intersection inequality for one pair of subgroups.");

  m.def(
      "positivize",
      [](const std::vector<std::string>& generators, int rank, bool require_positive,
         std::optional<bool> embed) {
        const Alphabet source(rank);
        return render_all(
            positivize_pipeline(parse_all(generators, source), source, require_positive, embed),
            Alphabet(2));
      },
      py::arg("generators"), py::arg("rank") = 2, py::arg("require_positive") = false,
      py::arg("embed") = std::nullopt,
      "Embed into rank 2 (optional) and apply the doubling map a->aa, b->ab.");

  m.def(
      "check_balance_theorem",
      [](const std::vector<std::string>& generators) {
        const Alphabet alphabet(2);
        return to_py(theorem_to_json(check_balance_theorem(parse_all(generators, alphabet)),
                                     alphabet));
      },
      py::arg("generators"),
      "Double a positive rank-2 subgroup and verify its balanced valence-3 census.");

  m.def(
      "screen_pair",
      [](const std::vector<std::string>& gens_u, const std::vector<std::string>& gens_v) {
        const Alphabet alphabet(2);
        return to_py(
            screen_to_json(screen_pair(parse_all(gens_u, alphabet), parse_all(gens_v, alphabet))));
      },
      py::arg("gens_u"), py::arg("gens_v"),
      "Dominance screen; not_excluded=False means the inequality provably holds for the pair.");

  m.def(
      "random_subgroup",
      [](std::uint64_t seed, int rank, int k_min, int k_max, int max_length, bool positive_only) {
        TrialConfig cfg = make_config("shnc_random", seed, 1, rank, k_min, k_max, max_length,
                                      positive_only, 1);
        return render_all(random_subgroup(seed, cfg), Alphabet(rank));
      },
      py::arg("seed"), py::arg("rank") = 2, py::arg("k_min") = 1, py::arg("k_max") = 4,
      py::arg("max_length") = 8, py::arg("positive_only") = false,
      "Deterministic random generator list for the given seed.");

  m.def(
      "run_search",
      [](const std::string& mode, std::uint64_t seed, std::uint64_t trials, int rank, int k_min,
         int k_max, int max_length, bool positive_only, int threads) {
        TrialConfig cfg =
            make_config(mode, seed, trials, rank, k_min, k_max, max_length, positive_only, threads);
        SearchReport rep = run_search(cfg);
        return to_py(search_summary_to_json(rep));
      },
      py::arg("mode") = "shnc_random", py::arg("seed") = 0, py::arg("trials") = 100,
      py::arg("rank") = 2, py::arg("k_min") = 1, py::arg("k_max") = 4, py::arg("max_length") = 8,
      py::arg("positive_only") = false, py::arg("threads") = 1,
      "Run the randomized harness and return the summary (violations must be 0).");
}
