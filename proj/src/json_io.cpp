#include "stallings/json_io.hpp"

namespace stallings {

std::string signature_key(int in, int out) {
  return "(" + std::to_string(in) + "," + std::to_string(out) + ")";
}

nlohmann::json graph_to_json(const StallingsGraph& g, bool include_arcs) {
  nlohmann::json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["base"] = g.base();
  j["rank"] = rank(g);
  j["chi0"] = chi0(g);
  if (include_arcs) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& e : g.positive_edges())
      arcs.push_back({e.src, std::string(1, g.alphabet().symbol(e.generator)), e.dst});
    j["arcs"] = std::move(arcs);
  }
  return j;
}

nlohmann::json census_to_json(const VertexCensus& c) {
  nlohmann::json j;
  j["valence3_total"] = c.valence3_total;
  j["missing_slot"] = {{"a_out", c.missing_slot[0]},
                       {"a_in", c.missing_slot[1]},
                       {"b_out", c.missing_slot[2]},
                       {"b_in", c.missing_slot[3]}};
  nlohmann::json sig = nlohmann::json::object();
  for (const auto& [key, count] : c.valence3_by_signature)
    sig[signature_key(key.first, key.second)] = count;
  j["by_signature"] = std::move(sig);
  nlohmann::json spectrum = nlohmann::json::object();
  for (const auto& [key, count] : c.signature_spectrum)
    spectrum[signature_key(key.first, key.second)] = count;
  j["spectrum"] = std::move(spectrum);
  return j;
}

nlohmann::json verdict_to_json(const ShncVerdict& v) {
  return {{"lhs", v.lhs}, {"rhs", v.rhs}, {"holds", v.holds}, {"margin", v.margin}};
}

nlohmann::json component_to_json(const PullbackComponent& c) {
  return {{"vertices", c.vertex_count},
          {"edges", c.edge_count},
          {"chi0", c.chi0},
          {"contains_bases", c.contains_bases},
          {"anchor", {c.base_pair().u, c.base_pair().v}}};
}

nlohmann::json pullback_to_json(const PullbackReport& r) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : r.components) comps.push_back(component_to_json(c));
  return {{"lhs_sum", r.lhs_sum}, {"components", std::move(comps)}};
}

nlohmann::json witness_to_json(const Witness& w, const Alphabet& alphabet) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Word& g : w.generators) gens.push_back(render(g, alphabet));
  return {{"x", render(w.x, alphabet)}, {"generators", std::move(gens)}};
}

nlohmann::json dominance_to_json(const DominanceFlags& f) {
  return {{"by_missing_slot", f.by_missing_slot},
          {"by_signature", f.by_signature},
          {"either", f.either()}};
}

nlohmann::json theorem_to_json(const TheoremReport& r, const Alphabet& alphabet) {
  nlohmann::json j;
  nlohmann::json inputs = nlohmann::json::array();
  for (const Word& w : r.input_generators) inputs.push_back(render(w, alphabet));
  nlohmann::json images = nlohmann::json::array();
  for (const Word& w : r.image_generators) images.push_back(render(w, alphabet));
  j["inputs"] = std::move(inputs);
  j["images"] = std::move(images);
  j["census"] = census_to_json(r.image_census);
  j["base_pruned"] = r.base_pruned;
  j["only_two_types"] = r.only_two_types;
  j["balanced"] = r.balanced;
  j["dominance"] = r.dominance;
  j["dominance_detail"] = dominance_to_json(r.dominance_detail);
  return j;
}

nlohmann::json screen_to_json(const ScreenReport& r) {
  return {{"dominance_u", dominance_to_json(r.flags_u)},
          {"dominance_v", dominance_to_json(r.flags_v)},
          {"not_excluded", r.not_excluded}};
}

nlohmann::json search_summary_to_json(const SearchReport& r) {
  nlohmann::json margins = nlohmann::json::object();
  for (const auto& [margin, count] : r.margin_histogram)
    margins[std::to_string(margin)] = count;
  nlohmann::json signatures = nlohmann::json::object();
  for (const auto& [key, count] : r.signature_histogram)
    signatures[signature_key(key.first, key.second)] = count;
  return {{"summary", true},
          {"mode", std::string(to_string(r.mode))},
          {"seed", r.seed},
          {"trials", r.trials_run},
          {"violations", r.violations},
          {"margins", std::move(margins)},
          {"signatures", std::move(signatures)},
          {"graph_sizes",
           {{"min", r.graph_sizes.min},
            {"max", r.graph_sizes.max},
            {"mean", r.graph_sizes.mean},
            {"samples", r.graph_sizes.samples}}}};
}

}  // namespace stallings
