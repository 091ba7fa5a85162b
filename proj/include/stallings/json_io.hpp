#pragma once

// JSON views of the library's report types (nlohmann::json). Keys are
// emitted in sorted order, so dumps are byte-stable for equal values.

#include <string>

#include "json.hpp"
#include "stallings/graph.hpp"
#include "stallings/positivize.hpp"
#include "stallings/pullback.hpp"
#include "stallings/search.hpp"

namespace stallings {

/// "(in,out)" — the signature spellings used in all JSON histograms.
std::string signature_key(int in, int out);

nlohmann::json graph_to_json(const StallingsGraph& g, bool include_arcs = true);
nlohmann::json census_to_json(const VertexCensus& c);
nlohmann::json verdict_to_json(const ShncVerdict& v);
nlohmann::json component_to_json(const PullbackComponent& c);
nlohmann::json pullback_to_json(const PullbackReport& r);
nlohmann::json witness_to_json(const Witness& w, const Alphabet& alphabet);
nlohmann::json dominance_to_json(const DominanceFlags& f);
nlohmann::json theorem_to_json(const TheoremReport& r, const Alphabet& alphabet);
nlohmann::json screen_to_json(const ScreenReport& r);
/// Summary of a finished search; deliberately excludes wall time so the
/// JSON stream is reproducible byte for byte.
nlohmann::json search_summary_to_json(const SearchReport& r);

}  // namespace stallings
