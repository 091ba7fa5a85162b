#pragma once

// Randomized verification harness: seeded subgroup generation and a
// multi-threaded trial runner whose JSON-lines output is byte-identical for
// a fixed seed regardless of thread count.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string_view>
#include <utility>
#include <vector>

#include "stallings/words.hpp"

namespace stallings {

enum class SearchMode {
  ShncRandom,        // random pairs through the intersection inequality
  BalanceTheorem,    // random positive lists through the balance checker
  ScreenConsistency  // screen says "excluded" must imply the inequality holds
};

/// CLI spellings: shnc_random | balance_theorem | screen_consistency.
std::string_view to_string(SearchMode mode);
std::optional<SearchMode> parse_search_mode(std::string_view text);

struct TrialConfig {
  SearchMode mode = SearchMode::ShncRandom;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  int source_rank = 2;
  int k_min = 1;        // generator-count range, inclusive
  int k_max = 4;
  int max_length = 8;   // generator length range is [1, max_length]
  bool positive_only = false;
  int threads = 1;

  void validate() const;  // throws std::invalid_argument on nonsense ranges
};

/// Deterministic generator list: k uniform in [k_min, k_max]; each word
/// freely reduced (positive when positive_only) with length uniform in
/// [1, max_length]; duplicates redrawn a bounded number of times, then the
/// slot is dropped, so the list can come out shorter than k.
std::vector<Word> random_subgroup(std::uint64_t seed, const TrialConfig& config);

struct SizeStats {
  std::uint32_t min = 0;
  std::uint32_t max = 0;
  double mean = 0.0;
  std::uint64_t samples = 0;
};

struct SearchReport {
  SearchMode mode = SearchMode::ShncRandom;
  std::uint64_t seed = 0;
  std::uint64_t trials_run = 0;
  std::uint64_t violations = 0;  // any counterexample to a checked theorem
  std::map<int, std::uint64_t> margin_histogram;  // rhs - lhs per trial
  std::map<std::pair<int, int>, std::uint64_t> signature_histogram;  // valence-3 signatures
  SizeStats graph_sizes;  // vertex counts of the graphs built per trial
  double wall_seconds = 0.0;  // human report only, never serialized
};

/// Runs config.trials independent trials (trial i seeded from (seed, i)),
/// optionally streaming one JSON line per trial plus a summary line to
/// json_lines. Lines appear in trial order; aggregation is performed in
/// trial order, so the report and the stream do not depend on config.threads.
SearchReport run_search(const TrialConfig& config, std::ostream* json_lines = nullptr);

}  // namespace stallings
