#include "stallings/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "stallings/graph.hpp"
#include "stallings/json_io.hpp"
#include "stallings/positivize.hpp"
#include "stallings/prng.hpp"
#include "stallings/pullback.hpp"

namespace stallings {

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::ShncRandom: return "shnc_random";
    case SearchMode::BalanceTheorem: return "balance_theorem";
    case SearchMode::ScreenConsistency: return "screen_consistency";
  }
  return "shnc_random";
}

std::optional<SearchMode> parse_search_mode(std::string_view text) {
  if (text == "shnc_random") return SearchMode::ShncRandom;
  if (text == "balance_theorem") return SearchMode::BalanceTheorem;
  if (text == "screen_consistency") return SearchMode::ScreenConsistency;
  return std::nullopt;
}

void TrialConfig::validate() const {
  if (source_rank < 1) throw std::invalid_argument("source rank must be at least 1");
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("bad generator-count range");
  if (max_length < 1) throw std::invalid_argument("max generator length must be at least 1");
  if (threads < 1) throw std::invalid_argument("thread count must be at least 1");
  if (mode != SearchMode::ShncRandom && source_rank != 2)
    throw std::invalid_argument("this search mode censuses graphs and needs rank 2");
}

std::vector<Word> random_subgroup(std::uint64_t seed, const TrialConfig& config) {
  config.validate();
  SplitMix64 rng(seed);
  const int rank = config.source_rank;
  const int k =
      config.k_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.k_max - config.k_min) + 1));
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int slot = 0; slot < k; ++slot) {
    // Duplicates are redrawn; tiny configurations can exhaust the word
    // pool, so give up on the slot after a bounded number of tries.
    for (int attempt = 0; attempt < 64; ++attempt) {
      const int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.max_length)));
      std::vector<Letter> letters;
      letters.reserve(static_cast<std::size_t>(len));
      for (int j = 0; j < len; ++j) {
        if (config.positive_only) {
          letters.push_back(Letter(static_cast<int>(rng.below(static_cast<std::uint64_t>(rank)))));
        } else {
          // Uniform over letters that do not cancel the previous one, via
          // rejection, which keeps the draw deterministic and unbiased.
          while (true) {
            Letter cand = Letter::from_slot(static_cast<int>(rng.below(2ull * rank)));
            if (!letters.empty() && cand == letters.back().inverse()) continue;
            letters.push_back(cand);
            break;
          }
        }
      }
      Word w(std::move(letters));
      if (std::find(out.begin(), out.end(), w) == out.end()) {
        out.push_back(std::move(w));
        break;
      }
    }
  }
  return out;
}

namespace {

struct TrialOutcome {
  bool violation = false;
  std::optional<int> margin;
  std::map<std::pair<int, int>, std::uint32_t> signatures;
  std::vector<std::uint32_t> sizes;
  std::string line;
};

// Streams lines in trial-index order no matter which thread finishes
// first: lines are buffered until their prefix is complete.
class OrderedLineSink {
 public:
  explicit OrderedLineSink(std::ostream* out) : out_(out) {}

  void push(std::uint64_t index, std::string line) {
    if (!out_) return;
    std::lock_guard<std::mutex> lock(mu_);
    pending_.emplace(index, std::move(line));
    while (!pending_.empty() && pending_.begin()->first == next_) {
      (*out_) << pending_.begin()->second << '\n';
      pending_.erase(pending_.begin());
      ++next_;
    }
  }

 private:
  std::ostream* out_;
  std::mutex mu_;
  std::map<std::uint64_t, std::string> pending_;
  std::uint64_t next_ = 0;
};

void accumulate_census(TrialOutcome& out, const VertexCensus& c) {
  for (const auto& [sig, count] : c.valence3_by_signature) out.signatures[sig] += count;
}

bool witnesses_pass(const ShncResult& res) {
  for (const auto& comp : res.report.components) {
    if (comp.chi0 < 1) continue;
    Witness w = make_witness(comp, res.gU, res.gV);
    for (const Word& g : w.generators) {
      if (!membership(res.gU, g)) return false;
      Word moved = concat_reduce(w.x, concat_reduce(g, invert(w.x)));
      if (!membership(res.gV, moved)) return false;
    }
  }
  return true;
}

TrialOutcome run_one(const TrialConfig& config, std::uint64_t index) {
  const std::uint64_t seed = trial_seed(config.seed, index);
  const Alphabet alphabet(config.source_rank);
  TrialOutcome out;
  nlohmann::json j;
  j["trial"] = index;

  switch (config.mode) {
    case SearchMode::ShncRandom:
    case SearchMode::ScreenConsistency: {
      std::vector<Word> gensU = random_subgroup(trial_seed(seed, 0), config);
      std::vector<Word> gensV = random_subgroup(trial_seed(seed, 1), config);
      ShncResult res = shnc_check(gensU, gensV, alphabet);
      const bool witness_ok = witnesses_pass(res);
      out.margin = res.verdict.margin;
      out.sizes = {res.gU.vertex_count(), res.gV.vertex_count()};
      out.violation = !res.verdict.holds || !witness_ok;
      j["k_u"] = gensU.size();
      j["k_v"] = gensV.size();
      j["lhs"] = res.verdict.lhs;
      j["rhs"] = res.verdict.rhs;
      j["margin"] = res.verdict.margin;
      j["holds"] = res.verdict.holds;
      j["witness_ok"] = witness_ok;
      j["components"] = res.report.components.size();
      if (config.source_rank == 2) {
        VertexCensus cu = census(core(res.gU, /*keep_base=*/false));
        VertexCensus cv = census(core(res.gV, /*keep_base=*/false));
        accumulate_census(out, cu);
        accumulate_census(out, cv);
        if (config.mode == SearchMode::ScreenConsistency) {
          DominanceFlags fu = dominance_flags(cu);
          DominanceFlags fv = dominance_flags(cv);
          const bool excluded = !(fu.either() && fv.either());
          // The criterion proves the inequality for excluded pairs, so an
          // excluded pair failing shnc_check is doubly a bug; any failing
          // pair already counts as a violation above.
          j["excluded"] = excluded;
          j["consistent"] = !excluded || res.verdict.holds;
        }
      }
      break;
    }
    case SearchMode::BalanceTheorem: {
      TrialConfig positive = config;
      positive.positive_only = true;
      std::vector<Word> gens = random_subgroup(seed, positive);
      TheoremReport rep = check_balance_theorem(gens);
      out.violation = !(rep.balanced && rep.only_two_types) || rep.dominance;
      out.sizes = {static_cast<std::uint32_t>(rep.image_census.slot_masks.size())};
      accumulate_census(out, rep.image_census);
      j["k"] = gens.size();
      j["balanced"] = rep.balanced;
      j["only_two_types"] = rep.only_two_types;
      j["dominance"] = rep.dominance;
      j["v3_total"] = rep.image_census.valence3_total;
      break;
    }
  }
  j["violation"] = out.violation;
  out.line = j.dump();
  return out;
}

}  // namespace

SearchReport run_search(const TrialConfig& config, std::ostream* json_lines) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();

  OrderedLineSink sink(json_lines);
  std::vector<TrialOutcome> outcomes(config.trials);
  std::atomic<std::uint64_t> next{0};
  std::mutex error_mu;
  std::exception_ptr first_error;

  auto worker = [&] {
    while (true) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= config.trials) break;
      {
        std::lock_guard<std::mutex> lock(error_mu);
        if (first_error) break;
      }
      try {
        outcomes[i] = run_one(config, i);
        sink.push(i, outcomes[i].line);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  if (config.threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(config.threads));
    for (int t = 0; t < config.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  // Aggregation runs after the join, in trial order, so the report is
  // independent of the thread layout.
  SearchReport report;
  report.mode = config.mode;
  report.seed = config.seed;
  std::uint64_t size_sum = 0;
  for (const TrialOutcome& t : outcomes) {
    ++report.trials_run;
    if (t.violation) ++report.violations;
    if (t.margin) ++report.margin_histogram[*t.margin];
    for (const auto& [sig, count] : t.signatures) report.signature_histogram[sig] += count;
    for (std::uint32_t v : t.sizes) {
      if (report.graph_sizes.samples == 0) {
        report.graph_sizes.min = v;
        report.graph_sizes.max = v;
      } else {
        report.graph_sizes.min = std::min(report.graph_sizes.min, v);
        report.graph_sizes.max = std::max(report.graph_sizes.max, v);
      }
      size_sum += v;
      ++report.graph_sizes.samples;
    }
  }
  if (report.graph_sizes.samples > 0)
    report.graph_sizes.mean =
        static_cast<double>(size_sum) / static_cast<double>(report.graph_sizes.samples);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (json_lines) *json_lines << search_summary_to_json(report).dump() << '\n';
  return report;
}

}  // namespace stallings
