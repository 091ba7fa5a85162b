// Acceptance gate: one check per release criterion, each printing a single
// PASS/FAIL line with the measured values and its runtime. Exit code 0 iff
// every criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stallings/graph.hpp"
#include "stallings/positivize.hpp"
#include "stallings/prng.hpp"
#include "stallings/pullback.hpp"
#include "stallings/search.hpp"
#include "stallings/words.hpp"

using namespace stallings;
using Clock = std::chrono::steady_clock;

namespace {

const Alphabet f2(2);

int g_failures = 0;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int criterion, bool pass, const std::string& detail, double elapsed_ms) {
  std::printf("%s  criterion %2d  [%8.1f ms]  %s\n", pass ? "PASS" : "FAIL", criterion,
              elapsed_ms, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

TrialConfig harness_config(bool positive) {
  TrialConfig cfg;
  cfg.k_min = 1;
  cfg.k_max = 4;
  cfg.max_length = 8;
  cfg.positive_only = positive;
  return cfg;
}

// Shared bookkeeping between the random-pair suite and the witness
// contract: every component with chi0 >= 1 must carry a verified witness.
struct WitnessLedger {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;

  void inspect(const ShncResult& res) {
    for (const auto& comp : res.report.components) {
      if (comp.chi0 < 1) continue;
      ++checked;
      Witness w = make_witness(comp, res.gU, res.gV);
      bool ok = !w.generators.empty();
      for (const Word& g : w.generators) {
        if (!membership(res.gU, g)) ok = false;
        if (!membership(res.gV, concat_reduce(w.x, concat_reduce(g, invert(w.x))))) ok = false;
      }
      if (ok) ++passed;
    }
  }
};

WitnessLedger g_witnesses;

// 1. The key worked example: fold <a^2, ab>, graph shape and census.
void criterion_1() {
  bool pass = true;
  std::string detail;
  double best_ms = 1e9;
  for (int attempt = 0; attempt < 3; ++attempt) {
    auto t0 = Clock::now();
    StallingsGraph g = subgroup_graph(parse_word_list("aa,ab", f2), f2);
    StallingsGraph cyc = core(g, /*keep_base=*/false);
    VertexCensus c = census(cyc);
    double elapsed = ms_since(t0);
    best_ms = std::min(best_ms, elapsed);

    pass = g.vertex_count() == 2 && g.edge_count() == 3 && rank(g) == 2 && chi0(g) == 1 &&
           c.valence3_total == 2 && c.signature_count(2, 1) == 1 && c.signature_count(1, 2) == 1;
    std::ostringstream os;
    os << "fold{aa,ab}: V=" << g.vertex_count() << " E=" << g.edge_count() << " rank=" << rank(g)
       << " chi0=" << chi0(g) << " census(2,1)=" << c.signature_count(2, 1)
       << " (1,2)=" << c.signature_count(1, 2) << " total=" << c.valence3_total << "; best "
       << best_ms << " ms (budget 1 ms)";
    detail = os.str();
    if (!pass) break;
  }
  pass = pass && best_ms < 1.0;
  report(1, pass, detail, best_ms);
}

// 2. 1,000 random positive lists through the balance checker.
void criterion_2() {
  auto t0 = Clock::now();
  const TrialConfig cfg = harness_config(true);
  std::uint64_t good = 0;
  const std::uint64_t trials = 1000;
  for (std::uint64_t i = 0; i < trials; ++i) {
    TheoremReport rep = check_balance_theorem(random_subgroup(trial_seed(1001, i), cfg));
    if (rep.only_two_types && rep.balanced && !rep.dominance) ++good;
  }
  double elapsed = ms_since(t0);
  std::ostringstream os;
  os << "balance theorem: " << good << "/" << trials
     << " trials balanced+two-types+undominated; " << elapsed / 1000.0 << " s (budget 10 s)";
  report(2, good == trials && elapsed < 10'000.0, os.str(), elapsed);
}

// 3. 10,000 random pairs through the inequality (witnesses feed criterion 7).
void criterion_3() {
  auto t0 = Clock::now();
  std::uint64_t holds = 0;
  const std::uint64_t trials = 10'000;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const std::uint64_t seed = trial_seed(3003, i);
    // mixed corpus: a quarter of the draws on each side is positive-only
    TrialConfig cfg_u = harness_config(i % 4 == 0);
    TrialConfig cfg_v = harness_config(i % 4 == 1);
    std::vector<Word> gu = random_subgroup(trial_seed(seed, 0), cfg_u);
    std::vector<Word> gv = random_subgroup(trial_seed(seed, 1), cfg_v);
    ShncResult res = shnc_check(gu, gv, f2);
    if (res.verdict.holds) ++holds;
    g_witnesses.inspect(res);
  }
  double elapsed = ms_since(t0);
  std::ostringstream os;
  os << "inequality: " << holds << "/" << trials << " pairs hold; " << elapsed / 1000.0
     << " s (budget 60 s)";
  report(3, holds == trials && elapsed < 60'000.0, os.str(), elapsed);
}

// 4. The equality instance U = V = <a^2, b>, exact component shape.
void criterion_4() {
  auto t0 = Clock::now();
  ShncResult res = shnc_check(parse_word_list("aa,b", f2), parse_word_list("aa,b", f2), f2);
  g_witnesses.inspect(res);
  bool pass = res.verdict.lhs == 1 && res.verdict.rhs == 1 && res.verdict.holds &&
              res.report.components.size() == 2 && res.report.components[0].chi0 == 1 &&
              res.report.components[1].chi0 == 0;
  std::ostringstream os;
  os << "U=V=<aa,b>: lhs=" << res.verdict.lhs << " rhs=" << res.verdict.rhs << " components="
     << res.report.components.size();
  for (const auto& c : res.report.components) os << " chi0=" << c.chi0;
  report(4, pass, os.str(), ms_since(t0));
}

// 5. Fold confluence over shuffled fold orders and generator orders.
void criterion_5() {
  auto t0 = Clock::now();
  const TrialConfig cfg = harness_config(false);
  SplitMix64 rng(5005);
  std::uint64_t agree = 0;
  const std::uint64_t lists = 100, shuffles = 10;
  for (std::uint64_t i = 0; i < lists; ++i) {
    std::vector<Word> gens = random_subgroup(rng.next(), cfg);
    StallingsGraph reference = subgroup_graph(gens, f2);
    bool all_same = true;
    for (std::uint64_t s = 0; s < shuffles; ++s) {
      std::vector<Word> permuted = gens;
      for (std::size_t j = permuted.size(); j > 1; --j)
        std::swap(permuted[j - 1], permuted[rng.below(j)]);
      StallingsGraph alt = canonical_form(
          core(fold_shuffled(build_bouquet(permuted, f2), rng.next()), /*keep_base=*/true));
      if (!(alt == reference)) all_same = false;
    }
    if (all_same) ++agree;
  }
  std::ostringstream os;
  os << "confluence: " << agree << "/" << lists << " lists stable under " << shuffles
     << " shuffles";
  report(5, agree == lists, os.str(), ms_since(t0));
}

// 6. Exhaustive <=6 membership oracle against the base pullback component.
void criterion_6() {
  auto t0 = Clock::now();
  std::vector<Word> words;
  {
    std::vector<Letter> prefix;
    struct Rec {
      static void go(std::vector<Word>& out, std::vector<Letter>& p) {
        out.push_back(Word(p));
        if (p.size() == 6) return;
        for (int slot = 0; slot < 4; ++slot) {
          Letter l = Letter::from_slot(slot);
          if (!p.empty() && l == p.back().inverse()) continue;
          p.push_back(l);
          go(out, p);
          p.pop_back();
        }
      }
    };
    Rec::go(words, prefix);
  }
  SplitMix64 rng(6006);
  std::uint64_t agree = 0;
  const std::uint64_t pairs = 200;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    // half the pairs use short generators so intersections are often rich
    TrialConfig cfg = harness_config(false);
    cfg.max_length = (i % 2 == 0) ? 4 : 8;
    StallingsGraph gU = subgroup_graph(random_subgroup(rng.next(), cfg), f2);
    StallingsGraph gV = subgroup_graph(random_subgroup(rng.next(), cfg), f2);
    StallingsGraph inter = intersection_graph(gU, gV);
    bool all = true;
    for (const Word& w : words)
      if (membership(inter, w) != (membership(gU, w) && membership(gV, w))) all = false;
    if (all) ++agree;
  }
  std::ostringstream os;
  os << "oracle: " << agree << "/" << pairs << " pairs agree on all " << words.size()
     << " words of length <= 6";
  report(6, agree == pairs, os.str(), ms_since(t0));
}

// 7. Witness contract over every chi0 >= 1 component from criteria 3-4.
void criterion_7() {
  auto t0 = Clock::now();
  std::ostringstream os;
  os << "witnesses: " << g_witnesses.passed << "/" << g_witnesses.checked
     << " components verified (g in U and x g x^-1 in V)";
  report(7, g_witnesses.checked > 0 && g_witnesses.passed == g_witnesses.checked, os.str(),
         ms_since(t0));
}

// 8. The doubling map preserves rank on 1,000 random lists.
void criterion_8() {
  auto t0 = Clock::now();
  const Endomorphism phi = positivizer();
  const TrialConfig cfg = harness_config(false);
  std::uint64_t agree = 0;
  const std::uint64_t trials = 1000;
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::vector<Word> gens = random_subgroup(trial_seed(8008, i), cfg);
    std::vector<Word> images;
    images.reserve(gens.size());
    for (const Word& g : gens) images.push_back(phi.apply(g));
    if (rank(subgroup_graph(images, f2)) == rank(subgroup_graph(gens, f2))) ++agree;
  }
  std::ostringstream os;
  os << "rank preservation: " << agree << "/" << trials << " lists";
  report(8, agree == trials, os.str(), ms_since(t0));
}

// 9. The rank-n embedding folds to rank exactly n for n = 1..10.
void criterion_9() {
  auto t0 = Clock::now();
  bool pass = true;
  std::ostringstream os;
  os << "embedding ranks:";
  for (int n = 1; n <= 10; ++n) {
    int got = rank(subgroup_graph(embed_rank_n(n).images, f2));
    os << " " << got;
    if (got != n) pass = false;
  }
  report(9, pass, os.str(), ms_since(t0));
}

std::string run_command(const std::string& command, int& exit_code) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return output;
  }
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
  exit_code = pclose(pipe);
  return output;
}

// 10. Byte-identical JSON-lines across thread counts, library and CLI.
void criterion_10(const std::string& cli_path) {
  auto t0 = Clock::now();
  bool library_ok = true;
  for (SearchMode mode :
       {SearchMode::ShncRandom, SearchMode::BalanceTheorem, SearchMode::ScreenConsistency}) {
    TrialConfig cfg = harness_config(false);
    cfg.mode = mode;
    cfg.seed = 7;
    cfg.trials = 150;
    std::ostringstream one, four;
    cfg.threads = 1;
    run_search(cfg, &one);
    cfg.threads = 4;
    run_search(cfg, &four);
    if (one.str() != four.str() || one.str().empty()) library_ok = false;
  }

  bool cli_ok = true;
  std::string cli_note;
  if (cli_path.empty()) {
    cli_ok = false;
    cli_note = "no --cli path given";
  } else {
    const std::string base =
        "'" + cli_path + "' search --mode shnc_random --trials 150 --seed 7 --json";
    int code1 = 0, code4 = 0;
    std::string out1 = run_command(base + " --threads 1 2>/dev/null", code1);
    std::string out4 = run_command(base + " --threads 4 2>/dev/null", code4);
    cli_ok = !out1.empty() && out1 == out4 && code1 == 0 && code4 == 0;
    std::ostringstream note;
    note << "cli bytes " << out1.size() << " vs " << out4.size() << ", exits " << code1 << "/"
         << code4;
    cli_note = note.str();
  }
  std::ostringstream os;
  os << "determinism: library " << (library_ok ? "identical" : "DIFFERS") << "; " << cli_note;
  report(10, library_ok && cli_ok, os.str(), ms_since(t0));
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(cli_path);

  if (g_failures == 0) {
    std::printf("acceptance: all 10 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
