#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stallings/graph.hpp"
#include "stallings/json_io.hpp"
#include "stallings/positivize.hpp"
#include "stallings/pullback.hpp"
#include "stallings/search.hpp"
#include "stallings/words.hpp"

namespace {

using namespace stallings;

struct Options {
  std::string gens_u;
  std::string gens_v;
  int rank = 2;
  bool json = false;
  bool cyclic = false;
  bool witnesses = false;
  std::string out_path;

  bool require_positive = false;
  std::optional<bool> embed;

  std::string mode = "shnc_random";
  TrialConfig trial;
};

std::ostream& output(const Options& opt, std::ofstream& file) {
  if (opt.out_path.empty()) return std::cout;
  file.open(opt.out_path);
  if (!file) throw std::invalid_argument("cannot open output file: " + opt.out_path);
  return file;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void print_graph(std::ostream& os, const StallingsGraph& g, bool with_arcs) {
  os << "vertices " << g.vertex_count() << "\n"
     << "edges " << g.edge_count() << "\n"
     << "base " << g.base() << "\n"
     << "rank " << rank(g) << "\n"
     << "chi0 " << chi0(g) << "\n";
  if (with_arcs)
    for (const auto& e : g.positive_edges())
      os << e.src << " -" << g.alphabet().symbol(e.generator) << "-> " << e.dst << "\n";
}

void print_census(std::ostream& os, const VertexCensus& c) {
  os << "valence-3 total " << c.valence3_total << "\n";
  os << "signature (2,1): " << c.signature_count(2, 1) << "\n";
  os << "signature (1,2): " << c.signature_count(1, 2) << "\n";
  static const char* kSlotNames[4] = {"a-out", "a-in", "b-out", "b-in"};
  for (int s = 0; s < 4; ++s)
    os << "missing " << kSlotNames[s] << ": " << c.missing_slot[s] << "\n";
}

int cmd_rank_fold(const Options& opt, bool with_arcs) {
  const Alphabet alphabet(opt.rank);
  StallingsGraph g = subgroup_graph(parse_word_list(opt.gens_u, alphabet), alphabet,
                                    /*keep_base=*/!opt.cyclic);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  if (opt.json)
    os << graph_to_json(g, with_arcs).dump() << "\n";
  else
    print_graph(os, g, with_arcs);
  return 0;
}

int cmd_census(const Options& opt) {
  const Alphabet alphabet(opt.rank);
  StallingsGraph based =
      subgroup_graph(parse_word_list(opt.gens_u, alphabet), alphabet, /*keep_base=*/true);
  StallingsGraph cyc = core(based, /*keep_base=*/false);
  const bool base_pruned = cyc.vertex_count() != based.vertex_count();
  VertexCensus c = census(cyc);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  if (opt.json) {
    nlohmann::json j = census_to_json(c);
    j["base_pruned"] = base_pruned;
    os << j.dump() << "\n";
  } else {
    print_census(os, c);
    if (base_pruned)
      os << "note: census taken on the cyclically reduced core, which prunes the basepoint\n";
  }
  return 0;
}

int cmd_shnc(const Options& opt) {
  const Alphabet alphabet(opt.rank);
  ShncResult res = shnc_check(parse_word_list(opt.gens_u, alphabet),
                              parse_word_list(opt.gens_v, alphabet), alphabet);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  if (opt.json) {
    nlohmann::json j;
    j["verdict"] = verdict_to_json(res.verdict);
    j["pullback"] = pullback_to_json(res.report);
    if (opt.witnesses) {
      nlohmann::json ws = nlohmann::json::array();
      for (const auto& comp : res.report.components)
        ws.push_back(witness_to_json(make_witness(comp, res.gU, res.gV), alphabet));
      j["witnesses"] = std::move(ws);
    }
    os << j.dump() << "\n";
  } else {
    os << "lhs " << res.verdict.lhs << "\n"
       << "rhs " << res.verdict.rhs << "\n"
       << "margin " << res.verdict.margin << "\n"
       << "holds " << yesno(res.verdict.holds) << "\n";
    for (const auto& comp : res.report.components) {
      os << "component (" << comp.base_pair().u << "," << comp.base_pair().v
         << "): vertices=" << comp.vertex_count << " edges=" << comp.edge_count
         << " chi0=" << comp.chi0 << (comp.contains_bases ? " [bases]" : "") << "\n";
      if (opt.witnesses) {
        Witness w = make_witness(comp, res.gU, res.gV);
        os << "  x = " << (w.x.empty() ? "1" : render(w.x, alphabet)) << "\n";
        for (const Word& gword : w.generators) os << "  gen " << render(gword, alphabet) << "\n";
      }
    }
  }
  return res.verdict.holds ? 0 : 1;
}

int cmd_positivize(const Options& opt) {
  const Alphabet source(opt.rank);
  std::vector<Word> images = positivize_pipeline(parse_word_list(opt.gens_u, source), source,
                                                 opt.require_positive, opt.embed);
  const Alphabet target(2);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  if (opt.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Word& w : images) arr.push_back(render(w, target));
    os << nlohmann::json{{"images", std::move(arr)}}.dump() << "\n";
  } else {
    for (const Word& w : images) os << render(w, target) << "\n";
  }
  return 0;
}

int cmd_theorem(const Options& opt) {
  const Alphabet alphabet(2);
  TheoremReport rep = check_balance_theorem(parse_word_list(opt.gens_u, alphabet));
  std::ofstream file;
  std::ostream& os = output(opt, file);
  if (opt.json) {
    os << theorem_to_json(rep, alphabet).dump() << "\n";
  } else {
    os << "images:";
    for (const Word& w : rep.image_generators) os << " " << render(w, alphabet);
    os << "\n";
    print_census(os, rep.image_census);
    os << "balanced " << yesno(rep.balanced) << "\n"
       << "only_two_types " << yesno(rep.only_two_types) << "\n"
       << "dominance " << yesno(rep.dominance) << "\n";
  }
  const bool expected = rep.balanced && rep.only_two_types && !rep.dominance;
  return expected ? 0 : 1;
}

int cmd_screen(const Options& opt) {
  const Alphabet alphabet(2);
  ScreenReport rep = screen_pair(parse_word_list(opt.gens_u, alphabet),
                                 parse_word_list(opt.gens_v, alphabet));
  std::ofstream file;
  std::ostream& os = output(opt, file);
  if (opt.json) {
    os << screen_to_json(rep).dump() << "\n";
  } else {
    os << "dominance U: missing-slot " << yesno(rep.flags_u.by_missing_slot) << ", signature "
       << yesno(rep.flags_u.by_signature) << "\n";
    os << "dominance V: missing-slot " << yesno(rep.flags_v.by_missing_slot) << ", signature "
       << yesno(rep.flags_v.by_signature) << "\n";
    os << (rep.not_excluded ? "pair not excluded by the screen\n"
                            : "pair excluded: the inequality provably holds for it\n");
  }
  return 0;
}

int cmd_search(Options& opt) {
  auto mode = parse_search_mode(opt.mode);
  if (!mode) throw std::invalid_argument("unknown search mode: " + opt.mode);
  opt.trial.mode = *mode;
  std::ofstream file;
  std::ostream& os = output(opt, file);
  SearchReport rep = run_search(opt.trial, opt.json ? &os : nullptr);
  if (!opt.json) {
    os << "mode " << to_string(rep.mode) << "\n"
       << "seed " << rep.seed << "\n"
       << "trials " << rep.trials_run << "\n"
       << "violations " << rep.violations << "\n";
    os << "margins:";
    for (const auto& [margin, count] : rep.margin_histogram)
      os << " " << margin << ":" << count;
    os << "\n";
    os << "signatures:";
    for (const auto& [sig, count] : rep.signature_histogram)
      os << " " << signature_key(sig.first, sig.second) << ":" << count;
    os << "\n";
    if (rep.graph_sizes.samples > 0)
      os << "graph vertices min " << rep.graph_sizes.min << " mean " << rep.graph_sizes.mean
         << " max " << rep.graph_sizes.max << "\n";
    os << "wall seconds " << rep.wall_seconds << "\n";
  }
  return rep.violations == 0 ? 0 : 1;
}

int cmd_dot(const Options& opt) {
  const Alphabet alphabet(opt.rank);
  StallingsGraph g = subgroup_graph(parse_word_list(opt.gens_u, alphabet), alphabet,
                                    /*keep_base=*/!opt.cyclic);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  os << to_dot(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stallings graphs: subgroup folding, intersection inequality checks, "
               "valence-3 census, positivization, randomized verification"};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_u, bool needs_v) {
    if (needs_u)
      sub->add_option("-U,--gens-u", opt.gens_u, "comma-separated generator words")->required();
    if (needs_v)
      sub->add_option("-V,--gens-v", opt.gens_v, "comma-separated generator words")->required();
    sub->add_flag("--json", opt.json, "emit JSON instead of text");
    sub->add_option("--out", opt.out_path, "write output to a file instead of stdout");
  };
  auto add_rank = [&](CLI::App* sub) {
    sub->add_option("--rank", opt.rank, "alphabet rank")->default_val(2)->check(CLI::Range(1, 26));
  };

  CLI::App* rank_cmd = app.add_subcommand("rank", "fold generators and report rank and chi0");
  add_common(rank_cmd, true, false);
  add_rank(rank_cmd);
  rank_cmd->add_flag("--cyclic", opt.cyclic, "use the cyclically reduced core");

  CLI::App* fold_cmd = app.add_subcommand("fold", "fold generators and print the graph");
  add_common(fold_cmd, true, false);
  add_rank(fold_cmd);
  fold_cmd->add_flag("--cyclic", opt.cyclic, "use the cyclically reduced core");

  CLI::App* census_cmd =
      app.add_subcommand("census", "valence-3 vertex census of the cyclically reduced core");
  add_common(census_cmd, true, false);

  CLI::App* shnc_cmd =
      app.add_subcommand("shnc", "check the intersection inequality for a pair of subgroups");
  add_common(shnc_cmd, true, true);
  add_rank(shnc_cmd);
  shnc_cmd->add_flag("--witnesses", opt.witnesses, "print a verified witness per component");

  CLI::App* positivize_cmd =
      app.add_subcommand("positivize", "embed into rank 2 and apply the doubling map");
  add_common(positivize_cmd, true, false);
  add_rank(positivize_cmd);
  positivize_cmd->add_flag("--require-positive", opt.require_positive,
                           "reject non-positive generators");
  bool embed_on = false, embed_off = false;
  positivize_cmd->add_flag("--embed", embed_on, "force the rank-n embedding step");
  positivize_cmd->add_flag("--no-embed", embed_off,
                           "skip the embedding (rank-2 sources only)");

  CLI::App* theorem_cmd = app.add_subcommand(
      "theorem", "verify the balanced valence-3 census of a doubled positive subgroup");
  add_common(theorem_cmd, true, false);

  CLI::App* screen_cmd =
      app.add_subcommand("screen", "dominance screen: can this pair still be a counterexample?");
  add_common(screen_cmd, true, true);

  CLI::App* search_cmd = app.add_subcommand("search", "randomized verification harness");
  search_cmd->add_flag("--json", opt.json, "emit JSON lines, one per trial plus a summary");
  search_cmd->add_option("--out", opt.out_path, "write output to a file instead of stdout");
  search_cmd->add_option("--mode", opt.mode, "shnc_random | balance_theorem | screen_consistency")
      ->default_val("shnc_random")
      ->check(CLI::IsMember({"shnc_random", "balance_theorem", "screen_consistency"}));
  search_cmd->add_option("--trials", opt.trial.trials, "number of trials")->default_val(100);
  search_cmd->add_option("--seed", opt.trial.seed, "master seed")->default_val(0);
  search_cmd->add_option("--threads", opt.trial.threads, "worker thread count")
      ->default_val(1)
      ->check(CLI::Range(1, 256));
  search_cmd->add_option("--rank", opt.trial.source_rank, "alphabet rank")
      ->default_val(2)
      ->check(CLI::Range(1, 26));
  search_cmd->add_option("--k-min", opt.trial.k_min, "minimum generator count")->default_val(1);
  search_cmd->add_option("--k-max", opt.trial.k_max, "maximum generator count")->default_val(4);
  search_cmd->add_option("--max-len", opt.trial.max_length, "maximum generator length")
      ->default_val(8);
  search_cmd->add_flag("--positive", opt.trial.positive_only, "draw positive words only");

  CLI::App* dot_cmd = app.add_subcommand("dot", "emit the folded graph in DOT format");
  add_common(dot_cmd, true, false);
  add_rank(dot_cmd);
  dot_cmd->add_flag("--cyclic", opt.cyclic, "use the cyclically reduced core");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (embed_on && embed_off) {
    std::cerr << "--embed and --no-embed are mutually exclusive\n";
    return 2;
  }
  if (embed_on) opt.embed = true;
  if (embed_off) opt.embed = false;

  try {
    if (app.got_subcommand(rank_cmd)) return cmd_rank_fold(opt, /*with_arcs=*/false);
    if (app.got_subcommand(fold_cmd)) return cmd_rank_fold(opt, /*with_arcs=*/true);
    if (app.got_subcommand(census_cmd)) return cmd_census(opt);
    if (app.got_subcommand(shnc_cmd)) return cmd_shnc(opt);
    if (app.got_subcommand(positivize_cmd)) return cmd_positivize(opt);
    if (app.got_subcommand(theorem_cmd)) return cmd_theorem(opt);
    if (app.got_subcommand(screen_cmd)) return cmd_screen(opt);
    if (app.got_subcommand(search_cmd)) return cmd_search(opt);
    if (app.got_subcommand(dot_cmd)) return cmd_dot(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
