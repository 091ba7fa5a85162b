#include "stallings/positivize.hpp"

#include <stdexcept>

namespace stallings {

Endomorphism positivizer() {
  Alphabet f2(2);
  const Letter a(0), b(1);
  return Endomorphism(f2, f2, {Word({a, a}), Word({a, b})});
}

Endomorphism EmbeddingSpec::as_map() const {
  return Endomorphism(Alphabet(source_rank), Alphabet(2), images);
}

EmbeddingSpec embed_rank_n(int n) {
  if (n < 1) throw std::invalid_argument("embedding needs a positive source rank");
  const Letter a(0), b(1);
  EmbeddingSpec spec;
  spec.source_rank = n;
  for (int i = 1; i <= n; ++i) {
    std::vector<Letter> letters;
    letters.insert(letters.end(), static_cast<std::size_t>(i), a);
    letters.insert(letters.end(), static_cast<std::size_t>(i), b);
    spec.images.push_back(Word(std::move(letters)));
  }
  return spec;
}

std::vector<Word> positivize_pipeline(const std::vector<Word>& gens, const Alphabet& source,
                                      bool require_positive,
                                      std::optional<bool> apply_embedding) {
  for (const Word& w : gens) {
    if (w.empty()) throw std::invalid_argument("empty generator");
    if (!fits_alphabet(w, source))
      throw std::invalid_argument("generator uses letters outside the source alphabet");
    if (require_positive && !is_positive(w))
      throw std::invalid_argument("non-positive generator with positivity required");
  }
  const bool embed = apply_embedding.value_or(source.rank() != 2);
  if (!embed && source.rank() != 2)
    throw std::invalid_argument("skipping the embedding requires a rank-2 source");

  const Endomorphism phi = positivizer();
  std::vector<Word> out;
  out.reserve(gens.size());
  if (embed) {
    const Endomorphism emb = embed_rank_n(source.rank()).as_map();
    for (const Word& w : gens) out.push_back(phi.apply(emb.apply(w)));
  } else {
    for (const Word& w : gens) out.push_back(phi.apply(w));
  }
  return out;
}

DominanceFlags dominance_flags(const VertexCensus& c) {
  DominanceFlags f;
  for (std::uint32_t count : c.missing_slot)
    if (2ull * count > c.valence3_total) f.by_missing_slot = true;
  for (const auto& [sig, count] : c.valence3_by_signature)
    if (2ull * count > c.valence3_total) f.by_signature = true;
  return f;
}

bool dominance_predicate(const VertexCensus& c) { return dominance_flags(c).either(); }

namespace {

// Census of the cyclically reduced core plus whether that core differs
// from the based one (hair through the basepoint was pruned).
struct CoredCensus {
  VertexCensus census;
  bool base_pruned;
};

CoredCensus cored_census(const std::vector<Word>& gens) {
  const Alphabet f2(2);
  StallingsGraph based = subgroup_graph(gens, f2, /*keep_base=*/true);
  StallingsGraph cyc = core(based, /*keep_base=*/false);
  CoredCensus out{census(cyc), cyc.vertex_count() != based.vertex_count()};
  return out;
}

}  // namespace

TheoremReport check_balance_theorem(const std::vector<Word>& gens) {
  const Alphabet f2(2);
  TheoremReport r;
  r.input_generators = gens;
  for (const Word& w : gens) {
    if (!fits_alphabet(w, f2))
      throw std::invalid_argument("balance theorem inputs live in the rank-2 group");
    if (!is_positive(w)) throw std::invalid_argument("balance theorem inputs must be positive");
    r.positive_flags.push_back(true);
  }
  r.image_generators = positivize_pipeline(gens, f2, /*require_positive=*/true,
                                           /*apply_embedding=*/false);

  CoredCensus cc = cored_census(r.image_generators);
  r.image_census = std::move(cc.census);
  r.base_pruned = cc.base_pruned;

  std::uint32_t two_one = r.image_census.signature_count(2, 1);
  std::uint32_t one_two = r.image_census.signature_count(1, 2);
  r.only_two_types = two_one + one_two == r.image_census.valence3_total;
  r.balanced = two_one == one_two;
  r.dominance_detail = dominance_flags(r.image_census);
  r.dominance = r.dominance_detail.either();
  return r;
}

ScreenReport screen_pair(const std::vector<Word>& gensU, const std::vector<Word>& gensV) {
  ScreenReport s;
  s.flags_u = dominance_flags(cored_census(gensU).census);
  s.flags_v = dominance_flags(cored_census(gensV).census);
  s.not_excluded = s.flags_u.either() && s.flags_v.either();
  return s;
}

bool counterexample_screen(const std::vector<Word>& gensU, const std::vector<Word>& gensV) {
  return screen_pair(gensU, gensV).not_excluded;
}

}  // namespace stallings
