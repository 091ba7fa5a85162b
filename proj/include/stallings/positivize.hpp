#pragma once

// The positivization pipeline and its structural consequences: the doubling
// map a -> aa, b -> ab, a positive embedding of F_n into F_2, the balance
// theorem checker for valence-3 vertex types, and the counterexample screen
// built on the dominance criterion.

#include <optional>
#include <vector>

#include "stallings/graph.hpp"
#include "stallings/words.hpp"

namespace stallings {

/// The rank-2 endomorphism a -> a a, b -> a b. Injective; sends positive
/// words to positive words of exactly twice the length.
Endomorphism positivizer();

/// A positive free basis of a rank-n subgroup of F_2.
struct EmbeddingSpec {
  int source_rank;
  std::vector<Word> images;  // over the rank-2 alphabet

  Endomorphism as_map() const;
};

/// x_i -> a^i b^i for i = 1..n. The images are positive and freely
/// generate: their folded graph is a chain of a-edges with a chain of
/// b-edges returning (n+1 vertices, 2n edges, rank n).
EmbeddingSpec embed_rank_n(int n);

/// Rewrites generators of a subgroup of F_n as positive-friendly words of
/// F_2: optionally embed via embed_rank_n (default: embed iff the source
/// rank is not 2), then apply positivizer(). With require_positive the
/// inputs must all be positive; then every output is a positive word in
/// the subsemigroup generated by aa and ab.
std::vector<Word> positivize_pipeline(const std::vector<Word>& gens, const Alphabet& source,
                                      bool require_positive,
                                      std::optional<bool> apply_embedding = std::nullopt);

/// Strict-majority ("over half") test on the valence-3 census, evaluated
/// on both classifications: the 4-way missing-slot split and the 2-way
/// (in, out) signature split.
struct DominanceFlags {
  bool by_missing_slot = false;
  bool by_signature = false;
  bool either() const { return by_missing_slot || by_signature; }
};

DominanceFlags dominance_flags(const VertexCensus& c);

/// The OR of the two flags: some single type strictly exceeds half of the
/// valence-3 vertices. Always false on a balanced or valence-3-free census.
bool dominance_predicate(const VertexCensus& c);

/// What check_balance_theorem verified for one input.
struct TheoremReport {
  std::vector<Word> input_generators;
  std::vector<bool> positive_flags;    // per input generator
  std::vector<Word> image_generators;  // after the doubling map
  VertexCensus image_census;           // of the cyclically reduced image core
  bool base_pruned = false;  // cyclically reduced core differs from the based core
  bool only_two_types = false;  // every valence-3 vertex has signature (2,1) or (1,2)
  bool balanced = false;        // count(2,1) == count(1,2)
  bool dominance = false;
  DominanceFlags dominance_detail;
};

/// Applies the doubling map to positive rank-2 generators, folds, takes the
/// cyclically reduced core, and censuses it. The expected outcome for every
/// input — this is the theorem — is only_two_types, balanced, and no
/// dominance. Throws on non-positive input.
TheoremReport check_balance_theorem(const std::vector<Word>& gens);

struct ScreenReport {
  DominanceFlags flags_u;
  DominanceFlags flags_v;
  /// True = both censuses are dominated by a single type, so this pair is
  /// NOT excluded as a counterexample by the criterion. False = the pair
  /// provably satisfies the intersection inequality.
  bool not_excluded = false;
};

ScreenReport screen_pair(const std::vector<Word>& gensU, const std::vector<Word>& gensV);

/// Convenience wrapper returning screen_pair(...).not_excluded.
bool counterexample_screen(const std::vector<Word>& gensU, const std::vector<Word>& gensV);

}  // namespace stallings
