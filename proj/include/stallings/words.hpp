#pragma once

// Letters, freely reduced words, parsing/rendering, and endomorphisms of
// free groups. Everything here is a plain value: words are immutable after
// construction and always stored in freely reduced form.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stallings {

/// A free-group basis of the given rank. Generators are indexed 0..rank-1
/// and rendered a..z (text I/O is limited to rank 26; larger ranks are
/// allowed internally).
class Alphabet {
 public:
  explicit Alphabet(int rank);

  int rank() const { return rank_; }
  int slot_count() const { return 2 * rank_; }

  /// Printable name of a generator ('a' + index); requires index < 26.
  char symbol(int generator) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int rank_;
};

/// One signed generator. Ordering is a < a^-1 < b < b^-1 < ..., which is
/// also the slot order used for spanning-tree tie-breaks.
class Letter {
 public:
  constexpr Letter(int generator, bool inverted = false)
      : code_(static_cast<std::uint32_t>(generator) * 2 + (inverted ? 1u : 0u)) {}

  constexpr int generator() const { return static_cast<int>(code_ / 2); }
  constexpr bool inverted() const { return (code_ & 1u) != 0; }
  constexpr Letter inverse() const { return from_slot(static_cast<int>(code_ ^ 1u)); }

  /// Index into a 2*rank transition table: 2*generator + inverted.
  constexpr int slot() const { return static_cast<int>(code_); }
  static constexpr Letter from_slot(int slot) {
    return Letter(slot / 2, (slot & 1) != 0);
  }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_;
};

/// A freely reduced word; the empty word is the identity. The constructor
/// reduces, so every Word in the program is in normal form.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence (unique normal form).
Word free_reduce(std::span<const Letter> letters);

/// Group inverse: reverse the word and invert each letter.
Word invert(const Word& w);

/// Reduced product u * v.
Word concat_reduce(const Word& u, const Word& v);

/// Conjugate x^-1 * w * x, reduced.
Word conjugate(const Word& w, const Word& x);

/// True iff w is nonempty and uses no inverted letter (membership in the
/// subsemigroup generated by the basis; the identity does not count).
bool is_positive(const Word& w);

/// True iff every letter's generator index lies inside the alphabet.
bool fits_alphabet(const Word& w, const Alphabet& alphabet);

/// Parse the text grammar: lowercase = generator, uppercase = its inverse,
/// optional ^k (k a nonzero integer, possibly negative) repeats the
/// preceding letter, whitespace ignored. The result is freely reduced.
/// Throws std::invalid_argument on letters outside the alphabet, malformed
/// exponents, or ^ with no preceding letter.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Comma-separated list of words in the parse_word grammar. Empty input
/// yields an empty list; an empty item is an error.
std::vector<Word> parse_word_list(std::string_view text, const Alphabet& alphabet);

/// Canonical renderer: lowercase/uppercase letters, no exponents, so
/// render . parse is the identity on reduced words.
std::string render(const Word& w, const Alphabet& alphabet);

/// A map of free groups given by generator images. Images must be nonempty
/// (they are reduced by construction).
class Endomorphism {
 public:
  Endomorphism(Alphabet source, Alphabet target, std::vector<Word> images);

  static Endomorphism identity(const Alphabet& alphabet);

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const Word& image(int generator) const { return images_[static_cast<std::size_t>(generator)]; }
  const std::vector<Word>& images() const { return images_; }

  /// Substitute each letter by its image (inverse image for inverted
  /// letters) and reduce. Throws on alphabet mismatch.
  Word apply(const Word& w) const;

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

inline Word apply_endomorphism(const Endomorphism& e, const Word& w) { return e.apply(w); }

}  // namespace stallings
