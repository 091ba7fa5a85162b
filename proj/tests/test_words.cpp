#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "stallings/prng.hpp"
#include "stallings/words.hpp"

using namespace stallings;

namespace {

const Alphabet f2(2);

Word W(const char* text) { return parse_word(text, f2); }

Word random_word(SplitMix64& rng, int max_len) {
  int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) ls.push_back(Letter::from_slot(static_cast<int>(rng.below(4))));
  return Word(std::move(ls));  // reduced by construction
}

}  // namespace

TEST_CASE("letter encoding and order") {
  CHECK(Letter(0, false).slot() == 0);
  CHECK(Letter(0, true).slot() == 1);
  CHECK(Letter(1, false).slot() == 2);
  CHECK(Letter(1, true).slot() == 3);
  CHECK(Letter::from_slot(3) == Letter(1, true));
  CHECK(Letter(0).inverse() == Letter(0, true));
  CHECK(Letter(0).inverse().inverse() == Letter(0));
  // a < a^-1 < b < b^-1 is the tie-break order everywhere
  CHECK(Letter(0, false) < Letter(0, true));
  CHECK(Letter(0, true) < Letter(1, false));
}

TEST_CASE("parse and render round-trip") {
  CHECK(render(W("aa"), f2) == "aa");
  CHECK(render(W("aB"), f2) == "aB");
  CHECK(render(W("a b A"), f2) == "abA");
  CHECK(render(W("a^3"), f2) == "aaa");
  CHECK(render(W("A^2"), f2) == "AA");
  CHECK(render(W("a^-2"), f2) == "AA");
  CHECK(render(W("b^+2 a"), f2) == "bba");
  CHECK(render(W(""), f2) == "");
  CHECK(W("a^2b") == W("aab"));
}

TEST_CASE("parsing reduces") {
  CHECK(W("aA").empty());
  CHECK(W("abBA").empty());
  CHECK(render(W("abBa"), f2) == "aa");
  CHECK(render(W("aBba"), f2) == "aa");
  CHECK(W("a^2 a^-2").empty());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(W("a2"), std::invalid_argument);
  CHECK_THROWS_AS(W("^2"), std::invalid_argument);
  CHECK_THROWS_AS(W("a^"), std::invalid_argument);
  CHECK_THROWS_AS(W("a^0"), std::invalid_argument);
  CHECK_THROWS_AS(W("a^x"), std::invalid_argument);
  CHECK_THROWS_AS(W("c"), std::invalid_argument);   // outside rank 2
  CHECK_THROWS_AS(W("a^99999999"), std::invalid_argument);
  CHECK_THROWS_AS(W("a!"), std::invalid_argument);
  CHECK(render(parse_word("c", Alphabet(3)), Alphabet(3)) == "c");
}

TEST_CASE("word list parsing") {
  auto ws = parse_word_list("aa, ab", f2);
  REQUIRE(ws.size() == 2);
  CHECK(render(ws[0], f2) == "aa");
  CHECK(render(ws[1], f2) == "ab");
  CHECK(parse_word_list("", f2).empty());
  CHECK(parse_word_list("  ", f2).empty());
  CHECK_THROWS_AS(parse_word_list("aa,,b", f2), std::invalid_argument);
  CHECK_THROWS_AS(parse_word_list("aa,", f2), std::invalid_argument);
  CHECK_THROWS_AS(parse_word_list(",", f2), std::invalid_argument);
}

TEST_CASE("free reduction is idempotent on random inputs") {
  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    std::vector<Letter> raw;
    int len = static_cast<int>(rng.below(12));
    for (int j = 0; j < len; ++j) raw.push_back(Letter::from_slot(static_cast<int>(rng.below(4))));
    Word once = free_reduce(raw);
    Word twice = free_reduce(once.letters());
    CHECK(once == twice);
  }
}

TEST_CASE("group operations") {
  CHECK(render(invert(W("ab")), f2) == "BA");
  CHECK(invert(W("")).empty());
  CHECK(invert(invert(W("aBa"))) == W("aBa"));
  CHECK(render(concat_reduce(W("ab"), W("Ba")), f2) == "aa");
  CHECK(concat_reduce(W("ab"), invert(W("ab"))).empty());
  CHECK(render(conjugate(W("b"), W("a")), f2) == "Aba");
  CHECK(conjugate(W(""), W("ab")).empty());
}

TEST_CASE("concatenation is associative on random triples") {
  SplitMix64 rng(23);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, 8), v = random_word(rng, 8), w = random_word(rng, 8);
    CHECK(concat_reduce(concat_reduce(u, v), w) == concat_reduce(u, concat_reduce(v, w)));
  }
}

TEST_CASE("positivity") {
  CHECK(is_positive(W("ab")));
  CHECK(is_positive(W("a")));
  CHECK_FALSE(is_positive(W("")));
  CHECK_FALSE(is_positive(W("aB")));
  CHECK_FALSE(is_positive(W("Ab")));
}

TEST_CASE("positive words concatenate without cancellation") {
  SplitMix64 rng(37);
  for (int i = 0; i < 200; ++i) {
    std::vector<Letter> lu, lv;
    int nu = 1 + static_cast<int>(rng.below(6)), nv = 1 + static_cast<int>(rng.below(6));
    for (int j = 0; j < nu; ++j) lu.push_back(Letter(static_cast<int>(rng.below(2))));
    for (int j = 0; j < nv; ++j) lv.push_back(Letter(static_cast<int>(rng.below(2))));
    Word u(std::move(lu)), v(std::move(lv));
    Word uv = concat_reduce(u, v);
    CHECK(is_positive(uv));
    CHECK(uv.length() == u.length() + v.length());
  }
}

TEST_CASE("alphabet basics") {
  CHECK_THROWS_AS(Alphabet(0), std::invalid_argument);
  CHECK(f2.slot_count() == 4);
  CHECK(f2.symbol(1) == 'b');
  CHECK_THROWS_AS(f2.symbol(2), std::invalid_argument);
  CHECK(fits_alphabet(W("ab"), f2));
  CHECK_FALSE(fits_alphabet(parse_word("c", Alphabet(3)), f2));
}

TEST_CASE("endomorphism application") {
  Endomorphism id = Endomorphism::identity(f2);
  CHECK(id.apply(W("aBa")) == W("aBa"));

  Endomorphism e(f2, f2, {W("aa"), W("ab")});
  CHECK(render(e.apply(W("a")), f2) == "aa");
  CHECK(render(e.apply(W("B")), f2) == "BA");     // image of an inverse is the inverse image
  CHECK(render(e.apply(W("ab")), f2) == "aaab");  // substitute then reduce
  CHECK(e.apply(W("aA")).empty());

  CHECK_THROWS_AS(Endomorphism(f2, f2, {W("a")}), std::invalid_argument);  // arity
  CHECK_THROWS_AS(Endomorphism(f2, f2, {W("a"), W("")}), std::invalid_argument);
  CHECK_THROWS_AS(e.apply(parse_word("c", Alphabet(3))), std::invalid_argument);
}

TEST_CASE("endomorphisms are homomorphisms on random pairs") {
  Endomorphism e(f2, f2, {W("aa"), W("ab")});
  SplitMix64 rng(51);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, 6), v = random_word(rng, 6);
    CHECK(e.apply(concat_reduce(u, v)) == concat_reduce(e.apply(u), e.apply(v)));
    CHECK(e.apply(invert(u)) == invert(e.apply(u)));
  }
}
