#include "stallings/words.hpp"

#include <cctype>
#include <stdexcept>

namespace stallings {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw std::invalid_argument("word parse error: " + what);
}

void require_renderable(const Alphabet& alphabet) {
  if (alphabet.rank() > 26) {
    throw std::invalid_argument("alphabet rank " + std::to_string(alphabet.rank()) +
                                " exceeds the 26-letter text rendering");
  }
}

}  // namespace

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("alphabet rank must be >= 1");
}

char Alphabet::symbol(int generator) const {
  if (generator < 0 || generator >= rank_ || generator >= 26) {
    throw std::invalid_argument("generator index out of text range");
  }
  return static_cast<char>('a' + generator);
}

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word free_reduce(std::span<const Letter> letters) {
  return Word(std::vector<Letter>(letters.begin(), letters.end()));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word concat_reduce(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(out));
}

Word conjugate(const Word& w, const Word& x) {
  return concat_reduce(invert(x), concat_reduce(w, x));
}

bool is_positive(const Word& w) {
  if (w.empty()) return false;
  for (Letter l : w.letters()) {
    if (l.inverted()) return false;
  }
  return true;
}

bool fits_alphabet(const Word& w, const Alphabet& alphabet) {
  for (Letter l : w.letters()) {
    if (l.generator() >= alphabet.rank()) return false;
  }
  return true;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  require_renderable(alphabet);
  std::vector<Letter> out;
  bool have_pending = false;
  Letter pending(0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  auto flush_pending = [&] {
    if (have_pending) {
      out.push_back(pending);
      have_pending = false;
    }
  };

  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      flush_pending();
      bool inverted = std::isupper(static_cast<unsigned char>(c)) != 0;
      int gen = (inverted ? c - 'A' : c - 'a');
      if (gen >= alphabet.rank()) {
        parse_fail(std::string("letter '") + c + "' outside rank-" +
                   std::to_string(alphabet.rank()) + " alphabet");
      }
      pending = Letter(gen, inverted);
      have_pending = true;
      ++i;
    } else if (c == '^') {
      if (!have_pending) parse_fail("'^' with no preceding letter");
      ++i;
      skip_ws();
      bool negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = (text[i] == '-');
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        parse_fail("malformed exponent");
      }
      long long k = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        k = k * 10 + (text[i] - '0');
        if (k > 1'000'000) parse_fail("exponent too large");
        ++i;
      }
      if (k == 0) parse_fail("exponent must be nonzero");
      Letter base = negative ? pending.inverse() : pending;
      for (long long r = 0; r < k; ++r) out.push_back(base);
      have_pending = false;
    } else {
      parse_fail(std::string("unexpected character '") + c + "'");
    }
  }
  flush_pending();
  return Word(std::move(out));
}

std::vector<Word> parse_word_list(std::string_view text, const Alphabet& alphabet) {
  std::vector<Word> out;
  std::size_t start = 0;
  bool any = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::string_view item = text.substr(start, i - start);
      // trim
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
      if (item.empty()) {
        if (!any && i == text.size()) break;  // wholly empty input: empty list
        parse_fail("empty generator in word list");
      }
      out.push_back(parse_word(item, alphabet));
      any = true;
      start = i + 1;
    }
  }
  return out;
}

std::string render(const Word& w, const Alphabet& alphabet) {
  require_renderable(alphabet);
  std::string out;
  out.reserve(w.length());
  for (Letter l : w.letters()) {
    if (l.generator() >= alphabet.rank()) {
      throw std::invalid_argument("word does not fit the alphabet");
    }
    char c = static_cast<char>('a' + l.generator());
    out.push_back(l.inverted() ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c);
  }
  return out;
}

Endomorphism::Endomorphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(source), target_(target), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.rank()) {
    throw std::invalid_argument("endomorphism needs one image per source generator");
  }
  for (const Word& im : images_) {
    if (im.empty()) throw std::invalid_argument("endomorphism image must be nonempty");
    if (!fits_alphabet(im, target_)) {
      throw std::invalid_argument("endomorphism image outside target alphabet");
    }
  }
}

Endomorphism Endomorphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(alphabet.rank()));
  for (int g = 0; g < alphabet.rank(); ++g) {
    images.push_back(Word({Letter(g)}));
  }
  return Endomorphism(alphabet, alphabet, std::move(images));
}

Word Endomorphism::apply(const Word& w) const {
  if (!fits_alphabet(w, source_)) {
    throw std::invalid_argument("word outside the endomorphism's source alphabet");
  }
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word& im = images_[static_cast<std::size_t>(l.generator())];
    if (l.inverted()) {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) {
        out.push_back(it->inverse());
      }
    } else {
      out.insert(out.end(), im.letters().begin(), im.letters().end());
    }
  }
  return Word(std::move(out));
}

}  // namespace stallings
