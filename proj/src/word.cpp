#include "mwb/word.hpp"

#include "mwb/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace mwb {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw Error("alphabet must contain at least one generator");
  }
  if (names_.size() > 64) {
    throw Error("alphabet too large (at most 64 generators)");
  }
  std::unordered_set<std::string> seen;
  for (auto const& n : names_) {
    if (n.empty()) {
      throw Error("generator name must be non-empty");
    }
    if (n.find('.') != std::string::npos || n.find('\'') != std::string::npos ||
        n.find_first_of(" \t\n") != std::string::npos) {
      throw Error("generator name '" + n + "' contains a reserved character");
    }
    if (!seen.insert(n).second) {
      throw Error("duplicate generator name '" + n + "'");
    }
  }
}

size_t Alphabet::index(std::string const& name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return i;
    }
  }
  return npos;
}

AlphabetPtr Alphabet::standard(size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (size_t i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
  }
  return std::make_shared<Alphabet const>(std::move(names));
}

AlphabetPtr Alphabet::of(std::vector<std::string> names) {
  return std::make_shared<Alphabet const>(std::move(names));
}

Word::Word(AlphabetPtr alphabet, std::vector<uint8_t> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) {
    throw Error("word requires an alphabet");
  }
  for (uint8_t l : letters_) {
    if (l >= alphabet_->size()) {
      throw Error("letter index out of range for alphabet");
    }
  }
}

Word Word::with_alphabet(AlphabetPtr a) const {
  return Word(std::move(a), letters_);
}

static void require_same_alphabet(Word const& u, Word const& v) {
  if (!u.alphabet() || !v.alphabet()) {
    throw Error("word has no alphabet attached");
  }
  if (u.alphabet() != v.alphabet() && !(*u.alphabet() == *v.alphabet())) {
    throw Error("words over different alphabets");
  }
}

bool Word::operator==(Word const& other) const {
  require_same_alphabet(*this, other);
  return letters_ == other.letters_;
}

bool Word::operator<(Word const& other) const {
  require_same_alphabet(*this, other);
  if (letters_.size() != other.letters_.size()) {
    return letters_.size() < other.letters_.size();
  }
  return letters_ < other.letters_;
}

Word Word::subword(size_t pos, size_t len) const {
  if (pos + len > size()) {
    throw Error("subword out of range");
  }
  return Word(alphabet_, std::vector<uint8_t>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::string Word::str() const {
  if (letters_.empty()) {
    return "1";
  }
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i != 0) {
      out += '.';
    }
    out += alphabet_->name(letters_[i]);
  }
  return out;
}

std::string Word::pretty() const {
  if (letters_.empty()) {
    return "1";
  }
  std::string out;
  size_t i = 0;
  while (i < letters_.size()) {
    size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) {
      ++j;
    }
    if (!out.empty()) {
      out += '.';
    }
    out += alphabet_->name(letters_[i]);
    if (j - i > 1) {
      out += '^' + std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

Word Word::parse(std::string const& text, AlphabetPtr const& alphabet) {
  if (!alphabet) {
    throw Error("word parse requires an alphabet");
  }
  if (text == "1") {
    return Word(alphabet);
  }
  std::vector<uint8_t> letters;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t dot = text.find('.', pos);
    std::string tok = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
    if (tok.empty()) {
      throw Error("empty token in word '" + text + "'");
    }
    // Accept x1^3 shorthand on input as well.
    size_t rep = 1;
    if (size_t caret = tok.find('^'); caret != std::string::npos) {
      std::string count = tok.substr(caret + 1);
      tok = tok.substr(0, caret);
      if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos) {
        throw Error("bad power in word token '" + tok + "'");
      }
      rep = std::stoul(count);
    }
    size_t idx = alphabet->index(tok);
    if (idx == Alphabet::npos) {
      // Fallback: a run of single-character generator names written without dots.
      bool all_single = true;
      std::vector<uint8_t> expanded;
      for (char ch : tok) {
        size_t ci = alphabet->index(std::string(1, ch));
        if (ci == Alphabet::npos) {
          all_single = false;
          break;
        }
        expanded.push_back(static_cast<uint8_t>(ci));
      }
      if (!all_single || expanded.empty()) {
        throw Error("unknown generator '" + tok + "' in word '" + text + "'");
      }
      for (size_t r = 0; r < rep; ++r) {
        letters.insert(letters.end(), expanded.begin(), expanded.end());
      }
    } else {
      for (size_t r = 0; r < rep; ++r) {
        letters.push_back(static_cast<uint8_t>(idx));
      }
    }
    if (dot == std::string::npos) {
      break;
    }
    pos = dot + 1;
  }
  return Word(alphabet, std::move(letters));
}

Word concat(Word const& u, Word const& v) {
  require_same_alphabet(u, v);
  std::vector<uint8_t> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), std::move(letters));
}

Word concat(std::initializer_list<Word> parts) {
  if (parts.size() == 0) {
    throw Error("concat of no parts");
  }
  Word out = *parts.begin();
  bool first = true;
  for (auto const& p : parts) {
    if (first) {
      first = false;
      continue;
    }
    out = concat(out, p);
  }
  return out;
}

Word power(Word const& w, size_t n) {
  std::vector<uint8_t> letters;
  letters.reserve(w.size() * n);
  for (size_t i = 0; i < n; ++i) {
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return Word(w.alphabet(), std::move(letters));
}

Word letter(AlphabetPtr const& alphabet, size_t index) {
  if (!alphabet || index >= alphabet->size()) {
    throw Error("letter index out of range");
  }
  return Word(alphabet, {static_cast<uint8_t>(index)});
}

bool is_prefix(Word const& p, Word const& w) {
  require_same_alphabet(p, w);
  if (p.size() > w.size()) {
    return false;
  }
  return std::equal(p.letters().begin(), p.letters().end(), w.letters().begin());
}

bool is_suffix(Word const& s, Word const& w) {
  require_same_alphabet(s, w);
  if (s.size() > w.size()) {
    return false;
  }
  return std::equal(s.letters().rbegin(), s.letters().rend(), w.letters().rbegin());
}

size_t find_factor(Word const& w, Word const& f, size_t from) {
  require_same_alphabet(w, f);
  if (f.empty()) {
    return from <= w.size() ? from : Alphabet::npos;
  }
  if (f.size() > w.size()) {
    return Alphabet::npos;
  }
  auto const& hay = w.letters();
  auto const& needle = f.letters();
  for (size_t i = from; i + needle.size() <= hay.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), hay.begin() + i)) {
      return i;
    }
  }
  return Alphabet::npos;
}

bool factor_occurs(Word const& w, Word const& f) {
  return find_factor(w, f) != Alphabet::npos;
}

Word primitive_root(Word const& w) {
  if (w.empty()) {
    throw Error("empty word has no primitive root");
  }
  size_t n = w.size();
  for (size_t p = 1; p <= n; ++p) {
    if (n % p != 0) {
      continue;
    }
    bool ok = true;
    for (size_t i = p; i < n && ok; ++i) {
      ok = w[i] == w[i - p];
    }
    if (ok) {
      return w.prefix(p);
    }
  }
  return w;  // unreachable
}

std::vector<Word> enumerate_words(AlphabetPtr const& alphabet, size_t bound) {
  std::vector<Word> out;
  out.emplace_back(alphabet);
  std::vector<Word> current = {Word(alphabet)};
  for (size_t len = 1; len <= bound; ++len) {
    std::vector<Word> next;
    next.reserve(current.size() * alphabet->size());
    for (auto const& w : current) {
      for (size_t g = 0; g < alphabet->size(); ++g) {
        next.push_back(concat(w, letter(alphabet, g)));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    current = std::move(next);
  }
  return out;
}

}  // namespace mwb
