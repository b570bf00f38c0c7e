#ifndef MWB_WORD_HPP
#define MWB_WORD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mwb {

// A finite ordered alphabet of named generators. Order of appearance is the
// fixed total order used everywhere (enumeration, lexicographic comparisons,
// "first two generators" parameter defaults). Names must be distinct and
// non-empty, and may not contain the token separators '.' or quote characters.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  std::string const& name(size_t i) const { return names_.at(i); }
  // Index of a generator name, or npos when the name is unknown.
  size_t index(std::string const& name) const;
  static constexpr size_t npos = static_cast<size_t>(-1);

  bool operator==(Alphabet const& other) const { return names_ == other.names_; }

  // Convenience: x1,...,xn.
  static std::shared_ptr<Alphabet const> standard(size_t n);
  static std::shared_ptr<Alphabet const> of(std::vector<std::string> names);

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<Alphabet const>;

// A word over an alphabet: a flat sequence of generator indices. Words are
// plain free-monoid objects; equality of *monoid elements* lives in
// MonoidModel (monoid.hpp). Letter indices always refer to the attached
// alphabet, and operations on two words require the same alphabet (checked).
class Word {
 public:
  Word() = default;  // empty word over the empty alphabet; usable as identity
                     // only once given an alphabet via with_alphabet()
  explicit Word(AlphabetPtr alphabet, std::vector<uint8_t> letters = {});

  AlphabetPtr const& alphabet() const { return alphabet_; }
  std::vector<uint8_t> const& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  uint8_t operator[](size_t i) const { return letters_[i]; }

  Word with_alphabet(AlphabetPtr a) const;  // re-tag an empty word

  // Graphical (letter-by-letter) comparisons; these are free-monoid notions.
  bool operator==(Word const& other) const;
  bool operator!=(Word const& other) const { return !(*this == other); }
  bool operator<(Word const& other) const;  // length, then lex by letter index

  Word subword(size_t pos, size_t len) const;
  Word prefix(size_t len) const { return subword(0, len); }
  Word suffix(size_t len) const { return subword(size() - len, len); }

  // Serialization: generator names joined with '.', empty word printed "1".
  std::string str() const;
  // Human form with run-length powers, e.g. x2^2.x1^3.
  std::string pretty() const;

  static Word parse(std::string const& text, AlphabetPtr const& alphabet);

 private:
  AlphabetPtr alphabet_;
  std::vector<uint8_t> letters_;
};

Word concat(Word const& u, Word const& v);
Word concat(std::initializer_list<Word> parts);
Word power(Word const& w, size_t n);
Word letter(AlphabetPtr const& alphabet, size_t index);

// Free-monoid occurrence tests (graphical).
bool is_prefix(Word const& p, Word const& w);
bool is_suffix(Word const& s, Word const& w);
bool factor_occurs(Word const& w, Word const& f);      // empty factor: true
size_t find_factor(Word const& w, Word const& f, size_t from = 0);  // npos if absent

// The primitive root of a non-empty word: shortest u with w = u^k.
Word primitive_root(Word const& w);

// All words over the alphabet with length <= bound, shortest first and
// lexicographic (by letter index) within a length.
std::vector<Word> enumerate_words(AlphabetPtr const& alphabet, size_t bound);

}  // namespace mwb

#endif
