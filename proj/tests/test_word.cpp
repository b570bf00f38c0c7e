#include "doctest.h"

#include "mwb/error.hpp"
#include "mwb/word.hpp"

using namespace mwb;

TEST_CASE("alphabet names, order, lookup") {
  AlphabetPtr A = Alphabet::standard(3);
  CHECK(A->size() == 3);
  CHECK(A->name(0) == "x1");
  CHECK(A->name(2) == "x3");
  CHECK(A->index("x2") == 1);
  CHECK(A->index("zz") == Alphabet::npos);

  AlphabetPtr B = Alphabet::of({"a", "b"});
  CHECK(B->name(1) == "b");

  CHECK_THROWS_AS(Alphabet::of({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet::of({""}), Error);
  CHECK_THROWS_AS(Alphabet::of({"a.b"}), Error);
}

TEST_CASE("word parse, str, pretty") {
  AlphabetPtr A = Alphabet::standard(2);
  Word w = Word::parse("x1.x2.x1", A);
  CHECK(w.size() == 3);
  CHECK(w.str() == "x1.x2.x1");
  CHECK(Word::parse("1", A).empty());
  CHECK(Word(A).str() == "1");
  CHECK_THROWS_AS(Word::parse("x1.bogus", A), Error);

  Word r = concat(power(letter(A, 1), 2), power(letter(A, 0), 3));
  CHECK(r.pretty() == "x2^2.x1^3");
  CHECK(concat(power(letter(A, 1), 2), letter(A, 0)).pretty() == "x2^2.x1");
  CHECK(Word::parse(r.str(), A) == r);
}

TEST_CASE("word operations") {
  AlphabetPtr A = Alphabet::standard(2);
  Word x1 = letter(A, 0), x2 = letter(A, 1);
  Word w = concat({x1, x2, x1, x1});

  CHECK(w.size() == 4);
  CHECK(w[1] == 1);
  CHECK(power(x1, 0).empty());
  CHECK(power(w, 2) == concat(w, w));

  CHECK(w.prefix(2) == concat(x1, x2));
  CHECK(w.suffix(2) == concat(x1, x1));
  CHECK(w.subword(1, 2) == concat(x2, x1));

  CHECK(is_prefix(concat(x1, x2), w));
  CHECK(!is_prefix(x2, w));
  CHECK(is_suffix(x1, w));
  CHECK(factor_occurs(w, concat(x2, x1)));
  CHECK(factor_occurs(w, Word(A)));
  CHECK(!factor_occurs(w, concat(x2, x2)));
  CHECK(find_factor(w, concat(x1, x1)) == 2);
  CHECK(find_factor(w, concat(x2, x2)) == Alphabet::npos);

  Word t = Word().with_alphabet(A);
  CHECK(concat(t, x1) == x1);

  AlphabetPtr B = Alphabet::of({"a"});
  CHECK_THROWS_AS(concat(x1, letter(B, 0)), Error);
}

TEST_CASE("comparison is length then lex") {
  AlphabetPtr A = Alphabet::standard(2);
  Word x1 = letter(A, 0), x2 = letter(A, 1);
  CHECK(x2 < concat(x1, x1));
  CHECK(concat(x1, x2) < concat(x2, x1));
  CHECK(!(x1 < x1));
  CHECK(Word(A) < x1);
}

TEST_CASE("primitive root") {
  AlphabetPtr A = Alphabet::standard(2);
  Word x1 = letter(A, 0), x2 = letter(A, 1);
  Word u = concat(x1, x2);
  CHECK(primitive_root(power(u, 3)) == u);
  CHECK(primitive_root(x1) == x1);
  CHECK(primitive_root(concat(u, x1)) == concat(u, x1));
  CHECK_THROWS_AS(primitive_root(Word(A)), Error);
}

TEST_CASE("enumeration is shortest first, lex within a length") {
  AlphabetPtr A = Alphabet::standard(2);
  auto ws = enumerate_words(A, 3);
  CHECK(ws.size() == 15);
  CHECK(ws[0].empty());
  CHECK(ws[1] == letter(A, 0));
  CHECK(ws[2] == letter(A, 1));
  CHECK(ws[3] == power(letter(A, 0), 2));
  for (size_t i = 0; i + 1 < ws.size(); ++i) CHECK(ws[i] < ws[i + 1]);
}
