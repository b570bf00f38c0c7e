#include "doctest.h"

#include <algorithm>

#include "mwb/coding.hpp"
#include "mwb/error.hpp"

using namespace mwb;

TEST_CASE("cantor pairing") {
  CHECK(pair(0, 0) == 0);
  CHECK(pair(1, 2) == 8);
  CHECK(unpair(8) == std::pair<Code, Code>{1, 2});
  for (Nat a = 0; a <= 30; ++a)
    for (Nat b = 0; b <= 30; ++b) {
      auto [x, y] = unpair(pair(a, b));
      CHECK(x == a);
      CHECK(y == b);
    }
  for (Nat c = 0; c <= 500; ++c) {
    auto [a, b] = unpair(c);
    CHECK(pair(a, b) == c);
  }
  CHECK_THROWS_AS(pair(Code(1) << 64, Code(1) << 64), CodingError);
}

TEST_CASE("tuple codes") {
  CHECK(encode_tuple({}) == 0);
  CHECK(decode_tuple(0).empty());
  CHECK(encode_tuple({1}) == pair(1, pair(1, 0)));
  NatTuple t{3, 0, 7, 7};
  CHECK(decode_tuple(encode_tuple(t)) == t);
  // 251 = pair(1, 20) and 20 = pair(0, 5): residual 5 after one step.
  CHECK_THROWS_AS(decode_tuple(251), CodingError);
  // Codes distinguish (0) from ().
  CHECK(encode_tuple({0}) != 0);
}

TEST_CASE("list superstructure operations") {
  NatTuple s{4, 1, 9};
  CHECK(lss_length(s) == 3);
  CHECK(lss_length(NatTuple{}) == 0);
  CHECK(lss_position(s, 1) == 4);
  CHECK(lss_position(s, 3) == 9);
  CHECK_THROWS_AS(lss_position(s, 0), CodingError);
  CHECK_THROWS_AS(lss_position(s, 4), CodingError);
  CHECK(lss_concat(s, {2}) == NatTuple{4, 1, 9, 2});
  CHECK(lss_concat({}, s) == s);
  CHECK(lss_concat(s, {}) == s);
}

TEST_CASE("words as tuples of generator indices") {
  AlphabetPtr A = Alphabet::standard(3);
  Word w = Word::parse("x2.x1.x3", A);
  CHECK(monomial_to_tuple(w) == NatTuple{2, 1, 3});
  CHECK(tuple_to_monomial({2, 1, 3}, A) == w);
  CHECK(tuple_to_monomial({}, A).empty());
  CHECK_THROWS_AS(tuple_to_monomial({0}, A), CodingError);
  CHECK_THROWS_AS(tuple_to_monomial({4}, A), CodingError);
  CHECK(word_decode(word_code(w), A) == w);
  CHECK(word_code(Word(A)) == 0);

  std::vector<Code> seen;
  for (auto const& u : enumerate_words(A, 3)) seen.push_back(word_code(u));
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("tuple_str") {
  CHECK(tuple_str({}) == "()");
  CHECK(tuple_str({5}) == "(5)");
  CHECK(tuple_str({1, 3, 2}) == "(1,3,2)");
}

TEST_CASE("submonoid membership with witness") {
  AlphabetPtr A = Alphabet::standard(2);
  Word a = letter(A, 0), b = letter(A, 1);
  Word ab = concat(a, b);

  auto r = submonoid_member(concat(ab, ab), {ab});
  CHECK(r.member);
  CHECK(r.factors == std::vector<size_t>{0, 0});
  CHECK(r.warnings.empty());

  CHECK(!submonoid_member(concat(b, a), {ab}).member);
  CHECK(!submonoid_member(a, {ab, b}).member);

  auto e = submonoid_member(Word(A), {ab});
  CHECK(e.member);
  CHECK(e.factors.empty());

  // Identity generators are skipped but do not shift witness indices.
  auto w = submonoid_member(concat(ab, b), {Word(A), ab, b});
  CHECK(w.member);
  CHECK(w.factors == std::vector<size_t>{1, 2});
  CHECK(w.warnings.size() == 1);

  // Witness concatenates back to the target.
  Word g = concat({a, b, b, a, b});
  auto m = submonoid_member(g, {ab, b, a});
  REQUIRE(m.member);
  Word rebuilt(A);
  for (size_t i : m.factors) rebuilt = concat(rebuilt, std::vector<Word>{ab, b, a}[i]);
  CHECK(rebuilt == g);
}

TEST_CASE("membership code sets") {
  AlphabetPtr A = Alphabet::standard(2);
  Word x1 = letter(A, 0);
  auto codes = membership_code_set(A, {x1}, 2);
  std::vector<Code> want{word_code(Word(A)), word_code(x1),
                         word_code(power(x1, 2))};
  std::sort(want.begin(), want.end());
  CHECK(codes == want);
  CHECK(std::is_sorted(codes.begin(), codes.end()));
}
