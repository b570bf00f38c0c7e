#include "doctest.h"

#include <algorithm>

#include "mwb/error.hpp"
#include "mwb/monoid.hpp"
#include "oracles.hpp"

using namespace mwb;

TEST_CASE("free monoid is graphical") {
  MonoidModel M = MonoidModel::free_monoid(Alphabet::standard(2));
  AlphabetPtr A = M.alphabet();
  Word w = Word::parse("x1.x2.x1", A);
  CHECK(M.normal_form(w) == w);
  CHECK(M.is_normal_form(w));
  CHECK(M.equal(w, w));
  CHECK(!M.equal(w, Word::parse("x1.x1.x2", A)));
  CHECK(M.identity().empty());
  CHECK(M.is_irreducible(letter(A, 0)));
  CHECK(!M.is_irreducible(w));
  CHECK(!M.is_irreducible(M.identity()));
}

TEST_CASE("trace normal form is the least word of the commutation class") {
  AlphabetPtr A = Alphabet::of({"a", "b", "c"});
  MonoidModel M = MonoidModel::trace_monoid(A, {{0, 1}, {1, 2}});
  CHECK(M.commutes(0, 1));
  CHECK(M.commutes(2, 1));
  CHECK(!M.commutes(0, 2));

  for (auto const& u : enumerate_words(A, 4)) {
    auto cls = oracles::commutation_class(M, u);
    Word nf = M.normal_form(u);
    CHECK(cls.count(nf) == 1);
    CHECK(nf == *cls.begin());
    for (auto const& v : cls) CHECK(M.equal(u, v));
  }

  Word ba = Word::parse("b.a", A);
  CHECK(M.normal_form(ba) == Word::parse("a.b", A));
  CHECK(M.equal(ba, Word::parse("a.b", A)));
  CHECK(!M.equal(Word::parse("a.c", A), Word::parse("c.a", A)));

  CHECK_THROWS_AS(MonoidModel::trace_monoid(A, {{1, 1}}), Error);
}

TEST_CASE("trace center") {
  AlphabetPtr A = Alphabet::of({"a", "b", "c"});
  CHECK(center_is_trivial(MonoidModel::trace_monoid(A, {})));
  CHECK(center_is_trivial(MonoidModel::trace_monoid(A, {{0, 1}})));
  // b commutes with both others.
  CHECK(!center_is_trivial(MonoidModel::trace_monoid(A, {{0, 1}, {1, 2}})));
  CHECK(!center_is_trivial(MonoidModel::trace_monoid(Alphabet::of({"a"}), {})));
  CHECK_THROWS_AS(
      center_is_trivial(MonoidModel::free_monoid(Alphabet::standard(2))),
      Error);
}

TEST_CASE("baumslag-solitar rewriting") {
  MonoidModel M = MonoidModel::baumslag_solitar(3, 4);
  AlphabetPtr A = M.alphabet();
  Word a = letter(A, 0), b = letter(A, 1);

  // b^4 a rewrites to a b^3.
  Word lhs = concat(power(b, 4), a), rhs = concat(a, power(b, 3));
  CHECK(M.normal_form(lhs) == rhs);
  CHECK(M.is_normal_form(rhs));
  CHECK(!M.is_normal_form(lhs));
  CHECK(M.equal(lhs, rhs));
  CHECK(M.equal(concat(lhs, b), concat(rhs, b)));
  CHECK(!M.equal(lhs, concat(rhs, b)));
  CHECK(M.is_irreducible(a));
  CHECK(M.is_irreducible(b));
  CHECK(!M.is_irreducible(concat(a, b)));

  MonoidModel N = MonoidModel::baumslag_solitar(4, 3);
  // Here a b^4 rewrites to b^3 a.
  CHECK(N.normal_form(concat(a, power(b, 4))) == concat(power(b, 3), a));
  CHECK(N.is_normal_form(concat(power(b, 3), a)));
}

TEST_CASE("elements enumerates normal forms in order") {
  MonoidModel M = MonoidModel::baumslag_solitar(3, 4);
  auto els = M.elements(5);
  for (auto const& w : els) CHECK(M.is_normal_form(w));
  for (size_t i = 0; i + 1 < els.size(); ++i) CHECK(els[i] < els[i + 1]);
  // One congruence class of length 5 collapses: b^4 a is not a normal form.
  CHECK(els.size() < enumerate_words(M.alphabet(), 5).size());
}

TEST_CASE("spec strings round trip") {
  for (std::string spec :
       {"free:x1,x2", "trace:a,b,c;edges=a-b,b-c", "bs:3,4"}) {
    MonoidModel M = MonoidModel::parse(spec);
    CHECK(M.spec() == spec);
    CHECK(MonoidModel::parse(M.spec()).spec() == spec);
  }
  CHECK(MonoidModel::parse("bs:3,4").bs_k() == 3);
  CHECK(MonoidModel::parse("bs:3,4").bs_m() == 4);
  CHECK(MonoidModel::parse("trace:a,b;edges=a-b").commutes(0, 1));
  CHECK_THROWS_AS(MonoidModel::parse("ring:x"), Error);
  CHECK_THROWS_AS(MonoidModel::parse("trace:a,b;edges=a-z"), Error);
  CHECK_THROWS_AS(MonoidModel::parse("bs:0,4"), Error);
}

TEST_CASE("the no-cube fragment") {
  AlphabetPtr A = Alphabet::standard(3);
  Word x1 = letter(A, 0), x2 = letter(A, 1), x3 = letter(A, 2);
  CHECK(is_in_S(x1));
  CHECK(is_in_S(x2));
  CHECK(is_in_S(concat({x1, x2, x2, x1})));
  CHECK(!is_in_S(Word(A)));
  CHECK(!is_in_S(power(x2, 3)));
  CHECK(!is_in_S(concat({x1, x2, x2, x2, x1})));
  CHECK(!is_in_S(concat(x1, x3)));
  // Role letters are positional.
  CHECK(is_in_S(concat(x2, x3), 1, 2));
  CHECK(!is_in_S(concat(x2, x3), 0, 1));
}
