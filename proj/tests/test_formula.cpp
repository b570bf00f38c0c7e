#include "doctest.h"

#include "mwb/error.hpp"
#include "mwb/formula.hpp"
#include "mwb/parse.hpp"

using namespace mwb;

TEST_CASE("vector builders fold to the right") {
  TermPtr abc = t_cat({t_var("a"), t_var("b"), t_var("c")});
  CHECK(equals(abc, t_cat(t_var("a"), t_cat(t_var("b"), t_var("c")))));
  FormulaPtr e1 = f_eq(t_var("x"), t_var("y"));
  FormulaPtr e2 = f_eq(t_var("y"), t_var("z"));
  FormulaPtr e3 = f_eq(t_var("z"), t_var("x"));
  CHECK(equals(f_and({e1, e2, e3}), f_and(e1, f_and(e2, e3))));
  CHECK(equals(f_or({e1, e2}), f_or(e1, e2)));
  std::vector<std::string> xy{"x", "y"};
  CHECK(equals(f_ex(xy, e1), f_ex("x", f_ex("y", e1))));
  CHECK(equals(f_all(xy, e1), f_all("x", f_all("y", e1))));
}

TEST_CASE("parse shapes") {
  FormulaPtr f = parse_formula("A x. E y. x = y", Sig::arithmetic);
  REQUIRE(f->kind == Formula::Kind::forall);
  CHECK(f->var == "x");
  REQUIRE(f->a->kind == Formula::Kind::exists);
  CHECK(f->a->a->kind == Formula::Kind::equal);

  FormulaPtr g = parse_formula("2 * 3 + 1 = 7", Sig::arithmetic);
  REQUIRE(g->kind == Formula::Kind::equal);
  CHECK(equals(g->lhs, t_plus(t_times(t_num(2), t_num(3)), t_num(1))));
  CHECK(equals(g->rhs, t_num(7)));

  AlphabetPtr A = Alphabet::standard(2);
  FormulaPtr m = parse_formula("E x. x . 'x1' = 'x1' . x", Sig::monoid, A);
  REQUIRE(m->kind == Formula::Kind::exists);
  CHECK(equals(m->a->lhs, t_cat(t_var("x"), t_word(letter(A, 0)))));
}

TEST_CASE("parse errors carry a column") {
  for (std::string bad : {"", "A x.", "x = ", "(x = y", "x == y", "E 1. x = 1"}) {
    try {
      parse_formula(bad, Sig::arithmetic);
      FAIL("expected ParseError for: " << bad);
    } catch (ParseError const& e) {
      CHECK(e.column >= 1);
    }
  }
}

TEST_CASE("free variables") {
  FormulaPtr f = parse_formula("E x. x = y", Sig::arithmetic);
  CHECK(free_vars(f) == std::set<std::string>{"y"});
  CHECK(free_vars(parse_formula("A x. E y. x = y", Sig::arithmetic)).empty());
  CHECK(free_vars(f_eq(t_var("u"), t_var("v"))) ==
        std::set<std::string>{"u", "v"});
}

TEST_CASE("substitution avoids capture") {
  FormulaPtr f = parse_formula("E y. x = y", Sig::arithmetic);
  FormulaPtr g = substitute(f, "x", t_var("y"));
  REQUIRE(g->kind == Formula::Kind::exists);
  CHECK(g->var == "y_1");
  CHECK(free_vars(g) == std::set<std::string>{"y"});
  CHECK(equals(g->a->rhs, t_var("y_1")));

  // No capture risk: bound variable is untouched.
  FormulaPtr h = substitute(f, "x", t_num(3));
  CHECK(h->var == "y");
  CHECK(free_vars(h).empty());
}

TEST_CASE("validate enforces the signature discipline") {
  CHECK_NOTHROW(
      validate(parse_formula("A x. x + 0 = x", Sig::arithmetic), Sig::arithmetic));

  // x both free and bound.
  FormulaPtr mixed = f_and(f_eq(t_var("x"), t_num(0)),
                           f_ex("x", f_eq(t_var("x"), t_num(1))));
  CHECK_THROWS_AS(validate(mixed, Sig::arithmetic), Error);

  FormulaPtr twice = f_ex("x", f_ex("x", f_eq(t_var("x"), t_num(0))));
  CHECK_THROWS_AS(validate(twice, Sig::arithmetic), Error);

  FormulaPtr plus = f_eq(t_plus(t_var("x"), t_var("y")), t_var("z"));
  CHECK_THROWS_AS(validate(plus, Sig::monoid), Error);

  FormulaPtr cat = f_eq(t_cat(t_var("x"), t_var("y")), t_var("z"));
  CHECK_THROWS_AS(validate(cat, Sig::arithmetic), Error);
}

TEST_CASE("print emits re-parseable text") {
  AlphabetPtr A = Alphabet::standard(2);
  for (std::string text :
       {"A x. E y. (x = y & ! x = 1)", "E x. (x . x = 'x1.x2' | x = 1)",
        "A x. (x = 1 -> x . 'x2' = 'x2')"}) {
    FormulaPtr f = parse_formula(text, Sig::monoid, A);
    CHECK(equals(parse_formula(print(f), Sig::monoid, A), f));
  }
  for (std::string text : {"A x. x + 1 = 1 + x", "E x. x * x + 1 = 2 * x + 0"}) {
    FormulaPtr f = parse_formula(text, Sig::arithmetic);
    CHECK(equals(parse_formula(print(f), Sig::arithmetic), f));
  }
}
