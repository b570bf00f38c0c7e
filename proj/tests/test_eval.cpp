#include "doctest.h"

#include "mwb/error.hpp"
#include "mwb/eval.hpp"
#include "mwb/gadgets.hpp"
#include "mwb/parse.hpp"

using namespace mwb;

TEST_CASE("bounded quantifiers, exact terms") {
  Structure S = Structure::nat();
  EvalOptions opt;
  opt.bound = 3;
  // x = 3 has no successor inside the domain.
  CHECK(!eval(S, parse_formula("A x. E y. y = x + 1", Sig::arithmetic), {}, opt));
  // x = 3 works because 3 * 3 is computed exactly, past the bound.
  CHECK(eval(S, parse_formula("E x. x * x = 9", Sig::arithmetic), {}, opt));
  CHECK(!eval(S, parse_formula("E x. x * x = 16", Sig::arithmetic), {}, opt));

  EvalStats st;
  CHECK(eval(S, parse_formula("E x. x + 1 = 2", Sig::arithmetic), {}, opt, &st));
  CHECK(st.nodes > 0);
  CHECK(st.candidates > 0);
}

TEST_CASE("monoid evaluation with a fixed assignment") {
  MonoidModel M = MonoidModel::free_monoid(Alphabet::standard(2));
  Structure S = Structure::over(M);
  FormulaPtr basis = parse_formula(
      "(! x = 1 & A y. A z. (x = y . z -> (y = 1 | z = 1)))", Sig::monoid,
      M.alphabet());
  EvalOptions opt;
  opt.bound = 4;
  Word x1 = letter(M.alphabet(), 0);
  CHECK(eval(S, basis, {{"x", x1}}, opt));
  CHECK(!eval(S, basis, {{"x", concat(x1, letter(M.alphabet(), 1))}}, opt));
  CHECK(!eval(S, basis, {{"x", Word(M.alphabet())}}, opt));
}

TEST_CASE("witness pools bypass the bound for existentials only") {
  MonoidModel M = MonoidModel::free_monoid(Alphabet::standard(2));
  Structure S = Structure::over(M);
  Word big = power(letter(M.alphabet(), 0), 5);

  EvalOptions opt;
  opt.bound = 1;
  opt.mode = EvalMode::witness;
  opt.witnesses["x"] = {Value{big}};
  CHECK(eval(S, parse_formula("E x. x = 'x1.x1.x1.x1.x1'", Sig::monoid,
                              M.alphabet()),
             {}, opt));
  // Universals keep the bounded domain even when a pool matches their name.
  opt.witnesses["x"] = {Value{Word(M.alphabet())}};
  CHECK(!eval(S, parse_formula("A x. x = 1", Sig::monoid, M.alphabet()), {}, opt));
}

TEST_CASE("pool names match through suffix stripping") {
  MonoidModel M = MonoidModel::free_monoid(Alphabet::standard(2));
  Structure S = Structure::over(M);
  Word big = power(letter(M.alphabet(), 0), 6);
  EvalOptions opt;
  opt.bound = 0;
  opt.mode = EvalMode::witness;
  opt.witnesses["w"] = {Value{big}};
  FormulaPtr f = f_ex("w_12", f_ex("w_3_4", f_eq(t_cat(t_var("w_12"), t_var("w_3_4")),
                                                 t_word(power(big, 2)))));
  CHECK(eval(S, f, {}, opt));
}

TEST_CASE("solutions are sorted and complete") {
  Structure S = Structure::nat();
  EvalOptions opt;
  opt.bound = 10;
  auto sols = solutions(S, parse_formula("x + y = 4", Sig::arithmetic),
                        {"x", "y"}, opt);
  REQUIRE(sols.size() == 5);
  for (size_t i = 0; i + 1 < sols.size(); ++i) {
    CHECK(value_less(sols[i][0], sols[i + 1][0]));
  }
  CHECK(std::get<uint64_t>(sols[0][0]) == 0);
  CHECK(std::get<uint64_t>(sols[0][1]) == 4);
  CHECK(std::get<uint64_t>(sols[4][0]) == 4);
  CHECK(std::get<uint64_t>(sols[4][1]) == 0);
}

TEST_CASE("guard, unbound variables, sort mismatches") {
  Structure S = Structure::nat();
  EvalOptions tight;
  tight.bound = 100;
  tight.guard = 10;
  CHECK_THROWS_AS(
      eval(S, parse_formula("A x. A y. A z. x + y + z = z + y + x",
                            Sig::arithmetic),
           {}, tight),
      EvalLimitError);

  EvalOptions opt;
  opt.bound = 2;
  CHECK_THROWS_AS(
      eval(S, parse_formula("x = 1", Sig::arithmetic), {}, opt), Error);

  MonoidModel M = MonoidModel::free_monoid(Alphabet::standard(2));
  FormulaPtr mono = parse_formula("E x. x = 1", Sig::monoid, M.alphabet());
  CHECK_THROWS_AS(eval(S, mono, {}, opt), Error);
}

TEST_CASE("definition checking") {
  Structure S = Structure::nat();
  EvalOptions opt;
  opt.bound = 6;
  FormulaPtr f = parse_formula("x + x = y", Sig::arithmetic);

  std::vector<std::vector<Value>> right{{Value{uint64_t(0)}, Value{uint64_t(0)}},
                                        {Value{uint64_t(1)}, Value{uint64_t(2)}}};
  Report r = check_definition(S, f, {"x", "y"}, right, opt);
  CHECK(!r.clean());  // (2,4) and (3,6) are solutions we did not expect
  CHECK(r.false_positives.size() == 2);
  CHECK(r.false_negatives.empty());

  right.push_back({Value{uint64_t(2)}, Value{uint64_t(4)}});
  right.push_back({Value{uint64_t(3)}, Value{uint64_t(6)}});
  Report c = check_definition(S, f, {"x", "y"}, right, opt);
  CHECK(c.clean());
  CHECK(c.ok == 4);
  CHECK(c.str() == "OK 4\n");

  right.push_back({Value{uint64_t(3)}, Value{uint64_t(7)}});
  Report m = check_definition(S, f, {"x", "y"}, right, opt);
  CHECK(m.false_negatives.size() == 1);
  CHECK(m.str().find("FN (3,7)") == 0);
}
