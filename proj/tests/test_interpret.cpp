#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "mwb/error.hpp"
#include "mwb/eval.hpp"
#include "mwb/gadgets.hpp"
#include "mwb/interpret.hpp"
#include "mwb/parse.hpp"

using namespace mwb;

namespace {

GadgetParams P2() { return standard_params(); }

Word x1p(size_t n) { return power(P2().l1(), n); }
Word x2p(size_t n) { return power(P2().l2(), n); }

std::vector<Value> mult_word_pool(GadgetParams const& P, uint64_t top) {
  std::vector<Value> out;
  for (uint64_t n = 0; n <= top; ++n)
    for (uint64_t m = 0; m <= top; ++m)
      out.push_back(Value(mult_gadget_word(P, n, m)));
  return out;
}

std::vector<Value> ladder_pool(uint64_t top) {
  GadgetParams fwd = P2();
  GadgetParams rev{fwd.alphabet, 1, 0};
  std::vector<Value> out;
  for (uint64_t s = 1; s <= top; ++s) {
    out.push_back(Value(f_word(fwd, s)));
    out.push_back(Value(f_word(rev, s)));
  }
  return out;
}

}  // namespace

TEST_CASE("the arithmetic corpus is bound stable at 8") {
  auto corpus = arithmetic_corpus();
  CHECK(corpus.size() == 20);
  Structure N = Structure::nat();
  EvalOptions opt;
  opt.bound = 8;
  for (auto const& s : corpus) {
    FormulaPtr f = parse_formula(s.text, Sig::arithmetic);
    CHECK(free_vars(f).empty());
    CHECK_MESSAGE(eval(N, f, {}, opt) == s.truth, s.text);
  }
}

TEST_CASE("arithmetic sits inside the free monoid on the payload letter") {
  Interpretation I = nat_in_free();
  CHECK(I.formula_backed());
  CHECK(I.dim == 1);
  CHECK(I.name == "nat-in-free");
  REQUIRE(I.params.size() == 1);
  CHECK(I.params[0] == P2().l1());

  for (uint64_t n = 0; n <= 5; ++n) {
    auto enc = I.encode(Elem(n));
    REQUIRE(enc.size() == 1);
    CHECK(std::get<Word>(enc[0]) == x1p(n));
    CHECK(std::get<uint64_t>(I.decode(enc)) == n);
  }
  CHECK_THROWS_AS(I.decode({Value(x2p(1))}), Error);
  CHECK_THROWS_AS(I.decode({Value(concat(x1p(1), x2p(1)))}), Error);
  CHECK_THROWS_AS(I.encode(Elem(NatTuple{1, 2})), Error);
}

TEST_CASE("translated sentences evaluate like their originals") {
  Interpretation I = nat_in_free();
  MonoidModel M = MonoidModel::free_monoid(P2().alphabet);
  Structure S = Structure::over(M);

  FormulaPtr sum_true = translate(parse_formula("1 + 1 = 2", Sig::arithmetic), I);
  CHECK(free_vars(sum_true).empty());
  CHECK_NOTHROW(validate(sum_true, Sig::monoid));
  EvalOptions ex;
  ex.bound = 2;
  CHECK(eval(S, sum_true, {}, ex));

  FormulaPtr sum_false =
      translate(parse_formula("1 + 1 = 3", Sig::arithmetic), I);
  ex.bound = 3;
  CHECK_FALSE(eval(S, sum_false, {}, ex));

  // The product slot is forced to x1^6, past the quantifier bound: witness
  // mode takes forced values as computed, so the small bound still decides
  // the sentence by its arithmetic content.
  EvalOptions wopt;
  wopt.bound = 3;
  wopt.mode = EvalMode::witness;
  wopt.guard = 50'000'000;
  wopt.witnesses["w"] = mult_word_pool(P2(), 3);
  FormulaPtr prod_true =
      translate(parse_formula("2 * 3 = 6", Sig::arithmetic), I);
  CHECK(eval(S, prod_true, {}, wopt));
  FormulaPtr prod_false =
      translate(parse_formula("2 * 3 = 7", Sig::arithmetic), I);
  CHECK_FALSE(eval(S, prod_false, {}, wopt));
}

TEST_CASE("operation graphs and numerals of the payload interpretation") {
  Interpretation I = nat_in_free();
  MonoidModel M = MonoidModel::free_monoid(P2().alphabet);
  Structure S = Structure::over(M);

  FormulaPtr plus = I.ops.at("plus");
  EvalOptions opt;
  opt.bound = 2;
  Assignment a{{"x_1", Value(x1p(2))}, {"y_1", Value(x1p(3))},
               {"z_1", Value(x1p(5))}};
  CHECK(eval(S, plus, a, opt));
  a["z_1"] = Value(x1p(4));
  CHECK_FALSE(eval(S, plus, a, opt));

  FormulaPtr times = I.ops.at("times");
  EvalOptions wopt;
  wopt.bound = 3;
  wopt.mode = EvalMode::witness;
  wopt.guard = 50'000'000;
  wopt.witnesses["w"] = mult_word_pool(P2(), 3);
  a["z_1"] = Value(x1p(6));
  CHECK(eval(S, times, a, wopt));
  a["z_1"] = Value(x1p(5));
  CHECK_FALSE(eval(S, times, a, wopt));

  uint64_t tag = 0;
  FormulaPtr three = I.numeral(3, {"v"}, tag);
  EvalOptions sopt;
  sopt.bound = 4;
  auto sols = solutions(S, three, {"v"}, sopt);
  REQUIRE(sols.size() == 1);
  CHECK(std::get<Word>(sols[0][0]) == x1p(3));
}

TEST_CASE("translate refuses what the interpretation cannot express") {
  Interpretation I = nat_in_free();
  FormulaPtr wordy =
      parse_formula("E x. x . 'x1' = 'x1' . x", Sig::monoid, P2().alphabet);
  CHECK_THROWS_AS(translate(wordy, I), Error);

  Interpretation codes = monoid_in_nat(P2().alphabet);
  CHECK_FALSE(codes.formula_backed());
  FormulaPtr closed = parse_formula("A x. x = x", Sig::monoid, P2().alphabet);
  CHECK_THROWS_AS(translate(closed, codes), Error);

  CHECK_THROWS_AS(identity_interpretation(Sig::monoid, nullptr), Error);
}

TEST_CASE("interpretations chain") {
  Interpretation idF = identity_interpretation(Sig::monoid, P2().alphabet);
  Interpretation C = compose(idF, nat_in_free());
  CHECK(C.name == "nat-in-free-via-identity-free");
  CHECK(C.dim == 1);
  CHECK(C.formula_backed());
  MonoidModel M = MonoidModel::free_monoid(P2().alphabet);
  Structure S = Structure::over(M);
  // The identity hop turns each product subterm into a slot equation, so the
  // bound must cover the slot values (here x1^3 from the domain guards).
  EvalOptions opt;
  opt.bound = 3;
  CHECK(eval(S, translate(parse_formula("1 + 1 = 2", Sig::arithmetic), C), {},
             opt));

  CHECK_THROWS_AS(compose(nat_in_free(), nat_in_free()), Error);

  Interpretation seq = compose(nat_in_free(), snn_in_nat());
  CHECK(seq.name == "snn-in-free-via-nat-in-free");
  CHECK_FALSE(seq.formula_backed());
  CHECK_THROWS_AS(
      translate(parse_formula("A x. x = x", Sig::arithmetic), seq), Error);
  for (NatTuple t : {NatTuple{}, {1}, {2, 2}, {0, 1, 2}}) {
    auto enc = seq.encode(Elem(t));
    REQUIRE(enc.size() == 1);
    Word w = std::get<Word>(enc[0]);
    CHECK(w == x1p(w.size()));
    CHECK(std::get<NatTuple>(seq.decode(enc)) == t);
  }
}

TEST_CASE("sequences of naturals live inside the free monoid directly") {
  Interpretation I = snn_in_free();
  CHECK(I.formula_backed());
  CHECK(I.ops.count("concat") == 1);

  auto enc = I.encode(Elem(NatTuple{1, 0, 2}));
  REQUIRE(enc.size() == 1);
  CHECK(std::get<Word>(enc[0]) == tuple_word(P2(), {1, 0, 2}));
  CHECK(std::get<NatTuple>(I.decode(enc)) == NatTuple{1, 0, 2});
  CHECK(std::get<NatTuple>(I.decode({Value(P2().empty())})) == NatTuple{});
  CHECK_THROWS_AS(I.decode({Value(x2p(2))}), Error);
  CHECK_THROWS_AS(I.encode(Elem(uint64_t{3})), Error);

  MonoidModel M = MonoidModel::free_monoid(P2().alphabet);
  Structure S = Structure::over(M);
  EvalOptions opt;
  opt.bound = 8;
  CHECK(eval(S, I.delta, {{"x_1", Value(tuple_word(P2(), {1, 2}))}}, opt));
  CHECK(eval(S, I.delta, {{"x_1", Value(P2().empty())}}, opt));
  CHECK_FALSE(eval(S, I.delta, {{"x_1", Value(x2p(2))}}, opt));

  FormulaPtr cat = I.ops.at("concat");
  EvalOptions copt;
  copt.bound = 12;
  Assignment a{{"x_1", Value(tuple_word(P2(), {1}))},
               {"y_1", Value(tuple_word(P2(), {2}))},
               {"z_1", Value(tuple_word(P2(), {1, 2}))}};
  CHECK(eval(S, cat, a, copt));
  a["z_1"] = Value(tuple_word(P2(), {2, 1}));
  CHECK_FALSE(eval(S, cat, a, copt));
}

TEST_CASE("the parameter-free interpretation transports exponents") {
  Interpretation I = nat_in_free_noparam(P2().alphabet);
  CHECK(I.dim == 2);
  CHECK(I.formula_backed());
  CHECK(I.params.empty());

  auto enc = I.encode(Elem(uint64_t{2}));
  REQUIRE(enc.size() == 2);
  CHECK(std::get<Word>(enc[0]) == x1p(2));
  CHECK(std::get<Word>(enc[1]) == x1p(1));
  CHECK(std::get<uint64_t>(I.decode(enc)) == 2);
  CHECK_THROWS_AS(I.decode({Value(concat(x1p(1), x2p(1))), Value(x1p(1))}), Error);
  CHECK_THROWS_AS(I.decode({Value(x1p(2)), Value(x1p(2))}), Error);

  MonoidModel M = MonoidModel::free_monoid(P2().alphabet);
  Structure S = Structure::over(M);
  EvalOptions opt;
  opt.bound = 3;
  opt.mode = EvalMode::witness;
  opt.guard = 200'000'000;
  opt.witnesses["f"] = ladder_pool(4);

  // eps compares payload exponents, across letters when needed.
  CHECK(eval(S, I.eps, {{"x_1", Value(x1p(2))}, {"y_1", Value(x1p(2))}}, opt));
  CHECK(eval(S, I.eps, {{"x_1", Value(x1p(2))}, {"y_1", Value(x2p(2))}}, opt));
  CHECK_FALSE(
      eval(S, I.eps, {{"x_1", Value(x1p(2))}, {"y_1", Value(x2p(3))}}, opt));

  opt.witnesses["w"] = mult_word_pool(P2(), 3);
  opt.witnesses["k"] = {Value(P2().empty()), Value(x1p(1)), Value(x2p(1)),
                        Value(x1p(2)), Value(x2p(2))};
  for (uint64_t k = 0; k <= 1; ++k) {
    for (uint64_t j = 0; j <= 2; ++j) {
      uint64_t tag = 0;
      FormulaPtr nf = I.numeral(k, {"v_1", "v_2"}, tag);
      Assignment a{{"v_1", Value(x1p(j))}, {"v_2", Value(x1p(1))}};
      CHECK_MESSAGE(eval(S, nf, a, opt) == (j == k),
                    "numeral " << k << " at exponent " << j);
    }
  }
  uint64_t tag = 0;
  FormulaPtr two = I.numeral(2, {"v_1", "v_2"}, tag);
  CHECK(eval(S, two, {{"v_1", Value(x1p(2))}, {"v_2", Value(x1p(1))}}, opt));
  CHECK_FALSE(
      eval(S, two, {{"v_1", Value(x1p(1))}, {"v_2", Value(x1p(1))}}, opt));
}

TEST_CASE("arithmetic sits inside traces with a non-commuting pair") {
  AlphabetPtr X3 = Alphabet::standard(3);
  MonoidModel T = MonoidModel::trace_monoid(X3, {{1, 2}});
  Interpretation I = nat_in_trace(T);
  CHECK(I.params.size() == 1);
  CHECK(I.params[0] == letter(X3, 0));

  Structure S = Structure::over(T);
  EvalOptions opt;
  opt.bound = 2;
  CHECK(eval(S, translate(parse_formula("1 + 1 = 2", Sig::arithmetic), I), {},
             opt));
  CHECK_FALSE(eval(
      S, translate(parse_formula("1 + 1 = 1", Sig::arithmetic), I), {}, opt));

  MonoidModel F = MonoidModel::free_monoid(P2().alphabet);
  CHECK_THROWS_AS(nat_in_trace(F), Error);
  MonoidModel C = MonoidModel::trace_monoid(P2().alphabet, {{0, 1}});
  CHECK_THROWS_AS(nat_in_trace(C), Error);
}

TEST_CASE("the two directions compose to the identity on instances") {
  BiReport empty = check_bi_interpretation(monoid_in_nat(P2().alphabet),
                                           nat_in_free(), {}, {});
  CHECK(empty.clean());
  CHECK(empty.str().find("monoid side:") != std::string::npos);
  CHECK(empty.str().find("arithmetic side:") != std::string::npos);

  AlphabetPtr X3 = Alphabet::standard(3);
  GadgetParams P3{X3, 0, 1};
  std::vector<Word> monomials{letter(X3, 0), letter(X3, 2),
                              concat(letter(X3, 1), letter(X3, 0))};
  std::vector<NatTuple> tuples{{0}, {1}, {0, 1}, {2, 0}, {}};
  GadgetParams wide{X3, 0, 1};
  Interpretation down = monoid_in_nat(X3);
  Interpretation up = nat_in_free(wide);
  BiReport r = check_bi_interpretation(down, up, monomials, tuples);
  CHECK_MESSAGE(r.clean(), r.str());
  CHECK(r.monoid_side.ok == monomials.size());
  CHECK(r.arithmetic_side.ok == tuples.size());

  BiReport bad = check_bi_interpretation(down, up, {Word(X3)}, {});
  CHECK_FALSE(bad.clean());
  CHECK(bad.str().find("empty monomial") != std::string::npos);
}

TEST_CASE("translation inflates quantifier depth by a measured constant") {
  size_t m1 = measured_inflation(nat_in_free());
  size_t m2 = measured_inflation(nat_in_free());
  CHECK(m1 == m2);
  CHECK(m1 >= 1);
  CHECK(m1 <= 4);
}
