#include "doctest.h"

#include <map>
#include <set>

#include "mwb/error.hpp"
#include "mwb/eval.hpp"
#include "mwb/gadgets.hpp"
#include "mwb/prenex.hpp"

using namespace mwb;

namespace {
GadgetParams P2() { return standard_params(); }
}  // namespace

TEST_CASE("gadget word pins") {
  GadgetParams P = P2();
  CHECK(mult_gadget_word(P, 2, 1).str() ==
        "x2.x2.x1.x1.x1.x2.x1.x1.x2.x2.x1.x1.x2.x1.x1.x1.x2.x2");
  CHECK(mult_gadget_word(P, 0, 0).str() == "x2.x2.x1.x2.x1.x2.x2");
  CHECK(mult_gadget_word(P, 0, 3).str() == "x2.x2.x1.x2.x1.x1.x1.x1.x2.x2");
  CHECK(a_word(P, 2).str() == "x2.x1.x2.x1.x1");
  CHECK(trans_anchor(P).str() == "x1.x2.x1.x2.x2");
  size_t want[] = {17, 36, 62, 95};
  for (uint64_t s = 1; s <= 4; ++s) CHECK(f_word(P, s).size() == want[s - 1]);
  CHECK_THROWS_AS(f_word(P, 0), Error);
  CHECK_THROWS_AS(a_word(P, 0), Error);
}

TEST_CASE("tuple words") {
  GadgetParams P = P2();
  CHECK(tuple_word(P, {1, 0}).str() == "x1.x2.x2.x1.x1.x2");
  CHECK_THROWS_AS(tuple_word(P, {}), Error);
  for (std::vector<uint64_t> t :
       {std::vector<uint64_t>{0}, {3}, {0, 0}, {2, 1, 0}}) {
    CHECK(tuple_word_components(P, tuple_word(P, t)) == t);
  }
  CHECK_THROWS_AS(tuple_word_components(P, P.empty()), Error);
  CHECK_THROWS_AS(tuple_word_components(P, P.l2()), Error);
  CHECK_THROWS_AS(tuple_word_components(P, concat(P.l2(), P.l1())), Error);
}

TEST_CASE("monomial encoding words") {
  GadgetParams P = P2();
  Word xw = tuple_word(P, {1});
  CHECK(iso_word(P, xw).str() ==
        "x2.x1.x2.x2.x1.x1.x2.x1.x2.x1.x2.x2.x2.x1.x2.x1");
  // Component 0 is not a generator index.
  CHECK_THROWS_AS(iso_word(P, tuple_word(P, {0})), Error);
  // Component past the alphabet size.
  CHECK_THROWS_AS(iso_word(P, tuple_word(P, {3})), Error);
  CHECK_THROWS_AS(iso_word(P, P.l1()), Error);
}

TEST_CASE("trace variant of the encoding word") {
  AlphabetPtr A = Alphabet::standard(3);
  MonoidModel T = MonoidModel::trace_monoid(A, {});
  Word xw = tuple_word(GadgetParams{A, 0, 1}, {2});
  Word w = iso_word_trace(T, xw, 0, 1);
  CHECK(!w.empty());
  bool has_x3 = false;
  for (size_t i = 0; i < w.size(); ++i) has_x3 |= (w[i] == 2);
  CHECK(has_x3);

  MonoidModel F = MonoidModel::free_monoid(A);
  CHECK_THROWS_AS(iso_word_trace(F, xw, 0, 1), Error);
  MonoidModel C =
      MonoidModel::trace_monoid(A, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(iso_word_trace(C, xw, 0, 1), Error);
}

TEST_CASE("catalogue formulas validate") {
  GadgetParams P = P2();
  std::map<std::string, std::vector<std::string>> rep{
      {"centralizer", {}},          {"in-s", {}},
      {"mult", {"2", "2"}},         {"trans", {"2"}},
      {"basis", {}},                {"trans-noparam", {"2"}},
      {"tuple", {"1,0"}},           {"position", {"1,0"}},
      {"in", {"1,0"}},              {"length", {"1,0"}},
      {"concat", {"1", "0"}},       {"a-word", {"2"}},
      {"b-pairs", {"2"}},           {"iso", {"1,2"}},
      {"orbit", {"x1.x2"}},
  };
  for (auto const& name : gadget_names()) {
    if (name == "iso-trace") continue;  // word-only
    GadgetBuild g = build_gadget(name, rep.at(name), P);
    REQUIRE(g.formula != nullptr);
    CHECK_NOTHROW(validate(g.formula, Sig::monoid));
    CHECK(free_vars(g.formula) ==
          std::set<std::string>(g.frees.begin(), g.frees.end()));
  }
  MonoidModel T = MonoidModel::trace_monoid(Alphabet::standard(3), {});
  GadgetBuild tr = build_gadget("iso-trace", {"1,2"},
                                GadgetParams{Alphabet::standard(3), 0, 1}, &T);
  CHECK(tr.formula == nullptr);
  CHECK(tr.has_word);
}

TEST_CASE("centralizer and fragment formulas agree with direct checks") {
  GadgetParams P = P2();
  MonoidModel M = MonoidModel::free_monoid(P.alphabet);
  Structure S = Structure::over(M);
  EvalOptions opt;
  opt.bound = 3;

  FormulaPtr cent = centralizer_formula(P.l1());
  std::set<std::string> sols;
  for (auto const& w : enumerate_words(P.alphabet, 2)) {
    if (eval(S, cent, {{"y", w}}, opt)) sols.insert(w.str());
  }
  CHECK(sols == std::set<std::string>{"1", "x1", "x1.x1"});

  FormulaPtr ins = in_s_formula(P);
  for (auto const& w : enumerate_words(P.alphabet, 3)) {
    CHECK(eval(S, ins, {{"y", w}}, opt) == is_in_S(w));
  }
}

TEST_CASE("classification of the irreducibility formula") {
  CHECK(classify(basis_formula()).str() == "Π1");
}

TEST_CASE("parameter-free transfer on short powers") {
  AlphabetPtr A = Alphabet::standard(2);
  MonoidModel M = MonoidModel::free_monoid(A);
  Structure S = Structure::over(M);
  FormulaPtr tn = trans_noparam_formula(A);

  EvalOptions opt;
  opt.bound = 4;
  opt.mode = EvalMode::witness;
  std::vector<Value> fs;
  for (uint64_t s = 1; s <= 4; ++s) {
    fs.push_back(Value{f_word(GadgetParams{A, 0, 1}, s)});
    fs.push_back(Value{f_word(GadgetParams{A, 1, 0}, s)});
  }
  opt.witnesses["f"] = fs;

  std::set<std::pair<std::string, std::string>> got, want;
  Word x1 = letter(A, 0), x2 = letter(A, 1);
  want.insert({"1", "1"});
  for (uint64_t s = 1; s <= 2; ++s) {
    want.insert({power(x1, s).str(), power(x1, s).str()});
    want.insert({power(x2, s).str(), power(x2, s).str()});
    want.insert({power(x1, s).str(), power(x2, s).str()});
    want.insert({power(x2, s).str(), power(x1, s).str()});
  }
  for (auto const& x : enumerate_words(A, 2))
    for (auto const& y : enumerate_words(A, 2)) {
      if (eval(S, tn, {{"x", x}, {"y", y}}, opt)) got.insert({x.str(), y.str()});
    }
  CHECK(got == want);
  CHECK(got.size() == 9);
  CHECK(!got.count({"x1.x2", "x1.x2"}));
}

TEST_CASE("catalogue argument validation") {
  GadgetParams P = P2();
  CHECK_THROWS_AS(build_gadget("nope", {}, P), Error);
  CHECK_THROWS_AS(build_gadget("mult", {"-1", "0"}, P), Error);
  CHECK_THROWS_AS(build_gadget("mult", {"2"}, P), Error);
  CHECK_THROWS_AS(build_gadget("tuple", {""}, P), Error);
  CHECK_THROWS_AS(build_gadget("iso-trace", {"1,2"}, P, nullptr), Error);

  GadgetBuild g = build_gadget("mult", {"2", "1"}, P);
  CHECK(g.has_word);
  CHECK(g.word == mult_gadget_word(P, 2, 1));
  CHECK(g.witness_bound == g.word.size());
}
