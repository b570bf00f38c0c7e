#include "mwb/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "mwb/coding.hpp"
#include "mwb/error.hpp"
#include "mwb/gadgets.hpp"
#include "mwb/interpret.hpp"
#include "mwb/parse.hpp"
#include "mwb/prenex.hpp"

namespace mwb {

namespace {

void fp(SuiteResult& R, std::string const& label) {
  R.report.false_positives.push_back(label);
}
void fn(SuiteResult& R, std::string const& label) {
  R.report.false_negatives.push_back(label);
}

std::string nm(uint64_t n, uint64_t m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

// --- mult: gadget words and the product formula ------------------------------

SuiteResult suite_mult(size_t max) {
  if (max == 0) max = 3;
  SuiteResult R{"mult", {}, {}};
  GadgetParams P = standard_params();
  MonoidModel M = MonoidModel::free_monoid(P.alphabet);
  Structure S = Structure::over(M);
  FormulaPtr psi = mult_gadget_formula(P);
  FormulaPtr phi = mult_formula(P);

  std::vector<Value> wpool;
  for (uint64_t n = 0; n <= max; ++n)
    for (uint64_t m = 0; m <= max; ++m)
      wpool.push_back(Value(mult_gadget_word(P, n, m)));

  for (uint64_t n = 0; n <= max; ++n)
    for (uint64_t m = 0; m <= max; ++m) {
      bool good = true;
      Word wexp = mult_gadget_word(P, n, m);
      Assignment a{{"x", Value(power(P.l1(), n))},
                   {"y", Value(power(P.l1(), m))}};

      EvalOptions popt;
      popt.bound = wexp.size();
      std::set<Word> family;
      for (auto& c :
           enumerate_words(P.alphabet, std::min<size_t>(12, wexp.size())))
        family.insert(c);
      for (auto& v : wpool) family.insert(std::get<Word>(v));
      family.insert(wexp);
      for (auto const& c : family) {
        a["w"] = Value(c);
        bool got = eval(S, psi, a, popt);
        bool want = c == wexp;
        if (got == want) continue;
        good = false;
        (got ? fp : fn)(R, "psi" + nm(n, m) + " w=" + c.str());
      }
      a.erase("w");

      EvalOptions gopt;
      gopt.bound = std::max<size_t>(wexp.size(), 9);
      gopt.mode = EvalMode::witness;
      gopt.witnesses["w"] = wpool;
      Word zexp = power(P.l1(), n * m);
      std::set<Word> zs;
      for (auto& c : enumerate_words(P.alphabet, 9)) zs.insert(c);
      zs.insert(zexp);
      for (auto const& z : zs) {
        a["z"] = Value(z);
        bool got = eval(S, phi, a, gopt);
        bool want = z == zexp;
        if (got == want) continue;
        good = false;
        (got ? fp : fn)(R, "phi" + nm(n, m) + " z=" + z.str());
      }
      if (good) ++R.report.ok;
    }
  return R;
}

// --- trans: the exponent-transfer pairs --------------------------------------

SuiteResult suite_trans(size_t max) {
  if (max == 0) max = 3;
  SuiteResult R{"trans", {}, {}};
  GadgetParams P = standard_params();
  MonoidModel M = MonoidModel::free_monoid(P.alphabet);
  Structure S = Structure::over(M);
  TransFormulas T = trans_formulas(P);

  EvalOptions opt;
  opt.mode = EvalMode::witness;
  for (uint64_t s = 1; s <= max + 2; ++s)
    opt.witnesses["f"].push_back(Value(f_word(P, s)));
  opt.bound = f_word(P, max + 2).size();
  opt.guard = 50'000'000;

  std::set<std::pair<Word, Word>> expected;
  for (uint64_t s = 0; s <= max; ++s)
    expected.insert({power(P.l2(), s), power(P.l1(), s)});

  for (auto const& x : enumerate_words(P.alphabet, max))
    for (auto const& y : enumerate_words(P.alphabet, max)) {
      bool got = eval(S, T.trans, {{"x", Value(x)}, {"y", Value(y)}}, opt);
      bool want = expected.count({x, y}) > 0;
      if (got == want)
        ++R.report.ok;
      else
        (got ? fp : fn)(R, "trans x=" + x.str() + " y=" + y.str());
    }
  return R;
}

// --- tuple: shape, position, membership, length, concatenation ---------------

std::vector<NatTuple> small_tuples(uint64_t len_max, uint64_t entry_max) {
  std::vector<NatTuple> out;
  std::vector<NatTuple> layer{{}};
  for (uint64_t l = 1; l <= len_max; ++l) {
    std::vector<NatTuple> next;
    for (auto const& t : layer)
      for (uint64_t e = 0; e <= entry_max; ++e) {
        NatTuple u = t;
        u.push_back(e);
        next.push_back(u);
      }
    for (auto const& t : next) out.push_back(t);
    layer = std::move(next);
  }
  return out;
}

SuiteResult suite_tuple(size_t max) {
  if (max == 0) max = 2;
  SuiteResult R{"tuple", {}, {}};
  GadgetParams P = standard_params();
  MonoidModel M = MonoidModel::free_monoid(P.alphabet);
  Structure S = Structure::over(M);
  TupleFormulas F = tuple_formulas(P);

  auto is_tuple_word = [&](Word const& w) {
    try {
      tuple_word_components(P, w);
      return true;
    } catch (Error const&) {
      return false;
    }
  };

  // Shape sweep: the satisfying words of length <= 9 must be exactly the
  // tuple words.
  {
    bool good = true;
    EvalOptions opt;
    opt.bound = 9;
    for (auto const& c : enumerate_words(P.alphabet, 9)) {
      bool got = eval(S, F.w, {{"x", Value(c)}}, opt);
      bool want = is_tuple_word(c);
      if (got == want) continue;
      good = false;
      (got ? fp : fn)(R, "w x=" + c.str());
    }
    if (good) ++R.report.ok;
  }

  std::vector<NatTuple> tuples = small_tuples(max, max);

  EvalOptions opt;
  opt.mode = EvalMode::witness;
  opt.guard = 50'000'000;
  for (uint64_t s = 1; s <= max + 3; ++s)
    opt.witnesses["f"].push_back(Value(f_word(P, s)));

  for (auto const& t : tuples) {
    bool good = true;
    Word wt = tuple_word(P, t);
    opt.bound = wt.size() + 4;
    for (uint64_t i = 1; i <= t.size() + 1; ++i)
      for (uint64_t a = 0; a <= max + 1; ++a) {
        bool want = i <= t.size() && lss_position(t, i) == a;
        bool got = eval(S, F.position,
                        {{"x", Value(wt)},
                         {"y", Value(power(P.l1(), i))},
                         {"z", Value(power(P.l1(), a))}},
                        opt);
        if (got == want) continue;
        good = false;
        (got ? fp : fn)(R, "position " + tuple_str(t) + " i=" +
                               std::to_string(i) + " a=" + std::to_string(a));
      }
    for (uint64_t a = 0; a <= max + 1; ++a) {
      bool want = std::find(t.begin(), t.end(), a) != t.end();
      bool got = eval(S, F.in,
                      {{"x", Value(power(P.l1(), a))}, {"y", Value(wt)}}, opt);
      if (got != want) {
        good = false;
        (got ? fp : fn)(R, "in " + tuple_str(t) + " a=" + std::to_string(a));
      }
    }
    for (uint64_t c = 0; c <= max + 2; ++c) {
      bool want = c == lss_length(t);
      bool got = eval(S, F.length,
                      {{"x", Value(wt)}, {"y", Value(power(P.l1(), c))}}, opt);
      if (got != want) {
        good = false;
        (got ? fp : fn)(R, "length " + tuple_str(t) + " c=" + std::to_string(c));
      }
    }
    if (good) ++R.report.ok;
  }

  for (auto const& t1 : tuples)
    for (auto const& t2 : tuples) {
      bool good = true;
      NatTuple tc = t1;
      tc.insert(tc.end(), t2.begin(), t2.end());
      Word x = tuple_word(P, t1), y = tuple_word(P, t2);
      Word z = tuple_word(P, tc);
      opt.bound = z.size() + 4;
      std::vector<std::pair<Word, bool>> probes{{z, true}, {x, false}};
      NatTuple rev = t2;
      rev.insert(rev.end(), t1.begin(), t1.end());
      if (rev != tc) probes.push_back({tuple_word(P, rev), false});
      NatTuple ext = tc;
      ext.push_back(0);
      probes.push_back({tuple_word(P, ext), false});
      for (auto const& [zc, want] : probes) {
        bool got = eval(S, F.concat,
                        {{"x", Value(x)}, {"y", Value(y)}, {"z", Value(zc)}},
                        opt);
        if (got == want) continue;
        good = false;
        (got ? fp : fn)(R, "concat " + tuple_str(t1) + "+" + tuple_str(t2) +
                               " z=" + zc.str());
      }
      if (good) ++R.report.ok;
    }
  return R;
}

// --- b-pairs: the ladder-word graph ------------------------------------------

SuiteResult suite_bpairs(size_t max) {
  if (max == 0) max = 4;
  SuiteResult R{"b-pairs", {}, {}};
  GadgetParams P = standard_params();
  MonoidModel M = MonoidModel::free_monoid(P.alphabet);
  Structure S = Structure::over(M);
  FormulaPtr B = b_pair_formula(P);

  size_t bound = a_word(P, max).size();
  EvalOptions opt;
  opt.bound = bound;
  opt.mode = EvalMode::witness;
  for (auto& w : enumerate_words(P.alphabet, bound))
    opt.witnesses["x"].push_back(Value(w));
  for (uint64_t s = 0; s <= bound; ++s)
    opt.witnesses["y"].push_back(Value(power(P.l1(), s)));
  opt.witnesses["y"].push_back(Value(P.l2()));
  opt.witnesses["y"].push_back(Value(concat(P.l1(), P.l2())));
  opt.guard = 200'000'000;

  std::set<std::pair<Word, Word>> expected;
  for (uint64_t m = 1; m <= max; ++m)
    expected.insert({a_word(P, m), power(P.l1(), m)});

  std::set<std::pair<Word, Word>> got;
  for (auto const& sol : solutions(S, B, {"x", "y"}, opt))
    got.insert({std::get<Word>(sol.at(0)), std::get<Word>(sol.at(1))});

  for (auto const& g : got)
    if (!expected.count(g))
      fp(R, "B x=" + g.first.str() + " y=" + g.second.str());
  for (auto const& e : expected)
    if (!got.count(e))
      fn(R, "B x=" + e.first.str() + " y=" + e.second.str());
    else
      ++R.report.ok;
  return R;
}

// --- iso: the monomial pairing -----------------------------------------------

SuiteResult suite_iso(size_t max) {
  if (max == 0) max = 3;
  SuiteResult R{"iso", {}, {}};
  GadgetParams P = standard_params(3);
  MonoidModel M = MonoidModel::free_monoid(P.alphabet);
  Structure S = Structure::over(M);
  IsoFormulas F = iso_formulas(P);

  std::vector<Word> monomials;
  for (auto& w : enumerate_words(P.alphabet, max))
    if (!w.empty()) monomials.push_back(w);

  EvalOptions opt;
  opt.mode = EvalMode::witness;
  opt.guard = 500'000'000;
  for (uint64_t s = 1; s <= max + 1; ++s)
    opt.witnesses["av"].push_back(Value(a_word(P, s)));
  for (uint64_t s = 1; s <= max + 2; ++s)
    opt.witnesses["f"].push_back(Value(f_word(P, s)));
  for (uint64_t s = 0; s <= max + 2; ++s)
    opt.witnesses["q"].push_back(Value(power(P.l2(), s)));
  for (uint64_t k = 1; k <= max + 1; ++k)
    for (uint64_t j = 1; j <= max + 1; ++j)
      opt.witnesses["ab"].push_back(Value(power(a_word(P, k), j)));
  opt.witnesses["y"].push_back(Value(Word(P.alphabet)));
  for (auto const& w : monomials) opt.witnesses["y"].push_back(Value(w));

  auto enc_word = [&](Word const& w) {
    return iso_word(P, tuple_word(P, monomial_to_tuple(w)));
  };
  std::vector<Value> all_zi;
  size_t zi_max = 1;
  for (auto const& w : monomials) {
    Word e = enc_word(w);
    zi_max = std::max(zi_max, e.size());
    all_zi.push_back(Value(e));
  }

  for (auto const& w : monomials) {
    Word xw = tuple_word(P, monomial_to_tuple(w));
    Word zw = enc_word(w);
    opt.bound = zw.size();
    opt.witnesses["zi"] = {Value(zw)};
    auto sols = solutions(S, F.theta1, {"y"}, opt, {{"x", Value(xw)}});
    bool hit = false, extra = false;
    for (auto const& s : sols) {
      Word y = std::get<Word>(s.at(0));
      if (y == w) {
        hit = true;
      } else {
        extra = true;
        fp(R, "theta1 x=w_" + w.str() + " y=" + y.str());
      }
    }
    if (!hit)
      fn(R, "theta1 x=w_" + w.str());
    else if (!extra)
      ++R.report.ok;
  }

  // Words that are not monomial tuple words must pair with nothing.
  std::vector<Word> junk{concat(P.l2(), P.l1()), P.l1(),
                         tuple_word(P, NatTuple{0})};
  opt.witnesses["zi"] = all_zi;
  opt.bound = zi_max;
  for (auto const& x : junk) {
    auto sols = solutions(S, F.theta1, {"y"}, opt, {{"x", Value(x)}});
    if (sols.empty())
      ++R.report.ok;
    else
      for (auto const& s : sols)
        fp(R, "theta1 x=" + x.str() + " y=" + value_str(s.at(0)));
  }
  return R;
}

// --- corpus: truth transfer through nat-in-free ------------------------------

SuiteResult suite_corpus(size_t max) {
  if (max == 0) max = 8;
  SuiteResult R{"corpus", {}, {}};
  GadgetParams P = standard_params();
  MonoidModel M = MonoidModel::free_monoid(P.alphabet);
  Structure Sm = Structure::over(M);
  Structure Sn = Structure::nat();
  Interpretation I = nat_in_free(P);

  EvalOptions aopt;
  aopt.bound = max;
  EvalOptions mopt;
  mopt.bound = max;
  mopt.mode = EvalMode::witness;
  mopt.guard = 200'000'000;
  for (uint64_t n = 0; n <= max; ++n)
    for (uint64_t m = 0; m <= max; ++m)
      mopt.witnesses["w"].push_back(Value(mult_gadget_word(P, n, m)));

  for (auto const& s : arithmetic_corpus()) {
    FormulaPtr f = parse_formula(s.text, Sig::arithmetic);
    bool direct = eval(Sn, f, {}, aopt);
    if (direct != s.truth) {
      (direct ? fp : fn)(R, "direct: " + s.text);
      continue;
    }
    bool mono = eval(Sm, translate(f, I), {}, mopt);
    if (mono == direct)
      ++R.report.ok;
    else
      (mono ? fp : fn)(R, "translated: " + s.text);
  }
  return R;
}

// --- coding: pairing, tuples, word codes, sequence operations ----------------

SuiteResult suite_coding(size_t max) {
  if (max == 0) max = 50;
  SuiteResult R{"coding", {}, {}};

  std::set<Code> seen;
  for (Nat a = 0; a <= max; ++a)
    for (Nat b = 0; b <= max; ++b) {
      Code c = pair(a, b);
      auto [x, y] = unpair(c);
      if (x != a || y != b) {
        fn(R, "pair " + nm(a, b));
        continue;
      }
      if (!seen.insert(c).second) {
        fp(R, "pair collision " + nm(a, b));
        continue;
      }
      ++R.report.ok;
    }
  for (Code c = 0; c <= 2000; ++c) {
    auto [a, b] = unpair(c);
    if (pair(a, b) == c)
      ++R.report.ok;
    else
      fn(R, "unpair " + code_str(c));
  }

  for (auto const& t : small_tuples(4, 10)) {
    NatTuple back = decode_tuple(encode_tuple(t));
    if (back == t)
      ++R.report.ok;
    else
      fn(R, "tuple " + tuple_str(t));
  }
  if (!decode_tuple(encode_tuple(NatTuple{})).empty())
    fn(R, "empty tuple");
  else
    ++R.report.ok;

  AlphabetPtr X3 = Alphabet::standard(3);
  std::map<Code, Word> codes;
  for (auto const& w : enumerate_words(X3, 3)) {
    Code c = word_code(w);
    auto it = codes.find(c);
    if (it != codes.end()) {
      fp(R, "word_code clash " + w.str() + " vs " + it->second.str());
      continue;
    }
    codes[c] = w;
    if (word_decode(c, X3) == w)
      ++R.report.ok;
    else
      fn(R, "word_decode " + w.str());
  }

  for (auto const& u : small_tuples(3, 3))
    for (auto const& v : small_tuples(3, 3)) {
      NatTuple cat = u;
      cat.insert(cat.end(), v.begin(), v.end());
      bool good = lss_concat(u, v) == cat && lss_length(cat) == cat.size();
      for (Nat i = 1; good && i <= cat.size(); ++i)
        good = lss_position(cat, i) == cat[i - 1];
      if (good)
        ++R.report.ok;
      else
        fn(R, "lss " + tuple_str(u) + "+" + tuple_str(v));
    }
  return R;
}

// --- membership: generated submonoids vs brute force -------------------------

SuiteResult suite_membership(size_t max) {
  if (max == 0) max = 500;
  SuiteResult R{"membership", {}, {}};
  std::mt19937 rng(20250814);

  for (size_t i = 0; i < max; ++i) {
    AlphabetPtr A = Alphabet::standard(2 + i % 2);
    auto rand_word = [&](size_t len_max) {
      size_t len = rng() % (len_max + 1);
      std::vector<uint8_t> ls;
      for (size_t j = 0; j < len; ++j)
        ls.push_back(static_cast<uint8_t>(rng() % A->size()));
      return Word(A, ls);
    };
    Word g = rand_word(6);
    size_t ng = 1 + rng() % 3;
    std::vector<Word> gens;
    for (size_t j = 0; j < ng; ++j) gens.push_back(rand_word(3));

    Membership r = submonoid_member(g, gens);

    std::set<Word> reach{Word(A)};
    std::deque<Word> q{Word(A)};
    while (!q.empty()) {
      Word w = q.front();
      q.pop_front();
      for (auto const& gen : gens) {
        if (gen.empty()) continue;
        if (w.size() + gen.size() > g.size()) continue;
        Word nx = concat(w, gen);
        if (reach.insert(nx).second) q.push_back(nx);
      }
    }
    bool want = reach.count(g) > 0;

    std::string label = "member #" + std::to_string(i) + " g=" + g.str();
    if (r.member != want) {
      (r.member ? fp : fn)(R, label);
      continue;
    }
    if (r.member) {
      Word prod(A);
      bool bad = false;
      for (size_t idx : r.factors) {
        if (idx >= gens.size()) {
          bad = true;
          break;
        }
        prod = concat(prod, gens[idx]);
      }
      if (bad || prod != g) {
        fp(R, label + " witness");
        continue;
      }
    }
    ++R.report.ok;
  }
  return R;
}

// --- kernel: trace and Baumslag-Solitar normal forms --------------------------

Word lex_least_commutation(MonoidModel const& M, Word const& u) {
  std::set<Word> seen{u};
  std::deque<Word> q{u};
  Word best = u;
  while (!q.empty()) {
    Word w = q.front();
    q.pop_front();
    if (w < best) best = w;
    for (size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] == w[p + 1] || !M.commutes(w[p], w[p + 1])) continue;
      std::vector<uint8_t> ls = w.letters();
      std::swap(ls[p], ls[p + 1]);
      Word nx(w.alphabet(), ls);
      if (seen.insert(nx).second) q.push_back(nx);
    }
  }
  return best;
}

SuiteResult suite_kernel(size_t max) {
  size_t trace_max = max == 0 ? 6 : max;
  size_t bs_max = max == 0 ? 8 : max;
  SuiteResult R{"kernel", {}, {}};

  for (size_t nv = 1; nv <= 3; ++nv) {
    AlphabetPtr A = Alphabet::standard(nv);
    std::vector<std::pair<size_t, size_t>> all_pairs;
    for (size_t i = 0; i < nv; ++i)
      for (size_t j = i + 1; j < nv; ++j) all_pairs.push_back({i, j});
    for (size_t mask = 0; mask < (size_t{1} << all_pairs.size()); ++mask) {
      std::vector<std::pair<size_t, size_t>> edges;
      for (size_t b = 0; b < all_pairs.size(); ++b)
        if (mask & (size_t{1} << b)) edges.push_back(all_pairs[b]);
      MonoidModel M = MonoidModel::trace_monoid(A, edges);
      bool good = true;
      for (auto const& u : enumerate_words(A, trace_max)) {
        Word want = lex_least_commutation(M, u);
        Word got = M.normal_form(u);
        if (got != want || !M.equal(u, want)) {
          good = false;
          fn(R, "trace nf |V|=" + std::to_string(nv) + " mask=" +
                    std::to_string(mask) + " u=" + u.str());
        }
      }
      if (good) ++R.report.ok;
    }
  }

  for (auto [k, m] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 4},
                                                                {4, 3}}) {
    MonoidModel M = MonoidModel::baumslag_solitar(k, m);
    AlphabetPtr A = M.alphabet();
    Word a = letter(A, 0), b = letter(A, 1);
    Word lhs = m >= k ? concat(power(b, m), a) : concat(a, power(b, k));
    Word rhs = m >= k ? concat(a, power(b, k)) : concat(power(b, m), a);

    bool good = true;
    for (auto const& u : enumerate_words(A, bs_max)) {
      Word nf = M.normal_form(u);
      if (!M.is_normal_form(nf) || !M.equal(u, nf)) {
        good = false;
        fn(R, "bs nf " + M.spec() + " u=" + u.str());
        continue;
      }
      // Apply the relation both ways, bounded; the rewrite-irreducible words
      // reached must be exactly the normal form.
      std::set<Word> seen{u};
      std::deque<Word> q{u};
      size_t len_cap = u.size() + std::max(k, m);
      std::set<Word> irreducible;
      bool overflow = false;
      while (!q.empty()) {
        Word w = q.front();
        q.pop_front();
        if (!factor_occurs(w, lhs)) irreducible.insert(w);
        if (seen.size() > 20000) {
          overflow = true;
          break;
        }
        auto expand = [&](Word const& from, Word const& to) {
          for (size_t p = 0; p + from.size() <= w.size(); ++p) {
            if (w.subword(p, from.size()) != from) continue;
            Word nx = concat(concat(w.prefix(p), to),
                             w.suffix(w.size() - p - from.size()));
            if (nx.size() > len_cap) continue;
            if (seen.insert(nx).second) q.push_back(nx);
          }
        };
        expand(lhs, rhs);
        expand(rhs, lhs);
      }
      if (overflow) {
        R.notes.push_back("bs closure overflow at u=" + u.str());
        continue;
      }
      if (irreducible != std::set<Word>{nf}) {
        good = false;
        fn(R, "bs closure " + M.spec() + " u=" + u.str());
      }
    }
    if (good) ++R.report.ok;
  }
  return R;
}

// --- prenex: truth preservation, catalogue levels, inflation ------------------

// Frozen classification of the formula catalogue at representative arguments.
std::vector<std::pair<std::string, std::string>> const kGadgetLevels = {
    {"centralizer", "QF"}, {"in-s", "Π1"},         {"mult", "Σ2"},
    {"trans", "Σ2"},       {"basis", "Π1"},        {"trans-noparam", "Σ2"},
    {"tuple", "Σ2"},       {"position", "Σ2"},     {"in", "Σ2"},
    {"length", "Σ2"},      {"concat", "Σ2"},       {"a-word", "Σ3"},
    {"b-pairs", "Σ3"},     {"iso", "Σ4"},          {"orbit", "Σ1"},
};
size_t const kInflation = 2;

std::map<std::string, std::vector<std::string>> gadget_rep_args() {
  return {{"centralizer", {}},    {"in-s", {}},          {"mult", {"2", "2"}},
          {"trans", {"2"}},       {"basis", {}},         {"trans-noparam", {"2"}},
          {"tuple", {"1,0"}},     {"position", {"1,0"}}, {"in", {"1,0"}},
          {"length", {"1,0"}},    {"concat", {"1", "0"}}, {"a-word", {"2"}},
          {"b-pairs", {"2"}},     {"iso", {"1,2"}},      {"orbit", {"x1.x2"}}};
}

SuiteResult suite_prenex(size_t max) {
  (void)max;
  SuiteResult R{"prenex", {}, {}};
  GadgetParams P = standard_params();
  MonoidModel M = MonoidModel::free_monoid(P.alphabet);
  Structure Sm = Structure::over(M);
  Structure Sn = Structure::nat();

  EvalOptions aopt;
  aopt.bound = 8;
  for (auto const& s : arithmetic_corpus()) {
    FormulaPtr f = parse_formula(s.text, Sig::arithmetic);
    bool before = eval(Sn, f, {}, aopt);
    bool after = eval(Sn, prenex(f), {}, aopt);
    if (before == after)
      ++R.report.ok;
    else
      (after ? fp : fn)(R, "prenex: " + s.text);
  }

  std::vector<std::string> monoid_texts = {
      "A x. x . 1 = x",
      "! A x. x = 1",
      "A x. A y. (x . y = 1 -> x = 1)",
      "A x. A y. x . y = y . x",
      "E x. E y. ! x . y = y . x",
      "A x. (x = 1 | (E y. x = y . 'x1' | E y. x = y . 'x2'))",
      "E x. x . x = 'x1' . 'x1'",
      "E x. x . x = 'x1' . 'x2'",
      "A x. A y. (x . 'x1' = y . 'x1' -> x = y)",
      "A x. E y. y = x . x",
  };
  EvalOptions mopt;
  mopt.bound = 4;
  for (auto const& text : monoid_texts) {
    FormulaPtr f = parse_formula(text, Sig::monoid, P.alphabet);
    bool before = eval(Sm, f, {}, mopt);
    bool after = eval(Sm, prenex(f), {}, mopt);
    if (before == after)
      ++R.report.ok;
    else
      (after ? fp : fn)(R, "prenex: " + text);
  }

  if (classify(basis_formula()).str() == "Π1")
    ++R.report.ok;
  else
    fn(R, "basis formula is " + classify(basis_formula()).str());

  auto args = gadget_rep_args();
  for (auto const& [name, want] : kGadgetLevels) {
    GadgetBuild g = build_gadget(name, args.at(name), P);
    if (!g.formula) {
      fn(R, "no formula for " + name);
      continue;
    }
    std::string got = classify(g.formula).str();
    R.notes.push_back("level " + name + " " + got);
    if (got == want)
      ++R.report.ok;
    else
      fp(R, "level " + name + " is " + got + " not " + want);
  }

  size_t m = measured_inflation(nat_in_free(P));
  R.notes.push_back("nat-in-free inflation m=" + std::to_string(m));
  if (m == kInflation)
    ++R.report.ok;
  else
    fp(R, "inflation m=" + std::to_string(m) + " not " +
              std::to_string(kInflation));
  return R;
}

// --- orbit: letter-pattern images --------------------------------------------

SuiteResult suite_orbit(size_t max) {
  if (max == 0) max = 4;
  SuiteResult R{"orbit", {}, {}};
  GadgetParams P = standard_params(3);
  MonoidModel M = MonoidModel::free_monoid(P.alphabet);
  Structure S = Structure::over(M);

  std::vector<Word> words = enumerate_words(P.alphabet, max);
  std::vector<Value> xpool;
  for (auto const& w : words) xpool.push_back(Value(w));
  std::vector<Value> ypool;
  for (size_t i = 0; i < 3; ++i) ypool.push_back(Value(letter(P.alphabet, i)));

  std::vector<std::vector<uint8_t>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                          {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

  for (auto const& w : words) {
    std::set<Word> expect;
    for (auto const& perm : perms) {
      std::vector<uint8_t> ls;
      for (size_t i = 0; i < w.size(); ++i) ls.push_back(perm[w[i]]);
      expect.insert(Word(P.alphabet, ls));
    }
    FormulaPtr F = orbit_formula(P.alphabet, {w});
    EvalOptions opt;
    opt.mode = EvalMode::witness;
    opt.bound = std::max<size_t>(w.size(), 1);
    opt.witnesses["x"] = xpool;
    opt.witnesses["y"] = ypool;
    std::set<Word> got;
    for (auto const& sol : solutions(S, F, {"x"}, opt))
      got.insert(std::get<Word>(sol.at(0)));
    if (got == expect) {
      ++R.report.ok;
      continue;
    }
    for (auto const& g : got)
      if (!expect.count(g)) fp(R, "orbit " + w.str() + " x=" + g.str());
    for (auto const& e : expect)
      if (!got.count(e)) fn(R, "orbit " + w.str() + " x=" + e.str());
  }
  return R;
}

}  // namespace

std::string SuiteResult::str() const {
  std::ostringstream os;
  os << name << ":\n" << report.str();
  for (auto const& n : notes) os << n << "\n";
  return os.str();
}

std::vector<std::string> suite_names() {
  return {"mult",   "trans",      "tuple",  "b-pairs", "iso",   "corpus",
          "coding", "membership", "kernel", "prenex",  "orbit"};
}

SuiteResult run_suite(std::string const& name, size_t max) {
  if (name == "mult") return suite_mult(max);
  if (name == "trans") return suite_trans(max);
  if (name == "tuple") return suite_tuple(max);
  if (name == "b-pairs") return suite_bpairs(max);
  if (name == "iso") return suite_iso(max);
  if (name == "corpus") return suite_corpus(max);
  if (name == "coding") return suite_coding(max);
  if (name == "membership") return suite_membership(max);
  if (name == "kernel") return suite_kernel(max);
  if (name == "prenex") return suite_prenex(max);
  if (name == "orbit") return suite_orbit(max);
  std::string all;
  for (auto const& s : suite_names()) all += " " + s;
  throw Error("unknown suite " + name + "; choices:" + all);
}

}  // namespace mwb
