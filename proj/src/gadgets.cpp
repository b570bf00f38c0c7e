#include "mwb/gadgets.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mwb/error.hpp"

namespace mwb {

namespace {

// Fresh helper-variable names, purely alphabetic so they can never collide
// with the numeric suffixes produced by rename_bound.
struct Fresh {
  int k = 0;
  std::string operator()() {
    int n = k++;
    std::string s = "q";
    do {
      s += static_cast<char>('a' + n % 26);
      n /= 26;
    } while (n > 0);
    return s;
  }
};

TermPtr one_term() { return t_word(Word()); }

FormulaPtr eq1(TermPtr const& t) { return f_eq(t, one_term()); }
FormulaPtr neq1(TermPtr const& t) { return f_not(eq1(t)); }

FormulaPtr exs(std::vector<std::string> vars, FormulaPtr body) {
  return f_ex(std::move(vars), std::move(body));
}
FormulaPtr alls(std::vector<std::string> vars, FormulaPtr body) {
  return f_all(std::move(vars), std::move(body));
}

FormulaPtr commutes(TermPtr const& u, TermPtr const& c) {
  return f_eq(t_cat(c, u), t_cat(u, c));
}

FormulaPtr not_starts_with(TermPtr const& g, TermPtr const& p,
                           std::string const& v) {
  return f_not(f_ex(v, f_eq(g, t_cat(p, t_var(v)))));
}
FormulaPtr not_ends_with(TermPtr const& g, TermPtr const& p,
                         std::string const& v) {
  return f_not(f_ex(v, f_eq(g, t_cat(t_var(v), p))));
}
FormulaPtr no_factor(TermPtr const& g, TermPtr const& p, std::string const& u,
                     std::string const& v) {
  return f_not(f_ex(u, f_ex(v, f_eq(g, t_cat({t_var(u), p, t_var(v)})))));
}

FormulaPtr subst(FormulaPtr f,
                 std::vector<std::pair<std::string, TermPtr>> const& subs) {
  return subst_frees(std::move(f), subs);
}

void check_params(GadgetParams const& P) {
  if (!P.alphabet) throw Error("gadget params need an alphabet");
  if (P.x1 == P.x2 || P.x1 >= P.alphabet->size() ||
      P.x2 >= P.alphabet->size())
    throw Error("gadget letter roles must be two distinct generators");
}

// --- Multiplication ----------------------------------------------------------

struct MultParts {
  FormulaPtr psi, phi;
};

// psi pins the gadget word of (x, y); phi reads the product off its last
// block. Conjunct order puts the cheap prefix test first so junk words die
// before the recursion runs.
MultParts mult_core(TermPtr const& X1, TermPtr const& X2) {
  TermPtr x = t_var("x"), y = t_var("y"), w = t_var("w"), z = t_var("z");

  FormulaPtr head = f_ex(
      "wa", f_eq(w, t_cat({X2, X2, x, X1, X2, y, X1, X2, X2, t_var("wa")})));

  FormulaPtr prem = f_and(
      {f_eq(w, t_cat({t_var("wb"), X2, X2, t_var("va"), X2, t_var("vb"), X2,
                      X2, t_var("wc")})),
       commutes(t_var("va"), X1), commutes(t_var("vb"), X1),
       f_not(f_eq(t_var("va"), X1)),
       f_not(f_eq(t_var("va"), t_cat(X1, X1)))});
  FormulaPtr concl = exs(
      {"vc", "wd"},
      f_and({f_eq(t_var("wc"), t_cat({t_var("vc"), X2, t_var("vb"), y, X2, X2,
                                      t_var("wd")})),
             f_eq(t_var("va"), t_cat(t_var("vc"), X1))}));
  FormulaPtr recur = alls({"wb", "va", "vb", "wc"}, f_imp(prem, concl));

  FormulaPtr tail = f_or(
      exs({"we", "vd"},
           f_and({f_eq(w, t_cat({t_var("we"), X2, X2, X1, X1, X2, t_var("vd"),
                                 X2, X2})),
                  commutes(t_var("vd"), X1)})),
      f_eq(w, t_cat({X2, X2, X1, X2, y, X1, X2, X2})));

  FormulaPtr psi = f_and({head, recur, tail});

  FormulaPtr extract = f_ex(
      "wf",
      f_eq(w, t_cat({t_var("wf"), X2, X2, X1, X1, X2, z, X1, X2, X2})));
  FormulaPtr degen = f_and(eq1(x), eq1(z));
  FormulaPtr phi =
      f_and({commutes(x, X1), commutes(y, X1), commutes(z, X1),
             f_ex("w", f_and(rename_bound(psi, 1), f_or(extract, degen)))});
  return {psi, phi};
}

// --- Transfer ----------------------------------------------------------------

struct TransParts {
  FormulaPtr phi_f, psi, trans;
};

TransParts trans_core(TermPtr const& X1, TermPtr const& X2, TermPtr const& A) {
  TermPtr x = t_var("x"), y = t_var("y");

  FormulaPtr headf =
      f_ex("ga", f_and(f_eq(x, t_cat({A, X2, X1, A, A, t_var("ga")})),
                       not_starts_with(t_var("ga"), A, "qa")));
  FormulaPtr premf = f_and(
      {f_eq(x, t_cat({t_var("gb"), t_var("aa"), t_var("gc"), t_var("aa"), A,
                      t_var("gd")})),
       commutes(t_var("aa"), A), neq1(t_var("aa")), neq1(t_var("gc")),
       not_ends_with(t_var("gb"), A, "qb"),
       not_starts_with(t_var("gc"), A, "qc"),
       not_ends_with(t_var("gc"), A, "qd"),
       not_starts_with(t_var("gd"), A, "qe")});
  FormulaPtr conclf = f_or(
      eq1(t_var("gd")),
      f_ex("ge",
           f_and(f_eq(t_var("gd"), t_cat({X2, t_var("gc"), X1, t_var("aa"), A,
                                          A, t_var("ge")})),
                 not_starts_with(t_var("ge"), A, "qf"))));
  FormulaPtr recurf = alls({"gb", "aa", "gc", "gd"}, f_imp(premf, conclf));
  FormulaPtr tailf = exs(
      {"ab", "gf", "un"},
      f_and({commutes(t_var("ab"), A),
             f_eq(x, t_cat({t_var("gf"), t_var("ab"), t_var("un"), t_var("ab"),
                            A})),
             not_ends_with(t_var("gf"), A, "qg"),
             no_factor(t_var("un"), A, "qh", "qi")}));
  FormulaPtr phi_f = f_and({headf, recurf, tailf});

  // psi(x): x is empty or x2^s x1^s, read off between two ladder rungs. The
  // rung equation runs before the ladder formula so junk dies cheaply. The
  // delimiter b must be a nonempty anchor power: with b empty the cut point
  // floats freely and picks up fragments of the final anchor run.
  FormulaPtr phif_f = rename_bound(subst(phi_f, {{"x", t_var("f")}}), 1);
  FormulaPtr rung = exs(
      {"b", "gg"},
      f_and({commutes(t_var("b"), A), neq1(t_var("b")),
             f_eq(t_var("f"), t_cat({t_var("gg"), t_var("b"), x, A,
                                     t_var("b")})),
             not_ends_with(t_var("gg"), A, "qj")}));
  FormulaPtr psi =
      f_or(eq1(x), f_and({not_starts_with(x, A, "qk"),
                          not_ends_with(x, A, "ql"),
                          f_ex("f", f_and(rung, phif_f))}));

  FormulaPtr psi_z = rename_bound(subst(psi, {{"x", t_var("zs")}}), 2);
  FormulaPtr trans = f_ex(
      "zs", f_and({f_eq(t_var("zs"), t_cat(x, y)), commutes(x, X2),
                   commutes(y, X1), psi_z}));
  return {phi_f, psi, trans};
}

// --- Tuples ------------------------------------------------------------------

struct TupleParts {
  FormulaPtr w, position, in, length, concat;
};

TupleParts tuple_core(TermPtr const& X1, TermPtr const& X2,
                      TransParts const& T) {
  TermPtr x = t_var("x"), y = t_var("y"), z = t_var("z");

  FormulaPtr headw = f_ex("ga", f_eq(x, t_cat({X1, X2, t_var("ga")})));
  FormulaPtr premw =
      f_and({f_eq(x, t_cat({t_var("gb"), t_var("v"), X2, t_var("gc")})),
             commutes(t_var("v"), X1), neq1(t_var("v")),
             not_ends_with(t_var("gb"), X1, "qa")});
  FormulaPtr conclw = f_or(
      commutes(t_var("gc"), X2),
      exs({"gd", "ge"},
           f_and({f_eq(t_var("gc"), t_cat({t_var("gd"), t_var("v"), X1, X2,
                                           t_var("ge")})),
                  commutes(t_var("gd"), X2)})));
  FormulaPtr recurw = alls({"gb", "v", "gc"}, f_imp(premw, conclw));
  FormulaPtr tailw = f_ex("gf", f_eq(x, t_cat(t_var("gf"), X2)));
  FormulaPtr w = f_and({headw, recurw, tailw});

  // position(x,y,z): y = x1^i marks the i-th slot, z its value.
  FormulaPtr trans_vz =
      rename_bound(subst(T.trans, {{"x", t_var("v")}, {"y", z}}), 2);
  FormulaPtr position = f_and(
      {rename_bound(w, 1), commutes(y, X1), neq1(y),
       f_ex("v",
            f_and({commutes(t_var("v"), X2),
                   exs({"gg", "gh"},
                        f_and({f_eq(x, t_cat({t_var("gg"), y, X2, t_var("v"),
                                              t_var("gh")})),
                               not_ends_with(t_var("gg"), X1, "qb"),
                               not_starts_with(t_var("gh"), X2, "qc")})),
                   trans_vz}))});

  FormulaPtr pos_in = rename_bound(
      subst(position,
            {{"x", t_var("y")}, {"y", t_var("zp")}, {"z", t_var("x")}}),
      3);
  FormulaPtr in = f_ex("zp", pos_in);

  FormulaPtr length = f_and(
      {rename_bound(w, 4), commutes(y, X1), neq1(y),
       exs({"gi", "gj"},
            f_and({f_eq(x, t_cat({t_var("gi"), y, t_var("gj")})),
                   not_ends_with(t_var("gi"), X1, "qd"),
                   commutes(t_var("gj"), X2)}))});

  // concat(x,y,z): z = x.u where u repeats y's blocks with every slot index
  // shifted by the length of x. The shared run variable s ties the i-th
  // separator run of u to the i-th one of y.
  FormulaPtr l_x = rename_bound(subst(length, {{"y", t_var("lam")}}), 5);
  FormulaPtr l_y = rename_bound(
      subst(length, {{"x", t_var("y")}, {"y", t_var("lam2")}}), 6);
  FormulaPtr headc = f_ex(
      "gk", f_eq(t_var("u"), t_cat({t_var("lam"), X1, X2, t_var("gk")})));
  FormulaPtr premc = f_and(
      {f_eq(t_var("u"), t_cat({t_var("gl"), t_var("v"), X2, t_var("gm")})),
       commutes(t_var("v"), X1), neq1(t_var("v")),
       not_ends_with(t_var("gl"), X1, "qe")});
  FormulaPtr step = f_ex(
      "gn", f_eq(t_cat(X2, t_var("gm")),
                 t_cat({t_var("s"), t_var("v"), X1, X2, t_var("gn")})));
  FormulaPtr last = f_and(f_eq(t_cat(X2, t_var("gm")), t_var("s")),
                          f_eq(t_var("r"), t_var("lam2")));
  FormulaPtr conclc = exs(
      {"r", "s", "ha", "hb"},
      f_and({f_eq(t_var("v"), t_cat(t_var("lam"), t_var("r"))),
             commutes(t_var("r"), X1), neq1(t_var("r")),
             commutes(t_var("s"), X2), neq1(t_var("s")),
             f_eq(y, t_cat({t_var("ha"), t_var("r"), t_var("s"),
                            t_var("hb")})),
             not_ends_with(t_var("ha"), X1, "qf"),
             not_starts_with(t_var("hb"), X2, "qg"), f_or(step, last)}));
  FormulaPtr recurc = alls({"gl", "v", "gm"}, f_imp(premc, conclc));
  FormulaPtr tailc = exs(
      {"go", "sf"},
      f_and({f_eq(t_var("u"), t_cat({t_var("go"), t_var("lam"), t_var("lam2"),
                                     t_var("sf")})),
             not_ends_with(t_var("go"), X1, "qh"),
             commutes(t_var("sf"), X2), neq1(t_var("sf"))}));
  FormulaPtr phi_c =
      exs({"lam", "lam2"}, f_and({l_x, l_y, headc, recurc, tailc}));
  FormulaPtr concat_f =
      f_ex("u", f_and(phi_c, f_eq(z, t_cat(x, t_var("u")))));

  return {w, position, in, length, concat_f};
}

// --- Ladder pairs --------------------------------------------------------------

FormulaPtr b_pair_core(TermPtr const& X1, TermPtr const& X2) {
  TermPtr x = t_var("x"), y = t_var("y");
  FormulaPtr base = f_and(f_eq(x, t_cat(X2, X1)), f_eq(y, X1));
  FormulaPtr headb = f_ex("ua", f_eq(x, t_cat({X2, X1, X2, t_var("ua")})));
  FormulaPtr premb =
      f_and(f_eq(x, t_cat({t_var("ub"), X2, t_var("v"), X2, t_var("uc")})),
            commutes(t_var("v"), X1));
  FormulaPtr conclb = f_or(
      f_ex("ud", f_eq(t_var("uc"), t_cat({t_var("v"), X1, X2, t_var("ud")}))),
      f_eq(t_var("uc"), t_cat(t_var("v"), X1)));
  FormulaPtr recurb = alls({"ub", "v", "uc"}, f_imp(premb, conclb));
  FormulaPtr tailb = f_ex("ue", f_eq(x, t_cat({t_var("ue"), X2, y})));
  FormulaPtr main = f_and({commutes(y, X1), neq1(y), headb, recurb, tailb});
  return f_or(base, main);
}

// --- Monomial encoding ---------------------------------------------------------

struct IsoParts {
  FormulaPtr theta0, theta1;
};

IsoParts iso_core(GadgetParams const& P, TransParts const& T,
                  TupleParts const& TP, FormulaPtr const& B) {
  TermPtr X1 = t_word(P.l1()), X2 = t_word(P.l2());
  TermPtr x = t_var("x"), z = t_var("z"), AV = t_var("av");

  // R(g, p): g is the i-th generator and p = x1^i.
  auto R = [&](TermPtr const& g, TermPtr const& p) {
    std::vector<FormulaPtr> alts;
    for (size_t i = 0; i < P.alphabet->size(); ++i)
      alts.push_back(f_and(f_eq(g, t_word(letter(P.alphabet, i))),
                           f_eq(p, t_word(power(P.l1(), i + 1)))));
    return f_or(std::move(alts));
  };

  FormulaPtr l_xlam = rename_bound(subst(TP.length, {{"y", t_var("lam")}}), 1);
  FormulaPtr b_av =
      rename_bound(subst(B, {{"x", AV}, {"y", t_var("lam")}}), 2);

  FormulaPtr t_head = rename_bound(
      subst(TP.position, {{"y", t_word(P.l1())}, {"z", t_var("p")}}), 3);
  FormulaPtr headi = exs(
      {"g", "p", "va"},
      f_and({f_eq(z, t_cat({AV, X2, AV, t_var("g"), AV, AV, X2, X2, AV, AV,
                            t_var("va")})),
             R(t_var("g"), t_var("p")), t_head}));

  FormulaPtr trans_qp =
      rename_bound(subst(T.trans, {{"x", t_var("q")}, {"y", t_var("pp")}}), 4);
  FormulaPtr t_rec = rename_bound(
      subst(TP.position,
            {{"y", t_cat(t_var("pp"), X1)}, {"z", t_var("p")}}),
      5);
  FormulaPtr premi = f_and(
      {f_eq(z, t_cat({t_var("vb"), t_var("ab"), t_var("q"), t_var("ab"),
                      t_var("vc"), t_var("ab"), AV, t_var("q"), X2,
                      t_var("ab"), AV, t_var("vd")})),
       not_ends_with(t_var("vb"), AV, "qa"),
       not_ends_with(t_var("vc"), AV, "qb"),
       not_starts_with(t_var("vc"), AV, "qc"),
       not_starts_with(t_var("vd"), AV, "qd"), neq1(t_var("vd"))});
  FormulaPtr concli = exs(
      {"g", "p", "pp", "ve"},
      f_and({f_eq(t_var("vd"),
                  t_cat({t_var("vc"), t_var("g"), t_var("ab"), AV, AV,
                         t_var("q"), X2, X2, t_var("ab"), AV, AV,
                         t_var("ve")})),
             not_starts_with(t_var("ve"), AV, "qe"), R(t_var("g"), t_var("p")),
             t_rec, trans_qp}));
  FormulaPtr recuri = alls(
      {"ab", "q"},
      f_imp(f_and({commutes(t_var("ab"), AV), neq1(t_var("ab")),
                   commutes(t_var("q"), X2), neq1(t_var("q"))}),
            alls({"vb", "vc", "vd"}, f_imp(premi, concli))));

  FormulaPtr trans_tail = rename_bound(
      subst(T.trans, {{"x", t_var("qq")}, {"y", t_cat(t_var("lam"), X1)}}), 6);
  FormulaPtr taili = exs(
      {"ac", "qq", "vf"},
      f_and({commutes(t_var("ac"), AV), neq1(t_var("ac")),
             commutes(t_var("qq"), X2),
             f_eq(z, t_cat({t_var("vf"), t_var("ac"), t_var("qq"),
                            t_var("ac")})),
             not_ends_with(t_var("vf"), AV, "qf"), trans_tail}));

  FormulaPtr theta0 =
      exs({"lam", "av"}, f_and({l_xlam, b_av, headi, recuri, taili}));

  // theta1 reads the monomial out of the encoding word: it sits between the
  // next-to-last and last separators. The extraction runs before theta0 so
  // wrong monomials are rejected without rebuilding the whole chain.
  FormulaPtr th0_zi = rename_bound(subst(theta0, {{"z", t_var("zi")}}), 7);
  FormulaPtr l2 = rename_bound(subst(TP.length, {{"y", t_var("lam")}}), 8);
  FormulaPtr b2 =
      rename_bound(subst(B, {{"x", t_var("av")}, {"y", t_var("lam")}}), 9);
  FormulaPtr trans_q =
      rename_bound(subst(T.trans, {{"x", t_var("q")}, {"y", t_var("lam")}}),
                   10);
  TermPtr yv = t_var("y");
  FormulaPtr extract = f_and(
      {f_eq(t_var("zi"),
            t_cat({t_var("u"), t_var("ab"), t_var("q"), t_var("ab"), yv,
                   t_var("ab"), t_var("av"), t_var("q"), X2, t_var("ab"),
                   t_var("av")})),
       not_ends_with(t_var("u"), t_var("av"), "qg"),
       not_starts_with(yv, t_var("av"), "qh"),
       not_ends_with(yv, t_var("av"), "qi")});
  FormulaPtr theta1 = exs(
      {"lam", "av", "zi", "ab", "q", "u"},
      f_and({l2, b2, commutes(t_var("ab"), t_var("av")), neq1(t_var("ab")),
             commutes(t_var("q"), X2), extract, trans_q, th0_zi}));
  return {theta0, theta1};
}

uint64_t nat_arg(std::vector<std::string> const& args, size_t i,
                 std::string const& what) {
  if (i >= args.size()) throw Error("missing argument: " + what);
  auto const& s = args[i];
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error("argument '" + s + "' is not a natural number (" + what +
                ")");
  return std::stoull(s);
}

std::vector<uint64_t> tuple_arg(std::vector<std::string> const& args, size_t i,
                                std::string const& what) {
  if (i >= args.size()) throw Error("missing argument: " + what);
  std::vector<uint64_t> out;
  std::string cur;
  for (char ch : args[i] + ",") {
    if (ch == ',') {
      if (cur.empty() || cur.find_first_not_of("0123456789") !=
                             std::string::npos)
        throw Error("tuple entry '" + cur + "' is not a natural number (" +
                    what + ")");
      out.push_back(std::stoull(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

}  // namespace

// --- Public API ----------------------------------------------------------------

GadgetParams standard_params(size_t alphabet_size) {
  if (alphabet_size < 2)
    throw Error("gadget constructions need at least two generators");
  return GadgetParams{Alphabet::standard(alphabet_size), 0, 1};
}

Word mult_gadget_word(GadgetParams const& P, uint64_t n, uint64_t m) {
  check_params(P);
  Word x1 = P.l1(), x2 = P.l2(), s2 = power(x2, 2);
  if (n == 0) return concat({s2, x1, x2, power(x1, m + 1), s2});
  Word w = P.empty();
  for (uint64_t i = 0; i < n; ++i)
    w = concat(
        {w, s2, power(x1, n + 1 - i), x2, power(x1, (i + 1) * m + 1)});
  return concat(w, s2);
}

Word trans_anchor(GadgetParams const& P) {
  check_params(P);
  Word x1 = P.l1(), x2 = P.l2();
  return concat({x1, x2, x1, x2, x2});
}

Word f_word(GadgetParams const& P, uint64_t s) {
  if (s == 0) throw Error("f_word needs s >= 1");
  check_params(P);
  Word a = trans_anchor(P), x1 = P.l1(), x2 = P.l2();
  Word w = a;
  for (uint64_t j = 1; j <= s; ++j)
    w = concat({w, power(x2, j), power(x1, j), power(a, j + 1)});
  return w;
}

Word tuple_word(GadgetParams const& P, std::vector<uint64_t> const& t) {
  if (t.empty()) throw Error("tuple_word: the empty tuple has no word form");
  check_params(P);
  Word x1 = P.l1(), x2 = P.l2(), w = P.empty();
  for (size_t i = 0; i < t.size(); ++i)
    w = concat({w, power(x1, i + 1), power(x2, t[i] + 1)});
  return w;
}

std::vector<uint64_t> tuple_word_components(GadgetParams const& P,
                                            Word const& w) {
  check_params(P);
  std::vector<uint64_t> t;
  size_t pos = 0;
  for (size_t block = 1; pos < w.size(); ++block) {
    size_t i = 0;
    while (pos < w.size() && w[pos] == P.x1) ++pos, ++i;
    if (i != block)
      throw Error("not a tuple word: x1 run of " + std::to_string(i) +
                  " where " + std::to_string(block) + " was expected");
    size_t j = 0;
    while (pos < w.size() && w[pos] == P.x2) ++pos, ++j;
    if (j == 0) throw Error("not a tuple word: missing x2 run");
    t.push_back(j - 1);
  }
  if (t.empty()) throw Error("not a tuple word: empty word");
  return t;
}

Word a_word(GadgetParams const& P, uint64_t m) {
  if (m == 0) throw Error("a_word needs m >= 1");
  check_params(P);
  Word x1 = P.l1(), x2 = P.l2(), w = P.empty();
  for (uint64_t j = 1; j <= m; ++j) w = concat({w, x2, power(x1, j)});
  return w;
}

Word iso_word(GadgetParams const& P, Word const& w_M) {
  auto comps = tuple_word_components(P, w_M);
  for (auto c : comps)
    if (c < 1 || c > P.alphabet->size())
      throw Error("iso_word: component " + std::to_string(c) +
                  " is not a generator index");
  uint64_t m = comps.size();
  Word a = a_word(P, m), x2 = P.l2(), w = P.empty(), prefix = P.empty();
  for (uint64_t j = 1; j <= m; ++j) {
    prefix = concat(prefix, letter(P.alphabet, comps[j - 1] - 1));
    w = concat({w, power(a, j), power(x2, j), power(a, j), prefix});
  }
  return concat({w, power(a, m + 1), power(x2, m + 1), power(a, m + 1)});
}

Word iso_word_trace(MonoidModel const& M, Word const& w_M, size_t x1,
                    size_t x2) {
  if (M.kind() != MonoidModel::Kind::trace)
    throw Error("iso_word_trace needs a trace monoid");
  if (!center_is_trivial(M))
    throw Error("iso_word_trace: the center is not trivial");
  AlphabetPtr A = M.alphabet();
  GadgetParams P{A, x1, x2};
  auto comps = tuple_word_components(P, w_M);
  for (auto c : comps)
    if (c < 1 || c > A->size())
      throw Error("iso_word_trace: component " + std::to_string(c) +
                  " is not a generator index");
  uint64_t m = comps.size();
  Word pi(A);
  for (size_t i = 0; i < A->size(); ++i)
    if (i != x1) pi = concat(pi, letter(A, i));
  Word lad(A);
  for (uint64_t j = 1; j <= m; ++j)
    lad = concat({lad, pi, power(letter(A, x1), j)});
  Word sep = letter(A, x2), w(A), prefix(A);
  for (uint64_t j = 1; j <= m; ++j) {
    prefix = concat(prefix, letter(A, comps[j - 1] - 1));
    w = concat({w, power(lad, j), power(sep, j), power(lad, j), prefix});
  }
  return concat({w, power(lad, m + 1), power(sep, m + 1), power(lad, m + 1)});
}

FormulaPtr centralizer_formula(Word const& c, std::string const& var) {
  TermPtr v = t_var(var), ct = t_word(c);
  return f_eq(t_cat(ct, v), t_cat(v, ct));
}

FormulaPtr in_s_formula(GadgetParams const& P, std::string const& var) {
  check_params(P);
  TermPtr y = t_var(var);
  Fresh q;
  std::vector<FormulaPtr> parts;
  parts.push_back(neq1(y));
  for (size_t g = 0; g < P.alphabet->size(); ++g) {
    if (g == P.x1 || g == P.x2) continue;
    parts.push_back(no_factor(y, t_word(letter(P.alphabet, g)), q(), q()));
  }
  parts.push_back(no_factor(y, t_word(power(P.l2(), 3)), q(), q()));
  return f_and(std::move(parts));
}

FormulaPtr basis_formula(std::string const& var) {
  // Split variables avoid x/y/z so embedding the formula next to the usual
  // catalogue frees never binds one of them.
  std::string yv = var == "yq" ? "yqa" : "yq", zv = var == "zq" ? "zqa" : "zq";
  TermPtr x = t_var(var);
  FormulaPtr split =
      f_imp(f_eq(x, t_cat(t_var(yv), t_var(zv))),
            f_or(eq1(t_var(yv)), eq1(t_var(zv))));
  return f_and(neq1(x), alls({yv, zv}, split));
}

FormulaPtr mult_gadget_formula(GadgetParams const& P) {
  check_params(P);
  return mult_core(t_word(P.l1()), t_word(P.l2())).psi;
}

FormulaPtr mult_formula(GadgetParams const& P) {
  check_params(P);
  return mult_core(t_word(P.l1()), t_word(P.l2())).phi;
}

FormulaPtr mult_formula_over(TermPtr const& x1, TermPtr const& x2) {
  return mult_core(x1, x2).phi;
}

TransFormulas trans_formulas(GadgetParams const& P) {
  check_params(P);
  auto T = trans_core(t_word(P.l1()), t_word(P.l2()),
                      t_word(trans_anchor(P)));
  return {T.phi_f, T.psi, T.trans};
}

FormulaPtr trans_formula_over(TermPtr const& x1, TermPtr const& x2) {
  TermPtr A = t_cat({x1, x2, x1, x2, x2});
  return trans_core(x1, x2, A).trans;
}

FormulaPtr trans_noparam_formula(AlphabetPtr const& alphabet) {
  if (!alphabet || alphabet->size() < 2)
    throw Error("parameter-free transfer needs at least two generators");
  FormulaPtr tr =
      rename_bound(trans_formula_over(t_var("b1"), t_var("b2")), 1);
  FormulaPtr main =
      exs({"b1", "b2"},
           f_and({basis_formula("b1"), basis_formula("b2"),
                  f_not(f_eq(t_var("b1"), t_var("b2"))), tr}));
  FormulaPtr refl =
      f_and(f_eq(t_var("x"), t_var("y")),
            f_ex("b0", f_and(basis_formula("b0"),
                             commutes(t_var("x"), t_var("b0")))));
  return f_or(main, refl);
}

TupleFormulas tuple_formulas(GadgetParams const& P) {
  check_params(P);
  TermPtr X1 = t_word(P.l1()), X2 = t_word(P.l2());
  auto T = trans_core(X1, X2, t_word(trans_anchor(P)));
  auto U = tuple_core(X1, X2, T);
  return {U.w, U.position, U.in, U.length, U.concat};
}

FormulaPtr b_pair_formula(GadgetParams const& P) {
  check_params(P);
  return b_pair_core(t_word(P.l1()), t_word(P.l2()));
}

IsoFormulas iso_formulas(GadgetParams const& P) {
  check_params(P);
  TermPtr X1 = t_word(P.l1()), X2 = t_word(P.l2());
  auto T = trans_core(X1, X2, t_word(trans_anchor(P)));
  auto U = tuple_core(X1, X2, T);
  auto B = b_pair_core(X1, X2);
  auto I = iso_core(P, T, U, B);
  return {I.theta0, I.theta1};
}

FormulaPtr orbit_formula(AlphabetPtr const& alphabet,
                         std::vector<Word> const& tuple) {
  if (!alphabet) throw Error("orbit_formula needs an alphabet");
  if (tuple.empty()) throw Error("orbit_formula: empty tuple");
  std::vector<size_t> used;
  for (auto const& w : tuple)
    for (size_t i = 0; i < w.size(); ++i)
      if (std::find(used.begin(), used.end(), w[i]) == used.end())
        used.push_back(w[i]);
  auto var_of = [&](size_t letter_idx) {
    size_t k = std::find(used.begin(), used.end(), letter_idx) - used.begin();
    return "y_" + std::to_string(k + 1);
  };
  std::vector<FormulaPtr> parts;
  for (size_t j = 0; j < tuple.size(); ++j) {
    std::string xv =
        tuple.size() == 1 ? "x" : "x_" + std::to_string(j + 1);
    TermPtr pat;
    if (tuple[j].empty()) {
      pat = t_word(Word(alphabet));
    } else {
      std::vector<TermPtr> ps;
      for (size_t i = 0; i < tuple[j].size(); ++i)
        ps.push_back(t_var(var_of(tuple[j][i])));
      pat = t_cat(std::move(ps));
    }
    parts.push_back(f_eq(t_var(xv), pat));
  }
  for (size_t k = 0; k < used.size(); ++k)
    parts.push_back(basis_formula("y_" + std::to_string(k + 1)));
  for (size_t k = 0; k < used.size(); ++k)
    for (size_t l = k + 1; l < used.size(); ++l)
      parts.push_back(f_not(f_eq(t_var("y_" + std::to_string(k + 1)),
                                 t_var("y_" + std::to_string(l + 1)))));
  FormulaPtr body = f_and(std::move(parts));
  if (used.empty()) return body;
  std::vector<std::string> ys;
  for (size_t k = 0; k < used.size(); ++k)
    ys.push_back("y_" + std::to_string(k + 1));
  return f_ex(std::move(ys), body);
}

namespace {

TermPtr rename_term(TermPtr const& t,
                    std::map<std::string, std::string> const& ren) {
  switch (t->kind) {
    case Term::Kind::var: {
      auto it = ren.find(t->name);
      return it == ren.end() ? t : t_var(it->second);
    }
    case Term::Kind::word_const:
    case Term::Kind::numeral:
      return t;
    case Term::Kind::cat:
      return t_cat(rename_term(t->left, ren), rename_term(t->right, ren));
    case Term::Kind::plus:
      return t_plus(rename_term(t->left, ren), rename_term(t->right, ren));
    case Term::Kind::times:
      return t_times(rename_term(t->left, ren), rename_term(t->right, ren));
  }
  throw Error("unreachable term kind");
}

FormulaPtr rename_rec(FormulaPtr const& f, uint64_t tag,
                      std::map<std::string, std::string> ren) {
  switch (f->kind) {
    case Formula::Kind::equal:
      return f_eq(rename_term(f->lhs, ren), rename_term(f->rhs, ren));
    case Formula::Kind::not_f:
      return f_not(rename_rec(f->a, tag, ren));
    case Formula::Kind::and_f:
      return f_and(rename_rec(f->a, tag, ren), rename_rec(f->b, tag, ren));
    case Formula::Kind::or_f:
      return f_or(rename_rec(f->a, tag, ren), rename_rec(f->b, tag, ren));
    case Formula::Kind::implies:
      return f_imp(rename_rec(f->a, tag, ren), rename_rec(f->b, tag, ren));
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      std::string nv = f->var + "_" + std::to_string(tag);
      ren[f->var] = nv;
      FormulaPtr body = rename_rec(f->a, tag, ren);
      return f->kind == Formula::Kind::exists ? f_ex(nv, body)
                                              : f_all(nv, body);
    }
  }
  throw Error("unreachable formula kind");
}

}  // namespace

FormulaPtr rename_bound(FormulaPtr const& f, uint64_t tag) {
  return rename_rec(f, tag, {});
}

FormulaPtr subst_frees(FormulaPtr f,
                       std::vector<std::pair<std::string, TermPtr>> const& subs) {
  for (size_t i = 0; i < subs.size(); ++i)
    f = substitute(f, subs[i].first, t_var("qtmp" + std::to_string(i)));
  for (size_t i = 0; i < subs.size(); ++i)
    f = substitute(f, "qtmp" + std::to_string(i), subs[i].second);
  return f;
}

std::vector<std::string> gadget_names() {
  return {"centralizer", "in-s",   "mult",    "trans",
          "basis",       "trans-noparam", "tuple",   "position",
          "in",          "length", "concat",  "a-word",
          "b-pairs",     "iso",    "iso-trace", "orbit"};
}

GadgetBuild build_gadget(std::string const& name,
                         std::vector<std::string> const& args,
                         GadgetParams const& P, MonoidModel const* M) {
  check_params(P);
  GadgetBuild out;
  out.name = name;
  if (name == "centralizer") {
    Word c = args.empty() ? P.l1() : Word::parse(args[0], P.alphabet);
    out.formula = centralizer_formula(c);
    out.frees = {"y"};
    out.witness_bound = std::max<size_t>(c.size(), 1);
  } else if (name == "in-s") {
    out.formula = in_s_formula(P);
    out.frees = {"y"};
    out.witness_bound = 3;
  } else if (name == "mult") {
    uint64_t n = nat_arg(args, 0, "n"), m = nat_arg(args, 1, "m");
    out.word = mult_gadget_word(P, n, m);
    out.has_word = true;
    out.formula = mult_gadget_formula(P);
    out.frees = {"x", "y", "w"};
    out.witness_bound = out.word.size();
  } else if (name == "trans") {
    uint64_t s = nat_arg(args, 0, "s");
    out.word = f_word(P, s);
    out.has_word = true;
    out.formula = trans_formulas(P).trans;
    out.frees = {"x", "y"};
    out.witness_bound = out.word.size();
  } else if (name == "basis") {
    out.formula = basis_formula();
    out.frees = {"x"};
    out.witness_bound = 2;
  } else if (name == "trans-noparam") {
    uint64_t s = args.empty() ? 2 : nat_arg(args, 0, "s");
    out.formula = trans_noparam_formula(P.alphabet);
    out.frees = {"x", "y"};
    out.witness_bound = f_word(P, std::max<uint64_t>(s, 1)).size();
  } else if (name == "tuple" || name == "position" || name == "in" ||
             name == "length") {
    auto t = tuple_arg(args, 0, "tuple");
    out.word = tuple_word(P, t);
    out.has_word = true;
    auto F = tuple_formulas(P);
    if (name == "tuple") {
      out.formula = F.w;
      out.frees = {"x"};
    } else if (name == "position") {
      out.formula = F.position;
      out.frees = {"x", "y", "z"};
    } else if (name == "in") {
      out.formula = F.in;
      out.frees = {"x", "y"};
    } else {
      out.formula = F.length;
      out.frees = {"x", "y"};
    }
    out.witness_bound = out.word.size();
  } else if (name == "concat") {
    auto t1 = tuple_arg(args, 0, "tuple"), t2 = tuple_arg(args, 1, "tuple");
    t1.insert(t1.end(), t2.begin(), t2.end());
    out.word = tuple_word(P, t1);
    out.has_word = true;
    out.formula = tuple_formulas(P).concat;
    out.frees = {"x", "y", "z"};
    out.witness_bound = out.word.size();
  } else if (name == "a-word" || name == "b-pairs") {
    uint64_t m = nat_arg(args, 0, "m");
    out.word = a_word(P, m);
    out.has_word = true;
    out.formula = b_pair_formula(P);
    out.frees = {"x", "y"};
    out.witness_bound = out.word.size();
  } else if (name == "iso") {
    auto t = tuple_arg(args, 0, "components");
    out.word = iso_word(P, tuple_word(P, t));
    out.has_word = true;
    out.formula = iso_formulas(P).theta1;
    out.frees = {"x", "y"};
    out.witness_bound = out.word.size();
  } else if (name == "iso-trace") {
    if (!M || M->kind() != MonoidModel::Kind::trace)
      throw Error("iso-trace needs a trace monoid model");
    auto t = tuple_arg(args, 0, "components");
    GadgetParams TP{M->alphabet(), P.x1, P.x2};
    out.word = iso_word_trace(*M, tuple_word(TP, t), P.x1, P.x2);
    out.has_word = true;
    out.witness_bound = out.word.size();
  } else if (name == "orbit") {
    if (args.empty()) throw Error("orbit needs at least one word");
    std::vector<Word> ws;
    for (auto const& a : args) ws.push_back(Word::parse(a, P.alphabet));
    out.formula = orbit_formula(P.alphabet, ws);
    if (ws.size() == 1) {
      out.frees = {"x"};
    } else {
      for (size_t j = 1; j <= ws.size(); ++j)
        out.frees.push_back("x_" + std::to_string(j));
    }
    size_t b = 1;
    for (auto const& w : ws) b = std::max(b, w.size());
    out.witness_bound = b;
  } else {
    throw Error("unknown gadget '" + name + "'");
  }
  return out;
}

}  // namespace mwb
