#include "mwb/interpret.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "mwb/error.hpp"
#include "mwb/parse.hpp"
#include "mwb/prenex.hpp"

namespace mwb {

namespace {

std::vector<std::string> tuple_names(std::string const& base, size_t dim) {
  std::vector<std::string> out;
  out.reserve(dim);
  for (size_t i = 1; i <= dim; ++i)
    out.push_back(base + "_" + std::to_string(i));
  return out;
}

// Instantiates an interpretation formula whose canonical free variables are
// x_1..x_dim (then y_, z_ for the later groups) at the given variable names.
// Bound variables are refreshed first so repeated instantiations never bind
// the same name twice along a path.
FormulaPtr inst_at(FormulaPtr const& op, size_t dim,
                   std::vector<std::vector<std::string>> const& groups,
                   uint64_t& tag) {
  static char const* bases[] = {"x", "y", "z"};
  FormulaPtr f = rename_bound(op, ++tag);
  std::vector<std::pair<std::string, TermPtr>> subs;
  for (size_t g = 0; g < groups.size(); ++g)
    for (size_t i = 1; i <= dim; ++i)
      subs.push_back({std::string(bases[g]) + "_" + std::to_string(i),
                      t_var(groups[g].at(i - 1))});
  return subst_frees(std::move(f), subs);
}

void collect_names(TermPtr const& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == Term::Kind::var) out.insert(t->name);
  collect_names(t->left, out);
  collect_names(t->right, out);
}

void collect_names(FormulaPtr const& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == Formula::Kind::equal) {
    collect_names(f->lhs, out);
    collect_names(f->rhs, out);
    return;
  }
  if (f->kind == Formula::Kind::exists || f->kind == Formula::Kind::forall)
    out.insert(f->var);
  collect_names(f->a, out);
  collect_names(f->b, out);
}

uint64_t need_nat(Elem const& e, char const* who) {
  if (!std::holds_alternative<uint64_t>(e))
    throw Error(std::string(who) + " encodes natural numbers");
  return std::get<uint64_t>(e);
}

Word need_word(Elem const& e, char const* who) {
  if (!std::holds_alternative<Word>(e))
    throw Error(std::string(who) + " encodes monoid elements");
  return std::get<Word>(e);
}

Word need_word_value(std::vector<Value> const& vals, size_t at,
                     char const* who) {
  if (at >= vals.size() || !std::holds_alternative<Word>(vals[at]))
    throw Error(std::string(who) + " decodes word components");
  return std::get<Word>(vals[at]);
}

Elem value_elem(Value const& v) {
  if (std::holds_alternative<Word>(v)) return std::get<Word>(v);
  return std::get<uint64_t>(v);
}

Value elem_value(Elem const& e) {
  if (std::holds_alternative<Word>(e)) return Value(std::get<Word>(e));
  if (std::holds_alternative<uint64_t>(e))
    return Value(std::get<uint64_t>(e));
  throw Error("a tuple is not a single evaluation value");
}

// Rewrites one formula. Fresh result slots are named k_<i> so an evaluation
// pool keyed "k" can cover every intermediate at once; the definitions are
// grouped so constants bind before operation results and the cheap conjuncts
// run first.
struct Translator {
  Interpretation const& I;
  uint64_t tag = 0;
  std::set<std::string> taken;

  std::string fresh_slot() {
    std::string b;
    do b = "k_" + std::to_string(++tag);
    while (taken.count(b));
    return b;
  }

  FormulaPtr inst(FormulaPtr const& op,
                  std::vector<std::string> const& bases) {
    std::vector<std::vector<std::string>> groups;
    groups.reserve(bases.size());
    for (auto const& b : bases) groups.push_back(tuple_names(b, I.dim));
    return inst_at(op, I.dim, groups, tag);
  }

  FormulaPtr op_inst(std::string const& key, char const* symbol,
                     std::string const& a, std::string const& b,
                     std::string const& c) {
    auto it = I.ops.find(key);
    if (it == I.ops.end())
      throw Error("interpretation " + I.name +
                  " has no translation for " + symbol);
    return inst(it->second, {a, b, c});
  }

  struct SlotDefs {
    std::vector<std::string> const_slots, sum_slots, prod_slots;
    std::vector<FormulaPtr> consts, sums, prods, guards;
  };

  std::string term_slot(TermPtr const& t, SlotDefs& D,
                        std::map<std::string, std::string> const& scope) {
    switch (t->kind) {
      case Term::Kind::var: {
        auto it = scope.find(t->name);
        if (it == scope.end())
          throw Error("unbound variable " + t->name);
        return it->second;
      }
      case Term::Kind::numeral: {
        if (!I.numeral)
          throw Error("interpretation " + I.name +
                      " has no numeral translation");
        std::string b = fresh_slot();
        D.const_slots.push_back(b);
        D.consts.push_back(I.numeral(t->value, tuple_names(b, I.dim), tag));
        D.guards.push_back(inst(I.delta, {b}));
        return b;
      }
      case Term::Kind::word_const: {
        if (!I.constant)
          throw Error("interpretation " + I.name +
                      " has no constant translation");
        std::string b = fresh_slot();
        D.const_slots.push_back(b);
        D.consts.push_back(I.constant(t->word, tuple_names(b, I.dim), tag));
        D.guards.push_back(inst(I.delta, {b}));
        return b;
      }
      case Term::Kind::cat:
      case Term::Kind::plus: {
        std::string a = term_slot(t->left, D, scope);
        std::string c = term_slot(t->right, D, scope);
        std::string b = fresh_slot();
        D.sum_slots.push_back(b);
        bool cat = t->kind == Term::Kind::cat;
        D.sums.push_back(
            op_inst(cat ? "concat" : "plus", cat ? "." : "+", a, c, b));
        D.guards.push_back(inst(I.delta, {b}));
        return b;
      }
      case Term::Kind::times: {
        std::string a = term_slot(t->left, D, scope);
        std::string c = term_slot(t->right, D, scope);
        std::string b = fresh_slot();
        D.prod_slots.push_back(b);
        D.prods.push_back(op_inst("times", "*", a, c, b));
        D.guards.push_back(inst(I.delta, {b}));
        return b;
      }
    }
    throw Error("unreachable term kind");
  }

  FormulaPtr atom(TermPtr const& lhs, TermPtr const& rhs,
                  std::map<std::string, std::string> const& scope) {
    SlotDefs D;
    std::string lb = term_slot(lhs, D, scope);
    std::string rb = term_slot(rhs, D, scope);
    std::vector<FormulaPtr> conj = D.consts;
    conj.push_back(inst(I.eps, {lb, rb}));
    for (auto& g : D.guards) conj.push_back(g);
    for (auto& g : D.sums) conj.push_back(g);
    for (auto& g : D.prods) conj.push_back(g);
    FormulaPtr body = f_and(std::move(conj));
    std::vector<std::string> ex;
    for (auto const* grp : {&D.const_slots, &D.sum_slots, &D.prod_slots})
      for (auto const& b : *grp)
        for (auto& v : tuple_names(b, I.dim)) ex.push_back(std::move(v));
    if (ex.empty()) return body;
    return f_ex(std::move(ex), std::move(body));
  }

  FormulaPtr go(FormulaPtr const& f,
                std::map<std::string, std::string> const& scope) {
    switch (f->kind) {
      case Formula::Kind::equal:
        return atom(f->lhs, f->rhs, scope);
      case Formula::Kind::not_f:
        return f_not(go(f->a, scope));
      case Formula::Kind::and_f:
        return f_and(go(f->a, scope), go(f->b, scope));
      case Formula::Kind::or_f:
        return f_or(go(f->a, scope), go(f->b, scope));
      case Formula::Kind::implies:
        return f_imp(go(f->a, scope), go(f->b, scope));
      case Formula::Kind::exists:
      case Formula::Kind::forall: {
        auto inner = scope;
        std::string base = f->var;
        if (inner.count(base)) base = fresh_slot();
        inner[f->var] = base;
        FormulaPtr body = go(f->a, inner);
        FormulaPtr dom = inst(I.delta, {base});
        auto vars = tuple_names(base, I.dim);
        return f->kind == Formula::Kind::exists
                   ? f_ex(vars, f_and(dom, body))
                   : f_all(vars, f_imp(dom, body));
      }
    }
    throw Error("unreachable formula kind");
  }

  FormulaPtr run(FormulaPtr const& psi) {
    validate(psi, I.source);
    collect_names(psi, taken);
    std::map<std::string, std::string> scope;
    std::vector<FormulaPtr> parts;
    for (auto const& v : free_vars(psi)) {
      scope[v] = v;
      parts.push_back(inst(I.delta, {v}));
    }
    FormulaPtr core = go(psi, scope);
    if (parts.empty()) return core;
    parts.push_back(core);
    return f_and(std::move(parts));
  }
};

}  // namespace

std::string elem_str(Elem const& e) {
  if (std::holds_alternative<Word>(e)) return std::get<Word>(e).str();
  if (std::holds_alternative<uint64_t>(e))
    return std::to_string(std::get<uint64_t>(e));
  return tuple_str(std::get<NatTuple>(e));
}

FormulaPtr translate(FormulaPtr const& psi, Interpretation const& I) {
  if (!psi) throw Error("translate needs a formula");
  if (!I.formula_backed())
    throw Error("interpretation " + I.name +
                " does not carry translation formulas");
  Translator T{I, 0, {}};
  return T.run(psi);
}

Interpretation compose(Interpretation const& outer,
                       Interpretation const& inner) {
  if (inner.target != outer.source ||
      inner.target_name != outer.source_name)
    throw Error("interpretations do not chain: " + inner.name + " lands in " +
                inner.target_name + " while " + outer.name +
                " starts from " + outer.source_name);

  Interpretation C;
  C.name = inner.source_name + "-in-" + outer.target_name + "-via-" +
           outer.name;
  C.source = inner.source;
  C.source_name = inner.source_name;
  C.source_alphabet = inner.source_alphabet;
  C.target = outer.target;
  C.target_name = outer.target_name;
  C.target_alphabet = outer.target_alphabet;
  C.dim = outer.dim * inner.dim;
  C.params = outer.params;

  size_t d1 = outer.dim, d2 = inner.dim;
  // Push an inner formula through the outer translation, then flatten the
  // doubled indices b_i_j to the composite's canonical b_{(i-1)d1+j}.
  auto lift = [&](FormulaPtr const& f,
                  std::vector<std::string> const& bases) -> FormulaPtr {
    FormulaPtr g = translate(f, outer);
    std::vector<std::pair<std::string, TermPtr>> subs;
    for (auto const& b : bases)
      for (size_t i = 1; i <= d2; ++i)
        for (size_t j = 1; j <= d1; ++j)
          subs.push_back(
              {b + "_" + std::to_string(i) + "_" + std::to_string(j),
               t_var(b + "_" + std::to_string((i - 1) * d1 + j))});
    return subst_frees(std::move(g), subs);
  };

  if (outer.formula_backed()) {
    if (inner.delta) C.delta = lift(inner.delta, {"x"});
    if (inner.eps) C.eps = lift(inner.eps, {"x", "y"});
    for (auto const& [key, f] : inner.ops)
      C.ops[key] = lift(f, {"x", "y", "z"});
    if (inner.numeral) {
      Interpretation out_copy = outer;
      NumeralFn n2 = inner.numeral;
      C.numeral = [out_copy, n2, d1, d2](uint64_t k,
                                         std::vector<std::string> const& vars,
                                         uint64_t& tag) {
        FormulaPtr f = n2(k, tuple_names("x", d2), tag);
        FormulaPtr g = translate(f, out_copy);
        std::vector<std::pair<std::string, TermPtr>> subs;
        for (size_t i = 1; i <= d2; ++i)
          for (size_t j = 1; j <= d1; ++j)
            subs.push_back(
                {"x_" + std::to_string(i) + "_" + std::to_string(j),
                 t_var(vars.at((i - 1) * d1 + j - 1))});
        return rename_bound(subst_frees(std::move(g), subs), ++tag);
      };
    }
    if (inner.constant) {
      Interpretation out_copy = outer;
      ConstantFn c2 = inner.constant;
      C.constant = [out_copy, c2, d1, d2](Word const& w,
                                          std::vector<std::string> const& vars,
                                          uint64_t& tag) {
        FormulaPtr f = c2(w, tuple_names("x", d2), tag);
        FormulaPtr g = translate(f, out_copy);
        std::vector<std::pair<std::string, TermPtr>> subs;
        for (size_t i = 1; i <= d2; ++i)
          for (size_t j = 1; j <= d1; ++j)
            subs.push_back(
                {"x_" + std::to_string(i) + "_" + std::to_string(j),
                 t_var(vars.at((i - 1) * d1 + j - 1))});
        return rename_bound(subst_frees(std::move(g), subs), ++tag);
      };
    }
  }

  if (outer.encode && inner.encode) {
    auto oe = outer.encode;
    auto ie = inner.encode;
    C.encode = [oe, ie](Elem const& e) {
      std::vector<Value> out;
      for (auto const& v : ie(e)) {
        auto part = oe(value_elem(v));
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    };
  }
  if (outer.decode && inner.decode) {
    auto od = outer.decode;
    auto id = inner.decode;
    C.decode = [od, id, d1, d2](std::vector<Value> const& vals) {
      if (vals.size() != d1 * d2)
        throw Error("composite decode expects " + std::to_string(d1 * d2) +
                    " components");
      std::vector<Value> mid;
      mid.reserve(d2);
      for (size_t i = 0; i < d2; ++i) {
        std::vector<Value> grp(vals.begin() + i * d1,
                               vals.begin() + (i + 1) * d1);
        mid.push_back(elem_value(od(grp)));
      }
      return id(mid);
    };
  }
  return C;
}

Interpretation identity_interpretation(Sig sig, AlphabetPtr alphabet) {
  Interpretation I;
  I.source = I.target = sig;
  I.dim = 1;
  TermPtr x = t_var("x_1"), y = t_var("y_1"), z = t_var("z_1");
  I.delta = f_eq(x, x);
  I.eps = f_eq(x, y);
  if (sig == Sig::arithmetic) {
    I.name = "identity-nat";
    I.source_name = I.target_name = "nat";
    I.ops["plus"] = f_eq(t_plus(x, y), z);
    I.ops["times"] = f_eq(t_times(x, y), z);
    I.numeral = [](uint64_t k, std::vector<std::string> const& vars,
                   uint64_t&) { return f_eq(t_var(vars.at(0)), t_num(k)); };
    I.encode = [](Elem const& e) {
      return std::vector<Value>{Value(need_nat(e, "identity-nat"))};
    };
    I.decode = [](std::vector<Value> const& vals) -> Elem {
      if (vals.size() != 1 || !std::holds_alternative<uint64_t>(vals[0]))
        throw Error("identity-nat decodes one natural");
      return std::get<uint64_t>(vals[0]);
    };
    return I;
  }
  if (!alphabet) throw Error("identity monoid interpretation needs an alphabet");
  I.name = "identity-free";
  I.source_name = I.target_name = "free";
  I.source_alphabet = I.target_alphabet = alphabet;
  I.ops["concat"] = f_eq(t_cat(x, y), z);
  I.constant = [](Word const& w, std::vector<std::string> const& vars,
                  uint64_t&) { return f_eq(t_var(vars.at(0)), t_word(w)); };
  I.encode = [](Elem const& e) {
    return std::vector<Value>{Value(need_word(e, "identity-free"))};
  };
  I.decode = [](std::vector<Value> const& vals) -> Elem {
    return need_word_value(vals, 0, "identity-free");
  };
  return I;
}

Interpretation nat_in_free(GadgetParams const& P) {
  Interpretation I;
  I.name = "nat-in-free";
  I.source = Sig::arithmetic;
  I.target = Sig::monoid;
  I.source_name = "nat";
  I.target_name = "free";
  I.target_alphabet = P.alphabet;
  I.dim = 1;
  I.params = {P.l1()};

  TermPtr x = t_var("x_1"), y = t_var("y_1"), z = t_var("z_1");
  TermPtr X1 = t_word(P.l1());
  I.delta = f_eq(t_cat(x, X1), t_cat(X1, x));
  I.eps = f_eq(x, y);
  I.ops["plus"] = f_eq(t_cat(x, y), z);
  I.ops["times"] = subst_frees(
      mult_formula(P), {{"x", x}, {"y", y}, {"z", z}});

  Word l1 = P.l1();
  I.numeral = [l1](uint64_t k, std::vector<std::string> const& vars,
                   uint64_t&) {
    return f_eq(t_var(vars.at(0)), t_word(power(l1, k)));
  };
  I.encode = [l1](Elem const& e) {
    return std::vector<Value>{Value(power(l1, need_nat(e, "nat-in-free")))};
  };
  I.decode = [l1](std::vector<Value> const& vals) -> Elem {
    Word w = need_word_value(vals, 0, "nat-in-free");
    if (w != power(l1, w.size()))
      throw Error("nat-in-free decodes powers of the payload letter");
    return static_cast<uint64_t>(w.size());
  };
  return I;
}

Interpretation nat_in_free_noparam(AlphabetPtr const& alphabet) {
  if (!alphabet || alphabet->size() < 2)
    throw Error("the parameter-free interpretation needs two generators");

  Interpretation I;
  I.name = "nat-in-free-noparam";
  I.source = Sig::arithmetic;
  I.target = Sig::monoid;
  I.source_name = "nat";
  I.target_name = "free";
  I.target_alphabet = alphabet;
  I.dim = 2;

  TermPtr x1 = t_var("x_1"), x2 = t_var("x_2");
  TermPtr y1 = t_var("y_1");
  TermPtr z1 = t_var("z_1");
  FormulaPtr tn = trans_noparam_formula(alphabet);

  // An element is a pair (payload, letter) with the payload a power of the
  // letter; the letter-transport equivalence compares payload exponents.
  I.delta = f_and(basis_formula("x_2"),
                  f_eq(t_cat(x1, x2), t_cat(x2, x1)));
  I.eps = subst_frees(rename_bound(tn, 1), {{"x", x1}, {"y", y1}});

  TermPtr c = t_var("c");
  I.ops["plus"] = f_ex(
      "c",
      f_and({subst_frees(rename_bound(tn, 2), {{"x", y1}, {"y", c}}),
             f_eq(t_cat(c, x2), t_cat(x2, c)),
             subst_frees(rename_bound(tn, 3),
                         {{"x", t_cat(x1, c)}, {"y", z1}})}));

  TermPtr e = t_var("e"), b2 = t_var("b2");
  I.ops["times"] = f_ex(
      std::vector<std::string>{"b2", "c", "e"},
      f_and({rename_bound(basis_formula("b2"), 4),
             f_not(f_eq(b2, x2)),
             subst_frees(rename_bound(tn, 5), {{"x", y1}, {"y", c}}),
             f_eq(t_cat(c, x2), t_cat(x2, c)),
             subst_frees(rename_bound(mult_formula_over(x2, b2), 6),
                         {{"x", x1}, {"y", c}, {"z", e}}),
             subst_frees(rename_bound(tn, 7), {{"x", e}, {"y", z1}})}));

  FormulaPtr plus_op = I.ops["plus"], times_op = I.ops["times"];
  I.numeral = [plus_op, times_op](uint64_t k,
                                  std::vector<std::string> const& vars,
                                  uint64_t& tag) {
    std::function<FormulaPtr(uint64_t, std::vector<std::string> const&)> num =
        [&](uint64_t n, std::vector<std::string> const& vs) -> FormulaPtr {
      if (n == 0) return inst_at(plus_op, 2, {vs, vs, vs}, tag);
      FormulaPtr one = f_and(inst_at(times_op, 2, {vs, vs, vs}, tag),
                             f_not(inst_at(plus_op, 2, {vs, vs, vs}, tag)));
      if (n == 1) return one;
      auto ovs = tuple_names("k_" + std::to_string(++tag), 2);
      auto pvs = tuple_names("k_" + std::to_string(++tag), 2);
      FormulaPtr oneo = f_and(inst_at(times_op, 2, {ovs, ovs, ovs}, tag),
                              f_not(inst_at(plus_op, 2, {ovs, ovs, ovs}, tag)));
      FormulaPtr rec = num(n - 1, pvs);
      std::vector<std::string> ex = ovs;
      ex.insert(ex.end(), pvs.begin(), pvs.end());
      return f_ex(std::move(ex),
                  f_and({std::move(oneo), std::move(rec),
                         inst_at(plus_op, 2, {pvs, ovs, vs}, tag)}));
    };
    return num(k, vars);
  };

  Word b = letter(alphabet, 0);
  I.encode = [b](Elem const& e2) {
    uint64_t n = need_nat(e2, "nat-in-free-noparam");
    return std::vector<Value>{Value(power(b, n)), Value(b)};
  };
  I.decode = [](std::vector<Value> const& vals) -> Elem {
    Word u = need_word_value(vals, 0, "nat-in-free-noparam");
    Word bl = need_word_value(vals, 1, "nat-in-free-noparam");
    if (bl.size() != 1 || u != power(bl, u.size()))
      throw Error("nat-in-free-noparam decodes (letter power, letter) pairs");
    return static_cast<uint64_t>(u.size());
  };
  return I;
}

Interpretation nat_in_trace(MonoidModel const& M) {
  if (M.kind() != MonoidModel::Kind::trace)
    throw Error("nat-in-trace needs a trace monoid");
  if (!center_is_trivial(M))
    throw Error("nat-in-trace needs a trace monoid with trivial center");
  AlphabetPtr A = M.alphabet();
  size_t i1 = A->size(), i2 = A->size();
  for (size_t i = 0; i < A->size() && i1 == A->size(); ++i)
    for (size_t j = i + 1; j < A->size(); ++j)
      if (!M.commutes(i, j)) {
        i1 = i;
        i2 = j;
        break;
      }
  if (i1 == A->size())
    throw Error("nat-in-trace needs a non-commuting generator pair");
  GadgetParams P{A, i1, i2};

  Interpretation I;
  I.name = "nat-in-trace";
  I.source = Sig::arithmetic;
  I.target = Sig::monoid;
  I.source_name = "nat";
  I.target_name = "trace";
  I.target_alphabet = A;
  I.dim = 1;
  I.params = {P.l1()};

  TermPtr x = t_var("x_1"), y = t_var("y_1"), z = t_var("z_1");
  TermPtr X1 = t_word(P.l1());
  // Commutation alone admits neighbours of x1, so the domain also requires
  // every occurring generator to be x1 itself.
  FormulaPtr single_support = f_all(
      "d",
      f_imp(f_and(rename_bound(basis_formula("d"), 1),
                  f_ex("u", f_ex("v", f_eq(x, t_cat({t_var("u"), t_var("d"),
                                                     t_var("v")}))))),
            f_eq(t_var("d"), X1)));
  I.delta = f_and(f_eq(t_cat(x, X1), t_cat(X1, x)), single_support);
  I.eps = f_eq(x, y);
  I.ops["plus"] = f_eq(t_cat(x, y), z);
  I.ops["times"] = subst_frees(
      mult_formula(P), {{"x", x}, {"y", y}, {"z", z}});

  Word l1 = P.l1();
  I.numeral = [l1](uint64_t k, std::vector<std::string> const& vars,
                   uint64_t&) {
    return f_eq(t_var(vars.at(0)), t_word(power(l1, k)));
  };
  I.encode = [l1](Elem const& e) {
    return std::vector<Value>{Value(power(l1, need_nat(e, "nat-in-trace")))};
  };
  I.decode = [l1](std::vector<Value> const& vals) -> Elem {
    Word w = need_word_value(vals, 0, "nat-in-trace");
    if (w != power(l1, w.size()))
      throw Error("nat-in-trace decodes powers of the payload letter");
    return static_cast<uint64_t>(w.size());
  };
  return I;
}

Interpretation monoid_in_nat(AlphabetPtr const& alphabet) {
  if (!alphabet || alphabet->size() == 0)
    throw Error("monoid-in-nat needs an alphabet");
  Interpretation I;
  I.name = "monoid-in-nat";
  I.source = Sig::monoid;
  I.target = Sig::arithmetic;
  I.source_name = "free";
  I.target_name = "nat";
  I.source_alphabet = alphabet;
  I.dim = 1;
  AlphabetPtr A = alphabet;
  I.encode = [](Elem const& e) {
    Code c = word_code(need_word(e, "monoid-in-nat"));
    if (c > Code{UINT64_MAX})
      throw CodingError("word code does not fit the arithmetic sort");
    return std::vector<Value>{Value(static_cast<uint64_t>(c))};
  };
  I.decode = [A](std::vector<Value> const& vals) -> Elem {
    if (vals.size() != 1 || !std::holds_alternative<uint64_t>(vals[0]))
      throw Error("monoid-in-nat decodes one code number");
    return word_decode(std::get<uint64_t>(vals[0]), A);
  };
  return I;
}

Interpretation snn_in_nat() {
  Interpretation I;
  I.name = "snn-in-nat";
  I.source = Sig::arithmetic;
  I.target = Sig::arithmetic;
  I.source_name = "snn";
  I.target_name = "nat";
  I.dim = 1;
  I.encode = [](Elem const& e) -> std::vector<Value> {
    if (std::holds_alternative<uint64_t>(e))
      return {Value(std::get<uint64_t>(e))};
    if (std::holds_alternative<NatTuple>(e)) {
      Code c = encode_tuple(std::get<NatTuple>(e));
      if (c > Code{UINT64_MAX})
        throw CodingError("sequence code does not fit the arithmetic sort");
      return {Value(static_cast<uint64_t>(c))};
    }
    throw Error("snn-in-nat encodes naturals and tuples");
  };
  I.decode = [](std::vector<Value> const& vals) -> Elem {
    if (vals.size() != 1 || !std::holds_alternative<uint64_t>(vals[0]))
      throw Error("snn-in-nat decodes one code number");
    return decode_tuple(std::get<uint64_t>(vals[0]));
  };
  return I;
}

Interpretation snn_in_free(GadgetParams const& P) {
  Interpretation I;
  I.name = "snn-in-free";
  I.source = Sig::arithmetic;
  I.target = Sig::monoid;
  I.source_name = "snn";
  I.target_name = "free";
  I.target_alphabet = P.alphabet;
  I.dim = 1;

  TupleFormulas F = tuple_formulas(P);
  TermPtr x = t_var("x_1"), y = t_var("y_1"), z = t_var("z_1");
  I.delta = f_or(f_eq(x, t_word(Word())),
                 subst_frees(rename_bound(F.w, 1), {{"x", x}}));
  I.eps = f_eq(x, y);
  I.ops["concat"] = subst_frees(rename_bound(F.concat, 2),
                                {{"x", x}, {"y", y}, {"z", z}});

  GadgetParams Pc = P;
  I.encode = [Pc](Elem const& e) -> std::vector<Value> {
    if (!std::holds_alternative<NatTuple>(e))
      throw Error("snn-in-free encodes tuples");
    NatTuple const& t = std::get<NatTuple>(e);
    if (t.empty()) return {Value(Word(Pc.alphabet))};
    return {Value(tuple_word(Pc, t))};
  };
  I.decode = [Pc](std::vector<Value> const& vals) -> Elem {
    Word w = need_word_value(vals, 0, "snn-in-free");
    if (w.size() == 0) return NatTuple{};
    return tuple_word_components(Pc, w);
  };
  return I;
}

std::string BiReport::str() const {
  return "monoid side:\n" + monoid_side.str() + "arithmetic side:\n" +
         arithmetic_side.str();
}

BiReport check_bi_interpretation(Interpretation const& mono_in_nat,
                                 Interpretation const& nat_in_mono,
                                 std::vector<Word> const& monomials,
                                 std::vector<NatTuple> const& tuples) {
  BiReport R;

  AlphabetPtr X = mono_in_nat.source_alphabet;
  if (!monomials.empty()) {
    if (!X) throw Error("the monoid side needs a source alphabet");
    GadgetParams P;
    P.alphabet = X;
    IsoFormulas F = iso_formulas(P);
    MonoidModel M = MonoidModel::free_monoid(X);
    Structure S = Structure::over(M);

    size_t maxm = 1;
    for (auto const& w : monomials) maxm = std::max(maxm, w.size());

    EvalOptions opt;
    opt.mode = EvalMode::witness;
    std::vector<Value> apool, fpool, qpool, abpool, ypool;
    for (uint64_t s = 1; s <= maxm + 1; ++s)
      apool.push_back(Value(a_word(P, s)));
    for (uint64_t s = 1; s <= maxm + 2; ++s)
      fpool.push_back(Value(f_word(P, s)));
    for (uint64_t s = 0; s <= maxm + 2; ++s)
      qpool.push_back(Value(power(P.l2(), s)));
    for (uint64_t k = 1; k <= maxm + 1; ++k)
      for (uint64_t j = 1; j <= maxm + 1; ++j)
        abpool.push_back(Value(power(a_word(P, k), j)));
    ypool.push_back(Value(Word(X)));
    for (auto const& w : monomials) ypool.push_back(Value(w));
    opt.witnesses["av"] = apool;
    opt.witnesses["f"] = fpool;
    opt.witnesses["q"] = qpool;
    opt.witnesses["ab"] = abpool;
    opt.witnesses["y"] = ypool;

    for (auto const& w : monomials) {
      if (w.size() == 0) {
        R.monoid_side.false_negatives.push_back("(empty monomial)");
        continue;
      }
      NatTuple comps = monomial_to_tuple(w);
      Word xw = tuple_word(P, comps);
      opt.bound = iso_word(P, xw).size();
      opt.witnesses["zi"] = {Value(iso_word(P, xw))};
      auto sols = solutions(S, F.theta1, {"y"}, opt, {{"x", Value(xw)}});
      bool hit = false;
      for (auto const& s : sols) {
        if (std::get<Word>(s.at(0)) == w) {
          hit = true;
        } else {
          R.monoid_side.false_positives.push_back(
              w.str() + " paired with " + value_str(s.at(0)));
        }
      }
      if (!hit)
        R.monoid_side.false_negatives.push_back(w.str());
      else if (sols.size() == 1)
        ++R.monoid_side.ok;
    }
  }

  GadgetParams P2;
  P2.alphabet = nat_in_mono.target_alphabet
                    ? nat_in_mono.target_alphabet
                    : standard_params().alphabet;
  for (auto const& t : tuples) {
    NatTuple expect;
    for (size_t j = 0; j < t.size(); ++j) {
      for (size_t c = 0; c <= j; ++c) expect.push_back(1);
      for (uint64_t c = 0; c <= t[j]; ++c) expect.push_back(2);
    }
    NatTuple got =
        t.empty() ? NatTuple{} : monomial_to_tuple(tuple_word(P2, t));
    if (got == expect)
      ++R.arithmetic_side.ok;
    else
      R.arithmetic_side.false_negatives.push_back(
          tuple_str(t) + " maps to " + tuple_str(got) + " not " +
          tuple_str(expect));
  }
  return R;
}

std::vector<CorpusSentence> arithmetic_corpus() {
  return {
      {"1 + 1 = 2", true},
      {"2 * 3 = 6", true},
      {"2 * 3 = 7", false},
      {"E x. x + x = 4", true},
      {"E x. x + x = 7", false},
      {"E x. x * x = 9", true},
      {"E x. x * x = 8", false},
      {"E x. E y. ((x * y = 6) & (x + y = 5))", true},
      {"E x. x * 2 = 5", false},
      {"A x. (x = 0 | E y. x = y + 1)", true},
      {"A x. x + 0 = x", true},
      {"A x. x * 0 = 0", true},
      {"A x. A y. x + y = y + x", true},
      {"A x. ! x + 1 = x", true},
      {"E x. 2 * x = 7", false},
      {"A x. A y. (x + 1 = y + 1 -> x = y)", true},
      {"E x. ((x + 3 = 5) & (x * x = 4))", true},
      {"A x. x * 1 = x", true},
      {"E x. E y. ((x * x + y * y = 25) & (x = y + 1))", true},
      {"A x. x * 2 = x + x", true},
  };
}

size_t measured_inflation(Interpretation const& I) {
  size_t m = 0;
  for (auto const& s : arithmetic_corpus()) {
    FormulaPtr f = parse_formula(s.text, I.source, I.source_alphabet);
    size_t before = classify(f).n;
    size_t after = classify(translate(f, I)).n;
    if (after > before) m = std::max(m, after - before);
  }
  return m;
}

}  // namespace mwb
