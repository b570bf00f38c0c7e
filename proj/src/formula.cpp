#include "mwb/formula.hpp"

#include <algorithm>

#include "mwb/error.hpp"

namespace mwb {

namespace {

std::shared_ptr<Term> make_term(Term::Kind kind) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  return t;
}

std::shared_ptr<Formula> make_formula(Formula::Kind kind) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  return f;
}

}  // namespace

TermPtr t_var(std::string name) {
  if (name.empty()) throw Error("variable name must be non-empty");
  auto t = make_term(Term::Kind::var);
  t->name = std::move(name);
  return t;
}

TermPtr t_word(Word w) {
  auto t = make_term(Term::Kind::word_const);
  t->word = std::move(w);
  return t;
}

TermPtr t_num(uint64_t value) {
  auto t = make_term(Term::Kind::numeral);
  t->value = value;
  return t;
}

namespace {

TermPtr t_binary(Term::Kind kind, TermPtr a, TermPtr b) {
  if (!a || !b) throw Error("null term operand");
  auto t = make_term(kind);
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

}  // namespace

TermPtr t_cat(TermPtr a, TermPtr b) {
  return t_binary(Term::Kind::cat, std::move(a), std::move(b));
}

TermPtr t_cat(std::vector<TermPtr> parts) {
  if (parts.empty()) throw Error("t_cat of no parts");
  TermPtr out = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) out = t_cat(parts[i], out);
  return out;
}

TermPtr t_plus(TermPtr a, TermPtr b) {
  return t_binary(Term::Kind::plus, std::move(a), std::move(b));
}

TermPtr t_times(TermPtr a, TermPtr b) {
  return t_binary(Term::Kind::times, std::move(a), std::move(b));
}

FormulaPtr f_eq(TermPtr lhs, TermPtr rhs) {
  if (!lhs || !rhs) throw Error("null term in equality");
  auto f = make_formula(Formula::Kind::equal);
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

FormulaPtr f_not(FormulaPtr a) {
  if (!a) throw Error("null formula operand");
  auto f = make_formula(Formula::Kind::not_f);
  f->a = std::move(a);
  return f;
}

namespace {

FormulaPtr f_binary(Formula::Kind kind, FormulaPtr a, FormulaPtr b) {
  if (!a || !b) throw Error("null formula operand");
  auto f = make_formula(kind);
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

FormulaPtr fold_right(Formula::Kind kind, std::vector<FormulaPtr> parts) {
  if (parts.empty()) throw Error("connective fold of no parts");
  FormulaPtr out = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;)
    out = f_binary(kind, parts[i], out);
  return out;
}

}  // namespace

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return f_binary(Formula::Kind::and_f, std::move(a), std::move(b));
}

FormulaPtr f_and(std::vector<FormulaPtr> parts) {
  return fold_right(Formula::Kind::and_f, std::move(parts));
}

FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return f_binary(Formula::Kind::or_f, std::move(a), std::move(b));
}

FormulaPtr f_or(std::vector<FormulaPtr> parts) {
  return fold_right(Formula::Kind::or_f, std::move(parts));
}

FormulaPtr f_imp(FormulaPtr a, FormulaPtr b) {
  return f_binary(Formula::Kind::implies, std::move(a), std::move(b));
}

namespace {

FormulaPtr quantify(Formula::Kind kind, std::string var, FormulaPtr body) {
  if (!body) throw Error("null quantifier body");
  if (var.empty()) throw Error("quantifier variable must be non-empty");
  auto f = make_formula(kind);
  f->var = std::move(var);
  f->a = std::move(body);
  return f;
}

}  // namespace

FormulaPtr f_ex(std::string var, FormulaPtr body) {
  return quantify(Formula::Kind::exists, std::move(var), std::move(body));
}

FormulaPtr f_ex(std::vector<std::string> vars, FormulaPtr body) {
  FormulaPtr out = std::move(body);
  for (size_t i = vars.size(); i-- > 0;) out = f_ex(vars[i], out);
  return out;
}

FormulaPtr f_all(std::string var, FormulaPtr body) {
  return quantify(Formula::Kind::forall, std::move(var), std::move(body));
}

FormulaPtr f_all(std::vector<std::string> vars, FormulaPtr body) {
  FormulaPtr out = std::move(body);
  for (size_t i = vars.size(); i-- > 0;) out = f_all(vars[i], out);
  return out;
}

bool equals(TermPtr const& a, TermPtr const& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::var:
      return a->name == b->name;
    case Term::Kind::word_const:
      return a->word == b->word;
    case Term::Kind::numeral:
      return a->value == b->value;
    case Term::Kind::cat:
    case Term::Kind::plus:
    case Term::Kind::times:
      return equals(a->left, b->left) && equals(a->right, b->right);
  }
  return false;
}

bool equals(FormulaPtr const& a, FormulaPtr const& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::equal:
      return equals(a->lhs, b->lhs) && equals(a->rhs, b->rhs);
    case Formula::Kind::not_f:
      return equals(a->a, b->a);
    case Formula::Kind::and_f:
    case Formula::Kind::or_f:
    case Formula::Kind::implies:
      return equals(a->a, b->a) && equals(a->b, b->b);
    case Formula::Kind::exists:
    case Formula::Kind::forall:
      return a->var == b->var && equals(a->a, b->a);
  }
  return false;
}

std::string print(TermPtr const& t) {
  switch (t->kind) {
    case Term::Kind::var:
      return t->name;
    case Term::Kind::word_const:
      return t->word.empty() ? "1" : "'" + t->word.str() + "'";
    case Term::Kind::numeral:
      return std::to_string(t->value);
    case Term::Kind::cat:
      return print(t->left) + "." + print(t->right);
    case Term::Kind::plus:
      return print(t->left) + " + " + print(t->right);
    case Term::Kind::times:
      return print(t->left) + " * " + print(t->right);
  }
  throw Error("unreachable term kind");
}

std::string print(FormulaPtr const& f) {
  switch (f->kind) {
    case Formula::Kind::equal:
      return print(f->lhs) + " = " + print(f->rhs);
    case Formula::Kind::not_f:
      return "!" + print(f->a);
    case Formula::Kind::and_f:
      return "(" + print(f->a) + " & " + print(f->b) + ")";
    case Formula::Kind::or_f:
      return "(" + print(f->a) + " | " + print(f->b) + ")";
    case Formula::Kind::implies:
      return "(" + print(f->a) + " -> " + print(f->b) + ")";
    case Formula::Kind::exists:
      return "E " + f->var + ". " + print(f->a);
    case Formula::Kind::forall:
      return "A " + f->var + ". " + print(f->a);
  }
  throw Error("unreachable formula kind");
}

namespace {

void term_vars(TermPtr const& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == Term::Kind::var) out.insert(t->name);
  term_vars(t->left, out);
  term_vars(t->right, out);
}

void collect_free(FormulaPtr const& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f->kind) {
    case Formula::Kind::equal: {
      std::set<std::string> vars;
      term_vars(f->lhs, vars);
      term_vars(f->rhs, vars);
      for (auto const& v : vars)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::not_f:
      collect_free(f->a, bound, out);
      return;
    case Formula::Kind::and_f:
    case Formula::Kind::or_f:
    case Formula::Kind::implies:
      collect_free(f->a, bound, out);
      collect_free(f->b, bound, out);
      return;
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      bool added = bound.insert(f->var).second;
      collect_free(f->a, bound, out);
      if (added) bound.erase(f->var);
      return;
    }
  }
}

TermPtr substitute_term(TermPtr const& t, std::string const& var,
                        TermPtr const& term) {
  switch (t->kind) {
    case Term::Kind::var:
      return t->name == var ? term : t;
    case Term::Kind::word_const:
    case Term::Kind::numeral:
      return t;
    case Term::Kind::cat:
    case Term::Kind::plus:
    case Term::Kind::times: {
      auto left = substitute_term(t->left, var, term);
      auto right = substitute_term(t->right, var, term);
      if (left == t->left && right == t->right) return t;
      return t_binary(t->kind, std::move(left), std::move(right));
    }
  }
  throw Error("unreachable term kind");
}

}  // namespace

std::set<std::string> free_vars(FormulaPtr const& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

FormulaPtr substitute(FormulaPtr const& f, std::string const& var,
                      TermPtr const& term) {
  switch (f->kind) {
    case Formula::Kind::equal:
      return f_eq(substitute_term(f->lhs, var, term),
                  substitute_term(f->rhs, var, term));
    case Formula::Kind::not_f:
      return f_not(substitute(f->a, var, term));
    case Formula::Kind::and_f:
    case Formula::Kind::or_f:
    case Formula::Kind::implies:
      return f_binary(f->kind, substitute(f->a, var, term),
                      substitute(f->b, var, term));
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      if (f->var == var) return f;  // occurrences below are bound
      std::set<std::string> term_free;
      term_vars(term, term_free);
      std::string qvar = f->var;
      FormulaPtr body = f->a;
      if (term_free.count(qvar)) {
        auto body_free = free_vars(body);
        std::string fresh;
        for (size_t k = 1;; ++k) {
          fresh = qvar + "_" + std::to_string(k);
          if (!term_free.count(fresh) && !body_free.count(fresh) &&
              fresh != var)
            break;
        }
        body = substitute(body, qvar, t_var(fresh));
        qvar = fresh;
      }
      return quantify(f->kind, qvar, substitute(body, var, term));
    }
  }
  throw Error("unreachable formula kind");
}

namespace {

void validate_term(TermPtr const& t, Sig sig, AlphabetPtr& alphabet) {
  switch (t->kind) {
    case Term::Kind::var:
      return;
    case Term::Kind::word_const:
      if (sig != Sig::monoid)
        throw Error("word constant in an arithmetic formula");
      if (t->word.alphabet()) {
        if (!alphabet)
          alphabet = t->word.alphabet();
        else if (!(*alphabet == *t->word.alphabet()))
          throw Error("word constants over different alphabets");
      }
      return;
    case Term::Kind::numeral:
      if (sig != Sig::arithmetic)
        throw Error("numeral in a monoid formula");
      return;
    case Term::Kind::cat:
      if (sig != Sig::monoid)
        throw Error("concatenation in an arithmetic formula");
      break;
    case Term::Kind::plus:
    case Term::Kind::times:
      if (sig != Sig::arithmetic)
        throw Error("arithmetic operation in a monoid formula");
      break;
  }
  validate_term(t->left, sig, alphabet);
  validate_term(t->right, sig, alphabet);
}

void validate_walk(FormulaPtr const& f, Sig sig, AlphabetPtr& alphabet,
                   std::set<std::string>& path,
                   std::set<std::string> const& free) {
  switch (f->kind) {
    case Formula::Kind::equal:
      validate_term(f->lhs, sig, alphabet);
      validate_term(f->rhs, sig, alphabet);
      return;
    case Formula::Kind::not_f:
      validate_walk(f->a, sig, alphabet, path, free);
      return;
    case Formula::Kind::and_f:
    case Formula::Kind::or_f:
    case Formula::Kind::implies:
      validate_walk(f->a, sig, alphabet, path, free);
      validate_walk(f->b, sig, alphabet, path, free);
      return;
    case Formula::Kind::exists:
    case Formula::Kind::forall:
      if (path.count(f->var))
        throw Error("variable '" + f->var + "' is bound twice on one path");
      if (free.count(f->var))
        throw Error("variable '" + f->var + "' is both free and bound");
      path.insert(f->var);
      validate_walk(f->a, sig, alphabet, path, free);
      path.erase(f->var);
      return;
  }
}

}  // namespace

void validate(FormulaPtr const& f, Sig sig) {
  AlphabetPtr alphabet;
  std::set<std::string> path;
  auto free = free_vars(f);
  validate_walk(f, sig, alphabet, path, free);
}

}  // namespace mwb
