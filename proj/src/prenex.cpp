#include "mwb/prenex.hpp"

#include <map>
#include <utility>
#include <vector>

#include "mwb/error.hpp"

namespace mwb {

namespace {

FormulaPtr nnf_walk(FormulaPtr const& f, bool negate) {
  switch (f->kind) {
    case Formula::Kind::equal:
      return negate ? f_not(f) : f;
    case Formula::Kind::not_f:
      return nnf_walk(f->a, !negate);
    case Formula::Kind::and_f:
      return negate ? f_or(nnf_walk(f->a, true), nnf_walk(f->b, true))
                    : f_and(nnf_walk(f->a, false), nnf_walk(f->b, false));
    case Formula::Kind::or_f:
      return negate ? f_and(nnf_walk(f->a, true), nnf_walk(f->b, true))
                    : f_or(nnf_walk(f->a, false), nnf_walk(f->b, false));
    case Formula::Kind::implies:
      return negate ? f_and(nnf_walk(f->a, false), nnf_walk(f->b, true))
                    : f_or(nnf_walk(f->a, true), nnf_walk(f->b, false));
    case Formula::Kind::exists:
      return negate ? f_all(f->var, nnf_walk(f->a, true))
                    : f_ex(f->var, nnf_walk(f->a, false));
    case Formula::Kind::forall:
      return negate ? f_ex(f->var, nnf_walk(f->a, true))
                    : f_all(f->var, nnf_walk(f->a, false));
  }
  throw Error("unreachable formula kind");
}

TermPtr rename_term(TermPtr const& t,
                    std::map<std::string, std::string> const& renames) {
  switch (t->kind) {
    case Term::Kind::var: {
      auto it = renames.find(t->name);
      return it == renames.end() || it->second == t->name ? t
                                                          : t_var(it->second);
    }
    case Term::Kind::word_const:
    case Term::Kind::numeral:
      return t;
    default: {
      auto left = rename_term(t->left, renames);
      auto right = rename_term(t->right, renames);
      if (left == t->left && right == t->right) return t;
      switch (t->kind) {
        case Term::Kind::cat: return t_cat(left, right);
        case Term::Kind::plus: return t_plus(left, right);
        default: return t_times(left, right);
      }
    }
  }
}

struct Hoister {
  std::vector<std::pair<Formula::Kind, std::string>> prefix;
  std::set<std::string> used;

  std::string fresh(std::string const& name) {
    if (!used.count(name)) return name;
    for (size_t k = 1;; ++k) {
      std::string candidate = name + "_" + std::to_string(k);
      if (!used.count(candidate)) return candidate;
    }
  }

  FormulaPtr walk(FormulaPtr const& f,
                  std::map<std::string, std::string> renames) {
    switch (f->kind) {
      case Formula::Kind::equal:
        return f_eq(rename_term(f->lhs, renames), rename_term(f->rhs, renames));
      case Formula::Kind::not_f:
        return f_not(walk(f->a, renames));
      case Formula::Kind::and_f:
        return f_and(walk(f->a, renames), walk(f->b, renames));
      case Formula::Kind::or_f:
        return f_or(walk(f->a, renames), walk(f->b, renames));
      case Formula::Kind::exists:
      case Formula::Kind::forall: {
        std::string name = fresh(f->var);
        used.insert(name);
        prefix.emplace_back(f->kind, name);
        renames[f->var] = name;
        return walk(f->a, std::move(renames));
      }
      case Formula::Kind::implies:
        throw Error("implication survived negation normal form");
    }
    throw Error("unreachable formula kind");
  }
};

}  // namespace

FormulaPtr nnf(FormulaPtr const& f) { return nnf_walk(f, false); }

FormulaPtr prenex(FormulaPtr const& f) {
  Hoister h;
  h.used = free_vars(f);
  FormulaPtr matrix = h.walk(nnf(f), {});
  for (size_t i = h.prefix.size(); i-- > 0;) {
    auto const& [kind, var] = h.prefix[i];
    matrix = kind == Formula::Kind::exists ? f_ex(var, std::move(matrix))
                                           : f_all(var, std::move(matrix));
  }
  return matrix;
}

std::string HierarchyLevel::str() const {
  switch (side) {
    case Side::sigma: return "Σ" + std::to_string(n);
    case Side::pi: return "Π" + std::to_string(n);
    case Side::qf: return "QF";
  }
  throw Error("unreachable hierarchy side");
}

HierarchyLevel classify(FormulaPtr const& f) {
  FormulaPtr p = prenex(f);
  HierarchyLevel level;
  Formula::Kind block{};
  for (FormulaPtr cur = p;
       cur->kind == Formula::Kind::exists || cur->kind == Formula::Kind::forall;
       cur = cur->a) {
    if (level.n == 0) {
      level.side = cur->kind == Formula::Kind::exists
                       ? HierarchyLevel::Side::sigma
                       : HierarchyLevel::Side::pi;
      level.n = 1;
      block = cur->kind;
    } else if (cur->kind != block) {
      ++level.n;
      block = cur->kind;
    }
  }
  return level;
}

}  // namespace mwb
