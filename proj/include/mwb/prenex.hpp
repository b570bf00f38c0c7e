#ifndef MWB_PRENEX_HPP
#define MWB_PRENEX_HPP

#include <string>

#include "mwb/formula.hpp"

namespace mwb {

// Negation normal form: implications are rewritten as !a | b and negations
// pushed onto atoms; quantifiers are dualized as needed.
FormulaPtr nnf(FormulaPtr const& f);

// Prenex normal form: NNF first, then quantifiers hoisted left-to-right,
// outermost-first, renaming a hoisted variable (name_1, name_2, ...) when its
// name is already taken by a free variable or an earlier hoisted quantifier.
FormulaPtr prenex(FormulaPtr const& f);

struct HierarchyLevel {
  enum class Side { sigma, pi, qf };
  Side side = Side::qf;
  size_t n = 0;  // quantifier blocks; 0 exactly when quantifier-free

  bool operator==(HierarchyLevel const&) const = default;
  std::string str() const;  // "Σ2", "Π1", "QF"
};

// Level of prenex(f): number of alternating quantifier blocks, Σ when the
// prefix starts existentially, Π when universally.
HierarchyLevel classify(FormulaPtr const& f);

}  // namespace mwb

#endif
