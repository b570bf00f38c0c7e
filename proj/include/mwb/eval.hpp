#ifndef MWB_EVAL_HPP
#define MWB_EVAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mwb/formula.hpp"
#include "mwb/monoid.hpp"

namespace mwb {

// An element of the evaluation structure: a monoid element (as a word) or a
// natural number.
using Value = std::variant<Word, uint64_t>;
std::string value_str(Value const& v);
bool value_less(Value const& a, Value const& b);

using Assignment = std::map<std::string, Value>;

enum class EvalMode { exhaustive, witness };

// Bounded-evaluation contract: quantifiers range over normal forms of length
// <= bound (naturals 0..bound), while terms are computed exactly, so products
// may exceed the bound. In witness mode a quantified or solution variable
// whose name (or base name, trailing _<digits> stripped) appears in
// `witnesses` ranges over the supplied candidates instead, with no length
// cap; an existential over a free monoid whose value is forced by an
// equation is likewise taken as computed even when it exceeds the bound.
struct EvalOptions {
  size_t bound = 0;
  EvalMode mode = EvalMode::exhaustive;
  std::map<std::string, std::vector<Value>> witnesses;
  uint64_t guard = 5'000'000;  // candidate-draw budget for one eval call
};

struct EvalStats {
  uint64_t nodes = 0;       // formula nodes visited
  uint64_t candidates = 0;  // quantifier candidates drawn (guarded)
};

// What a formula is evaluated over: a monoid model or bounded arithmetic.
struct Structure {
  Sig sig = Sig::arithmetic;
  MonoidModel const* monoid = nullptr;

  static Structure nat() { return {}; }
  static Structure over(MonoidModel const& M) {
    return {Sig::monoid, &M};
  }
};

// Throws Error for unbound variables or sort mismatches, EvalLimitError when
// a quantifier would enumerate past the guard.
bool eval(Structure const& S, FormulaPtr const& f, Assignment const& a,
          EvalOptions const& opt, EvalStats* stats = nullptr);

// All tuples for `vars` (each within the bounded domain, or its witness list)
// satisfying f; remaining free variables must be covered by `fixed`. Sorted
// by value_less, componentwise.
std::vector<std::vector<Value>> solutions(Structure const& S,
                                          FormulaPtr const& f,
                                          std::vector<std::string> const& vars,
                                          EvalOptions const& opt,
                                          Assignment const& fixed = {},
                                          EvalStats* stats = nullptr);

struct Report {
  std::vector<std::string> false_positives;
  std::vector<std::string> false_negatives;
  size_t ok = 0;

  bool clean() const {
    return false_positives.empty() && false_negatives.empty();
  }
  std::string str() const;  // "FP <tuple>" / "FN <tuple>" lines, then "OK <n>"
};

std::string tuple_label(std::vector<Value> const& tuple);

Report check_definition(Structure const& S, FormulaPtr const& f,
                        std::vector<std::string> const& vars,
                        std::vector<std::vector<Value>> const& expected,
                        EvalOptions const& opt);

}  // namespace mwb

#endif
