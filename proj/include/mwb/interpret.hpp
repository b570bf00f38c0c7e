#ifndef MWB_INTERPRET_HPP
#define MWB_INTERPRET_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mwb/coding.hpp"
#include "mwb/eval.hpp"
#include "mwb/formula.hpp"
#include "mwb/gadgets.hpp"
#include "mwb/monoid.hpp"

namespace mwb {

// An element of an interpreted structure, for exercising encoders: a monoid
// word, a natural number, or a tuple of naturals (the sequence sort).
using Elem = std::variant<Word, uint64_t, NatTuple>;

std::string elem_str(Elem const& e);

// Constant translations. Both receive the target variable names of the slot
// being defined and a running tag they must bump for any bound names they
// introduce, so repeated instantiations never collide.
using NumeralFn = std::function<FormulaPtr(
    uint64_t k, std::vector<std::string> const& vars, uint64_t& tag)>;
using ConstantFn = std::function<FormulaPtr(
    Word const& w, std::vector<std::string> const& vars, uint64_t& tag)>;

// One first-order structure interpreted inside another. Formulas use
// canonical free variables: delta over x_1..x_dim, eps over x_i and y_i,
// binary operation graphs ("plus", "times", "concat") over x_i, y_i, z_i.
// Encoders realize the element map; they are present even when the formula
// side is not materialized (then translate() refuses politely).
struct Interpretation {
  std::string name;
  Sig source = Sig::arithmetic;
  Sig target = Sig::monoid;
  std::string source_name;  // structure identity, e.g. "nat", "free", "snn"
  std::string target_name;
  AlphabetPtr source_alphabet;  // set when the sort is a monoid
  AlphabetPtr target_alphabet;
  size_t dim = 1;
  std::vector<Word> params;  // distinguished target constants the formulas use

  FormulaPtr delta;  // domain
  FormulaPtr eps;    // congruence standing in for equality
  std::map<std::string, FormulaPtr> ops;
  NumeralFn numeral;
  ConstantFn constant;

  std::function<std::vector<Value>(Elem const&)> encode;
  std::function<Elem(std::vector<Value> const&)> decode;

  bool formula_backed() const { return delta != nullptr && eps != nullptr; }
};

// Rewrites a source-signature formula into the target signature: quantifiers
// relativize to delta, equality routes through eps, each operation and
// constant becomes its defining formula over fresh slot variables k_<i>
// (components k_<i>_<j>). Free variables v expand to v_1..v_dim and are
// guarded by delta. Throws Error when a needed translation piece is missing.
FormulaPtr translate(FormulaPtr const& psi, Interpretation const& I);

// Chains interpretations: inner's target structure must be outer's source
// structure; the result interprets inner's source in outer's target.
// Dimension multiplies, encoders compose, and inner's formulas are pushed
// through outer's translation (when both sides are formula backed).
Interpretation compose(Interpretation const& outer, Interpretation const& inner);

// The identity interpretation of a structure in itself, dimension 1.
Interpretation identity_interpretation(Sig sig, AlphabetPtr alphabet = nullptr);

// Arithmetic inside the free monoid over P's alphabet: n encodes as x1^n,
// the domain is the centralizer of x1, addition is concatenation and
// multiplication is the gadget-word formula. Uses x1 as a parameter.
Interpretation nat_in_free(GadgetParams const& P = standard_params());

// Parameter-free variant, dimension 2: n encodes as (b^n, b) for a basis
// letter b, equality of exponents is the letter-transport equivalence.
Interpretation nat_in_free_noparam(AlphabetPtr const& alphabet);

// Arithmetic inside a trace monoid with trivial center, using the first
// non-commuting generator pair as the letter roles.
Interpretation nat_in_trace(MonoidModel const& M);

// The free monoid over the given alphabet inside arithmetic, by word codes.
// Encoder-only: the coding relations are not materialized as formulas.
Interpretation monoid_in_nat(AlphabetPtr const& alphabet);

// Finite sequences of naturals inside arithmetic, by the sequence code.
// Encoder-only.
Interpretation snn_in_nat();

// Finite sequences of naturals inside the free monoid, directly by tuple
// words; the empty tuple encodes as the empty word.
Interpretation snn_in_free(GadgetParams const& P = standard_params());

// Round-trip check of a pair of opposite interpretations between the free
// monoid over mono_in_nat's source alphabet and arithmetic. Monoid side: for
// each listed monomial M, the tuple word of M's letter tuple must pair with
// exactly M under the definable isomorphism graph (witness mode, candidate
// pool = the instance list). Arithmetic side: each listed tuple must map,
// through encode and back, to its block expansion (j copies of 1, then
// t_j + 1 copies of 2). Empty instance lists pass trivially.
struct BiReport {
  Report monoid_side;
  Report arithmetic_side;
  bool clean() const { return monoid_side.clean() && arithmetic_side.clean(); }
  std::string str() const;
};

BiReport check_bi_interpretation(Interpretation const& mono_in_nat,
                                 Interpretation const& nat_in_mono,
                                 std::vector<Word> const& monomials,
                                 std::vector<NatTuple> const& tuples);

// Twenty closed arithmetic sentences whose truth value is stable at every
// quantifier bound >= 8, with the intended values.
struct CorpusSentence {
  std::string text;
  bool truth;
};
std::vector<CorpusSentence> arithmetic_corpus();

// Max over the corpus of the quantifier-block growth classify incurs when a
// sentence is pushed through I.
size_t measured_inflation(Interpretation const& I);

}  // namespace mwb

#endif
