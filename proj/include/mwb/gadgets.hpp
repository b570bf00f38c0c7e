#ifndef MWB_GADGETS_HPP
#define MWB_GADGETS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mwb/formula.hpp"
#include "mwb/monoid.hpp"
#include "mwb/word.hpp"

namespace mwb {

// Letter roles shared by the two-generator constructions: x1 carries payload
// exponents, x2 separates. Defaults are the first two letters.
struct GadgetParams {
  AlphabetPtr alphabet;
  size_t x1 = 0;
  size_t x2 = 1;

  Word l1() const { return letter(alphabet, x1); }
  Word l2() const { return letter(alphabet, x2); }
  Word empty() const { return Word(alphabet); }
};

GadgetParams standard_params(size_t alphabet_size = 2);

// --- Word builders -----------------------------------------------------------

// Multiplication gadget word for the pair (x1^n, x1^m): blocks
// x2^2 x1^{n+1-i} x2 x1^{(i+1)m+1} for i = 0..n-1 and a closing x2^2;
// degenerate n = 0 form x2^2 x1 x2 x1^{m+1} x2^2.
Word mult_gadget_word(GadgetParams const& P, uint64_t n, uint64_t m);

// Anchor word a = x1 x2 x1 x2^2 of the transfer ladder.
Word trans_anchor(GadgetParams const& P);

// Transfer ladder f_s = a x2 x1 a^2 x2^2 x1^2 a^3 ... x2^s x1^s a^{s+1}, s >= 1.
Word f_word(GadgetParams const& P, uint64_t s);

// Tuple word x1 x2^{t1+1} x1^2 x2^{t2+1} ... x1^m x2^{tm+1}; empty tuples are
// rejected with Error.
Word tuple_word(GadgetParams const& P, std::vector<uint64_t> const& t);

// Inverse of tuple_word; Error when w is not a tuple word.
std::vector<uint64_t> tuple_word_components(GadgetParams const& P,
                                            Word const& w);

// Ladder word a_m = x2 x1 x2 x1^2 ... x2 x1^m, m >= 1.
Word a_word(GadgetParams const& P, uint64_t m);

// Monomial encoding word: for w_M the tuple word of (i_1,...,i_m) with
// 1 <= i_j <= |alphabet|, builds, with a = a_m,
//   (a x2 a) x_{i_1} (a^2 x2^2 a^2) x_{i_1} x_{i_2} ... (a^{m+1} x2^{m+1} a^{m+1}).
Word iso_word(GadgetParams const& P, Word const& w_M);

// Trace analogue: inside the ladder word every x2 is replaced by the product
// of all generators other than x1 (in generator order). The signature
// separators x2^j stay on the letter x2. Requires a trace monoid with
// trivial center.
Word iso_word_trace(MonoidModel const& M, Word const& w_M, size_t x1,
                    size_t x2);

// --- Formula builders. Free variables are listed per builder. ---------------

// c.v = v.c. Free: var.
FormulaPtr centralizer_formula(Word const& c, std::string const& var = "y");

// Non-empty, only the two role letters, no x2^3 factor. Free: var.
FormulaPtr in_s_formula(GadgetParams const& P, std::string const& var = "y");

// Irreducible element: not 1, and any two-way split has a trivial part.
// Free: var.
FormulaPtr basis_formula(std::string const& var = "x");

// psi(x,y,w): w is the multiplication gadget word of the pair (x,y) of
// x1-powers. Free: x, y, w.
FormulaPtr mult_gadget_formula(GadgetParams const& P);

// phi(x,y,z): z = x*y on exponents of x1-powers. Free: x, y, z.
FormulaPtr mult_formula(GadgetParams const& P);

// Same formulas with the two letter roles given as terms, for use where the
// roles are themselves quantified variables.
FormulaPtr mult_formula_over(TermPtr const& x1, TermPtr const& x2);
FormulaPtr trans_formula_over(TermPtr const& x1, TermPtr const& x2);

struct TransFormulas {
  FormulaPtr phi_f;  // Free: x. Defines the ladder words f_s.
  FormulaPtr psi;    // Free: x. Defines the empty word and {x2^s x1^s}.
  FormulaPtr trans;  // Free: x, y. Pairs (x2^s, x1^s), s >= 0.
};
TransFormulas trans_formulas(GadgetParams const& P);

// Parameter-free exponent transfer: holds for (u^s, v^s) with u, v letters.
// Free: x, y.
FormulaPtr trans_noparam_formula(AlphabetPtr const& alphabet);

struct TupleFormulas {
  FormulaPtr w;         // Free: x. Tuple-word shape.
  FormulaPtr position;  // Free: x, y, z. y = x1^i picks slot i of x, z = value.
  FormulaPtr in;        // Free: x, y. x is a component value of tuple word y.
  FormulaPtr length;    // Free: x, y. y = x1^m for the tuple length m of x.
  FormulaPtr concat;    // Free: x, y, z. z is the tuple concatenation of x, y.
};
TupleFormulas tuple_formulas(GadgetParams const& P);

// B(x,y): x = a_m and y = x1^m for some m >= 1. Free: x, y.
FormulaPtr b_pair_formula(GadgetParams const& P);

struct IsoFormulas {
  FormulaPtr theta0;  // Free: x, z. z is the monomial encoding word of x.
  FormulaPtr theta1;  // Free: x, y. y is the monomial whose tuple word is x.
};
IsoFormulas iso_formulas(GadgetParams const& P);

// Letter-pattern orbit of the given tuple of words: solutions are the images
// under injections of the used letters into the basis. Free: "x" when the
// tuple has one word, else "x_1".."x_r".
FormulaPtr orbit_formula(AlphabetPtr const& alphabet,
                         std::vector<Word> const& tuple);

// Renames every bound variable v of f to v_<tag>; used when embedding one
// catalogue formula inside another so that no name is bound twice along a
// path. Witness pools fall back to the undecorated base name.
FormulaPtr rename_bound(FormulaPtr const& f, uint64_t tag);

// Simultaneous substitution of terms for distinct free variables, routed
// through temporaries so the replacements never capture one another.
FormulaPtr subst_frees(FormulaPtr f,
                       std::vector<std::pair<std::string, TermPtr>> const& subs);

// --- Catalogue ---------------------------------------------------------------

struct GadgetBuild {
  std::string name;
  Word word;           // representative instance word
  bool has_word = false;
  FormulaPtr formula;  // null for word-only gadgets
  std::vector<std::string> frees;
  size_t witness_bound = 0;
};

std::vector<std::string> gadget_names();

// args are gadget-specific: integers ("2"), tuples ("1,0,2"), dotted words,
// or letter names. M supplies the model for iso-trace and may be null
// otherwise. Throws Error on unknown names or malformed arguments.
GadgetBuild build_gadget(std::string const& name,
                         std::vector<std::string> const& args,
                         GadgetParams const& P,
                         MonoidModel const* M = nullptr);

}  // namespace mwb

#endif
