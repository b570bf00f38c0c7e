#ifndef MWB_FORMULA_HPP
#define MWB_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mwb/word.hpp"

namespace mwb {

// The two first-order signatures of the workbench. Monoid: binary
// concatenation, identity constant, word constants. Arithmetic: +, *, and
// numerals (0 and 1 included).
enum class Sig { monoid, arithmetic };

struct Term;
using TermPtr = std::shared_ptr<Term const>;

struct Term {
  enum class Kind { var, word_const, numeral, cat, plus, times };
  Kind kind;
  std::string name;   // var
  Word word;          // word_const
  uint64_t value = 0; // numeral
  TermPtr left, right;
};

TermPtr t_var(std::string name);
TermPtr t_word(Word w);
TermPtr t_num(uint64_t value);
TermPtr t_cat(TermPtr a, TermPtr b);
TermPtr t_cat(std::vector<TermPtr> parts);  // right-assoc fold
TermPtr t_plus(TermPtr a, TermPtr b);
TermPtr t_times(TermPtr a, TermPtr b);

struct Formula;
using FormulaPtr = std::shared_ptr<Formula const>;

struct Formula {
  enum class Kind { equal, not_f, and_f, or_f, implies, exists, forall };
  Kind kind;
  TermPtr lhs, rhs;  // equal
  FormulaPtr a, b;   // a: unary child / left / body; b: right
  std::string var;   // quantified variable
};

FormulaPtr f_eq(TermPtr lhs, TermPtr rhs);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_and(std::vector<FormulaPtr> parts);  // right-assoc fold
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(std::vector<FormulaPtr> parts);
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b);
FormulaPtr f_ex(std::string var, FormulaPtr body);
FormulaPtr f_ex(std::vector<std::string> vars, FormulaPtr body);
FormulaPtr f_all(std::string var, FormulaPtr body);
FormulaPtr f_all(std::vector<std::string> vars, FormulaPtr body);

bool equals(TermPtr const& a, TermPtr const& b);
bool equals(FormulaPtr const& a, FormulaPtr const& b);

std::string print(TermPtr const& t);
std::string print(FormulaPtr const& f);

std::set<std::string> free_vars(FormulaPtr const& f);

// Capture-avoiding substitution of a term for every free occurrence of var;
// bound variables are renamed (name_1, name_2, ...) when they would capture.
FormulaPtr substitute(FormulaPtr const& f, std::string const& var,
                      TermPtr const& term);

// Checks the signature discipline (only the signature's symbols occur) and
// that no variable is both free and bound, or bound twice, along one path.
// Throws Error with a description of the first violation.
void validate(FormulaPtr const& f, Sig sig);

}  // namespace mwb

#endif
