#ifndef MWB_PARSE_HPP
#define MWB_PARSE_HPP

#include <string>

#include "mwb/formula.hpp"

namespace mwb {

// Parses the workbench formula grammar:
//
//   f   ::= "A" var "." f | "E" var "." f | "(" f op f ")" | "!" f | t "=" t
//   op  ::= "&" | "|" | "->"
//
// Monoid terms:      t ::= atom ("." atom)*
//                    atom ::= var | "'" word "'" | "1"
// Arithmetic terms:  t ::= s ("+" s)* ; s ::= a ("*" a)* ; a ::= var | numeral
//
// Variables are identifiers not starting with a quote or digit. The alphabet
// is consulted for quoted word constants (monoid signature only). Errors are
// reported as ParseError with a 1-based column.
FormulaPtr parse_formula(std::string const& text, Sig sig,
                         AlphabetPtr const& alphabet = nullptr);

}  // namespace mwb

#endif
