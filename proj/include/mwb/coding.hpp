#ifndef MWB_CODING_HPP
#define MWB_CODING_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mwb/word.hpp"

namespace mwb {

using Nat = uint64_t;
using NatTuple = std::vector<Nat>;

// Codes outgrow 64 bits fast: a length-4 tuple with entries around 10 already
// needs ~83 bits under iterated pairing, so codes get their own 128-bit type.
// Tuple entries stay 64-bit naturals.
using Code = unsigned __int128;

// Cantor pairing (a+b)(a+b+1)/2 + b and its inverse. Injective; pair throws
// CodingError if the code would not fit in 128 bits.
Code pair(Code a, Code b);
std::pair<Code, Code> unpair(Code p);

// Length-prefixed iterated pairing: code = pair(|t|, pair(t1, pair(t2, ...
// pair(tm, 0)))), so the empty tuple gets pair(0,0) = 0. decode_tuple throws
// CodingError when the residual after |t| unpairings is nonzero (no tuple
// encodes to such a value), or when an entry or the length overflows the
// tuple sorts.
Code encode_tuple(NatTuple const& t);
NatTuple decode_tuple(Code code);

// List-superstructure operations on tuples; positions are 1-based.
Nat lss_position(NatTuple const& s, Nat i);
Nat lss_length(NatTuple const& s);
NatTuple lss_concat(NatTuple const& s, NatTuple const& r);

// A word x_{i1}...x_{im} corresponds to the tuple (i1,...,im) of 1-based
// generator indices under the alphabet order.
NatTuple monomial_to_tuple(Word const& w);
Word tuple_to_monomial(NatTuple const& t, AlphabetPtr const& alphabet);

// encode_tuple after monomial_to_tuple; injective on words over one alphabet.
Code word_code(Word const& w);
Word word_decode(Code code, AlphabetPtr const& alphabet);

// Decimal rendering and parsing for codes (iostreams cannot print __int128).
std::string code_str(Code c);
Code parse_code(std::string const& text);

// "(1,3,2)" / "()" rendering used by the CLI.
std::string tuple_str(NatTuple const& t);

// Decision with factorization witness for membership of g in the submonoid
// generated by gens, in a free monoid. Dynamic program over prefix positions
// of g; the witness is the leftmost-first factorization, as indices into
// gens. Identity generators are dropped with a warning.
struct Membership {
  bool member = false;
  std::vector<size_t> factors;
  std::vector<std::string> warnings;
};
Membership submonoid_member(Word const& g, std::vector<Word> const& gens);

// Codes of every member of <gens> of length <= bound, sorted ascending.
std::vector<Code> membership_code_set(AlphabetPtr const& alphabet,
                                      std::vector<Word> const& gens,
                                      size_t bound);

}  // namespace mwb

#endif
