#ifndef MWB_MONOID_HPP
#define MWB_MONOID_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwb/word.hpp"

namespace mwb {

// A finitely presented monoid the workbench can compute in:
//
//   free       M_X, no relations; normal form is the word itself.
//   trace      A_Gamma = <V | uv = vu for edges (u,v)>; normal form is the
//              lexicographically least word in the commutation class.
//   bs         BS(k,m) = <a,b | a b^k = b^m a>; one rewrite rule, oriented so
//              that rewriting never grows a word: b^m a -> a b^k when m >= k,
//              a b^k -> b^m a otherwise. The single rule has no self-overlap,
//              so the system is confluent and normal forms are canonical.
class MonoidModel {
 public:
  enum class Kind { free, trace, bs };

  static MonoidModel free_monoid(AlphabetPtr alphabet);
  // edges are unordered pairs of generator indices; (i,i) is rejected.
  static MonoidModel trace_monoid(AlphabetPtr alphabet,
                                  std::vector<std::pair<size_t, size_t>> edges);
  static MonoidModel baumslag_solitar(uint32_t k, uint32_t m);

  // Parse "free:<g,...>", "trace:<g,...>;edges=<gi-gj,...>", "bs:<k>,<m>".
  static MonoidModel parse(std::string const& spec);
  std::string spec() const;

  Kind kind() const { return kind_; }
  AlphabetPtr const& alphabet() const { return alphabet_; }
  uint32_t bs_k() const { return k_; }
  uint32_t bs_m() const { return m_; }
  bool commutes(size_t i, size_t j) const;  // trace adjacency (i != j)
  std::vector<std::pair<size_t, size_t>> const& edges() const { return edges_; }

  Word identity() const { return Word(alphabet_); }

  // The canonical representative of w's congruence class.
  Word normal_form(Word const& w) const;
  bool is_normal_form(Word const& w) const;
  bool equal(Word const& u, Word const& v) const;

  // Whether w is a non-identity element with no factorization into two
  // non-identity elements. Free/trace: exactly the generators. BS: decided by
  // a bounded search over normal forms of length up to |w|.
  bool is_irreducible(Word const& w) const;

  // All normal forms of length <= bound, shortest first, lex within a length.
  std::vector<Word> elements(size_t bound) const;

 private:
  MonoidModel() = default;

  Kind kind_ = Kind::free;
  AlphabetPtr alphabet_;
  std::vector<std::pair<size_t, size_t>> edges_;
  std::vector<uint64_t> adjacency_;  // bitmask per generator
  uint32_t k_ = 0, m_ = 0;
};

// Membership in S: w is non-empty, uses only the two chosen letters, and has
// no x2^3 factor. Every such word is a factor of a word x1^{i_1} x2^{j_1} ...
// x1^{i_k} x2^{j_k} with i's >= 1 and j's in {1,2}, and conversely.
bool is_in_S(Word const& w, size_t x1 = 0, size_t x2 = 1);

// A trace monoid has trivial center iff no generator commutes with all
// others. Errors on non-trace models.
bool center_is_trivial(MonoidModel const& M);

}  // namespace mwb

#endif
