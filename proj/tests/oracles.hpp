#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

// Brute-force reference implementations the tests compare library results
// against. Deliberately naive.

#include <deque>
#include <set>
#include <vector>

#include "mwb/monoid.hpp"
#include "mwb/word.hpp"

namespace oracles {

// Every word reachable from u by swapping adjacent commuting letters.
inline std::set<mwb::Word> commutation_class(mwb::MonoidModel const& M,
                                             mwb::Word const& u) {
  std::set<mwb::Word> seen{u};
  std::deque<mwb::Word> q{u};
  while (!q.empty()) {
    mwb::Word w = q.front();
    q.pop_front();
    for (size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] == w[p + 1] || !M.commutes(w[p], w[p + 1])) continue;
      std::vector<uint8_t> ls = w.letters();
      std::swap(ls[p], ls[p + 1]);
      mwb::Word nx(w.alphabet(), ls);
      if (seen.insert(nx).second) q.push_back(nx);
    }
  }
  return seen;
}

// Membership of g in the submonoid generated by gens, free monoid, by
// breadth-first product enumeration up to |g|.
inline bool generated(mwb::Word const& g, std::vector<mwb::Word> const& gens) {
  std::set<mwb::Word> reach{mwb::Word(g.alphabet())};
  std::deque<mwb::Word> q{mwb::Word(g.alphabet())};
  while (!q.empty()) {
    mwb::Word w = q.front();
    q.pop_front();
    for (auto const& gen : gens) {
      if (gen.empty() || w.size() + gen.size() > g.size()) continue;
      mwb::Word nx = mwb::concat(w, gen);
      if (reach.insert(nx).second) q.push_back(nx);
    }
  }
  return reach.count(g) > 0;
}

}  // namespace oracles

#endif
