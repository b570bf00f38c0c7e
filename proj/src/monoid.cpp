#include "mwb/monoid.hpp"

#include <algorithm>
#include <sstream>

#include "mwb/error.hpp"

namespace mwb {

namespace {

std::vector<std::string> split(std::string const& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

MonoidModel MonoidModel::free_monoid(AlphabetPtr alphabet) {
  MonoidModel M;
  M.kind_ = Kind::free;
  M.alphabet_ = std::move(alphabet);
  return M;
}

MonoidModel MonoidModel::trace_monoid(
    AlphabetPtr alphabet, std::vector<std::pair<size_t, size_t>> edges) {
  MonoidModel M;
  M.kind_ = Kind::trace;
  M.alphabet_ = std::move(alphabet);
  M.adjacency_.assign(M.alphabet_->size(), 0);
  for (auto& [i, j] : edges) {
    if (i >= M.alphabet_->size() || j >= M.alphabet_->size())
      throw Error("commutation edge references an unknown generator");
    if (i == j) throw Error("commutation edge may not be a loop");
    if (i > j) std::swap(i, j);
    M.adjacency_[i] |= uint64_t{1} << j;
    M.adjacency_[j] |= uint64_t{1} << i;
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  M.edges_ = std::move(edges);
  return M;
}

MonoidModel MonoidModel::baumslag_solitar(uint32_t k, uint32_t m) {
  if (k == 0 || m == 0) throw Error("bs exponents must be positive");
  MonoidModel M;
  M.kind_ = Kind::bs;
  M.alphabet_ = Alphabet::of({"a", "b"});
  M.k_ = k;
  M.m_ = m;
  return M;
}

bool MonoidModel::commutes(size_t i, size_t j) const {
  if (kind_ != Kind::trace || i == j) return false;
  return (adjacency_[i] >> j) & 1;
}

MonoidModel MonoidModel::parse(std::string const& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error("monoid spec needs a kind prefix, e.g. free:x1,x2");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "free") {
    return free_monoid(Alphabet::of(split(rest, ',')));
  }
  if (kind == "trace") {
    std::string gens = rest, edge_part;
    if (auto semi = rest.find(';'); semi != std::string::npos) {
      gens = rest.substr(0, semi);
      edge_part = rest.substr(semi + 1);
      if (edge_part.rfind("edges=", 0) != 0)
        throw Error("trace spec expects ';edges=' after the generators");
      edge_part = edge_part.substr(6);
    }
    auto alphabet = Alphabet::of(split(gens, ','));
    std::vector<std::pair<size_t, size_t>> edges;
    if (!edge_part.empty()) {
      for (auto const& e : split(edge_part, ',')) {
        auto dash = e.find('-');
        if (dash == std::string::npos)
          throw Error("commutation edge '" + e + "' must look like g-h");
        size_t i = alphabet->index(e.substr(0, dash));
        size_t j = alphabet->index(e.substr(dash + 1));
        if (i == Alphabet::npos || j == Alphabet::npos)
          throw Error("commutation edge '" + e + "' names an unknown generator");
        edges.emplace_back(i, j);
      }
    }
    return trace_monoid(alphabet, std::move(edges));
  }
  if (kind == "bs") {
    auto parts = split(rest, ',');
    if (parts.size() != 2) throw Error("bs spec must be bs:<k>,<m>");
    try {
      size_t used_k = 0, used_m = 0;
      int k = std::stoi(parts[0], &used_k);
      int m = std::stoi(parts[1], &used_m);
      if (used_k != parts[0].size() || used_m != parts[1].size() || k <= 0 ||
          m <= 0)
        throw Error("bs exponents must be positive integers");
      return baumslag_solitar(static_cast<uint32_t>(k),
                              static_cast<uint32_t>(m));
    } catch (std::logic_error const&) {
      throw Error("bs exponents must be positive integers");
    }
  }
  throw Error("unknown monoid kind '" + kind + "'");
}

std::string MonoidModel::spec() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::free:
    case Kind::trace: {
      out << (kind_ == Kind::free ? "free:" : "trace:");
      for (size_t i = 0; i < alphabet_->size(); ++i)
        out << (i ? "," : "") << alphabet_->name(i);
      if (kind_ == Kind::trace && !edges_.empty()) {
        out << ";edges=";
        for (size_t e = 0; e < edges_.size(); ++e)
          out << (e ? "," : "") << alphabet_->name(edges_[e].first) << '-'
              << alphabet_->name(edges_[e].second);
      }
      break;
    }
    case Kind::bs:
      out << "bs:" << k_ << ',' << m_;
      break;
  }
  return out.str();
}

namespace {

// Lexicographically least representative of a commutation class, built
// greedily: the next output letter is the least letter index that occurs at
// a position it can reach the front from, i.e. commuting with everything
// before it.
Word trace_normal_form(MonoidModel const& M, Word const& w) {
  std::vector<uint8_t> rest(w.letters());
  std::vector<uint8_t> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    size_t best = rest.size();
    for (size_t p = 0; p < rest.size(); ++p) {
      bool movable = true;
      for (size_t q = 0; q < p && movable; ++q)
        movable = M.commutes(rest[q], rest[p]);
      if (movable && (best == rest.size() || rest[p] < rest[best])) best = p;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<ptrdiff_t>(best));
  }
  return Word(w.alphabet(), std::move(out));
}

// One confluent, terminating rule: when m >= k rewrite b^m a -> a b^k, else
// rewrite a b^k -> b^m a. Either orientation never grows the word and the
// left side does not overlap itself, so leftmost rewriting to a fixed point
// yields a canonical form.
Word bs_normal_form(MonoidModel const& M, Word const& w) {
  const uint8_t a = 0, b = 1;
  std::vector<uint8_t> lhs, rhs;
  if (M.bs_m() >= M.bs_k()) {
    lhs.assign(M.bs_m(), b);
    lhs.push_back(a);
    rhs.push_back(a);
    rhs.insert(rhs.end(), M.bs_k(), b);
  } else {
    lhs.push_back(a);
    lhs.insert(lhs.end(), M.bs_k(), b);
    rhs.assign(M.bs_m(), b);
    rhs.push_back(a);
  }
  std::vector<uint8_t> cur(w.letters());
  for (;;) {
    auto it = std::search(cur.begin(), cur.end(), lhs.begin(), lhs.end());
    if (it == cur.end()) break;
    std::vector<uint8_t> next(cur.begin(), it);
    next.insert(next.end(), rhs.begin(), rhs.end());
    next.insert(next.end(), it + static_cast<ptrdiff_t>(lhs.size()), cur.end());
    cur = std::move(next);
  }
  return Word(w.alphabet(), std::move(cur));
}

}  // namespace

Word MonoidModel::normal_form(Word const& w) const {
  if (!w.alphabet()) return identity();
  switch (kind_) {
    case Kind::free:
      return w;
    case Kind::trace:
      return trace_normal_form(*this, w);
    case Kind::bs:
      return bs_normal_form(*this, w);
  }
  throw Error("unreachable monoid kind");
}

bool MonoidModel::is_normal_form(Word const& w) const {
  return normal_form(w) == w;
}

bool MonoidModel::equal(Word const& u, Word const& v) const {
  if (kind_ == Kind::free) return u == v;
  return normal_form(u) == normal_form(v);
}

bool MonoidModel::is_irreducible(Word const& w) const {
  Word nf = normal_form(w);
  if (nf.empty()) return false;
  if (kind_ == Kind::free || kind_ == Kind::trace) return nf.size() == 1;
  // bs: search for a factorization into two non-identity elements. Rewriting
  // never grows a word, so a product of normal forms u, v with
  // |u| + |v| > 2 * |nf| cannot rewrite down to nf; in fact splitting nf
  // after its first letter already witnesses any reducible element, so
  // candidates of length up to |nf| suffice.
  auto candidates = elements(nf.size());
  for (auto const& u : candidates) {
    if (u.empty()) continue;
    for (auto const& v : candidates) {
      if (v.empty()) continue;
      if (normal_form(concat(u, v)) == nf) return false;
    }
  }
  return true;
}

std::vector<Word> MonoidModel::elements(size_t bound) const {
  std::vector<Word> out;
  for (auto& w : enumerate_words(alphabet_, bound))
    if (is_normal_form(w)) out.push_back(std::move(w));
  return out;
}

bool is_in_S(Word const& w, size_t x1, size_t x2) {
  if (w.empty()) return false;
  size_t run = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] != x1 && w[i] != x2) return false;
    run = w[i] == x2 ? run + 1 : 0;
    if (run == 3) return false;
  }
  return true;
}

bool center_is_trivial(MonoidModel const& M) {
  if (M.kind() != MonoidModel::Kind::trace)
    throw Error("center test is defined for trace monoids only");
  size_t n = M.alphabet()->size();
  for (size_t i = 0; i < n; ++i) {
    bool commutes_with_all = true;
    for (size_t j = 0; j < n && commutes_with_all; ++j)
      if (j != i) commutes_with_all = M.commutes(i, j);
    if (commutes_with_all) return false;
  }
  return true;
}

}  // namespace mwb
