#include "mwb/coding.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mwb/error.hpp"

namespace mwb {

namespace {

// Triangular numbers m(m+1)/2 without intermediate overflow; false when the
// value exceeds 128 bits (then it certainly exceeds any code p).
bool triangular_le(Code m, Code p) {
  Code a = m, b = m + 1;
  if (a % 2 == 0)
    a /= 2;
  else
    b /= 2;
  Code t;
  if (__builtin_mul_overflow(a, b, &t)) return false;
  return t <= p;
}

// Tuples whose codes stay in range are short; a huge decoded length means a
// code that only a pathological all-zeros tuple could produce.
constexpr Code kMaxDecodedLength = 1 << 20;

}  // namespace

Code pair(Code a, Code b) {
  Code s, code;
  bool over = __builtin_add_overflow(a, b, &s);
  over = over || !triangular_le(s, ~Code{0});
  if (!over) {
    Code t = s % 2 == 0 ? s / 2 * (s + 1) : (s + 1) / 2 * s;
    over = __builtin_add_overflow(t, b, &code);
  }
  if (over)
    throw CodingError("pair(" + code_str(a) + "," + code_str(b) +
                      ") does not fit in 128 bits");
  return code;
}

std::pair<Code, Code> unpair(Code p) {
  Code lo = 0, hi = Code{1} << 65;  // triangular_le fails well before hi
  while (lo < hi) {                 // greatest w with w(w+1)/2 <= p
    Code mid = lo + (hi - lo + 1) / 2;
    if (triangular_le(mid, p))
      lo = mid;
    else
      hi = mid - 1;
  }
  Code t = lo % 2 == 0 ? lo / 2 * (lo + 1) : (lo + 1) / 2 * lo;
  Code b = p - t;
  Code a = lo - b;
  return {a, b};
}

Code encode_tuple(NatTuple const& t) {
  Code fold = 0;
  for (auto it = t.rbegin(); it != t.rend(); ++it) fold = pair(*it, fold);
  return pair(t.size(), fold);
}

NatTuple decode_tuple(Code code) {
  auto [len, rest] = unpair(code);
  if (len > kMaxDecodedLength)
    throw CodingError("tuple code " + code_str(code) +
                      " decodes to an implausible length");
  NatTuple t;
  t.reserve(static_cast<size_t>(len));
  for (Code i = 0; i < len; ++i) {
    auto [entry, next] = unpair(rest);
    if (entry > Code{UINT64_MAX})
      throw CodingError("tuple entry in code " + code_str(code) +
                        " exceeds 64 bits");
    t.push_back(static_cast<Nat>(entry));
    rest = next;
  }
  if (rest != 0)
    throw CodingError("malformed tuple code " + code_str(code));
  return t;
}

Nat lss_position(NatTuple const& s, Nat i) {
  if (i < 1 || i > s.size())
    throw CodingError("tuple position " + std::to_string(i) +
                      " out of range 1.." + std::to_string(s.size()));
  return s[static_cast<size_t>(i) - 1];
}

Nat lss_length(NatTuple const& s) { return s.size(); }

NatTuple lss_concat(NatTuple const& s, NatTuple const& r) {
  NatTuple out = s;
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

NatTuple monomial_to_tuple(Word const& w) {
  NatTuple t;
  t.reserve(w.size());
  for (size_t i = 0; i < w.size(); ++i) t.push_back(Nat{w[i]} + 1);
  return t;
}

Word tuple_to_monomial(NatTuple const& t, AlphabetPtr const& alphabet) {
  std::vector<uint8_t> letters;
  letters.reserve(t.size());
  for (Nat entry : t) {
    if (entry < 1 || entry > alphabet->size())
      throw CodingError("tuple entry " + std::to_string(entry) +
                        " out of range 1.." + std::to_string(alphabet->size()));
    letters.push_back(static_cast<uint8_t>(entry - 1));
  }
  return Word(alphabet, std::move(letters));
}

Code word_code(Word const& w) { return encode_tuple(monomial_to_tuple(w)); }

Word word_decode(Code code, AlphabetPtr const& alphabet) {
  return tuple_to_monomial(decode_tuple(code), alphabet);
}

std::string code_str(Code c) {
  if (c == 0) return "0";
  std::string out;
  while (c > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(c % 10)));
    c /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Code parse_code(std::string const& text) {
  if (text.empty()) throw CodingError("empty code");
  Code c = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw CodingError("code '" + text + "' is not a decimal natural");
    Code next;
    if (__builtin_mul_overflow(c, Code{10}, &next) ||
        __builtin_add_overflow(next, Code(ch - '0'), &next))
      throw CodingError("code '" + text + "' does not fit in 128 bits");
    c = next;
  }
  return c;
}

std::string tuple_str(NatTuple const& t) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
  out << ')';
  return out.str();
}

Membership submonoid_member(Word const& g, std::vector<Word> const& gens) {
  Membership result;
  std::vector<size_t> usable;
  for (size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].empty())
      result.warnings.push_back("identity generator at position " +
                                std::to_string(j) + " dropped");
    else
      usable.push_back(j);
  }

  size_t n = g.size();
  constexpr size_t unreached = static_cast<size_t>(-1);
  std::vector<std::pair<size_t, size_t>> parent(n + 1, {unreached, unreached});
  std::vector<bool> reached(n + 1, false);
  reached[0] = true;
  for (size_t pos = 0; pos < n; ++pos) {
    if (!reached[pos]) continue;
    for (size_t j : usable) {
      size_t len = gens[j].size();
      if (pos + len > n || reached[pos + len]) continue;
      bool match = true;
      for (size_t i = 0; i < len && match; ++i)
        match = g[pos + i] == gens[j][i];
      if (match) {
        reached[pos + len] = true;
        parent[pos + len] = {pos, j};
      }
    }
  }

  result.member = reached[n];
  if (result.member) {
    for (size_t pos = n; pos != 0; pos = parent[pos].first)
      result.factors.push_back(parent[pos].second);
    std::reverse(result.factors.begin(), result.factors.end());
  }
  return result;
}

std::vector<Code> membership_code_set(AlphabetPtr const& alphabet,
                                      std::vector<Word> const& gens,
                                      size_t bound) {
  std::set<Word> members;
  std::vector<Word> frontier{Word(alphabet)};
  members.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (auto const& w : frontier) {
      for (auto const& gen : gens) {
        if (gen.empty() || w.size() + gen.size() > bound) continue;
        Word u = concat(w, gen);
        if (members.insert(u).second) next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Code> codes;
  codes.reserve(members.size());
  for (auto const& w : members) codes.push_back(word_code(w));
  std::sort(codes.begin(), codes.end());
  return codes;
}

}  // namespace mwb
