#include "mwb/eval.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "mwb/error.hpp"
#include "mwb/prenex.hpp"

namespace mwb {

std::string value_str(Value const& v) {
  if (auto const* w = std::get_if<Word>(&v)) return w->str();
  return std::to_string(std::get<uint64_t>(v));
}

bool value_less(Value const& a, Value const& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (auto const* w = std::get_if<Word>(&a))
    return *w < std::get<Word>(b);
  return std::get<uint64_t>(a) < std::get<uint64_t>(b);
}

namespace {

bool value_eq(Value const& a, Value const& b) {
  return !value_less(a, b) && !value_less(b, a);
}

struct Ctx {
  Structure const& S;
  EvalOptions const& opt;
  EvalStats& stats;

  void draw(uint64_t n = 1) {
    stats.candidates += n;
    if (stats.candidates > opt.guard)
      throw EvalLimitError(
          "evaluation exceeded the candidate guard (" +
          std::to_string(opt.guard) +
          "); tighten the bound or supply witnesses");
  }
};

uint64_t checked_add(uint64_t a, uint64_t b) {
  if (a > UINT64_MAX - b) throw Error("arithmetic overflow in +");
  return a + b;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > UINT64_MAX) throw Error("arithmetic overflow in *");
  return static_cast<uint64_t>(p);
}

Value eval_term(Ctx& c, TermPtr const& t, Assignment const& a) {
  switch (t->kind) {
    case Term::Kind::var: {
      auto it = a.find(t->name);
      if (it == a.end()) throw Error("unbound variable '" + t->name + "'");
      return it->second;
    }
    case Term::Kind::word_const: {
      if (c.S.sig != Sig::monoid)
        throw Error("word constant in arithmetic evaluation");
      Word w = t->word;
      if (!w.alphabet())
        w = w.with_alphabet(c.S.monoid->alphabet());
      else if (!(*w.alphabet() == *c.S.monoid->alphabet()))
        throw Error("word constant over a different alphabet");
      return w;
    }
    case Term::Kind::numeral:
      if (c.S.sig != Sig::arithmetic)
        throw Error("numeral in monoid evaluation");
      return t->value;
    case Term::Kind::cat: {
      Value l = eval_term(c, t->left, a);
      Value r = eval_term(c, t->right, a);
      auto const* lw = std::get_if<Word>(&l);
      auto const* rw = std::get_if<Word>(&r);
      if (!lw || !rw) throw Error("concatenation of non-word values");
      return concat(*lw, *rw);
    }
    case Term::Kind::plus:
    case Term::Kind::times: {
      Value l = eval_term(c, t->left, a);
      Value r = eval_term(c, t->right, a);
      auto const* ln = std::get_if<uint64_t>(&l);
      auto const* rn = std::get_if<uint64_t>(&r);
      if (!ln || !rn) throw Error("arithmetic on non-natural values");
      return t->kind == Term::Kind::plus ? checked_add(*ln, *rn)
                                         : checked_mul(*ln, *rn);
    }
  }
  throw Error("unreachable term kind");
}

// --- Candidate extraction ---------------------------------------------------
//
// For a quantifier over variable v in a free monoid, candidate words are
// extracted from positive word-equation atoms: whenever one side of an atom
// evaluates to a concrete word, the other side is a factorization pattern and
// v's candidates are the substrings it can take in some split. The extracted
// set is a superset of the true solutions of the atom, hence of any formula
// containing it positively, so filtering to the bound and re-checking the
// body keeps bounded semantics exact. Atoms of the commutation shape
// v.c = c.v with concrete non-empty c contribute the powers of c's primitive
// root instead of splits.

struct Segment {
  bool concrete;
  Word word;         // when concrete
  std::string name;  // when variable
};

void flatten_term(Ctx& c, TermPtr const& t, Assignment const& a,
                  std::set<std::string> const& shadowed,
                  std::vector<Segment>& out) {
  if (t->kind == Term::Kind::cat) {
    flatten_term(c, t->left, a, shadowed, out);
    flatten_term(c, t->right, a, shadowed, out);
    return;
  }
  if (t->kind == Term::Kind::var && (shadowed.count(t->name) || !a.count(t->name))) {
    out.push_back({false, Word(), t->name});
    return;
  }
  Value v = eval_term(c, t, a);
  auto const* w = std::get_if<Word>(&v);
  if (!w) throw Error("monoid pattern over non-word values");
  if (!w->empty() && !out.empty() && out.back().concrete)
    out.back().word = concat(out.back().word, *w);
  else if (!w->empty())
    out.push_back({true, *w, ""});
  else if (out.empty())
    out.push_back({true, *w, ""});  // keep one segment for the empty side
}

void compact(std::vector<Segment>& segs, AlphabetPtr const& alphabet) {
  // Drop the placeholder empty segments introduced for empty sides when other
  // segments exist; ensure at least one (possibly empty) segment remains.
  std::vector<Segment> out;
  for (auto& s : segs) {
    if (s.concrete && s.word.empty()) continue;
    if (s.concrete && !out.empty() && out.back().concrete) {
      out.back().word = concat(out.back().word, s.word);
      continue;
    }
    out.push_back(std::move(s));
  }
  if (out.empty()) out.push_back({true, Word(alphabet), ""});
  segs = std::move(out);
}

bool all_concrete(std::vector<Segment> const& segs) {
  for (auto const& s : segs)
    if (!s.concrete) return false;
  return true;
}

bool mentions(std::vector<Segment> const& segs, std::string const& v) {
  for (auto const& s : segs)
    if (!s.concrete && s.name == v) return true;
  return false;
}

Word concat_all(std::vector<Segment> const& segs, AlphabetPtr const& alphabet) {
  Word out(alphabet);
  for (auto const& s : segs) out = concat(out, s.word);
  return out;
}

void match_pattern(Ctx& c, Word const& target_word,
                   std::vector<Segment> const& segs, size_t si, size_t pos,
                   std::map<std::string, Word>& bound,
                   std::vector<size_t> const& min_rest,
                   std::string const& target, std::set<Word>& out) {
  c.draw();
  if (si == segs.size()) {
    if (pos == target_word.size()) out.insert(bound.at(target));
    return;
  }
  size_t remaining = target_word.size() - pos;
  if (remaining < min_rest[si]) return;
  auto const& seg = segs[si];
  if (seg.concrete) {
    size_t len = seg.word.size();
    if (len > remaining) return;
    for (size_t i = 0; i < len; ++i)
      if (target_word[pos + i] != seg.word[i]) return;
    match_pattern(c, target_word, segs, si + 1, pos + len, bound, min_rest,
                  target, out);
    return;
  }
  auto it = bound.find(seg.name);
  if (it != bound.end()) {
    Word const& w = it->second;
    if (w.size() > remaining) return;
    for (size_t i = 0; i < w.size(); ++i)
      if (target_word[pos + i] != w[i]) return;
    match_pattern(c, target_word, segs, si + 1, pos + w.size(), bound,
                  min_rest, target, out);
    return;
  }
  size_t max_len = remaining - min_rest[si + 1];
  size_t lo = 0, hi = max_len;
  if (si + 1 == segs.size()) lo = hi = remaining;  // last segment takes the rest
  for (size_t len = lo; len <= hi; ++len) {
    auto [slot, inserted] = bound.emplace(seg.name, target_word.subword(pos, len));
    match_pattern(c, target_word, segs, si + 1, pos + len, bound, min_rest,
                  target, out);
    bound.erase(slot);
    (void)inserted;
  }
}

// Candidate sets remember whether they were truncated at the evaluation
// bound. Equation matches against a concrete word are complete: every word
// the atom admits is present, no matter its length. Commutation powers stop
// at the bound, so a conjunction prefers a complete set; picking a truncated
// one there would lose over-bound witnesses that witness mode may use.
struct Cands {
  std::set<Word> words;
  bool truncated = false;
};

std::optional<Cands> match_side(Ctx& c, Word const& concrete_word,
                                std::vector<Segment> const& pattern,
                                std::string const& target) {
  std::vector<size_t> min_rest(pattern.size() + 1, 0);
  for (size_t i = pattern.size(); i-- > 0;)
    min_rest[i] =
        min_rest[i + 1] + (pattern[i].concrete ? pattern[i].word.size() : 0);
  std::map<std::string, Word> bound;
  Cands out;
  match_pattern(c, concrete_word, pattern, 0, 0, bound, min_rest, target,
                out.words);
  return out;
}

std::optional<Cands> commutation_powers(Ctx& c,
                                        std::vector<Segment> const& L,
                                        std::vector<Segment> const& R,
                                        std::string const& target) {
  // v.c = c.v (or c.v = v.c) with one concrete non-empty c on each side.
  auto shape = [&](std::vector<Segment> const& side, bool var_first,
                   Word& conc) {
    if (side.size() != 2) return false;
    auto const& v = side[var_first ? 0 : 1];
    auto const& w = side[var_first ? 1 : 0];
    if (v.concrete || v.name != target || !w.concrete || w.word.empty())
      return false;
    conc = w.word;
    return true;
  };
  Word cl, cr;
  bool ok = (shape(L, true, cl) && shape(R, false, cr)) ||
            (shape(L, false, cl) && shape(R, true, cr));
  if (!ok || !(cl == cr)) return std::nullopt;
  Cands out;
  out.truncated = true;
  Word root = primitive_root(cl);
  for (Word p(cl.alphabet());; p = concat(p, root)) {
    if (p.size() > c.opt.bound) break;
    c.draw();
    out.words.insert(p);
  }
  return out;
}

std::optional<Cands> atom_candidates(Ctx& c, FormulaPtr const& atom,
                                     std::string const& v,
                                     Assignment const& a,
                                     std::set<std::string> const& shadowed) {
  auto alphabet = c.S.monoid->alphabet();
  std::vector<Segment> L, R;
  flatten_term(c, atom->lhs, a, shadowed, L);
  flatten_term(c, atom->rhs, a, shadowed, R);
  compact(L, alphabet);
  compact(R, alphabet);
  bool inL = mentions(L, v), inR = mentions(R, v);
  if (!inL && !inR) return std::nullopt;
  bool lconc = all_concrete(L), rconc = all_concrete(R);
  if (lconc && inR) return match_side(c, concat_all(L, alphabet), R, v);
  if (rconc && inL) return match_side(c, concat_all(R, alphabet), L, v);
  return commutation_powers(c, L, R, v);
}

std::optional<Cands> formula_candidates(
    Ctx& c, FormulaPtr const& f, std::string const& v, Assignment const& a,
    std::set<std::string>& shadowed) {
  switch (f->kind) {
    case Formula::Kind::equal:
      return atom_candidates(c, f, v, a, shadowed);
    case Formula::Kind::not_f:
      return std::nullopt;  // NNF: a negated atom never constrains v
    case Formula::Kind::and_f: {
      auto A = formula_candidates(c, f->a, v, a, shadowed);
      auto B = formula_candidates(c, f->b, v, a, shadowed);
      if (!A) return B;
      if (!B) return A;
      if (A->truncated != B->truncated) return A->truncated ? B : A;
      return A->words.size() <= B->words.size() ? A : B;
    }
    case Formula::Kind::or_f: {
      auto A = formula_candidates(c, f->a, v, a, shadowed);
      if (!A) return std::nullopt;
      auto B = formula_candidates(c, f->b, v, a, shadowed);
      if (!B) return std::nullopt;
      A->words.insert(B->words.begin(), B->words.end());
      A->truncated = A->truncated || B->truncated;
      return A;
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      if (f->var == v) return std::nullopt;
      bool added = shadowed.insert(f->var).second;
      auto out = formula_candidates(c, f->a, v, a, shadowed);
      if (added) shadowed.erase(f->var);
      return out;
    }
    case Formula::Kind::implies:
      throw Error("implication survived negation normal form");
  }
  throw Error("unreachable formula kind");
}

// --- Quantifier domains -----------------------------------------------------

std::string base_name(std::string name) {
  for (;;) {
    auto us = name.rfind('_');
    if (us == std::string::npos || us + 1 >= name.size()) return name;
    for (size_t i = us + 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return name;
    name.resize(us);
  }
}

std::vector<Value> const* pool_for(EvalOptions const& opt,
                                   std::string const& var) {
  if (opt.mode != EvalMode::witness) return nullptr;
  auto it = opt.witnesses.find(var);
  if (it == opt.witnesses.end()) it = opt.witnesses.find(base_name(var));
  return it == opt.witnesses.end() ? nullptr : &it->second;
}

uint64_t domain_size(Structure const& S, size_t bound) {
  if (S.sig == Sig::arithmetic) return static_cast<uint64_t>(bound) + 1;
  unsigned __int128 total = 0, level = 1;
  size_t k = S.monoid->alphabet()->size();
  for (size_t l = 0;; ++l) {
    total += level;
    if (total > UINT64_MAX) return UINT64_MAX;
    if (l == bound) break;
    level *= k;
  }
  return static_cast<uint64_t>(total);
}

std::vector<Value> quant_candidates(Ctx& c, std::string const& var,
                                    FormulaPtr const& body,
                                    Assignment const& a, bool universal) {
  if (!universal) {
    if (auto const* pool = pool_for(c.opt, var)) {
      std::vector<Value> out;
      for (auto const& v : *pool) {
        c.draw();
        bool seen = false;
        for (auto const& u : out) seen = seen || value_eq(u, v);
        if (!seen) out.push_back(v);
      }
      return out;
    }
  }
  if (c.S.sig == Sig::arithmetic) {
    c.draw(domain_size(c.S, c.opt.bound));
    std::vector<Value> out;
    for (uint64_t n = 0; n <= c.opt.bound; ++n) out.emplace_back(n);
    return out;
  }
  if (c.S.monoid->kind() == MonoidModel::Kind::free) {
    FormulaPtr probe = universal ? nnf(f_not(body)) : nnf(body);
    std::set<std::string> shadowed;
    auto cands = formula_candidates(c, probe, var, a, shadowed);
    if (cands) {
      // In witness mode an existential whose value is forced by an equation
      // (a concatenation of already-fixed words) may legitimately exceed the
      // bound, like any other exactly computed term. Universals still range
      // only over the bounded domain.
      bool admit_long = !universal && c.opt.mode == EvalMode::witness;
      std::vector<Value> out;
      for (auto const& w : cands->words)
        if (admit_long || w.size() <= c.opt.bound) out.emplace_back(w);
      return out;
    }
  }
  uint64_t size = domain_size(c.S, c.opt.bound);
  if (c.stats.candidates + size > c.opt.guard)
    throw EvalLimitError(
        "quantifier over '" + var + "' would enumerate " +
        std::to_string(size) + " candidates past the guard (" +
        std::to_string(c.opt.guard) + "); tighten the bound or supply witnesses");
  c.draw(size);
  std::vector<Value> out;
  for (auto& w : c.S.monoid->elements(c.opt.bound)) out.emplace_back(std::move(w));
  return out;
}

bool eval_rec(Ctx& c, FormulaPtr const& f, Assignment& a) {
  ++c.stats.nodes;
  switch (f->kind) {
    case Formula::Kind::equal: {
      Value l = eval_term(c, f->lhs, a);
      Value r = eval_term(c, f->rhs, a);
      if (l.index() != r.index()) throw Error("equality across sorts");
      if (auto const* lw = std::get_if<Word>(&l))
        return c.S.monoid->equal(*lw, std::get<Word>(r));
      return std::get<uint64_t>(l) == std::get<uint64_t>(r);
    }
    case Formula::Kind::not_f:
      return !eval_rec(c, f->a, a);
    case Formula::Kind::and_f:
      return eval_rec(c, f->a, a) && eval_rec(c, f->b, a);
    case Formula::Kind::or_f:
      return eval_rec(c, f->a, a) || eval_rec(c, f->b, a);
    case Formula::Kind::implies:
      return !eval_rec(c, f->a, a) || eval_rec(c, f->b, a);
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      bool universal = f->kind == Formula::Kind::forall;
      auto it = a.find(f->var);
      std::optional<Value> saved;
      if (it != a.end()) {
        saved = it->second;
        a.erase(it);
      }
      auto cands = quant_candidates(c, f->var, f->a, a, universal);
      bool result = universal;
      for (auto const& val : cands) {
        a[f->var] = val;
        bool sub = eval_rec(c, f->a, a);
        if (sub != universal) {
          result = sub;
          break;
        }
      }
      a.erase(f->var);
      if (saved) a[f->var] = std::move(*saved);
      return result;
    }
  }
  throw Error("unreachable formula kind");
}

}  // namespace

bool eval(Structure const& S, FormulaPtr const& f, Assignment const& a,
          EvalOptions const& opt, EvalStats* stats) {
  if (S.sig == Sig::monoid && !S.monoid)
    throw Error("monoid evaluation needs a model");
  EvalStats local;
  Ctx c{S, opt, stats ? *stats : local};
  Assignment mutable_a = a;
  return eval_rec(c, f, mutable_a);
}

std::vector<std::vector<Value>> solutions(Structure const& S,
                                          FormulaPtr const& f,
                                          std::vector<std::string> const& vars,
                                          EvalOptions const& opt,
                                          Assignment const& fixed,
                                          EvalStats* stats) {
  if (S.sig == Sig::monoid && !S.monoid)
    throw Error("monoid evaluation needs a model");
  EvalStats local;
  Ctx c{S, opt, stats ? *stats : local};
  Assignment a = fixed;
  std::vector<std::vector<Value>> out;

  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == vars.size()) {
      if (eval_rec(c, f, a)) {
        std::vector<Value> tuple;
        tuple.reserve(vars.size());
        for (auto const& v : vars) tuple.push_back(a.at(v));
        out.push_back(std::move(tuple));
      }
      return;
    }
    auto cands = quant_candidates(c, vars[i], f, a, false);
    for (auto const& val : cands) {
      a[vars[i]] = val;
      self(self, i + 1);
    }
    a.erase(vars[i]);
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(),
            [](std::vector<Value> const& x, std::vector<Value> const& y) {
              return std::lexicographical_compare(x.begin(), x.end(), y.begin(),
                                                  y.end(), value_less);
            });
  return out;
}

std::string tuple_label(std::vector<Value> const& tuple) {
  if (tuple.size() == 1) return value_str(tuple[0]);
  std::string out = "(";
  for (size_t i = 0; i < tuple.size(); ++i)
    out += (i ? "," : "") + value_str(tuple[i]);
  return out + ")";
}

std::string Report::str() const {
  std::string out;
  for (auto const& fp : false_positives) out += "FP " + fp + "\n";
  for (auto const& fn : false_negatives) out += "FN " + fn + "\n";
  out += "OK " + std::to_string(ok) + "\n";
  return out;
}

Report check_definition(Structure const& S, FormulaPtr const& f,
                        std::vector<std::string> const& vars,
                        std::vector<std::vector<Value>> const& expected,
                        EvalOptions const& opt) {
  auto sols = solutions(S, f, vars, opt);
  auto less = [](std::vector<Value> const& x, std::vector<Value> const& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        value_less);
  };
  auto want = expected;
  std::sort(want.begin(), want.end(), less);
  want.erase(std::unique(want.begin(), want.end(),
                         [&](auto const& x, auto const& y) {
                           return !less(x, y) && !less(y, x);
                         }),
             want.end());

  Report report;
  size_t i = 0, j = 0;
  while (i < sols.size() || j < want.size()) {
    if (j == want.size() || (i < sols.size() && less(sols[i], want[j]))) {
      report.false_positives.push_back(tuple_label(sols[i++]));
    } else if (i == sols.size() || less(want[j], sols[i])) {
      report.false_negatives.push_back(tuple_label(want[j++]));
    } else {
      ++report.ok;
      ++i;
      ++j;
    }
  }
  return report;
}

}  // namespace mwb
