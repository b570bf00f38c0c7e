#include "mwb/parse.hpp"

#include <cctype>
#include <vector>

#include "mwb/error.hpp"

namespace mwb {

namespace {

struct Token {
  enum class Kind {
    ident, number, word, lparen, rparen, bang, amp, pipe, arrow, dot, eq,
    plus, star, end
  };
  Kind kind;
  std::string text;
  size_t col;  // 1-based
};

std::vector<Token> lex(std::string const& text) {
  std::vector<Token> out;
  size_t i = 0;
  auto push = [&](Token::Kind kind, std::string tok, size_t col) {
    out.push_back({kind, std::move(tok), col});
  };
  while (i < text.size()) {
    char c = text[i];
    size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '\'') {
      size_t close = text.find('\'', i + 1);
      if (close == std::string::npos)
        throw ParseError("unterminated word constant", col);
      push(Token::Kind::word, text.substr(i + 1, close - i - 1), col);
      i = close + 1;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      push(Token::Kind::number, text.substr(i, j - i), col);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      push(Token::Kind::ident, text.substr(i, j - i), col);
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Token::Kind::lparen, "(", col); break;
      case ')': push(Token::Kind::rparen, ")", col); break;
      case '!': push(Token::Kind::bang, "!", col); break;
      case '&': push(Token::Kind::amp, "&", col); break;
      case '|': push(Token::Kind::pipe, "|", col); break;
      case '.': push(Token::Kind::dot, ".", col); break;
      case '=': push(Token::Kind::eq, "=", col); break;
      case '+': push(Token::Kind::plus, "+", col); break;
      case '*': push(Token::Kind::star, "*", col); break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Token::Kind::arrow, "->", col);
          ++i;
          break;
        }
        throw ParseError("expected '->'", col);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", col);
    }
    ++i;
  }
  out.push_back({Token::Kind::end, "", text.size() + 1});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;
  Sig sig;
  AlphabetPtr alphabet;

  Token const& peek(size_t ahead = 0) const {
    size_t i = pos + ahead;
    return toks[i < toks.size() ? i : toks.size() - 1];
  }
  Token const& take() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }
  void expect(Token::Kind kind, char const* what) {
    if (peek().kind != kind)
      throw ParseError(std::string("expected ") + what, peek().col);
    take();
  }

  FormulaPtr formula() {
    auto const& t = peek();
    if (t.kind == Token::Kind::ident && (t.text == "A" || t.text == "E") &&
        peek(1).kind == Token::Kind::ident &&
        peek(2).kind == Token::Kind::dot) {
      bool universal = t.text == "A";
      take();
      std::string var = take().text;
      take();  // '.'
      auto body = formula();
      return universal ? f_all(var, std::move(body))
                       : f_ex(var, std::move(body));
    }
    if (t.kind == Token::Kind::lparen) {
      take();
      auto left = formula();
      auto const& op = peek();
      Formula::Kind kind;
      switch (op.kind) {
        case Token::Kind::amp: kind = Formula::Kind::and_f; break;
        case Token::Kind::pipe: kind = Formula::Kind::or_f; break;
        case Token::Kind::arrow: kind = Formula::Kind::implies; break;
        case Token::Kind::rparen:
          take();
          return left;
        default:
          throw ParseError("expected '&', '|', '->' or ')'", op.col);
      }
      take();
      auto right = formula();
      expect(Token::Kind::rparen, "')'");
      switch (kind) {
        case Formula::Kind::and_f: return f_and(std::move(left), std::move(right));
        case Formula::Kind::or_f: return f_or(std::move(left), std::move(right));
        default: return f_imp(std::move(left), std::move(right));
      }
    }
    if (t.kind == Token::Kind::bang) {
      take();
      return f_not(formula());
    }
    auto lhs = term();
    expect(Token::Kind::eq, "'='");
    auto rhs = term();
    return f_eq(std::move(lhs), std::move(rhs));
  }

  TermPtr term() { return sig == Sig::monoid ? cat_term() : sum_term(); }

  TermPtr cat_term() {
    std::vector<TermPtr> parts{atom()};
    while (peek().kind == Token::Kind::dot) {
      take();
      parts.push_back(atom());
    }
    return t_cat(std::move(parts));
  }

  TermPtr sum_term() {
    std::vector<TermPtr> summands{prod_term()};
    while (peek().kind == Token::Kind::plus) {
      take();
      summands.push_back(prod_term());
    }
    TermPtr out = summands.back();
    for (size_t i = summands.size() - 1; i-- > 0;)
      out = t_plus(summands[i], out);
    return out;
  }

  TermPtr prod_term() {
    std::vector<TermPtr> factors{atom()};
    while (peek().kind == Token::Kind::star) {
      take();
      factors.push_back(atom());
    }
    TermPtr out = factors.back();
    for (size_t i = factors.size() - 1; i-- > 0;)
      out = t_times(factors[i], out);
    return out;
  }

  TermPtr atom() {
    auto const& t = peek();
    switch (t.kind) {
      case Token::Kind::ident:
        take();
        return t_var(t.text);
      case Token::Kind::number: {
        take();
        if (sig == Sig::arithmetic) {
          try {
            return t_num(std::stoull(t.text));
          } catch (std::out_of_range const&) {
            throw ParseError("numeral too large", t.col);
          }
        }
        if (t.text == "1") {
          if (!alphabet)
            throw ParseError("identity constant needs an alphabet", t.col);
          return t_word(Word(alphabet));
        }
        throw ParseError("only '1' denotes a monoid constant here", t.col);
      }
      case Token::Kind::word: {
        if (sig != Sig::monoid)
          throw ParseError("word constant in an arithmetic formula", t.col);
        if (!alphabet)
          throw ParseError("word constant needs an alphabet", t.col);
        take();
        try {
          return t_word(Word::parse(t.text, alphabet));
        } catch (ParseError const&) {
          throw;
        } catch (Error const& e) {
          throw ParseError(e.what(), t.col);
        }
      }
      default:
        throw ParseError("expected a term", t.col);
    }
  }
};

}  // namespace

FormulaPtr parse_formula(std::string const& text, Sig sig,
                         AlphabetPtr const& alphabet) {
  Parser p{lex(text), 0, sig, alphabet};
  auto f = p.formula();
  if (p.peek().kind != Token::Kind::end)
    throw ParseError("unexpected trailing input", p.peek().col);
  validate(f, sig);
  return f;
}

}  // namespace mwb
