#include "laytrop/parse.hpp"

#include <cctype>
#include <vector>

#include "laytrop/errors.hpp"

namespace laytrop {

namespace {

enum class Tok { Number, Ident, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    std::size_t start = i, l = line, cl = col;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) advance(1);
      if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        advance(1);
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) advance(1);
      }
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), l, cl});
    } else if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) advance(1);
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), l, cl});
    } else if (std::string_view("()|*^+-").find(static_cast<char>(c)) != std::string_view::npos) {
      advance(1);
      out.push_back({Tok::Symbol, std::string(1, static_cast<char>(c)), l, cl});
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", l, cl);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : toks_(tokenize(s)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_symbol(char c, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Symbol && t.text[0] == c;
  }
  bool accept(char c) {
    if (!at_symbol(c)) return false;
    next();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_end() const { return peek().kind == Tok::End; }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(what + ", got " + got, t.line, t.column);
  }

  Rational signed_rational() {
    bool neg = accept('-');
    const Token& t = peek();
    if (t.kind != Tok::Number) fail("expected a number");
    next();
    Rational q;
    try {
      q = parse_rational(t.text);
    } catch (const ParseError&) {
      throw ParseError("malformed number '" + t.text + "'", t.line, t.column);
    }
    return neg ? Rational(-q) : q;
  }

  std::int64_t signed_integer() {
    const Token& start = peek();
    Rational q = signed_rational();
    if (!is_integer(q)) throw ParseError("expected an integer exponent", start.line, start.column);
    return to_int64(q);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

SortingLayer parse_layer(Cursor& cur, LFlavor flavor) {
  const Token& t = cur.peek();
  try {
    if (t.kind == Tok::Ident && t.text == "inf") {
      cur.next();
      return SortingLayer::infinity(flavor);
    }
    if (t.kind == Tok::Number) {
      cur.next();
      Rational q = parse_rational(t.text);
      if (!is_integer(q) || q < 1) throw ParseError("layers are positive integers or inf", t.line, t.column);
      return SortingLayer::natural(static_cast<std::uint64_t>(to_int64(q)), flavor);
    }
  } catch (const DomainError& e) {
    throw ParseError(e.what(), t.line, t.column);
  }
  cur.fail("expected a layer");
}

LayeredScalar make_scalar(const Token& at, const SortingLayer& layer, const Rational& v, GFlavor g) {
  try {
    return LayeredScalar::of(layer, v, g);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), at.line, at.column);
  }
}

// Scalar literal at the cursor: NUMBER, -NUMBER, (v), (l|v).
LayeredScalar scalar_literal(Cursor& cur, Flavors f) {
  const Token& at = cur.peek();
  if (cur.accept('(')) {
    bool has_layer = cur.peek(1).kind == Tok::Symbol && cur.peek(1).text == "|";
    SortingLayer layer = SortingLayer::one(f.layers);
    if (has_layer) {
      layer = parse_layer(cur, f.layers);
      cur.expect('|');
    }
    Rational v = cur.signed_rational();
    cur.expect(')');
    return make_scalar(at, layer, v, f.values);
  }
  return make_scalar(at, SortingLayer::one(f.layers), cur.signed_rational(), f.values);
}

bool starts_scalar(const Cursor& cur) {
  const Token& t = cur.peek();
  return t.kind == Tok::Number || cur.at_symbol('-') || cur.at_symbol('(');
}

// --- Puiseux expressions ----------------------------------------------------

class PuiseuxParser {
 public:
  PuiseuxParser(std::string_view text, std::string_view var) : cur_(text), var_(var) {}

  PuiseuxPolynomial parse() {
    PuiseuxPolynomial p = expr();
    if (!cur_.at_end()) cur_.fail("unexpected trailing input");
    return p;
  }

 private:
  PuiseuxPolynomial expr() {
    PuiseuxPolynomial acc = term();
    while (true) {
      if (cur_.accept('+')) acc = acc + term();
      else if (cur_.accept('-')) acc = acc - term();
      else return acc;
    }
  }

  PuiseuxPolynomial term() {
    PuiseuxPolynomial acc = unary();
    while (cur_.accept('*')) acc = acc * unary();
    return acc;
  }

  PuiseuxPolynomial unary() {
    if (cur_.accept('-')) return -unary();
    return power();
  }

  PuiseuxPolynomial power() {
    const Token& t = cur_.peek();
    if (t.kind == Tok::Number) {
      return PuiseuxPolynomial({PuiseuxSeries::constant(cur_.signed_rational())});
    }
    if (t.kind == Tok::Ident && t.text == "t") {
      cur_.next();
      Rational e(1);
      if (cur_.accept('^')) {
        if (cur_.accept('(')) {
          e = cur_.signed_rational();
          cur_.expect(')');
        } else {
          e = cur_.signed_rational();
        }
      }
      return PuiseuxPolynomial({PuiseuxSeries::monomial(Rational(1), e)});
    }
    PuiseuxPolynomial base;
    if (t.kind == Tok::Ident && t.text == var_) {
      cur_.next();
      base = PuiseuxPolynomial::monomial(PuiseuxSeries::constant(Rational(1)), 1);
    } else if (cur_.accept('(')) {
      base = expr();
      cur_.expect(')');
    } else {
      cur_.fail("expected a number, 't', '" + var_ + "' or '('");
    }
    if (!cur_.accept('^')) return base;
    const Token& et = cur_.peek();
    bool paren = cur_.accept('(');
    std::int64_t n = cur_.signed_integer();
    if (paren) cur_.expect(')');
    if (n < 0) throw ParseError("negative powers of polynomials are not supported", et.line, et.column);
    PuiseuxPolynomial r({PuiseuxSeries::constant(Rational(1))});
    for (std::int64_t k = 0; k < n; ++k) r = r * base;
    return r;
  }

  Cursor cur_;
  std::string var_;
};

}  // namespace

LayeredScalar parse_scalar(std::string_view text, Flavors flavors) {
  Cursor cur(text);
  LayeredScalar s = scalar_literal(cur, flavors);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return s;
}

LayeredPolynomial parse_polynomial(std::string_view text, const PolynomialSyntax& syntax) {
  Cursor cur(text);
  struct RawTerm {
    std::vector<std::pair<std::size_t, std::int64_t>> powers;  // (variable index, exponent)
    std::optional<LayeredScalar> coefficient;
  };
  std::vector<RawTerm> raw;
  std::size_t max_var = 0;

  do {
    RawTerm term;
    do {
      const Token& t = cur.peek();
      if (t.kind == Tok::Ident && t.text.size() > 1 && t.text[0] == 'x' &&
          t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
        cur.next();
        std::size_t idx = std::stoul(t.text.substr(1));
        if (idx == 0) throw ParseError("variables are numbered from x1", t.line, t.column);
        std::int64_t e = 1;
        if (cur.accept('^')) {
          const Token& et = cur.peek();
          bool paren = cur.accept('(');
          e = cur.signed_integer();
          if (paren) cur.expect(')');
          if (e < 0 && !syntax.laurent)
            throw ParseError("negative exponent requires Laurent mode", et.line, et.column);
        }
        term.powers.emplace_back(idx - 1, e);
        max_var = std::max(max_var, idx);
      } else if (starts_scalar(cur)) {
        if (term.coefficient) cur.fail("a term may carry only one coefficient");
        term.coefficient = scalar_literal(cur, syntax.flavors);
      } else {
        cur.fail("expected a coefficient or a variable");
      }
    } while (cur.accept('*'));
    raw.push_back(std::move(term));
  } while (cur.accept('+'));
  if (!cur.at_end()) cur.fail("expected '+' or end of input");

  std::size_t nvars = syntax.nvars.value_or(std::max<std::size_t>(max_var, 1));
  if (max_var > nvars)
    throw ParseError("variable x" + std::to_string(max_var) + " exceeds the declared " + std::to_string(nvars) +
                         " variables",
                     1, 1);
  std::vector<Monomial> terms;
  for (auto& r : raw) {
    Exponent ex(nvars, 0);
    for (auto [k, p] : r.powers) ex[k] += p;
    LayeredScalar c =
        r.coefficient.value_or(laytrop::e(SortingLayer::one(syntax.flavors.layers), syntax.flavors.values));
    terms.push_back({std::move(ex), std::move(c)});
  }
  return LayeredPolynomial(nvars, std::move(terms), syntax.laurent);
}

PuiseuxPolynomial parse_puiseux_polynomial(std::string_view text, std::string_view var) {
  return PuiseuxParser(text, var).parse();
}

PuiseuxSeries parse_puiseux(std::string_view text) {
  // An empty variable name never matches an identifier, so only series parse.
  PuiseuxPolynomial p = PuiseuxParser(text, "").parse();
  if (p.is_zero()) return {};
  return p.coefficient(0);
}

}  // namespace laytrop
