#include "expr_parse.hpp"

#include <cctype>

namespace weilcalc {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }
  Int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer", pos);
    return Int(s.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) throw ParseError("expected identifier", pos);
    return s.substr(start, pos - start);
  }
};

class Parser {
 public:
  Parser(const std::string& text, ModelPtr model) : lex_{text}, model_(std::move(model)) {}

  FuncExpr parse() {
    FuncExpr f = sum();
    if (!lex_.eof()) throw ParseError("unexpected trailing input", lex_.pos);
    return f;
  }

 private:
  FuncExpr sum() {
    FuncExpr acc = lex_.accept('-') ? -product() : product();
    for (;;) {
      if (lex_.accept('+'))
        acc = acc + product();
      else if (lex_.accept('-'))
        acc = acc - product();
      else
        return acc;
    }
  }

  FuncExpr product() {
    FuncExpr acc = power();
    while (lex_.accept('*')) acc = acc * power();
    return acc;
  }

  FuncExpr power() {
    FuncExpr base = atom();
    if (lex_.accept('^')) {
      Int e = lex_.integer();
      if (e < 0) throw ParseError("negative exponent", lex_.pos);
      FuncExpr acc = FuncExpr::constant(model_, 1);
      for (Int i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  FuncExpr atom() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.expect('(');
      FuncExpr f = sum();
      lex_.expect(')');
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int n = lex_.integer();
      if (lex_.accept('/')) {
        Int d = lex_.integer();
        if (d == 0) throw ParseError("zero denominator", lex_.pos);
        return FuncExpr::constant(model_, Rat(n, d));
      }
      return FuncExpr::constant(model_, Rat(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = lex_.pos;
      std::string name = lex_.ident();
      if (name == "sin" || name == "cos") {
        if (model_->kind != ModelKind::Torus)
          throw ParseError("sin/cos are torus-model functions", at);
        lex_.expect('(');
        std::vector<long> freq = linear_combination();
        lex_.expect(')');
        return name == "cos" ? FuncExpr::cosine(model_, freq) : FuncExpr::sine(model_, freq);
      }
      int ci = coord_index(name);
      if (ci < 0) throw ParseError("unknown identifier '" + name + "'", at);
      if (model_->kind == ModelKind::Torus)
        throw ParseError("bare angle coordinates are not ring elements; use sin/cos", at);
      return FuncExpr::coordinate(model_, ci);
    }
    throw ParseError("unexpected character", lex_.pos);
  }

  // Integer-coefficient linear combination of coordinates, e.g. `x - 2*y`.
  std::vector<long> linear_combination() {
    std::vector<long> freq(model_->dim, 0);
    bool first = true;
    for (;;) {
      long sign = 1;
      if (lex_.accept('-'))
        sign = -1;
      else if (lex_.accept('+'))
        sign = 1;
      else if (!first)
        return freq;
      first = false;

      long coef = 1;
      char c = lex_.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Int n = lex_.integer();
        coef = static_cast<long>(n);
        if (!lex_.accept('*')) throw ParseError("expected '*' after frequency coefficient", lex_.pos);
      }
      std::size_t at = lex_.pos;
      std::string name = lex_.ident();
      int ci = coord_index(name);
      if (ci < 0) throw ParseError("unknown coordinate '" + name + "'", at);
      freq[ci] += sign * coef;
      if (lex_.peek() != '+' && lex_.peek() != '-') return freq;
    }
  }

  int coord_index(const std::string& name) const {
    for (int i = 0; i < model_->dim; ++i)
      if (model_->coords[i] == name) return i;
    return -1;
  }

  Lexer lex_;
  ModelPtr model_;
};

}  // namespace

FuncExpr parse_expr(const std::string& text, const ModelPtr& model) {
  return Parser(text, model).parse();
}

Rat parse_rational(const std::string& text) {
  Lexer lex{text};
  bool neg = lex.accept('-');
  Int n = lex.integer();
  Int d = 1;
  if (lex.accept('/')) d = lex.integer();
  if (!lex.eof()) throw ParseError("unexpected trailing input in rational", lex.pos);
  if (d == 0) throw ParseError("zero denominator", 0);
  Rat r(n, d);
  return neg ? -r : r;
}

}  // namespace weilcalc
