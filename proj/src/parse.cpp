#include <cctype>
#include <sstream>

#include "crosscap/algebra.hpp"

namespace crosscap {
namespace {

// tokens: INT, IDENT (letter+ digit*), one of + - * / ^ ( ) , ; and END
struct Lexer {
  const std::string& s;
  int pos = 0;

  void skip_ws() {
    while (pos < static_cast<int>(s.size()) &&
           std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  int peek() {
    skip_ws();
    return pos < static_cast<int>(s.size()) ? s[pos] : -1;
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

struct Parser {
  Lexer lx;
  SpacePtr space;

  [[noreturn]] void fail(const std::string& msg, int at) const {
    throw ParseError(msg, at);
  }

  bool at_int() {
    return std::isdigit(static_cast<unsigned char>(lx.peek()));
  }
  bool at_ident() {
    return std::isalpha(static_cast<unsigned char>(lx.peek()));
  }

  Rat read_int() {
    lx.skip_ws();
    int start = lx.pos;
    std::string digits;
    while (lx.pos < static_cast<int>(lx.s.size()) &&
           std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
      digits += lx.s[lx.pos++];
    if (digits.empty()) fail("expected integer", start);
    Rat r(digits);
    r.canonicalize();
    return r;
  }

  int read_exponent() {
    lx.skip_ws();
    int start = lx.pos;
    Rat n = read_int();
    if (n.get_den() != 1 || n > 64 || n < 0)
      fail("exponent out of range", start);
    return static_cast<int>(n.get_num().get_si());
  }

  std::string read_ident() {
    lx.skip_ws();
    std::string name;
    while (lx.pos < static_cast<int>(lx.s.size()) &&
           std::isalpha(static_cast<unsigned char>(lx.s[lx.pos])))
      name += lx.s[lx.pos++];
    while (lx.pos < static_cast<int>(lx.s.size()) &&
           std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
      name += lx.s[lx.pos++];
    return name;
  }

  Poly primary() {
    lx.skip_ws();
    int start = lx.pos;
    if (lx.eat('(')) {
      Poly p = expr();
      if (!lx.eat(')')) fail("expected ')'", lx.pos);
      return p;
    }
    if (at_int()) {
      Rat num = read_int();
      if (lx.peek() == '/') {
        // rational literal a/b; only digits may follow the slash
        ++lx.pos;
        int dstart = lx.pos;
        if (!at_int()) fail("expected denominator after '/'", lx.pos);
        Rat den = read_int();
        if (den == 0) fail("zero denominator", dstart);
        num /= den;
      }
      return Poly::constant(space, num);
    }
    if (at_ident()) {
      std::string name = read_ident();
      int idx = space->index_of(name);
      if (idx < 0) {
        std::string valid;
        for (const auto& n : space->names)
          valid += (valid.empty() ? "" : ", ") + n;
        fail("unknown variable '" + name + "' (valid: " + valid + ")", start);
      }
      return Poly::variable(space, idx);
    }
    fail("expected number, variable or '('", start);
  }

  Poly factor() {
    Poly p = primary();
    if (lx.peek() == '^') {
      ++lx.pos;
      p = pow(p, read_exponent());
    }
    return p;
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      int c = lx.peek();
      if (c == '*') {
        ++lx.pos;
        p *= factor();
      } else if (c == '(' || (c >= 0 && (std::isalpha(c) || std::isdigit(c)))) {
        p *= factor();  // adjacency means multiplication: 3U1V2
      } else {
        return p;
      }
    }
  }

  Poly expr() {
    bool neg = false;
    if (lx.eat('-'))
      neg = true;
    else
      lx.eat('+');
    Poly p = term();
    if (neg) p = -std::move(p);
    for (;;) {
      int c = lx.peek();
      if (c == '+') {
        ++lx.pos;
        p += term();
      } else if (c == '-') {
        ++lx.pos;
        p -= term();
      } else {
        return p;
      }
    }
  }

  std::vector<Poly> list(char sep) {
    std::vector<Poly> out;
    out.push_back(expr());
    while (lx.eat(sep)) out.push_back(expr());
    lx.skip_ws();
    if (lx.pos != static_cast<int>(lx.s.size()))
      fail(std::string("unexpected character '") + static_cast<char>(lx.peek()) +
               "'",
           lx.pos);
    return out;
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const SpacePtr& space) {
  Parser p{Lexer{text}, space};
  Poly out = p.expr();
  p.lx.skip_ws();
  if (p.lx.pos != static_cast<int>(text.size()))
    throw ParseError("unexpected trailing input", p.lx.pos);
  return out;
}

GermMap parse_germ(const std::string& text, const SpacePtr& space) {
  Parser p{Lexer{text}, space};
  std::vector<Poly> comps = p.list(',');
  for (const auto& c : comps)
    if (c.constant_term() != 0)
      throw ParseError("germ component has nonzero constant term", 0);
  return make_germ(space, std::move(comps));
}

PolyVec parse_polyvec(const std::string& text, const SpacePtr& space) {
  // Accept the display format "(p1; ...; pq)" as well as a bare list, so
  // printed vectors can be fed back in verbatim.  Strip the outer pair only
  // when it encloses the whole string.
  std::string body = text;
  auto first = body.find_first_not_of(" \t");
  auto last = body.find_last_not_of(" \t");
  if (first != std::string::npos && body[first] == '(' && body[last] == ')' &&
      body.find(';', first) != std::string::npos) {
    int depth = 0;
    bool outer = true;
    for (auto i = first; i <= last; ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (depth == 0 && i < last) {
        outer = false;
        break;
      }
    }
    if (outer) body = body.substr(first + 1, last - first - 1);
  }
  Parser p{Lexer{body}, space};
  return PolyVec{p.list(';')};
}

std::vector<PolyVec> parse_field_lines(const std::string& text,
                                       const SpacePtr& space) {
  std::vector<PolyVec> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    out.push_back(parse_polyvec(line, space));
  }
  return out;
}

}  // namespace crosscap
