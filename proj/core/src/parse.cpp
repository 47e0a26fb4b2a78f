#include "bezlin/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace bezlin {

namespace {

struct Parser {
  const std::string& text;
  const std::vector<std::string>& vars;
  DomainDescriptor dom;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos]))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos), pos);
  }

  MultiPoly parse_expr() {
    MultiPoly acc = parse_term();
    while (true) {
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        return acc;
    }
  }

  MultiPoly parse_term() {
    MultiPoly acc = parse_factor();
    while (eat('*'))
      acc = acc * parse_factor();
    return acc;
  }

  MultiPoly parse_factor() {
    if (eat('-'))
      return -parse_factor();
    MultiPoly base = parse_atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
        ++pos;
      if (pos == start)
        fail("expected exponent");
      unsigned long e = std::stoul(text.substr(start, pos - start));
      MultiPoly r =
          MultiPoly::constant(dom, (unsigned)vars.size(), DomainElem::one(dom));
      for (unsigned long i = 0; i < e; ++i)
        r = r * base;
      return r;
    }
    return base;
  }

  MultiPoly parse_atom() {
    skip_ws();
    if (pos >= text.size())
      fail("unexpected end of input");
    char c = text[pos];
    unsigned n = (unsigned)vars.size();
    if (c == '(') {
      ++pos;
      MultiPoly inner = parse_expr();
      if (!eat(')'))
        fail("expected ')'");
      return inner;
    }
    if (std::isdigit((unsigned char)c)) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
        ++pos;
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
          fail("expected denominator");
        while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
          ++pos;
      }
      std::string lit = text.substr(start, pos - start);
      return MultiPoly::constant(dom, n, DomainElem::from_string(dom, lit));
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      for (unsigned i = 0; i < n; ++i)
        if (vars[i] == name)
          return MultiPoly::variable(dom, n, i);
      pos = start;
      fail("undeclared variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

void print_monomial_coeff(std::ostream& os, const DomainElem& c,
                          const Monomial& m,
                          const std::vector<std::string>& vars) {
  bool const_term = total_degree(m) == 0;
  Rational a = abs(c.value());
  bool need_coeff = const_term || a != 1;
  bool printed = false;
  if (need_coeff) {
    if (a.get_den() == 1)
      os << a.get_num().get_str();
    else
      os << a.get_str();
    printed = true;
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (printed)
      os << "*";
    os << vars[i];
    if (m[i] > 1)
      os << "^" << m[i];
    printed = true;
  }
}

} // namespace

MultiPoly parse_poly(const std::string& text,
                     const std::vector<std::string>& vars,
                     DomainDescriptor dom) {
  Parser p{text, vars, dom};
  MultiPoly r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    p.fail("trailing input");
  return r;
}

std::string print_poly(const MultiPoly& f,
                       const std::vector<std::string>& vars) {
  if (vars.size() != f.nvars())
    throw ShapeError("variable name count mismatch");
  if (f.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree first; within a degree keep the grlex tie-break order
  std::vector<std::pair<Monomial, DomainElem>> terms(f.terms().begin(),
                                                     f.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) {
                     unsigned da = total_degree(a.first);
                     unsigned db = total_degree(b.first);
                     if (da != db)
                       return da > db;
                     return grlex_less(a.first, b.first);
                   });
  for (const auto& [m, c] : terms) {
    bool neg = sgn(c.value()) < 0;
    if (first) {
      if (neg)
        os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    print_monomial_coeff(os, c, m, vars);
  }
  return os.str();
}

} // namespace bezlin
