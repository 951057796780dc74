#include "wfree/parse.hpp"

#include <cctype>

namespace wfree {

namespace {

struct Atom {
  bool abstract = false;
  GenSym sym;
  WGen gen;
  int sign = 1;  // from Omega antisymmetry; 0 for Omega_{a,a}
};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::variant<VPoly, WPoly> run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      term(sign);
    }
    if (abstract_) {
      WPoly p;
      for (auto& [atoms, c] : terms_) {
        Word w;
        Rational coeff = c;
        for (auto& a : atoms) {
          coeff *= a.sign;
          w.push_back(a.gen);
        }
        p.add_term(w, coeff);
      }
      return p;
    }
    VPoly p;
    for (auto& [atoms, c] : terms_) {
      Mono m;
      for (auto& a : atoms) m.push_back(a.sym);
      p += VPoly::mono(m, c);
    }
    return p;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  long number() {
    skip();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Rational coefficient() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      throw ParseError("bad coefficient", start);
    }
  }

  void term(int sign) {
    Rational c = sign;
    skip();
    bool had_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c *= coefficient();
      had_coeff = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      } else if (peek() == '\0' || peek() == '+' || peek() == '-') {
        terms_.push_back({{}, c});
        return;
      }
    }
    std::vector<Atom> atoms;
    if (peek() == ':') {
      ++pos_;
      skip();
      while (peek() != ':') {
        if (peek() == '\0') throw ParseError("unterminated ':'", pos_);
        atoms.push_back(atom());
        skip();
      }
      ++pos_;
    } else if (peek() != '\0') {
      atoms.push_back(atom());
    } else if (!had_coeff) {
      throw ParseError("expected term", pos_);
    }
    terms_.push_back({atoms, c});
  }

  Atom atom() {
    skip();
    std::size_t start = pos_;
    Atom a;
    if (s_.substr(pos_, 2) == "Om") {
      pos_ += 2;
      long x = number();
      expect(',');
      long y = number();
      long k = bracket();
      a.abstract = true;
      if (x == y) a.sign = 0;
      if (x > y) {
        std::swap(x, y);
        a.sign = -1;
      }
      a.gen = WGen::Om(static_cast<int>(x), static_cast<int>(y), static_cast<int>(k));
    } else if (peek() == 'W') {
      ++pos_;
      long m = number();
      if (m % 2 == 0) throw ParseError("W index must be odd", start);
      long k = bracket();
      a.abstract = true;
      a.gen = WGen::W(static_cast<int>(m), static_cast<int>(k));
    } else if (peek() == 'b' || peek() == 'g' || peek() == 'f') {
      char t = get();
      long color = 1;
      if (t != 'f' || std::isdigit(static_cast<unsigned char>(peek()))) color = number();
      if (color < 1 || color > 255) throw ParseError("color out of range", start);
      long k = bracket();
      Kind kind = t == 'b' ? Kind::Beta : t == 'g' ? Kind::Gamma : Kind::Phi;
      a.sym = GenSym(kind, static_cast<int>(color), static_cast<int>(k));
    } else {
      throw ParseError("unknown token", start);
    }
    if (seen_any_ && a.abstract != abstract_)
      throw ParseError("mixed free-field and abstract tokens", start);
    seen_any_ = true;
    abstract_ = a.abstract;
    return a;
  }

  long bracket() {
    expect('[');
    long k = number();
    expect(']');
    if (k > 60000) throw ParseError("derivative order too large", pos_);
    return k;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  bool seen_any_ = false;
  bool abstract_ = false;
  std::vector<std::pair<std::vector<Atom>, Rational>> terms_;
};

}  // namespace

std::variant<VPoly, WPoly> parse_expr(std::string_view text) { return Parser(text).run(); }

VPoly parse_vpoly(std::string_view text) {
  auto v = parse_expr(text);
  if (auto* p = std::get_if<VPoly>(&v)) return *p;
  throw ParseError("expected a free-field expression", 0);
}

WPoly parse_wpoly(std::string_view text) {
  auto v = parse_expr(text);
  if (auto* p = std::get_if<WPoly>(&v)) return *p;
  const VPoly& c = std::get<VPoly>(v);
  if (c.max_degree() <= 0) return WPoly(c.constant_term());
  throw ParseError("expected an abstract expression", 0);
}

QPoly parse_qpoly(std::string_view text) {
  QPoly out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto num = [&] {
    skip();
    std::size_t st = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (st == pos) throw ParseError("expected integer", pos);
    return std::stoi(std::string(text.substr(st, pos - st)));
  };
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    Rational c = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') c = -1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;
    std::size_t st = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    if (pos > st) {
      c *= parse_rational(text.substr(st, pos - st));
      skip();
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    QPoly t(c);
    skip();
    while (pos < text.size() && text[pos] == 'Q') {
      ++pos;
      skip();
      if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
      ++pos;
      int a = num();
      skip();
      if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
      int b = num();
      skip();
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
      t = t * QPoly::Q(a, b);
      skip();
    }
    out += t;
  }
  return out;
}

}  // namespace wfree
