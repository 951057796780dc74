#pragma once

// Mode-algebra model of the free fields, independent of the Wick engine.
// A state is a polynomial in creation modes x_(m), m < 0, applied to the
// vacuum; d^p x corresponds to p! x_(-p-1)|0>. Fields of bilinears act by
// their normally ordered mode expansions.

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "wfree/freefield.hpp"

namespace fock {

using wfree::GenSym;
using wfree::Kind;
using wfree::Rational;

struct Mode {
  Kind kind;
  int color;
  int m;
  bool odd() const { return kind == Kind::Phi; }
  auto key() const { return std::make_tuple(static_cast<int>(kind), color, -m); }
  bool operator<(const Mode& o) const { return key() < o.key(); }
  bool operator==(const Mode& o) const { return key() == o.key(); }
};

using Creators = std::vector<Mode>;
using State = std::map<Creators, Rational>;

inline void add(State& s, const Creators& c, const Rational& v) {
  if (v == 0) return;
  auto& x = s[c];
  x += v;
  if (x == 0) s.erase(c);
}

// Sorts creators, returning the fermionic sign or 0 for a repeated odd mode.
inline int sort_creators(Creators& c) {
  int sign = 1;
  for (std::size_t i = 1; i < c.size(); ++i)
    for (std::size_t j = i; j > 0 && c[j] < c[j - 1]; --j) {
      if (c[j].odd() && c[j - 1].odd()) sign = -sign;
      std::swap(c[j], c[j - 1]);
    }
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] == c[i - 1] && c[i].odd()) return 0;
  return sign;
}

// Bracket [x_(m), y_(k)] as a scalar.
inline Rational bracket(const Mode& x, const Mode& y) {
  if (x.color != y.color || x.m + y.m != -1) return 0;
  if (x.kind == Kind::Beta && y.kind == Kind::Gamma) return 1;
  if (x.kind == Kind::Gamma && y.kind == Kind::Beta) return -1;
  if (x.kind == Kind::Phi && y.kind == Kind::Phi) return 1;
  return 0;
}

inline State apply(const Mode& x, const State& s) {
  State out;
  for (const auto& [c, v] : s) {
    if (x.m < 0) {
      Creators n = c;
      n.insert(n.begin(), x);
      int sg = sort_creators(n);
      if (sg) add(out, n, v * sg);
      continue;
    }
    int sign = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Rational b = bracket(x, c[i]);
      if (b != 0) {
        Creators n = c;
        n.erase(n.begin() + static_cast<long>(i));
        add(out, n, v * b * sign);
      }
      if (x.odd() && c[i].odd()) sign = -sign;
    }
  }
  return out;
}

inline Rational falling(int m, int p) {  // coefficient of d^p on z^{-m-1}
  Rational r = 1;
  for (int i = 1; i <= p; ++i) r *= -m - i;
  return r;
}

inline Mode mode_of(GenSym g, int m) { return Mode{g.kind(), g.color(), m}; }

inline State state_of(const wfree::VPoly& p) {
  State s;
  for (const auto& [mono, c] : p.terms()) {
    Creators cr;
    Rational v = c;
    for (GenSym g : mono) {
      cr.push_back(mode_of(g, -g.deriv() - 1));
      v *= wfree::factorial(g.deriv());
    }
    int sg = sort_creators(cr);
    if (sg) add(s, cr, v * sg);
  }
  return s;
}

inline wfree::VPoly vpoly_of(const State& s) {
  wfree::VPoly p;
  for (const auto& [c, v] : s) {
    wfree::Mono m;
    Rational w = v;
    for (const Mode& x : c) {
      int d = -x.m - 1;
      m.emplace_back(x.kind, x.color, d);
      w /= wfree::factorial(d);
    }
    int sg = wfree::canonicalize(m);
    if (sg) p.add_term(m, w * sg);
  }
  return p;
}

// n-th mode of the field :d^p x d^q y: applied to s. Modes beyond the
// state's reach vanish, so a window of mode indices suffices.
inline State bilinear_mode(GenSym x, GenSym y, int n, const State& s, int reach) {
  State out;
  const int total = n - x.deriv() - y.deriv() - 1;  // m + k
  for (int m = -reach - std::abs(total) - 2; m <= reach + std::abs(total) + 2; ++m) {
    const int k = total - m;
    Rational coef = falling(m, x.deriv()) * falling(k, y.deriv());
    if (coef == 0) continue;
    Mode a = mode_of(x, m), b = mode_of(y, k);
    State t;
    if (m >= 0 && k < 0) {
      t = fock::apply(b, fock::apply(a, s));
      if (a.odd() && b.odd()) coef = -coef;
    } else {
      t = fock::apply(a, fock::apply(b, s));
    }
    for (const auto& [c, v] : t) add(out, c, v * coef);
  }
  return out;
}

inline State generator_mode(GenSym x, int n, const State& s) {
  State out;
  const int m = n - x.deriv();
  Rational coef = falling(m, x.deriv());
  if (coef == 0) return out;
  for (const auto& [c, v] : fock::apply(mode_of(x, m), s)) add(out, c, v * coef);
  return out;
}

// a o_n b for a a linear combination of generators and bilinears.
inline wfree::VPoly circle(const wfree::VPoly& a, int n, const wfree::VPoly& b) {
  State sb = state_of(b);
  int reach = 0;
  for (const auto& [c, v] : sb)
    for (const Mode& x : c) reach = std::max(reach, -x.m);
  reach += 2 * (n < 0 ? -n : n) + 4;
  for (const auto& [mono, c] : a.terms())
    for (GenSym g : mono) reach += g.deriv();
  State out;
  for (const auto& [mono, c] : a.terms()) {
    State t;
    if (mono.size() == 1)
      t = generator_mode(mono[0], n, sb);
    else if (mono.size() == 2)
      t = bilinear_mode(mono[0], mono[1], n, sb, reach);
    else
      throw std::invalid_argument("oracle handles generators and bilinears only");
    for (const auto& [cr, v] : t) add(out, cr, v * c);
  }
  return vpoly_of(out);
}

}  // namespace fock
