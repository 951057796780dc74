#include "wfree/freefield.hpp"

#include <algorithm>
#include <stdexcept>

namespace wfree {

int canonicalize(Mono& m) {
  int sign = 1;
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (std::size_t j = i; j > 0 && m[j] < m[j - 1]; --j) {
      if (m[j].odd() && m[j - 1].odd()) sign = -sign;
      std::swap(m[j], m[j - 1]);
    }
  }
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i].odd() && m[i] == m[i - 1]) return 0;
  return sign;
}

int mono_weight2(const Mono& m) {
  int w = 0;
  for (GenSym g : m) w += g.weight2();
  return w;
}

VPoly::VPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Mono{}, c);
}

VPoly VPoly::gen(GenSym g) { return mono(Mono{g}); }

VPoly VPoly::mono(Mono m, const Rational& c) {
  VPoly p;
  int s = canonicalize(m);
  if (s != 0) p.add_term(m, c * s);
  return p;
}

void VPoly::add_term(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

VPoly& VPoly::operator+=(const VPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

VPoly& VPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

VPoly VPoly::operator+(const VPoly& o) const {
  VPoly r = *this;
  return r += o;
}

VPoly VPoly::operator-(const VPoly& o) const {
  VPoly r = *this;
  return r -= o;
}

VPoly VPoly::operator-() const {
  VPoly r = *this;
  return r *= Rational(-1);
}

int VPoly::max_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(std::prev(terms_.end())->first.size());
}

VPoly VPoly::degree_component(int d) const {
  VPoly r;
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == d) r.terms_.emplace(m, c);
  return r;
}

int VPoly::weight2() const {
  if (terms_.empty()) return -1;
  int w = mono_weight2(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (mono_weight2(m) != w) throw std::logic_error("inhomogeneous weight");
  return w;
}

bool VPoly::homogeneous() const {
  if (terms_.empty()) return true;
  int w = mono_weight2(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (mono_weight2(m) != w) return false;
  return true;
}

Rational VPoly::constant_term() const {
  auto it = terms_.find(Mono{});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool VPoly::odd() const {
  if (terms_.empty()) return false;
  int n = 0;
  for (GenSym g : terms_.begin()->first) n += g.odd();
  return n % 2 == 1;
}

namespace {

void add_product(VPoly& out, const Mono& a, const Mono& b, const Rational& c) {
  Mono m;
  m.reserve(a.size() + b.size());
  m.insert(m.end(), a.begin(), a.end());
  m.insert(m.end(), b.begin(), b.end());
  int s = canonicalize(m);
  if (s != 0) out.add_term(m, s > 0 ? c : Rational(-c));
}

VPoly derive_mono(const Mono& m) {
  VPoly r;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Mono t = m;
    t[i] = t[i].raised();
    int s = canonicalize(t);
    if (s != 0) r.add_term(t, Rational(s));
  }
  return r;
}

VPoly derive_mono(const Mono& m, int k) {
  VPoly cur = VPoly::mono(m);
  for (int i = 0; i < k; ++i) cur = derive(cur);
  return cur;
}

// Contraction coefficient <x(z) y(w)> = c_xy / (z-w); zero if uncoupled.
int coupling(GenSym x, GenSym y) {
  if (x.color() != y.color()) return 0;
  if (x.kind() == Kind::Beta && y.kind() == Kind::Gamma) return 1;
  if (x.kind() == Kind::Gamma && y.kind() == Kind::Beta) return -1;
  if (x.kind() == Kind::Phi && y.kind() == Kind::Phi) return 1;
  return 0;
}

struct WickState {
  const Mono& a;
  const Mono& b;
  int n;
  Rational scale;
  VPoly& out;
  std::vector<int> partner;  // partner[i] = index in b or -1
  std::vector<bool> used;
};

void emit(WickState& st, const Rational& contr, int poles) {
  const int k = poles - st.n - 1;
  if (k < 0) return;
  const std::size_t r = st.a.size(), s = st.b.size();
  // Position sequence after pulling contracted pairs to the front.
  std::vector<int> order;
  order.reserve(r + s);
  for (std::size_t i = 0; i < r; ++i)
    if (st.partner[i] >= 0) {
      order.push_back(static_cast<int>(i));
      order.push_back(static_cast<int>(r) + st.partner[i]);
    }
  Mono arest, brest;
  for (std::size_t i = 0; i < r; ++i)
    if (st.partner[i] < 0) {
      order.push_back(static_cast<int>(i));
      arest.push_back(st.a[i]);
    }
  for (std::size_t j = 0; j < s; ++j)
    if (!st.used[j]) {
      order.push_back(static_cast<int>(r + j));
      brest.push_back(st.b[j]);
    }
  auto is_odd = [&](int pos) {
    return pos < static_cast<int>(r) ? st.a[pos].odd() : st.b[pos - r].odd();
  };
  int inv = 0;
  for (std::size_t x = 0; x < order.size(); ++x) {
    if (!is_odd(order[x])) continue;
    for (std::size_t y = x + 1; y < order.size(); ++y)
      if (is_odd(order[y]) && order[y] < order[x]) ++inv;
  }
  Rational c = st.scale * contr * inv_factorial(k);
  if (inv % 2) c = -c;
  if (k == 0) {
    add_product(st.out, arest, brest, c);
    return;
  }
  if (arest.empty()) return;
  VPoly da = derive_mono(arest, k);
  for (const auto& [m, x] : da.terms()) add_product(st.out, m, brest, c * x);
}

void enumerate(WickState& st, std::size_t i, const Rational& contr, int poles) {
  if (i == st.a.size()) {
    emit(st, contr, poles);
    return;
  }
  st.partner[i] = -1;
  enumerate(st, i + 1, contr, poles);
  for (std::size_t j = 0; j < st.b.size(); ++j) {
    if (st.used[j]) continue;
    int cxy = coupling(st.a[i], st.b[j]);
    if (cxy == 0) continue;
    const int p = st.a[i].deriv(), q = st.b[j].deriv();
    Rational v(factorial(p + q) * (cxy * sign_pow(p)));
    st.partner[i] = static_cast<int>(j);
    st.used[j] = true;
    enumerate(st, i + 1, contr * v, poles + p + q + 1);
    st.used[j] = false;
    st.partner[i] = -1;
  }
}

void circle_mono(const Mono& a, int n, const Mono& b, const Rational& scale,
                 VPoly& out) {
  WickState st{a, b, n, scale, out, std::vector<int>(a.size(), -1),
               std::vector<bool>(b.size(), false)};
  enumerate(st, 0, Rational(1), 0);
}

}  // namespace

VPoly mul(const VPoly& a, const VPoly& b) {
  VPoly r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) add_product(r, ma, mb, ca * cb);
  return r;
}

VPoly derive(const VPoly& a, int k) {
  if (k == 0) return a;
  VPoly r;
  for (const auto& [m, c] : a.terms()) {
    VPoly d = derive_mono(m);
    d *= c;
    r += d;
  }
  return k == 1 ? r : derive(r, k - 1);
}

VPoly circle(const VPoly& a, int n, const VPoly& b) {
  VPoly r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) circle_mono(ma, n, mb, ca * cb, r);
  return r;
}

OpeTable ope_all(const VPoly& a, const VPoly& b) {
  int bound = -1;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      bound = std::max(bound, (mono_weight2(ma) + mono_weight2(mb)) / 2 - 1);
  OpeTable t;
  for (int n = 0; n <= bound; ++n) {
    VPoly c = circle(a, n, b);
    if (!c.is_zero()) t.emplace(n, std::move(c));
  }
  return t;
}

std::string to_text(GenSym g) {
  std::string s;
  switch (g.kind()) {
    case Kind::Beta: s = "b" + std::to_string(g.color()); break;
    case Kind::Gamma: s = "g" + std::to_string(g.color()); break;
    case Kind::Phi:
      s = g.color() == 1 ? "f" : "f" + std::to_string(g.color());
      break;
  }
  return s + "[" + std::to_string(g.deriv()) + "]";
}

std::string to_text(const VPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      first = false;
    } else {
      out += a < 0 ? " - " : " + ";
      a = abs(a);
    }
    if (m.empty()) {
      out += to_string(a);
      continue;
    }
    out += to_string(a) + " * :";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) out += ' ';
      out += to_text(m[i]);
    }
    out += ':';
  }
  return out;
}

}  // namespace wfree
