#include "wfree/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace wfree {

QPoly::QPoly(const Rational& c) {
  if (c != 0) terms_.emplace(QMono{}, c);
}

QPoly QPoly::Q(int a, int b) {
  QPoly p;
  if (a == b) return p;
  if (a < b)
    p.add_term({{a, b}}, 1);
  else
    p.add_term({{b, a}}, -1);
  return p;
}

void QPoly::add_term(QMono m, const Rational& c) {
  if (c == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, fresh] = terms_.try_emplace(std::move(m), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  return r += o;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r = *this;
  return r -= o;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      QMono m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(std::move(m), ca * cb);
    }
  return r;
}

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

int QPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

int QPoly::weight() const {
  int w = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (auto [a, b] : m) s += a + b + 1;
    w = std::max(w, s);
  }
  return w;
}

int QPoly::max_index() const {
  int k = -1;
  for (const auto& [m, c] : terms_)
    for (auto [a, b] : m) k = std::max({k, a, b});
  return k;
}

namespace {

QPoly pfaffian_rec(const std::vector<int>& I) {
  if (I.size() == 2) return QPoly::Q(I[0], I[1]);
  QPoly r;
  for (std::size_t k = 1; k < I.size(); ++k) {
    std::vector<int> rest;
    for (std::size_t t = 1; t < I.size(); ++t)
      if (t != k) rest.push_back(I[t]);
    QPoly term = QPoly::Q(I[0], I[k]) * pfaffian_rec(rest);
    if (k % 2 == 0) term *= Rational(-1);
    r += term;
  }
  return r;
}

QPoly det_rec(const std::vector<int>& I, const std::vector<int>& J) {
  if (I.size() == 1) return QPoly::Q(I[0], J[0]);
  std::vector<int> Jp(J.begin() + 1, J.end());
  QPoly r;
  for (std::size_t k = 0; k < I.size(); ++k) {
    std::vector<int> Ir;
    for (std::size_t t = 0; t < I.size(); ++t)
      if (t != k) Ir.push_back(I[t]);
    r += QPoly::Q(I[k], J[0]) * det_rec(Ir, Jp);
  }
  return r;
}

}  // namespace

QPoly pfaffian(const std::vector<int>& I, int n) {
  if (n < 1 || static_cast<int>(I.size()) != 2 * n + 2)
    throw std::invalid_argument("pfaffian needs 2n+2 indices");
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (I[k] < 0) throw std::invalid_argument("negative index");
    if (k && I[k] <= I[k - 1])
      throw std::invalid_argument("pfaffian indices must strictly increase");
  }
  return pfaffian_rec(I);
}

QPoly det_analog(const std::vector<int>& I, const std::vector<int>& J, int n) {
  if (n < 1 || static_cast<int>(I.size()) != n + 1 || J.size() != I.size())
    throw std::invalid_argument("det_analog needs two lists of n+1 indices");
  for (const auto* L : {&I, &J})
    for (std::size_t k = 0; k < L->size(); ++k) {
      if ((*L)[k] < 0) throw std::invalid_argument("negative index");
      if (k && (*L)[k] < (*L)[k - 1])
        throw std::invalid_argument("det_analog lists must be weakly increasing");
    }
  return det_rec(I, J);
}

QPoly sergeev_minimal() {
  auto q = [](int a, int b) { return QPoly::Q(a, b); };
  QPoly r = q(0, 1) * q(0, 1) * q(2, 3) * q(2, 3);
  r += q(0, 2) * q(0, 2) * q(1, 3) * q(1, 3);
  r += q(0, 3) * q(0, 3) * q(1, 2) * q(1, 2);
  QPoly t = q(0, 2) * q(0, 3) * q(1, 2) * q(1, 3);
  t *= Rational(-2);
  r += t;
  t = q(0, 1) * q(0, 3) * q(1, 2) * q(2, 3);
  t *= Rational(2);
  r += t;
  t = q(0, 1) * q(0, 2) * q(1, 3) * q(2, 3);
  t *= Rational(-2);
  r += t;
  return r;
}

VPoly eval_classical(const QPoly& p, const Family& f, int K) {
  if (p.max_index() > K) throw std::invalid_argument("index exceeds truncation");
  std::map<QPair, VPoly> q;
  VPoly r;
  for (const auto& [m, c] : p.terms()) {
    VPoly t(c);
    for (QPair ab : m) {
      auto it = q.find(ab);
      if (it == q.end()) it = q.emplace(ab, omega_bilinear(f, ab.first, ab.second)).first;
      t = mul(t, it->second);
      if (t.is_zero()) break;
    }
    r += t;
  }
  return r;
}

std::string to_text(const QPoly& p) {
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
    out += to_string(a);
    if (m.empty()) continue;
    out += " * ";
    for (auto [x, y] : m)
      out += "Q(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  return out;
}

}  // namespace wfree
