#include "wfree/remainder.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "wfree/matrix.hpp"

namespace wfree {

bool is_balanced(const std::vector<int>& I) {
  std::size_t even = 0;
  for (int i : I) even += (i % 2 == 0);
  return 2 * even == I.size();
}

namespace {

int sorted_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

Rational r1_formula(int i0, int i1, int i2, int i3) {
  auto s = [](int a, int b) { return sign_pow(a + b); };
  Rational t = frac(s(i0, i2) - s(i1, i2) - s(i0, i3) + s(i1, i3), 1 + i0 + i1);
  t += frac(-s(i0, i1) + s(i1, i2) + s(i0, i3) - s(i2, i3), 1 + i0 + i2);
  t += frac(s(i0, i1) - s(i0, i2) - s(i1, i3) + s(i2, i3), 1 + i0 + i3);
  t += frac(-s(i0, i2) + s(i0, i1) - s(i1, i3) + s(i2, i3), 1 + i1 + i2);
  t += frac(s(i1, i2) + s(i0, i3) - s(i2, i3) - s(i0, i1), 1 + i1 + i3);
  t += frac(-s(i1, i2) + s(i1, i3) - s(i0, i3) + s(i0, i2), 1 + i2 + i3);
  t.canonicalize();
  return t / 4;
}

std::mutex memo_mu;
std::map<std::pair<int, std::vector<int>>, Rational> sym_memo;
std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> orth_memo;

Rational sym_sorted(int n, const std::vector<int>& I);

Rational sym_any(int n, std::vector<int> I) {
  int s = sorted_sign(I);
  if (s == 0) return 0;
  Rational v = sym_sorted(n, I);
  return s > 0 ? v : Rational(-v);
}

Rational sym_sorted(int n, const std::vector<int>& I) {
  if (!is_balanced(I)) return 0;
  if (n == 1) return r1_formula(I[0], I[1], I[2], I[3]);
  {
    std::lock_guard<std::mutex> lock(memo_mu);
    auto it = sym_memo.find({n, I});
    if (it != sym_memo.end()) return it->second;
  }
  const int i0 = I[0];
  Rational total = 0;
  for (int r = 1; r <= 2 * n + 1; ++r) {
    const int ir = I[r];
    std::vector<int> rest;
    for (int k = 1; k <= 2 * n + 1; ++k)
      if (k != r) rest.push_back(I[k]);
    Rational inner = 0;
    for (std::size_t a = 0; a < rest.size(); ++a) {
      const int ia = rest[a];
      std::vector<int> sub = rest;
      sub[a] = ia + i0 + ir + 1;
      Rational v = sym_any(n - 1, sub);
      if (v == 0) continue;
      inner += sign_pow(i0) * v / (i0 + ia + 1);
      inner += sign_pow(ir + 1) * v / (ir + ia + 1);
    }
    total += sign_pow(r + 1) * inner;
  }
  Rational out = -total / 2;
  std::lock_guard<std::mutex> lock(memo_mu);
  sym_memo.emplace(std::make_pair(n, I), out);
  return out;
}

void check_weight(int n, const std::vector<int>& I) {
  if (static_cast<int>(I.size()) != 2 * n + 2)
    throw std::invalid_argument("index list must have 2n+2 entries");
  long s = n + 1;
  for (int i : I) {
    if (i < 0) throw std::invalid_argument("negative index");
    s += i;
  }
  if (s % 2 != 0) throw std::invalid_argument("odd weight: remainder undefined");
}

}  // namespace

Rational r1_sym(const std::vector<int>& I) {
  check_weight(1, I);
  for (std::size_t k = 1; k < I.size(); ++k)
    if (I[k] <= I[k - 1]) throw std::invalid_argument("indices must strictly increase");
  return r1_formula(I[0], I[1], I[2], I[3]);
}

Rational rn_sym_recursive(int n, const std::vector<int>& I) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  check_weight(n, I);
  return sym_any(n, I);
}

Rational rn_sym_closed(int n, const std::vector<int>& I) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  check_weight(n, I);
  if (!is_balanced(I)) return 0;
  std::vector<int> ev, od, pos_ev, pos_od;
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (I[k] % 2 == 0) {
      ev.push_back(I[k]);
      pos_ev.push_back(static_cast<int>(k));
    } else {
      od.push_back(I[k]);
      pos_od.push_back(static_cast<int>(k));
    }
  }
  // Sign of the permutation taking I to the interleaved order (i0, j0, i1, j1, ...).
  std::vector<int> perm;
  for (int k = 0; k <= n; ++k) {
    perm.push_back(pos_ev[k]);
    perm.push_back(pos_od[k]);
  }
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
  Integer num = factorial(n);
  long s = n + 1;
  for (int i : I) s += i;
  num *= s;
  for (int k = 0; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) num *= (ev[k] - ev[l]) * (od[k] - od[l]);
  Integer den = 1;
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l) den *= 1 + ev[k] + od[l];
  Rational out(num, den);
  out.canonicalize();
  return inv % 2 ? Rational(-out) : out;
}

Rational r1_orth(const std::vector<int>& I, const std::vector<int>& J) {
  if (I.size() != 2 || J.size() != 2) throw std::invalid_argument("r1_orth needs 2+2 indices");
  const int i0 = I[0], i1 = I[1], j0 = J[0], j1 = J[1];
  Rational r = frac(1, 1 + i0 + i1) + frac(1, 1 + j0 + j1);
  r += frac(1, 2 * (1 + i0 + j0)) + frac(1, 2 * (1 + i1 + j0));
  r += frac(1, 2 * (1 + i0 + j1)) + frac(1, 2 * (1 + i1 + j1));
  return r;
}

Rational rn_orth_recursive(int n, const std::vector<int>& I0, const std::vector<int>& J0) {
  if (n < 1 || static_cast<int>(I0.size()) != n + 1 || J0.size() != I0.size())
    throw std::invalid_argument("orthogonal remainder needs two lists of n+1 indices");
  std::vector<int> I = I0, J = J0;
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  if (n == 1) return r1_orth(I, J);
  {
    std::lock_guard<std::mutex> lock(memo_mu);
    auto it = orth_memo.find({I, J});
    if (it != orth_memo.end()) return it->second;
  }
  const int j0 = J[0];
  std::vector<int> Jp(J.begin() + 1, J.end());
  Rational total = 0;
  for (int r = 0; r <= n; ++r) {
    const int ir = I[r];
    std::vector<int> Ir;
    for (int k = 0; k <= n; ++k)
      if (k != r) Ir.push_back(I[k]);
    Rational first = 0, second = 0;
    for (std::size_t k = 0; k < Ir.size(); ++k) {
      std::vector<int> K = Ir;
      K[k] += ir + j0 + 1;
      Rational v = rn_orth_recursive(n - 1, K, Jp);
      first += v / (Ir[k] + ir + 1);
      second += v / (Ir[k] + j0 + 1);
    }
    for (std::size_t l = 0; l < Jp.size(); ++l) {
      std::vector<int> L = Jp;
      L[l] += ir + j0 + 1;
      Rational v = rn_orth_recursive(n - 1, Ir, L);
      first += v / (Jp[l] + ir + 1);
      second += v / (Jp[l] + j0 + 1);
    }
    total -= sign_pow(ir) * first;
    total -= sign_pow(j0 + 1) * second;
  }
  std::lock_guard<std::mutex> lock(memo_mu);
  orth_memo.emplace(std::make_pair(I, J), total);
  return total;
}

Rational limit_remainder(int n, const std::vector<int>& I) {
  if (n < 2) throw std::invalid_argument("limit_remainder needs n >= 2");
  if (static_cast<int>(I.size()) != 2 * n)
    throw std::invalid_argument("front must have 2n entries");
  for (int k = 0; k < 2 * n; ++k)
    if ((I[k] % 2) != (k % 2))
      throw std::invalid_argument("front must interleave evens and odds");
  int base = 0;
  for (int i : I) base = std::max(base, i);
  base += 2 + (base % 2);
  // Fit R(x) = P(x)/Q(x) with deg P, deg Q <= D by a homogeneous linear system.
  for (int D = 2 * n + 2;; D += 2) {
    const int unknowns = 2 * (D + 1);
    const int samples = unknowns + 4;
    auto value = [&](long x) {
      std::vector<int> Ix = I;
      Ix.push_back(static_cast<int>(x));
      Ix.push_back(static_cast<int>(x + 1));
      return rn_sym_recursive(n, Ix);
    };
    RationalMatrix m(samples, unknowns);
    for (int s = 0; s < samples; ++s) {
      long x = base + 2L * s;
      Rational y = value(x);
      Rational xp = 1;
      for (int d = 0; d <= D; ++d) {
        m(s, d) = xp;
        m(s, D + 1 + d) = -y * xp;
        xp *= x;
      }
    }
    auto sol = solve_linear(m, std::vector<Rational>(static_cast<std::size_t>(samples)));
    if (!sol || sol->nullspace.empty()) {
      if (D > 8 * n + 8) throw std::runtime_error("rational interpolation failed");
      continue;
    }
    const auto& v = sol->nullspace.front();
    int dp = -1, dq = -1;
    for (int d = 0; d <= D; ++d) {
      if (v[d] != 0) dp = d;
      if (v[D + 1 + d] != 0) dq = d;
    }
    if (dq < 0) throw std::runtime_error("degenerate interpolant");
    if (dp > dq) throw std::runtime_error("remainder diverges in x");
    if (dp < dq) return 0;
    return v[dp] / v[D + 1 + dq];
  }
}

}  // namespace wfree
