#include "wfree/wbasis.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace wfree {

Rational Family::central_charge() const {
  switch (group) {
    case Group::Sp: return Rational(-n);
    case Group::O: return frac(n, 2);
    case Group::Osp: return frac(-2 * n + 1, 2);
  }
  return 0;
}

int Family::minimal_relation_weight() const {
  switch (group) {
    case Group::Sp: return 2 * (n + 1) * (n + 1);
    case Group::O: return 2 * n + 2;
    case Group::Osp: return 4 * n * n + 8 * n + 4;
  }
  return 0;
}

std::string Family::name() const {
  switch (group) {
    case Group::Sp: return "sp";
    case Group::O: return "o";
    case Group::Osp: return "osp";
  }
  return "?";
}

Family parse_family(const std::string& name, int n) {
  if (n < 1) throw std::invalid_argument("family rank must be positive");
  if (name == "sp") return Family{Group::Sp, n};
  if (name == "o") return Family{Group::O, n};
  if (name == "osp") return Family{Group::Osp, n};
  throw std::invalid_argument("unknown family: " + name);
}

namespace {

std::tuple<int, int, int, int> order_key(const WGen& g) {
  if (g.is_w) return {g.x, 0, 0, g.k};
  return {g.x + g.y + g.k, 1, g.x, g.k};
}

}  // namespace

bool wgen_before(const WGen& a, const WGen& b) {
  return order_key(a) < order_key(b);
}

WPoly::WPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Word{}, c);
}

WPoly WPoly::gen(WGen g, const Rational& c) { return word(Word{g}, c); }

WPoly WPoly::word(Word w, const Rational& c) {
  WPoly p;
  p.add_term(w, c);
  return p;
}

void WPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WPoly& WPoly::operator+=(const WPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

WPoly& WPoly::operator-=(const WPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

WPoly& WPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

WPoly WPoly::operator+(const WPoly& o) const {
  WPoly r = *this;
  return r += o;
}

WPoly WPoly::operator-(const WPoly& o) const {
  WPoly r = *this;
  return r -= o;
}

int WPoly::max_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(std::prev(terms_.end())->first.size());
}

WPoly WPoly::degree_component(int k) const {
  WPoly r;
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == k) r.terms_.emplace(w, c);
  return r;
}

int WPoly::weight() const {
  int wt = -1;
  for (const auto& [w, c] : terms_) {
    int s = 0;
    for (const WGen& g : w) s += g.weight();
    if (wt >= 0 && s != wt) throw std::logic_error("inhomogeneous WPoly");
    wt = s;
  }
  return wt;
}

VPoly omega_bilinear(const Family& f, int a, int b) {
  VPoly r;
  const Rational half(1, 2);
  if (f.group == Group::Sp || f.group == Group::Osp) {
    for (int i = 1; i <= f.n; ++i) {
      r += VPoly::mono({GenSym(Kind::Beta, i, a), GenSym(Kind::Gamma, i, b)}, half);
      r -= VPoly::mono({GenSym(Kind::Beta, i, b), GenSym(Kind::Gamma, i, a)}, half);
    }
  }
  if (f.group == Group::O) {
    for (int i = 1; i <= f.n; ++i)
      r += VPoly::mono({GenSym(Kind::Phi, i, a), GenSym(Kind::Phi, i, b)}, half);
  }
  if (f.group == Group::Osp)
    r -= VPoly::mono({GenSym(Kind::Phi, 1, a), GenSym(Kind::Phi, 1, b)}, half);
  return r;
}

VPoly realize(const Family& f, const WGen& g) {
  VPoly base = g.is_w ? omega_bilinear(f, 0, g.x) : omega_bilinear(f, g.x, g.y);
  base *= Rational(f.sign());
  return derive(base, g.k);
}

namespace {

struct RealizeCache {
  std::mutex mu;
  std::map<Family, std::map<Word, VPoly, WordLess>> words;
};

RealizeCache& realize_cache() {
  static RealizeCache c;
  return c;
}

}  // namespace

VPoly realize(const Family& f, const Word& w) {
  if (w.empty()) return VPoly(Rational(1));
  if (w.size() == 1) return realize(f, w[0]);
  auto& cache = realize_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto& m = cache.words[f];
    auto it = m.find(w);
    if (it != m.end()) return it->second;
  }
  Word rest(w.begin() + 1, w.end());
  VPoly r = wick(realize(f, w[0]), realize(f, rest));
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.words[f].emplace(w, r);
  return r;
}

VPoly realize(const Family& f, const WPoly& p) {
  VPoly r;
  for (const auto& [w, c] : p.terms()) {
    VPoly t = realize(f, w);
    t *= c;
    r += t;
  }
  return r;
}

std::vector<std::pair<std::pair<int, int>, Rational>> expand_omega(const WGen& g) {
  const int a = g.is_w ? 0 : g.x;
  const int b = g.is_w ? g.x : g.y;
  std::map<std::pair<int, int>, Rational> acc;
  for (int j = 0; j <= g.k; ++j) {
    int c = a + j, d = b + g.k - j;
    if (c == d) continue;
    Rational v(binomial(g.k, j));
    if (c > d) {
      std::swap(c, d);
      v = -v;
    }
    acc[{c, d}] += v;
  }
  std::vector<std::pair<std::pair<int, int>, Rational>> out;
  for (auto& [k, v] : acc)
    if (v != 0) out.emplace_back(k, v);
  return out;
}

std::vector<WGen> am_basis(int m) {
  std::vector<WGen> b;
  if (m % 2 == 1)
    for (int i = 0; 2 * i <= m - 1; ++i) b.push_back(WGen::W(m - 2 * i, 2 * i));
  else
    for (int i = 0; 2 * i + 1 <= m - 1; ++i)
      b.push_back(WGen::W(m - 1 - 2 * i, 2 * i + 1));
  return b;
}

namespace {

// Inverse of the matrix whose columns are the Omega-coordinates of am_basis(m).
const RationalMatrix& coord_inverse(int m) {
  static std::mutex mu;
  static std::map<int, RationalMatrix> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<WGen> basis = am_basis(m);
  const int dim = static_cast<int>(basis.size());
  RationalMatrix t(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (auto& [ab, v] : expand_omega(basis[i])) t(ab.first, i) += v;
  RationalMatrix inv(dim, dim);
  for (int r = 0; r < dim; ++r) {
    std::vector<Rational> e(static_cast<std::size_t>(dim));
    e[r] = 1;
    auto s = solve_linear(t, e);
    if (!s || !s->nullspace.empty()) throw std::logic_error("A_m basis is singular");
    for (int i = 0; i < dim; ++i) inv(i, r) = s->particular[i];
  }
  return cache.emplace(m, std::move(inv)).first->second;
}

}  // namespace

std::vector<Rational> omega_coords(int a, int b) {
  if (a < 0 || a >= b) throw std::invalid_argument("omega_coords needs 0 <= a < b");
  const RationalMatrix& inv = coord_inverse(a + b);
  std::vector<Rational> c(static_cast<std::size_t>(inv.rows()));
  for (int i = 0; i < inv.rows(); ++i) c[i] = inv(i, a);
  return c;
}

std::vector<std::pair<WGen, Rational>> expand_w(const WGen& g) {
  if (g.is_w) return {{g, Rational(1)}};
  std::map<WGen, Rational> acc;
  for (auto& [ab, v] : expand_omega(WGen::Om(g.x, g.y))) {
    std::vector<WGen> basis = am_basis(ab.first + ab.second);
    std::vector<Rational> c = omega_coords(ab.first, ab.second);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (c[i] == 0) continue;
      WGen h = basis[i];
      h.k += g.k;
      acc[h] += v * c[i];
    }
  }
  std::vector<std::pair<WGen, Rational>> out;
  for (auto& [h, v] : acc)
    if (v != 0) out.emplace_back(h, v);
  return out;
}

namespace {

template <class Expand>
WPoly expand_words(const WPoly& p, Expand expand) {
  WPoly r;
  for (const auto& [w, c] : p.terms()) {
    std::vector<std::pair<Word, Rational>> partial{{Word{}, c}};
    for (const WGen& g : w) {
      auto opts = expand(g);
      std::vector<std::pair<Word, Rational>> next;
      for (auto& [pw, pc] : partial)
        for (auto& [h, v] : opts) {
          Word nw = pw;
          nw.push_back(h);
          next.emplace_back(std::move(nw), pc * v);
        }
      partial = std::move(next);
    }
    for (auto& [pw, pc] : partial) r.add_term(pw, pc);
  }
  return r;
}

}  // namespace

WPoly to_omega_basis(const WPoly& p) {
  return expand_words(p, [](const WGen& g) {
    std::vector<std::pair<WGen, Rational>> out;
    for (auto& [ab, v] : expand_omega(g)) out.emplace_back(WGen::Om(ab.first, ab.second), v);
    return out;
  });
}

WPoly to_w_basis(const WPoly& p) { return expand_words(p, expand_w); }

WPoly derive(const WPoly& p, int k) {
  if (k == 0) return p;
  WPoly r;
  for (const auto& [w, c] : p.terms())
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word nw = w;
      ++nw[i].k;
      r.add_term(nw, c);
    }
  return k == 1 ? r : derive(r, k - 1);
}

Rational pr(int m, const WPoly& x) {
  if (m % 2 == 0) throw std::invalid_argument("pr needs odd m");
  WPoly w = to_w_basis(x);
  Rational out = 0;
  for (const auto& [word, c] : w.terms()) {
    if (word.size() != 1 || word[0].index_sum() != m)
      throw std::invalid_argument("pr: element not in A_m");
    if (word[0] == WGen::W(m, 0)) out += c;
  }
  return out;
}

Rational pplus_lambda(int a, int b, int w, int l) {
  if (l + w - a < 0) return 0;
  Rational t1 = Rational(factorial(b + l)) * inv_factorial(l + w - a) / 2;
  if (sign_pow(b + 1) < 0) t1 = -t1;
  Rational t2 = Rational(factorial(a + l)) * inv_factorial(l + w - b) / 2;
  if (sign_pow(a + 1) < 0) t2 = -t2;
  return t1 - t2;
}

namespace {

// Sorts with sign; 0 on repeated entries.
int sort_alternating(std::vector<int>& v) {
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

}  // namespace

std::vector<IndexTerm> pplus_act_indices(int a, int b, int w,
                                         const std::vector<int>& indices) {
  std::map<std::vector<int>, Rational> acc;
  for (std::size_t r = 0; r < indices.size(); ++r) {
    std::vector<int> v = indices;
    v[r] += w;
    int s = sort_alternating(v);
    if (s == 0) continue;
    acc[v] += pplus_lambda(a, b, w, indices[r]) * s;
  }
  std::vector<IndexTerm> out;
  for (auto& [v, c] : acc)
    if (c != 0) out.push_back({v, c});
  return out;
}

std::vector<std::pair<std::pair<std::vector<int>, std::vector<int>>, Rational>>
pplus_act_indices_orth(int a, int b, int w, const std::vector<int>& I,
                       const std::vector<int>& J) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> acc;
  for (std::size_t r = 0; r < I.size(); ++r) {
    std::vector<int> v = I;
    v[r] += w;
    std::sort(v.begin(), v.end());
    acc[{v, J}] += pplus_lambda(a, b, w, I[r]);
  }
  for (std::size_t r = 0; r < J.size(); ++r) {
    std::vector<int> v = J;
    v[r] += w;
    std::sort(v.begin(), v.end());
    acc[{I, v}] += pplus_lambda(a, b, w, J[r]);
  }
  std::vector<std::pair<std::pair<std::vector<int>, std::vector<int>>, Rational>> out;
  for (auto& [k, c] : acc)
    if (c != 0) out.emplace_back(k, c);
  return out;
}

RationalMatrix mw_matrix(int m, int w) {
  if (m < 0 || w < 1) throw std::invalid_argument("mw_matrix needs m >= 0, w >= 1");
  RationalMatrix mat(m + 1, m + 1);
  for (int j = 0; j <= m; ++j) {
    int kj = (w % 2 == 0) ? j + w / 2 : j + (w - 1) / 2;
    for (int i = 0; i <= m; ++i) mat(i, j) = pplus_lambda(0, 2 * kj + 1, w, i);
  }
  return mat;
}

WPoly lift_linear(const Family& f, const VPoly& bilinear, int weight) {
  if (bilinear.is_zero()) return WPoly();
  SparseEchelon<Mono> ech;
  std::vector<WGen> cand;
  for (int a = 0; 2 * a < weight - 1; ++a) {
    WGen g = WGen::Om(a, weight - 1 - a);
    VPoly img = realize(f, g);
    std::map<Mono, Rational> v(img.terms().begin(), img.terms().end());
    ech.insert(static_cast<int>(cand.size()), std::move(v));
    cand.push_back(g);
  }
  auto combo = ech.express(
      std::map<Mono, Rational>(bilinear.terms().begin(), bilinear.terms().end()));
  if (!combo) throw std::runtime_error("bilinear element not in the Omega span");
  WPoly r;
  for (auto& [i, c] : *combo) r.add_term(Word{cand[i]}, c);
  return r;
}

namespace {

struct OpeCache {
  std::mutex mu;
  std::map<std::tuple<Family, int, int, int, int, int>, GenOpe> table;
};

GenOpe base_ope(const Family& f, int a, int b, int j, int c, int d) {
  static OpeCache cache;
  auto key = std::make_tuple(f, a, b, j, c, d);
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  VPoly prod = circle(realize(f, WGen::Om(a, b)), j, realize(f, WGen::Om(c, d)));
  GenOpe g;
  g.central = prod.constant_term();
  VPoly bil = prod.degree_component(2);
  if (prod.max_degree() > 2 || prod.size() != bil.size() + (g.central != 0 ? 1 : 0))
    throw std::logic_error("generator OPE is not of Lie type");
  int wt = a + b + c + d + 2 - j - 1;
  g.linear = lift_linear(f, bil, wt);
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.table.emplace(key, g);
  return g;
}

}  // namespace

GenOpe gen_ope(const Family& f, const WGen& a, int j, const WGen& b) {
  if (j < 0) throw std::invalid_argument("gen_ope needs j >= 0");
  GenOpe out;
  for (auto& [ab, va] : expand_omega(a))
    for (auto& [cd, vb] : expand_omega(b)) {
      GenOpe g = base_ope(f, ab.first, ab.second, j, cd.first, cd.second);
      g.linear *= va * vb;
      out.linear += g.linear;
      out.central += g.central * va * vb;
    }
  return out;
}

namespace {

WPoly prepend(const WGen& g, const WPoly& p) {
  WPoly r;
  for (const auto& [w, c] : p.terms()) {
    Word nw;
    nw.reserve(w.size() + 1);
    nw.push_back(g);
    nw.insert(nw.end(), w.begin(), w.end());
    r.add_term(nw, c);
  }
  return r;
}

WPoly act_word(const Family& f, const WGen& a, int j, const Word& w,
               std::size_t pos) {
  if (pos == w.size()) return WPoly();
  const WGen& b = w[pos];
  Word rest(w.begin() + static_cast<long>(pos) + 1, w.end());
  WPoly out = prepend(b, act_word(f, a, j, w, pos + 1));
  for (int i = 0; i <= j; ++i) {
    GenOpe g = gen_ope(f, a, i, b);
    Rational bin(binomial(j, i));
    if (i == j) {
      for (const auto& [lw, lc] : g.linear.terms()) {
        Word nw = lw;
        nw.insert(nw.end(), rest.begin(), rest.end());
        out.add_term(nw, bin * lc);
      }
      out.add_term(rest, bin * g.central);
    } else {
      for (const auto& [lw, lc] : g.linear.terms()) {
        WPoly sub = act_word(f, lw[0], j - 1 - i, rest, 0);
        sub *= bin * lc;
        out += sub;
      }
    }
  }
  return out;
}

}  // namespace

WPoly act(const Family& f, const WGen& a, int j, const WPoly& p) {
  if (j < 0) throw std::invalid_argument("act needs j >= 0");
  WPoly r;
  for (const auto& [w, c] : p.terms()) {
    WPoly t = act_word(f, a, j, w, 0);
    t *= c;
    r += t;
  }
  return r;
}

WPoly swap_factors(const Family& f, const Word& w, std::size_t pos) {
  if (pos + 1 >= w.size()) throw std::out_of_range("swap position");
  const WGen x = w[pos], y = w[pos + 1];
  Word sw = w;
  std::swap(sw[pos], sw[pos + 1]);
  WPoly out = WPoly::word(sw);
  const int top = x.weight() + y.weight() - 1;
  for (int i = 0; i <= top; ++i) {
    GenOpe g = gen_ope(f, x, i, y);
    if (g.linear.is_zero()) continue;
    WPoly lin = to_omega_basis(derive(g.linear, i + 1));
    Rational c = inv_factorial(i + 1) * sign_pow(i);
    for (const auto& [lw, lc] : lin.terms()) {
      Word nw(w.begin(), w.begin() + static_cast<long>(pos));
      nw.push_back(lw[0]);
      nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
      out.add_term(nw, c * lc);
    }
  }
  return out;
}

WPoly sort_words(const Family& f, const WPoly& p) {
  WPoly done;
  WPoly pending = p;
  while (!pending.is_zero()) {
    auto last = std::prev(pending.terms().end());
    Word w = last->first;
    Rational c = last->second;
    pending.add_term(w, -c);
    std::size_t pos = w.size();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (wgen_before(w[i + 1], w[i])) {
        pos = i;
        break;
      }
    if (pos == w.size()) {
      done.add_term(w, c);
      continue;
    }
    WPoly s = swap_factors(f, w, pos);
    s *= c;
    pending += s;
  }
  return done;
}

std::string to_text(const WGen& g) {
  if (g.is_w) return "W" + std::to_string(g.x) + "[" + std::to_string(g.k) + "]";
  return "Om" + std::to_string(g.x) + "," + std::to_string(g.y) + "[" +
         std::to_string(g.k) + "]";
}

std::string to_text(const WPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Rational a = c;
    if (first) {
      first = false;
    } else {
      out += a < 0 ? " - " : " + ";
      a = abs(a);
    }
    if (w.empty()) {
      out += to_string(a);
      continue;
    }
    out += to_string(a) + " * :";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += to_text(w[i]);
    }
    out += ':';
  }
  return out;
}

}  // namespace wfree
