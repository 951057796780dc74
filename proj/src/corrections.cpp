#include "wfree/corrections.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "wfree/matrix.hpp"

namespace wfree {

WPoly normal_order(const QPoly& p, Ordering ord) {
  WPoly r;
  for (const auto& [m, c] : p.terms()) {
    Word w;
    for (auto [a, b] : m) w.push_back(WGen::Om(a, b));
    std::stable_sort(w.begin(), w.end(), wgen_before);
    if (ord == Ordering::Reversed) std::reverse(w.begin(), w.end());
    r.add_term(w, c);
  }
  return r;
}

namespace {

// All multisets of k pairs a < b with total weight sum(a+b+1) = weight.
void enumerate_monos(int k, int weight, QMono& cur, std::vector<QMono>& out) {
  if (k == 0) {
    if (weight == 0) out.push_back(cur);
    return;
  }
  if (weight < 2 * k) return;
  auto key = [](QPair p) { return std::make_pair(p.first + p.second, p.first); };
  const int smax = weight - 2 * (k - 1) - 1;
  for (int s = 1; s <= smax; ++s)
    for (int a = 0; 2 * a < s; ++a) {
      QPair p{a, s - a};
      if (!cur.empty() && key(p) < key(cur.back())) continue;
      cur.push_back(p);
      enumerate_monos(k - 1, weight - (s + 1), cur, out);
      cur.pop_back();
    }
}

struct LiftSpace {
  std::vector<QMono> cand;
  SparseEchelon<Mono> ech;
};

LiftSpace& lift_space(const Family& f, int weight, int k) {
  static std::mutex mu;
  static std::map<std::tuple<Family, int, int>, LiftSpace> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(f, weight, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  LiftSpace sp;
  QMono cur;
  enumerate_monos(k, weight, cur, sp.cand);
  std::map<QPair, VPoly> bil;
  for (std::size_t i = 0; i < sp.cand.size(); ++i) {
    VPoly img(Rational(1));
    for (QPair ab : sp.cand[i]) {
      auto b = bil.find(ab);
      if (b == bil.end()) {
        VPoly v = omega_bilinear(f, ab.first, ab.second);
        v *= Rational(f.sign());
        b = bil.emplace(ab, std::move(v)).first;
      }
      img = mul(img, b->second);
    }
    sp.ech.insert(static_cast<int>(i),
                  std::map<Mono, Rational>(img.terms().begin(), img.terms().end()));
  }
  return cache.emplace(key, std::move(sp)).first->second;
}

}  // namespace

QPoly lift(const VPoly& e, const Family& f, int degree2k) {
  if (degree2k % 2 != 0 || degree2k < 2) throw std::invalid_argument("lift degree must be even");
  VPoly top = e.degree_component(degree2k);
  if (top.is_zero()) return QPoly();
  const int wt2 = top.weight2();
  if (wt2 % 2 != 0) throw std::runtime_error("not liftable: half-integral weight");
  LiftSpace& sp = lift_space(f, wt2 / 2, degree2k / 2);
  auto combo = sp.ech.express(std::map<Mono, Rational>(top.terms().begin(), top.terms().end()));
  if (!combo) throw std::runtime_error("not liftable: element outside the invariant span");
  QPoly r;
  for (auto& [i, c] : *combo) r.add_term(sp.cand[i], c);
  return r;
}

RelationResult build_relation(const Family& f, const QPoly& classical, Ordering ord,
                              const std::string& indices) {
  RelationResult res;
  res.family = f;
  res.indices = indices;
  res.classical = classical;
  res.weight = classical.weight();
  WPoly P = normal_order(classical, ord);
  VPoly e = realize(f, P);
  int guard = 2 * classical.degree();
  while (!e.is_zero()) {
    const int d = e.max_degree();
    if (d >= guard) throw std::runtime_error("correction loop did not lower the degree");
    if (d == 0 || d % 2) throw std::runtime_error("not liftable: residual of odd or zero degree");
    WPoly L = normal_order(lift(e, f, d), ord);
    P -= L;
    e -= realize(f, L);
    guard = d;
    ++res.passes;
  }
  res.relation = P;
  for (int k = 1; k <= P.max_degree(); ++k) {
    WPoly c = P.degree_component(k);
    if (!c.is_zero()) res.by_degree.emplace(2 * k, std::move(c));
  }
  res.kernel_ok = realize(f, P).is_zero();
  if (res.weight % 2 == 0) {
    Rational r = pr(res.weight - 1, P.degree_component(1));
    if (f.group == Group::O && f.n % 2) r = -r;
    res.remainder = r;
  }
  return res;
}

namespace {

int max_w_index(const WPoly& p) {
  int m = -1;
  for (const auto& [w, c] : p.terms())
    for (const WGen& g : w) m = std::max(m, g.is_w ? g.x : g.x + g.y);
  return m;
}

}  // namespace

Decoupling extract_decoupling(const RelationResult& r) {
  if (!r.remainder || *r.remainder == 0)
    throw std::runtime_error("no decoupling at this weight: zero remainder");
  const int m = r.weight - 1;
  WPoly x = to_w_basis(r.relation);
  x *= 1 / pr(m, r.relation.degree_component(1));
  Decoupling d{r.family, m, WPoly::gen(WGen::W(m)) - x};
  if (max_w_index(d.expression) >= m)
    throw std::runtime_error("relation does not isolate the top generator");
  return d;
}

namespace {

// Replaces generators W^j with mmin <= j, highest first, by their decouplings.
WPoly eliminate(const Family& f, WPoly p, const std::map<int, Decoupling>& known, int mmin) {
  while (true) {
    p = to_w_basis(p);
    int top = -1;
    for (const auto& [w, c] : p.terms())
      for (const WGen& g : w)
        if (g.x >= mmin) top = std::max(top, g.x);
    if (top < 0) return p;
    auto dec = known.find(top);
    if (dec == known.end())
      throw std::runtime_error("missing prerequisite decoupling for W" + std::to_string(top));
    WPoly next;
    for (const auto& [w, c] : p.terms()) {
      std::size_t pos = w.size();
      for (std::size_t i = w.size(); i-- > 0;)
        if (w[i].x == top) {
          pos = i;
          break;
        }
      if (pos == w.size()) {
        next.add_term(w, c);
      } else if (pos + 1 < w.size()) {
        WPoly s = swap_factors(f, w, pos);
        s *= c;
        next += s;
      } else {
        Word prefix(w.begin(), w.end() - 1);
        WPoly sub = derive(dec->second.expression, w.back().k);
        for (const auto& [sw, sc] : sub.terms()) {
          Word nw = prefix;
          nw.insert(nw.end(), sw.begin(), sw.end());
          next.add_term(nw, c * sc);
        }
      }
    }
    p = std::move(next);
  }
}

}  // namespace

Decoupling raise_decoupling(const Decoupling& d, const Family& f,
                            const std::map<int, Decoupling>& known) {
  if (known.empty()) throw std::runtime_error("missing prerequisite decoupling");
  const int mmin = known.begin()->first;
  for (int j = mmin; j <= d.m; j += 2)
    if (!known.count(j))
      throw std::runtime_error("missing prerequisite decoupling for W" + std::to_string(j));
  if (!(d.family == f)) throw std::runtime_error("decoupling belongs to another family");
  const int target = d.m + 2;
  WPoly x = WPoly::gen(WGen::W(d.m)) - d.expression;
  WPoly y = to_w_basis(act(f, WGen::W(3), 1, x));
  Rational r = 0;
  for (const auto& [w, c] : y.terms())
    if (w.size() == 1 && w[0] == WGen::W(target)) r += c;
  if (r == 0) throw std::runtime_error("raising produced no top generator");
  WPoly e = WPoly::gen(WGen::W(target));
  y *= 1 / r;
  e -= y;
  return Decoupling{f, target, eliminate(f, e, known, mmin)};
}

bool decoupling_holds(const Decoupling& d) {
  return realize(d.family, WPoly::gen(WGen::W(d.m)) - d.expression).is_zero();
}

namespace {

struct FixtureTerm {
  int num;
  int den;
  std::vector<std::pair<int, int>> word;
};

const std::vector<FixtureTerm>& table8() {
  static const std::vector<FixtureTerm> t = {
    {1, 1, {{0, 1}, {0, 1}, {2, 3}, {2, 3}}},
    {1, 1, {{0, 2}, {0, 2}, {1, 3}, {1, 3}}},
    {1, 1, {{0, 3}, {0, 3}, {1, 2}, {1, 2}}},
    {-2, 1, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}},
    {2, 1, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}},
    {-2, 1, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}},
  };
  return t;
}

const std::vector<FixtureTerm>& table6() {
  static const std::vector<FixtureTerm> t = {
    {-13, 84, {{0, 1}, {0, 1}, {2, 9}}},
    {11, 60, {{0, 1}, {0, 1}, {3, 8}}},
    {-2, 35, {{0, 1}, {0, 2}, {2, 8}}},
    {1, 12, {{0, 1}, {0, 2}, {3, 7}}},
    {11, 30, {{0, 1}, {0, 3}, {2, 7}}},
    {-9, 20, {{0, 1}, {0, 3}, {3, 6}}},
    {-11, 28, {{0, 1}, {1, 2}, {2, 7}}},
    {1, 2, {{0, 1}, {1, 2}, {3, 6}}},
    {1, 12, {{0, 1}, {1, 3}, {2, 6}}},
    {-2, 15, {{0, 1}, {1, 3}, {3, 5}}},
    {-5, 12, {{0, 1}, {2, 3}, {1, 6}}},
    {-1, 5, {{0, 1}, {2, 3}, {2, 5}}},
    {11, 12, {{0, 1}, {2, 3}, {3, 4}}},
    {1, 35, {{0, 2}, {0, 2}, {1, 8}}},
    {-1, 15, {{0, 2}, {0, 2}, {3, 6}}},
    {-11, 30, {{0, 2}, {0, 3}, {1, 7}}},
    {7, 12, {{0, 2}, {0, 3}, {3, 5}}},
    {11, 28, {{0, 2}, {1, 2}, {1, 7}}},
    {-7, 10, {{0, 2}, {1, 2}, {3, 5}}},
    {1, 3, {{0, 2}, {1, 3}, {1, 6}}},
    {-1, 4, {{0, 2}, {1, 3}, {2, 5}}},
    {-1, 12, {{0, 2}, {1, 3}, {3, 4}}},
    {9, 20, {{0, 2}, {2, 3}, {1, 5}}},
    {9, 40, {{0, 3}, {0, 3}, {1, 6}}},
    {-7, 24, {{0, 3}, {0, 3}, {2, 5}}},
    {-11, 12, {{0, 3}, {1, 2}, {1, 6}}},
    {19, 20, {{0, 3}, {1, 2}, {2, 5}}},
    {1, 3, {{0, 3}, {1, 2}, {3, 4}}},
    {-11, 56, {{1, 2}, {1, 2}, {0, 7}}},
    {5, 8, {{1, 2}, {1, 2}, {3, 4}}},
    {2, 15, {{0, 3}, {1, 3}, {1, 5}}},
    {-1, 4, {{0, 3}, {1, 3}, {2, 4}}},
    {1, 12, {{1, 2}, {1, 3}, {0, 6}}},
    {-7, 12, {{0, 3}, {1, 4}, {2, 3}}},
    {5, 12, {{0, 3}, {2, 3}, {2, 3}}},
    {-9, 20, {{1, 2}, {0, 5}, {2, 3}}},
    {-3, 4, {{1, 2}, {2, 3}, {2, 3}}},
    {7, 12, {{0, 4}, {1, 3}, {2, 3}}},
    {-1, 15, {{1, 3}, {1, 3}, {0, 5}}},
    {1, 3, {{1, 3}, {1, 3}, {2, 3}}},
  };
  return t;
}

const std::vector<FixtureTerm>& table4() {
  static const std::vector<FixtureTerm> t = {
    {19, 432, {{0, 1}, {1, 12}}},
    {-113, 6720, {{0, 1}, {2, 11}}},
    {-569, 8640, {{0, 1}, {3, 10}}},
    {143, 1008, {{0, 1}, {4, 9}}},
    {-23, 700, {{0, 1}, {5, 8}}},
    {-559, 2016, {{0, 1}, {6, 7}}},
    {-151, 20160, {{0, 2}, {1, 11}}},
    {-1, 252, {{0, 2}, {2, 10}}},
    {-55, 576, {{0, 2}, {3, 9}}},
    {1, 420, {{0, 2}, {4, 8}}},
    {851, 2400, {{0, 2}, {5, 7}}},
    {-713, 6720, {{0, 3}, {1, 10}}},
    {-751, 20160, {{0, 3}, {2, 9}}},
    {163, 672, {{0, 3}, {3, 8}}},
    {-73, 1440, {{0, 3}, {4, 7}}},
    {-49, 100, {{0, 3}, {5, 6}}},
    {-163, 4032, {{1, 2}, {0, 11}}},
    {17, 336, {{1, 2}, {1, 10}}},
    {1639, 10080, {{1, 2}, {2, 9}}},
    {-227, 2240, {{1, 2}, {3, 8}}},
    {-55, 168, {{1, 2}, {4, 7}}},
    {7, 32, {{1, 2}, {5, 6}}},
    {1, 60, {{0, 4}, {2, 8}}},
    {-7, 288, {{0, 4}, {3, 7}}},
    {467, 60480, {{1, 3}, {0, 10}}},
    {-13, 756, {{1, 3}, {1, 9}}},
    {31, 2240, {{1, 3}, {2, 8}}},
    {47, 1260, {{1, 3}, {3, 7}}},
    {-1, 32, {{1, 3}, {4, 6}}},
    {-1, 525, {{0, 5}, {1, 8}}},
    {-33, 400, {{0, 5}, {2, 7}}},
    {761, 7200, {{0, 5}, {3, 6}}},
    {11, 96, {{1, 4}, {2, 7}}},
    {-7, 48, {{1, 4}, {3, 6}}},
    {-27, 448, {{2, 3}, {0, 9}}},
    {131, 2240, {{2, 3}, {1, 8}}},
    {-31, 84, {{2, 3}, {2, 7}}},
    {37, 72, {{2, 3}, {3, 6}}},
    {-89, 480, {{2, 3}, {4, 5}}},
    {11, 720, {{0, 6}, {1, 7}}},
    {-7, 288, {{0, 6}, {3, 5}}},
    {-11, 420, {{1, 5}, {1, 7}}},
    {-3, 160, {{1, 5}, {2, 6}}},
    {23, 300, {{1, 5}, {3, 5}}},
    {11, 224, {{2, 4}, {1, 7}}},
    {-7, 80, {{2, 4}, {3, 5}}},
    {-99, 2240, {{0, 7}, {1, 6}}},
    {11, 192, {{0, 7}, {2, 5}}},
    {31, 288, {{1, 6}, {1, 6}}},
    {-109, 480, {{1, 6}, {2, 5}}},
    {35, 576, {{1, 6}, {3, 4}}},
    {151, 800, {{2, 5}, {2, 5}}},
    {-87, 320, {{2, 5}, {3, 4}}},
    {37, 288, {{3, 4}, {3, 4}}},
  };
  return t;
}

WPoly from_table(const std::vector<FixtureTerm>& t) {
  WPoly p;
  for (const auto& term : t) {
    Word w;
    for (auto [a, b] : term.word) w.push_back(WGen::Om(a, b));
    p.add_term(w, frac(term.num, term.den));
  }
  return p;
}

WPoly table2() {
  WPoly p = WPoly::gen(WGen::Om(0, 15), frac(109, 56000));
  const std::vector<std::tuple<int, int, long, long>> inner = {
      {0, 13, 36613, 26208000},        {1, 12, 63901699, 6054048000},
      {2, 11, -293340107, 12108096000}, {3, 10, 27769129, 1345344000},
      {4, 9, -33135533, 403603200},     {5, 8, 286002151, 1210809600},
      {6, 7, -195930023, 605404800}};
  for (auto [a, b, num, den] : inner) {
    Rational c{Integer(num), Integer(den)};
    c.canonicalize();
    p += WPoly::gen(WGen::Om(a, b, 2), c);
  }
  return p;
}

}  // namespace

WPoly appendix_component(int degree2k) {
  switch (degree2k) {
    case 8: return from_table(table8());
    case 6: return from_table(table6());
    case 4: return from_table(table4());
    case 2: return table2();
  }
  throw std::invalid_argument("appendix components are 2, 4, 6, 8");
}

WPoly appendix_relation() {
  WPoly p;
  for (int d : {8, 6, 4, 2}) p += appendix_component(d);
  return p;
}

AppendixReport verify_appendix(const std::function<void(const std::string&)>& progress) {
  const Family f{Group::Osp, 1};
  AppendixReport rep;
  VPoly total;
  for (int d : {8, 6, 4, 2}) {
    WPoly c = appendix_component(d);
    rep.words += c.size();
    VPoly img = realize(f, c);
    if (progress)
      progress("P" + std::to_string(d) + ": " + std::to_string(c.size()) + " words, " +
               std::to_string(img.size()) + " free-field terms");
    total += img;
  }
  for (int d = 0; d <= total.max_degree(); ++d) {
    std::size_t n = total.degree_component(d).size();
    if (n) rep.residual_terms[d] = n;
  }
  rep.kernel_ok = total.is_zero();
  rep.remainder = pr(15, appendix_component(2));
  if (progress) progress(std::string("kernel ") + (rep.kernel_ok ? "ok" : "FAILED"));
  return rep;
}

}  // namespace wfree
