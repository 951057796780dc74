#include "wfree/acceptance.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wfree/classical.hpp"
#include "wfree/corrections.hpp"
#include "wfree/remainder.hpp"

namespace wfree {

namespace {

void note(const Progress& p, const std::string& s) {
  if (p) p(s);
}

// All strictly increasing lists of length len with entries in [0, top].
std::vector<std::vector<int>> increasing_lists(int len, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= top; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> weak_lists(int len, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= top; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Pfaffian and determinant-analogue expansions on unsorted lists.
QPoly pf_any(const std::vector<int>& I) {
  if (I.empty()) return QPoly(Rational(1));
  QPoly r;
  for (std::size_t k = 1; k < I.size(); ++k) {
    std::vector<int> rest;
    for (std::size_t t = 1; t < I.size(); ++t)
      if (t != k) rest.push_back(I[t]);
    QPoly term = QPoly::Q(I[0], I[k]) * pf_any(rest);
    if (k % 2 == 0) term *= Rational(-1);
    r += term;
  }
  return r;
}

QPoly det_any(const std::vector<int>& I, const std::vector<int>& J) {
  if (I.empty()) return QPoly(Rational(1));
  QPoly r;
  std::vector<int> Jp(J.begin() + 1, J.end());
  for (std::size_t k = 0; k < I.size(); ++k) {
    std::vector<int> rest;
    for (std::size_t t = 0; t < I.size(); ++t)
      if (t != k) rest.push_back(I[t]);
    r += QPoly::Q(I[k], J[0]) * det_any(rest, Jp);
  }
  return r;
}

CriterionResult c1(const Progress& p) {
  AppendixReport rep = verify_appendix(p);
  CriterionResult r{1, "appendix relation lies in the kernel with remainder 109/56000", false, ""};
  r.pass = rep.kernel_ok && rep.remainder == Rational(109, 56000);
  r.detail = "kernel_ok=" + std::string(rep.kernel_ok ? "true" : "false") +
             " remainder=" + to_string(rep.remainder) + " words=" + std::to_string(rep.words);
  return r;
}

CriterionResult c2(const Progress& p) {
  CriterionResult r{2, "closed and recursive symplectic remainders agree", true, ""};
  std::mt19937 rng(7);
  int cases = 0, bad = 0;
  std::string first;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& I : increasing_lists(2 * n + 2, 9)) {
      if (!is_balanced(I) || (n + 1 + sum(I)) % 2) continue;
      std::vector<int> J = I;
      for (int t = 0; t < 8; ++t) {
        if (t) std::shuffle(J.begin(), J.end(), rng);
        ++cases;
        if (rn_sym_closed(n, J) != rn_sym_recursive(n, J)) {
          if (!bad++) first = "n=" + std::to_string(n) + " I=" + join(J);
        }
      }
    }
    note(p, "n=" + std::to_string(n) + " done, " + std::to_string(cases) + " cases so far");
  }
  r.pass = bad == 0 && cases > 0;
  r.detail = std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches" +
             (bad ? " (first " + first + ")" : "");
  return r;
}

CriterionResult c3(const Progress& p) {
  CriterionResult r{3, "Sp(1) relation, remainder 1/6, w7 and w9 decouplings", false, ""};
  Family f{Group::Sp, 1};
  RelationResult rel = build_relation(f, pfaffian({0, 1, 2, 3}, 1), Ordering::Canonical, "0,1,2,3");
  note(p, "relation built in " + std::to_string(rel.passes) + " correction passes");
  Decoupling d7 = extract_decoupling(rel);
  bool low = true;
  for (const auto& [w, c] : d7.expression.terms())
    for (const WGen& g : w) low = low && g.is_w && g.x < 7;
  std::map<int, Decoupling> known{{7, d7}};
  Decoupling d9 = raise_decoupling(d7, f, known);
  bool ok7 = decoupling_holds(d7), ok9 = decoupling_holds(d9);
  r.pass = rel.weight == 8 && rel.kernel_ok && rel.remainder == Rational(1, 6) && d7.m == 7 && low &&
           ok7 && d9.m == 9 && ok9;
  r.detail = "weight=" + std::to_string(rel.weight) + " kernel_ok=" + (rel.kernel_ok ? "true" : "false") +
             " remainder=" + to_string(*rel.remainder) + " w7:" + (ok7 && low ? "ok" : "FAIL") +
             " w9:" + (ok9 ? "ok" : "FAIL");
  return r;
}

CriterionResult c4(const Progress& p) {
  CriterionResult r{4, "O(1) and O(2) relations, remainders, O(1) decoupling chain", false, ""};
  Family f1{Group::O, 1}, f2{Group::O, 2};
  RelationResult d1 = build_relation(f1, det_analog({0, 0}, {1, 1}, 1), Ordering::Canonical, "I=0,0 J=1,1");
  RelationResult d2 =
      build_relation(f2, det_analog({0, 0, 0}, {1, 1, 1}, 2), Ordering::Canonical, "I=0,0,0 J=1,1,1");
  Rational base = r1_orth({0, 0}, {1, 1});
  Rational rec = rn_orth_recursive(2, {0, 0, 0}, {1, 1, 1});
  note(p, "O(1) remainder " + to_string(*d1.remainder) + ", O(2) remainder " + to_string(*d2.remainder));

  Decoupling d = extract_decoupling(d1);
  std::map<int, Decoupling> known{{d.m, d}};
  bool chain = decoupling_holds(d);
  while (d.m < 7) {
    d = raise_decoupling(d, f1, known);
    known.emplace(d.m, d);
    chain = chain && decoupling_holds(d);
  }
  for (const auto& [m, dec] : known)
    for (const auto& [w, c] : dec.expression.terms())
      for (const WGen& g : w) chain = chain && g.is_w && g.x == 1;

  bool ok1 = d1.weight == 4 && d1.kernel_ok && *d1.remainder == base;
  bool ok2 = d2.weight == 6 && d2.kernel_ok && *d2.remainder == rec;
  r.pass = ok1 && ok2 && chain;
  r.detail = "O(1): kernel_ok=" + std::string(d1.kernel_ok ? "true" : "false") + " remainder=" +
             to_string(*d1.remainder) + " base=" + to_string(base) +
             "; O(2): kernel_ok=" + (d2.kernel_ok ? "true" : "false") + " remainder=" +
             to_string(*d2.remainder) + " recursion=" + to_string(rec) +
             "; chain w3,w5,w7 in w1: " + (chain ? "ok" : "FAIL");
  return r;
}

CriterionResult c5(const Progress& p) {
  CriterionResult r{5, "remainders independent of the normal ordering", false, ""};
  int cases = 0, bad = 0;
  std::string first;
  auto check = [&](const Family& f, const QPoly& q, const std::string& label) {
    RelationResult a = build_relation(f, q, Ordering::Canonical);
    RelationResult b = build_relation(f, q, Ordering::Reversed);
    ++cases;
    if (!a.kernel_ok || !b.kernel_ok || a.remainder != b.remainder)
      if (!bad++) first = label;
  };
  for (const auto& I : increasing_lists(4, 10)) {
    if (2 + sum(I) > 12 || sum(I) % 2) continue;
    check({Group::Sp, 1}, pfaffian(I, 1), "Sp(1) I=" + join(I));
  }
  note(p, "Sp(1): " + std::to_string(cases) + " relations");
  for (const auto& I : weak_lists(2, 10))
    for (const auto& J : weak_lists(2, 10)) {
      if (2 + sum(I) + sum(J) > 12 || (sum(I) + sum(J)) % 2) continue;
      QPoly q = det_analog(I, J, 1);
      if (q.is_zero()) continue;
      check({Group::O, 1}, q, "O(1) I=" + join(I) + " J=" + join(J));
    }
  r.pass = bad == 0 && cases > 0;
  r.detail = std::to_string(cases) + " relations, " + std::to_string(bad) + " disagreements" +
             (bad ? " (first " + first + ")" : "");
  return r;
}

CriterionResult c6(const Progress&) {
  CriterionResult r{6, "remainder and relation symmetries", true, ""};
  int checks = 0;
  std::vector<std::string> fails;
  // Swapping the even and odd entries of each pair.
  for (int n = 1; n <= 3; ++n)
    for (const auto& I : increasing_lists(2 * n + 2, 9)) {
      if (!is_balanced(I) || (n + 1 + sum(I)) % 2) continue;
      std::vector<int> ev, od, inter, swapped;
      for (int x : I) (x % 2 ? od : ev).push_back(x);
      for (int k = 0; k <= n; ++k) {
        inter.insert(inter.end(), {ev[k], od[k]});
        swapped.insert(swapped.end(), {od[k], ev[k]});
      }
      ++checks;
      if (rn_sym_recursive(n, inter) != sign_pow(n + 1) * rn_sym_recursive(n, swapped))
        fails.push_back("swap " + join(inter));
    }
  for (int n = 1; n <= 3; ++n)
    for (const auto& I : increasing_lists(2 * n + 2, 8)) {
      if (is_balanced(I) || (n + 1 + sum(I)) % 2) continue;
      ++checks;
      if (rn_sym_recursive(n, I) != 0 || rn_sym_closed(n, I) != 0) fails.push_back("unbalanced " + join(I));
    }
  for (int n = 1; n <= 2; ++n)
    for (const auto& I : increasing_lists(2 * n + 2, 6)) {
      QPoly p = pfaffian(I, n);
      for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = a + 1; b < I.size(); ++b) {
          std::vector<int> J = I;
          std::swap(J[a], J[b]);
          ++checks;
          if (!(pf_any(J) + p).is_zero() || !(pf_any(I) - p).is_zero())
            fails.push_back("pfaffian " + join(J));
        }
    }
  for (int n = 1; n <= 2; ++n)
    for (const auto& I : weak_lists(n + 1, 4))
      for (const auto& J : weak_lists(n + 1, 4)) {
        QPoly d = det_analog(I, J, n);
        for (std::size_t a = 0; a < I.size(); ++a)
          for (std::size_t b = a + 1; b < I.size(); ++b) {
            std::vector<int> I2 = I, J2 = J;
            std::swap(I2[a], I2[b]);
            std::swap(J2[a], J2[b]);
            ++checks;
            if (!(det_any(I2, J) - d).is_zero() || !(det_any(I, J2) - d).is_zero())
              fails.push_back("det_analog " + join(I) + ";" + join(J));
          }
      }
  r.pass = fails.empty();
  r.detail = std::to_string(checks) + " checks, " + std::to_string(fails.size()) + " failures" +
             (fails.empty() ? "" : " (first " + fails.front() + ")");
  return r;
}

CriterionResult c7(const Progress&) {
  CriterionResult r{7, "constant-term identity at n=2", true, ""};
  std::ostringstream os;
  for (const auto& I : std::vector<std::vector<int>>{{0, 1, 2, 3}, {0, 1, 4, 5}}) {
    Rational lim = limit_remainder(2, I);
    Rational rhs = frac(2, 2 + sum(I)) * rn_sym_recursive(1, I);
    r.pass = r.pass && lim == rhs;
    if (os.tellp() > 0) os << "; ";
    os << "I=" << join(I) << ": limit=" << to_string(lim) << " expected=" << to_string(rhs);
  }
  r.detail = os.str();
  return r;
}

CriterionResult c8(const Progress&) {
  CriterionResult r{8, "raising matrices invertible with positive adjacent minors", true, ""};
  int mats = 0;
  std::string first;
  for (int m = 0; m <= 6; ++m)
    for (int w = 1; w <= 6; ++w) {
      RationalMatrix M = mw_matrix(m, w);
      ++mats;
      bool ok = determinant(M) != 0;
      for (int i = 0; i + 1 <= m; ++i)
        for (int j = 0; j + 1 <= m; ++j)
          ok = ok && M(i, j) * M(i + 1, j + 1) - M(i, j + 1) * M(i + 1, j) > 0;
      if (!ok && first.empty()) first = "m=" + std::to_string(m) + " w=" + std::to_string(w);
      r.pass = r.pass && ok;
    }
  r.detail = std::to_string(mats) + " matrices" + (first.empty() ? "" : ", first failure " + first);
  return r;
}

CriterionResult c9(const Progress& p) {
  CriterionResult r{9, "classical relations vanish in the invariant rings", true, ""};
  int count = 0;
  std::string first;
  auto check = [&](const QPoly& q, const Family& f, const std::string& label) {
    ++count;
    if (!eval_classical(q, f, q.max_index()).is_zero()) {
      r.pass = false;
      if (first.empty()) first = label;
    }
  };
  for (int n = 1; n <= 2; ++n)
    for (const auto& I : increasing_lists(2 * n + 2, 5))
      check(pfaffian(I, n), {Group::Sp, n}, "pfaffian " + join(I));
  note(p, "pfaffians done");
  for (int n = 1; n <= 3; ++n)
    for (const auto& I : weak_lists(n + 1, 4))
      for (const auto& J : weak_lists(n + 1, 4)) {
        QPoly d = det_analog(I, J, n);
        if (!d.is_zero()) check(d, {Group::O, n}, "det_analog " + join(I) + ";" + join(J));
      }
  note(p, "determinant analogues done");
  check(sergeev_minimal(), {Group::Osp, 1}, "sergeev");
  r.detail = std::to_string(count) + " relations" + (first.empty() ? "" : ", first failure " + first);
  return r;
}

// Random homogeneous element of doubled weight w2 and fixed odd count parity.
VPoly random_element(std::mt19937& rng, const Family& f, int w2, int parity) {
  std::vector<Kind> kinds;
  if (f.group != Group::O) kinds.insert(kinds.end(), {Kind::Beta, Kind::Gamma});
  if (f.group != Group::Sp) kinds.push_back(Kind::Phi);
  const int colors = f.group == Group::Osp ? 0 : f.n;
  VPoly out;
  std::uniform_int_distribution<int> coin(-3, 3);
  for (int tries = 0; tries < 200 && out.size() < 3; ++tries) {
    Mono m;
    int left = w2, odd = 0;
    while (left > 0) {
      Kind k = kinds[rng() % kinds.size()];
      int color = k == Kind::Phi && f.group == Group::Osp ? 1 : 1 + static_cast<int>(rng() % std::max(colors, 1));
      int maxd = (left - 1) / 2;
      int d = maxd ? static_cast<int>(rng() % (maxd + 1)) : 0;
      m.emplace_back(k, color, d);
      left -= 2 * d + 1;
      odd += k == Kind::Phi;
    }
    if (left != 0 || odd % 2 != parity) continue;
    int s = canonicalize(m);
    int c = coin(rng);
    if (s && c) out.add_term(m, Rational(s * c));
  }
  return out;
}

CriterionResult c10(const Progress& p) {
  CriterionResult r{10, "circle product identities on random elements", true, ""};
  std::mt19937 rng(20260101);
  int pairs = 0;
  std::vector<std::string> fails;
  for (Family f : {Family{Group::Sp, 1}, Family{Group::O, 2}, Family{Group::Osp, 1}}) {
    int done = 0;
    while (done < 500) {
      int wa = 1 + static_cast<int>(rng() % 10), wb = 1 + static_cast<int>(rng() % 10);
      int pa = f.group == Group::Sp ? 0 : static_cast<int>(rng() % 2);
      int pb = f.group == Group::Sp ? 0 : static_cast<int>(rng() % 2);
      if (f.group == Group::O) {
        pa = wa % 2;
        pb = wb % 2;
      }
      VPoly a = random_element(rng, f, wa, pa), b = random_element(rng, f, wb, pb);
      if (a.is_zero() || b.is_zero()) continue;
      ++done;
      ++pairs;
      const int sab = (pa && pb) ? -1 : 1;
      const int N = (wa + wb) / 2;
      std::string tag = f.name() + " pair " + std::to_string(done);
      for (int n = N; n < N + 3; ++n)
        if (!circle(a, n, b).is_zero()) fails.push_back(tag + " locality");
      std::map<int, VPoly> ab, ba;
      for (int n = -3; n < N; ++n) {
        ab[n] = circle(a, n, b);
        ba[n] = circle(b, n, a);
      }
      for (int n = -3; n < N; ++n) {
        const VPoly& x = ab[n];
        if (!x.is_zero()) {
          if (x.weight2() != wa + wb - 2 * (n + 1)) fails.push_back(tag + " weight");
          int bound = a.max_degree() + b.max_degree() - (n >= 0 ? 2 : 0);
          if (x.max_degree() > bound) fails.push_back(tag + " filtration");
        }
        if (n < 0) continue;
        VPoly rhs;
        for (int k = 0; n + k < N; ++k) {
          VPoly t = derive(ba[n + k], k);
          t *= sab * sign_pow(n + k + 1) * inv_factorial(k);
          rhs += t;
        }
        if (!(x - rhs).is_zero()) fails.push_back(tag + " skew-symmetry n=" + std::to_string(n));
      }
      VPoly qc = ab[-1] - sab * ba[-1];
      for (int k = 0; k < N; ++k) {
        VPoly t = derive(ab[k], k + 1);
        t *= sign_pow(k) * inv_factorial(k + 1);
        qc -= t;
      }
      if (!qc.is_zero()) fails.push_back(tag + " quasi-commutativity");
    }
    note(p, f.name() + " done");
  }
  r.pass = fails.empty();
  r.detail = std::to_string(pairs) + " pairs, " + std::to_string(fails.size()) + " failures" +
             (fails.empty() ? "" : " (first " + fails.front() + ")");
  return r;
}

CriterionResult c11(const Progress&) {
  CriterionResult r{11, "raising-operator and weight-three identities in realization", true, ""};
  std::ostringstream os;
  Family sp{Group::Sp, 1};
  VPoly w3 = realize(sp, WGen::W(3));
  int good = 0;
  std::string coeffs;
  for (int m = 0; m <= 4; ++m) {
    VPoly x = circle(w3, 1, realize(sp, WGen::W(2 * m + 1)));
    SparseEchelon<Mono> span;
    for (int k = 0; k <= m + 1; ++k) {
      VPoly v = realize(sp, WGen::W(2 * m + 3 - 2 * k, 2 * k));
      span.insert(k, std::map<Mono, Rational>(v.terms().begin(), v.terms().end()));
    }
    auto c = span.express(std::map<Mono, Rational>(x.terms().begin(), x.terms().end()));
    Rational top = c && c->count(0) ? c->at(0) : Rational(0);
    bool ok = c.has_value() && top == -(2 * m + 2);
    good += ok;
    r.pass = r.pass && ok;
    coeffs += (m ? "," : "") + (c ? to_string(top) : std::string("?"));
  }
  os << "raising " << good << "/5 (expected -(2m+2), top coefficients m=0..4: " << coeffs << ");";
  os << " weight-three identity:";
  for (Family f : {Family{Group::Sp, 1}, Family{Group::O, 1}, Family{Group::O, 2}, Family{Group::Osp, 1}}) {
    VPoly g3 = realize(f, WGen::W(3));
    VPoly x = circle(g3, 5, g3);
    x *= Rational(1, 360);
    bool ok = (realize(f, WGen::W(1)) - x).is_zero();
    r.pass = r.pass && ok;
    os << " " << f.name() << (ok ? " ok" : " FAIL");
  }
  r.detail = os.str();
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const Progress& progress) {
  switch (id) {
    case 1: return c1(progress);
    case 2: return c2(progress);
    case 3: return c3(progress);
    case 4: return c4(progress);
    case 5: return c5(progress);
    case 6: return c6(progress);
    case 7: return c7(progress);
    case 8: return c8(progress);
    case 9: return c9(progress);
    case 10: return c10(progress);
    case 11: return c11(progress);
  }
  throw std::out_of_range("no criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance(const Progress& progress) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 11; ++id) {
    try {
      out.push_back(run_criterion(id, progress));
    } catch (const std::exception& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what()});
    }
  }
  return out;
}

}  // namespace wfree
