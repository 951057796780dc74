#include <catch_amalgamated.hpp>

#include "printers.hpp"

#include <random>

#include "fock_oracle.hpp"
#include "test_util.hpp"
#include "wfree/parse.hpp"

using namespace wfree;
using testutil::random_vpoly;

namespace {

VPoly g(Kind k, int color = 1, int d = 0) { return VPoly::gen(GenSym(k, color, d)); }
VPoly beta(int d = 0) { return g(Kind::Beta, 1, d); }
VPoly gamma(int d = 0) { return g(Kind::Gamma, 1, d); }
VPoly phi(int d = 0, int color = 1) { return g(Kind::Phi, color, d); }

}  // namespace

TEST_CASE("generator OPEs", "[freefield]") {
  CHECK(circle(beta(), 0, gamma()) == VPoly(Rational(1)));
  CHECK(circle(gamma(), 0, beta()) == VPoly(Rational(-1)));
  CHECK(circle(phi(), 0, phi()) == VPoly(Rational(1)));
  CHECK(circle(phi(0, 1), 0, phi(0, 2)).is_zero());
  CHECK(ope_all(beta(), beta()).empty());
  CHECK(ope_all(g(Kind::Beta, 1), g(Kind::Gamma, 2)).empty());
}

TEST_CASE("derivative and unit laws", "[freefield]") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    VPoly a = random_vpoly(rng, {Group::Osp, 1}, 1 + t % 6, t % 2);
    CHECK(circle(a, -2, VPoly(Rational(1))) == derive(a));
    CHECK(wick(VPoly(Rational(1)), a) == a);
  }
  CHECK(derive(VPoly(Rational(1))).is_zero());
  CHECK(derive(beta(2)) == beta(3));
  CHECK(to_text(derive(parse_vpoly(":b1[0] g1[0]:"))) == "1 * :b1[0] g1[1]: + 1 * :b1[1] g1[0]:");
}

TEST_CASE("odd generators square to zero and anticommute", "[freefield]") {
  CHECK(parse_vpoly(":f[0] f[0]:").is_zero());
  CHECK(parse_vpoly(":f[1] f[0]:") == -parse_vpoly(":f[0] f[1]:"));
  Mono m{GenSym(Kind::Phi, 1, 2), GenSym(Kind::Beta, 1, 0), GenSym(Kind::Phi, 1, 0)};
  CHECK(canonicalize(m) == -1);
  CHECK(m == Mono{GenSym(Kind::Beta, 1, 0), GenSym(Kind::Phi, 1, 0), GenSym(Kind::Phi, 1, 2)});
}

TEST_CASE("Virasoro-type central term of the weight-two bilinear", "[freefield]") {
  VPoly w1 = realize({Group::Sp, 1}, WGen::W(1));
  CHECK(circle(w1, 3, w1) == VPoly(frac(-1, 2)));
  VPoly t = ope_all(w1, beta()).at(1);
  CHECK(t == frac(1, 2) * beta());
  CHECK(ope_all(w1, beta()).at(0) == derive(beta()));
}

TEST_CASE("Wick product of gamma and beta", "[freefield]") {
  VPoly gb = wick(gamma(), beta());
  CHECK(gb == parse_vpoly(":b1[0] g1[0]:"));
  VPoly bg = wick(beta(), gamma());
  VPoly rhs;
  for (auto& [k, v] : ope_all(beta(), gamma())) rhs += sign_pow(k) * inv_factorial(k + 1) * derive(v, k + 1);
  CHECK(bg - gb == rhs);
}

TEST_CASE("circle products agree with the mode-algebra oracle", "[freefield][oracle]") {
  std::mt19937 rng(11);
  for (Family f : {Family{Group::Sp, 1}, Family{Group::Sp, 2}, Family{Group::O, 2}, Family{Group::Osp, 1}}) {
    for (int t = 0; t < 60; ++t) {
      // Left operand: generators or bilinears only.
      int wa = 1 + static_cast<int>(rng() % 6);
      int pa = f.group == Group::Sp ? 0 : (f.group == Group::O ? 0 : static_cast<int>(rng() % 2));
      VPoly a;
      for (int tries = 0; tries < 50 && a.size() < 2; ++tries) {
        VPoly c = random_vpoly(rng, f, wa, pa, 1);
        if (!c.is_zero() && c.terms().begin()->first.size() <= 2 &&
            (a.is_zero() || c.terms().begin()->first.size() == a.terms().begin()->first.size()))
          a += c;
      }
      if (f.group == Group::O) {
        a = random_vpoly(rng, f, 2 * (1 + static_cast<int>(rng() % 3)), 0, 1);
        if (!a.is_zero() && a.terms().begin()->first.size() != 2) continue;
      }
      if (a.is_zero()) continue;
      int wb = 1 + static_cast<int>(rng() % 6);
      int pb = f.group == Group::Sp ? 0 : (f.group == Group::O ? wb % 2 : static_cast<int>(rng() % 2));
      VPoly b = random_vpoly(rng, f, wb, pb);
      if (b.is_zero()) continue;
      for (int n = -3; n <= (a.weight2() + b.weight2()) / 2; ++n) {
        INFO(f.name() << " a=" << to_text(a) << " b=" << to_text(b) << " n=" << n);
        CHECK(circle(a, n, b) == fock::circle(a, n, b));
      }
    }
  }
}

TEST_CASE("skew-symmetry, quasi-commutativity, locality, weight and filtration", "[freefield][property]") {
  std::mt19937 rng(13);
  for (Family f : {Family{Group::Sp, 1}, Family{Group::O, 2}, Family{Group::Osp, 1}}) {
    for (int t = 0; t < 40; ++t) {
      int wa = 1 + static_cast<int>(rng() % 10), wb = 1 + static_cast<int>(rng() % 10);
      int pa = f.group == Group::Sp ? 0 : (f.group == Group::O ? wa % 2 : static_cast<int>(rng() % 2));
      int pb = f.group == Group::Sp ? 0 : (f.group == Group::O ? wb % 2 : static_cast<int>(rng() % 2));
      VPoly a = random_vpoly(rng, f, wa, pa), b = random_vpoly(rng, f, wb, pb);
      if (a.is_zero() || b.is_zero()) continue;
      const int s = (pa && pb) ? -1 : 1;
      const int N = (wa + wb) / 2;
      INFO(f.name() << " a=" << to_text(a) << " b=" << to_text(b));
      CHECK(circle(a, N, b).is_zero());
      CHECK(circle(a, N + 1, b).is_zero());
      for (int n = -2; n < N; ++n) {
        VPoly x = circle(a, n, b);
        if (!x.is_zero()) {
          CHECK(x.weight2() == wa + wb - 2 * (n + 1));
          CHECK(x.max_degree() <= a.max_degree() + b.max_degree() - (n >= 0 ? 2 : 0));
        }
        if (n < 0) continue;
        VPoly rhs;
        for (int k = 0; n + k < N; ++k)
          rhs += (s * sign_pow(n + k + 1)) * inv_factorial(k) * derive(circle(b, n + k, a), k);
        CHECK(x == rhs);
      }
      VPoly qc = wick(a, b) - s * wick(b, a);
      for (int k = 0; k < N; ++k) qc -= sign_pow(k) * inv_factorial(k + 1) * derive(circle(a, k, b), k + 1);
      CHECK(qc.is_zero());
    }
  }
}

TEST_CASE("degree components reconstruct the element", "[freefield]") {
  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t) {
    VPoly a = random_vpoly(rng, {Group::Osp, 1}, 6, 0, 5);
    VPoly sum;
    for (int d = 0; d <= a.max_degree(); ++d) sum += a.degree_component(d);
    CHECK(sum == a);
  }
}
