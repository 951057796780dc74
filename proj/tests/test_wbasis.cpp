#include <catch_amalgamated.hpp>

#include "printers.hpp"

#include <random>

#include "test_util.hpp"
#include "wfree/parse.hpp"

using namespace wfree;

namespace {

const std::vector<Family> kFamilies = {{Group::Sp, 1}, {Group::Sp, 2}, {Group::O, 1},
                                       {Group::O, 2},  {Group::Osp, 1}, {Group::Osp, 2}};

}  // namespace

TEST_CASE("family data", "[wbasis]") {
  CHECK(Family{Group::Sp, 3}.central_charge() == -3);
  CHECK(Family{Group::O, 3}.central_charge() == frac(3, 2));
  CHECK(Family{Group::Osp, 2}.central_charge() == frac(-3, 2));
  CHECK(Family{Group::Sp, 2}.minimal_relation_weight() == 18);
  CHECK(Family{Group::O, 2}.minimal_relation_weight() == 6);
  CHECK(Family{Group::Osp, 1}.minimal_relation_weight() == 16);
  CHECK(Family{Group::Osp, 1}.relation_degree() == 4);
  CHECK_THROWS(parse_family("g2", 1));
  CHECK_THROWS(parse_family("sp", 0));
}

TEST_CASE("realization of the lowest generator", "[wbasis]") {
  CHECK(realize({Group::Sp, 1}, WGen::W(1)) == parse_vpoly("1/2 * :b1[0] g1[1]: - 1/2 * :b1[1] g1[0]:"));
  CHECK(realize({Group::O, 1}, WGen::W(1)) == parse_vpoly("-1/2 * :f[0] f[1]:"));
  CHECK(realize({Group::Osp, 1}, WGen::W(1)) ==
        parse_vpoly("1/2 * :b1[0] g1[1]: - 1/2 * :b1[1] g1[0]: - 1/2 * :f[0] f[1]:"));
  CHECK(realize({Group::Sp, 1}, WPoly()).is_zero());
}

TEST_CASE("central charges from the fourth-order pole", "[wbasis]") {
  for (const Family& f : kFamilies) {
    VPoly w1 = realize(f, WGen::W(1));
    CHECK(circle(w1, 3, w1) == VPoly(f.central_charge() / 2));
  }
}

TEST_CASE("A_m bases and omega coordinates", "[wbasis]") {
  for (int m = 1; m <= 10; ++m) CHECK(static_cast<int>(am_basis(m).size()) == (m + 1) / 2);
  for (int m = 1; m <= 9; m += 2) {
    auto c = omega_coords(0, m);
    CHECK(c.front() == 1);
    for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i] == 0);
  }
  RationalMatrix span(4, 4);
  for (int a = 0; a < 4; ++a) {
    auto c = omega_coords(a, 7 - a);
    for (int i = 0; i < 4; ++i) span(a, i) = c[i];
  }
  CHECK(span.rank() == 4);
}

TEST_CASE("omega coordinates hold in every realization", "[wbasis][property]") {
  for (const Family& f : kFamilies)
    for (int m = 1; m <= 8; ++m)
      for (int a = 0; 2 * a < m; ++a) {
        WPoly lhs = WPoly::gen(WGen::Om(a, m - a));
        INFO(f.name() << " Omega " << a << "," << m - a);
        CHECK(realize(f, lhs) == realize(f, to_w_basis(lhs)));
        CHECK(realize(f, lhs) == f.sign() * omega_bilinear(f, a, m - a));
      }
}

TEST_CASE("projection to the top generator", "[wbasis]") {
  CHECK(pr(7, WPoly::gen(WGen::W(7))) == 1);
  CHECK(pr(7, WPoly::gen(WGen::W(5, 2))) == 0);
  CHECK(pr(7, derive(WPoly::gen(WGen::Om(1, 4)), 2)) == 0);
  CHECK_THROWS(pr(7, WPoly::gen(WGen::W(5))));
  // The engine gives (-1)^a; the sign (-1)^(a+b) stated in the text would be -1 throughout.
  for (int m = 1; m <= 11; m += 2)
    for (int a = 0; 2 * a < m; ++a) {
      CHECK(pr(m, WPoly::gen(WGen::Om(a, m - a))) == sign_pow(a));
      CHECK(sign_pow(m) == -1);
    }
  CHECK(pr(3, WPoly::gen(WGen::Om(1, 2))) == -1);
}

TEST_CASE("realization intertwines the derivative", "[wbasis][property]") {
  std::mt19937 rng(23);
  for (const Family& f : {Family{Group::Sp, 1}, Family{Group::O, 2}, Family{Group::Osp, 1}})
    for (int t = 0; t < 15; ++t) {
      WPoly p = testutil::random_wpoly(rng, 5, 2);
      CHECK(realize(f, derive(p)) == derive(realize(f, p)));
      CHECK(realize(f, to_omega_basis(p)) == realize(f, p));
      CHECK(realize(f, to_w_basis(p)) == realize(f, p));
    }
}

TEST_CASE("raising coefficients", "[wbasis]") {
  CHECK(pplus_lambda(3, 5, 1, 1) == 0);
  CHECK(pplus_lambda(0, 3, 2, 0) == frac(3, 2));
  CHECK(pplus_lambda(0, 3, 2, 5) == frac(13, 2));
  CHECK(mw_matrix(0, 1).rows() == 1);
  CHECK(mw_matrix(0, 1)(0, 0) != 0);
}

TEST_CASE("raising coefficients describe the leading part of the action", "[wbasis][oracle]") {
  // Degree-two part of omega_{a,b} o_{a+b-w} omega_{l,m} in S(1).
  const Family f{Group::Sp, 1};
  for (int a = 0; a <= 2; ++a)
    for (int b = a + 1; b <= 4; ++b)
      for (int w = 1; w <= a + b; ++w)
        for (int l = 0; l <= 2; ++l)
          for (int m = l + 1; m <= 4; ++m) {
            VPoly lhs = circle(omega_bilinear(f, a, b), a + b - w, omega_bilinear(f, l, m)).degree_component(2);
            VPoly rhs = pplus_lambda(a, b, w, l) * omega_bilinear(f, l + w, m) +
                        pplus_lambda(a, b, w, m) * omega_bilinear(f, l, m + w);
            INFO("a=" << a << " b=" << b << " w=" << w << " l=" << l << " m=" << m);
            CHECK(lhs == rhs);
          }
}

TEST_CASE("weighted derivation on index lists", "[wbasis]") {
  auto terms = pplus_act_indices(0, 3, 2, {0, 1, 2, 3});
  for (const auto& t : terms) {
    std::vector<int> s = t.indices;
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
  }
  // Every raised entry collides.
  CHECK(pplus_act_indices(0, 3, 1, {0, 1, 2, 3}).size() == 1);
  CHECK(pplus_act_indices(0, 3, 1, {0, 1, 2, 3}).front().indices == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("adjacent minors of the raising matrices are positive", "[wbasis]") {
  for (int m = 1; m <= 6; ++m)
    for (int w = 1; w <= 6; ++w) {
      RationalMatrix M = mw_matrix(m, w);
      CHECK(determinant(M) != 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) CHECK(M(i, j) * M(i + 1, j + 1) - M(i, j + 1) * M(i + 1, j) > 0);
    }
}

TEST_CASE("abstract products agree with the realization", "[wbasis][property]") {
  std::mt19937 rng(29);
  for (const Family& f : {Family{Group::Sp, 1}, Family{Group::O, 1}, Family{Group::O, 2}, Family{Group::Osp, 1}}) {
    for (int t = 0; t < 25; ++t) {
      WGen a = testutil::random_wgen(rng, 5);
      WPoly p = testutil::random_wpoly(rng, 4, 3, 2);
      for (int j = 0; j <= 5; ++j) {
        INFO(f.name() << " " << to_text(a) << " o_" << j << " " << to_text(p));
        CHECK(realize(f, act(f, a, j, p)) == circle(realize(f, a), j, realize(f, p)));
      }
    }
    for (int t = 0; t < 20; ++t) {
      WPoly p = testutil::random_wpoly(rng, 5, 3, 1);
      if (p.is_zero()) continue;
      const Word& w = p.terms().begin()->first;
      if (w.size() < 2) continue;
      CHECK(realize(f, swap_factors(f, w, 0)) == realize(f, w));
      CHECK(realize(f, sort_words(f, p)) == realize(f, p));
    }
  }
}

TEST_CASE("weight-three generator recovers the lowest one", "[wbasis]") {
  for (const Family& f : {Family{Group::Sp, 1}, Family{Group::O, 1}, Family{Group::O, 2}, Family{Group::Osp, 1}}) {
    VPoly w3 = realize(f, WGen::W(3));
    CHECK(frac(1, 360) * circle(w3, 5, w3) == realize(f, WGen::W(1)));
    WPoly abstract = to_w_basis(act(f, WGen::W(3), 5, WPoly::gen(WGen::W(3))));
    CHECK(frac(1, 360) * realize(f, abstract) == realize(f, WGen::W(1)));
  }
}

TEST_CASE("raising by the weight-three generator", "[wbasis]") {
  // W3 o_1 W^{2m+1} has top coefficient 2m+4 in every family.
  for (const Family& f : {Family{Group::Sp, 1}, Family{Group::O, 1}, Family{Group::Osp, 1}})
    for (int m = 0; m <= 4; ++m) {
      WPoly y = to_w_basis(act(f, WGen::W(3), 1, WPoly::gen(WGen::W(2 * m + 1))));
      CHECK(pr(2 * m + 3, y) == 2 * m + 4);
      CHECK(pplus_lambda(0, 3, 2, 0) + pplus_lambda(0, 3, 2, 2 * m + 1) == 2 * m + 4);
    }
}
