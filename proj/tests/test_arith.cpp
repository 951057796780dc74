#include <catch_amalgamated.hpp>

#include "printers.hpp"

#include <random>

#include "wfree/matrix.hpp"
#include "wfree/rational.hpp"

using namespace wfree;

TEST_CASE("rationals print and parse in lowest terms", "[arith]") {
  CHECK(to_string(frac(6, 4)) == "3/2");
  CHECK(to_string(frac(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("-10/4") == frac(-5, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/"));
}

TEST_CASE("rational round trip", "[arith][property]") {
  std::mt19937 rng(1);
  for (int i = 0; i < 500; ++i) {
    Rational q(static_cast<long>(rng() % 20001) - 10000, 1 + static_cast<long>(rng() % 997));
    q.canonicalize();
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("factorials and binomials", "[arith]") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(inv_factorial(3) == frac(1, 6));
  CHECK(inv_factorial(-1) == 0);
  CHECK(sign_pow(3) == -1);
  CHECK(sign_pow(-2) == 1);
}

namespace {

RationalMatrix random_matrix(std::mt19937& rng, int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = frac(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 3));
  return m;
}

// Cofactor expansion, fine for n <= 5.
Rational det_cofactor(const RationalMatrix& m) {
  const int n = m.rows();
  if (n == 1) return m(0, 0);
  Rational s = 0;
  for (int c = 0; c < n; ++c) {
    RationalMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    s += sign_pow(c) * m(0, c) * det_cofactor(minor);
  }
  return s;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion and is multiplicative", "[arith][property]") {
  std::mt19937 rng(2);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + t % 5;
    RationalMatrix a = random_matrix(rng, n), b = random_matrix(rng, n);
    CHECK(determinant(a) == det_cofactor(a));
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
  RationalMatrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK(determinant(s) == 0);
  CHECK(s.rank() == 1);
}

TEST_CASE("solve_linear returns a solution and a nullspace basis", "[arith]") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    RationalMatrix a(3, 5);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j) a(i, j) = static_cast<int>(rng() % 7) - 3;
    std::vector<Rational> x0(5);
    for (auto& v : x0) v = static_cast<int>(rng() % 5) - 2;
    auto b = a * x0;
    auto sol = solve_linear(a, b);
    REQUIRE(sol);
    CHECK(a * sol->particular == b);
    CHECK(static_cast<int>(sol->nullspace.size()) == 5 - a.rank());
    for (const auto& v : sol->nullspace) CHECK(a * v == std::vector<Rational>(3, Rational(0)));
  }
  RationalMatrix z(1, 1);
  CHECK_FALSE(solve_linear(z, {Rational(1)}));
}

TEST_CASE("sparse echelon expresses vectors in the span", "[arith]") {
  SparseEchelon<int> e;
  CHECK(e.insert(0, {{1, 1}, {2, 1}}));
  CHECK(e.insert(1, {{2, 1}, {3, 1}}));
  CHECK_FALSE(e.insert(2, {{1, 1}, {3, -1}}));
  CHECK(e.rank() == 2);
  auto c = e.express({{1, 2}, {2, 3}, {3, 1}});
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 1);
  CHECK_FALSE(e.express({{4, 1}}));
}
