#include <catch_amalgamated.hpp>

#include "printers.hpp"

#include <algorithm>
#include <functional>

#include "wfree/remainder.hpp"

using namespace wfree;

namespace {

Rational closed_one(const std::vector<int>& i) {
  Rational num = (2 + i[0] + i[1] + i[2] + i[3]) * (i[0] - i[2]) * (i[1] - i[3]);
  Rational den = (1 + i[0] + i[1]) * (1 + i[1] + i[2]) * (1 + i[0] + i[3]) * (1 + i[2] + i[3]);
  return num / den;
}

}  // namespace

TEST_CASE("base symplectic remainder", "[remainder]") {
  CHECK(r1_sym({0, 1, 2, 3}) == frac(1, 6));
  CHECK(closed_one({0, 1, 2, 3}) == frac(1, 6));
  CHECK(rn_sym_closed(1, {0, 1, 2, 3}) == frac(1, 6));
  CHECK(r1_sym({0, 2, 4, 6}) == 0);
  CHECK_THROWS(r1_sym({0, 1, 2, 4}));
  CHECK_THROWS(r1_sym({1, 0, 2, 3}));
}

TEST_CASE("base formula agrees with the factored form", "[remainder][property]") {
  int n = 0;
  for (int a = 0; a <= 12; ++a)
    for (int b = a + 1; b <= 12; ++b)
      for (int c = b + 1; c <= 12; ++c)
        for (int d = c + 1; d <= 12; ++d) {
          std::vector<int> I{a, b, c, d};
          if (!is_balanced(I) || (a + b + c + d) % 2) continue;
          ++n;
          // The factored form lists entries alternating in parity.
          std::vector<int> ev, od;
          for (int x : I) (x % 2 ? od : ev).push_back(x);
          std::vector<int> inter{ev[0], od[0], ev[1], od[1]};
          CHECK(rn_sym_recursive(1, inter) == closed_one(inter));
          CHECK(r1_sym(I) == rn_sym_recursive(1, I));
        }
  CHECK(n > 100);
}

TEST_CASE("frozen higher remainders", "[remainder]") {
  CHECK(rn_sym_recursive(2, {0, 1, 2, 3, 4, 5}) == frac(1, 480));
  CHECK(rn_sym_closed(2, {0, 1, 2, 3, 4, 5}) == frac(1, 480));
  // n!(n+1)^2 prod (k-l)^2 / (2^n prod (1+k+l)) on I = (0, 1, ..., 2n+1).
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> I(2 * n + 2);
    for (int k = 0; k < 2 * n + 2; ++k) I[k] = k;
    Integer num = factorial(n) * 2 * (n + 1) * (n + 1);
    Integer den = 1;
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l) {
        if (k < l) num *= 4 * (k - l) * (k - l);
        den *= 1 + 2 * k + 2 * l + 1;
      }
    CHECK(rn_sym_closed(n, I) == frac(num, den));
  }
}

TEST_CASE("remainders vanish off balance and alternate", "[remainder]") {
  CHECK(rn_sym_recursive(2, {0, 2, 4, 6, 8, 1}) == 0);
  CHECK(rn_sym_closed(2, {0, 1, 2, 4, 6, 8}) == 0);
  CHECK(rn_sym_closed(1, {0, 0, 1, 3}) == 0);
  CHECK(rn_sym_recursive(1, {1, 0, 2, 3}) == -frac(1, 6));
  CHECK(rn_sym_closed(1, {1, 0, 2, 3}) == -frac(1, 6));
  CHECK(rn_sym_recursive(1, {0, 0, 1, 3}) == 0);
}

TEST_CASE("swapping parity blocks", "[remainder]") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> inter, swapped;
    for (int k = 0; k <= n; ++k) {
      inter.insert(inter.end(), {2 * k, 2 * k + 1});
      swapped.insert(swapped.end(), {2 * k + 1, 2 * k});
    }
    CHECK(rn_sym_recursive(n, inter) == sign_pow(n + 1) * rn_sym_recursive(n, swapped));
  }
}

TEST_CASE("constant term of the remainder", "[remainder]") {
  for (const auto& I : std::vector<std::vector<int>>{{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 1, 0, 5}, {0, 3, 2, 5}}) {
    int s = 0;
    for (int x : I) s += x;
    CHECK(limit_remainder(2, I) == frac(2, 2 + s) * rn_sym_recursive(1, I));
  }
  // Leading coefficients of the closed formula.
  CHECK(limit_remainder(2, {0, 1, 2, 3}) == frac(1, 24));
  CHECK_THROWS(limit_remainder(1, {}));
}

TEST_CASE("base orthogonal remainder", "[remainder]") {
  CHECK(r1_orth({0, 0}, {1, 1}) == frac(7, 3));
  for (int a = 0; a <= 6; a += 2)
    for (int b = 0; b <= 6; b += 2)
      for (int c = 1; c <= 7; c += 2)
        for (int d = 1; d <= 7; d += 2) {
          CHECK(r1_orth({a, b}, {c, d}) > 0);
          CHECK(r1_orth({a, b}, {c, d}) == r1_orth({b, a}, {c, d}));
          CHECK(r1_orth({a, b}, {c, d}) == r1_orth({a, b}, {d, c}));
        }
  CHECK(rn_orth_recursive(1, {0, 0}, {1, 1}) == frac(7, 3));
}

TEST_CASE("orthogonal reference orthogonal recursion", "[remainder]") {
  // Frozen outputs of the reference recursion. Free-field remainders are
  // 45/4 and 97 here, i.e. (-1/2)^(n-1) times these values.
  CHECK(rn_orth_recursive(2, {0, 0, 0}, {1, 1, 1}) == frac(-45, 2));
  CHECK(rn_orth_recursive(3, {0, 0, 0, 0}, {1, 1, 1, 1}) == 388);
}

TEST_CASE("orthogonal recursion stays positive", "[remainder][!shouldfail]") {
  // Expected positivity; the reference recursion turns negative at n = 2.
  for (int n = 1; n <= 3; ++n)
    for (int top = 0; top <= 4; top += 2) {
      std::vector<int> I(n + 1, 0), J(n + 1, 1);
      I.back() = top;
      CHECK(rn_orth_recursive(n, I, J) > 0);
    }
}
