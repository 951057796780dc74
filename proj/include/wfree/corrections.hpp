#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wfree/classical.hpp"
#include "wfree/wbasis.hpp"

namespace wfree {

enum class Ordering { Canonical, Reversed };

WPoly normal_order(const QPoly& p, Ordering ord = Ordering::Canonical);

// Degree-k Q-polynomial whose classical image matches the degree-2k part of e.
QPoly lift(const VPoly& e, const Family& f, int degree2k);

struct RelationResult {
  Family family;
  std::string indices;  // human-readable index data
  QPoly classical;
  WPoly relation;
  std::map<int, WPoly> by_degree;  // key 2k
  int weight = 0;
  // Coefficient of W^m in pr_m of the linear part; for O(n) the relation is normalized
  // to the classical symbol in the generators realizing to +omega and the coefficient is
  // taken along Omega_{0,m}.
  std::optional<Rational> remainder;
  bool kernel_ok = false;
  int passes = 0;
};

RelationResult build_relation(const Family& f, const QPoly& classical,
                              Ordering ord = Ordering::Canonical,
                              const std::string& indices = "");

struct Decoupling {
  Family family;
  int m = 0;
  WPoly expression;  // W-basis words in generators below the first decoupled one
};

Decoupling extract_decoupling(const RelationResult& r);
// Builds the decoupling of W^{m+2} by applying W^3 o_1 to W^m - E_m.
// `known` maps each already decoupled index to its decoupling and must cover
// every index from the first decoupled one up to d.m.
Decoupling raise_decoupling(const Decoupling& d, const Family& f,
                            const std::map<int, Decoupling>& known);
bool decoupling_holds(const Decoupling& d);

struct AppendixReport {
  bool kernel_ok = false;
  Rational remainder;
  std::map<int, std::size_t> residual_terms;  // degree -> surviving terms
  std::size_t words = 0;
};

// The weight-16 relation of Osp(1,2) from its embedded coefficient tables.
WPoly appendix_relation();
WPoly appendix_component(int degree2k);
AppendixReport verify_appendix(
    const std::function<void(const std::string&)>& progress = nullptr);

}  // namespace wfree
