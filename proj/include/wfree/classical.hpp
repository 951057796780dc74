#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wfree/freefield.hpp"
#include "wfree/wbasis.hpp"

namespace wfree {

using QPair = std::pair<int, int>;
using QMono = std::vector<QPair>;  // sorted multiset, each pair a < b

// Commutative polynomial in the Q_{a,b}, with Q_{b,a} = -Q_{a,b}.
class QPoly {
 public:
  using Map = std::map<QMono, Rational>;

  QPoly() = default;
  explicit QPoly(const Rational& c);
  static QPoly Q(int a, int b);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(QMono m, const Rational& c);
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator*=(const Rational& c);
  bool operator==(const QPoly& o) const { return terms_ == o.terms_; }

  int degree() const;  // -1 for zero
  int weight() const;  // sum of a+b+1 over factors, -1 for zero
  int max_index() const;

 private:
  Map terms_;
};

QPoly pfaffian(const std::vector<int>& I, int n);
QPoly det_analog(const std::vector<int>& I, const std::vector<int>& J, int n);
QPoly sergeev_minimal();

// Image under Q_{a,b} -> q_{a,b} in the (super)symmetric algebra of the family,
// written with free-field symbols standing for their classical images.
VPoly eval_classical(const QPoly& p, const Family& f, int K);

std::string to_text(const QPoly& p);

}  // namespace wfree
