#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wfree/freefield.hpp"
#include "wfree/matrix.hpp"

namespace wfree {

enum class Group { Sp, O, Osp };

// Free-field realization: Sp(n) in S(n), O(n) in F(n), Osp(1,2n) in S(n)+F(1).
struct Family {
  Group group = Group::Sp;
  int n = 1;

  Rational central_charge() const;
  // Realization sign of every Omega generator (-1 for O).
  int sign() const { return group == Group::O ? -1 : 1; }
  int relation_degree() const { return group == Group::Osp ? 2 * n + 2 : n + 1; }
  int minimal_relation_weight() const;
  std::string name() const;
  auto operator<=>(const Family&) const = default;
};

Family parse_family(const std::string& name, int n);

// d^k W^m (is_w) or d^k Omega_{a,b}.
struct WGen {
  bool is_w = false;
  int x = 0;  // m for W, a for Omega
  int y = 0;  // unused for W, b for Omega
  int k = 0;

  static WGen W(int m, int k = 0) { return WGen{true, m, 0, k}; }
  static WGen Om(int a, int b, int k = 0) { return WGen{false, a, b, k}; }

  int weight() const { return is_w ? x + 1 + k : x + y + 1 + k; }
  int index_sum() const { return is_w ? x + k : x + y + k; }  // m with g in A_m
  auto operator<=>(const WGen&) const = default;
};

// Canonical factor order: by index sum, W before Omega, then derivative.
bool wgen_before(const WGen& a, const WGen& b);

// Right-nested Wick word :g1 (:g2 (... gk):):; the empty word is the vacuum.
using Word = std::vector<WGen>;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class WPoly {
 public:
  using Map = std::map<Word, Rational, WordLess>;

  WPoly() = default;
  explicit WPoly(const Rational& c);
  static WPoly gen(WGen g, const Rational& c = 1);
  static WPoly word(Word w, const Rational& c = 1);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Word& w, const Rational& c);
  WPoly& operator+=(const WPoly& o);
  WPoly& operator-=(const WPoly& o);
  WPoly& operator*=(const Rational& c);
  WPoly operator+(const WPoly& o) const;
  WPoly operator-(const WPoly& o) const;
  friend WPoly operator*(const Rational& c, WPoly p) { return p *= c; }
  bool operator==(const WPoly& o) const { return terms_ == o.terms_; }

  int max_degree() const;             // in generator factors; -1 for zero
  WPoly degree_component(int k) const;  // words with k factors
  int weight() const;                 // -1 for zero, throws if inhomogeneous

 private:
  Map terms_;
};

// Unsigned bilinear omega_{a,b} of the family (any a, b).
VPoly omega_bilinear(const Family& f, int a, int b);

VPoly realize(const Family& f, const WGen& g);
VPoly realize(const Family& f, const Word& w);
VPoly realize(const Family& f, const WPoly& p);

// d^k Omega_{a,b} or d^k W^m as a combination of Omega_{c,d}, c < d, no derivatives.
std::vector<std::pair<std::pair<int, int>, Rational>> expand_omega(const WGen& g);

// Basis of A_m: d^{2i} W^{m-2i} (m odd) or d^{2i+1} W^{m-1-2i} (m even).
std::vector<WGen> am_basis(int m);
// Coordinates of Omega_{a,b} in am_basis(a+b).
std::vector<Rational> omega_coords(int a, int b);
// g as a combination of am_basis elements (W generators with derivatives).
std::vector<std::pair<WGen, Rational>> expand_w(const WGen& g);

WPoly to_omega_basis(const WPoly& p);
WPoly to_w_basis(const WPoly& p);
WPoly derive(const WPoly& p, int k = 1);

// Coefficient of W^m in a degree-one element of A_m (m odd).
Rational pr(int m, const WPoly& x);

Rational pplus_lambda(int a, int b, int w, int l);

struct IndexTerm {
  std::vector<int> indices;
  Rational coeff;
};
// Weighted derivation action of Omega_{a,b}(a+b-w) on a strictly increasing list.
std::vector<IndexTerm> pplus_act_indices(int a, int b, int w,
                                         const std::vector<int>& indices);
// Orthogonal flavor: acts on both lists, entries may repeat (no collisions).
std::vector<std::pair<std::pair<std::vector<int>, std::vector<int>>, Rational>>
pplus_act_indices_orth(int a, int b, int w, const std::vector<int>& I,
                       const std::vector<int>& J);

RationalMatrix mw_matrix(int m, int w);

// Linear preimage of a bilinear element in the span of realized Omega_{a,b}.
WPoly lift_linear(const Family& f, const VPoly& bilinear, int weight);

// Abstract vacuum-module operations, with generator OPEs read off the realization.
struct GenOpe {
  WPoly linear;  // degree-one words
  Rational central;
};
GenOpe gen_ope(const Family& f, const WGen& a, int j, const WGen& b);
// a o_j p for a generator a and j >= 0.
WPoly act(const Family& f, const WGen& a, int j, const WPoly& p);
// Puts factors of every word in canonical order; corrections come from the OPE.
WPoly sort_words(const Family& f, const WPoly& p);
// Swaps factors pos and pos+1 of the word.
WPoly swap_factors(const Family& f, const Word& w, std::size_t pos);

std::string to_text(const WGen& g);
std::string to_text(const WPoly& p);

}  // namespace wfree
