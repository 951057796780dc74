#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wfree/rational.hpp"

namespace wfree {

enum class Kind : std::uint8_t { Beta = 0, Gamma = 1, Phi = 2 };

// Packed free-field symbol d^k x^i; the integer order is the canonical
// (kind, color, deriv) order.
struct GenSym {
  std::uint32_t code = 0;

  GenSym() = default;
  GenSym(Kind kind, int color, int deriv)
      : code((static_cast<std::uint32_t>(kind) << 24) |
             (static_cast<std::uint32_t>(color) << 16) |
             static_cast<std::uint32_t>(deriv)) {}

  Kind kind() const { return static_cast<Kind>(code >> 24); }
  int color() const { return static_cast<int>((code >> 16) & 0xffu); }
  int deriv() const { return static_cast<int>(code & 0xffffu); }
  bool odd() const { return kind() == Kind::Phi; }
  int weight2() const { return 2 * deriv() + 1; }
  GenSym raised(int k = 1) const { return GenSym(kind(), color(), deriv() + k); }

  auto operator<=>(const GenSym&) const = default;
};

// Canonically ordered factor list of a normally ordered monomial.
using Mono = std::vector<GenSym>;

// Sorts a factor sequence into canonical order. Returns the Koszul sign of the
// reordering, or 0 if an odd generator repeats.
int canonicalize(Mono& m);

int mono_weight2(const Mono& m);

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class VPoly {
 public:
  using Map = std::map<Mono, Rational, MonoLess>;

  VPoly() = default;
  explicit VPoly(const Rational& c);
  static VPoly gen(GenSym g);
  static VPoly mono(Mono m, const Rational& c = 1);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Mono& m, const Rational& c);
  VPoly& operator+=(const VPoly& o);
  VPoly& operator-=(const VPoly& o);
  VPoly& operator*=(const Rational& c);
  VPoly operator+(const VPoly& o) const;
  VPoly operator-(const VPoly& o) const;
  VPoly operator-() const;
  friend VPoly operator*(const Rational& c, VPoly p) { return p *= c; }
  bool operator==(const VPoly& o) const { return terms_ == o.terms_; }

  int max_degree() const;  // -1 for zero
  VPoly degree_component(int d) const;
  // Doubled weight if homogeneous, -1 for zero, throws otherwise.
  int weight2() const;
  bool homogeneous() const;
  Rational constant_term() const;
  bool odd() const;  // parity of a homogeneous-parity element

 private:
  Map terms_;
};

// Supercommutative product of normally ordered monomials (classical product).
VPoly mul(const VPoly& a, const VPoly& b);
VPoly derive(const VPoly& a, int k = 1);

// a o_n b for all integers n, by Wick's theorem on free fields.
VPoly circle(const VPoly& a, int n, const VPoly& b);
inline VPoly wick(const VPoly& a, const VPoly& b) { return circle(a, -1, b); }

// Non-negative products; entry n holds a o_n b, trailing zeros trimmed.
using OpeTable = std::map<int, VPoly>;
OpeTable ope_all(const VPoly& a, const VPoly& b);

std::string to_text(GenSym g);
std::string to_text(const VPoly& p);

}  // namespace wfree
