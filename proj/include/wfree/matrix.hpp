#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wfree/rational.hpp"

namespace wfree {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[idx(i, j)]; }
  const Rational& operator()(int i, int j) const { return a_[idx(i, j)]; }

  RationalMatrix operator*(const RationalMatrix& o) const;
  std::vector<Rational> operator*(const std::vector<Rational>& x) const;
  bool operator==(const RationalMatrix& o) const = default;

  int rank() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Fraction-free (Bareiss) determinant.
Rational determinant(const RationalMatrix& a);

struct LinearSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace;
};

// nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const RationalMatrix& a,
                                           const std::vector<Rational>& b);

// Incremental row echelon over sparse vectors indexed by an ordered key.
// Each stored row remembers the combination of inserted columns producing it,
// so a reduced target yields an explicit preimage.
template <class Key>
class SparseEchelon {
 public:
  using Vec = std::map<Key, Rational>;
  using Combo = std::map<int, Rational>;

  // Returns true when v was independent of the rows already present.
  bool insert(int label, Vec v) {
    Combo c{{label, Rational(1)}};
    reduce(v, c);
    if (v.empty()) return false;
    auto lead = std::prev(v.end());
    Rational inv = 1 / lead->second;
    for (auto& [k, x] : v) x *= inv;
    for (auto& [k, x] : c) x *= inv;
    Key key = lead->first;
    rows_.emplace(key, Row{std::move(v), std::move(c)});
    return true;
  }

  // Expresses v in terms of inserted labels; nullopt if v is not in the span.
  std::optional<Combo> express(Vec v) const {
    Combo c;
    reduce(v, c);
    if (!v.empty()) return std::nullopt;
    Combo out;
    for (auto& [k, x] : c)
      if (x != 0) out.emplace(k, -x);
    return out;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    Vec v;
    Combo c;
  };

  void reduce(Vec& v, Combo& c) const {
    auto it = v.end();
    while (it != v.begin()) {
      auto lead = std::prev(it);
      auto r = rows_.find(lead->first);
      if (r == rows_.end()) {
        it = lead;
        continue;
      }
      Rational f = lead->second;
      const Key stop = lead->first;
      for (auto& [k, x] : r->second.v) {
        auto [pos, fresh] = v.try_emplace(k, 0);
        pos->second -= f * x;
        if (pos->second == 0) v.erase(pos);
      }
      for (auto& [k, x] : r->second.c) {
        auto [pos, fresh] = c.try_emplace(k, 0);
        pos->second -= f * x;
        if (pos->second == 0) c.erase(pos);
      }
      it = v.lower_bound(stop);
    }
  }

  std::map<Key, Row> rows_;
};

}  // namespace wfree
