#include "wfree/matrix.hpp"

#include <stdexcept>

namespace wfree {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

std::vector<Rational> RationalMatrix::operator*(
    const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("dimension mismatch");
  std::vector<Rational> y(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RationalMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int RationalMatrix::rank() const {
  RationalMatrix c = *this;
  return static_cast<int>(rref(c).size());
}

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  // Scale each row to integers, run Bareiss over Z, undo the scaling.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (int i = 0; i < n; ++i) {
    Integer l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                        a(i, j).get_den_mpz_t());
    for (int j = 0; j < n; ++j) {
      Rational v = a(i, j) * l;
      m[i][j] = v.get_num();
    }
    scale *= Rational(l);
  }
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Rational d(m[n - 1][n - 1] * sign);
  return d / scale;
}

std::optional<LinearSolution> solve_linear(const RationalMatrix& a,
                                           const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("dimension mismatch");
  const int n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  LinearSolution s;
  s.particular.assign(static_cast<std::size_t>(n), Rational(0));
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    s.particular[piv[r]] = aug(static_cast<int>(r), n);
    is_pivot[piv[r]] = true;
  }
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(n));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = -aug(static_cast<int>(r), f);
    s.nullspace.push_back(std::move(v));
  }
  return s;
}

}  // namespace wfree
