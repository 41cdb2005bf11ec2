#pragma once

// Quasideterminants of Hessenberg matrices over the free algebra, numeric
// quasideterminants over the rationals, and exact determinants.
//
// Matrix indices are 0-based in this interface.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bellhopf/algebra.hpp"

namespace bellhopf {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static Matrix identity(std::size_t n, const T& one, const T& zero = T()) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// The matrix with row p and column q removed.
  Matrix minor(std::size_t p, std::size_t q) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == p) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == q) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  /// Square block with rows and columns first..first+size-1.
  Matrix block(std::size_t first, std::size_t size) const {
    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) m(i, j) = (*this)(first + i, first + j);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using AlgMatrix = Matrix<NCPoly>;
using NumMatrix = Matrix<Rational>;

/// Square, -1 on the subdiagonal, zero below it.
template <class M>
bool is_hessenberg(const Matrix<Poly<M>>& a);

/// |A|_{1n} via P(0) = 1, P(m) = sum_{k=1}^{m} P(k-1) a_{k,m} (1-based).
/// Throws std::invalid_argument unless A is Hessenberg.
template <class M>
Poly<M> hessenberg_quasidet(const Matrix<Poly<M>>& a);

/// a_{1n} + sum over 1 <= j_1 < ... < j_k < n of
/// a_{1,j_1} a_{j_1+1,j_2} ... a_{j_k+1,n}.
template <class M>
Poly<M> hessenberg_quasidet_sum(const Matrix<Poly<M>>& a);

/// sum_{k=0}^{n-1} a_{1,n-k} |M_k|_{1k}, with M_k the trailing k x k block
/// and |M_0| = 1.
template <class M>
Poly<M> hessenberg_quasidet_expansion(const Matrix<Poly<M>>& a);

/// (B_n)_{ij} = binom(j-1, i-1) d_{j-i+1} for i <= j, -1 on the subdiagonal.
template <class M>
Matrix<Poly<M>> bell_matrix(int n);

/// Noncommutative: Hessenberg quasideterminant of bell_matrix(n).
/// Commutative: determinant of bell_matrix(n).
template <class M>
Poly<M> bell_via_quasidet(int n);

/// Laplace expansion along rows with memoization over column subsets. Works
/// over any commutative ring with +, -, * and T(0), T(1). Size limit 20.
template <class T>
T det_cofactor(const Matrix<T>& a);

/// Fraction-free Bareiss elimination.
Rational det_bareiss(const NumMatrix& a);

/// Exact inverse by Gauss-Jordan elimination. Throws std::domain_error when
/// singular.
NumMatrix inverse(const NumMatrix& a);

/// a_pq - r_p (A^{pq})^{-1} c_q. Throws std::domain_error when the minor
/// A^{pq} is singular.
Rational numeric_quasidet(const NumMatrix& a, std::size_t p, std::size_t q);

/// (-1)^{p+q} det A / det A^{pq}; the classical value of the same quantity.
Rational quasidet_by_determinants(const NumMatrix& a, std::size_t p, std::size_t q);

/// Row-per-line rendering with the entry at (p, q) shown as "[entry]".
template <class M>
std::string to_text(const Matrix<Poly<M>>& a, std::size_t p, std::size_t q, std::string_view symbol = "d");

template <class T>
T det_cofactor(const Matrix<T>& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  if (n > 20) throw std::invalid_argument("cofactor determinant limited to 20 x 20");
  // memo[mask]: determinant of the trailing popcount(mask) rows restricted
  // to the columns in mask.
  std::map<unsigned, T> memo;
  auto rec = [&](auto&& self, std::size_t row, unsigned mask) -> T {
    if (row == n) return T(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    T total{};
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      if (a(row, j) != T{}) {
        T term = a(row, j) * self(self, row + 1, mask & ~(1u << j));
        if (sign > 0) {
          total += term;
        } else {
          total -= term;
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, total);
    return total;
  };
  return rec(rec, 0, (1u << n) - 1u);
}

}  // namespace bellhopf
