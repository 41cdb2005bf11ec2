#include "bellhopf/quasidet.hpp"

#include <algorithm>

#include "bellhopf/format.hpp"

namespace bellhopf {

template <class M>
bool is_hessenberg(const Matrix<Poly<M>>& a) {
  if (!a.square() || a.rows() == 0) return false;
  const Poly<M> minus_one(Rational(-1));
  for (std::size_t i = 1; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (j + 1 == i && a(i, j) != minus_one) return false;
      if (j + 1 < i && !a(i, j).is_zero()) return false;
    }
  return true;
}

namespace {

template <class M>
void require_hessenberg(const Matrix<Poly<M>>& a) {
  if (!is_hessenberg(a))
    throw std::invalid_argument("expected a square matrix with -1 on the subdiagonal and zeros below");
}

}  // namespace

template <class M>
Poly<M> hessenberg_quasidet(const Matrix<Poly<M>>& a) {
  require_hessenberg(a);
  const std::size_t n = a.rows();
  std::vector<Poly<M>> P{Poly<M>::unit()};
  for (std::size_t m = 0; m < n; ++m) {
    Poly<M> next;
    for (std::size_t k = 0; k <= m; ++k) next += P[k] * a(k, m);
    P.push_back(std::move(next));
  }
  return P[n];
}

template <class M>
Poly<M> hessenberg_quasidet_sum(const Matrix<Poly<M>>& a) {
  require_hessenberg(a);
  const std::size_t n = a.rows();
  if (n > 24) throw std::invalid_argument("explicit sum limited to 24 x 24");
  Poly<M> total;
  // Each subset of cut points {j_1 < ... < j_k} in 1..n-1 splits 1..n into
  // consecutive runs; run [s, e] contributes the factor a_{s,e}.
  for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    Poly<M> term = Poly<M>::unit();
    std::size_t start = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const bool cut_after = j + 1 == n || (cuts & (1u << j));
      if (!cut_after) continue;
      term *= a(start, j);
      if (term.is_zero()) break;
      start = j + 1;
    }
    total += term;
  }
  return total;
}

template <class M>
Poly<M> hessenberg_quasidet_expansion(const Matrix<Poly<M>>& a) {
  require_hessenberg(a);
  const std::size_t n = a.rows();
  Poly<M> total;
  for (std::size_t k = 0; k < n; ++k) {
    const Poly<M> tail = k == 0 ? Poly<M>::unit() : hessenberg_quasidet_expansion(a.block(n - k, k));
    total += a(0, n - k - 1) * tail;
  }
  return total;
}

template <class M>
Matrix<Poly<M>> bell_matrix(int n) {
  if (n < 1) throw std::invalid_argument("bell_matrix needs n >= 1");
  const auto size = static_cast<std::size_t>(n);
  Matrix<Poly<M>> b(size, size);
  for (int i = 1; i <= n; ++i) {
    if (i > 1) b(i - 1, i - 2) = Poly<M>(Rational(-1));
    for (int j = i; j <= n; ++j) b(i - 1, j - 1) = Poly<M>::letter(j - i + 1, Rational(binomial(j - 1, i - 1)));
  }
  return b;
}

template <class M>
Poly<M> bell_via_quasidet(int n) {
  if (n == 0) return Poly<M>::unit();
  if constexpr (is_commutative_v<M>) {
    return det_cofactor(bell_matrix<M>(n));
  } else {
    return hessenberg_quasidet(bell_matrix<M>(n));
  }
}

template <class M>
std::string to_text(const Matrix<Poly<M>>& a, std::size_t p, std::size_t q, std::string_view symbol) {
  std::vector<std::vector<std::string>> cells(a.rows(), std::vector<std::string>(a.cols()));
  std::vector<std::size_t> width(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::string s = to_text(a(i, j), symbol);
      if (i == p && j == q) s = "[" + s + "]";
      width[j] = std::max(width[j], s.size());
      cells[i][j] = std::move(s);
    }
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out += "|";
    for (std::size_t j = 0; j < a.cols(); ++j) out += " " + std::string(width[j] - cells[i][j].size(), ' ') + cells[i][j];
    out += " |\n";
  }
  return out;
}

#define BELLHOPF_INSTANTIATE_QUASIDET(M)                                                      \
  template bool is_hessenberg<M>(const Matrix<Poly<M>>&);                                     \
  template Poly<M> hessenberg_quasidet<M>(const Matrix<Poly<M>>&);                            \
  template Poly<M> hessenberg_quasidet_sum<M>(const Matrix<Poly<M>>&);                        \
  template Poly<M> hessenberg_quasidet_expansion<M>(const Matrix<Poly<M>>&);                  \
  template Matrix<Poly<M>> bell_matrix<M>(int);                                               \
  template Poly<M> bell_via_quasidet<M>(int);                                                 \
  template std::string to_text<M>(const Matrix<Poly<M>>&, std::size_t, std::size_t, std::string_view);

BELLHOPF_INSTANTIATE_QUASIDET(Word)
BELLHOPF_INSTANTIATE_QUASIDET(Monomial)

#undef BELLHOPF_INSTANTIATE_QUASIDET

Rational det_bareiss(const NumMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Scale rows to integers so every Bareiss quotient is exact.
  Matrix<Integer> m(n, n);
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    scale *= Rational(l);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
    prev = m(k, k);
  }
  Rational det(m(n - 1, n - 1) * sign);
  det /= scale;
  return det;
}

NumMatrix inverse(const NumMatrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  NumMatrix m = a;
  NumMatrix inv = NumMatrix::identity(n, Rational(1), Rational(0));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("matrix is singular");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(col, j), m(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    const Rational scale = 1 / m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational numeric_quasidet(const NumMatrix& a, std::size_t p, std::size_t q) {
  if (!a.square() || a.rows() == 0) throw std::invalid_argument("quasideterminant of a non-square matrix");
  if (p >= a.rows() || q >= a.cols()) throw std::out_of_range("quasideterminant index out of range");
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  const NumMatrix inv = inverse(a.minor(p, q));
  std::vector<Rational> row, col;
  for (std::size_t j = 0; j < n; ++j)
    if (j != q) row.push_back(a(p, j));
  for (std::size_t i = 0; i < n; ++i)
    if (i != p) col.push_back(a(i, q));
  Rational result = a(p, q);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) result -= row[i] * inv(i, j) * col[j];
  return result;
}

Rational quasidet_by_determinants(const NumMatrix& a, std::size_t p, std::size_t q) {
  if (a.rows() == 1) return a(0, 0);
  const Rational minor = det_bareiss(a.minor(p, q));
  if (minor == 0) throw std::domain_error("minor is singular");
  Rational r = det_bareiss(a) / minor;
  if ((p + q) % 2 == 1) r = -r;
  return r;
}

}  // namespace bellhopf
