#include <doctest.h>

#include <random>

#include "bellhopf/bell.hpp"
#include "bellhopf/format.hpp"
#include "bellhopf/quasidet.hpp"

using namespace bellhopf;

namespace {

NCPoly nc(std::string_view s) { return parse_poly<Word>(s); }
CPoly cm(std::string_view s) { return parse_poly<Monomial>(s); }

// Hessenberg matrix whose free entries a_ij (1-based) are the letters d_{10i+j}.
template <class M>
Matrix<Poly<M>> symbolic_hessenberg(std::size_t n) {
  Matrix<Poly<M>> a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) a(i, i - 1) = Poly<M>(Rational(-1));
    for (std::size_t j = i; j < n; ++j) a(i, j) = Poly<M>::letter(static_cast<int>(10 * (i + 1) + j + 1));
  }
  return a;
}

template <class M>
Matrix<Poly<M>> random_hessenberg(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> letter(1, 4), coeff(-3, 3), terms(0, 2);
  Matrix<Poly<M>> a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) a(i, i - 1) = Poly<M>(Rational(-1));
    for (std::size_t j = i; j < n; ++j) {
      const int t = terms(rng);
      for (int k = 0; k < t; ++k) a(i, j).add_term(M::of(Letter(letter(rng))), coeff(rng));
    }
  }
  return a;
}

NumMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  NumMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = ratio(num(rng), den(rng));
  return a;
}

}  // namespace

TEST_CASE("symbolic expansions") {
  CHECK(hessenberg_quasidet(symbolic_hessenberg<Word>(3)) == nc("d13 + d11*d23 + d12*d33 + d11*d22*d33"));
  CHECK(hessenberg_quasidet_sum(symbolic_hessenberg<Word>(3)) == nc("d13 + d11*d23 + d12*d33 + d11*d22*d33"));
  const NCPoly p4 = nc(
      "d14 + d11*d24 + d12*d34 + d13*d44 + d11*d22*d34 + d11*d23*d44 + d12*d33*d44 + d11*d22*d33*d44");
  CHECK(hessenberg_quasidet(symbolic_hessenberg<Word>(4)) == p4);
  CHECK(hessenberg_quasidet_expansion(symbolic_hessenberg<Word>(4)) == p4);
  Matrix<NCPoly> one(1, 1);
  one(0, 0) = nc("d7");
  CHECK(hessenberg_quasidet(one) == nc("d7"));
  CHECK(hessenberg_quasidet_sum(one) == nc("d7"));
}

TEST_CASE("shape validation") {
  Matrix<NCPoly> bad = symbolic_hessenberg<Word>(3);
  bad(2, 1) = NCPoly(Rational(1));
  CHECK_FALSE(is_hessenberg(bad));
  CHECK_THROWS_AS(hessenberg_quasidet(bad), std::invalid_argument);
  Matrix<NCPoly> low = symbolic_hessenberg<Word>(3);
  low(2, 0) = nc("d1");
  CHECK_THROWS_AS(hessenberg_quasidet_sum(low), std::invalid_argument);
  CHECK_THROWS_AS(hessenberg_quasidet(Matrix<NCPoly>(2, 3)), std::invalid_argument);
}

TEST_CASE("three computations agree on random matrices") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto a = random_hessenberg<Word>(rng, n);
    const NCPoly p = hessenberg_quasidet(a);
    CHECK(hessenberg_quasidet_sum(a) == p);
    CHECK(hessenberg_quasidet_expansion(a) == p);
    const auto c = random_hessenberg<Monomial>(rng, n);
    CHECK(hessenberg_quasidet(c) == det_cofactor(c));
  }
}

TEST_CASE("Bell matrices") {
  const auto b3 = bell_matrix<Word>(3);
  CHECK(b3(0, 0) == nc("d1"));
  CHECK(b3(0, 2) == nc("d3"));
  CHECK(b3(1, 2) == nc("2*d2"));
  CHECK(b3(2, 1) == nc("-1"));
  CHECK(b3(2, 0).is_zero());
  CHECK(bell_matrix<Word>(1)(0, 0) == nc("d1"));
  const auto b6 = bell_matrix<Word>(6);
  const char* last_column[] = {"d6", "5*d5", "10*d4", "10*d3", "5*d2", "d1"};
  for (std::size_t i = 0; i < 6; ++i) CHECK(b6(i, 5) == nc(last_column[i]));
  CHECK(bell_via_quasidet<Word>(4) ==
        nc("d4 + 3*d1*d3 + 3*d2^2 + d3*d1 + 3*d1^2*d2 + 2*d1*d2*d1 + d2*d1^2 + d1^4"));
  CHECK(bell_via_quasidet<Monomial>(3) == cm("d1^3 + 3*d1*d2 + d3"));
  CHECK(det_cofactor(bell_matrix<Monomial>(3)) == cm("d1^3 + 3*d1*d2 + d3"));
  for (int n = 1; n <= 8; ++n) {
    CHECK(bell_via_quasidet<Word>(n) == bell<Word>(n));
    CHECK(bell_via_quasidet<Monomial>(n) == bell<Monomial>(n));
  }
  CHECK(to_text(b3, 0, 2) == "| d1 d2 [d3] |\n| -1 d1 2*d2 |\n|  0 -1   d1 |\n");
}

TEST_CASE("determinants") {
  CHECK(det_bareiss(NumMatrix::identity(5, Rational(1), Rational(0))) == 1);
  CHECK(det_cofactor(NumMatrix::identity(4, Rational(1), Rational(0))) == 1);
  NumMatrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK(det_bareiss(s) == 0);
  CHECK_THROWS_AS(inverse(s), std::domain_error);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_matrix(rng, 4), b = random_matrix(rng, 4);
    CHECK(det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b));
    CHECK(det_cofactor(a) == det_bareiss(a));
  }
}

TEST_CASE("numeric quasideterminants") {
  NumMatrix m(2, 2);
  m(0, 0) = 3;
  m(0, 1) = 5;
  m(1, 0) = 7;
  m(1, 1) = 2;
  CHECK(numeric_quasidet(m, 0, 0) == Rational(3) - Rational(5) * Rational(7, 2));
  for (std::size_t p = 0; p < 4; ++p) CHECK(numeric_quasidet(NumMatrix::identity(4, 1, 0), p, p) == 1);
  NumMatrix singular(3, 3, Rational(1));
  CHECK_THROWS_AS(numeric_quasidet(singular, 0, 0), std::domain_error);
  std::mt19937_64 rng(101);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto a = random_matrix(rng, n);
    const std::size_t p = trial % n, q = (trial / 3) % n;
    if (det_bareiss(a) == 0 || det_bareiss(a.minor(p, q)) == 0) continue;
    CHECK(numeric_quasidet(a, p, q) == quasidet_by_determinants(a, p, q));
    ++checked;
  }
  CHECK(checked >= 100);
}
