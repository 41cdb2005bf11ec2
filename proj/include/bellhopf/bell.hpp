#pragma once

// Bell polynomials in the letters d_i. The monomial type selects the variant:
// Word gives the noncommutative polynomials, Monomial the commutative ones.

#include <map>
#include <span>
#include <vector>

#include "bellhopf/algebra.hpp"
#include "bellhopf/qpoly.hpp"

namespace bellhopf {

/// B_0 = 1, B_n = (d_1 + derive) B_{n-1}, with d_1 multiplied on the left.
template <class M>
Poly<M> bell(int n);

/// B_{m+1} = sum_k binom(m, k) B_{m-k} d_{k+1}, independent of derive.
template <class M>
Poly<M> bell_recursion(int n);

/// Length-k part of B_n. B_{0,0} = 1; zero when k > n or (k = 0, n > 0).
template <class M>
Poly<M> bell_partial(int n, int k);

/// kappa(d_{j1}...d_{jk}) = j1...jk / (j1 (j1+j2) ... (j1+...+jk)).
Rational kappa(const Word& w);

/// sum over compositions omega of n into k parts of
/// binom(n; omega) kappa(omega) omega.
NCPoly bell_explicit(int n, int k);

/// sum over alpha with sum alpha_i = k, sum i alpha_i = n of
/// n! / (alpha_1! ... alpha_n!) prod (d_i / i!)^alpha_i.
CPoly bell_c_explicit(int n, int k);

/// Q_{n,k} = B_{n,k}(1! d_1, 2! d_2, ...) / n!.
NCPoly bell_scaled(int n, int k);
/// Q_n = sum_k Q_{n,k}.
NCPoly bell_scaled(int n);

enum class QNumerator {
  /// p_1 ... p_k as plain integers.
  plain,
  /// [p_1]_q ... [p_k]_q.
  bracketed,
};

/// Coefficient of d_{p_1}...d_{p_k} in the q-Bell polynomial:
/// n!_q / (p_1!_q ... p_k!_q) * numerator / ([p_1] [p_1+p_2] ... [p_1+...+p_k]).
/// Throws std::domain_error when the quotient is not a polynomial in q.
QPoly qbell_coefficient(std::span<const int> parts, QNumerator numerator = QNumerator::bracketed);

struct QBellTerm {
  std::vector<int> parts;
  QPoly coefficient;
};

/// One term per composition of n into k parts.
std::vector<QBellTerm> qbell_terms(int n, int k, QNumerator numerator = QNumerator::bracketed);

/// The q-Bell polynomial in commuting letters: terms of qbell_terms grouped
/// by their multiset of parts.
std::map<Monomial, QPoly> qbell(int n, int k, QNumerator numerator = QNumerator::bracketed);

}  // namespace bellhopf
