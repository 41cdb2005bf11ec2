#pragma once

// Bialgebras on the letters d_1, d_2, ... with d_1 invertible, graded by
// |d_i| = i - 1: Δ(d_n) = sum_k B_{n,k} ⊗ d_k. Word gives the noncommutative
// variant, Monomial the commutative one. Möbius inversion expresses d_n in
// the Bell polynomials, written as symbols B_j (letter j rendered with "B").

#include <vector>

#include "bellhopf/algebra.hpp"
#include "bellhopf/hopf.hpp"

namespace bellhopf {

/// Δ(d_n) = sum_{k=1}^n B_{n,k}(d_1, ..., d_n) ⊗ d_k, n >= 1.
template <class M>
TensorPoly<M> mobius_coproduct_generator(int n);

/// Δ extended multiplicatively, with Δ(d_1^{-1}) = d_1^{-1} ⊗ d_1^{-1}.
template <class M>
TensorPoly<M> mobius_coproduct(const Poly<M>& p);

/// Multiplicative with ε(d_1) = ε(d_1^{-1}) = 1 and ε(d_n) = 0 for n >= 2.
template <class M>
Rational mobius_counit(const Poly<M>& p);

enum class MobiusSide {
  /// From id ⋆ S = ε:
  /// S(d_n) = d_1^{-n} (-d_n d_1^{-1} - sum_{k=2}^{n-1} B_{n,k} S(d_k)).
  right,
  /// From S ⋆ id = ε:
  /// S(d_n) = (-d_1^{-n} d_n - sum_{k=2}^{n-1} S(B_{n,k}) d_k) d_1^{-1}.
  left,
};

/// S(d_1), ..., S(d_n); index 0 is unused and holds 1.
template <class M>
std::vector<Poly<M>> mobius_antipode_generators(int n, MobiusSide side = MobiusSide::right);

template <class M>
Poly<M> mobius_antipode(int n, MobiusSide side = MobiusSide::right);

/// S on arbitrary elements from its values on d_1..d_N, with
/// S(d_1^{-1}) = d_1. Anti-morphism for words.
template <class M>
Poly<M> apply_mobius_antipode(const Poly<M>& p, const std::vector<Poly<M>>& on_generators);

/// ζ: every letter, d_1^{-1} included, goes to 1.
template <class M>
Rational zeta(const Poly<M>& p);

/// μ(d_1), ..., μ(d_n) with μ = ζ ∘ S; index 0 holds 1.
template <class M>
std::vector<Rational> mobius_values(int n, MobiusSide side = MobiusSide::right);

/// B = id ⋆ ζ on an element: the letter d_j becomes the symbol B_j. Returns
/// the same polynomial, to be rendered with symbol "B".
template <class M>
Poly<M> bell_map(const Poly<M>& p);

/// d_n = sum_k μ(d_k) B(B_{n,k}), as a polynomial in the symbols B_j.
template <class M>
Poly<M> mobius_invert(int n);

/// Substitutes B_j -> bell(j) (and B_1^{-1} -> d_1^{-1}).
template <class M>
Poly<M> expand_bell_symbols(const Poly<M>& p);

struct MobiusReport {
  bool ok = true;
  int checks = 0;
  std::string failure;
};

/// Left antipode = right antipode, m(id ⊗ S)Δ = m(S ⊗ id)Δ = ε and
/// μ ⋆ ζ = ζ ⋆ μ = ε on d_1..d_n, plus the round trip of mobius_invert.
template <class M>
MobiusReport mobius_check(int n);

}  // namespace bellhopf
