#pragma once

// Characters of the commutative Faà di Bruno Hopf algebra and their link with
// composition of formal diffeomorphisms.

#include <cstdint>
#include <vector>

#include "bellhopf/algebra.hpp"
#include "bellhopf/series.hpp"

namespace bellhopf {

/// Values on X_0 = 1, X_1, ..., X_N; extended multiplicatively.
struct Character {
  std::vector<Rational> values;

  int degree() const { return static_cast<int>(values.size()) - 1; }
  Rational operator()(const CPoly& p) const;
};

/// φ_g(X_n) = g_{n+1} (divided powers), n = 0..g.order()-1. Throws
/// std::invalid_argument unless g_0 = 0 and std::domain_error unless g_1 = 1,
/// since φ_g(X_0) must be 1.
Character character_of_series(const RationalSeries& g);

/// (α ⋆ β)(X_n) = sum_k α(W_{n,k}) β(X_k), on the common degree range.
Character convolve(const Character& alpha, const Character& beta);

/// α ∘ S on X_0..X_N.
Character compose_with_antipode(const Character& alpha);

enum class CompositionOrder {
  /// φ_f ⋆ φ_g = φ_{f∘g}.
  outer_first,
  /// φ_f ⋆ φ_g = φ_{g∘f}.
  inner_first,
};

/// Compares φ_f ⋆ φ_g with φ_{f∘g} and φ_{g∘f} on X_1..X_3 for a few random
/// pairs. Throws std::logic_error if neither order fits.
CompositionOrder detect_composition_order(std::uint64_t seed);

/// Random series t + a_2 t^2 + ... through `order` with small rational a_i.
RationalSeries random_unit_series(std::uint64_t& state, int order);

/// W_{n,k} = (n+1)!/(k+1)! [t^{n-k}] (1 + sum_{m>0} X_m t^m/(m+1)!)^{k+1},
/// expanded by truncated series arithmetic.
bool generating_series_rank_check(int n, int k);

/// X_j = (j+1)! x_j: rewrites a polynomial in X (letters d_j) as one in the
/// lowercase generators.
CPoly to_lowercase(const CPoly& p);
CPoly from_lowercase(const CPoly& p);

}  // namespace bellhopf
