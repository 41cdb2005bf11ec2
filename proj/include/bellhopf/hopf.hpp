#pragma once

// The Faà di Bruno Hopf algebra (commuting generators X_1, X_2, ..., monomial
// type Monomial) and the Dynkin-Faà di Bruno Hopf algebra (free generators,
// monomial type Word). X_0 is the unit. Letter d_i of the underlying
// polynomial types plays the generator X_i; render with symbol "X".

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bellhopf/algebra.hpp"
#include "bellhopf/format.hpp"
#include "bellhopf/quasidet.hpp"

namespace bellhopf {

/// Element of H^{⊗N}: finite map from N-tuples of monomials to rationals.
template <class M, std::size_t N>
class Tensor {
 public:
  using key_type = std::array<M, N>;
  using term_map = std::map<key_type, Rational>;

  Tensor() = default;
  static Tensor unit() {
    Tensor t;
    key_type k;
    k.fill(M::unit());
    t.add_term(k, 1);
    return t;
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coefficient(const key_type& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const key_type& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

  /// Componentwise product (a_1 ⊗ ... ⊗ a_N)(b_1 ⊗ ... ⊗ b_N).
  friend Tensor operator*(const Tensor& a, const Tensor& b) {
    Tensor r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        key_type k;
        for (std::size_t i = 0; i < N; ++i) k[i] = ka[i] * kb[i];
        r.add_term(k, ca * cb);
      }
    return r;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  term_map terms_;
};

template <class M>
using TensorPoly = Tensor<M, 2>;

/// p ⊗ q.
template <class M>
TensorPoly<M> tensor(const Poly<M>& p, const Poly<M>& q);

/// Multiplication map m: H ⊗ H -> H.
template <class M>
Poly<M> multiply(const TensorPoly<M>& t);

/// W_{n,k} = B_{n+1,k+1}(X_0, X_1, ...) with X_0 = 1.
template <class M>
Poly<M> rank_poly(int n, int k);

/// Δ(X_n) = sum_k W_{n,k} ⊗ X_k.
template <class M>
TensorPoly<M> coproduct_generator(int n);

/// Δ extended as an algebra morphism; Δ(1) = 1 ⊗ 1.
template <class M>
TensorPoly<M> coproduct(const Poly<M>& p);

/// Δ(X_n) by summing over all set partitions S of {1..n+1}: left leg the
/// product of X_{|B|-1} over blocks B (ordered by maxima), right leg
/// X_{#blocks - 1}.
template <class M>
TensorPoly<M> coproduct_oracle(int n);

/// ε: coefficient of the unit.
template <class M>
Rational counit(const Poly<M>& p);

enum class AntipodeSide {
  /// From m(id ⊗ S)Δ = ηε: S(X_n) = -X_n - sum_{k=1}^{n-1} W_{n,k} S(X_k).
  right,
  /// From m(S ⊗ id)Δ = ηε: S(X_n) = -X_n - sum_{k=1}^{n-1} S(W_{n,k}) X_k.
  left,
};

/// S(X_1), ..., S(X_n) by the chosen recursion (index 0 holds S(X_0) = 1).
template <class M>
std::vector<Poly<M>> antipode_generators(int n, AntipodeSide side = AntipodeSide::right);

template <class M>
Poly<M> antipode_recursive(int n, AntipodeSide side = AntipodeSide::right);

/// Noncommutative: Hessenberg quasideterminant of A with
/// A_{ij} = -W_{n-i+1, n-j} (1-based), whose subdiagonal is -W_{k,k} = -1.
/// Commutative: (-1)^n det(W_{n-i+1, n-j}).
template <class M>
Poly<M> antipode_quasidet(int n);

/// The rank-polynomial matrix (W_{n-i+1, n-j})_{1 <= i, j <= n}.
template <class M>
Matrix<Poly<M>> antipode_matrix(int n);

/// S on arbitrary elements, given S on generators X_1..X_d. Anti-morphism
/// for words, morphism for commutative monomials.
template <class M>
Poly<M> apply_antipode(const Poly<M>& p, const std::vector<Poly<M>>& on_generators);

/// Applies maps leg-wise to a 2-tensor and multiplies: m ∘ (f ⊗ g).
template <class M, class F, class G>
Poly<M> convolve_apply(const TensorPoly<M>& t, F&& f, G&& g) {
  Poly<M> r;
  for (const auto& [k, c] : t) r += c * (f(Poly<M>::term(k[0])) * g(Poly<M>::term(k[1])));
  return r;
}

/// Leg-wise abelianization of a DFdB tensor.
TensorPoly<Monomial> abelianize(const TensorPoly<Word>& t);

/// "X2 (x) 1 + 3*X1 (x) X1 + 1 (x) X2"; largest left leg first.
template <class M>
std::string to_text(const TensorPoly<M>& t, std::string_view symbol = "X");

/// "X_2 \otimes 1 + 3 X_1 \otimes X_1 + 1 \otimes X_2".
template <class M>
std::string to_latex(const TensorPoly<M>& t, std::string_view symbol = "X");

/// {algebra, tensor: true, terms: [{coeff, left, right}]}, legs as letter codes.
template <class M>
json to_json(const TensorPoly<M>& t);

struct HopfReport {
  bool ok = true;
  int checks = 0;
  std::string failure;
};

/// Coassociativity, both counit laws, both antipode laws and multiplicativity
/// of Δ on all generators X_1..X_max_degree and on `samples` random products
/// of total degree <= max_degree.
template <class M>
HopfReport hopf_axiom_check(int max_degree, std::uint64_t seed, int samples = 50);

}  // namespace bellhopf
