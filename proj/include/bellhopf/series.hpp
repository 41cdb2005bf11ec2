#pragma once

// Truncated power series, multivariate polynomials and polynomial vector
// fields on rational affine space.
//
// FormalSeries stores raw coefficients c_0..c_N of t^n; divided() gives the
// divided-power view f_n = n! c_n.

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "bellhopf/algebra.hpp"
#include "bellhopf/rational.hpp"

namespace bellhopf {

/// Polynomial in x1..xm with rational coefficients. Exponent vectors carry no
/// trailing zeros, so the same value is valid in every dimension >= its
/// largest variable.
class MultiPoly {
 public:
  using exponents = std::vector<int>;
  using term_map = std::map<exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  /// x_{i+1} (0-based variable index).
  static MultiPoly variable(int i);
  static MultiPoly monomial(exponents e, const Rational& c = 1);

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  /// Number of variables actually used.
  int variables() const;
  int degree() const;
  Rational coefficient(const exponents& e) const;

  void add_term(exponents e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  term_map terms_;
};

/// ∂p/∂x_{i+1}.
MultiPoly partial(const MultiPoly& p, int i);

/// "x1^2*x2 - 1/2*x3"; highest term first, "0" for zero.
std::string to_string(const MultiPoly& p);

namespace detail {

template <class R>
bool ring_is_zero(const R& x) {
  if constexpr (std::is_same_v<R, Rational>) {
    return x == 0;
  } else {
    return x.is_zero();
  }
}

template <class R>
R ring_from(const Rational& c) {
  if constexpr (std::is_same_v<R, Rational>) {
    return c;
  } else {
    return R(c);
  }
}

/// Inverse of a unit: nonzero rationals, or constant polynomials.
template <class R>
R ring_inverse(const R& x) {
  if constexpr (std::is_same_v<R, Rational>) {
    if (x == 0) throw std::domain_error("leading coefficient is not invertible");
    return 1 / x;
  } else {
    if (x.terms().size() != 1 || x != R(x.terms().begin()->second))
      throw std::domain_error("leading coefficient is not invertible");
    return R(Rational(1 / x.terms().begin()->second));
  }
}

}  // namespace detail

template <class R>
class FormalSeries {
 public:
  FormalSeries() = default;
  /// Zero series through order N.
  explicit FormalSeries(int order) : c_(static_cast<std::size_t>(check_order(order)) + 1) {}
  FormalSeries(int order, std::vector<R> raw) : FormalSeries(order) {
    if (raw.size() > c_.size()) throw std::invalid_argument("more coefficients than the truncation order allows");
    for (std::size_t i = 0; i < raw.size(); ++i) c_[i] = std::move(raw[i]);
  }
  /// From divided-power coefficients f_0..f_N (c_n = f_n / n!).
  static FormalSeries from_divided(int order, const std::vector<R>& f) {
    FormalSeries s(order);
    if (f.size() > s.c_.size()) throw std::invalid_argument("more coefficients than the truncation order allows");
    for (std::size_t n = 0; n < f.size(); ++n) {
      const Rational scale = Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
      s.c_[n] = scale * f[n];
    }
    return s;
  }
  /// t through order N.
  static FormalSeries identity(int order) {
    FormalSeries s(order);
    if (order >= 1) s.c_[1] = detail::ring_from<R>(1);
    return s;
  }
  static FormalSeries constant(int order, const R& c) {
    FormalSeries s(order);
    s.c_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  R& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<R>& coefficients() const { return c_; }
  /// n! c_n.
  R divided(int n) const { return Rational(factorial(static_cast<unsigned>(n))) * (*this)[n]; }

  /// Same coefficients, truncated to a lower order.
  FormalSeries truncate(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot raise the truncation order");
    return FormalSeries(order, std::vector<R>(c_.begin(), c_.begin() + order + 1));
  }

  FormalSeries& operator+=(const FormalSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  FormalSeries& operator-=(const FormalSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(const Rational& s, FormalSeries a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  /// Truncated Cauchy product.
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    a.same_order(b);
    FormalSeries r(a.order());
    const std::size_t n = a.c_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (detail::ring_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    return order;
  }
  void same_order(const FormalSeries& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("series have different truncation orders");
  }

  std::vector<R> c_;
};

using RationalSeries = FormalSeries<Rational>;

/// f ∘ g through the common order, by Horner's rule. Throws
/// std::invalid_argument unless g_0 = 0.
template <class R>
FormalSeries<R> compose(const FormalSeries<R>& f, const FormalSeries<R>& g) {
  if (f.order() != g.order()) throw std::invalid_argument("series have different truncation orders");
  if (!detail::ring_is_zero(g[0])) throw std::invalid_argument("inner series must have zero constant term");
  const int n = f.order();
  FormalSeries<R> h = FormalSeries<R>::constant(n, f[n]);
  for (int k = n - 1; k >= 0; --k) h = h * g + FormalSeries<R>::constant(n, f[k]);
  return h;
}

/// h_n = sum_k f_k B_{n,k}(g_1, g_2, ...) in divided powers, h_0 = f_0.
template <class R>
FormalSeries<R> compose_via_bell(const FormalSeries<R>& f, const FormalSeries<R>& g);

/// Compositional inverse: compose(g, h) = compose(h, g) = t. Throws
/// std::invalid_argument unless g_0 = 0, std::domain_error unless g_1 is a
/// unit.
template <class R>
FormalSeries<R> reversion(const FormalSeries<R>& g);

/// exp(a) for a with a_0 = 0, via n e_n = sum_k k a_k e_{n-k}.
template <class R>
FormalSeries<R> exp(const FormalSeries<R>& a);

struct SeriesCheck {
  bool ok = true;
  int checked = 0;
  std::string failure;
};

/// exp(sum_m d_m t^m / m!) against 1 + sum_n B_n t^n / n! (commutative),
/// for n <= order.
SeriesCheck egf_bell_check(int order);

struct VectorField {
  int dimension = 0;
  std::vector<MultiPoly> components;

  VectorField() = default;
  VectorField(int dimension, std::vector<MultiPoly> components);
};

/// F_t = sum_{j >= 0} t^j / j! F_{j+1}; fields[j] holds F_{j+1}.
struct TimeDependentField {
  int dimension = 0;
  std::vector<VectorField> fields;

  TimeDependentField() = default;
  TimeDependentField(int dimension, std::vector<VectorField> fields);
  static TimeDependentField autonomous(const VectorField& f, int truncation);
};

/// F[ψ] = sum_i F^i ∂ψ/∂x_i. Throws std::invalid_argument when ψ uses more
/// variables than F has components.
MultiPoly lie_derivative(const VectorField& f, const MultiPoly& psi);
/// Component-wise F[G].
VectorField lie_derivative(const VectorField& f, const VectorField& g);

/// B_n(F_1, ..., F_n)[ψ]: word d_{j_1}...d_{j_k} acts as
/// F_{j_1}[F_{j_2}[... F_{j_k}[ψ] ...]].
MultiPoly bell_apply(const std::vector<VectorField>& fields, const MultiPoly& psi, int n);

/// n! [t^n] ψ(y(t)) for n = 0..order, where y' = F_t(y), y(0) = x, solved by
/// Picard iteration with symbolic base point x. Throws std::invalid_argument
/// when order exceeds the number of time coefficients.
std::vector<MultiPoly> flow_pullback_taylor(const TimeDependentField& f, const MultiPoly& psi, int order);

/// Random instances with small rational coefficients, for property checks.
RationalSeries random_series(std::mt19937_64& rng, int order, bool zero_constant);
/// One to three terms in x1..x_variables of total degree <= max_degree.
MultiPoly random_poly(std::mt19937_64& rng, int variables, int max_degree);
/// Components from random_poly of degree <= 2.
VectorField random_field(std::mt19937_64& rng, int dimension);

}  // namespace bellhopf
