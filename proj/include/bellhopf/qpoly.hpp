#pragma once

#include <string>
#include <vector>

#include "bellhopf/rational.hpp"

namespace bellhopf {

/// Univariate polynomial in q with rational coefficients; coefficient i is the
/// coefficient of q^i. Trailing zeros are trimmed, so the zero polynomial has
/// no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const Rational& constant);
  explicit QPoly(std::vector<Rational> coefficients);

  static QPoly q() { return QPoly({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t degree) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational evaluate(const Rational& q) const;
  Rational at_one() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& s, const QPoly& a);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Exact quotient. Throws std::domain_error if the division leaves a
  /// remainder or the divisor is zero.
  QPoly divide_exact(const QPoly& divisor) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
QPoly q_integer(int n);
/// n!_q = [1]_q [2]_q ... [n]_q.
QPoly q_factorial(int n);
/// Gaussian binomial coefficient; zero outside 0 <= k <= n.
QPoly q_binomial(int n, int k);

/// "1 + q + 2*q^3"; "0" for zero.
std::string to_string(const QPoly& p);

}  // namespace bellhopf
