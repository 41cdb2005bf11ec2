#include "bellhopf/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bellhopf {

QPoly::QPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coefficient(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : Rational(0);
}

Rational QPoly::evaluate(const Rational& q) const {
  Rational v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * q + *it;
  return v;
}

Rational QPoly::at_one() const {
  Rational v = 0;
  for (const auto& c : coeffs_) v += c;
  return v;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPoly(std::move(r));
}

QPoly operator*(const Rational& s, const QPoly& a) {
  std::vector<Rational> r = a.coeffs_;
  for (auto& c : r) c *= s;
  return QPoly(std::move(r));
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero q-polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw std::domain_error("inexact q-polynomial division");
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
  const Rational& lead = divisor.coeffs_.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rational c = rem[i + divisor.coeffs_.size() - 1] / lead;
    quot[i] = c;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) rem[i + j] -= c * divisor.coeffs_[j];
  }
  if (std::ranges::any_of(rem, [](const Rational& r) { return r != 0; }))
    throw std::domain_error("inexact q-polynomial division");
  return QPoly(std::move(quot));
}

QPoly q_integer(int n) {
  if (n < 0) throw std::invalid_argument("q_integer of a negative number");
  return QPoly(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

QPoly q_factorial(int n) {
  QPoly r(Rational(1));
  for (int i = 2; i <= n; ++i) r = r * q_integer(i);
  return r;
}

QPoly q_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return {};
  // q-Pascal rule: [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<QPoly> row{QPoly(Rational(1))};
  for (int m = 1; m <= n; ++m) {
    std::vector<QPoly> next(static_cast<std::size_t>(m) + 1);
    next[0] = QPoly(Rational(1));
    next[m] = QPoly(Rational(1));
    for (int j = 1; j < m; ++j) {
      std::vector<Rational> shift(static_cast<std::size_t>(j), Rational(0));
      shift.push_back(1);
      next[j] = row[j - 1] + QPoly(std::move(shift)) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += i == 1 ? "q" : "q^" + std::to_string(i);
  }
  return out;
}

}  // namespace bellhopf
