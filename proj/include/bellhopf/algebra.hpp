#pragma once

// Graded free associative algebra over the rationals and its commutative
// quotient. Letters d_1, d_2, ... carry grade |d_i| = i; the extended alphabet
// also contains d_1^{-1}, which only the Moebius constructions create.

#include <compare>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bellhopf/rational.hpp"

namespace bellhopf {

class Letter {
 public:
  Letter() = default;
  explicit Letter(int index, bool inverted = false);

  /// Signed code used by the structured format: i for d_i, -1 for d_1^{-1}.
  static Letter from_code(int code);

  int index() const { return index_; }
  bool inverted() const { return inverted_; }
  int code() const { return inverted_ ? -1 : index_; }
  // d_1^{-1} sorts before d_1.
  int sort_key() const { return inverted_ ? 0 : index_; }
  int mobius_grade() const { return inverted_ ? 0 : index_ - 1; }
  bool cancels(Letter other) const {
    return index_ == 1 && other.index_ == 1 && inverted_ != other.inverted_;
  }

  friend bool operator==(Letter a, Letter b) { return a.sort_key() == b.sort_key(); }
  friend std::strong_ordering operator<=>(Letter a, Letter b) { return a.sort_key() <=> b.sort_key(); }

 private:
  int index_ = 1;
  bool inverted_ = false;
};

/// A power of a single letter inside a monomial. Negative powers stand for
/// powers of d_1^{-1}.
struct Factor {
  int index;
  int power;
};

/// Reduced word: no adjacent d_1 d_1^{-1} or d_1^{-1} d_1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  /// Builds from signed letter codes, e.g. {2, 1, -1}.
  static Word from_codes(std::initializer_list<int> codes);
  static Word from_codes(std::span<const int> codes);

  static Word unit() { return {}; }
  static Word of(Letter l) { return Word(std::vector<Letter>{l}); }

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool has_inverse() const;
  /// Sum of letter indices. Throws std::domain_error when d_1^{-1} occurs.
  int grade() const;
  int mobius_grade() const;
  std::vector<int> codes() const;
  std::vector<Factor> factors() const;
  Word reversed() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  // Ascending by length, then lexicographic on letters.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Commutative monomial: exponent map index -> non-zero exponent. Only index 1
/// may carry a negative exponent.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::map<int, int> exponents);
  static Monomial unit() { return {}; }
  static Monomial of(Letter l);
  static Monomial from_codes(std::initializer_list<int> codes);
  static Monomial from_codes(std::span<const int> codes);

  const std::map<int, int>& exponents() const { return exps_; }
  int exponent(int index) const;
  /// Number of letters, counting d_1^{-1} like any other letter.
  std::size_t length() const;
  bool empty() const { return exps_.empty(); }
  bool has_inverse() const;
  int grade() const;
  int mobius_grade() const;
  /// Sorted letter codes with multiplicity, d_1^{-1} as -1.
  std::vector<int> codes() const;
  std::vector<Factor> factors() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::map<int, int> exps_;
};

template <class M>
inline constexpr bool is_commutative_v = std::is_same_v<M, Monomial>;

/// Finite linear combination of monomials with rational coefficients. No zero
/// coefficient is ever stored, so structural equality is mathematical
/// equality.
template <class M>
class Poly {
 public:
  using monomial_type = M;
  using term_map = std::map<M, Rational>;

  Poly() = default;
  explicit Poly(const Rational& constant) {
    if (constant != 0) terms_.emplace(M::unit(), constant);
  }

  static Poly unit() { return Poly(Rational(1)); }
  static Poly term(M m, const Rational& c = 1) {
    Poly p;
    p.add_term(m, c);
    return p;
  }
  static Poly letter(int code, const Rational& c = 1) { return term(M::of(Letter::from_code(code)), c); }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coefficient(const M& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const M& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  term_map terms_;
};

using NCPoly = Poly<Word>;
using CPoly = Poly<Monomial>;

template <class M>
Poly<M> pow(const Poly<M>& p, unsigned e) {
  Poly<M> r = Poly<M>::unit();
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

/// The derivation d_i -> d_{i+1} extended by the Leibniz rule. Throws
/// std::domain_error on input containing d_1^{-1}.
NCPoly derive(const NCPoly& p);
CPoly derive(const CPoly& p);

/// Quotient map to commuting letters.
CPoly abelianize(const NCPoly& p);
Monomial abelianize(const Word& w);

/// Keeps the terms whose monomial has exactly k letters.
template <class M>
Poly<M> restrict_length(const Poly<M>& p, std::size_t k) {
  Poly<M> r;
  for (const auto& [m, c] : p)
    if (m.length() == k) r.add_term(m, c);
  return r;
}

/// Multiplicative substitution of letters, keyed by letter code (-1 addresses
/// d_1^{-1}). Word order is preserved. Throws std::out_of_range when a letter
/// of p has no image.
template <class M>
Poly<M> substitute(const Poly<M>& p, const std::map<int, Poly<M>>& images) {
  Poly<M> result;
  for (const auto& [m, c] : p) {
    Poly<M> image = Poly<M>(c);
    for (const Factor& f : m.factors()) {
      const int code = f.power < 0 ? -1 : f.index;
      auto it = images.find(code);
      if (it == images.end())
        throw std::out_of_range("substitute: no image for letter code " + std::to_string(code));
      image *= pow(it->second, static_cast<unsigned>(f.power < 0 ? -f.power : f.power));
    }
    result += image;
  }
  return result;
}

/// Evaluates under a multiplicative assignment letter code -> value.
template <class M, class ValueOf>
Rational evaluate(const Poly<M>& p, ValueOf&& value_of) {
  Rational total = 0;
  for (const auto& [m, c] : p) {
    Rational v = c;
    for (const Factor& f : m.factors()) {
      const Rational base = value_of(f.power < 0 ? -1 : f.index);
      const int e = f.power < 0 ? -f.power : f.power;
      for (int i = 0; i < e; ++i) v *= base;
    }
    total += v;
  }
  return total;
}

/// Sum of all coefficients with every letter set to 1.
template <class M>
Rational coefficient_sum(const Poly<M>& p) {
  Rational total = 0;
  for (const auto& [m, c] : p) total += c;
  return total;
}

}  // namespace bellhopf
