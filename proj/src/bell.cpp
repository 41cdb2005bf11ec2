#include "bellhopf/bell.hpp"

#include <stdexcept>

#include "bellhopf/partitions.hpp"

namespace bellhopf {

namespace {

void require_natural(int n) {
  if (n < 0) throw std::invalid_argument("degree must be >= 0, got " + std::to_string(n));
}

}  // namespace

template <class M>
Poly<M> bell(int n) {
  require_natural(n);
  const Poly<M> d1 = Poly<M>::letter(1);
  Poly<M> b = Poly<M>::unit();
  for (int i = 1; i <= n; ++i) b = d1 * b + derive(b);
  return b;
}

template <class M>
Poly<M> bell_recursion(int n) {
  require_natural(n);
  std::vector<Poly<M>> b{Poly<M>::unit()};
  for (int m = 0; m < n; ++m) {
    Poly<M> next;
    for (int k = 0; k <= m; ++k) next += Rational(binomial(m, k)) * (b[m - k] * Poly<M>::letter(k + 1));
    b.push_back(std::move(next));
  }
  return b[n];
}

template <class M>
Poly<M> bell_partial(int n, int k) {
  require_natural(n);
  if (k < 0 || k > n) return {};
  return restrict_length(bell<M>(n), static_cast<std::size_t>(k));
}

template Poly<Word> bell<Word>(int);
template Poly<Monomial> bell<Monomial>(int);
template Poly<Word> bell_recursion<Word>(int);
template Poly<Monomial> bell_recursion<Monomial>(int);
template Poly<Word> bell_partial<Word>(int, int);
template Poly<Monomial> bell_partial<Monomial>(int, int);

Rational kappa(const Word& w) {
  if (w.empty()) throw std::invalid_argument("kappa of the empty word");
  Integer num = 1, den = 1;
  int partial = 0;
  for (Letter l : w.letters()) {
    if (l.inverted()) throw std::domain_error("kappa is undefined on d1^-1");
    partial += l.index();
    num *= l.index();
    den *= partial;
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

NCPoly bell_explicit(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("bell_explicit needs 1 <= k <= n");
  NCPoly r;
  for (const auto& parts : compositions(n, k)) {
    const Word w = Word::from_codes(std::span<const int>(parts));
    r.add_term(w, Rational(multinomial(parts)) * kappa(w));
  }
  return r;
}

CPoly bell_c_explicit(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("bell_c_explicit needs 1 <= k <= n");
  CPoly r;
  std::vector<int> alpha(static_cast<std::size_t>(n) + 1, 0);
  // alpha[i] = number of letters d_i; choose them from the largest index down.
  auto rec = [&](auto&& self, int i, int count_left, int grade_left) -> void {
    if (i == 0) {
      if (count_left != 0 || grade_left != 0) return;
      Rational c = Rational(factorial(static_cast<unsigned>(n)));
      std::map<int, int> exps;
      for (int j = 1; j <= n; ++j) {
        if (alpha[j] == 0) continue;
        exps[j] = alpha[j];
        Integer den = factorial(static_cast<unsigned>(alpha[j]));
        for (int e = 0; e < alpha[j]; ++e) den *= factorial(static_cast<unsigned>(j));
        c /= Rational(den);
      }
      r.add_term(Monomial(std::move(exps)), c);
      return;
    }
    for (int a = 0; a * i <= grade_left && a <= count_left; ++a) {
      alpha[i] = a;
      self(self, i - 1, count_left - a, grade_left - a * i);
    }
    alpha[i] = 0;
  };
  rec(rec, n, k, n);
  return r;
}

NCPoly bell_scaled(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("bell_scaled needs 1 <= k <= n");
  std::map<int, NCPoly> scale;
  for (int i = 1; i <= n; ++i) scale.emplace(i, NCPoly::letter(i, Rational(factorial(static_cast<unsigned>(i)))));
  NCPoly q = substitute(bell_partial<Word>(n, k), scale);
  q *= Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
  return q;
}

NCPoly bell_scaled(int n) {
  require_natural(n);
  if (n == 0) return NCPoly::unit();
  NCPoly q;
  for (int k = 1; k <= n; ++k) q += bell_scaled(n, k);
  return q;
}

QPoly qbell_coefficient(std::span<const int> parts, QNumerator numerator) {
  if (parts.empty()) throw std::invalid_argument("qbell needs at least one part");
  int n = 0;
  QPoly num(Rational(1)), den(Rational(1));
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("qbell parts must be positive");
    n += p;
    den = den * q_factorial(p) * q_integer(n);
    num = numerator == QNumerator::bracketed ? num * q_integer(p) : Rational(p) * num;
  }
  num = num * q_factorial(n);
  return num.divide_exact(den);
}

std::vector<QBellTerm> qbell_terms(int n, int k, QNumerator numerator) {
  if (k < 1 || k > n) throw std::invalid_argument("qbell needs 1 <= k <= n");
  std::vector<QBellTerm> out;
  for (auto& parts : compositions(n, k)) {
    QPoly c = qbell_coefficient(parts, numerator);
    out.push_back({std::move(parts), std::move(c)});
  }
  return out;
}

std::map<Monomial, QPoly> qbell(int n, int k, QNumerator numerator) {
  std::map<Monomial, QPoly> out;
  for (const auto& t : qbell_terms(n, k, numerator))
    out[Monomial::from_codes(std::span<const int>(t.parts))] += t.coefficient;
  return out;
}

}  // namespace bellhopf
