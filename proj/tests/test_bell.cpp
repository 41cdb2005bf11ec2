#include <doctest.h>

#include "bellhopf/bell.hpp"
#include "bellhopf/format.hpp"
#include "bellhopf/partitions.hpp"

using namespace bellhopf;

namespace {

NCPoly nc(std::string_view s) { return parse_poly<Word>(s); }
CPoly cm(std::string_view s) { return parse_poly<Monomial>(s); }

}  // namespace

TEST_CASE("reference noncommutative table") {
  CHECK(bell<Word>(0) == NCPoly::unit());
  CHECK(bell<Word>(1) == nc("d1"));
  CHECK(bell<Word>(2) == nc("d1^2 + d2"));
  CHECK(bell<Word>(3) == nc("d1^3 + d2*d1 + 2*d1*d2 + d3"));
  CHECK(bell<Word>(4) == nc("d1^4 + 3*d1^2*d2 + 3*d2^2 + d3*d1 + d2*d1^2 + 2*d1*d2*d1 + 3*d1*d3 + d4"));
  const NCPoly b5 = nc(
      "d1^5 + 6*d1^2*d3 + 6*d2*d3 + 4*d3*d2 + 4*d1^3*d2 + 4*d2*d1*d2 + 8*d1*d2^2"
      " + d4*d1 + 3*d1^2*d2*d1 + 3*d2^2*d1 + d3*d1^2 + d2*d1^3 + 2*d1*d2*d1^2 + 3*d1*d3*d1 + 4*d1*d4 + d5");
  CHECK(b5.size() == 16);
  CHECK(bell<Word>(5) == b5);
  CHECK(bell_partial<Word>(3, 2) == nc("d2*d1 + 2*d1*d2"));
  CHECK(bell_partial<Word>(5, 3).coefficient(Word::from_codes({2, 1, 2})) == 4);
}

TEST_CASE("commutative values") {
  CHECK(bell<Monomial>(3) == cm("d1^3 + 3*d1*d2 + d3"));
  CHECK(bell<Monomial>(4) == cm("d1^4 + 6*d1^2*d2 + 3*d2^2 + 4*d1*d3 + d4"));
  CHECK(bell_c_explicit(3, 2) == cm("3*d1*d2"));
}

TEST_CASE("term count and positivity") {
  for (int n = 1; n <= 12; ++n) {
    const NCPoly b = bell<Word>(n);
    CHECK(b.size() == (std::size_t{1} << (n - 1)));
    bool positive_integers = true;
    for (const auto& [w, c] : b) positive_integers = positive_integers && c > 0 && c.get_den() == 1;
    CHECK(positive_integers);
  }
}

TEST_CASE("independent constructions agree") {
  for (int n = 0; n <= 8; ++n) {
    const NCPoly b = bell<Word>(n);
    CHECK(bell_recursion<Word>(n) == b);
    CHECK(bell_recursion<Monomial>(n) == bell<Monomial>(n));
    CHECK(abelianize(b) == bell<Monomial>(n));
    CHECK(coefficient_sum(b) == Rational(bell_number(n)));
    if (n == 0) continue;
    NCPoly explicit_sum;
    CPoly c_explicit_sum;
    for (int k = 1; k <= n; ++k) {
      explicit_sum += bell_explicit(n, k);
      c_explicit_sum += bell_c_explicit(n, k);
      CHECK(bell_explicit(n, k) == bell_partial<Word>(n, k));
    }
    CHECK(explicit_sum == b);
    CHECK(c_explicit_sum == bell<Monomial>(n));
    CPoly partition_sum;
    for_each_partition(n, std::nullopt, [&](const SetPartition& p) { partition_sum.add_term(monomial_c(p), 1); });
    CHECK(partition_sum == bell<Monomial>(n));
  }
}

TEST_CASE("degenerate partial conventions") {
  CHECK(bell_partial<Word>(0, 0) == NCPoly::unit());
  CHECK(bell_partial<Word>(4, 0).is_zero());
  CHECK(bell_partial<Word>(3, 5).is_zero());
  CHECK(bell_partial<Word>(6, 6) == nc("d1^6"));
  CHECK(bell_explicit(5, 1) == nc("d5"));
  CHECK_THROWS_AS(bell<Word>(-1), std::invalid_argument);
}

TEST_CASE("kappa") {
  CHECK(kappa(Word::from_codes({2, 1, 2})) == Rational(2, 15));
  CHECK(kappa(Word::from_codes({4})) == 1);
  CHECK_THROWS_AS(kappa(Word()), std::invalid_argument);
  const std::vector<std::vector<int>> perms{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  Rational total = 0;
  for (const auto& p : perms) total += kappa(Word::from_codes(std::span<const int>(p)));
  CHECK(total == 1);
}

TEST_CASE("coefficients count max-ordered partitions") {
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k)
      for (const auto& [w, c] : bell_partial<Word>(n, k)) {
        const auto parts = w.codes();
        CHECK(c == Rational(count_max_ordered(n, parts)));
        CHECK(c == Rational(N_formula(parts)));
        CHECK(c == Rational(multinomial(parts)) * kappa(w));
      }
}

TEST_CASE("Stirling specialization") {
  const auto ones = [](int) { return Rational(1); };
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k) CHECK(evaluate(bell_c_explicit(n, k), ones) == Rational(stirling2(n, k)));
}

TEST_CASE("scaled polynomials") {
  CHECK(bell_scaled(2) == Rational(1, 2) * nc("d1^2 + 2*d2"));
  CHECK(bell_scaled(3) == Rational(1, 6) * nc("d1^3 + 2*d2*d1 + 4*d1*d2 + 6*d3"));
  CHECK(bell_scaled(3, 2) == Rational(1, 6) * nc("2*d2*d1 + 4*d1*d2"));
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      NCPoly kappa_sum;
      for (const auto& parts : compositions(n, k)) {
        const Word w = Word::from_codes(std::span<const int>(parts));
        kappa_sum.add_term(w, kappa(w));
      }
      CHECK(bell_scaled(n, k) == kappa_sum);
    }
}

TEST_CASE("q-Bell coefficients") {
  CHECK_THROWS_AS(qbell_coefficient(std::vector<int>{2, 1}, QNumerator::plain), std::domain_error);
  CHECK(qbell_coefficient(std::vector<int>{2, 2}) == q_binomial(3, 1));
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      for (const auto& t : qbell_terms(n, k)) CHECK(t.coefficient == qcount_max_ordered(t.parts));
      const CPoly ordinary = bell_c_explicit(n, k);
      const auto grouped = qbell(n, k);
      CHECK(grouped.size() == ordinary.size());
      for (const auto& [m, qc] : grouped) CHECK(qc.at_one() == ordinary.coefficient(m));
    }
  const auto single = qbell(4, 1);
  CHECK(single.size() == 1);
  CHECK(single.at(Monomial::from_codes({4})) == QPoly(Rational(1)));
}
