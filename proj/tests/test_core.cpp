#include <doctest.h>

#include <random>

#include "bellhopf/algebra.hpp"
#include "bellhopf/format.hpp"
#include "bellhopf/qpoly.hpp"

using namespace bellhopf;

namespace {

NCPoly nc(std::string_view s) { return parse_poly<Word>(s); }
CPoly cm(std::string_view s) { return parse_poly<Monomial>(s); }

template <class M>
Poly<M> random_poly(std::mt19937_64& rng, bool with_inverse = false) {
  std::uniform_int_distribution<int> nterms(1, 5), len(0, 4), idx(with_inverse ? 0 : 1, 5), coeff(-6, 6);
  Poly<M> p;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> codes;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) {
      const int c = idx(rng);
      codes.push_back(c == 0 ? -1 : c);
    }
    p.add_term(M::from_codes(std::span<const int>(codes)), ratio(coeff(rng), 1 + (t % 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational(" -0/5 ")) == "0");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(factorial(6) == 720);
  CHECK(multinomial(std::vector<int>{2, 1, 2}) == 30);
}

TEST_CASE("letters and reduced words") {
  CHECK_THROWS_AS(Letter(0), std::invalid_argument);
  CHECK_THROWS_AS(Letter(2, true), std::invalid_argument);
  CHECK(Letter(1, true) < Letter(1));
  CHECK(Word::from_codes({-1, 1, 2}) == Word::from_codes({2}));
  CHECK(Word::from_codes({1, -1, -1, 1, 1}) == Word::from_codes({1}));
  CHECK(Word::from_codes({-1, 2, 1}).length() == 3);
  CHECK(Word::from_codes({2, 3}).grade() == 5);
  CHECK_THROWS_AS(Word::from_codes({-1, 2}).grade(), std::domain_error);
  CHECK(Word::from_codes({-1, -1, 3}).mobius_grade() == 2);
  CHECK(Word::from_codes({2}) < Word::from_codes({1, 1}));
  CHECK(Word::from_codes({1, 2}) < Word::from_codes({2, 1}));
  CHECK(Word::from_codes({-1, 2}) < Word::from_codes({1, 2}));
}

TEST_CASE("reduction is confluent") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> codes;
    for (int i = 0; i < 10; ++i) {
      const int c = pick(rng);
      codes.push_back(c == 0 ? -1 : c);
    }
    const Word whole = Word::from_codes(std::span<const int>(codes));
    Word left_fold, right_fold;
    for (int c : codes) left_fold = left_fold * Word::from_codes({c});
    for (auto it = codes.rbegin(); it != codes.rend(); ++it) right_fold = Word::from_codes({*it}) * right_fold;
    const std::size_t cut = trial % codes.size();
    const Word split = Word::from_codes(std::span<const int>(codes.data(), cut)) *
                       Word::from_codes(std::span<const int>(codes.data() + cut, codes.size() - cut));
    CHECK(left_fold == whole);
    CHECK(right_fold == whole);
    CHECK(split == whole);
  }
}

TEST_CASE("multiplication") {
  CHECK((nc("d1 + d2") * nc("d1")) == nc("d1*d1 + d2*d1"));
  const NCPoly p = nc("3*d2*d1 - 1/2*d4 + 2");
  CHECK(NCPoly::unit() * p == p);
  CHECK(p * NCPoly::unit() == p);
  CHECK(NCPoly::letter(-1) * nc("d1*d2") == nc("d2"));
  CHECK((NCPoly() * p).is_zero());
  CHECK(p - p == NCPoly());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_poly<Word>(rng, true), b = random_poly<Word>(rng, true), c = random_poly<Word>(rng, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    const auto x = random_poly<Monomial>(rng, true), y = random_poly<Monomial>(rng, true);
    CHECK(x * y == y * x);
  }
}

TEST_CASE("derivation") {
  CHECK(derive(nc("d1*d2")) == nc("d2*d2 + d1*d3"));
  CHECK(derive(NCPoly::unit()).is_zero());
  CHECK(derive(nc("d3")) == nc("d4"));
  CHECK(derive(cm("d1^3")) == cm("3*d1^2*d2"));
  CHECK_THROWS_AS(derive(NCPoly::letter(-1)), std::domain_error);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_poly<Word>(rng), b = random_poly<Word>(rng);
    CHECK(derive(a * b) == derive(a) * b + a * derive(b));
    CHECK(abelianize(derive(a)) == derive(abelianize(a)));
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianize(nc("d2*d1 + 2*d1*d2")) == cm("3*d1*d2"));
  CHECK(abelianize(nc("d1^3")) == cm("d1^3"));
  CHECK(abelianize(nc("d1^-1*d2*d1^-1")) == cm("d1^-2*d2"));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_poly<Word>(rng, true), b = random_poly<Word>(rng, true);
    CHECK(abelianize(a * b) == abelianize(a) * abelianize(b));
  }
}

TEST_CASE("substitution and length restriction") {
  const std::map<int, NCPoly> delete_first{{1, NCPoly::unit()}, {2, parse_poly<Word>("X1", "X")}};
  CHECK(substitute(nc("d1*d2"), delete_first) == parse_poly<Word>("X1", "X"));
  CHECK(substitute(nc("d1^2"), {{1, nc("d1 + d2")}}) == nc("d1^2 + d1*d2 + d2*d1 + d2^2"));
  CHECK(substitute(nc("d2*d1"), {{1, nc("d3")}, {2, nc("d4")}}) == nc("d4*d3"));
  CHECK(substitute(cm("d1^-2*d2"), {{-1, cm("2")}, {2, cm("d3")}}) == cm("4*d3"));
  CHECK_THROWS_AS(substitute(nc("d1*d2"), {{1, nc("d1")}}), std::out_of_range);
  const NCPoly b3 = nc("d1^3 + d2*d1 + 2*d1*d2 + d3");
  CHECK(restrict_length(b3, 2) == nc("d2*d1 + 2*d1*d2"));
  CHECK(restrict_length(nc("5 + d1"), 0) == nc("5"));
  CHECK(restrict_length(b3, 6).is_zero());
}

TEST_CASE("text and latex rendering") {
  CHECK(to_text(nc("d3 + 2*d1*d2 + d2*d1 + d1*d1*d1")) == "d1^3 + d2*d1 + 2*d1*d2 + d3");
  CHECK(to_text(NCPoly()) == "0");
  CHECK(to_text(NCPoly::unit()) == "1");
  CHECK(to_text(nc("-d1^-1*d2 + 1/3")) == "-d1^-1*d2 + 1/3");
  CHECK(to_text(parse_poly<Word>("X2 - 3*X1^2", "X"), "X") == "-3*X1^2 + X2");
  CHECK(to_latex(nc("d1^2*d2 - 1/2*d12")) == "d_1^2 d_2 - \\frac{1}{2} d_{12}");
  CHECK(to_latex(cm("d1^-1")) == "d_1^{-1}");
  CHECK_THROWS_AS(nc("d1 +"), std::invalid_argument);
  CHECK_THROWS_AS(nc("d1 d2"), std::invalid_argument);
  CHECK_THROWS_AS(nc("d2^-1"), std::invalid_argument);
  CHECK_THROWS_AS(nc(""), std::invalid_argument);
}

TEST_CASE("serialization round trips") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly<Word>(rng, true);
    const auto b = random_poly<Monomial>(rng, true);
    CHECK(parse_poly<Word>(to_text(a)) == a);
    CHECK(parse_poly<Monomial>(to_text(b)) == b);
    CHECK(poly_from_json<Word>(to_json(a)) == a);
    CHECK(poly_from_json<Monomial>(to_json(b)) == b);
    CHECK(poly_from_json<Word>(json::parse(to_json(a).dump())) == a);
  }
  const json doc = to_json(nc("2*d2*d1 + d1^-1"));
  CHECK(doc["algebra"] == "nc");
  CHECK(doc["terms"][0]["word"] == json::array({-1}));
  CHECK(doc["terms"][1]["coeff"] == "2");
  CHECK_THROWS_AS(poly_from_json<Monomial>(doc), std::invalid_argument);
}

TEST_CASE("q-analogs") {
  CHECK(to_string(q_integer(3)) == "1 + q + q^2");
  CHECK(q_factorial(3) == QPoly({Rational(1), Rational(2), Rational(2), Rational(1)}));
  CHECK(q_binomial(4, 2) == QPoly({Rational(1), Rational(1), Rational(2), Rational(1), Rational(1)}));
  CHECK(q_binomial(3, 5).is_zero());
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k).at_one() == Rational(binomial(n, k)));
      CHECK(q_binomial(n, k) * q_factorial(k) * q_factorial(n - k) == q_factorial(n));
    }
  CHECK(q_factorial(5).divide_exact(q_factorial(3)) == q_integer(4) * q_integer(5));
  CHECK_THROWS_AS(q_integer(3).divide_exact(q_integer(2)), std::domain_error);
  CHECK(q_integer(4).evaluate(2) == 15);
}
