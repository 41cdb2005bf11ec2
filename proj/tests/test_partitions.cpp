#include <doctest.h>

#include <set>

#include "bellhopf/partitions.hpp"

using namespace bellhopf;

namespace {

QPoly qpoly(std::initializer_list<int> coeffs) {
  std::vector<Rational> v;
  for (int c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

}  // namespace

TEST_CASE("canonical form and validation") {
  const SetPartition p(5, {{4, 5}, {3}, {2, 1}});
  CHECK(to_string(p) == "1 2 | 3 | 4 5");
  CHECK(p.sizes_by_max() == std::vector<int>{2, 1, 2});
  CHECK(p.size_counts() == std::map<int, int>{{1, 1}, {2, 2}});
  CHECK(SetPartition(3, {{2}, {1, 3}}).blocks_by_max() == std::vector<std::vector<int>>{{2}, {1, 3}});
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition(2, {{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition(2, {{1}, {3}}), std::invalid_argument);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_partitions(3).size() == 5);
  const auto two = enumerate_partitions(3, 2);
  const std::set<std::string> rendered{to_string(two[0]), to_string(two[1]), to_string(two[2])};
  CHECK(two.size() == 3);
  CHECK(rendered == std::set<std::string>{"1 | 2 3", "1 3 | 2", "1 2 | 3"});
  CHECK(enumerate_partitions(1) == std::vector<SetPartition>{SetPartition(1, {{1}})});
  CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_partitions(3, 4), std::invalid_argument);
  const auto all = enumerate_partitions(7);
  CHECK(std::set<SetPartition>(all.begin(), all.end()).size() == all.size());
  CHECK(all.size() == 877);
}

TEST_CASE("Stirling and Bell numbers") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 5) == 0);
  CHECK(stirling2(0, 0) == 1);
  CHECK(bell_number(3) == 5);
  CHECK(bell_number(10) == 115975);
  for (int n = 1; n <= 9; ++n) {
    CHECK(stirling2(n, n) == 1);
    CHECK(bell_number_by_enumeration(n) == bell_number(n));
    for (int k = 1; k <= n; ++k) CHECK(stirling2_by_enumeration(n, k) == stirling2(n, k));
  }
  for (int n = 1; n <= 12; ++n) {
    Integer total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    CHECK(total == bell_number(n));
  }
}

TEST_CASE("max-ordered counts") {
  const std::vector<int> sizes{2, 1, 2};
  CHECK(count_max_ordered(5, sizes) == 4);
  CHECK(N_formula(sizes) == 4);
  CHECK(N_formula_alt(sizes) == 4);
  CHECK(count_max_ordered(4, std::vector<int>{1, 1, 1, 1}) == 1);
  CHECK(N_formula(std::vector<int>{5}) == 1);
  CHECK(N_formula(std::vector<int>{}) == 1);
  CHECK(N_formula(std::vector<int>{1, 1}) == 1);
  CHECK_THROWS_AS(count_max_ordered(4, sizes), std::invalid_argument);
  CHECK_THROWS_AS(N_formula(std::vector<int>{2, 0}), std::invalid_argument);
  for (int total = 1; total <= 7; ++total)
    for (const auto& c : compositions(total)) {
      CHECK(count_max_ordered(total, c) == N_formula(c));
      CHECK(N_formula_alt(c) == N_formula(c));
      CHECK(count_max_ordered(9, c) == N_formula(c) * binomial(9, total));
    }
}

TEST_CASE("monomials of partitions") {
  const SetPartition p(5, {{1, 2}, {3}, {4, 5}});
  CHECK(monomial_nc(p) == Word::from_codes({2, 1, 2}));
  CHECK(monomial_c(p) == Monomial::from_codes({2, 1, 2}));
  CHECK(monomial_nc(SetPartition(3, {{1}, {2}, {3}})) == Word::from_codes({1, 1, 1}));
  CHECK(monomial_nc(SetPartition(3, {{1, 3}, {2}})) == Word::from_codes({1, 2}));
}

TEST_CASE("relabeling weight") {
  const SetPartition example(14, {{1, 2, 7}, {3, 6}, {4, 5}, {8, 9, 13, 14}, {10, 12}, {11}});
  CHECK(weight(example) == 9);
  CHECK(weight(SetPartition(6, {{1, 2, 3, 4, 5, 6}})) == 0);
  CHECK(weight(SetPartition(3, {{1}, {2}, {3}})) == 0);
  // The three max-ordered partitions with sizes (2, 2): 12|34, 13|24, 23|14.
  CHECK(weight(SetPartition(4, {{1, 2}, {3, 4}})) == 1);
  CHECK(weight(SetPartition(4, {{1, 3}, {2, 4}})) == 2);
  CHECK(weight(SetPartition(4, {{2, 3}, {1, 4}})) == 0);
  CHECK(qcount_max_ordered(std::vector<int>{2, 2}) == qpoly({1, 1, 1}));
  CHECK(qcount_max_ordered(std::vector<int>{1, 1, 1, 1}) == qpoly({1}));
  CHECK(qcount_max_ordered(std::vector<int>{2, 1, 2}).at_one() == 4);
}

TEST_CASE("q-count lemma") {
  for (int total = 1; total <= 8; ++total)
    for (const auto& c : compositions(total)) {
      const QPoly brute = qcount_max_ordered(c);
      CHECK(brute == qcount_formula(c));
      CHECK(brute.at_one() == Rational(count_max_ordered(total, c)));
    }
}

TEST_CASE("compositions") {
  CHECK(compositions(4, 2) == std::vector<std::vector<int>>{{1, 3}, {2, 2}, {3, 1}});
  CHECK(compositions(0, 0).size() == 1);
  CHECK(compositions(3, 0).empty());
  CHECK(compositions(6).size() == 32);
}
