#include "bellhopf/verify.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bellhopf/bell.hpp"
#include "bellhopf/characters.hpp"
#include "bellhopf/hopf.hpp"
#include "bellhopf/mobius.hpp"
#include "bellhopf/partitions.hpp"
#include "bellhopf/quasidet.hpp"
#include "bellhopf/series.hpp"
#include "bellhopf/trees.hpp"

namespace bellhopf {

namespace {

const std::vector<SuiteInfo> kSuites{
    {1, "bell-tables", "golden Bell tables"},
    {2, "term-count", "2^(n-1) terms"},
    {3, "constructions", "independent constructions agree"},
    {4, "coefficients", "coefficients count max-ordered partitions"},
    {5, "stirling", "Stirling and Bell numbers"},
    {6, "quasidet", "quasideterminant goldens"},
    {7, "hopf-goldens", "reference coproducts and antipodes"},
    {8, "antipode", "antipode algorithms agree"},
    {9, "coproduct-oracle", "coproduct against set partitions"},
    {10, "hopf-axioms", "Hopf algebra axioms"},
    {11, "characters", "characters follow composition"},
    {12, "mobius", "Moebius inversion"},
    {13, "q-statistics", "q-statistics"},
    {14, "analytic", "series and flows"},
};

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}

  bool expect(bool ok, std::string_view what) { return absorb(ok, 1, what); }

  bool absorb(bool ok, int checks, std::string_view what) {
    r_.checks += checks;
    if (!ok) {
      ++r_.failures;
      r_.ok = false;
      if (r_.failure.empty()) r_.failure = what;
    }
    return ok;
  }

 private:
  SuiteResult& r_;
};

std::string at(std::string_view what, int n) { return std::string(what) + " at n = " + std::to_string(n); }

template <class M>
std::string_view variant() {
  return is_commutative_v<M> ? "FdB" : "DFdB";
}

NCPoly nc(std::string_view s, std::string_view symbol = "d") { return parse_poly<Word>(s, symbol); }
CPoly cm(std::string_view s, std::string_view symbol = "d") { return parse_poly<Monomial>(s, symbol); }

const char* const kBellTable[] = {
    "1",
    "d1",
    "d1^2 + d2",
    "d1^3 + d2*d1 + 2*d1*d2 + d3",
    "d1^4 + 3*d1^2*d2 + 3*d2^2 + d3*d1 + d2*d1^2 + 2*d1*d2*d1 + 3*d1*d3 + d4",
    "d1^5 + 6*d1^2*d3 + 6*d2*d3 + 4*d3*d2 + 4*d1^3*d2 + 4*d2*d1*d2 + 8*d1*d2^2 + d4*d1 + 3*d1^2*d2*d1"
    " + 3*d2^2*d1 + d3*d1^2 + d2*d1^3 + 2*d1*d2*d1^2 + 3*d1*d3*d1 + 4*d1*d4 + d5",
};

template <class M>
std::vector<Rational> sorted_coefficients(const Poly<M>& p) {
  std::vector<Rational> c;
  for (const auto& [m, v] : p) c.push_back(v);
  std::ranges::sort(c);
  return c;
}

NumMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  NumMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = ratio(num(rng), den(rng));
  return a;
}

// Hessenberg matrix whose free entries a_ij (1-based) are the letters d_{10i+j}.
AlgMatrix symbolic_hessenberg(std::size_t n) {
  AlgMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) a(i, i - 1) = NCPoly(Rational(-1));
    for (std::size_t j = i; j < n; ++j) a(i, j) = NCPoly::letter(static_cast<int>(10 * (i + 1) + j + 1));
  }
  return a;
}

template <class M>
TensorPoly<M> tensors(std::initializer_list<std::pair<const char*, const char*>> legs) {
  TensorPoly<M> t;
  for (const auto& [l, r] : legs) t += tensor(parse_poly<M>(l, "X"), parse_poly<M>(r, "X"));
  return t;
}

void bell_tables(Tally& t, const VerifyConfig& cfg) {
  for (int n = 0; n <= std::min(5, cfg.max_degree); ++n) {
    const NCPoly reference = nc(kBellTable[n]), b = bell<Word>(n);
    t.expect(b == reference, at("B_n differs from the reference table", n));
    t.expect(sorted_coefficients(b) == sorted_coefficients(reference), at("coefficient multiset differs", n));
  }
  if (cfg.max_degree >= 5) t.expect(bell<Word>(5).size() == 16, "B_5 does not have 16 terms");
  if (cfg.max_degree >= 3) t.expect(bell_partial<Word>(3, 2) == nc("d2*d1 + 2*d1*d2"), "B_{3,2} differs");
  if (cfg.max_degree >= 2) t.expect(bell_scaled(2) == ratio(1, 2) * nc("d1^2 + 2*d2"), "Q_2 differs");
  if (cfg.max_degree >= 3)
    t.expect(bell_scaled(3) == ratio(1, 6) * nc("d1^3 + 2*d2*d1 + 4*d1*d2 + 6*d3"), "Q_3 differs");
}

void term_count(Tally& t, const VerifyConfig& cfg) {
  for (int n = 1; n <= std::min(12, cfg.max_degree); ++n)
    t.expect(bell<Word>(n).size() == (std::size_t{1} << (n - 1)), at("term count is not 2^(n-1)", n));
}

void constructions(Tally& t, const VerifyConfig& cfg) {
  const int top = std::min(8, cfg.max_degree);
  FormalSeries<CPoly> a(std::max(top, 0));
  for (int m = 1; m <= top; ++m) a[m] = CPoly::letter(m, Rational(1) / Rational(factorial(static_cast<unsigned>(m))));
  const FormalSeries<CPoly> egf = exp(a);
  for (int n = 0; n <= top; ++n) {
    const NCPoly b = bell<Word>(n);
    const CPoly c = bell<Monomial>(n);
    t.expect(bell_recursion<Word>(n) == b, at("binomial recursion differs", n));
    t.expect(bell_recursion<Monomial>(n) == c, at("commutative binomial recursion differs", n));
    t.expect(abelianize(b) == c, at("abelianization differs", n));
    t.expect(egf.divided(n) == c, at("exponential generating series differs", n));
    if (n == 0) continue;
    NCPoly explicit_sum;
    CPoly c_explicit_sum;
    for (int k = 1; k <= n; ++k) {
      explicit_sum += bell_explicit(n, k);
      c_explicit_sum += bell_c_explicit(n, k);
    }
    t.expect(explicit_sum == b, at("kappa-explicit sum differs", n));
    t.expect(c_explicit_sum == c, at("commutative explicit sum differs", n));
    t.expect(bell_via_quasidet<Word>(n) == b, at("quasideterminant differs", n));
    t.expect(det_cofactor(bell_matrix<Monomial>(n)) == c, at("determinant differs", n));
    t.expect(words_to_trees(b) == tree_bell(n), at("tree construction differs", n));
    CPoly partition_sum;
    for_each_partition(n, std::nullopt, [&](const SetPartition& p) { partition_sum.add_term(monomial_c(p), 1); });
    t.expect(partition_sum == c, at("partition sum differs", n));
  }
}

void coefficients(Tally& t, const VerifyConfig& cfg) {
  for (int n = 1; n <= std::min(9, cfg.max_degree); ++n)
    for (int k = 1; k <= n; ++k)
      for (const auto& [w, c] : bell_partial<Word>(n, k)) {
        const auto parts = w.codes();
        t.expect(c == Rational(count_max_ordered(n, parts)), at("coefficient differs from the partition count", n));
        t.expect(c == Rational(N_formula(parts)), at("coefficient differs from the product formula", n));
      }
  if (cfg.max_degree >= 5) {
    t.expect(bell_partial<Word>(5, 3).coefficient(Word::from_codes({2, 1, 2})) == 4,
             "coefficient of d2*d1*d2 in B_{5,3} is not 4");
    t.expect(count_max_ordered(5, std::vector<int>{2, 1, 2}) == 4, "partition count for (2, 1, 2) is not 4");
  }
}

void stirling(Tally& t, const VerifyConfig& cfg) {
  const auto ones = [](int) { return Rational(1); };
  for (int n = 1; n <= std::min(9, cfg.max_degree); ++n) {
    for (int k = 1; k <= n; ++k) {
      const Integer s = stirling2_by_enumeration(n, k);
      t.expect(stirling2(n, k) == s, at("Stirling recurrence differs from enumeration", n));
      t.expect(evaluate(bell_c_explicit(n, k), ones) == Rational(s), at("all-ones B_{n,k} is not S(n,k)", n));
    }
    const Integer b = bell_number_by_enumeration(n);
    t.expect(bell_number(n) == b, at("Bell number differs from enumeration", n));
    t.expect(evaluate(bell<Monomial>(n), ones) == Rational(b), at("all-ones B_n is not the Bell number", n));
  }
}

void quasideterminants(Tally& t, const VerifyConfig& cfg) {
  const NCPoly p3 = nc("d13 + d11*d23 + d12*d33 + d11*d22*d33");
  const NCPoly p4 =
      nc("d14 + d11*d24 + d12*d34 + d13*d44 + d11*d22*d34 + d11*d23*d44 + d12*d33*d44 + d11*d22*d33*d44");
  t.expect(hessenberg_quasidet(symbolic_hessenberg(3)) == p3, "P(3) differs");
  t.expect(hessenberg_quasidet(symbolic_hessenberg(4)) == p4, "P(4) differs");
  t.expect(hessenberg_quasidet_sum(symbolic_hessenberg(4)) == p4, "P(4) as a path sum differs");
  t.expect(hessenberg_quasidet_expansion(symbolic_hessenberg(4)) == p4, "P(4) by expansion differs");
  if (cfg.max_degree >= 3) t.expect(bell_via_quasidet<Word>(3) == nc(kBellTable[3]), "3 x 3 quasideterminant is not B_3");
  if (cfg.max_degree >= 4) t.expect(bell_via_quasidet<Word>(4) == nc(kBellTable[4]), "4 x 4 quasideterminant is not B_4");
  std::mt19937_64 rng(cfg.seed);
  int compared = 0;
  for (int trial = 0; compared < 100 && trial < 1000; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
    const NumMatrix a = random_matrix(rng, n);
    const std::size_t p = static_cast<std::size_t>(trial) % n, q = static_cast<std::size_t>(trial / 3) % n;
    if (det_bareiss(a) == 0 || det_bareiss(a.minor(p, q)) == 0) continue;
    t.expect(numeric_quasidet(a, p, q) == quasidet_by_determinants(a, p, q),
             "numeric quasideterminant differs from the determinant ratio on a " + std::to_string(n) + " x " +
                 std::to_string(n) + " matrix");
    ++compared;
  }
  t.expect(compared >= 100, "fewer than 100 nonsingular random matrices");
}

void hopf_goldens(Tally& t, const VerifyConfig&) {
  t.expect(coproduct_generator<Monomial>(2) == tensors<Monomial>({{"X2", "1"}, {"1", "X2"}, {"3*X1", "X1"}}),
           "FdB coproduct of X2 differs");
  t.expect(coproduct_generator<Word>(2) == tensors<Word>({{"X2", "1"}, {"1", "X2"}, {"3*X1", "X1"}}),
           "DFdB coproduct of X2 differs");
  const auto d3 = {std::pair{"X3", "1"}, {"1", "X3"}, {"3*X1^2 + 4*X2", "X1"}, {"6*X1", "X2"}};
  t.expect(coproduct_generator<Monomial>(3) == tensors<Monomial>(d3), "FdB coproduct of X3 differs");
  t.expect(coproduct_generator<Word>(3) == tensors<Word>(d3), "DFdB coproduct of X3 differs");
  t.expect(coproduct_generator<Monomial>(4) == tensors<Monomial>({{"X4", "1"},
                                                                  {"1", "X4"},
                                                                  {"10*X1*X2 + 5*X3", "X1"},
                                                                  {"10*X2 + 15*X1^2", "X2"},
                                                                  {"10*X1", "X3"}}),
           "FdB coproduct of X4 differs");
  t.expect(coproduct_generator<Word>(4) == tensors<Word>({{"X4", "1"},
                                                          {"1", "X4"},
                                                          {"6*X1*X2 + 4*X2*X1 + 5*X3", "X1"},
                                                          {"10*X2 + 15*X1^2", "X2"},
                                                          {"10*X1", "X3"}}),
           "DFdB coproduct of X4 differs");
  const NCPoly w41 = rank_poly<Word>(4, 1);
  t.expect(w41.coefficient(Word::from_codes({1, 2})) == 6 && w41.coefficient(Word::from_codes({2, 1})) == 4,
           "6/4 split in the DFdB coproduct of X4 differs");
  t.expect(coproduct_generator<Word>(1) == tensors<Word>({{"X1", "1"}, {"1", "X1"}}), "coproduct of X1 differs");

  t.expect(antipode_recursive<Monomial>(1) == cm("-X1", "X"), "FdB S(X1) differs");
  t.expect(antipode_recursive<Monomial>(2) == cm("-X2 + 3*X1^2", "X"), "FdB S(X2) differs");
  t.expect(antipode_recursive<Monomial>(3) == cm("-X3 + 10*X1*X2 - 15*X1^3", "X"), "FdB S(X3) differs");
  t.expect(antipode_recursive<Monomial>(4) == cm("-X4 + 15*X1*X3 + 10*X2^2 - 105*X1^2*X2 + 105*X1^4", "X"),
           "FdB S(X4) differs");
  t.expect(antipode_recursive<Word>(1) == nc("-X1", "X"), "DFdB S(X1) differs");
  t.expect(antipode_recursive<Word>(2) == nc("-X2 + 3*X1^2", "X"), "DFdB S(X2) differs");
  const NCPoly s3 = antipode_recursive<Word>(3);
  t.expect(s3 == nc("-X3 + 6*X1*X2 + 4*X2*X1 - 15*X1^3", "X"), "DFdB S(X3) differs");
  t.expect(s3.coefficient(Word::from_codes({1, 2})) == 6 && s3.coefficient(Word::from_codes({2, 1})) == 4,
           "6/4 split in DFdB S(X3) differs");
  t.expect(antipode_recursive<Word>(4) ==
               nc("-X4 + 10*X1*X3 + 5*X3*X1 + 10*X2^2 - 45*X1^2*X2 - 34*X1*X2*X1 - 26*X2*X1^2 + 105*X1^4", "X"),
           "DFdB S(X4) differs");
}

template <class M>
void antipode_agreement(Tally& t, int top) {
  const auto right = antipode_generators<M>(top, AntipodeSide::right);
  const auto left = antipode_generators<M>(top, AntipodeSide::left);
  for (int n = 1; n <= top; ++n) {
    const auto i = static_cast<std::size_t>(n);
    t.expect(left[i] == right[i],
             std::string(variant<M>()) + ": left and right recursions differ on X" + std::to_string(n));
    t.expect(antipode_quasidet<M>(n) == right[i],
             std::string(variant<M>()) + ": quasideterminant differs from the recursion on X" + std::to_string(n));
  }
}

void antipodes(Tally& t, const VerifyConfig& cfg) {
  const int top = std::min(7, cfg.max_degree);
  if (top < 1) return;
  antipode_agreement<Monomial>(t, top);
  antipode_agreement<Word>(t, top);
}

void coproduct_oracles(Tally& t, const VerifyConfig& cfg) {
  for (int n = 1; n <= std::min(6, cfg.max_degree); ++n) {
    t.expect(coproduct_generator<Monomial>(n) == coproduct_oracle<Monomial>(n), at("FdB coproduct differs", n));
    t.expect(coproduct_generator<Word>(n) == coproduct_oracle<Word>(n), at("DFdB coproduct differs", n));
  }
}

void hopf_axioms(Tally& t, const VerifyConfig& cfg) {
  const int top = std::min(7, cfg.max_degree);
  if (top < 1) return;
  const HopfReport c = hopf_axiom_check<Monomial>(top, cfg.seed, 50);
  t.absorb(c.ok, c.checks, "FdB: " + c.failure);
  const HopfReport w = hopf_axiom_check<Word>(top, cfg.seed, 50);
  t.absorb(w.ok, w.checks, "DFdB: " + w.failure);
}

void characters(Tally& t, const VerifyConfig& cfg) {
  const CompositionOrder order = detect_composition_order(cfg.seed);
  std::uint64_t state = cfg.seed;
  const int top = std::min(8, cfg.max_degree);
  for (int trial = 0; top >= 1 && trial < 20; ++trial) {
    const RationalSeries f = random_unit_series(state, top + 1), g = random_unit_series(state, top + 1);
    const RationalSeries h = order == CompositionOrder::inner_first ? compose(g, f) : compose(f, g);
    t.expect(convolve(character_of_series(f), character_of_series(g)).values == character_of_series(h).values,
             "convolution differs from composition on pair " + std::to_string(trial));
  }
  const int s_top = std::min(6, cfg.max_degree);
  for (int trial = 0; s_top >= 1 && trial < 20; ++trial) {
    const RationalSeries g = random_unit_series(state, s_top + 1);
    t.expect(compose_with_antipode(character_of_series(g)).values == character_of_series(reversion(g)).values,
             "character composed with S differs from reversion on series " + std::to_string(trial));
  }
}

void mobius(Tally& t, const VerifyConfig& cfg) {
  t.expect(mobius_invert<Monomial>(2) == cm("d2 - d1^2"), "commutative inversion of d2 differs");
  t.expect(mobius_invert<Monomial>(3) == cm("d3 - 3*d1*d2 + 2*d1^3"), "commutative inversion of d3 differs");
  t.expect(mobius_invert<Word>(2) == nc("d2 - d1^2"), "noncommutative inversion of d2 differs");
  t.expect(mobius_invert<Word>(3) == nc("d3 - 2*d1*d2 - d2*d1 + 2*d1^3"), "noncommutative inversion of d3 differs");
  t.expect(mobius_antipode<Monomial>(2) == cm("-d1^-3*d2"), "commutative S(d2) differs");
  t.expect(mobius_antipode<Monomial>(3) == cm("-d1^-4*d3 + 3*d1^-5*d2^2"), "commutative S(d3) differs");
  t.expect(mobius_antipode<Monomial>(4) == cm("-d1^-5*d4 + 10*d1^-6*d2*d3 - 15*d1^-7*d2^3"),
           "commutative S(d4) differs");
  t.expect(mobius_antipode<Word>(2) == nc("-d1^-2*d2*d1^-1"), "noncommutative S(d2) differs");
  t.expect(mobius_antipode<Word>(3) == nc("-d1^-3*d3*d1^-1 + 2*d1^-2*d2*d1^-2*d2*d1^-1 + d1^-3*d2*d1^-1*d2*d1^-1"),
           "noncommutative S(d3) differs");
  for (int n = 1; n <= std::min(6, cfg.max_degree); ++n) {
    t.expect(expand_bell_symbols(mobius_invert<Monomial>(n)) == CPoly::letter(n),
             "commutative round trip fails on d" + std::to_string(n));
    t.expect(expand_bell_symbols(mobius_invert<Word>(n)) == NCPoly::letter(n),
             "noncommutative round trip fails on d" + std::to_string(n));
  }
}

void q_statistics(Tally& t, const VerifyConfig& cfg) {
  const SetPartition example(14, {{1, 2, 7}, {3, 6}, {4, 5}, {8, 9, 13, 14}, {10, 12}, {11}});
  t.expect(weight(example) == 9, "weight of the 14-element example is not 9");
  const int top = std::min(8, cfg.max_degree);
  for (int total = 1; total <= top; ++total)
    for (const auto& c : compositions(total))
      t.expect(qcount_max_ordered(c) == qcount_formula(c), at("q-count differs from the q-binomial product", total));
  for (int n = 1; n <= top; ++n)
    for (int k = 1; k <= n; ++k) {
      const NCPoly ordinary = bell_partial<Word>(n, k);
      for (const auto& term : qbell_terms(n, k))
        t.expect(term.coefficient.at_one() == ordinary.coefficient(Word::from_codes(std::span<const int>(term.parts))),
                 at("q-Bell coefficient at q = 1 differs", n));
      const CPoly c = bell_c_explicit(n, k);
      const auto grouped = qbell(n, k);
      bool same = grouped.size() == c.size();
      for (const auto& [m, qc] : grouped) same = same && qc.at_one() == c.coefficient(m);
      t.expect(same, at("commutative q-Bell polynomial at q = 1 differs", n));
    }
}

void analytic(Tally& t, const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const int order = std::min(8, cfg.max_degree);
  for (int trial = 0; order >= 1 && trial < 50; ++trial) {
    const RationalSeries f = random_series(rng, order, false), g = random_series(rng, order, true);
    t.expect(compose(f, g) == compose_via_bell(f, g), "composition differs from the Bell formula");
  }
  const int flow_order = std::min(5, cfg.max_degree);
  for (int trial = 0; flow_order >= 1 && trial < 20; ++trial) {
    const int m = 1 + trial % 3;
    std::vector<VectorField> fields;
    for (int j = 0; j < flow_order; ++j) fields.push_back(random_field(rng, m));
    const MultiPoly psi = random_poly(rng, m, 2);
    const auto taylor = flow_pullback_taylor(TimeDependentField(m, fields), psi, flow_order);
    bool same = taylor[0] == psi;
    for (int n = 1; n <= flow_order; ++n) same = same && taylor[static_cast<std::size_t>(n)] == bell_apply(fields, psi, n);
    t.expect(same, "flow pullback differs from the Bell operators on instance " + std::to_string(trial));
  }
  const SeriesCheck e = egf_bell_check(std::min(8, cfg.max_degree));
  t.absorb(e.ok, e.checked, e.failure);
}

using SuiteFn = void (*)(Tally&, const VerifyConfig&);

const SuiteFn kRunners[] = {bell_tables,    term_count,        constructions, coefficients, stirling,
                            quasideterminants, hopf_goldens,   antipodes,     coproduct_oracles,
                            hopf_axioms,    characters,        mobius,        q_statistics, analytic};

}  // namespace

bool VerifyReport::ok() const {
  return std::ranges::all_of(suites, [](const SuiteResult& s) { return s.ok; });
}

const std::vector<SuiteInfo>& verify_suites() { return kSuites; }

SuiteResult run_suite(int id, const VerifyConfig& config) {
  if (id < 1 || id > static_cast<int>(kSuites.size())) throw std::invalid_argument("unknown suite " + std::to_string(id));
  const SuiteInfo& info = kSuites[static_cast<std::size_t>(id - 1)];
  SuiteResult r;
  r.id = id;
  r.name = info.name;
  r.title = info.title;
  Tally t(r);
  try {
    kRunners[id - 1](t, config);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  return r;
}

VerifyReport run_verify(std::string_view suite, const VerifyConfig& config) {
  std::vector<int> ids;
  if (suite == "all") {
    for (const auto& s : kSuites) ids.push_back(s.id);
  } else {
    for (const auto& s : kSuites)
      if (s.name == suite || std::to_string(s.id) == suite) ids.push_back(s.id);
    if (ids.empty()) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  VerifyReport report;
  if (config.parallel && ids.size() > 1) {
    std::vector<std::future<SuiteResult>> pending;
    for (int id : ids) pending.push_back(std::async(std::launch::async, run_suite, id, config));
    for (auto& f : pending) report.suites.push_back(f.get());
  } else {
    for (int id : ids) report.suites.push_back(run_suite(id, config));
  }
  return report;
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& s : report.suites) {
    out << '[' << std::setw(2) << s.id << "] " << std::left << std::setw(17) << s.name << std::right
        << (s.ok ? "PASS" : "FAIL") << "  " << s.checks << " checks";
    if (!s.ok) out << ", " << s.failures << " failed: " << s.failure;
    out << '\n';
  }
  return out.str();
}

json to_json(const VerifyReport& report) {
  json suites = json::array();
  for (const auto& s : report.suites) {
    json j{{"id", s.id}, {"name", s.name}, {"title", s.title}, {"ok", s.ok}, {"checks", s.checks},
           {"failures", s.failures}};
    if (!s.ok) j["failure"] = s.failure;
    suites.push_back(std::move(j));
  }
  return json{{"ok", report.ok()}, {"suites", std::move(suites)}};
}

}  // namespace bellhopf
