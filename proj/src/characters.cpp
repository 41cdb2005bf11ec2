#include "bellhopf/characters.hpp"

#include <random>
#include <stdexcept>

#include "bellhopf/hopf.hpp"

namespace bellhopf {

Rational Character::operator()(const CPoly& p) const {
  return evaluate(p, [&](int code) -> Rational {
    if (code < 0 || static_cast<std::size_t>(code) >= values.size())
      throw std::out_of_range("character not known on X" + std::to_string(code));
    return values[static_cast<std::size_t>(code)];
  });
}

Character character_of_series(const RationalSeries& g) {
  if (g[0] != 0) throw std::invalid_argument("series must have zero constant term");
  if (g.order() < 1 || g[1] != 1) throw std::domain_error("series must have unit linear coefficient");
  Character c;
  for (int n = 0; n < g.order(); ++n) c.values.push_back(g.divided(n + 1));
  return c;
}

Character convolve(const Character& alpha, const Character& beta) {
  const int n = std::min(alpha.degree(), beta.degree());
  Character r;
  r.values.push_back(1);
  for (int m = 1; m <= n; ++m) {
    Rational v = beta.values[static_cast<std::size_t>(m)];
    for (int k = 0; k < m; ++k) v += alpha(rank_poly<Monomial>(m, k)) * beta.values[static_cast<std::size_t>(k)];
    r.values.push_back(v);
  }
  return r;
}

Character compose_with_antipode(const Character& alpha) {
  const auto s = antipode_generators<Monomial>(alpha.degree());
  Character r;
  for (const auto& p : s) r.values.push_back(alpha(p));
  return r;
}

RationalSeries random_unit_series(std::uint64_t& state, int order) {
  std::mt19937_64 rng(state);
  state = rng();
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  RationalSeries g(order);
  if (order >= 1) g[1] = 1;
  for (int n = 2; n <= order; ++n) g[n] = ratio(num(rng), den(rng));
  return g;
}

CompositionOrder detect_composition_order(std::uint64_t seed) {
  constexpr int order = 4;
  bool outer = true, inner = true;
  for (int trial = 0; trial < 3; ++trial) {
    const RationalSeries f = random_unit_series(seed, order), g = random_unit_series(seed, order);
    const Character star = convolve(character_of_series(f), character_of_series(g));
    outer = outer && star.values == character_of_series(compose(f, g)).values;
    inner = inner && star.values == character_of_series(compose(g, f)).values;
  }
  if (outer == inner) throw std::logic_error("convolution order could not be determined");
  return outer ? CompositionOrder::outer_first : CompositionOrder::inner_first;
}

bool generating_series_rank_check(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("generating_series_rank_check needs 0 <= k <= n");
  const int order = n - k;
  FormalSeries<CPoly> base(order);
  base[0] = CPoly::unit();
  for (int m = 1; m <= order; ++m)
    base[m] = CPoly::letter(m, Rational(1) / Rational(factorial(static_cast<unsigned>(m + 1))));
  FormalSeries<CPoly> power = FormalSeries<CPoly>::constant(order, CPoly::unit());
  for (int i = 0; i <= k; ++i) power = power * base;
  const Rational scale = Rational(factorial(static_cast<unsigned>(n + 1))) / Rational(factorial(static_cast<unsigned>(k + 1)));
  return scale * power[order] == rank_poly<Monomial>(n, k);
}

namespace {

CPoly rescale(const CPoly& p, bool to_lower) {
  std::map<int, CPoly> images;
  for (const auto& [m, c] : p)
    for (const Factor& f : m.factors()) {
      if (f.power < 0) throw std::domain_error("rescaling is undefined on d1^-1");
      const Rational s(factorial(static_cast<unsigned>(f.index + 1)));
      images.emplace(f.index, CPoly::letter(f.index, to_lower ? s : Rational(1 / s)));
    }
  return substitute(p, images);
}

}  // namespace

CPoly to_lowercase(const CPoly& p) { return rescale(p, true); }
CPoly from_lowercase(const CPoly& p) { return rescale(p, false); }

}  // namespace bellhopf
