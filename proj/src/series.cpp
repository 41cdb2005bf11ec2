#include "bellhopf/series.hpp"

#include <algorithm>

#include "bellhopf/bell.hpp"

namespace bellhopf {

namespace {

void trim(MultiPoly::exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(exponents{}, c);
}

MultiPoly MultiPoly::variable(int i) {
  if (i < 0) throw std::invalid_argument("variable index must be >= 0");
  exponents e(static_cast<std::size_t>(i) + 1, 0);
  e.back() = 1;
  return monomial(std::move(e));
}

MultiPoly MultiPoly::monomial(exponents e, const Rational& c) {
  MultiPoly p;
  p.add_term(std::move(e), c);
  return p;
}

int MultiPoly::variables() const {
  std::size_t m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.size());
  return static_cast<int>(m);
}

int MultiPoly::degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Rational MultiPoly::coefficient(const exponents& e) const {
  exponents key = e;
  trim(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(exponents e, const Rational& c) {
  if (c == 0) return;
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent in a polynomial");
  trim(e);
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly partial(const MultiPoly& p, int i) {
  if (i < 0) throw std::invalid_argument("variable index must be >= 0");
  const auto idx = static_cast<std::size_t>(i);
  MultiPoly r;
  for (const auto& [e, c] : p) {
    if (idx >= e.size() || e[idx] == 0) continue;
    MultiPoly::exponents d = e;
    --d[idx];
    r.add_term(std::move(d), c * e[idx]);
  }
  return r;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<MultiPoly::exponents, Rational>> terms(p.begin(), p.end());
  auto total = [](const MultiPoly::exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  };
  std::ranges::stable_sort(terms, [&](const auto& a, const auto& b) {
    if (total(a.first) != total(b.first)) return total(a.first) > total(b.first);
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

// Image of a commutative monomial in d_i under d_i -> values[i].
template <class R>
R evaluate_monomial(const Monomial& m, const std::vector<R>& values) {
  R r = detail::ring_from<R>(1);
  for (const Factor& f : m.factors())
    for (int e = 0; e < f.power; ++e) r = r * values.at(static_cast<std::size_t>(f.index));
  return r;
}

}  // namespace

template <class R>
FormalSeries<R> compose_via_bell(const FormalSeries<R>& f, const FormalSeries<R>& g) {
  if (f.order() != g.order()) throw std::invalid_argument("series have different truncation orders");
  if (!detail::ring_is_zero(g[0])) throw std::invalid_argument("inner series must have zero constant term");
  const int order = f.order();
  std::vector<R> gd(static_cast<std::size_t>(order) + 1);
  for (int i = 1; i <= order; ++i) gd[static_cast<std::size_t>(i)] = g.divided(i);
  std::vector<R> h(static_cast<std::size_t>(order) + 1);
  h[0] = f[0];
  for (int n = 1; n <= order; ++n) {
    R total{};
    for (int k = 1; k <= n; ++k) {
      const R fk = f.divided(k);
      if (detail::ring_is_zero(fk)) continue;
      R b{};
      for (const auto& [m, c] : bell_partial<Monomial>(n, k)) b += c * evaluate_monomial(m, gd);
      total += fk * b;
    }
    h[static_cast<std::size_t>(n)] = std::move(total);
  }
  return FormalSeries<R>::from_divided(order, h);
}

template <class R>
FormalSeries<R> reversion(const FormalSeries<R>& g) {
  if (!detail::ring_is_zero(g[0])) throw std::invalid_argument("reversion needs a zero constant term");
  const int order = g.order();
  FormalSeries<R> h(order);
  if (order == 0) return h;
  const R inv = detail::ring_inverse(g[1]);
  h[1] = inv;
  for (int n = 2; n <= order; ++n) {
    const R c = compose(g, h)[n];
    h[n] = Rational(-1) * (c * inv);
  }
  return h;
}

template <class R>
FormalSeries<R> exp(const FormalSeries<R>& a) {
  if (!detail::ring_is_zero(a[0])) throw std::invalid_argument("exp needs a zero constant term");
  const int order = a.order();
  FormalSeries<R> e(order);
  e[0] = detail::ring_from<R>(1);
  for (int n = 1; n <= order; ++n) {
    R total{};
    for (int k = 1; k <= n; ++k) total += Rational(k) * (a[k] * e[n - k]);
    e[n] = Rational(ratio(1, n)) * total;
  }
  return e;
}

#define BELLHOPF_INSTANTIATE_SERIES(R)                                                        \
  template FormalSeries<R> compose_via_bell<R>(const FormalSeries<R>&, const FormalSeries<R>&); \
  template FormalSeries<R> reversion<R>(const FormalSeries<R>&);                              \
  template FormalSeries<R> exp<R>(const FormalSeries<R>&);

BELLHOPF_INSTANTIATE_SERIES(Rational)
BELLHOPF_INSTANTIATE_SERIES(CPoly)
BELLHOPF_INSTANTIATE_SERIES(MultiPoly)

#undef BELLHOPF_INSTANTIATE_SERIES

SeriesCheck egf_bell_check(int order) {
  if (order < 1) throw std::invalid_argument("egf_bell_check needs order >= 1");
  FormalSeries<CPoly> a(order);
  for (int m = 1; m <= order; ++m) a[m] = CPoly::letter(m, Rational(1) / Rational(factorial(static_cast<unsigned>(m))));
  const FormalSeries<CPoly> e = exp(a);
  SeriesCheck report;
  for (int n = 0; n <= order; ++n) {
    ++report.checked;
    if (e.divided(n) != bell<Monomial>(n)) {
      report.ok = false;
      report.failure = "coefficient of t^" + std::to_string(n);
      return report;
    }
  }
  return report;
}

VectorField::VectorField(int dimension, std::vector<MultiPoly> components)
    : dimension(dimension), components(std::move(components)) {
  if (dimension < 1) throw std::invalid_argument("vector field dimension must be >= 1");
  if (this->components.size() != static_cast<std::size_t>(dimension))
    throw std::invalid_argument("vector field needs one component per dimension");
  for (const auto& c : this->components)
    if (c.variables() > dimension) throw std::invalid_argument("component uses more variables than the dimension");
}

TimeDependentField::TimeDependentField(int dimension, std::vector<VectorField> fields)
    : dimension(dimension), fields(std::move(fields)) {
  for (const auto& f : this->fields)
    if (f.dimension != dimension) throw std::invalid_argument("time coefficients have mismatched dimensions");
}

TimeDependentField TimeDependentField::autonomous(const VectorField& f, int truncation) {
  std::vector<VectorField> fields{f};
  const VectorField zero(f.dimension, std::vector<MultiPoly>(static_cast<std::size_t>(f.dimension)));
  for (int j = 1; j < truncation; ++j) fields.push_back(zero);
  return TimeDependentField(f.dimension, std::move(fields));
}

MultiPoly lie_derivative(const VectorField& f, const MultiPoly& psi) {
  if (psi.variables() > f.dimension) throw std::invalid_argument("function uses more variables than the field dimension");
  MultiPoly r;
  for (int i = 0; i < f.dimension; ++i) r += f.components[static_cast<std::size_t>(i)] * partial(psi, i);
  return r;
}

VectorField lie_derivative(const VectorField& f, const VectorField& g) {
  if (f.dimension != g.dimension) throw std::invalid_argument("vector fields have different dimensions");
  std::vector<MultiPoly> comps;
  for (const auto& c : g.components) comps.push_back(lie_derivative(f, c));
  return VectorField(f.dimension, std::move(comps));
}

MultiPoly bell_apply(const std::vector<VectorField>& fields, const MultiPoly& psi, int n) {
  if (n < 0) throw std::invalid_argument("bell_apply needs n >= 0");
  if (fields.size() < static_cast<std::size_t>(n)) throw std::invalid_argument("bell_apply needs fields F_1..F_n");
  for (std::size_t i = 1; i < fields.size(); ++i)
    if (fields[i].dimension != fields[0].dimension) throw std::invalid_argument("vector fields have different dimensions");
  MultiPoly total;
  for (const auto& [w, c] : bell<Word>(n)) {
    MultiPoly v = psi;
    const auto letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      v = lie_derivative(fields[static_cast<std::size_t>(it->index() - 1)], v);
    total += c * v;
  }
  return total;
}

namespace {

using PolySeries = FormalSeries<MultiPoly>;

// p(y_1(t), ..., y_m(t)).
PolySeries substitute_series(const MultiPoly& p, const std::vector<PolySeries>& y, int order) {
  std::vector<std::vector<PolySeries>> powers(y.size());
  PolySeries total(order);
  for (const auto& [e, c] : p) {
    PolySeries term = PolySeries::constant(order, MultiPoly(c));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(PolySeries::constant(order, MultiPoly(Rational(1))));
      while (pw.size() <= static_cast<std::size_t>(e[i])) pw.push_back(pw.back() * y[i]);
      term = term * pw[static_cast<std::size_t>(e[i])];
    }
    total += term;
  }
  return total;
}

}  // namespace

std::vector<MultiPoly> flow_pullback_taylor(const TimeDependentField& f, const MultiPoly& psi, int order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  if (order > static_cast<int>(f.fields.size()))
    throw std::invalid_argument("order " + std::to_string(order) + " exceeds the time truncation " +
                                std::to_string(f.fields.size()));
  if (psi.variables() > f.dimension) throw std::invalid_argument("function uses more variables than the field dimension");
  const auto m = static_cast<std::size_t>(f.dimension);
  std::vector<PolySeries> y;
  for (std::size_t i = 0; i < m; ++i) y.push_back(PolySeries::constant(order, MultiPoly::variable(static_cast<int>(i))));
  // Each pass fixes one more Taylor coefficient of y.
  for (int pass = 0; pass < order; ++pass) {
    std::vector<PolySeries> next;
    for (std::size_t i = 0; i < m; ++i) {
      PolySeries rhs(order);
      for (int j = 0; j < order; ++j) {
        const PolySeries fy = substitute_series(f.fields[static_cast<std::size_t>(j)].components[i], y, order);
        PolySeries shifted(order);
        for (int n = 0; n + j <= order; ++n) shifted[n + j] = fy[n];
        rhs += Rational(Rational(1) / Rational(factorial(static_cast<unsigned>(j)))) * shifted;
      }
      PolySeries yi = PolySeries::constant(order, MultiPoly::variable(static_cast<int>(i)));
      for (int n = 0; n < order; ++n) yi[n + 1] = Rational(ratio(1, n + 1)) * rhs[n];
      next.push_back(std::move(yi));
    }
    y = std::move(next);
  }
  const PolySeries pulled = substitute_series(psi, y, order);
  std::vector<MultiPoly> out;
  for (int n = 0; n <= order; ++n) out.push_back(pulled.divided(n));
  return out;
}

RationalSeries random_series(std::mt19937_64& rng, int order, bool zero_constant) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  RationalSeries s(order);
  for (int n = zero_constant ? 1 : 0; n <= order; ++n) s[n] = ratio(num(rng), den(rng));
  return s;
}

MultiPoly random_poly(std::mt19937_64& rng, int variables, int max_degree) {
  std::uniform_int_distribution<int> coeff(-3, 3), var(0, variables - 1), deg(0, max_degree), terms(1, 3);
  MultiPoly p;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    MultiPoly::exponents e(static_cast<std::size_t>(variables), 0);
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) ++e[static_cast<std::size_t>(var(rng))];
    p.add_term(e, coeff(rng));
  }
  return p;
}

VectorField random_field(std::mt19937_64& rng, int dimension) {
  std::vector<MultiPoly> comps;
  for (int i = 0; i < dimension; ++i) comps.push_back(random_poly(rng, dimension, 2));
  return VectorField(dimension, comps);
}

}  // namespace bellhopf
