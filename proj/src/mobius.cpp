#include "bellhopf/mobius.hpp"

#include <algorithm>
#include <stdexcept>

#include "bellhopf/bell.hpp"

namespace bellhopf {

namespace {

template <class M>
Poly<M> inverse_d1(int power = 1) {
  return pow(Poly<M>::letter(-1), static_cast<unsigned>(power));
}

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("index must be >= 1");
}

}  // namespace

template <class M>
TensorPoly<M> mobius_coproduct_generator(int n) {
  require_positive(n);
  TensorPoly<M> t;
  for (int k = 1; k <= n; ++k) t += tensor(bell_partial<M>(n, k), Poly<M>::letter(k));
  return t;
}

template <class M>
TensorPoly<M> mobius_coproduct(const Poly<M>& p) {
  std::map<int, TensorPoly<M>> generators;
  auto generator = [&](int code) -> const TensorPoly<M>& {
    auto it = generators.find(code);
    if (it != generators.end()) return it->second;
    TensorPoly<M> g = code < 0 ? tensor(inverse_d1<M>(), inverse_d1<M>()) : mobius_coproduct_generator<M>(code);
    return generators.emplace(code, std::move(g)).first->second;
  };
  TensorPoly<M> r;
  for (const auto& [m, c] : p) {
    TensorPoly<M> t = TensorPoly<M>::unit();
    for (const Factor& f : m.factors()) {
      const TensorPoly<M>& g = generator(f.power < 0 ? -1 : f.index);
      for (int e = 0; e < std::abs(f.power); ++e) t = t * g;
    }
    for (const auto& [k, tc] : t) r.add_term(k, c * tc);
  }
  return r;
}

template <class M>
Rational mobius_counit(const Poly<M>& p) {
  return evaluate(p, [](int code) { return Rational(code == 1 || code == -1 ? 1 : 0); });
}

template <class M>
Poly<M> apply_mobius_antipode(const Poly<M>& p, const std::vector<Poly<M>>& on_generators) {
  Poly<M> r;
  for (const auto& [m, c] : p) {
    Poly<M> image(c);
    auto factors = m.factors();
    if constexpr (!is_commutative_v<M>) std::ranges::reverse(factors);
    for (const Factor& f : factors) {
      if (f.power < 0) {
        image *= pow(Poly<M>::letter(1), static_cast<unsigned>(-f.power));
        continue;
      }
      if (static_cast<std::size_t>(f.index) >= on_generators.size())
        throw std::out_of_range("antipode not known on d" + std::to_string(f.index));
      image *= pow(on_generators[static_cast<std::size_t>(f.index)], static_cast<unsigned>(f.power));
    }
    r += image;
  }
  return r;
}

template <class M>
std::vector<Poly<M>> mobius_antipode_generators(int n, MobiusSide side) {
  require_positive(n);
  std::vector<Poly<M>> s{Poly<M>::unit(), inverse_d1<M>()};
  for (int m = 2; m <= n; ++m) {
    Poly<M> v;
    if (side == MobiusSide::right) {
      v = -(Poly<M>::letter(m) * inverse_d1<M>());
      for (int k = 2; k < m; ++k) v -= bell_partial<M>(m, k) * s[static_cast<std::size_t>(k)];
      v = inverse_d1<M>(m) * v;
    } else {
      v = -(inverse_d1<M>(m) * Poly<M>::letter(m));
      for (int k = 2; k < m; ++k) v -= apply_mobius_antipode(bell_partial<M>(m, k), s) * Poly<M>::letter(k);
      v = v * inverse_d1<M>();
    }
    s.push_back(std::move(v));
  }
  return s;
}

template <class M>
Poly<M> mobius_antipode(int n, MobiusSide side) {
  return mobius_antipode_generators<M>(n, side).back();
}

template <class M>
Rational zeta(const Poly<M>& p) {
  return coefficient_sum(p);
}

template <class M>
std::vector<Rational> mobius_values(int n, MobiusSide side) {
  const auto s = mobius_antipode_generators<M>(n, side);
  std::vector<Rational> mu;
  for (const auto& p : s) mu.push_back(zeta(p));
  return mu;
}

template <class M>
Poly<M> bell_map(const Poly<M>& p) {
  return p;
}

template <class M>
Poly<M> mobius_invert(int n) {
  const auto mu = mobius_values<M>(n);
  Poly<M> r;
  for (int k = 1; k <= n; ++k) r += mu[static_cast<std::size_t>(k)] * bell_map(bell_partial<M>(n, k));
  return r;
}

template <class M>
Poly<M> expand_bell_symbols(const Poly<M>& p) {
  std::map<int, Poly<M>> images{{-1, inverse_d1<M>()}};
  for (const auto& [m, c] : p)
    for (const Factor& f : m.factors())
      if (f.power > 0 && !images.contains(f.index)) images.emplace(f.index, bell<M>(f.index));
  return substitute(p, images);
}

template <class M>
MobiusReport mobius_check(int n) {
  MobiusReport report;
  auto fail = [&](const std::string& what, int m) {
    report.ok = false;
    report.failure = what + " fails on d" + std::to_string(m);
    return report;
  };
  const auto right = mobius_antipode_generators<M>(n, MobiusSide::right);
  const auto left = mobius_antipode_generators<M>(n, MobiusSide::left);
  const auto mu = mobius_values<M>(n);
  auto S = [&](const Poly<M>& p) { return apply_mobius_antipode(p, right); };
  auto id = [](const Poly<M>& p) { return p; };
  for (int m = 1; m <= n; ++m) {
    const Poly<M> d = Poly<M>::letter(m);
    const TensorPoly<M> dd = mobius_coproduct(d);
    const Poly<M> eps(mobius_counit(d));
    ++report.checks;
    if (right[static_cast<std::size_t>(m)] != left[static_cast<std::size_t>(m)])
      return fail("left and right antipode agreement", m);
    ++report.checks;
    if (convolve_apply(dd, id, S) != eps) return fail("m(id ⊗ S)Δ = ε", m);
    ++report.checks;
    if (convolve_apply(dd, S, id) != eps) return fail("m(S ⊗ id)Δ = ε", m);
    Rational mu_zeta = 0, zeta_mu = 0;
    for (const auto& [k, c] : dd) {
      const Poly<M> a = Poly<M>::term(k[0]), b = Poly<M>::term(k[1]);
      mu_zeta += c * zeta(apply_mobius_antipode(a, right)) * zeta(b);
      zeta_mu += c * zeta(a) * zeta(apply_mobius_antipode(b, right));
    }
    ++report.checks;
    if (mu_zeta != mobius_counit(d) || zeta_mu != mobius_counit(d)) return fail("μ ⋆ ζ = ζ ⋆ μ = ε", m);
    ++report.checks;
    if (expand_bell_symbols(mobius_invert<M>(m)) != d) return fail("Möbius inversion round trip", m);
  }
  return report;
}

#define BELLHOPF_INSTANTIATE_MOBIUS(M)                                                        \
  template TensorPoly<M> mobius_coproduct_generator<M>(int);                                  \
  template TensorPoly<M> mobius_coproduct<M>(const Poly<M>&);                                 \
  template Rational mobius_counit<M>(const Poly<M>&);                                         \
  template Poly<M> apply_mobius_antipode<M>(const Poly<M>&, const std::vector<Poly<M>>&);     \
  template std::vector<Poly<M>> mobius_antipode_generators<M>(int, MobiusSide);               \
  template Poly<M> mobius_antipode<M>(int, MobiusSide);                                       \
  template Rational zeta<M>(const Poly<M>&);                                                  \
  template std::vector<Rational> mobius_values<M>(int, MobiusSide);                           \
  template Poly<M> bell_map<M>(const Poly<M>&);                                               \
  template Poly<M> mobius_invert<M>(int);                                                     \
  template Poly<M> expand_bell_symbols<M>(const Poly<M>&);                                    \
  template MobiusReport mobius_check<M>(int);

BELLHOPF_INSTANTIATE_MOBIUS(Word)
BELLHOPF_INSTANTIATE_MOBIUS(Monomial)

#undef BELLHOPF_INSTANTIATE_MOBIUS

}  // namespace bellhopf
