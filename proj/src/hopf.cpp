#include "bellhopf/hopf.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <stdexcept>

#include "bellhopf/bell.hpp"
#include "bellhopf/format.hpp"
#include "bellhopf/partitions.hpp"

namespace bellhopf {

template <class M>
TensorPoly<M> tensor(const Poly<M>& p, const Poly<M>& q) {
  TensorPoly<M> t;
  for (const auto& [a, ca] : p)
    for (const auto& [b, cb] : q) t.add_term({a, b}, ca * cb);
  return t;
}

template <class M>
Poly<M> multiply(const TensorPoly<M>& t) {
  Poly<M> r;
  for (const auto& [k, c] : t) r.add_term(k[0] * k[1], c);
  return r;
}

template <class M>
Poly<M> rank_poly(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("rank_poly needs n, k >= 0");
  if (k > n) return {};
  const Poly<M> b = bell_partial<M>(n + 1, k + 1);
  std::map<int, Poly<M>> images{{1, Poly<M>::unit()}};
  for (int j = 2; j <= n + 1; ++j) images.emplace(j, Poly<M>::letter(j - 1));
  return substitute(b, images);
}

namespace {

void require_generator(int n) {
  if (n < 1) throw std::invalid_argument("generator index must be >= 1");
}

template <class M>
const TensorPoly<M>& cached_coproduct_generator(int n) {
  static std::mutex mu;
  static std::map<int, TensorPoly<M>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  TensorPoly<M> t;
  for (int k = 0; k <= n; ++k) {
    const Poly<M> right = k == 0 ? Poly<M>::unit() : Poly<M>::letter(k);
    t += tensor(rank_poly<M>(n, k), right);
  }
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

template <class M>
TensorPoly<M> coproduct_generator(int n) {
  require_generator(n);
  return cached_coproduct_generator<M>(n);
}

template <class M>
TensorPoly<M> coproduct(const Poly<M>& p) {
  TensorPoly<M> r;
  for (const auto& [m, c] : p) {
    TensorPoly<M> t = TensorPoly<M>::unit();
    for (const Factor& f : m.factors()) {
      if (f.power < 0) throw std::domain_error("coproduct is undefined on d1^-1");
      const TensorPoly<M>& g = cached_coproduct_generator<M>(f.index);
      for (int e = 0; e < f.power; ++e) t = t * g;
    }
    for (const auto& [k, tc] : t) r.add_term(k, c * tc);
  }
  return r;
}

template <class M>
TensorPoly<M> coproduct_oracle(int n) {
  require_generator(n);
  TensorPoly<M> t;
  for_each_partition(n + 1, std::nullopt, [&](const SetPartition& s) {
    M left = M::unit();
    for (int size : s.sizes_by_max())
      if (size > 1) left = left * M::of(Letter(size - 1));
    const int k = static_cast<int>(s.block_count()) - 1;
    const M right = k == 0 ? M::unit() : M::of(Letter(k));
    t.add_term({left, right}, 1);
  });
  return t;
}

template <class M>
Rational counit(const Poly<M>& p) {
  return p.coefficient(M::unit());
}

template <class M>
Poly<M> apply_antipode(const Poly<M>& p, const std::vector<Poly<M>>& on_generators) {
  Poly<M> r;
  for (const auto& [m, c] : p) {
    Poly<M> image(c);
    auto factors = m.factors();
    if constexpr (!is_commutative_v<M>) std::ranges::reverse(factors);
    for (const Factor& f : factors) {
      if (f.power < 0) throw std::domain_error("antipode is undefined on d1^-1");
      if (static_cast<std::size_t>(f.index) >= on_generators.size())
        throw std::out_of_range("antipode not known on X" + std::to_string(f.index));
      image *= pow(on_generators[static_cast<std::size_t>(f.index)], static_cast<unsigned>(f.power));
    }
    r += image;
  }
  return r;
}

template <class M>
std::vector<Poly<M>> antipode_generators(int n, AntipodeSide side) {
  if (n < 0) throw std::invalid_argument("antipode needs n >= 0");
  std::vector<Poly<M>> s{Poly<M>::unit()};
  for (int m = 1; m <= n; ++m) {
    Poly<M> v = -Poly<M>::letter(m);
    for (int k = 1; k < m; ++k) {
      const Poly<M> w = rank_poly<M>(m, k);
      if (side == AntipodeSide::right) {
        v -= w * s[static_cast<std::size_t>(k)];
      } else {
        v -= apply_antipode(w, s) * Poly<M>::letter(k);
      }
    }
    s.push_back(std::move(v));
  }
  return s;
}

template <class M>
Poly<M> antipode_recursive(int n, AntipodeSide side) {
  require_generator(n);
  return antipode_generators<M>(n, side).back();
}

template <class M>
Matrix<Poly<M>> antipode_matrix(int n) {
  require_generator(n);
  const auto size = static_cast<std::size_t>(n);
  Matrix<Poly<M>> a(size, size);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a(i - 1, j - 1) = rank_poly<M>(n - i + 1, n - j);
  return a;
}

template <class M>
Poly<M> antipode_quasidet(int n) {
  Matrix<Poly<M>> a = antipode_matrix<M>(n);
  if constexpr (is_commutative_v<M>) {
    Poly<M> d = det_cofactor(a);
    return n % 2 == 0 ? d : -d;
  } else {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
    return hessenberg_quasidet(a);
  }
}

TensorPoly<Monomial> abelianize(const TensorPoly<Word>& t) {
  TensorPoly<Monomial> r;
  for (const auto& [k, c] : t) r.add_term({abelianize(k[0]), abelianize(k[1])}, c);
  return r;
}

template <class M>
std::string to_text(const TensorPoly<M>& t, std::string_view symbol) {
  if (t.is_zero()) return "0";
  std::string out;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += coefficient_prefix(abs(c));
    out += monomial_to_text(k[0], symbol) + " (x) " + monomial_to_text(k[1], symbol);
  }
  return out;
}

template <class M>
std::string to_latex(const TensorPoly<M>& t, std::string_view symbol) {
  if (t.is_zero()) return "0";
  std::string out;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (const std::string lc = latex_coefficient(abs(c)); !lc.empty()) out += lc + " ";
    out += monomial_to_latex(k[0], symbol) + " \\otimes " + monomial_to_latex(k[1], symbol);
  }
  return out;
}

template <class M>
json to_json(const TensorPoly<M>& t) {
  json terms = json::array();
  for (const auto& [k, c] : t) terms.push_back({{"coeff", to_string(c)}, {"left", k[0].codes()}, {"right", k[1].codes()}});
  return {{"algebra", is_commutative_v<M> ? "c" : "nc"}, {"tensor", true}, {"terms", std::move(terms)}};
}

namespace {

template <class M>
Tensor<M, 3> delta_left(const TensorPoly<M>& t) {
  Tensor<M, 3> r;
  for (const auto& [k, c] : t)
    for (const auto& [l, lc] : coproduct(Poly<M>::term(k[0]))) r.add_term({l[0], l[1], k[1]}, c * lc);
  return r;
}

template <class M>
Tensor<M, 3> delta_right(const TensorPoly<M>& t) {
  Tensor<M, 3> r;
  for (const auto& [k, c] : t)
    for (const auto& [l, lc] : coproduct(Poly<M>::term(k[1]))) r.add_term({k[0], l[0], l[1]}, c * lc);
  return r;
}

template <class M>
bool check_element(const Poly<M>& x, const std::vector<Poly<M>>& s, HopfReport& report, const std::string& label) {
  auto fail = [&](const std::string& what) {
    report.ok = false;
    report.failure = what + " fails on " + label;
    return false;
  };
  const TensorPoly<M> dx = coproduct(x);
  ++report.checks;
  if (delta_left(dx) != delta_right(dx)) return fail("coassociativity");
  Poly<M> left_counit, right_counit;
  for (const auto& [k, c] : dx) {
    left_counit += Rational(c * counit(Poly<M>::term(k[0]))) * Poly<M>::term(k[1]);
    right_counit += Rational(c * counit(Poly<M>::term(k[1]))) * Poly<M>::term(k[0]);
  }
  ++report.checks;
  if (left_counit != x || right_counit != x) return fail("counit law");
  auto S = [&](const Poly<M>& p) { return apply_antipode(p, s); };
  auto id = [](const Poly<M>& p) { return p; };
  const Poly<M> eta = Poly<M>(counit(x));
  ++report.checks;
  if (convolve_apply(dx, S, id) != eta) return fail("left antipode law");
  ++report.checks;
  if (convolve_apply(dx, id, S) != eta) return fail("right antipode law");
  return true;
}

}  // namespace

template <class M>
HopfReport hopf_axiom_check(int max_degree, std::uint64_t seed, int samples) {
  HopfReport report;
  if (max_degree < 1) return report;
  const auto s = antipode_generators<M>(max_degree, AntipodeSide::right);
  const auto sl = antipode_generators<M>(max_degree, AntipodeSide::left);
  for (int n = 1; n <= max_degree; ++n) {
    const std::string label = "X" + std::to_string(n);
    ++report.checks;
    if (coproduct_generator<M>(n) != coproduct_oracle<M>(n)) {
      report.ok = false;
      report.failure = "coproduct disagrees with the partition sum on " + label;
      return report;
    }
    if (!check_element(Poly<M>::letter(n), s, report, label)) return report;
    ++report.checks;
    if (s[static_cast<std::size_t>(n)] != sl[static_cast<std::size_t>(n)]) {
      report.ok = false;
      report.failure = "left and right antipode recursions disagree on " + label;
      return report;
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    std::uniform_int_distribution<int> total_dist(2, max_degree);
    int budget = total_dist(rng);
    M a = M::unit(), b = M::unit();
    std::string label;
    bool first = true;
    while (budget > 0) {
      std::uniform_int_distribution<int> pick(1, budget);
      const int g = pick(rng);
      budget -= g;
      (first ? a : b) = (first ? a : b) * M::of(Letter(g));
      label += "X" + std::to_string(g);
      if (budget > 0 && std::uniform_int_distribution<int>(0, 2)(rng) == 0) first = false;
    }
    const Poly<M> pa = Poly<M>::term(a), pb = Poly<M>::term(b), x = pa * pb;
    if (!check_element(x, s, report, label)) return report;
    ++report.checks;
    if (coproduct(x) != coproduct(pa) * coproduct(pb)) {
      report.ok = false;
      report.failure = "coproduct is not multiplicative on " + label;
      return report;
    }
    ++report.checks;
    const Poly<M> expected = is_commutative_v<M> ? apply_antipode(pa, s) * apply_antipode(pb, s)
                                                 : apply_antipode(pb, s) * apply_antipode(pa, s);
    if (apply_antipode(x, s) != expected) {
      report.ok = false;
      report.failure = "antipode is not an (anti-)morphism on " + label;
      return report;
    }
  }
  return report;
}

#define BELLHOPF_INSTANTIATE_HOPF(M)                                                          \
  template TensorPoly<M> tensor<M>(const Poly<M>&, const Poly<M>&);                           \
  template Poly<M> multiply<M>(const TensorPoly<M>&);                                         \
  template Poly<M> rank_poly<M>(int, int);                                                    \
  template TensorPoly<M> coproduct_generator<M>(int);                                         \
  template TensorPoly<M> coproduct<M>(const Poly<M>&);                                        \
  template TensorPoly<M> coproduct_oracle<M>(int);                                            \
  template Rational counit<M>(const Poly<M>&);                                                \
  template std::vector<Poly<M>> antipode_generators<M>(int, AntipodeSide);                    \
  template Poly<M> antipode_recursive<M>(int, AntipodeSide);                                  \
  template Matrix<Poly<M>> antipode_matrix<M>(int);                                           \
  template Poly<M> antipode_quasidet<M>(int);                                                 \
  template Poly<M> apply_antipode<M>(const Poly<M>&, const std::vector<Poly<M>>&);            \
  template std::string to_text<M>(const TensorPoly<M>&, std::string_view);                    \
  template std::string to_latex<M>(const TensorPoly<M>&, std::string_view);                   \
  template json to_json<M>(const TensorPoly<M>&);                                             \
  template HopfReport hopf_axiom_check<M>(int, std::uint64_t, int);

BELLHOPF_INSTANTIATE_HOPF(Word)
BELLHOPF_INSTANTIATE_HOPF(Monomial)

#undef BELLHOPF_INSTANTIATE_HOPF

}  // namespace bellhopf
