#include "bellhopf/algebra.hpp"

#include <algorithm>
#include <cstdlib>

namespace bellhopf {

Letter::Letter(int index, bool inverted) : index_(index), inverted_(inverted) {
  if (index < 1) throw std::invalid_argument("letter index must be >= 1, got " + std::to_string(index));
  if (inverted && index != 1) throw std::invalid_argument("only d1 may be inverted");
}

Letter Letter::from_code(int code) {
  if (code == -1) return Letter(1, true);
  if (code < 1) throw std::invalid_argument("invalid letter code " + std::to_string(code));
  return Letter(code);
}

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().cancels(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

Word Word::from_codes(std::initializer_list<int> codes) {
  return from_codes(std::span<const int>(codes.begin(), codes.size()));
}

Word Word::from_codes(std::span<const int> codes) {
  std::vector<Letter> letters;
  letters.reserve(codes.size());
  for (int c : codes) letters.push_back(Letter::from_code(c));
  return Word(std::move(letters));
}

bool Word::has_inverse() const {
  return std::ranges::any_of(letters_, [](Letter l) { return l.inverted(); });
}

int Word::grade() const {
  int g = 0;
  for (Letter l : letters_) {
    if (l.inverted()) throw std::domain_error("grade undefined on words containing d1^-1");
    g += l.index();
  }
  return g;
}

int Word::mobius_grade() const {
  int g = 0;
  for (Letter l : letters_) g += l.mobius_grade();
  return g;
}

std::vector<int> Word::codes() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(l.code());
  return out;
}

std::vector<Factor> Word::factors() const {
  std::vector<Factor> out;
  for (Letter l : letters_) {
    const int step = l.inverted() ? -1 : 1;
    if (!out.empty() && out.back().index == l.index() && (out.back().power < 0) == l.inverted()) {
      out.back().power += step;
    } else {
      out.push_back({l.index(), step});
    }
  }
  return out;
}

Word Word::reversed() const {
  Word w;
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word r;
  r.letters_.reserve(a.letters_.size() + b.letters_.size());
  r.letters_ = a.letters_;
  for (Letter l : b.letters_) push_reduced(r.letters_, l);
  return r;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

Monomial::Monomial(std::map<int, int> exponents) {
  for (const auto& [i, e] : exponents) {
    if (e == 0) continue;
    if (i < 1) throw std::invalid_argument("monomial index must be >= 1");
    if (e < 0 && i != 1) throw std::invalid_argument("only d1 may carry a negative exponent");
    exps_.emplace(i, e);
  }
}

Monomial Monomial::of(Letter l) {
  Monomial m;
  m.exps_.emplace(l.index(), l.inverted() ? -1 : 1);
  return m;
}

Monomial Monomial::from_codes(std::initializer_list<int> codes) {
  return from_codes(std::span<const int>(codes.begin(), codes.size()));
}

Monomial Monomial::from_codes(std::span<const int> codes) {
  Monomial m;
  for (int c : codes) m = m * of(Letter::from_code(c));
  return m;
}

int Monomial::exponent(int index) const {
  auto it = exps_.find(index);
  return it == exps_.end() ? 0 : it->second;
}

std::size_t Monomial::length() const {
  std::size_t n = 0;
  for (const auto& [i, e] : exps_) n += static_cast<std::size_t>(std::abs(e));
  return n;
}

bool Monomial::has_inverse() const { return exponent(1) < 0; }

int Monomial::grade() const {
  if (has_inverse()) throw std::domain_error("grade undefined on monomials containing d1^-1");
  int g = 0;
  for (const auto& [i, e] : exps_) g += i * e;
  return g;
}

int Monomial::mobius_grade() const {
  int g = 0;
  for (const auto& [i, e] : exps_)
    if (e > 0) g += (i - 1) * e;
  return g;
}

std::vector<int> Monomial::codes() const {
  std::vector<int> out;
  for (const auto& [i, e] : exps_) {
    const int code = e < 0 ? -1 : i;
    for (int j = 0; j < std::abs(e); ++j) out.push_back(code);
  }
  return out;
}

std::vector<Factor> Monomial::factors() const {
  std::vector<Factor> out;
  out.reserve(exps_.size());
  for (const auto& [i, e] : exps_) out.push_back({i, e});
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [i, e] : b.exps_) {
    auto [it, inserted] = r.exps_.try_emplace(i, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) r.exps_.erase(it);
    }
  }
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  // codes() is ascending with -1 first, matching the letter order.
  const auto ca = a.codes();
  const auto cb = b.codes();
  return std::lexicographical_compare_three_way(ca.begin(), ca.end(), cb.begin(), cb.end());
}

NCPoly derive(const NCPoly& p) {
  NCPoly r;
  for (const auto& [w, c] : p) {
    if (w.has_inverse()) throw std::domain_error("derive is undefined on d1^-1");
    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    for (auto& l : letters) {
      const Letter saved = l;
      l = Letter(saved.index() + 1);
      r.add_term(Word(letters), c);
      l = saved;
    }
  }
  return r;
}

CPoly derive(const CPoly& p) {
  CPoly r;
  for (const auto& [m, c] : p) {
    if (m.has_inverse()) throw std::domain_error("derive is undefined on d1^-1");
    for (const auto& [i, e] : m.exponents()) {
      std::map<int, int> exps = m.exponents();
      exps[i] -= 1;
      exps[i + 1] += 1;
      r.add_term(Monomial(std::move(exps)), c * e);
    }
  }
  return r;
}

Monomial abelianize(const Word& w) {
  std::map<int, int> exps;
  for (Letter l : w.letters()) exps[l.index()] += l.inverted() ? -1 : 1;
  return Monomial(std::move(exps));
}

CPoly abelianize(const NCPoly& p) {
  CPoly r;
  for (const auto& [w, c] : p) r.add_term(abelianize(w), c);
  return r;
}

}  // namespace bellhopf
