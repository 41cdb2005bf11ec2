#include "bellhopf/format.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace bellhopf {

template <>
Word monomial_from_factors<Word>(const std::vector<Factor>& factors) {
  std::vector<Letter> letters;
  for (const Factor& f : factors) {
    if (f.power < 0 && f.index != 1) throw std::invalid_argument("only d1 may carry a negative exponent");
    for (int i = 0; i < std::abs(f.power); ++i) letters.emplace_back(f.index, f.power < 0);
  }
  return Word(std::move(letters));
}

template <>
Monomial monomial_from_factors<Monomial>(const std::vector<Factor>& factors) {
  std::map<int, int> exps;
  for (const Factor& f : factors) {
    if (f.index < 1) throw std::invalid_argument("letter index must be >= 1");
    exps[f.index] += f.power;
  }
  return Monomial(std::move(exps));
}

namespace {

std::string latex_index(int i) {
  const std::string s = std::to_string(i);
  return s.size() == 1 ? s : "{" + s + "}";
}

}  // namespace

template <class M>
std::string monomial_to_text(const M& m, std::string_view symbol) {
  if (m.empty()) return "1";
  std::string out;
  for (const Factor& f : m.factors()) {
    if (!out.empty()) out += '*';
    out.append(symbol);
    out += std::to_string(f.index);
    if (f.power != 1) out += "^" + std::to_string(f.power);
  }
  return out;
}

template <class M>
std::string monomial_to_latex(const M& m, std::string_view symbol) {
  if (m.empty()) return "1";
  std::string out;
  for (const Factor& f : m.factors()) {
    if (!out.empty()) out += ' ';
    out.append(symbol);
    out += "_" + latex_index(f.index);
    if (f.power != 1) out += "^" + latex_index(f.power);
  }
  return out;
}

std::string coefficient_prefix(const Rational& magnitude) {
  return magnitude == 1 ? std::string() : to_string(magnitude) + "*";
}

std::string latex_coefficient(const Rational& magnitude) {
  if (magnitude == 1) return {};
  if (magnitude.get_den() == 1) return to_string(magnitude);
  return "\\frac{" + magnitude.get_num().get_str() + "}{" + magnitude.get_den().get_str() + "}";
}

namespace {

template <class M, class RenderMonomial, class RenderCoeff>
std::string render_terms(const Poly<M>& p, RenderMonomial&& monomial, RenderCoeff&& coeff) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (m.empty()) {
      out += to_string(mag);
    } else {
      out += coeff(mag) + monomial(m);
    }
  }
  return out;
}

}  // namespace

template <class M>
std::string to_text(const Poly<M>& p, std::string_view symbol) {
  return render_terms(
      p, [&](const M& m) { return monomial_to_text(m, symbol); }, coefficient_prefix);
}

template <class M>
std::string to_latex(const Poly<M>& p, std::string_view symbol) {
  return render_terms(
      p, [&](const M& m) { return monomial_to_latex(m, symbol); },
      [](const Rational& mag) {
        const std::string c = latex_coefficient(mag);
        return c.empty() ? c : c + " ";
      });
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::string_view symbol) : text_(text), symbol_(symbol) {}

  template <class M>
  Poly<M> parse() {
    Poly<M> result;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational coeff = sign;
      std::vector<Factor> factors;
      read_term(coeff, factors);
      result.add_term(monomial_from_factors<M>(factors), coeff);
    }
    return result;
  }

 private:
  void read_term(Rational& coeff, std::vector<Factor>& factors) {
    while (true) {
      skip_ws();
      if (at_end()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= read_number();
      } else if (text_.substr(pos_, symbol_.size()) == symbol_) {
        pos_ += symbol_.size();
        Factor f{read_int(), 1};
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          bool negative = false;
          if (!at_end() && peek() == '-') {
            negative = true;
            ++pos_;
          }
          f.power = read_int();
          if (negative) f.power = -f.power;
          if (f.power == 0) fail("zero exponent");
        }
        factors.push_back(f);
      } else {
        fail("unexpected character");
      }
      skip_ws();
      if (at_end() || peek() != '*') return;
      ++pos_;
    }
  }

  Rational read_number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  int read_int() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    if (pos_ - start > 9) fail("index out of range");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string(what) + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }

  std::string_view text_;
  std::string_view symbol_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class M>
Poly<M> parse_poly(std::string_view text, std::string_view symbol) {
  return PolyParser(text, symbol).parse<M>();
}

template <class M>
json to_json(const Poly<M>& p, std::string_view algebra) {
  json terms = json::array();
  for (const auto& [m, c] : p) terms.push_back({{"coeff", to_string(c)}, {"word", m.codes()}});
  std::string tag(algebra);
  if (tag.empty()) tag = is_commutative_v<M> ? "c" : "nc";
  return {{"algebra", tag}, {"terms", std::move(terms)}};
}

template <class M>
Poly<M> poly_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
    throw std::invalid_argument("structured polynomial needs a 'terms' array");
  if (doc.contains("algebra")) {
    const auto tag = doc["algebra"].get<std::string>();
    const std::string expected = is_commutative_v<M> ? "c" : "nc";
    if (tag != expected && tag != "b-symbols")
      throw std::invalid_argument("algebra tag '" + tag + "' does not match '" + expected + "'");
  }
  Poly<M> p;
  for (const auto& t : doc["terms"]) {
    if (!t.contains("coeff") || !t.contains("word")) throw std::invalid_argument("term needs 'coeff' and 'word'");
    const auto codes = t["word"].get<std::vector<int>>();
    p.add_term(M::from_codes(std::span<const int>(codes)), parse_rational(t["coeff"].get<std::string>()));
  }
  return p;
}

#define BELLHOPF_INSTANTIATE_FORMAT(M)                                         \
  template std::string monomial_to_text<M>(const M&, std::string_view);       \
  template std::string monomial_to_latex<M>(const M&, std::string_view);      \
  template std::string to_text<M>(const Poly<M>&, std::string_view);          \
  template std::string to_latex<M>(const Poly<M>&, std::string_view);         \
  template Poly<M> parse_poly<M>(std::string_view, std::string_view);         \
  template json to_json<M>(const Poly<M>&, std::string_view);                 \
  template Poly<M> poly_from_json<M>(const json&);

BELLHOPF_INSTANTIATE_FORMAT(Word)
BELLHOPF_INSTANTIATE_FORMAT(Monomial)

#undef BELLHOPF_INSTANTIATE_FORMAT

}  // namespace bellhopf
