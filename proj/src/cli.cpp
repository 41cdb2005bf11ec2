#include "bellhopf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bellhopf/bell.hpp"
#include "bellhopf/characters.hpp"
#include "bellhopf/format.hpp"
#include "bellhopf/hopf.hpp"
#include "bellhopf/mobius.hpp"
#include "bellhopf/quasidet.hpp"
#include "bellhopf/series.hpp"
#include "bellhopf/trees.hpp"
#include "bellhopf/verify.hpp"

namespace bellhopf::cli {

namespace {

enum class Format { text, latex, json };

struct Options {
  Format format = Format::text;
  bool nc = false, c = false;
  int n = -1, k = -1;
  bool scaled = false, q = false;
  std::string numerator = "bracketed";
  bool planar = false, nonplanar = false, art = false;
  bool bell_matrix = false;
  std::string file;
  bool fdb = false, dfdb = false, coproduct = false, antipode = false;
  std::string method = "rec", side = "right";
  bool invert = false;
  bool compose = false, reversion = false, flow_check = false;
  int order = -1;
  std::uint64_t seed = 2024;
  std::string suite = "all";
  int max_degree = 12;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void require_range(std::string_view what, int value, int lo, int hi) {
  if (value < lo || value > hi)
    throw UsageError(std::string(what) + " must be in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " +
                     std::to_string(value));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Rational rational_of(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw UsageError("coefficient must be a string \"p/q\" or an integer");
}

template <class M>
void emit(std::ostream& out, Format f, const Poly<M>& p, std::string_view symbol = "d", std::string_view tag = {}) {
  switch (f) {
    case Format::text: out << to_text(p, symbol) << '\n'; break;
    case Format::latex: out << to_latex(p, symbol) << '\n'; break;
    case Format::json: out << to_json(p, tag).dump(2) << '\n'; break;
  }
}

template <class M>
void emit(std::ostream& out, Format f, const TensorPoly<M>& t) {
  switch (f) {
    case Format::text: out << to_text(t) << '\n'; break;
    case Format::latex: out << to_latex(t) << '\n'; break;
    case Format::json: out << to_json(t).dump(2) << '\n'; break;
  }
}

std::string qpoly_latex(const QPoly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::string lc = latex_coefficient(abs(c));
    if (i == 0) {
      out += lc.empty() ? "1" : lc;
      continue;
    }
    out += lc + (i == 1 ? "q" : "q^{" + std::to_string(i) + "}");
  }
  return out.empty() ? "0" : out;
}

void emit_qbell(std::ostream& out, Format f, const std::map<Monomial, QPoly>& terms) {
  if (f == Format::json) {
    json list = json::array();
    for (const auto& [m, qc] : terms) {
      json coeffs = json::array();
      for (const auto& c : qc.coefficients()) coeffs.push_back(to_string(c));
      list.push_back({{"coeff", std::move(coeffs)}, {"word", m.codes()}});
    }
    out << json{{"algebra", "c-q"}, {"terms", std::move(list)}}.dump(2) << '\n';
    return;
  }
  std::string line;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, qc] = *it;
    if (!line.empty()) line += " + ";
    const bool constant = qc.degree() <= 0;
    if (f == Format::text) {
      const std::string body = monomial_to_text(m);
      line += constant ? coefficient_prefix(qc.coefficient(0)) + body : "(" + to_string(qc) + ")*" + body;
    } else {
      const std::string body = monomial_to_latex(m);
      const std::string lc = latex_coefficient(qc.coefficient(0));
      line += constant ? (lc.empty() ? "" : lc + " ") + body : "(" + qpoly_latex(qc) + ") " + body;
    }
  }
  out << (line.empty() ? "0" : line) << '\n';
}

int cmd_bell(const Options& o, std::ostream& out, bool partial_only) {
  if (o.nc && o.c) throw UsageError("--nc and --c are exclusive");
  if (partial_only && o.k < 0) throw UsageError("partial needs -k");
  const bool commutative = o.c || (o.q && !o.nc);
  require_range("-n", o.n, 0, commutative ? 30 : 16);
  if (o.k >= 0) require_range("-k", o.k, 0, o.n);
  if (o.q) {
    if (o.nc) throw UsageError("q-Bell polynomials are defined in commuting letters only");
    if (o.scaled) throw UsageError("--q and --scaled are exclusive");
    if (o.numerator != "bracketed" && o.numerator != "plain") throw UsageError("--numerator is plain or bracketed");
    const QNumerator num = o.numerator == "plain" ? QNumerator::plain : QNumerator::bracketed;
    std::map<Monomial, QPoly> terms;
    if (o.n == 0) {
      if (o.k <= 0) terms.emplace(Monomial::unit(), QPoly(Rational(1)));
    } else {
      for (int k = o.k >= 0 ? o.k : 1; k <= (o.k >= 0 ? o.k : o.n); ++k)
        for (auto& [m, qc] : qbell(o.n, k, num)) terms.emplace(m, std::move(qc));
    }
    emit_qbell(out, o.format, terms);
    return 0;
  }
  if (o.scaled) {
    if (o.c) throw UsageError("--scaled is defined for the noncommutative polynomials");
    emit(out, o.format, o.k >= 0 ? bell_scaled(o.n, o.k) : bell_scaled(o.n));
    return 0;
  }
  if (commutative) {
    emit(out, o.format, o.k >= 0 ? bell_partial<Monomial>(o.n, o.k) : bell<Monomial>(o.n));
  } else {
    emit(out, o.format, o.k >= 0 ? bell_partial<Word>(o.n, o.k) : bell<Word>(o.n));
  }
  return 0;
}

int cmd_trees(const Options& o, std::ostream& out) {
  if (o.planar && o.nonplanar) throw UsageError("--planar and --nonplanar are exclusive");
  require_range("-n", o.n, 0, 10);
  const bool planar = !o.nonplanar;
  const TreePoly p = tree_bell(o.n, planar);
  switch (o.format) {
    case Format::text:
      if (!o.art) {
        out << to_string(p) << '\n';
        break;
      }
      for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out << to_string(it->second) << " * " << it->first.str() << '\n' << ascii_art(it->first) << '\n';
      break;
    case Format::latex: {
      std::string line;
      for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!line.empty()) line += " + ";
        const std::string lc = latex_coefficient(it->second);
        line += (lc.empty() ? "" : lc + " ") + "\\mathtt{" + it->first.str() + "}";
      }
      out << line << '\n';
      break;
    }
    case Format::json: {
      json terms = json::array();
      for (const auto& [t, c] : p) terms.push_back({{"coeff", to_string(c)}, {"tree", t.str()}});
      out << json{{"planar", planar}, {"terms", std::move(terms)}}.dump(2) << '\n';
      break;
    }
  }
  return 0;
}

template <class M>
Matrix<Poly<M>> matrix_from_json(const json& doc) {
  const json& rows = doc.is_object() ? doc.at("rows") : doc;
  if (!rows.is_array() || rows.empty()) throw UsageError("matrix needs a non-empty list of rows");
  Matrix<Poly<M>> a(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != rows.size()) throw UsageError("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const json& e = rows[i][j];
      a(i, j) = e.is_string() ? parse_poly<M>(e.get<std::string>()) : poly_from_json<M>(e);
    }
  }
  return a;
}

template <class M>
void emit_quasidet(std::ostream& out, Format f, const Matrix<Poly<M>>& a) {
  const Poly<M> value = hessenberg_quasidet(a);
  const std::size_t n = a.rows();
  switch (f) {
    case Format::text: out << to_text(a, 0, n - 1) << "= " << to_text(value) << '\n'; break;
    case Format::latex: {
      out << "\\begin{vmatrix}\n";
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const std::string s = to_latex(a(i, j));
          out << (j ? " & " : "") << (i == 0 && j == n - 1 ? "\\boxed{" + s + "}" : s);
        }
        out << (i + 1 < n ? " \\\\\n" : "\n");
      }
      out << "\\end{vmatrix} = " << to_latex(value) << '\n';
      break;
    }
    case Format::json: {
      json rows = json::array();
      for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(to_json(a(i, j)));
        rows.push_back(std::move(row));
      }
      out << json{{"rows", std::move(rows)}, {"p", 0}, {"q", n - 1}, {"quasidet", to_json(value)}}.dump(2) << '\n';
      break;
    }
  }
}

int cmd_quasidet(const Options& o, std::ostream& out) {
  if (o.bell_matrix == !o.file.empty()) throw UsageError("quasidet needs exactly one of --bell-matrix and --file");
  if (o.nc && o.c) throw UsageError("--nc and --c are exclusive");
  if (o.bell_matrix) {
    require_range("-n", o.n, 1, 12);
    if (o.c) {
      emit_quasidet(out, o.format, bell_matrix<Monomial>(o.n));
    } else {
      emit_quasidet(out, o.format, bell_matrix<Word>(o.n));
    }
    return 0;
  }
  const json doc = read_json_file(o.file);
  const bool commutative = o.c || (doc.is_object() && doc.value("algebra", "nc") == "c");
  try {
    if (commutative) {
      emit_quasidet(out, o.format, matrix_from_json<Monomial>(doc));
    } else {
      emit_quasidet(out, o.format, matrix_from_json<Word>(doc));
    }
  } catch (const json::exception& e) {
    throw UsageError(o.file + ": " + e.what());
  }
  return 0;
}

template <class M>
int hopf_for(const Options& o, std::ostream& out) {
  if (o.coproduct) {
    emit(out, o.format, coproduct_generator<M>(o.n));
    return 0;
  }
  if (o.method == "qdet") {
    emit(out, o.format, antipode_quasidet<M>(o.n), "X");
  } else {
    emit(out, o.format, antipode_recursive<M>(o.n, o.side == "left" ? AntipodeSide::left : AntipodeSide::right), "X");
  }
  return 0;
}

int cmd_hopf(const Options& o, std::ostream& out) {
  if (o.fdb && o.dfdb) throw UsageError("--fdb and --dfdb are exclusive");
  if (o.coproduct == o.antipode) throw UsageError("hopf needs exactly one of --coproduct and --antipode");
  if (o.method != "rec" && o.method != "qdet") throw UsageError("--method is rec or qdet");
  if (o.side != "left" && o.side != "right") throw UsageError("--side is left or right");
  require_range("-n", o.n, 1, 10);
  return o.dfdb ? hopf_for<Word>(o, out) : hopf_for<Monomial>(o, out);
}

template <class M>
int mobius_for(const Options& o, std::ostream& out) {
  if (o.invert) {
    emit(out, o.format, mobius_invert<M>(o.n), "B", "b-symbols");
  } else {
    emit(out, o.format, mobius_antipode<M>(o.n, o.side == "left" ? MobiusSide::left : MobiusSide::right));
  }
  return 0;
}

int cmd_mobius(const Options& o, std::ostream& out) {
  if (o.invert == o.antipode) throw UsageError("mobius needs exactly one of --invert and --antipode");
  if (o.side != "left" && o.side != "right") throw UsageError("--side is left or right");
  require_range("-n", o.n, 1, 8);
  return o.nc ? mobius_for<Word>(o, out) : mobius_for<Monomial>(o, out);
}

RationalSeries series_from_json(const json& doc, int order) {
  const int truncation = doc.at("truncation").get<int>();
  const json& coeffs = doc.at("coeffs");
  if (order > truncation) throw UsageError("--order exceeds the declared truncation " + std::to_string(truncation));
  std::vector<Rational> raw;
  for (const auto& c : coeffs) raw.push_back(rational_of(c));
  if (static_cast<int>(raw.size()) > truncation + 1) throw UsageError("more coefficients than the truncation allows");
  return RationalSeries(truncation, std::move(raw)).truncate(order);
}

json series_to_json(const RationalSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_string(c));
  return {{"truncation", s.order()}, {"coeffs", std::move(coeffs)}};
}

std::string series_text(const RationalSeries& s, bool latex) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) {
    const Rational& c = s[n];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational mag = abs(c);
    if (n == 0) {
      out += to_string(mag);
      continue;
    }
    const std::string power = n == 1 ? "t" : latex ? "t^{" + std::to_string(n) + "}" : "t^" + std::to_string(n);
    out += (latex ? (latex_coefficient(mag).empty() ? "" : latex_coefficient(mag) + " ") : coefficient_prefix(mag)) + power;
  }
  if (out.empty()) out = "0";
  const std::string o = std::to_string(s.order() + 1);
  return out + (latex ? " + O(t^{" + o + "})" : " + O(t^" + o + ")");
}

void emit_series(std::ostream& out, Format f, const std::vector<std::pair<std::string, RationalSeries>>& named,
                 std::string_view check, bool ok) {
  if (f == Format::json) {
    json doc = json::object();
    for (const auto& [name, s] : named) doc[name] = series_to_json(s);
    doc["check"] = {{"name", check}, {"ok", ok}};
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [name, s] : named) out << name << " = " << series_text(s, f == Format::latex) << '\n';
  out << check << ": " << (ok ? "PASS" : "FAIL") << '\n';
}

MultiPoly multipoly_from_json(const json& terms) {
  MultiPoly p;
  for (const auto& t : terms) p.add_term(t.at("exponents").get<std::vector<int>>(), rational_of(t.at("coeff")));
  return p;
}

int flow_check(const Options& o, std::ostream& out) {
  struct Instance {
    TimeDependentField field;
    MultiPoly psi;
  };
  std::vector<Instance> instances;
  if (o.file.empty()) {
    std::mt19937_64 rng(o.seed);
    for (int trial = 0; trial < 20; ++trial) {
      const int m = 1 + trial % 3;
      std::vector<VectorField> fields;
      for (int j = 0; j < o.order; ++j) fields.push_back(random_field(rng, m));
      MultiPoly psi = random_poly(rng, m, 2);
      instances.push_back({TimeDependentField(m, std::move(fields)), std::move(psi)});
    }
  } else {
    const json doc = read_json_file(o.file);
    try {
      const int m = doc.at("dimension").get<int>();
      std::vector<VectorField> fields;
      for (const auto& f : doc.at("fields")) {
        std::vector<MultiPoly> comps;
        for (const auto& c : f) comps.push_back(multipoly_from_json(c));
        fields.emplace_back(m, std::move(comps));
      }
      instances.push_back({TimeDependentField(m, std::move(fields)), multipoly_from_json(doc.at("psi"))});
    } catch (const json::exception& e) {
      throw UsageError(o.file + ": " + e.what());
    }
  }
  bool ok = true;
  json results = json::array();
  for (const auto& inst : instances) {
    const auto taylor = flow_pullback_taylor(inst.field, inst.psi, o.order);
    bool same = taylor[0] == inst.psi;
    for (int n = 1; n <= o.order; ++n)
      same = same && taylor[static_cast<std::size_t>(n)] == bell_apply(inst.field.fields, inst.psi, n);
    ok = ok && same;
    if (o.file.empty()) continue;
    for (int n = 0; n <= o.order; ++n) {
      const std::string s = to_string(taylor[static_cast<std::size_t>(n)]);
      if (o.format == Format::json) results.push_back(s);
      else out << "d^" << n << "/dt^" << n << " = " << s << '\n';
    }
  }
  const std::string check = "flow pullback = Bell operators on " + std::to_string(instances.size()) +
                            " instance(s) through order " + std::to_string(o.order);
  if (o.format == Format::json) {
    json doc{{"check", {{"name", check}, {"ok", ok}}}};
    if (!o.file.empty()) doc["taylor"] = std::move(results);
    out << doc.dump(2) << '\n';
  } else {
    out << check << ": " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_series(const Options& o, std::ostream& out) {
  if (o.compose + o.reversion + o.flow_check != 1)
    throw UsageError("series needs exactly one of --compose, --reversion and --flow-check");
  require_range("--order", o.order, 1, o.flow_check ? 6 : 30);
  if (o.flow_check) return flow_check(o, out);
  json doc;
  if (!o.file.empty()) doc = read_json_file(o.file);
  std::mt19937_64 rng(o.seed);
  try {
    if (o.compose) {
      const RationalSeries f = doc.contains("f") ? series_from_json(doc["f"], o.order) : random_series(rng, o.order, false);
      const RationalSeries g = doc.contains("g") ? series_from_json(doc["g"], o.order) : random_series(rng, o.order, true);
      if (g[0] != 0) throw UsageError("g must have zero constant term");
      const RationalSeries h = compose(f, g);
      const bool ok = h == compose_via_bell(f, g);
      emit_series(out, o.format, {{"f", f}, {"g", g}, {"f o g", h}}, "Horner = Bell-polynomial formula", ok);
      return ok ? 0 : 1;
    }
    std::uint64_t state = o.seed;
    const RationalSeries g = doc.contains("g") ? series_from_json(doc["g"], o.order) : random_unit_series(state, o.order);
    if (g[0] != 0 || g[1] == 0) throw UsageError("g needs zero constant term and non-zero linear term");
    const RationalSeries r = reversion(g);
    const RationalSeries id = RationalSeries::identity(o.order);
    const bool ok = compose(g, r) == id && compose(r, g) == id;
    emit_series(out, o.format, {{"g", g}, {"reversion", r}}, "g o r = r o g = t", ok);
    return ok ? 0 : 1;
  } catch (const json::exception& e) {
    throw UsageError(o.file + ": " + e.what());
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_range("--max-degree", o.max_degree, 1, 12);
  VerifyConfig config;
  config.max_degree = o.max_degree;
  config.seed = o.seed;
  const VerifyReport report = run_verify(o.suite, config);
  if (o.format == Format::json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_text(report);
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell polynomials, their Hopf algebras and Moebius inversion"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"latex", Format::latex}, {"json", Format::json}};
  app.add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats));

  auto variant = [&](CLI::App* s) {
    s->add_flag("--nc", o.nc, "Noncommuting letters");
    s->add_flag("--c", o.c, "Commuting letters");
  };
  auto degree = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("-n", o.n, "Degree");
    if (required) opt->required();
  };

  auto* bell_cmd = app.add_subcommand("bell", "Bell polynomial B_n or partial B_{n,k}")->fallthrough();
  variant(bell_cmd);
  degree(bell_cmd);
  bell_cmd->add_option("-k", o.k, "Number of letters");
  bell_cmd->add_flag("--scaled", o.scaled, "Q_n = B_n(1! d_1, 2! d_2, ...) / n!");
  bell_cmd->add_flag("--q", o.q, "q-Bell polynomial");
  bell_cmd->add_option("--numerator", o.numerator, "q-Bell numerator: bracketed or plain");

  auto* partial_cmd = app.add_subcommand("partial", "Partial Bell polynomial B_{n,k}")->fallthrough();
  variant(partial_cmd);
  degree(partial_cmd);
  partial_cmd->add_option("-k", o.k, "Number of letters")->required();

  auto* qbell_cmd = app.add_subcommand("qbell", "q-Bell polynomial in commuting letters")->fallthrough();
  degree(qbell_cmd);
  qbell_cmd->add_option("-k", o.k, "Number of letters");
  qbell_cmd->add_option("--numerator", o.numerator, "bracketed or plain");

  auto* trees_cmd = app.add_subcommand("trees", "Tree form of B_n")->fallthrough();
  degree(trees_cmd);
  trees_cmd->add_flag("--planar", o.planar, "Planar trees (default)");
  trees_cmd->add_flag("--nonplanar", o.nonplanar, "Merge trees up to reordering of children");
  trees_cmd->add_flag("--art", o.art, "Draw every tree");

  auto* quasidet_cmd = app.add_subcommand("quasidet", "Hessenberg quasideterminant |A|_{1n}")->fallthrough();
  variant(quasidet_cmd);
  degree(quasidet_cmd, false);
  quasidet_cmd->add_flag("--bell-matrix", o.bell_matrix, "Use the Bell matrix of size n");
  quasidet_cmd->add_option("--file", o.file, "JSON matrix: {algebra, rows: [[entry]]}");

  auto* hopf_cmd = app.add_subcommand("hopf", "Coproduct or antipode of X_n")->fallthrough();
  hopf_cmd->add_flag("--fdb", o.fdb, "Faa di Bruno (commutative, default)");
  hopf_cmd->add_flag("--dfdb", o.dfdb, "Dynkin-Faa di Bruno (noncommutative)");
  hopf_cmd->add_flag("--coproduct", o.coproduct, "Coproduct");
  hopf_cmd->add_flag("--antipode", o.antipode, "Antipode");
  hopf_cmd->add_option("--method", o.method, "rec or qdet");
  hopf_cmd->add_option("--side", o.side, "Recursion from id * S (right) or S * id (left)");
  degree(hopf_cmd);

  auto* mobius_cmd = app.add_subcommand("mobius", "Moebius inversion of d_n")->fallthrough();
  mobius_cmd->add_flag("--nc", o.nc, "Noncommuting letters");
  mobius_cmd->add_flag("--invert", o.invert, "d_n in the symbols B_j");
  mobius_cmd->add_flag("--antipode", o.antipode, "S(d_n)");
  mobius_cmd->add_option("--side", o.side, "left or right antipode recursion");
  degree(mobius_cmd);

  auto* series_cmd = app.add_subcommand("series", "Composition, reversion and flows")->fallthrough();
  series_cmd->add_flag("--compose", o.compose, "f o g, checked against the Bell-polynomial formula");
  series_cmd->add_flag("--reversion", o.reversion, "Compositional inverse");
  series_cmd->add_flag("--flow-check", o.flow_check, "Flow pullback against Bell operators");
  series_cmd->add_option("--order", o.order, "Truncation order")->required();
  series_cmd->add_option("--file", o.file, "JSON input; random instances from --seed otherwise");
  series_cmd->add_option("--seed", o.seed, "Seed for random instances");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites")->fallthrough();
  verify_cmd->add_option("--suite", o.suite, "Suite name or number, or all");
  verify_cmd->add_option("--max-degree", o.max_degree, "Degree bound");
  verify_cmd->add_option("--seed", o.seed, "Seed for randomized suites");

  if (!args.empty() && !args[0].starts_with('-') && app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "error: unknown command '" << args[0] << "'\n";
    return 2;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*bell_cmd) return cmd_bell(o, out, false);
    if (*partial_cmd) return cmd_bell(o, out, true);
    if (*qbell_cmd) {
      Options q = o;
      q.q = true;
      return cmd_bell(q, out, false);
    }
    if (*trees_cmd) return cmd_trees(o, out);
    if (*quasidet_cmd) return cmd_quasidet(o, out);
    if (*hopf_cmd) return cmd_hopf(o, out);
    if (*mobius_cmd) return cmd_mobius(o, out);
    if (*series_cmd) return cmd_series(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace bellhopf::cli
