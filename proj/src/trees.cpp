#include "bellhopf/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace bellhopf {

namespace {

PlanarTree parse_node(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != 'a') throw std::invalid_argument("expected 'a' in tree '" + std::string(text) + "'");
  ++pos;
  std::vector<PlanarTree> children;
  while (pos < text.size() && text[pos] == 'a') children.push_back(parse_node(text, pos));
  if (pos >= text.size() || text[pos] != 'b') throw std::invalid_argument("unbalanced tree '" + std::string(text) + "'");
  ++pos;
  return PlanarTree(std::move(children));
}

}  // namespace

PlanarTree PlanarTree::parse(std::string_view text) {
  std::size_t pos = 0;
  PlanarTree t = parse_node(text, pos);
  if (pos != text.size()) throw std::invalid_argument("trailing characters in tree '" + std::string(text) + "'");
  return t;
}

PlanarTree PlanarTree::ladder(int edges) {
  if (edges < 0) throw std::invalid_argument("ladder needs edges >= 0");
  PlanarTree t;
  for (int i = 0; i < edges; ++i) t = PlanarTree(std::vector<PlanarTree>{std::move(t)});
  return t;
}

int PlanarTree::edges() const {
  int e = 0;
  for (const auto& c : children_) e += 1 + c.edges();
  return e;
}

int PlanarTree::leaves() const {
  if (children_.empty()) return 1;
  int n = 0;
  for (const auto& c : children_) n += c.leaves();
  return n;
}

void PlanarTree::append_to(std::string& out) const {
  out += 'a';
  for (const auto& c : children_) c.append_to(out);
  out += 'b';
}

std::string PlanarTree::str() const {
  std::string out;
  append_to(out);
  return out;
}

PlanarTree PlanarTree::normalized() const {
  std::vector<PlanarTree> kids;
  kids.reserve(children_.size());
  for (const auto& c : children_) kids.push_back(c.normalized());
  std::ranges::sort(kids);
  return PlanarTree(std::move(kids));
}

std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
  if (auto c = a.edges() <=> b.edges(); c != 0) return c;
  return a.str() <=> b.str();
}

PlanarTree bplus(std::vector<PlanarTree> forest) { return PlanarTree(std::move(forest)); }

PlanarTree left_butcher(const PlanarTree& s, const PlanarTree& t) {
  std::vector<PlanarTree> kids;
  kids.reserve(t.children().size() + 1);
  kids.push_back(s);
  kids.insert(kids.end(), t.children().begin(), t.children().end());
  return PlanarTree(std::move(kids));
}

namespace {

// Every way of attaching s below one leaf of t, in left-to-right leaf order.
void graft_all(const PlanarTree& s, const PlanarTree& t, std::vector<PlanarTree>& out) {
  if (t.children().empty()) {
    out.push_back(PlanarTree(std::vector<PlanarTree>{s}));
    return;
  }
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    std::vector<PlanarTree> grafted;
    graft_all(s, t.children()[i], grafted);
    for (auto& g : grafted) {
      std::vector<PlanarTree> kids = t.children();
      kids[i] = std::move(g);
      out.emplace_back(std::move(kids));
    }
  }
}

}  // namespace

TreePoly leaf_graft(const PlanarTree& s, const PlanarTree& t) {
  std::vector<PlanarTree> trees;
  graft_all(s, t, trees);
  TreePoly r;
  for (const auto& g : trees) r.add_term(g, 1);
  return r;
}

TreePoly normalize(const TreePoly& p) {
  TreePoly r;
  for (const auto& [t, c] : p) r.add_term(t.normalized(), c);
  return r;
}

TreePoly tree_bell(int n, bool planar) {
  if (n < 0) throw std::invalid_argument("tree_bell needs n >= 0");
  const PlanarTree dot;
  TreePoly b = TreePoly::term(dot);
  if (n == 0) return b;
  // The single node plays the empty word here, so it is not grafted on.
  b = TreePoly::term(left_butcher(dot, dot));
  for (int i = 2; i <= n; ++i) {
    TreePoly next;
    for (const auto& [t, c] : b) {
      next.add_term(left_butcher(dot, t), c);
      for (const auto& [g, gc] : leaf_graft(dot, t)) next.add_term(g, c * gc);
    }
    b = planar ? std::move(next) : normalize(next);
  }
  return b;
}

PlanarTree word_to_tree(const Word& w) {
  if (w.empty()) throw std::invalid_argument("word_to_tree of the empty word");
  if (w.has_inverse()) throw std::domain_error("word_to_tree is undefined on d1^-1");
  const auto letters = w.letters();
  PlanarTree t = PlanarTree::ladder(letters.back().index());
  for (std::size_t i = letters.size() - 1; i-- > 0;) t = left_butcher(PlanarTree::ladder(letters[i].index() - 1), t);
  return t;
}

TreePoly words_to_trees(const NCPoly& p) {
  TreePoly r;
  for (const auto& [w, c] : p) r.add_term(word_to_tree(w), c);
  return r;
}

std::string to_string(const TreePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [t, c] = *it;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (mag != 1) out += to_string(mag) + "*";
    out += t.str();
  }
  return out;
}

namespace {

void draw(const PlanarTree& t, const std::string& prefix, bool last, bool root, std::string& out) {
  if (root) {
    out += "o\n";
  } else {
    out += prefix + (last ? "`-o\n" : "|-o\n");
  }
  const std::string child_prefix = root ? "" : prefix + (last ? "  " : "| ");
  for (std::size_t i = 0; i < t.children().size(); ++i)
    draw(t.children()[i], child_prefix, i + 1 == t.children().size(), false, out);
}

}  // namespace

std::string ascii_art(const PlanarTree& t) {
  std::string out;
  draw(t, "", true, true, out);
  return out;
}

}  // namespace bellhopf
