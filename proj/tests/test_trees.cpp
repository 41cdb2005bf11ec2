#include <doctest.h>

#include "bellhopf/bell.hpp"
#include "bellhopf/trees.hpp"

using namespace bellhopf;

namespace {

PlanarTree tr(std::string_view s) { return PlanarTree::parse(s); }

TreePoly trees(std::initializer_list<std::pair<int, const char*>> terms) {
  TreePoly p;
  for (const auto& [c, s] : terms) p.add_term(tr(s), c);
  return p;
}

}  // namespace

TEST_CASE("construction and parsing") {
  CHECK(bplus({}).str() == "ab");
  CHECK(bplus({PlanarTree()}) == PlanarTree::ladder(1));
  CHECK(bplus({PlanarTree(), PlanarTree()}).str() == "aababb");
  CHECK(PlanarTree::ladder(3).str() == "aaaabbbb");
  CHECK(tr("aababb").edges() == 2);
  CHECK(tr("aababb").leaves() == 2);
  CHECK(tr("ab").leaves() == 1);
  CHECK_THROWS_AS(tr("aab"), std::invalid_argument);
  CHECK_THROWS_AS(tr("abab"), std::invalid_argument);
  CHECK_THROWS_AS(tr("ba"), std::invalid_argument);
}

TEST_CASE("left Butcher product") {
  const PlanarTree dot;
  CHECK(left_butcher(dot, PlanarTree::ladder(1)).str() == "aababb");
  CHECK(left_butcher(PlanarTree::ladder(1), PlanarTree::ladder(1)) == bplus({PlanarTree::ladder(1), dot}));
  CHECK(left_butcher(tr("aaabbb"), dot) == bplus({tr("aaabbb")}));
}

TEST_CASE("leaf grafting") {
  CHECK(leaf_graft(tr("aabb"), tr("aaabbb")) == trees({{1, "aaaaabbbbb"}}));
  CHECK(leaf_graft(tr("aabb"), tr("aababb")) == trees({{1, "aaaabbbabb"}, {1, "aabaaabbbb"}}));
  for (int i = 0; i <= 5; ++i)
    CHECK(leaf_graft(PlanarTree(), PlanarTree::ladder(i)) == TreePoly::term(PlanarTree::ladder(i + 1)));
}

TEST_CASE("reference tree polynomials") {
  CHECK(tree_bell(0) == trees({{1, "ab"}}));
  CHECK(tree_bell(1) == trees({{1, "aabb"}}));
  CHECK(tree_bell(2) == trees({{1, "aababb"}, {1, "aaabbb"}}));
  CHECK(tree_bell(3) == trees({{1, "aabababb"}, {1, "aaabbabb"}, {2, "aabaabbb"}, {1, "aaaabbbb"}}));
  CHECK(tree_bell(4) == trees({{1, "aababababb"},
                               {3, "aababaabbb"},
                               {3, "aaabbaabbb"},
                               {1, "aaaabbbabb"},
                               {1, "aaabbababb"},
                               {2, "aabaabbabb"},
                               {3, "aabaaabbbb"},
                               {1, "aaaaabbbbb"}}));
  CHECK(to_string(tree_bell(2)) == "aababb + aaabbb");
}

TEST_CASE("word dictionary") {
  CHECK(word_to_tree(Word::from_codes({3})) == PlanarTree::ladder(3));
  CHECK(word_to_tree(Word::from_codes({1, 2})) == bplus({PlanarTree(), PlanarTree::ladder(1)}));
  CHECK(word_to_tree(Word::from_codes({1, 1})).str() == "aababb");
  CHECK_THROWS_AS(word_to_tree(Word()), std::invalid_argument);
}

TEST_CASE("pushforward of the Bell polynomials") {
  for (int n = 1; n <= 7; ++n) {
    const TreePoly planar = tree_bell(n, true);
    CHECK(words_to_trees(bell<Word>(n)) == planar);
    CHECK(normalize(planar) == tree_bell(n, false));
    bool graded = true;
    for (const auto& [t, c] : planar) graded = graded && t.edges() == n;
    CHECK(graded);
    // Normalizing trees matches abelianizing words: equal monomials give equal
    // normalized trees, distinct monomials give distinct ones.
    std::map<Monomial, PlanarTree> image;
    std::map<PlanarTree, Monomial> preimage;
    bool consistent = true;
    for (const auto& [w, c] : bell<Word>(n)) {
      const Monomial m = abelianize(w);
      const PlanarTree t = word_to_tree(w).normalized();
      auto [it, fresh] = image.try_emplace(m, t);
      consistent = consistent && it->second == t;
      auto [jt, fresh2] = preimage.try_emplace(t, m);
      consistent = consistent && jt->second == m;
    }
    CHECK(consistent);
    const TreePoly nonplanar = tree_bell(n, false);
    const CPoly commutative = bell<Monomial>(n);
    CHECK(nonplanar.size() == commutative.size());
    for (const auto& [m, c] : commutative) CHECK(nonplanar.coefficient(image.at(m)) == c);
  }
}
