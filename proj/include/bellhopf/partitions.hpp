#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bellhopf/algebra.hpp"
#include "bellhopf/qpoly.hpp"

namespace bellhopf {

/// Partition of {1..n} into non-empty blocks. Canonical form: each block
/// ascending, blocks ordered by their smallest element.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks);
  /// From a restricted growth string a_1..a_n (a_1 = 0, a_{i+1} <= max a + 1).
  static SetPartition from_rgs(std::span<const int> rgs);

  int n() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  /// Blocks sorted by increasing maximum.
  std::vector<std::vector<int>> blocks_by_max() const;
  std::vector<int> sizes_by_max() const;
  /// m -> number of blocks of size m.
  std::map<int, int> size_counts() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  SetPartition() = default;
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// "1 2 | 3 | 4 5".
std::string to_string(const SetPartition& p);

/// Calls f(const SetPartition&) for every partition of {1..n}, optionally only
/// those with exactly k blocks, in restricted-growth-string order.
template <class F>
void for_each_partition(int n, std::optional<int> k, F&& f);

/// All partitions of {1..n} (or those with k blocks). Throws
/// std::invalid_argument for n < 1 or k > n.
std::vector<SetPartition> enumerate_partitions(int n, std::optional<int> k = std::nullopt);

/// Brute-force count of ways to choose disjoint blocks P_1..P_k of {1..n}
/// with |P_i| = sizes[i] and max P_1 < ... < max P_k. Elements outside the
/// blocks are left over, so for n > sum(sizes) the count picks up the factor
/// binom(n, sum(sizes)).
Integer count_max_ordered(int n, std::span<const int> sizes);

/// prod_{i} binom(p_1 + ... + p_{i+1} - 1, p_{i+1} - 1).
Integer N_formula(std::span<const int> sizes);
/// The equivalent form prod_i binom(p_1 + ... + p_{i+1} - 1, p_1 + ... + p_i).
Integer N_formula_alt(std::span<const int> sizes);

/// d_{|P_1|}...d_{|P_k|} with blocks ordered by maxima.
Word monomial_nc(const SetPartition& p);
Monomial monomial_c(const SetPartition& p);

/// Relabeling statistic of the q-analogue. Repeatedly delete the block B with
/// the largest maximum m and relabel the survivors order-preservingly; the
/// step contributes m - s for every s in B \ {m} with s >= 2 and s - 1 not in
/// B.
int weight(const SetPartition& p);

/// sum of q^weight over the max-ordered partitions of {1..sum(sizes)} with
/// the given block sizes, by enumeration.
QPoly qcount_max_ordered(std::span<const int> sizes);
/// prod_{i>=2} [p_1 + ... + p_i - 1 choose p_i - 1]_q.
QPoly qcount_formula(std::span<const int> sizes);

Integer stirling2(int n, int k);
Integer bell_number(int n);
/// The same counts obtained by enumeration.
Integer stirling2_by_enumeration(int n, int k);
Integer bell_number_by_enumeration(int n);

/// All compositions of n into k positive parts (k = 0 gives {} only for
/// n = 0), in lexicographic order.
std::vector<std::vector<int>> compositions(int n, int k);
/// All compositions of n.
std::vector<std::vector<int>> compositions(int n);

template <class F>
void for_each_partition(int n, std::optional<int> k, F&& f) {
  if (n < 1) throw std::invalid_argument("partitions need n >= 1");
  if (k && (*k < 1 || *k > n)) return;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  // Depth-first over restricted growth strings; position 0 is fixed to 0.
  auto rec = [&](auto&& self, int pos) -> void {
    const int current_max = prefix_max[pos - 1];
    if (pos == n) {
      if (!k || current_max + 1 == *k) f(SetPartition::from_rgs(rgs));
      return;
    }
    const int limit = k ? std::min(current_max + 1, *k - 1) : current_max + 1;
    for (int v = 0; v <= limit; ++v) {
      const int new_max = std::max(current_max, v);
      if (k && (new_max + 1) + (n - pos - 1) < *k) continue;
      rgs[pos] = v;
      prefix_max[pos] = new_max;
      self(self, pos + 1);
    }
  };
  rec(rec, 1);
}

}  // namespace bellhopf
