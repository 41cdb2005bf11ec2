#include "bellhopf/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bellhopf {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw std::invalid_argument("set partition needs n >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::ranges::sort(b);
    for (int x : b) {
      if (x < 1 || x > n) throw std::invalid_argument("element " + std::to_string(x) + " outside 1.." + std::to_string(n));
      if (seen[x]) throw std::invalid_argument("element " + std::to_string(x) + " in two blocks");
      seen[x] = true;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("blocks do not cover 1.." + std::to_string(n));
  std::ranges::sort(blocks_, {}, [](const auto& b) { return b.front(); });
}

SetPartition SetPartition::from_rgs(std::span<const int> rgs) {
  SetPartition p;
  p.n_ = static_cast<int>(rgs.size());
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    const auto label = static_cast<std::size_t>(rgs[i]);
    if (label > p.blocks_.size()) throw std::invalid_argument("not a restricted growth string");
    if (label == p.blocks_.size()) p.blocks_.emplace_back();
    p.blocks_[label].push_back(static_cast<int>(i) + 1);
  }
  return p;
}

std::vector<std::vector<int>> SetPartition::blocks_by_max() const {
  auto out = blocks_;
  std::ranges::sort(out, {}, [](const auto& b) { return b.back(); });
  return out;
}

std::vector<int> SetPartition::sizes_by_max() const {
  std::vector<int> sizes;
  for (const auto& b : blocks_by_max()) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

std::map<int, int> SetPartition::size_counts() const {
  std::map<int, int> counts;
  for (const auto& b : blocks_) ++counts[static_cast<int>(b.size())];
  return counts;
}

std::string to_string(const SetPartition& p) {
  std::string out;
  for (const auto& b : p.blocks()) {
    if (!out.empty()) out += " | ";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(b[i]);
    }
  }
  return out;
}

std::vector<SetPartition> enumerate_partitions(int n, std::optional<int> k) {
  if (n < 1) throw std::invalid_argument("partitions need n >= 1");
  if (k && (*k < 0 || *k > n)) throw std::invalid_argument("block count must lie in 0..n");
  std::vector<SetPartition> out;
  for_each_partition(n, k, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

namespace {

void check_sizes(std::span<const int> sizes) {
  for (int p : sizes)
    if (p < 1) throw std::invalid_argument("block sizes must be positive");
}

}  // namespace

Integer count_max_ordered(int n, std::span<const int> sizes) {
  check_sizes(sizes);
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (total > n) throw std::invalid_argument("block sizes exceed the ground set");
  const int k = static_cast<int>(sizes.size());
  // Assign each element to block 1..k or to the leftover pool 0, respecting
  // the capacities, then test the ordering of the maxima.
  std::vector<int> capacity(static_cast<std::size_t>(k) + 1);
  capacity[0] = n - total;
  for (int i = 0; i < k; ++i) capacity[i + 1] = sizes[i];
  std::vector<int> block_max(static_cast<std::size_t>(k) + 1, 0);
  Integer count = 0;
  auto rec = [&](auto&& self, int element) -> void {
    if (element > n) {
      for (int i = 1; i < k; ++i)
        if (block_max[i] > block_max[i + 1]) return;
      ++count;
      return;
    }
    for (int b = 0; b <= k; ++b) {
      if (capacity[b] == 0) continue;
      --capacity[b];
      const int saved = block_max[b];
      block_max[b] = element;
      self(self, element + 1);
      block_max[b] = saved;
      ++capacity[b];
    }
  };
  rec(rec, 1);
  return count;
}

Integer N_formula(std::span<const int> sizes) {
  check_sizes(sizes);
  Integer r = 1;
  int partial = sizes.empty() ? 0 : sizes[0];
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    partial += sizes[i];
    r *= binomial(partial - 1, sizes[i] - 1);
  }
  return r;
}

Integer N_formula_alt(std::span<const int> sizes) {
  check_sizes(sizes);
  Integer r = 1;
  int before = sizes.empty() ? 0 : sizes[0];
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    r *= binomial(before + sizes[i] - 1, before);
    before += sizes[i];
  }
  return r;
}

Word monomial_nc(const SetPartition& p) {
  std::vector<Letter> letters;
  for (int s : p.sizes_by_max()) letters.emplace_back(s);
  return Word(std::move(letters));
}

Monomial monomial_c(const SetPartition& p) { return Monomial(p.size_counts()); }

int weight(const SetPartition& p) {
  std::vector<std::vector<int>> blocks = p.blocks();
  int w = 0;
  while (!blocks.empty()) {
    auto top = std::ranges::max_element(blocks, {}, [](const auto& b) { return b.back(); });
    const std::vector<int> removed = std::move(*top);
    blocks.erase(top);
    const int m = removed.back();
    for (std::size_t i = 0; i + 1 < removed.size(); ++i) {
      const int s = removed[i];
      const bool predecessor_removed = i > 0 && removed[i - 1] == s - 1;
      if (s >= 2 && !predecessor_removed) w += m - s;
    }
    // Survivors are exactly {1..m} minus the removed block, so each label
    // drops by the number of removed elements below it.
    for (auto& b : blocks)
      for (int& x : b) x -= static_cast<int>(std::ranges::lower_bound(removed, x) - removed.begin());
  }
  return w;
}

QPoly qcount_max_ordered(std::span<const int> sizes) {
  check_sizes(sizes);
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (total == 0) return QPoly(Rational(1));
  const std::vector<int> wanted(sizes.begin(), sizes.end());
  std::vector<Rational> coeffs;
  for_each_partition(total, static_cast<int>(sizes.size()), [&](const SetPartition& p) {
    if (p.sizes_by_max() != wanted) return;
    const auto w = static_cast<std::size_t>(weight(p));
    if (coeffs.size() <= w) coeffs.resize(w + 1);
    coeffs[w] += 1;
  });
  return QPoly(std::move(coeffs));
}

QPoly qcount_formula(std::span<const int> sizes) {
  check_sizes(sizes);
  QPoly r(Rational(1));
  int partial = sizes.empty() ? 0 : sizes[0];
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    partial += sizes[i];
    r = r * q_binomial(partial - 1, sizes[i] - 1);
  }
  return r;
}

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<Integer> row{Integer(1)};  // row n = 0
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m) + 1, Integer(0));
    for (int j = 1; j <= m; ++j) {
      const Integer carried = j < m ? row[j] : Integer(0);
      next[j] = j * carried + row[j - 1];
    }
    row = std::move(next);
  }
  return row[k];
}

Integer bell_number(int n) {
  Integer total = 0;
  for (int k = 0; k <= n; ++k) total += stirling2(n, k);
  return total;
}

Integer stirling2_by_enumeration(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k < 1 || k > n) return 0;
  Integer count = 0;
  for_each_partition(n, k, [&](const SetPartition&) { ++count; });
  return count;
}

Integer bell_number_by_enumeration(int n) {
  if (n == 0) return 1;
  Integer count = 0;
  for_each_partition(n, std::nullopt, [&](const SetPartition&) { ++count; });
  return count;
}

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n < 0 || k < 0) return out;
  if (k == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> parts(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == k - 1) {
      if (remaining >= 1) {
        parts[pos] = remaining;
        out.push_back(parts);
      }
      return;
    }
    for (int v = 1; v <= remaining - (k - 1 - pos); ++v) {
      parts[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= n; ++k)
    for (auto& c : compositions(n, k)) out.push_back(std::move(c));
  return out;
}

}  // namespace bellhopf
