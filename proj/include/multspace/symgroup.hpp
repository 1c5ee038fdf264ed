#pragma once

#include "multspace/numeric.hpp"
#include "multspace/partitions.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace multspace {

inline constexpr int kDefaultCharacterTableLimit = 12;

/// Largest m for which character_table() will build S_m's table.
inline std::atomic<int>& character_table_limit() {
  static std::atomic<int> limit{kDefaultCharacterTableLimit};
  return limit;
}

/// Number of permutations of the given cycle type: m! / z_λ with
/// z_λ = prod_i i^{k_i} k_i!.
inline BigInt class_size(const Partition& cycle_type) {
  std::map<int, int> mult;
  for (int p : cycle_type.parts()) ++mult[p];
  BigInt z = 1;
  for (auto [len, k] : mult) {
    for (int j = 0; j < k; ++j) z *= len;
    z *= factorial(k);
  }
  return exact_div(factorial(cycle_type.size()), z, "class size");
}

namespace detail {

// Removes every rim hook of length r from `shape`, reporting (result, sign).
inline void for_each_rim_hook(const Partition& shape, int r, const std::function<void(const Partition&, int)>& fn) {
  const int k = static_cast<int>(shape.length());
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = shape[i] + k - 1 - i;
  std::vector<bool> occupied(beta.empty() ? 1 : beta.front() + 1, false);
  for (int b : beta) occupied[b] = true;
  for (int i = 0; i < k; ++i) {
    int target = beta[i] - r;
    if (target < 0 || occupied[target]) continue;
    int between = 0;
    for (int j = target + 1; j < beta[i]; ++j) between += occupied[j] ? 1 : 0;
    std::vector<int> nb(beta);
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts(k);
    for (int j = 0; j < k; ++j) parts[j] = nb[j] - (k - 1 - j);
    fn(Partition(std::move(parts)), between % 2 == 0 ? 1 : -1);
  }
}

struct MnCache {
  std::mutex mutex;
  std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> values;
};

inline MnCache& mn_cache() {
  static MnCache cache;
  return cache;
}

}  // namespace detail

/// χ^shape evaluated on a permutation of cycle type `cycles` (Murnaghan–Nakayama).
/// Cycle lengths are consumed largest first; results are memoized on
/// (shape, remaining cycles).
inline BigInt mn_character(const Partition& shape, const Partition& cycles) {
  if (shape.size() != cycles.size())
    throw ArgumentError("character of " + shape.to_string() + " on class " + cycles.to_string() + ": size mismatch");
  if (shape.size() == 0) return 1;
  auto key = std::make_pair(shape.parts(), cycles.parts());
  auto& cache = detail::mn_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
  }
  const int r = cycles.parts().front();
  Partition rest(std::vector<int>(cycles.parts().begin() + 1, cycles.parts().end()));
  BigInt value = 0;
  detail::for_each_rim_hook(shape, r, [&](const Partition& smaller, int sign) {
    value += sign * mn_character(smaller, rest);
  });
  std::lock_guard lock(cache.mutex);
  cache.values.emplace(std::move(key), value);
  return value;
}

/// Character table of S_m. Rows and columns are both labelled by
/// enumerate_partitions(m); rows are irreducibles, columns cycle types.
struct CharacterTable {
  int m = 0;
  std::vector<Partition> labels;
  std::vector<std::vector<BigInt>> values;  // values[irrep][class]
  std::vector<BigInt> class_sizes;
  std::map<Partition, std::size_t> index;

  std::size_t index_of(const Partition& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw ArgumentError(p.to_string() + " is not a partition of " + std::to_string(m));
    return it->second;
  }
  const BigInt& operator()(const Partition& irrep, const Partition& cls) const {
    return values[index_of(irrep)][index_of(cls)];
  }
  BigInt group_order() const { return factorial(m); }
};

namespace detail {
struct TableCache {
  std::mutex mutex;
  std::map<int, std::shared_ptr<const CharacterTable>> tables;
};
inline TableCache& table_cache() {
  static TableCache cache;
  return cache;
}
}  // namespace detail

inline const CharacterTable& character_table(int m) {
  if (m < 0) throw ArgumentError("character_table: m must be non-negative");
  const int limit = character_table_limit().load();
  if (m > limit)
    throw SizeLimitError("character_table: m = " + std::to_string(m) + " exceeds the configured limit " +
                         std::to_string(limit));
  auto& cache = detail::table_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.tables.find(m); it != cache.tables.end()) return *it->second;
  }
  auto t = std::make_shared<CharacterTable>();
  t->m = m;
  t->labels = enumerate_partitions(m);
  for (std::size_t i = 0; i < t->labels.size(); ++i) t->index.emplace(t->labels[i], i);
  for (const auto& c : t->labels) t->class_sizes.push_back(class_size(c));
  for (const auto& irrep : t->labels) {
    std::vector<BigInt> row;
    for (const auto& c : t->labels) row.push_back(mn_character(irrep, c));
    t->values.push_back(std::move(row));
  }
  std::lock_guard lock(cache.mutex);
  // another thread may have filled it meanwhile; both fills are identical
  auto [it, inserted] = cache.tables.emplace(m, std::move(t));
  return *it->second;
}

/// Multiplicity of the irreducible `irrep` in a class function given by its
/// values on each cycle type (ordered as table.labels): <χ^irrep, f>.
inline BigInt multiplicity_in_class_function(const CharacterTable& table, const Partition& irrep,
                                             const std::vector<BigInt>& class_values, const std::string& what) {
  const auto& row = table.values[table.index_of(irrep)];
  BigInt sum = 0;
  for (std::size_t c = 0; c < row.size(); ++c) sum += table.class_sizes[c] * row[c] * class_values.at(c);
  BigInt mult = exact_div(sum, table.group_order(), what);
  if (mult < 0) throw ConsistencyError(what + ": negative multiplicity " + mult.str());
  return mult;
}

/// Kronecker coefficient c^γ_{τσ}: multiplicity of S(γ) in S(τ) ⊗ S(σ).
inline BigInt kronecker(const Partition& tau, const Partition& sigma, const Partition& gamma) {
  if (tau.size() != sigma.size() || tau.size() != gamma.size())
    throw ArgumentError("kronecker: " + tau.to_string() + ", " + sigma.to_string() + ", " + gamma.to_string() +
                        " do not partition the same integer");
  const auto& t = character_table(tau.size());
  const auto &rt = t.values[t.index_of(tau)], &rs = t.values[t.index_of(sigma)];
  std::vector<BigInt> product(rt.size());
  for (std::size_t c = 0; c < rt.size(); ++c) product[c] = rt[c] * rs[c];
  return multiplicity_in_class_function(t, gamma, product, "kronecker coefficient");
}

/// S(τ) ⊗ sgn ≅ S(τ^∨).
inline Partition sign_twist(const Partition& tau) { return tau.conjugate(); }

/// Number of semistandard tableaux of shape `shape` and content `content`
/// (content[i] copies of the letter i+1), by direct enumeration of chains of
/// horizontal strips.
inline BigInt kostka(const Partition& shape, const std::vector<int>& content) {
  long total = 0;
  for (int c : content) {
    if (c < 0) throw ArgumentError("kostka: content entries must be non-negative");
    total += c;
  }
  if (total != shape.size())
    throw ArgumentError("kostka: content sums to " + std::to_string(total) + " but shape " + shape.to_string() +
                        " has size " + std::to_string(shape.size()));
  const std::size_t rows = shape.length();
  std::vector<int> cur(rows, 0);
  // adds a horizontal strip of size `left` to `cur`, row by row, then recurses
  // into the next letter
  std::function<BigInt(std::size_t)> by_letter;
  std::function<BigInt(std::size_t, std::size_t, int, const std::vector<int>&)> strip =
      [&](std::size_t letter, std::size_t row, int left, const std::vector<int>& before) -> BigInt {
    if (left == 0) return by_letter(letter + 1);
    if (row == rows) return 0;
    // new cells in `row` may not sit below cells that are new in this strip
    int cap = shape[row] - cur[row];
    if (row > 0) cap = std::min(cap, before[row - 1] - cur[row]);
    BigInt count = 0;
    for (int k = std::min(cap, left); k >= 0; --k) {
      cur[row] += k;
      count += strip(letter, row + 1, left - k, before);
      cur[row] -= k;
    }
    return count;
  };
  by_letter = [&](std::size_t letter) -> BigInt {
    if (letter == content.size()) return 1;
    std::vector<int> before(cur);
    return strip(letter, 0, content[letter], before);
  };
  return by_letter(0);
}

}  // namespace multspace
