#pragma once

#include "multspace/numeric.hpp"
#include "multspace/partitions.hpp"
#include "multspace/symgroup.hpp"

#include <algorithm>
#include <compare>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace multspace {

/// Integral weight in the basis of fundamental weights: coords[i] = <λ, α_i^∨>.
struct Weight {
  std::vector<long> coords;

  Weight() = default;
  explicit Weight(std::vector<long> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<long> c) : coords(c) {}
  static Weight zero(int rank) { return Weight(std::vector<long>(rank, 0)); }
  static Weight fundamental(int rank, int i) {
    Weight w = zero(rank);
    w.coords.at(i) = 1;
    return w;
  }

  std::size_t rank() const { return coords.size(); }
  bool is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](long c) { return c >= 0; });
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords.at(i);
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords.at(i);
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (auto& c : a.coords) c = -c;
    return a;
  }
  friend Weight operator*(long k, Weight a) {
    for (auto& c : a.coords) c *= k;
    return a;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
    return s + ")";
  }
};

/// Formal sum of weights with positive multiplicities; the character of a
/// finite-dimensional module when Weyl invariant.
using WeightMultiset = std::map<Weight, BigInt>;

inline void add_weight(WeightMultiset& ch, const Weight& w, const BigInt& mult) {
  if (mult == 0) return;
  auto [it, inserted] = ch.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) ch.erase(it);
  }
}

inline BigInt total_dimension(const WeightMultiset& ch) {
  BigInt s = 0;
  for (const auto& [w, c] : ch) s += c;
  return s;
}

inline WeightMultiset multiply_characters(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) add_weight(out, wa + wb, ca * cb);
  return out;
}

inline WeightMultiset character_power(const WeightMultiset& ch, int m, int rank) {
  WeightMultiset out{{Weight::zero(rank), 1}};
  for (int i = 0; i < m; ++i) out = multiply_characters(out, ch);
  return out;
}

/// Character of the dual module: every weight negated.
inline WeightMultiset dual_character(const WeightMultiset& ch) {
  WeightMultiset out;
  for (const auto& [w, c] : ch) out.emplace(-w, c);
  return out;
}

/// Cartan data for a simple Lie algebra of type A–G.
///
/// cartan[i][j] = <α_i, α_j^∨>, so row i lists the simple root α_i in
/// fundamental-weight coordinates. Node numbering follows Bourbaki.
class RootSystem {
 public:
  struct Root {
    std::vector<long> root_coords;  // coefficients on simple roots
    Weight weight;                  // fundamental coordinates
  };

  RootSystem(char type, int rank) : type_(type), rank_(rank) {
    build_cartan();
    build_inverse();
    build_symmetrizer();
    build_positive_roots();
  }

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<std::vector<Rational>>& inverse_cartan() const { return inverse_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const BigInt& weyl_order() const { return weyl_order_; }

  Weight simple_root(int i) const {
    check_index(i);
    std::vector<long> c(cartan_[i].begin(), cartan_[i].end());
    return Weight(std::move(c));
  }

  /// Invariant form with (α, α) = 2 for the first node's length class scaled
  /// so that the first simple root has (α_1, α_1)/2 = 1.
  Rational form(const Weight& a, const Weight& b) const {
    Rational s = 0;
    for (int k = 0; k < rank_; ++k) {
      if (a.coords[k] == 0) continue;
      for (int l = 0; l < rank_; ++l)
        if (b.coords[l] != 0) s += Rational(a.coords[k] * b.coords[l]) * inverse_[k][l] * half_length_[l];
    }
    return s;
  }

  /// Coefficients of a weight on the simple roots (rational in general).
  std::vector<Rational> root_coordinates(const Weight& w) const {
    std::vector<Rational> r(rank_, 0);
    for (int k = 0; k < rank_; ++k)
      for (int i = 0; i < rank_; ++i) r[i] += Rational(w.coords[k]) * inverse_[k][i];
    return r;
  }

  Weight rho() const { return Weight(std::vector<long>(rank_, 1)); }

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.type_ == b.type_ && a.rank_ == b.rank_;
  }

  void check_index(int i) const {
    if (i < 0 || i >= rank_)
      throw ArgumentError("simple root index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(rank_));
  }

 private:
  void link(int i, int j, int a_ij = -1, int a_ji = -1) {
    cartan_[i][j] = a_ij;
    cartan_[j][i] = a_ji;
  }

  void build_cartan() {
    const int n = rank_;
    auto bad = [&] { throw ArgumentError("no simple Lie algebra of type " + label()); };
    if (n < 1) bad();
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    switch (type_) {
      case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        weyl_order_ = factorial(n + 1);
        break;
      case 'B':  // α_n short
        if (n < 2) bad();
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 2, n - 1, -2, -1);
        weyl_order_ = (BigInt(1) << n) * factorial(n);
        break;
      case 'C':  // α_n long
        if (n < 2) bad();
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 2, n - 1, -1, -2);
        weyl_order_ = (BigInt(1) << n) * factorial(n);
        break;
      case 'D':
        if (n < 4) bad();
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        weyl_order_ = (BigInt(1) << (n - 1)) * factorial(n);
        break;
      case 'E':
        if (n < 6 || n > 8) bad();
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        weyl_order_ = n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
        break;
      case 'F':  // α_1, α_2 long
        if (n != 4) bad();
        link(0, 1);
        link(1, 2, -2, -1);
        link(2, 3);
        weyl_order_ = 1152;
        break;
      case 'G':  // α_1 short
        if (n != 2) bad();
        link(0, 1, -1, -3);
        weyl_order_ = 12;
        break;
      default:
        bad();
    }
  }

  void build_inverse() {
    const int n = rank_;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = cartan_[i][j];
      a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (a[piv][col] == 0) ++piv;
      std::swap(a[piv], a[col]);
      Rational inv = 1 / a[col][col];
      for (auto& x : a[col]) x *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational f = a[r][col];
        for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
      }
    }
    inverse_.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inverse_[i][j] = a[i][n + j];
  }

  // (α_i, α_j) = cartan[i][j] * half_length[j] must be symmetric
  void build_symmetrizer() {
    half_length_.assign(rank_, 0);
    half_length_[0] = 1;
    std::deque<int> queue{0};
    std::vector<bool> seen(rank_, false);
    seen[0] = true;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < rank_; ++j) {
        if (j == i || cartan_[i][j] == 0 || seen[j]) continue;
        half_length_[j] = Rational(cartan_[j][i]) * half_length_[i] / cartan_[i][j];
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }

  // α-string criterion: β + α_i is a root iff p - <β, α_i^∨> > 0, where p is
  // the largest k with β - kα_i a root.
  void build_positive_roots() {
    std::set<std::vector<long>> known;
    std::vector<std::vector<long>> level;
    for (int i = 0; i < rank_; ++i) {
      std::vector<long> r(rank_, 0);
      r[i] = 1;
      level.push_back(r);
      known.insert(r);
    }
    std::vector<std::vector<long>> all(level);
    while (!level.empty()) {
      std::vector<std::vector<long>> next;
      for (const auto& beta : level) {
        for (int i = 0; i < rank_; ++i) {
          long pairing = 0;
          for (int j = 0; j < rank_; ++j) pairing += beta[j] * cartan_[j][i];
          long p = 0;
          for (auto down = beta; down[i] > 0;) {
            --down[i];
            if (!known.count(down)) break;
            ++p;
          }
          if (p - pairing <= 0) continue;
          auto up = beta;
          ++up[i];
          if (known.insert(up).second) next.push_back(up);
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      level = std::move(next);
    }
    for (auto& rc : all) {
      Weight w = Weight::zero(rank_);
      for (int j = 0; j < rank_; ++j)
        for (int k = 0; k < rank_; ++k) w.coords[k] += rc[j] * cartan_[j][k];
      positive_roots_.push_back({rc, w});
    }
  }

  char type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<Rational> half_length_;
  std::vector<Root> positive_roots_;
  BigInt weyl_order_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Shared, immutable root system for (type, rank).
inline RootSystemPtr root_system(char type, int rank) {
  static std::mutex mutex;
  static std::map<std::pair<char, int>, RootSystemPtr> registry;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(type, rank);
  if (auto it = registry.find(key); it != registry.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(type, rank);
  registry.emplace(key, rs);
  return rs;
}

inline void check_rank(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.rank()) != rs.rank())
    throw ArgumentError("weight " + w.to_string() + " has rank " + std::to_string(w.rank()) + ", root system " +
                        rs.label() + " has rank " + std::to_string(rs.rank()));
}

/// s_i(μ) = μ - <μ, α_i^∨> α_i, with i zero-based.
inline Weight simple_reflection(const RootSystem& rs, int i, const Weight& mu) {
  rs.check_index(i);
  check_rank(rs, mu);
  Weight out = mu;
  const long c = mu.coords[i];
  const auto& row = rs.cartan_matrix()[i];
  for (int k = 0; k < rs.rank(); ++k) out.coords[k] -= c * row[k];
  return out;
}

inline Weight dominant_representative(const RootSystem& rs, const Weight& mu) {
  check_rank(rs, mu);
  Weight w = mu;
  for (;;) {
    auto it = std::find_if(w.coords.begin(), w.coords.end(), [](long c) { return c < 0; });
    if (it == w.coords.end()) return w;
    w = simple_reflection(rs, static_cast<int>(it - w.coords.begin()), w);
  }
}

inline std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda) {
  check_rank(rs, lambda);
  if (!lambda.is_dominant()) throw ArgumentError("weyl_orbit: " + lambda.to_string() + " is not dominant");
  std::set<Weight> orbit{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      if (w.coords[i] == 0) continue;
      Weight r = simple_reflection(rs, i, w);
      if (orbit.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return orbit;
}

/// λ^∨ = -w_0 λ, the highest weight of V(λ)^*.
inline Weight dual_weight(const RootSystem& rs, const Weight& lambda) {
  check_rank(rs, lambda);
  if (!lambda.is_dominant()) throw ArgumentError("dual_weight: " + lambda.to_string() + " is not dominant");
  return dominant_representative(rs, -lambda);
}

/// Weyl dimension formula prod_{α>0} (λ+ρ, α) / (ρ, α).
inline BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  check_rank(rs, lambda);
  Rational d = 1;
  const Weight lr = lambda + rs.rho();
  for (const auto& a : rs.positive_roots()) d *= rs.form(lr, a.weight) / rs.form(rs.rho(), a.weight);
  return to_integer(d, "Weyl dimension formula");
}

/// Dominant weights μ ≤ λ (λ - μ in the positive root cone), each a weight of V(λ).
inline std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
  const auto bound = rs.root_coordinates(lambda);
  const int n = rs.rank();
  std::vector<long> cap(n);
  for (int i = 0; i < n; ++i) {
    // floor of a non-negative rational
    cap[i] = static_cast<long>(boost::multiprecision::numerator(bound[i]) /
                               boost::multiprecision::denominator(bound[i]));
  }
  std::vector<Weight> out;
  std::vector<long> k(n, 0);
  std::vector<Weight> roots;
  for (int i = 0; i < n; ++i) roots.push_back(rs.simple_root(i));
  std::function<void(int, Weight)> rec = [&](int i, Weight w) {
    if (i == n) {
      if (w.is_dominant()) out.push_back(std::move(w));
      return;
    }
    for (long c = 0; c <= cap[i]; ++c) {
      rec(i + 1, w);
      w -= roots[i];
    }
  };
  rec(0, lambda);
  return out;
}

namespace detail {
struct CharacterCache {
  std::mutex mutex;
  std::map<std::tuple<char, int, Weight>, std::map<Weight, BigInt>> dominant_multiplicities;
};
inline CharacterCache& character_cache() {
  static CharacterCache cache;
  return cache;
}
}  // namespace detail

/// Multiplicities of the dominant weights of V(λ) via Freudenthal's recursion.
inline std::map<Weight, BigInt> dominant_multiplicities(const RootSystem& rs, const Weight& lambda) {
  check_rank(rs, lambda);
  if (!lambda.is_dominant()) throw ArgumentError("irreducible_character: " + lambda.to_string() + " is not dominant");
  auto key = std::make_tuple(rs.type(), rs.rank(), lambda);
  auto& cache = detail::character_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.dominant_multiplicities.find(key); it != cache.dominant_multiplicities.end())
      return it->second;
  }
  auto doms = dominant_weights_below(rs, lambda);
  // ascending depth below λ, so every weight above μ is already known
  auto depth = [&](const Weight& w) {
    Rational s = 0;
    for (const auto& c : rs.root_coordinates(lambda - w)) s += c;
    return s;
  };
  std::vector<std::pair<Rational, Weight>> order;
  for (auto& w : doms) order.emplace_back(depth(w), w);
  std::sort(order.begin(), order.end());

  std::map<Weight, BigInt> mult;
  const Weight rho = rs.rho();
  const Rational top = rs.form(lambda + rho, lambda + rho);
  auto lookup = [&](const Weight& w) -> BigInt {
    auto it = mult.find(dominant_representative(rs, w));
    return it == mult.end() ? BigInt(0) : it->second;
  };
  for (const auto& [d, mu] : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rational sum = 0;
    for (const auto& a : rs.positive_roots()) {
      Weight w = mu + a.weight;
      for (;;) {
        BigInt m_w = lookup(w);
        if (m_w == 0) break;
        sum += Rational(m_w) * rs.form(w, a.weight);
        w += a.weight;
      }
    }
    Rational denom = top - rs.form(mu + rho, mu + rho);
    BigInt m = to_integer(2 * sum / denom, "Freudenthal multiplicity");
    if (m < 0) throw ConsistencyError("Freudenthal multiplicity is negative");
    if (m != 0) mult[mu] = m;
  }
  std::lock_guard lock(cache.mutex);
  cache.dominant_multiplicities.emplace(key, mult);
  return mult;
}

/// Full character of V(λ): dominant multiplicities spread over Weyl orbits.
inline WeightMultiset irreducible_character(const RootSystem& rs, const Weight& lambda) {
  WeightMultiset ch;
  for (const auto& [mu, m] : dominant_multiplicities(rs, lambda))
    for (const auto& w : weyl_orbit(rs, mu)) ch.emplace(w, m);
  return ch;
}

/// Character of ⊕ V(λ)^{⊕ mult}.
inline WeightMultiset module_character(const RootSystem& rs, const std::vector<std::pair<Weight, int>>& highest_weights) {
  WeightMultiset ch;
  for (const auto& [lambda, mult] : highest_weights) {
    if (mult < 0) throw ArgumentError("module_character: negative multiplicity");
    for (const auto& [w, c] : irreducible_character(rs, lambda)) add_weight(ch, w, c * mult);
  }
  return ch;
}

/// Σ_ν mult(ν) e(ℓν).
inline WeightMultiset dilated_character(const WeightMultiset& ch, long ell) {
  WeightMultiset out;
  for (const auto& [w, c] : ch) add_weight(out, ell * w, c);
  return out;
}

/// Weight-graded trace of a permutation of the given cycle type on V^{⊗m}:
/// a basis tuple is fixed iff it is constant on cycles, so the trace is the
/// product over cycles of the dilated character.
inline WeightMultiset tensor_power_class_character(const WeightMultiset& chV, const Partition& cycle_type, int rank) {
  std::vector<WeightMultiset> factors;
  for (int ell : cycle_type.parts()) factors.push_back(dilated_character(chV, ell));
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  WeightMultiset out{{Weight::zero(rank), 1}};
  for (const auto& f : factors) out = multiply_characters(out, f);
  return out;
}

inline BigInt tensor_power_class_trace(const RootSystem& rs, const WeightMultiset& chV, const Partition& cycle_type,
                                       const Weight& mu) {
  check_rank(rs, mu);
  auto tr = tensor_power_class_character(chV, cycle_type, rs.rank());
  auto it = tr.find(mu);
  return it == tr.end() ? BigInt(0) : it->second;
}

/// For every weight μ of V^{⊗m}, the multiplicities s_μ(τ, V) of each S(τ)
/// (τ ordered as character_table(m).labels) in the weight space.
/// Only dominant μ are reported when `dominant_only` is set.
inline std::map<Weight, std::vector<BigInt>> tensor_power_decomposition(const RootSystem& rs, const WeightMultiset& chV,
                                                                        int m, bool dominant_only = true) {
  const auto& table = character_table(m);
  std::vector<WeightMultiset> traces;
  for (const auto& c : table.labels) traces.push_back(tensor_power_class_character(chV, c, rs.rank()));
  // identity class is (1^m), the last label
  const auto& support = traces.back();
  std::map<Weight, std::vector<BigInt>> out;
  for (const auto& [mu, dim] : support) {
    if (dominant_only && !mu.is_dominant()) continue;
    std::vector<BigInt> class_values;
    for (const auto& tr : traces) {
      auto it = tr.find(mu);
      class_values.push_back(it == tr.end() ? BigInt(0) : it->second);
    }
    std::vector<BigInt> mults;
    for (const auto& tau : table.labels)
      mults.push_back(multiplicity_in_class_function(table, tau, class_values, "s_mu"));
    out.emplace(mu, std::move(mults));
  }
  return out;
}

/// s_μ(τ, V): multiplicity of S(τ) in the μ-weight space of V^{⊗m}.
inline BigInt s_mu(const RootSystem& rs, const WeightMultiset& chV, const Partition& tau, const Weight& mu) {
  check_rank(rs, mu);
  const int m = tau.size();
  const auto& table = character_table(m);
  std::vector<BigInt> class_values;
  for (const auto& c : table.labels) class_values.push_back(tensor_power_class_trace(rs, chV, c, mu));
  return multiplicity_in_class_function(table, tau, class_values, "s_mu");
}

}  // namespace multspace
