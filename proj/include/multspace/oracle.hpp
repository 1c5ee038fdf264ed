#pragma once

// Brute-force model of M_loc = V^{⊗m} ⊗ A_m^coin with explicit commuting
// g-, S_m- and grading structures. Nothing here calls into charformula; the
// only shared pieces are the symmetric group character table and weight
// arithmetic.

#include "multspace/charformula.hpp"
#include "multspace/laurent.hpp"
#include "multspace/lieweights.hpp"
#include "multspace/linalg.hpp"
#include "multspace/partitions.hpp"
#include "multspace/symgroup.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace multspace::oracle {

/// Raised when a construction would exceed OracleLimits.
struct BudgetError : SizeLimitError {
  using SizeLimitError::SizeLimitError;
};

struct OracleLimits {
  int max_m = 5;
  std::size_t max_dimension = 20000;

  /// Defaults overridden by MULTSPACE_ORACLE_MAX_M / MULTSPACE_ORACLE_MAX_DIM.
  static OracleLimits from_environment() {
    OracleLimits l;
    if (const char* s = std::getenv("MULTSPACE_ORACLE_MAX_M")) l.max_m = std::stoi(s);
    if (const char* s = std::getenv("MULTSPACE_ORACLE_MAX_DIM")) l.max_dimension = std::stoul(s);
    return l;
  }
};

// ---------------------------------------------------------------------------
// Explicit g-modules

/// Weight basis with Chevalley generator matrices x_i^+ and x_i^- (one pair
/// per simple root). Column j of a matrix is the image of basis vector j.
struct ExplicitModule {
  RootSystemPtr rs;
  std::vector<Weight> basis_weights;
  std::vector<Matrix> raising;
  std::vector<Matrix> lowering;

  std::size_t dimension() const { return basis_weights.size(); }

  /// h_i acts diagonally by <wt, α_i^∨>.
  Matrix cartan_action(int i) const {
    Matrix h(dimension(), dimension());
    for (std::size_t b = 0; b < dimension(); ++b) h(b, b) = basis_weights[b].coords[i];
    return h;
  }

  WeightMultiset character() const {
    WeightMultiset ch;
    for (const auto& w : basis_weights) add_weight(ch, w, 1);
    return ch;
  }

  /// Checks weight compatibility of x_i^± and [x_i^+, x_j^-] = δ_ij h_i.
  void validate() const {
    const int n = rs->rank();
    if (static_cast<int>(raising.size()) != n || static_cast<int>(lowering.size()) != n)
      throw ConsistencyError("explicit module: one raising and one lowering matrix per simple root required");
    for (int i = 0; i < n; ++i) {
      const Weight alpha = rs->simple_root(i);
      for (std::size_t r = 0; r < dimension(); ++r)
        for (std::size_t c = 0; c < dimension(); ++c) {
          if (raising[i](r, c) != 0 && basis_weights[r] != basis_weights[c] + alpha)
            throw ConsistencyError("x_" + std::to_string(i + 1) + "^+ does not raise weights by α_" + std::to_string(i + 1));
          if (lowering[i](r, c) != 0 && basis_weights[r] != basis_weights[c] - alpha)
            throw ConsistencyError("x_" + std::to_string(i + 1) + "^- does not lower weights by α_" + std::to_string(i + 1));
        }
      for (int j = 0; j < n; ++j) {
        Matrix comm = raising[i] * lowering[j] - lowering[j] * raising[i];
        Matrix expected = i == j ? cartan_action(i) : Matrix(dimension(), dimension());
        if (comm != expected)
          throw ConsistencyError("[x_" + std::to_string(i + 1) + "^+, x_" + std::to_string(j + 1) + "^-] has the wrong action");
      }
    }
  }
};

/// Natural module of sl_{n+1}: basis v_0..v_n, v_i = x_i^- v_{i-1}, weight of
/// v_i is -ω_i + ω_{i+1} with ω_0 = ω_{n+1} = 0.
inline ExplicitModule build_natural_module(int n) {
  if (n < 1) throw ArgumentError("build_natural_module: rank must be positive");
  ExplicitModule v{root_system('A', n), {}, {}, {}};
  for (int i = 0; i <= n; ++i) {
    Weight w = Weight::zero(n);
    if (i >= 1) w.coords[i - 1] -= 1;
    if (i <= n - 1) w.coords[i] += 1;
    v.basis_weights.push_back(w);
  }
  for (int i = 0; i < n; ++i) {
    Matrix up(n + 1, n + 1), down(n + 1, n + 1);
    down(i + 1, i) = 1;
    up(i, i + 1) = 1;
    v.raising.push_back(up);
    v.lowering.push_back(down);
  }
  v.validate();
  return v;
}

/// (k+1)-dimensional sl_2 module: v_j of weight (k - 2j)ω_1,
/// x^- v_j = (j+1) v_{j+1}, x^+ v_j = (k-j+1) v_{j-1}.
inline ExplicitModule build_sl2_module(int k) {
  if (k < 0) throw ArgumentError("build_sl2_module: highest weight must be non-negative");
  const std::size_t d = k + 1;
  ExplicitModule v{root_system('A', 1), {}, {}, {}};
  for (int j = 0; j <= k; ++j) v.basis_weights.push_back(Weight{k - 2L * j});
  Matrix up(d, d), down(d, d);
  for (int j = 0; j < k; ++j) down(j + 1, j) = j + 1;
  for (int j = 1; j <= k; ++j) up(j - 1, j) = k - j + 1;
  v.raising.push_back(up);
  v.lowering.push_back(down);
  v.validate();
  return v;
}

/// Contragredient module: weights negated, x acts by -x^T.
inline ExplicitModule dual_module(const ExplicitModule& v) {
  ExplicitModule d{v.rs, {}, {}, {}};
  for (const auto& w : v.basis_weights) d.basis_weights.push_back(-w);
  for (const auto& x : v.raising) d.raising.push_back(Rational(-1) * x.transposed());
  for (const auto& x : v.lowering) d.lowering.push_back(Rational(-1) * x.transposed());
  d.validate();
  return d;
}

// ---------------------------------------------------------------------------
// Coinvariant ring

using Monomial = std::vector<int>;

/// A_m / (positive-degree symmetric polynomials), built degree by degree.
///
/// Degree d is presented as ⊕_k t_k ⊗ R[d-1] modulo the Koszul relations
/// t_k (t_l y) = t_l (t_k y) for y in R[d-2] and the relations e_j q = 0 for
/// q in R[d-j]. Every basis element is represented by a monomial, so S_m and
/// multiplication by t_k act on representatives followed by normal form.
class CoinvariantRing {
 public:
  explicit CoinvariantRing(int m, const OracleLimits& limits = {}) : m_(m) {
    if (m < 1) throw ArgumentError("coinvariant ring: m must be positive");
    if (m > limits.max_m)
      throw BudgetError("coinvariant ring: m = " + std::to_string(m) + " exceeds the oracle limit " +
                        std::to_string(limits.max_m));
    degrees_.push_back(Degree{});
    degrees_[0].basis.push_back(Monomial(m, 0));
    for (int d = 1;; ++d) {
      build_degree(d);
      if (degrees_.back().basis.empty()) {
        degrees_.pop_back();
        break;
      }
    }
    build_actions();
  }

  int m() const { return m_; }
  int top_degree() const { return static_cast<int>(degrees_.size()) - 1; }
  std::size_t dimension(int d) const { return d < 0 || d > top_degree() ? 0 : degrees_[d].basis.size(); }
  std::size_t total_dimension() const {
    std::size_t s = 0;
    for (const auto& deg : degrees_) s += deg.basis.size();
    return s;
  }
  const std::vector<Monomial>& basis(int d) const { return degrees_.at(d).basis; }

  LaurentPolynomial hilbert_series() const {
    LaurentPolynomial h;
    for (int d = 0; d <= top_degree(); ++d) h.add_term(d, dimension(d));
    return h;
  }

  /// Coordinates of a monomial of degree d in the basis of R[d].
  std::vector<Rational> normal_form(const Monomial& mono) const {
    int d = 0;
    for (int a : mono) d += a;
    if (d > top_degree()) return {};
    if (d == 0) return {Rational(1)};
    auto& deg = degrees_[d];
    if (auto it = deg.nf_cache.find(mono); it != deg.nf_cache.end()) return it->second;
    std::size_t k = 0;
    while (mono[k] == 0) ++k;
    Monomial lower = mono;
    --lower[k];
    auto inner = normal_form(lower);
    std::vector<Rational> w(deg.reducer->width(), 0);
    for (std::size_t b = 0; b < inner.size(); ++b) w[k * dimension(d - 1) + b] = inner[b];
    auto coords = project(d, w);
    deg.nf_cache.emplace(mono, coords);
    return coords;
  }

  /// Matrix of the adjacent transposition s_i = (i, i+1), i zero-based, on R[d].
  const Matrix& transposition(int d, int i) const { return degrees_.at(d).transpositions.at(i); }
  /// Multiplication by t_k as a map R[d] -> R[d+1] (zero matrix past the top).
  const Matrix& multiplication(int d, int k) const { return degrees_.at(d).multiplications.at(k); }

  /// Checks s_i^2 = 1, braid relations and far commutation in every degree.
  void validate() const {
    for (int d = 0; d <= top_degree(); ++d) {
      const auto id = Matrix::identity(dimension(d));
      for (int i = 0; i + 1 < m_; ++i) {
        const auto& s = transposition(d, i);
        if (s * s != id) throw ConsistencyError("coinvariant ring: s_i^2 != 1 in degree " + std::to_string(d));
        for (int j = i + 1; j + 1 < m_; ++j) {
          const auto& t = transposition(d, j);
          bool ok = j == i + 1 ? s * t * s == t * s * t : s * t == t * s;
          if (!ok) throw ConsistencyError("coinvariant ring: braid relation fails in degree " + std::to_string(d));
        }
      }
    }
  }

 private:
  struct Degree {
    std::vector<Monomial> basis;
    std::unique_ptr<RowReducer> reducer;
    std::vector<std::size_t> free_columns;
    std::map<std::size_t, std::size_t> free_index;
    mutable std::map<Monomial, std::vector<Rational>> nf_cache;
    std::vector<Matrix> transpositions;
    std::vector<Matrix> multiplications;
  };

  // W-vector in degree d -> coordinates on R[d]
  std::vector<Rational> project(int d, const std::vector<Rational>& w) const {
    const auto& deg = degrees_[d];
    auto r = deg.reducer->reduce(w);
    std::vector<Rational> coords(deg.free_columns.size(), 0);
    for (std::size_t i = 0; i < deg.free_columns.size(); ++i) coords[i] = r[deg.free_columns[i]];
    return coords;
  }

  // t_k ⊗ NF_{d-1}(mono) as a W-vector of degree d
  void add_lift(int d, std::size_t k, const Monomial& mono, const Rational& coeff, std::vector<Rational>& w) const {
    auto inner = normal_form(mono);
    for (std::size_t b = 0; b < inner.size(); ++b) w[k * dimension(d - 1) + b] += coeff * inner[b];
  }

  void build_degree(int d) {
    const std::size_t prev = degrees_[d - 1].basis.size();
    const std::size_t width = static_cast<std::size_t>(m_) * prev;
    Degree deg;
    deg.reducer = std::make_unique<RowReducer>(width);
    degrees_.push_back(std::move(deg));
    auto& reducer = *degrees_.back().reducer;

    // Koszul relations
    if (d >= 2) {
      for (const auto& y : degrees_[d - 2].basis)
        for (int k = 0; k < m_; ++k)
          for (int l = k + 1; l < m_; ++l) {
            std::vector<Rational> w(width, 0);
            Monomial ty = y;
            ++ty[l];
            add_lift(d, k, ty, 1, w);
            ty = y;
            ++ty[k];
            add_lift(d, l, ty, -1, w);
            reducer.insert(std::move(w));
          }
    }
    // e_j q for q in R[d-j]
    for (int j = 1; j <= std::min(m_, d); ++j) {
      for (const auto& q : degrees_[d - j].basis) {
        std::vector<Rational> w(width, 0);
        for_each_subset(j, [&](const std::vector<int>& subset) {
          Monomial rest = q;
          for (std::size_t s = 1; s < subset.size(); ++s) ++rest[subset[s]];
          add_lift(d, subset.front(), rest, 1, w);
        });
        reducer.insert(std::move(w));
      }
    }
    auto& cur = degrees_.back();
    cur.free_columns = reducer.free_columns();
    for (std::size_t i = 0; i < cur.free_columns.size(); ++i) {
      std::size_t col = cur.free_columns[i];
      cur.free_index.emplace(col, i);
      Monomial rep = degrees_[d - 1].basis[col % prev];
      ++rep[col / prev];
      cur.basis.push_back(rep);
    }
  }

  template <class Fn>
  void for_each_subset(int size, Fn&& fn) const {
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(subset.size()) == size) {
        fn(subset);
        return;
      }
      for (int v = start; v < m_; ++v) {
        subset.push_back(v);
        rec(v + 1);
        subset.pop_back();
      }
    };
    rec(0);
  }

  void build_actions() {
    for (int d = 0; d <= top_degree(); ++d) {
      auto& deg = degrees_[d];
      const std::size_t n = deg.basis.size();
      for (int i = 0; i + 1 < m_; ++i) {
        Matrix s(n, n);
        for (std::size_t b = 0; b < n; ++b) {
          Monomial mono = deg.basis[b];
          std::swap(mono[i], mono[i + 1]);
          auto nf = normal_form(mono);
          for (std::size_t r = 0; r < n; ++r) s(r, b) = nf[r];
        }
        deg.transpositions.push_back(std::move(s));
      }
      const std::size_t up = dimension(d + 1);
      for (int k = 0; k < m_; ++k) {
        Matrix t(up, n);
        if (up > 0)
          for (std::size_t b = 0; b < n; ++b) {
            Monomial mono = deg.basis[b];
            ++mono[k];
            auto nf = normal_form(mono);
            for (std::size_t r = 0; r < up; ++r) t(r, b) = nf[r];
          }
        deg.multiplications.push_back(std::move(t));
      }
    }
  }

  int m_;
  std::vector<Degree> degrees_;
};

inline CoinvariantRing build_coinvariant_ring(int m, const OracleLimits& limits = {}) {
  CoinvariantRing r(m, limits);
  r.validate();
  return r;
}

/// Adjacent-transposition word (zero-based indices) for the standard
/// representative of a cycle type: consecutive blocks, each cycle
/// (a a+1 ... b) = s_a s_{a+1} ... s_{b-1}.
inline std::vector<int> class_representative_word(const Partition& cycle_type) {
  std::vector<int> word;
  int start = 0;
  for (int len : cycle_type.parts()) {
    for (int i = start; i < start + len - 1; ++i) word.push_back(i);
    start += len;
  }
  return word;
}

inline Matrix compose_word(const std::vector<int>& word, const std::function<const Matrix&(int)>& generator,
                           std::size_t dim) {
  Matrix g = Matrix::identity(dim);
  for (int i : word) g = g * generator(i);
  return g;
}

/// Trace of every class representative (ordered as character_table(m).labels)
/// on R[d].
inline std::vector<BigInt> coinvariant_class_traces(const CoinvariantRing& r, int d) {
  const auto& table = character_table(r.m());
  std::vector<BigInt> traces;
  for (const auto& c : table.labels) {
    Matrix g = compose_word(class_representative_word(c), [&](int i) -> const Matrix& { return r.transposition(d, i); },
                            r.dimension(d));
    traces.push_back(to_integer(g.trace(), "coinvariant trace"));
  }
  return traces;
}

/// Σ_d mult(S(σ), R[d]) u^d by character projection.
inline LaurentPolynomial coinvariant_isotypic_series(const CoinvariantRing& r, const Partition& sigma) {
  if (sigma.size() != r.m()) throw ArgumentError("sigma does not partition m");
  const auto& table = character_table(r.m());
  LaurentPolynomial f;
  for (int d = 0; d <= r.top_degree(); ++d)
    f.add_term(d, multiplicity_in_class_function(table, sigma, coinvariant_class_traces(r, d), "coinvariant projection"));
  return f;
}

// ---------------------------------------------------------------------------
// The localized bimodule

/// Basis: (tensor word in the V-basis) × (coinvariant basis element), graded
/// by coinvariant degree. Operators act on column vectors.
class LocalizedBimodule {
 public:
  struct BasisVector {
    std::size_t word;  // index into words()
    int degree;
    std::size_t ring_index;
  };

  LocalizedBimodule(const ExplicitModule& v, const CoinvariantRing& ring, const OracleLimits& limits = {})
      : v_(&v), ring_(&ring), m_(ring.m()) {
    BigInt dim = 1;
    for (int i = 0; i < m_; ++i) dim *= v.dimension();
    dim *= ring.total_dimension();
    if (dim > limits.max_dimension)
      throw BudgetError("M_loc dimension " + dim.str() + " = " + std::to_string(v.dimension()) + "^" +
                        std::to_string(m_) + " * " + std::to_string(ring.total_dimension()) +
                        " exceeds the oracle budget " + std::to_string(limits.max_dimension));
    std::vector<int> word(m_, 0);
    const int base = static_cast<int>(v.dimension());
    for (;;) {
      words_.push_back(word);
      Weight w = Weight::zero(v.rs->rank());
      for (int x : word) w += v.basis_weights[x];
      word_weights_.push_back(w);
      int pos = m_ - 1;
      while (pos >= 0 && ++word[pos] == base) word[pos--] = 0;
      if (pos < 0) break;
    }
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      for (int d = 0; d <= ring.top_degree(); ++d)
        for (std::size_t b = 0; b < ring.dimension(d); ++b) {
          index_.emplace(std::make_tuple(wi, d, b), basis_.size());
          basis_.push_back({wi, d, b});
        }
  }

  int m() const { return m_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<BasisVector>& basis() const { return basis_; }
  const std::vector<std::vector<int>>& words() const { return words_; }
  const ExplicitModule& module() const { return *v_; }
  const CoinvariantRing& ring() const { return *ring_; }
  Weight weight(std::size_t i) const { return word_weights_[basis_[i].word]; }
  int grade(std::size_t i) const { return basis_[i].degree; }

  /// Simultaneous swap of tensor positions i, i+1 and of t_i, t_{i+1}.
  SparseMatrix transposition(int i) const {
    SparseMatrix s(dimension(), dimension());
    for (std::size_t c = 0; c < dimension(); ++c) {
      const auto& bv = basis_[c];
      auto w = words_[bv.word];
      std::swap(w[i], w[i + 1]);
      const std::size_t wi = word_index(w);
      const auto& ring_s = ring_->transposition(bv.degree, i);
      for (std::size_t r = 0; r < ring_->dimension(bv.degree); ++r)
        s.add(index_.at(std::make_tuple(wi, bv.degree, r)), c, ring_s(r, bv.ring_index));
    }
    return s;
  }

  /// Action of x ⊗ t^power on M: Σ_pos x at tensor position pos, times
  /// multiplication by t_pos^power on the ring factor. power ∈ {0, 1}.
  SparseMatrix current_action(const Matrix& x, int power) const {
    SparseMatrix out(dimension(), dimension());
    for (std::size_t c = 0; c < dimension(); ++c) {
      const auto& bv = basis_[c];
      for (int pos = 0; pos < m_; ++pos) {
        const int letter = words_[bv.word][pos];
        for (std::size_t r = 0; r < x.rows(); ++r) {
          const Rational& coeff = x(r, letter);
          if (coeff == 0) continue;
          auto w = words_[bv.word];
          w[pos] = static_cast<int>(r);
          const std::size_t wi = word_index(w);
          if (power == 0) {
            out.add(index_.at(std::make_tuple(wi, bv.degree, bv.ring_index)), c, coeff);
          } else {
            const int up = bv.degree + 1;
            if (up > ring_->top_degree()) continue;
            const auto& mult = ring_->multiplication(bv.degree, pos);
            for (std::size_t rr = 0; rr < ring_->dimension(up); ++rr)
              out.add(index_.at(std::make_tuple(wi, up, rr)), c, coeff * mult(rr, bv.ring_index));
          }
        }
      }
    }
    return out;
  }

  /// Basis indices of M_loc[k]_μ.
  std::vector<std::size_t> block(int k, const Weight& mu) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].degree == k && word_weights_[basis_[i].word] == mu) idx.push_back(i);
    return idx;
  }

  /// Distinct weights of V^{⊗m}.
  std::vector<Weight> weights() const {
    std::set<Weight> s(word_weights_.begin(), word_weights_.end());
    return {s.begin(), s.end()};
  }

 private:
  std::size_t word_index(const std::vector<int>& w) const {
    std::size_t idx = 0;
    for (int x : w) idx = idx * v_->dimension() + x;
    return idx;
  }

  const ExplicitModule* v_;
  const CoinvariantRing* ring_;
  int m_;
  std::vector<std::vector<int>> words_;
  std::vector<Weight> word_weights_;
  std::vector<BasisVector> basis_;
  std::map<std::tuple<std::size_t, int, std::size_t>, std::size_t> index_;
};

inline LocalizedBimodule build_M_loc(const ExplicitModule& v, const CoinvariantRing& ring,
                                     const OracleLimits& limits = {}) {
  return LocalizedBimodule(v, ring, limits);
}

/// Traces of the class representatives (ordered as character_table(m).labels)
/// on the block M_loc[k]_μ, composing generator matrices restricted to it.
class BlockTracer {
 public:
  explicit BlockTracer(const LocalizedBimodule& M) : M_(&M) {
    for (int i = 0; i + 1 < M.m(); ++i) generators_.push_back(M.transposition(i));
  }

  std::vector<BigInt> class_traces(int k, const Weight& mu) const {
    const auto idx = M_->block(k, mu);
    std::vector<Matrix> gens;
    for (const auto& g : generators_) gens.push_back(g.restricted(idx));
    const auto& table = character_table(M_->m());
    std::vector<BigInt> traces;
    for (const auto& c : table.labels) {
      Matrix g = compose_word(class_representative_word(c), [&](int i) -> const Matrix& { return gens[i]; }, idx.size());
      traces.push_back(to_integer(g.trace(), "block trace"));
    }
    return traces;
  }

  const LocalizedBimodule& bimodule() const { return *M_; }

 private:
  const LocalizedBimodule* M_;
  std::vector<SparseMatrix> generators_;
};

/// Multiplicity space of S(γ) in M_loc, graded and weight-resolved, assembled
/// over dominant weights. Every weight (not only dominant ones) is projected,
/// and Weyl invariance of the result is asserted.
inline GradedCharacter oracle_graded_char_B_loc(const BlockTracer& tracer, const Partition& gamma) {
  const auto& M = tracer.bimodule();
  const int m = M.m();
  if (gamma.size() != m) throw ArgumentError("gamma does not partition m");
  const auto& table = character_table(m);
  const auto& rs = *M.module().rs;
  std::map<Weight, LaurentPolynomial> all;
  for (const auto& mu : M.weights())
    for (int k = 0; k <= M.ring().top_degree(); ++k) {
      BigInt mult = multiplicity_in_class_function(table, gamma, tracer.class_traces(k, mu), "oracle projection");
      if (mult != 0) all[mu].add_term(k, mult);
    }
  GradedCharacter chi{M.module().rs, {}, m, gamma, std::nullopt};
  for (const auto& [mu, p] : all) {
    Weight dom = dominant_representative(rs, mu);
    auto it = all.find(dom);
    if (it == all.end() || it->second != p)
      throw ConsistencyError("oracle: multiplicity at " + mu.to_string() + " differs from its dominant representative");
    if (mu == dom) chi.add(mu, p);
  }
  return chi;
}

inline GradedCharacter oracle_graded_char_B_loc(const ExplicitModule& v, int m, const Partition& gamma,
                                                const OracleLimits& limits = {}) {
  auto ring = build_coinvariant_ring(m, limits);
  auto M = build_M_loc(v, ring, limits);
  return oracle_graded_char_B_loc(BlockTracer(M), gamma);
}

struct CommutationReport {
  std::size_t generator_checks = 0;  // (g-generator, s_i) pairs verified
  std::size_t relation_checks = 0;   // g-relations verified on M_loc
};

/// Asserts that x_i^±, h_i and x_i^± ⊗ t commute with every adjacent
/// transposition on M_loc, that [x_i^+, x_j^-] = δ_ij h_i holds there, and that
/// the transpositions preserve weight spaces. Throws ConsistencyError naming
/// the offending pair.
inline CommutationReport verify_commuting_actions(const LocalizedBimodule& M) {
  CommutationReport report;
  const auto& v = M.module();
  const int n = v.rs->rank();
  struct Named {
    std::string name;
    SparseMatrix op;
  };
  std::vector<Named> gens;
  std::vector<SparseMatrix> up, down, h;
  for (int i = 0; i < n; ++i) {
    const std::string idx = std::to_string(i + 1);
    up.push_back(M.current_action(v.raising[i], 0));
    down.push_back(M.current_action(v.lowering[i], 0));
    h.push_back(M.current_action(v.cartan_action(i), 0));
    gens.push_back({"x_" + idx + "^+", up.back()});
    gens.push_back({"x_" + idx + "^-", down.back()});
    gens.push_back({"h_" + idx, h.back()});
    gens.push_back({"x_" + idx + "^+ t", M.current_action(v.raising[i], 1)});
    gens.push_back({"x_" + idx + "^- t", M.current_action(v.lowering[i], 1)});
  }
  for (int s = 0; s + 1 < M.m(); ++s) {
    const SparseMatrix sigma = M.transposition(s);
    for (std::size_t c = 0; c < M.dimension(); ++c)
      for (const auto& [r, x] : sigma.row(c))
        if (M.weight(r) != M.weight(c) || M.grade(r) != M.grade(c))
          throw ConsistencyError("s_" + std::to_string(s + 1) + " does not preserve weight and grade");
    for (const auto& g : gens) {
      if (!(g.op * sigma - sigma * g.op).is_zero())
        throw ConsistencyError(g.name + " does not commute with s_" + std::to_string(s + 1));
      ++report.generator_checks;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseMatrix comm = up[i] * down[j] - down[j] * up[i];
      bool ok = i == j ? comm == h[i] : comm.is_zero();
      if (!ok)
        throw ConsistencyError("[x_" + std::to_string(i + 1) + "^+, x_" + std::to_string(j + 1) + "^-] fails on M_loc");
      ++report.relation_checks;
    }
  return report;
}

/// Explicit model for a module given by highest weights, when one exists:
/// A_1 with V(k), and A_n with V(ω_1) or its dual V(ω_n).
inline std::optional<ExplicitModule> explicit_model(const ModuleSpec& spec) {
  if (spec.highest_weights.size() != 1 || spec.highest_weights.front().second != 1) return std::nullopt;
  const auto& rs = *spec.rs;
  const Weight& hw = spec.highest_weights.front().first;
  if (rs.type() != 'A') return std::nullopt;
  if (rs.rank() == 1) return build_sl2_module(static_cast<int>(hw.coords[0]));
  if (hw == Weight::fundamental(rs.rank(), 0)) return build_natural_module(rs.rank());
  if (hw == Weight::fundamental(rs.rank(), rs.rank() - 1)) return dual_module(build_natural_module(rs.rank()));
  return std::nullopt;
}

}  // namespace multspace::oracle
