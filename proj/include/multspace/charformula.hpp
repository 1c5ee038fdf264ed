#pragma once

#include "json.hpp"
#include "multspace/laurent.hpp"
#include "multspace/lieweights.hpp"
#include "multspace/partitions.hpp"
#include "multspace/symgroup.hpp"

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace multspace {

/// Σ_λ g_λ(u) e(O(λ)) over dominant λ. Keys are dominant, no zero polynomial
/// is stored.
struct GradedCharacter {
  RootSystemPtr rs;
  std::map<Weight, LaurentPolynomial> terms;
  int m = 0;
  std::optional<Partition> gamma;
  std::optional<long> truncated_at;

  void add(const Weight& lambda, const LaurentPolynomial& p) {
    if (!lambda.is_dominant()) throw ArgumentError("graded character key " + lambda.to_string() + " is not dominant");
    if (p.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(lambda, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  LaurentPolynomial coefficient(const Weight& lambda) const {
    auto it = terms.find(lambda);
    return it == terms.end() ? LaurentPolynomial() : it->second;
  }

  /// Σ_λ g_λ(u) |O(λ)|: the Hilbert series of the module.
  LaurentPolynomial hilbert_series() const {
    LaurentPolynomial h;
    for (const auto& [w, p] : terms) h += BigInt(weyl_orbit(*rs, w).size()) * p;
    return h;
  }

  /// Same root system, same terms. Labels (m, γ, truncation) are ignored.
  bool same_character(const GradedCharacter& o) const { return *rs == *o.rs && terms == o.terms; }
};

/// A finite-dimensional g-module given by its highest weights with multiplicities.
struct ModuleSpec {
  RootSystemPtr rs;
  std::vector<std::pair<Weight, int>> highest_weights;

  ModuleSpec(RootSystemPtr r, std::vector<std::pair<Weight, int>> hw) : rs(std::move(r)), highest_weights(std::move(hw)) {
    if (highest_weights.empty()) throw ArgumentError("module needs at least one highest weight");
    for (const auto& [w, mult] : highest_weights) {
      check_rank(*rs, w);
      if (!w.is_dominant()) throw ArgumentError("highest weight " + w.to_string() + " is not dominant");
      if (mult <= 0) throw ArgumentError("highest weight multiplicities must be positive");
    }
  }

  /// Irreducible V(λ).
  static ModuleSpec irreducible(RootSystemPtr r, Weight lambda) { return ModuleSpec(std::move(r), {{std::move(lambda), 1}}); }

  WeightMultiset character() const { return module_character(*rs, highest_weights); }

  ModuleSpec dual() const {
    std::vector<std::pair<Weight, int>> hw;
    for (const auto& [w, mult] : highest_weights) hw.emplace_back(dual_weight(*rs, w), mult);
    return ModuleSpec(rs, std::move(hw));
  }
};

/// Σ_σ c^γ_{τσ} f_σ(u) for each τ ⊢ m, ordered as character_table(m).labels.
inline std::vector<LaurentPolynomial> kronecker_fake_degree_sums(const Partition& gamma) {
  const auto& table = character_table(gamma.size());
  std::vector<LaurentPolynomial> fs;
  for (const auto& sigma : table.labels) fs.push_back(fake_degree(sigma));
  std::vector<LaurentPolynomial> out;
  for (const auto& tau : table.labels) {
    LaurentPolynomial p;
    for (std::size_t s = 0; s < table.labels.size(); ++s) {
      BigInt c = kronecker(tau, table.labels[s], gamma);
      if (c != 0) p += c * fs[s];
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline void check_gamma(const Partition& gamma, int m) {
  if (m < 1) throw ArgumentError("m must be positive");
  if (gamma.size() != m)
    throw ArgumentError("gamma " + gamma.to_string() + " does not partition m = " + std::to_string(m));
}

/// Graded character of B_loc(γ, V):
/// Σ_{μ ∈ P+} Σ_{σ,τ} s_μ(τ, V) c^γ_{τσ} f_σ(u) e(O(μ)).
inline GradedCharacter graded_char_B_loc(const Partition& gamma, const ModuleSpec& V, int m) {
  check_gamma(gamma, m);
  GradedCharacter out{V.rs, {}, m, gamma, std::nullopt};
  const auto sums = kronecker_fake_degree_sums(gamma);
  for (const auto& [mu, s] : tensor_power_decomposition(*V.rs, V.character(), m)) {
    LaurentPolynomial g;
    for (std::size_t t = 0; t < s.size(); ++t)
      if (s[t] != 0) g += s[t] * sums[t];
    out.add(mu, g);
  }
  return out;
}

/// Graded character of B(γ, V) = H(symmetric polynomials) · χ B_loc(γ, V),
/// truncated above u^max_degree.
inline GradedCharacter graded_char_B(const Partition& gamma, const ModuleSpec& V, int m, long max_degree) {
  if (max_degree < 0) throw ArgumentError("max_degree must be non-negative");
  GradedCharacter loc = graded_char_B_loc(gamma, V, m);
  const LaurentPolynomial h = symmetric_invariants_series(m, max_degree);
  GradedCharacter out{V.rs, {}, m, gamma, max_degree};
  for (const auto& [w, p] : loc.terms) out.add(w, LaurentPolynomial::multiply_truncated(p, h, max_degree));
  return out;
}

/// Graded dual: Σ g_λ(u^{-1}) e(O(λ^∨)).
inline GradedCharacter dual_graded_char(const GradedCharacter& chi) {
  GradedCharacter out{chi.rs, {}, chi.m, chi.gamma, std::nullopt};
  for (const auto& [w, p] : chi.terms) out.add(dual_weight(*chi.rs, w), p.inverted());
  return out;
}

inline GradedCharacter shift_grading(const GradedCharacter& chi, long k) {
  GradedCharacter out = chi;
  for (auto& [w, p] : out.terms) p = p.shifted(k);
  return out;
}

struct DualityReport {
  bool holds = false;
  long shift = 0;
  GradedCharacter lhs;  // χ B_loc(γ, V)
  GradedCharacter rhs;  // u^shift · χ B_loc(γ^∨, V^*)^*
  std::vector<Weight> differing;
};

/// Compares χ B_loc(γ, V) with u^{C(m,2)} χ B_loc(γ^∨, V^*)^*.
inline DualityReport check_duality(const Partition& gamma, const ModuleSpec& V, int m) {
  check_gamma(gamma, m);
  DualityReport r;
  r.shift = static_cast<long>(m) * (m - 1) / 2;
  r.lhs = graded_char_B_loc(gamma, V, m);
  r.rhs = shift_grading(dual_graded_char(graded_char_B_loc(gamma.conjugate(), V.dual(), m)), r.shift);
  r.rhs.gamma = gamma;
  std::set<Weight> keys;
  for (const auto& [w, p] : r.lhs.terms) keys.insert(w);
  for (const auto& [w, p] : r.rhs.terms) keys.insert(w);
  for (const auto& w : keys)
    if (r.lhs.coefficient(w) != r.rhs.coefficient(w)) r.differing.push_back(w);
  r.holds = r.differing.empty();
  return r;
}

/// Weight of v_0^{a_0} ⊗ ... ⊗ v_n^{a_n} in V(ω_1)^{⊗m} for sl_{n+1}:
/// Σ_i (a_{i-1} - a_i) ω_i.
inline Weight natural_rep_weight(int n, const std::vector<int>& a) {
  if (n < 1) throw ArgumentError("rank must be positive");
  if (static_cast<int>(a.size()) != n + 1)
    throw ArgumentError("composition must have n+1 = " + std::to_string(n + 1) + " entries");
  for (int x : a)
    if (x < 0) throw ArgumentError("composition entries must be non-negative");
  Weight w = Weight::zero(n);
  for (int i = 0; i < n; ++i) w.coords[i] = a[i] - a[i + 1];
  return w;
}

/// χ B_loc(γ, V(ω_1)) for sl_{n+1} with s_μ replaced by Kostka numbers:
/// Σ_{ā, τ, σ} K_{τ,ā} c^γ_{τσ} f_σ(u) e(O(μ_ā)), ā ⊢ m with at most n+1 parts.
inline GradedCharacter graded_char_natural(const Partition& gamma, int n, int m) {
  check_gamma(gamma, m);
  if (n < 1) throw ArgumentError("rank must be positive");
  const auto& table = character_table(m);
  const auto sums = kronecker_fake_degree_sums(gamma);
  GradedCharacter out{root_system('A', n), {}, m, gamma, std::nullopt};
  for (const auto& abar : enumerate_partitions(m)) {
    if (static_cast<int>(abar.length()) > n + 1) continue;
    std::vector<int> a(abar.parts());
    a.resize(n + 1, 0);
    LaurentPolynomial g;
    for (std::size_t t = 0; t < table.labels.size(); ++t) {
      const auto& tau = table.labels[t];
      if (!tau.dominates(abar.parts())) continue;
      BigInt k = kostka(tau, abar.parts());
      if (k != 0) g += k * sums[t];
    }
    out.add(natural_rep_weight(n, a), g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical serialization

namespace detail {
inline nlohmann::ordered_json big_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}
inline BigInt big_from_json(const nlohmann::ordered_json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  throw ArgumentError("coefficient must be an integer or decimal string");
}
}  // namespace detail

inline nlohmann::ordered_json polynomial_to_json(const LaurentPolynomial& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = detail::big_to_json(c);
  return j;
}

inline LaurentPolynomial polynomial_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw ArgumentError("polynomial must be a JSON object");
  LaurentPolynomial p;
  for (const auto& [k, v] : j.items()) p.add_term(std::stol(k), detail::big_from_json(v));
  return p;
}

/// { "type", "rank", "m", "gamma", "terms": [{"weight", "poly"}], "truncated_at" }
/// Terms are ordered by weight coordinates, exponents ascending.
inline nlohmann::ordered_json to_json(const GradedCharacter& chi) {
  nlohmann::ordered_json j;
  j["type"] = std::string(1, chi.rs->type());
  j["rank"] = chi.rs->rank();
  j["m"] = chi.m;
  j["gamma"] = chi.gamma ? nlohmann::ordered_json(chi.gamma->parts()) : nlohmann::ordered_json(nullptr);
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [w, p] : chi.terms) {
    nlohmann::ordered_json t;
    t["weight"] = w.coords;
    t["poly"] = polynomial_to_json(p);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  j["truncated_at"] = chi.truncated_at ? nlohmann::ordered_json(*chi.truncated_at) : nlohmann::ordered_json(nullptr);
  return j;
}

inline GradedCharacter graded_character_from_json(const nlohmann::ordered_json& j) {
  try {
    auto type = j.at("type").get<std::string>();
    if (type.size() != 1) throw ArgumentError("type must be a single letter");
    GradedCharacter chi;
    chi.rs = root_system(type[0], j.at("rank").get<int>());
    chi.m = j.at("m").get<int>();
    if (!j.at("gamma").is_null()) chi.gamma = Partition(j.at("gamma").get<std::vector<int>>());
    if (!j.at("truncated_at").is_null()) chi.truncated_at = j.at("truncated_at").get<long>();
    for (const auto& t : j.at("terms")) {
      Weight w(t.at("weight").get<std::vector<long>>());
      check_rank(*chi.rs, w);
      chi.add(w, polynomial_from_json(t.at("poly")));
    }
    return chi;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed graded character document: ") + e.what());
  }
}

/// One line per term: "e(O(2,0)) * (1 + u)".
inline std::string to_text(const GradedCharacter& chi) {
  std::ostringstream os;
  if (chi.terms.empty()) os << "0\n";
  for (const auto& [w, p] : chi.terms) os << "e(O" << w.to_string() << ") * (" << p.to_string() << ")\n";
  if (chi.truncated_at) os << "[truncated above u^" << *chi.truncated_at << "]\n";
  return os.str();
}

}  // namespace multspace
