// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "multspace/multspace.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace multspace;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (ok) note << why;
    ok = false;
  }
  std::size_t checks = 0;
  void expect(bool cond, const std::string& why) {
    ++checks;
    if (!cond) fail(why);
  }
};

struct Instance {
  ModuleSpec spec;
  oracle::ExplicitModule model;
  std::vector<int> ms;
};

std::vector<Instance> module_instances() {
  return {{ModuleSpec::irreducible(root_system('A', 1), Weight{1}), oracle::build_sl2_module(1), {2, 3, 4}},
          {ModuleSpec::irreducible(root_system('A', 1), Weight{2}), oracle::build_sl2_module(2), {2, 3}},
          {ModuleSpec::irreducible(root_system('A', 2), Weight({1, 0})), oracle::build_natural_module(2), {2, 3}}};
}

std::string label(const Instance& in, int m) {
  return in.spec.rs->label() + " V" + in.spec.highest_weights.front().first.to_string() + " m=" + std::to_string(m);
}

void fake_degree_duality(Outcome& o) {
  for (int m = 1; m <= 8; ++m) {
    const long top = m * (m - 1) / 2;
    for (const auto& s : enumerate_partitions(m))
      o.expect(fake_degree(s) == fake_degree(s.conjugate()).inverted().shifted(top), "f_" + s.to_string());
  }
}

void major_index_complement(Outcome& o) {
  for (int m = 1; m <= 8; ++m)
    for (const auto& s : enumerate_partitions(m))
      for (const auto& t : standard_tableaux(s))
        o.expect(major_index(t) + major_index(t.conjugate()) == m * (m - 1) / 2, "tableau of shape " + s.to_string());
}

void coinvariant_cross_check(Outcome& o) {
  for (int m = 1; m <= 5; ++m) {
    auto r = oracle::build_coinvariant_ring(m);
    o.expect(r.hilbert_series() == LaurentPolynomial::q_factorial(m), "Hilbert series m=" + std::to_string(m));
    for (const auto& s : enumerate_partitions(m))
      o.expect(oracle::coinvariant_isotypic_series(r, s) == fake_degree(s), "isotypic " + s.to_string());
  }
}

void kronecker_symmetries(Outcome& o) {
  for (int m = 1; m <= 6; ++m) {
    const auto ps = enumerate_partitions(m);
    for (const auto& t : ps)
      for (const auto& s : ps) {
        BigInt dims = 0;
        for (const auto& g : ps) {
          const BigInt c = kronecker(t, s, g);
          const std::string at = t.to_string() + s.to_string() + g.to_string();
          o.expect(c == kronecker(t, s.conjugate(), g.conjugate()), "conjugation " + at);
          o.expect(c == kronecker(s, t, g) && c == kronecker(g, s, t) && c == kronecker(t, g, s) &&
                       c == kronecker(s, g, t) && c == kronecker(g, t, s),
                   "S3 symmetry " + at);
          dims += c * dim_irrep(g);
        }
        o.expect(dims == dim_irrep(t) * dim_irrep(s), "dimension sum");
      }
  }
}

void formula_vs_oracle(Outcome& o) {
  for (const auto& in : module_instances())
    for (int m : in.ms) {
      auto ring = oracle::build_coinvariant_ring(m);
      auto M = oracle::build_M_loc(in.model, ring);
      oracle::BlockTracer tracer(M);
      for (const auto& g : enumerate_partitions(m))
        o.expect(oracle::oracle_graded_char_B_loc(tracer, g).same_character(graded_char_B_loc(g, in.spec, m)),
                 label(in, m) + " gamma " + g.to_string());
    }
}

void duality(Outcome& o) {
  for (const auto& in : module_instances())
    for (int m = 1; m <= 4; ++m)
      for (const auto& g : enumerate_partitions(m)) {
        auto r = check_duality(g, in.spec, m);
        o.expect(r.holds && r.shift == m * (m - 1) / 2, label(in, m) + " gamma " + g.to_string());
      }
}

void natural_specialization(Outcome& o) {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 5; ++m) {
      auto V = ModuleSpec::irreducible(root_system('A', n), Weight::fundamental(n, 0));
      for (const auto& g : enumerate_partitions(m))
        o.expect(graded_char_natural(g, n, m).same_character(graded_char_B_loc(g, V, m)),
                 "A" + std::to_string(n) + " m=" + std::to_string(m) + " gamma " + g.to_string());
    }
}

void aggregation(Outcome& o) {
  for (const auto& in : module_instances())
    for (int m : in.ms) {
      std::map<Weight, LaurentPolynomial> total, expected;
      for (const auto& g : enumerate_partitions(m))
        for (const auto& [w, p] : graded_char_B_loc(g, in.spec, m).terms) total[w] += dim_irrep(g) * p;
      const auto qf = LaurentPolynomial::q_factorial(m);
      for (const auto& [w, c] : character_power(in.spec.character(), m, in.spec.rs->rank()))
        if (w.is_dominant()) expected[w] = c * qf;
      o.expect(total == expected, label(in, m));
    }
}

void known_characters(Outcome& o) {
  for (const auto& in : module_instances())
    for (long D : {0L, 3L, 6L}) {
      auto b = graded_char_B(Partition({1}), in.spec, 1, D);
      GradedCharacter expected{in.spec.rs, {}, 1, Partition({1}), D};
      LaurentPolynomial geometric;
      for (long r = 0; r <= D; ++r) geometric.add_term(r, 1);
      for (const auto& [w, c] : in.spec.character())
        if (w.is_dominant()) expected.add(w, c * geometric);
      o.expect(b.same_character(expected), "V[t] for " + label(in, 1) + " D=" + std::to_string(D));
    }
  auto V = ModuleSpec::irreducible(root_system('A', 1), Weight{1});
  for (int m = 1; m <= 6; ++m) {
    auto b = graded_char_B(Partition::row(m), V, m, 4);
    o.expect(b.coefficient(Weight{m}).coeff(0) == 1 && b.coefficient(Weight{m}).min_degree() == 0,
             "lowest grade of e(O(m w1)), m=" + std::to_string(m));
  }
}

void properties(Outcome& o) {
  for (int m = 1; m <= 10; ++m) {
    const auto& t = character_table(m);
    const std::size_t k = t.labels.size();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) {
        BigInt s = 0;
        for (std::size_t c = 0; c < k; ++c) s += t.class_sizes[c] * t.values[a][c] * t.values[b][c];
        o.expect(s == (a == b ? factorial(m) : BigInt(0)), "orthogonality m=" + std::to_string(m));
      }
  }
  const std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}};
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<long> coord(-6, 6);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    auto [t, n] = types[pick(rng)];
    auto rs = root_system(t, n);
    Weight w = Weight::zero(n);
    for (auto& c : w.coords) c = coord(rng);
    const Weight dom = dominant_representative(*rs, w);
    auto orbit = weyl_orbit(*rs, dom);
    int dominant = 0;
    for (const auto& x : orbit) dominant += x.is_dominant() ? 1 : 0;
    o.expect(orbit.count(w) == 1 && dominant == 1, "orbit of " + w.to_string() + " in " + rs->label());
  }
  std::uniform_int_distribution<long> hw(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    auto [t, n] = types[pick(rng)];
    auto rs = root_system(t, n);
    Weight lambda = Weight::zero(n);
    for (auto& c : lambda.coords) c = hw(rng);
    o.expect(total_dimension(irreducible_character(*rs, lambda)) == weyl_dimension(*rs, lambda),
             "dimension of V" + lambda.to_string() + " in " + rs->label());
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"fake-degree duality, m <= 8", fake_degree_duality},
      {"major index complementation, m <= 8", major_index_complement},
      {"coinvariant ring vs fake degrees, m <= 5", coinvariant_cross_check},
      {"Kronecker conjugation and symmetry, m <= 6", kronecker_symmetries},
      {"graded character formula vs explicit model", formula_vs_oracle},
      {"duality of conjugate partitions and dual modules, m <= 4", duality},
      {"Kostka path vs trace path, n <= 3, m <= 5", natural_specialization},
      {"aggregation over gamma", aggregation},
      {"known characters: V[t] and lowest grade", known_characters},
      {"property suite", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::printf("[%s] %2zu. %s (%zu checks, %.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.checks, secs, o.ok ? "" : ": first failure at ", o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
