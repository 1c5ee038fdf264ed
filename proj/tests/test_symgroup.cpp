#include "multspace/symgroup.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

using namespace multspace;

namespace {

Partition cycle_type_of(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lens;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return Partition(lens);
}

std::map<Partition, BigInt> class_sizes_by_enumeration(int m) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, BigInt> counts;
  do {
    counts[cycle_type_of(perm)] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

// SSYT count by trying every arrangement of the content multiset in the diagram
BigInt kostka_by_arrangement(const Partition& shape, const std::vector<int>& content) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < content.size(); ++i) letters.insert(letters.end(), content[i], static_cast<int>(i));
  BigInt count = 0;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t k = 0;
    for (int len : shape.parts()) {
      rows.emplace_back(letters.begin() + k, letters.begin() + k + len);
      k += len;
    }
    bool ok = true;
    for (std::size_t i = 0; i < rows.size() && ok; ++i)
      for (std::size_t j = 0; j < rows[i].size() && ok; ++j) {
        if (j > 0 && rows[i][j - 1] > rows[i][j]) ok = false;
        if (i > 0 && rows[i - 1][j] >= rows[i][j]) ok = false;
      }
    if (ok) count += 1;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return count;
}

// Character of the permutation module on cosets of the Young subgroup
// S_{a_0} x ... x S_{a_k}: the number of ways to distribute the cycles of the
// class into blocks of sizes a_i.
BigInt young_permutation_character(const Partition& cycles, std::vector<int> content) {
  std::function<BigInt(std::size_t)> rec = [&](std::size_t c) -> BigInt {
    if (c == cycles.length()) return 1;
    BigInt s = 0;
    for (auto& a : content) {
      if (a < cycles[c]) continue;
      a -= cycles[c];
      s += rec(c + 1);
      a += cycles[c];
    }
    return s;
  };
  return rec(0);
}

std::vector<std::vector<int>> compositions(int m, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int slot) {
    if (slot == parts - 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur.push_back(a);
      rec(left - a, slot + 1);
      cur.pop_back();
    }
  };
  rec(m, 0);
  return out;
}

}  // namespace

TEST(ClassSize, Examples) {
  EXPECT_EQ(class_size(Partition({1, 1, 1})), 1);
  EXPECT_EQ(class_size(Partition({2, 1})), 3);
  EXPECT_EQ(class_size(Partition({3})), 2);
}

TEST(ClassSize, MatchesEnumeration) {
  for (int m = 1; m <= 7; ++m)
    for (const auto& [type, count] : class_sizes_by_enumeration(m)) EXPECT_EQ(class_size(type), count) << type.to_string();
}

TEST(CharacterTable, SmallTables) {
  const auto& t2 = character_table(2);
  EXPECT_EQ(t2(Partition({2}), Partition({1, 1})), 1);
  EXPECT_EQ(t2(Partition({2}), Partition({2})), 1);
  EXPECT_EQ(t2(Partition({1, 1}), Partition({1, 1})), 1);
  EXPECT_EQ(t2(Partition({1, 1}), Partition({2})), -1);
  const auto& t3 = character_table(3);
  EXPECT_EQ(t3(Partition({2, 1}), Partition({1, 1, 1})), 2);
  EXPECT_EQ(t3(Partition({2, 1}), Partition({2, 1})), 0);
  EXPECT_EQ(t3(Partition({2, 1}), Partition({3})), -1);
  EXPECT_EQ(character_table(4)(Partition({2, 2}), Partition({1, 1, 1, 1})), 2);
}

TEST(CharacterTable, StandardRepresentationIsFixedPointsMinusOne) {
  for (int m = 2; m <= 8; ++m) {
    const auto& t = character_table(m);
    Partition standard({m - 1, 1});
    for (const auto& c : t.labels) {
      long fixed = std::count(c.parts().begin(), c.parts().end(), 1);
      EXPECT_EQ(t(standard, c), fixed - 1);
      EXPECT_EQ(t(Partition::row(m), c), 1);
      long sign = (m - static_cast<long>(c.length())) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(t(Partition::column(m), c), sign);
    }
  }
}

TEST(CharacterTable, Orthogonality) {
  for (int m = 1; m <= 8; ++m) {
    const auto& t = character_table(m);
    const std::size_t k = t.labels.size();
    BigInt total = 0;
    for (const auto& s : t.class_sizes) total += s;
    EXPECT_EQ(total, factorial(m));
    for (std::size_t a = 0; a < k; ++a) {
      EXPECT_EQ(t.values[a].back(), dim_irrep(t.labels[a]));
      for (std::size_t b = 0; b < k; ++b) {
        BigInt row = 0, col = 0;
        for (std::size_t c = 0; c < k; ++c) {
          row += t.class_sizes[c] * t.values[a][c] * t.values[b][c];
          col += t.values[c][a] * t.values[c][b];
        }
        EXPECT_EQ(row, a == b ? factorial(m) : BigInt(0));
        // Σ_χ χ(a)χ(b) = δ_ab m!/|class a|
        EXPECT_EQ(col, a == b ? factorial(m) / t.class_sizes[a] : BigInt(0));
      }
    }
  }
}

TEST(CharacterTable, SizeLimit) {
  EXPECT_THROW(character_table(13), SizeLimitError);
  try {
    character_table(13);
  } catch (const SizeLimitError& e) {
    EXPECT_NE(std::string(e.what()).find("12"), std::string::npos);
  }
  character_table_limit() = 13;
  EXPECT_EQ(character_table(13).labels.size(), 101u);
  character_table_limit() = kDefaultCharacterTableLimit;
}

TEST(CharacterTable, ConcurrentFillsAgree) {
  std::vector<std::thread> threads;
  std::vector<const CharacterTable*> seen(4);
  for (int i = 0; i < 4; ++i) threads.emplace_back([&, i] { seen[i] = &character_table(9); });
  for (auto& th : threads) th.join();
  for (int i = 1; i < 4; ++i) EXPECT_EQ(seen[i]->values, seen[0]->values);
}

TEST(Kronecker, Examples) {
  for (int m = 1; m <= 5; ++m)
    for (const auto& tau : enumerate_partitions(m))
      for (const auto& gamma : enumerate_partitions(m))
        EXPECT_EQ(kronecker(tau, Partition::row(m), gamma), tau == gamma ? 1 : 0);
  for (const auto& gamma : enumerate_partitions(3)) EXPECT_EQ(kronecker(Partition({2, 1}), Partition({2, 1}), gamma), 1);
  EXPECT_EQ(kronecker(Partition({2}), Partition({1, 1}), Partition({1, 1})), 1);
  EXPECT_THROW(kronecker(Partition({2}), Partition({1, 1, 1}), Partition({3})), ArgumentError);
}

TEST(Kronecker, SymmetriesAndDimensions) {
  for (int m = 1; m <= 5; ++m) {
    const auto ps = enumerate_partitions(m);
    for (const auto& t : ps)
      for (const auto& s : ps) {
        BigInt dim_sum = 0;
        for (const auto& g : ps) {
          BigInt c = kronecker(t, s, g);
          EXPECT_GE(c, 0);
          EXPECT_EQ(c, kronecker(s, t, g));
          EXPECT_EQ(c, kronecker(g, s, t));
          EXPECT_EQ(c, kronecker(t, s.conjugate(), g.conjugate()));
          dim_sum += c * dim_irrep(g);
        }
        EXPECT_EQ(dim_sum, dim_irrep(t) * dim_irrep(s));
      }
  }
}

TEST(SignTwist, IsConjugation) {
  EXPECT_EQ(sign_twist(Partition::row(4)), Partition::column(4));
  EXPECT_EQ(sign_twist(Partition({2, 1})), Partition({2, 1}));
  EXPECT_EQ(sign_twist(Partition({3, 1})), Partition({2, 1, 1}));
  for (const auto& tau : enumerate_partitions(5))
    EXPECT_EQ(kronecker(tau, Partition::column(5), sign_twist(tau)), 1);
}

TEST(Kostka, Examples) {
  for (int m = 1; m <= 6; ++m)
    for (const auto& tau : enumerate_partitions(m)) EXPECT_EQ(kostka(tau, tau.parts()), 1);
  EXPECT_EQ(kostka(Partition({2, 1}), {1, 1, 1}), 2);
  EXPECT_EQ(kostka(Partition({1, 1, 1}), {2, 1}), 0);
  EXPECT_THROW(kostka(Partition({2, 1}), {1, 1}), ArgumentError);
  EXPECT_THROW(kostka(Partition({2, 1}), {4, -1}), ArgumentError);
}

TEST(Kostka, MatchesArrangementsAndYoungsRule) {
  for (int m = 1; m <= 6; ++m) {
    const auto& table = character_table(m);
    for (int parts = 1; parts <= 3; ++parts)
      for (const auto& a : compositions(m, parts)) {
        std::vector<BigInt> perm_char;
        for (const auto& c : table.labels) perm_char.push_back(young_permutation_character(c, a));
        auto sorted = a;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        for (const auto& tau : table.labels) {
          BigInt k = kostka(tau, a);
          EXPECT_EQ(k, kostka_by_arrangement(tau, a));
          EXPECT_EQ(k, multiplicity_in_class_function(table, tau, perm_char, "young"));
          EXPECT_EQ(k, kostka(tau, sorted));
          if (!tau.dominates(a)) EXPECT_EQ(k, 0);
        }
      }
  }
}
