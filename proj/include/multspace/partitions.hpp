#pragma once

#include "multspace/laurent.hpp"
#include "multspace/numeric.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace multspace {

/// Weakly decreasing list of positive integers. Trailing zeros are stripped on
/// construction; the empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw ArgumentError("partition parts must be positive: " + to_string_raw(parts_));
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw ArgumentError("partition parts must be weakly decreasing: " + to_string_raw(parts_));
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// (k, k, ..., k) with `count` parts.
  static Partition rectangle(int k, int count) { return Partition(std::vector<int>(count, k)); }
  static Partition row(int m) { return m == 0 ? Partition() : Partition({m}); }
  static Partition column(int m) { return rectangle(1, m); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
  }

  /// True when this ≥ other in dominance order (partial sums). Compositions
  /// are compared after sorting, so `other` may be any content vector.
  bool dominates(const std::vector<int>& other) const {
    std::vector<int> o(other);
    std::sort(o.begin(), o.end(), std::greater<>());
    long a = 0, b = 0;
    std::size_t n = std::max(parts_.size(), o.size());
    for (std::size_t i = 0; i < n; ++i) {
      a += (*this)[i];
      b += i < o.size() ? o[i] : 0;
      if (a < b) return false;
    }
    return a == b;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  /// "(3,1)"; "()" for the empty partition.
  std::string to_string() const { return "(" + join(parts_) + ")"; }
  /// "3,1" as accepted on the command line.
  std::string to_csv() const { return join(parts_); }

 private:
  static std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  }
  static std::string to_string_raw(const std::vector<int>& v) { return "(" + join(v) + ")"; }

  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of m, lexicographically descending: (m), (m-1,1), ..., (1^m).
inline std::vector<Partition> enumerate_partitions(int m) {
  if (m < 0) throw ArgumentError("cannot enumerate partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

/// Product of hook lengths rule for f^λ, the dimension of S(λ).
inline BigInt dim_irrep(const Partition& p) {
  const Partition c = p.conjugate();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) hooks *= (p[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1;
  return exact_div(factorial(p.size()), hooks, "hook length formula");
}

/// Filling of a Young diagram stored row by row.
struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  int size() const { return shape.size(); }

  /// Row index of each entry; entry a lives in row row_of()[a].
  std::vector<int> row_of() const {
    std::vector<int> r(size() + 1, -1);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int a : rows[i]) r.at(a) = static_cast<int>(i);
    return r;
  }

  bool is_valid() const {
    if (rows.size() != shape.length()) return false;
    std::vector<bool> seen(size() + 1, false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != shape[i]) return false;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        int a = rows[i][j];
        if (a < 1 || a > size() || seen[a]) return false;
        seen[a] = true;
        if (j > 0 && rows[i][j - 1] >= a) return false;
        if (i > 0 && rows[i - 1][j] >= a) return false;
      }
    }
    return true;
  }

  StandardTableau conjugate() const {
    StandardTableau t{shape.conjugate(), {}};
    t.rows.resize(t.shape.length());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) t.rows[j].push_back(rows[i][j]);
    return t;
  }

  /// Concatenation of the rows, top to bottom.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
    return w;
  }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

/// All standard Young tableaux of shape p, sorted by reading word.
inline std::vector<StandardTableau> standard_tableaux(const Partition& p) {
  std::vector<StandardTableau> out;
  StandardTableau cur{p, std::vector<std::vector<int>>(p.length())};
  const int m = p.size();
  // place 1..m in turn; entry a may go at the end of row i if the row is not
  // full and the cell above is already filled
  std::function<void(int)> rec = [&](int a) {
    if (a > m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < p.length(); ++i) {
      auto len = cur.rows[i].size();
      if (static_cast<int>(len) == p[i]) continue;
      if (i > 0 && cur.rows[i - 1].size() <= len) continue;
      cur.rows[i].push_back(a);
      rec(a + 1);
      cur.rows[i].pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& a, const StandardTableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

/// {a : a+1 lies in a row strictly below the row of a}.
inline std::set<int> descent_set(const StandardTableau& t) {
  auto r = t.row_of();
  std::set<int> d;
  for (int a = 1; a < t.size(); ++a)
    if (r[a + 1] > r[a]) d.insert(a);
  return d;
}

inline int major_index(const StandardTableau& t) {
  int s = 0;
  for (int a : descent_set(t)) s += a;
  return s;
}

/// Graded multiplicity of S(p) in the coinvariant ring: sum over SYT of u^maj.
inline LaurentPolynomial fake_degree(const Partition& p) {
  LaurentPolynomial f;
  for (const auto& t : standard_tableaux(p)) f.add_term(major_index(t), 1);
  return f;
}

/// Parses "3,1,1" into a partition. Whitespace is not accepted.
inline Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ArgumentError("malformed partition '" + text + "'");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace multspace
