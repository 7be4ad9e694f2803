// Brute-force reference implementations. Nothing here calls into the library
// beyond plain data types, so disagreements point at the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<int>>;

inline int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

inline std::vector<int> conjugate(const std::vector<int>& parts) {
  std::vector<int> c;
  for (int i = 1;; ++i) {
    int count = 0;
    for (int p : parts) count += p >= i;
    if (count == 0) break;
    c.push_back(count);
  }
  return c;
}

/// Every weakly decreasing positive sequence summing to n, from all compositions.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> comp{1};
    for (int k = 0; k < n - 1; ++k) {
      if (mask >> k & 1u) comp.push_back(1);
      else ++comp.back();
    }
    if (std::is_sorted(comp.rbegin(), comp.rend())) out.push_back(comp);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// All d^n row-major fillings of the shape.
inline std::vector<Rows> all_fillings(const std::vector<int>& shape, int d) {
  const int n = sum(shape);
  std::vector<Rows> out;
  std::vector<int> digits(static_cast<std::size_t>(n), 1);
  while (true) {
    Rows r;
    std::size_t k = 0;
    for (int len : shape) {
      r.emplace_back(digits.begin() + static_cast<long>(k), digits.begin() + static_cast<long>(k + len));
      k += static_cast<std::size_t>(len);
    }
    out.push_back(std::move(r));
    int pos = n - 1;
    while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == d) digits[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
  return out;
}

inline std::vector<int> column(const Rows& r, std::size_t j) {
  std::vector<int> c;
  for (const auto& row : r) {
    if (j < row.size()) c.push_back(row[j]);
  }
  return c;
}

inline bool rows_weak(const Rows& r) {
  for (const auto& row : r) {
    if (!std::is_sorted(row.begin(), row.end())) return false;
  }
  return true;
}

inline bool rows_strict(const Rows& r) {
  for (const auto& row : r) {
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (row[k - 1] >= row[k]) return false;
    }
  }
  return true;
}

inline bool cols_strict(const Rows& r) {
  for (std::size_t j = 0; j < r[0].size(); ++j) {
    auto c = column(r, j);
    for (std::size_t k = 1; k < c.size(); ++k) {
      if (c[k - 1] >= c[k]) return false;
    }
  }
  return true;
}

inline bool cols_weak(const Rows& r) {
  for (std::size_t j = 0; j < r[0].size(); ++j) {
    auto c = column(r, j);
    if (!std::is_sorted(c.begin(), c.end())) return false;
  }
  return true;
}

inline bool is_ssyt(const Rows& r) { return rows_weak(r) && cols_strict(r); }

inline long long count_ssyt(const std::vector<int>& shape, int d) {
  long long c = 0;
  for (const auto& r : all_fillings(shape, d)) c += is_ssyt(r);
  return c;
}

inline long long count_syt(const std::vector<int>& shape) {
  const int n = sum(shape);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  long long c = 0;
  do {
    Rows r;
    std::size_t k = 0;
    for (int len : shape) {
      r.emplace_back(perm.begin() + static_cast<long>(k), perm.begin() + static_cast<long>(k + len));
      k += static_cast<std::size_t>(len);
    }
    c += rows_strict(r) && cols_strict(r);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return c;
}

using u128 = unsigned __int128;

/// Pascal's triangle up to row `n`.
inline std::vector<std::vector<u128>> pascal(int n) {
  std::vector<std::vector<u128>> t(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
    for (int k = 1; k < i; ++k) {
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] +
          t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
    }
  }
  return t;
}

/// Column ordering read straight off its definition. Returns -1, 0, 1 for
/// t < u, equivalent, t > u.
inline int col_compare(const Rows& t, const Rows& u) {
  const std::size_t cols = t[0].size();
  int max_entry = 0;
  for (const auto& row : t) max_entry = std::max(max_entry, *std::max_element(row.begin(), row.end()));
  for (const auto& row : u) max_entry = std::max(max_entry, *std::max_element(row.begin(), row.end()));
  for (int m = max_entry; m >= 1; --m) {
    for (std::size_t j = 0; j < cols; ++j) {
      auto ct = column(t, j);
      auto cu = column(u, j);
      const auto a = std::count(ct.begin(), ct.end(), m);
      const auto b = std::count(cu.begin(), cu.end(), m);
      if (a > b) return 1;
      if (a < b) return -1;
    }
  }
  return 0;
}

inline int perm_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
  }
  return inv % 2 ? -1 : 1;
}

}  // namespace oracle
