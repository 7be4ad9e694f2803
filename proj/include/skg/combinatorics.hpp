#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skg {

/// A box of a Young diagram, 1-based (row, column).
struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

/// Weakly decreasing sequence of positive integers. Immutable; copies share
/// the precomputed diagram data.
class Partition {
 public:
  /// Throws std::invalid_argument on empty, non-positive or increasing parts.
  explicit Partition(std::vector<int> parts);

  /// Accepts "4,3,2,1,1" and exponent shorthand such as "2^2,1".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return data_->parts; }
  const std::vector<int>& conjugate_parts() const { return data_->conj; }
  Partition conjugate() const;

  int size() const { return data_->n; }
  int length() const { return static_cast<int>(data_->parts.size()); }
  int num_columns() const { return data_->parts.front(); }

  /// lambda_i, 1-based; 0 beyond the last part.
  int part(int i) const;
  /// lambda'_j, 1-based; 0 beyond the last column.
  int column_height(int j) const;

  bool contains(Box b) const;

  /// Boxes are stored column-major: column 1 top to bottom, then column 2...
  std::size_t position(Box b) const {
    return static_cast<std::size_t>(data_->col_start[b.col - 1] + b.row - 1);
  }
  Box box_at(std::size_t pos) const { return data_->boxes[pos]; }
  std::size_t column_start(int j) const {
    return static_cast<std::size_t>(data_->col_start[j - 1]);
  }

  std::string to_string() const;
  /// Compact notation with exponents, e.g. "(2^2,1)".
  std::string to_display() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.data_ == b.data_ || a.parts() == b.parts();
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts() <=> b.parts();
  }

 private:
  struct Data {
    std::vector<int> parts;
    std::vector<int> conj;
    std::vector<int> col_start;
    std::vector<Box> boxes;
    int n = 0;
  };
  std::shared_ptr<const Data> data_;
};

/// All partitions of n in decreasing lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// True iff mu dominates-or-equals nu (both partitions of the same n).
bool dominates(const Partition& mu, const Partition& nu);

bool is_two_regular(const Partition& lambda);

/// Column-major entry sequence over the alphabet {1..d}.
using Filling = std::vector<std::uint8_t>;

struct FillingHash {
  std::size_t operator()(const Filling& f) const noexcept;
};

/// Multiplicities of 1..d, a composition of n.
using Weight = std::vector<int>;

Weight weight_of(std::span<const std::uint8_t> filling, int d);

class Tableau {
 public:
  Tableau(Partition shape, Filling entries);
  /// Build from rows, e.g. {{1,1},{2},{2}}.
  static Tableau from_rows(const std::vector<std::vector<int>>& rows);

  const Partition& shape() const { return shape_; }
  const Filling& entries() const { return entries_; }
  int at(int row, int col) const { return entries_[shape_.position({row, col})]; }
  int at(Box b) const { return entries_[shape_.position(b)]; }
  void set(Box b, int value);

  Weight weight(int d) const { return weight_of(entries_, d); }
  int max_entry() const;
  std::vector<std::vector<int>> rows() const;
  std::string to_string() const;

  bool is_row_standard() const;
  bool is_row_semistandard() const;
  bool is_column_standard() const;
  bool is_column_semistandard() const;
  bool has_repeated_column_entry() const;

  /// Deterministic total order: lexicographic on the column-major reading.
  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const Tableau& a, const Tableau& b) {
    return a.entries_ < b.entries_;
  }

 private:
  Partition shape_;
  Filling entries_;
};

enum class TableauClass {
  All,
  RowStandard,
  ColumnStandard,
  RowSemistandard,
  ColumnSemistandard,
  Standard,
  Semistandard,
  RowAndColumnSemistandard,
};

bool in_class(const Tableau& t, TableauClass cls);

/// Fillings of the requested class, each once, in column-major
/// lexicographic order.
std::vector<Filling> enumerate_fillings(const Partition& lambda, int d, TableauClass cls);
std::vector<Tableau> enumerate_tableaux(const Partition& lambda, int d, TableauClass cls);

enum class ColOrder { Less, Greater, Equivalent };

/// The column ordering on tableaux of one shape. Throws std::invalid_argument
/// on shape mismatch.
ColOrder col_compare(const Tableau& t, const Tableau& u);
ColOrder col_compare(const Partition& shape, std::span<const std::uint8_t> t,
                     std::span<const std::uint8_t> u);

/// Number of semistandard tableaux with entries in {1..d} (hook content formula).
std::uint64_t hook_content_dim(const Partition& lambda, int d);
/// Number of standard tableaux with entries 1..n (hook length formula).
std::uint64_t count_syt(const Partition& lambda);

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Parity of C(a+b, a) via the carry-free criterion.
int binom_parity(std::uint64_t a, std::uint64_t b);

/// Least 1 <= i <= c-1 with C(c,i) odd; absent when c is a power of 2.
std::optional<std::uint64_t> min_odd_binomial_index(std::uint64_t c);

bool is_power_of_two(std::uint64_t x);

}  // namespace skg
