#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace skg {

/// A prime p; coefficients live in GF(p). Primes up to 251 are accepted.
class FieldPrime {
 public:
  explicit FieldPrime(int p);
  int value() const { return p_; }
  bool is_two() const { return p_ == 2; }
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint32_t reduce(std::int64_t a) const;
  friend bool operator==(FieldPrime, FieldPrime) = default;

 private:
  int p_;
};

/// Dense vector over GF(p). Bit-packed into 64-bit words when p = 2.
class RowVector {
 public:
  RowVector(std::size_t size, FieldPrime p);

  std::size_t size() const { return size_; }
  FieldPrime prime() const { return p_; }

  std::uint32_t get(std::size_t i) const;
  void set(std::size_t i, std::uint32_t value);
  /// this += c * other
  void add_scaled(const RowVector& other, std::uint32_t c);
  void scale(std::uint32_t c);

  bool is_zero() const;
  std::optional<std::size_t> leading() const;

  friend bool operator==(const RowVector& a, const RowVector& b);

 private:
  std::size_t size_;
  FieldPrime p_;
  std::vector<std::uint64_t> bits_;   // p == 2
  std::vector<std::uint8_t> values_;  // p odd
};

class MatrixGFp {
 public:
  MatrixGFp(std::size_t rows, std::size_t cols, FieldPrime p);
  explicit MatrixGFp(std::vector<RowVector> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  FieldPrime prime() const { return p_; }
  const RowVector& row(std::size_t i) const { return rows_[i]; }
  RowVector& row(std::size_t i) { return rows_[i]; }

  std::size_t rank() const;
  MatrixGFp transpose() const;

 private:
  std::size_t cols_;
  FieldPrime p_;
  std::vector<RowVector> rows_;
};

/// Subspace of GF(p)^m held as a reduced row-echelon basis.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, FieldPrime p);

  /// Throws std::invalid_argument on a length mismatch.
  static Subspace span(std::span<const RowVector> vectors, std::size_t ambient_dim, FieldPrime p);

  std::size_t ambient_dim() const { return ambient_dim_; }
  FieldPrime prime() const { return p_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RowVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RowVector& v) const;
  /// Normal form of v modulo this subspace: zero at every pivot column.
  RowVector reduce(const RowVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  friend class SpanBuilder;
  void check(const RowVector& v) const;

  std::size_t ambient_dim_;
  FieldPrime p_;
  std::vector<RowVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// (dim(S+T), dim(S∩T)).
struct SumIntersection {
  std::size_t sum;
  std::size_t intersection;
};
SumIntersection dim_sum_and_intersection(const Subspace& s, const Subspace& t);

/// Incremental span: push vectors one at a time, learn whether the rank grew.
/// Single owner; finish() yields the reduced echelon subspace.
class SpanBuilder {
 public:
  SpanBuilder(std::size_t ambient_dim, FieldPrime p);

  /// Returns true iff v was independent of everything pushed so far.
  bool push(RowVector v);
  bool contains(const RowVector& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }

  Subspace finish() &&;

 private:
  void reduce_in_place(RowVector& v) const;

  std::size_t ambient_dim_;
  FieldPrime p_;
  std::vector<RowVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int32_t> pivot_row_;  // column -> row index or -1
};

}  // namespace skg
