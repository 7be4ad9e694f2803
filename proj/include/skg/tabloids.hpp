#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skg/combinatorics.hpp"
#include "skg/linalg.hpp"

namespace skg {

/// Row tabloids, alternating column tabloids, or skew column tabloids over
/// GF(p). Skew column tabloids at odd p behave exactly like alternating ones.
class TabloidKind {
 public:
  enum class Tag { Row, AltColumn, SkewColumn };

  static TabloidKind row(FieldPrime p) { return {Tag::Row, p}; }
  static TabloidKind alt_column(FieldPrime p) { return {Tag::AltColumn, p}; }
  static TabloidKind skew_column(FieldPrime p) { return {Tag::SkewColumn, p}; }

  Tag tag() const { return tag_; }
  FieldPrime prime() const { return p_; }
  bool is_column() const { return tag_ != Tag::Row; }
  /// Repeated column entries give zero.
  bool vanishes_on_repeats() const {
    return tag_ == Tag::AltColumn || (tag_ == Tag::SkewColumn && !p_.is_two());
  }

  friend bool operator==(const TabloidKind&, const TabloidKind&) = default;

 private:
  TabloidKind(Tag tag, FieldPrime p) : tag_(tag), p_(p) {}
  Tag tag_;
  FieldPrime p_;
};

struct SignedTabloid {
  Filling rep;
  int sign = 1;
  bool is_zero = false;
};

SignedTabloid canonicalize(const Partition& shape, std::span<const std::uint8_t> filling,
                           TabloidKind kind);
SignedTabloid canonicalize(const Tableau& t, TabloidKind kind);

class TabloidBasis {
 public:
  TabloidBasis(Partition shape, int d, TabloidKind kind);

  const Partition& shape() const { return shape_; }
  int d() const { return d_; }
  TabloidKind kind() const { return kind_; }
  FieldPrime prime() const { return kind_.prime(); }
  std::size_t dim() const { return reps_.size(); }

  const Filling& rep(std::size_t index) const { return reps_.at(index); }
  Tableau tableau(std::size_t index) const { return Tableau(shape_, reps_.at(index)); }
  /// Index of a canonical representative.
  std::optional<std::size_t> find(const Filling& rep) const;

 private:
  Partition shape_;
  int d_;
  TabloidKind kind_;
  std::vector<Filling> reps_;
  std::unordered_map<Filling, std::size_t, FillingHash> index_;
};

using BasisPtr = std::shared_ptr<const TabloidBasis>;
BasisPtr make_basis(const Partition& shape, int d, TabloidKind kind);

/// Sparse GF(p) combination of basis tabloids; terms sorted by index, no zeros.
class TabloidVector {
 public:
  using Term = std::pair<std::size_t, std::uint32_t>;

  explicit TabloidVector(BasisPtr basis);
  static TabloidVector unit(BasisPtr basis, std::size_t index);

  const BasisPtr& basis() const { return basis_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t coefficient(std::size_t index) const;

  /// Adds c times the tabloid of an arbitrary filling (canonicalized first).
  void add_filling(std::span<const std::uint8_t> filling, std::int64_t c);
  void add_index(std::size_t index, std::uint32_t c);
  void add(const TabloidVector& other, std::uint32_t c);

  RowVector to_row_vector() const;
  static TabloidVector from_row_vector(BasisPtr basis, const RowVector& v);

  friend bool operator==(const TabloidVector& a, const TabloidVector& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

 private:
  BasisPtr basis_;
  std::vector<Term> terms_;
};

/// Accumulates many terms before producing a TabloidVector; cheaper than
/// repeated add_filling when a relation has many summands.
class TermAccumulator {
 public:
  explicit TermAccumulator(BasisPtr basis) : basis_(std::move(basis)) {}
  void add_filling(std::span<const std::uint8_t> filling, std::int64_t c);
  TabloidVector finish() &&;

 private:
  BasisPtr basis_;
  std::vector<std::pair<std::size_t, std::int64_t>> raw_;
};

/// Unit vectors of the skew (p = 2) tabloids having a repeated column entry.
std::vector<TabloidVector> ker_q_generators(const BasisPtr& skew_basis);

}  // namespace skg
