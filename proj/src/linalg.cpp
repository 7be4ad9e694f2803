#include "skg/linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skg {

FieldPrime::FieldPrime(int p) : p_(p) {
  if (p < 2 || p > 251) throw std::invalid_argument("prime must lie in [2, 251]");
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
}

std::uint32_t FieldPrime::inverse(std::uint32_t a) const {
  a %= static_cast<std::uint32_t>(p_);
  if (a == 0) throw std::domain_error("zero has no inverse");
  // Fermat: a^(p-2)
  std::uint32_t result = 1;
  std::uint32_t base = a;
  for (int e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % static_cast<std::uint32_t>(p_);
    base = base * base % static_cast<std::uint32_t>(p_);
  }
  return result;
}

std::uint32_t FieldPrime::reduce(std::int64_t a) const {
  auto r = a % p_;
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

RowVector::RowVector(std::size_t size, FieldPrime p) : size_(size), p_(p) {
  if (p_.is_two()) {
    bits_.assign((size + 63) / 64, 0);
  } else {
    values_.assign(size, 0);
  }
}

std::uint32_t RowVector::get(std::size_t i) const {
  if (p_.is_two()) return static_cast<std::uint32_t>((bits_[i / 64] >> (i % 64)) & 1u);
  return values_[i];
}

void RowVector::set(std::size_t i, std::uint32_t value) {
  if (i >= size_) throw std::out_of_range("RowVector index");
  value %= static_cast<std::uint32_t>(p_.value());
  if (p_.is_two()) {
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
      bits_[i / 64] |= mask;
    } else {
      bits_[i / 64] &= ~mask;
    }
  } else {
    values_[i] = static_cast<std::uint8_t>(value);
  }
}

void RowVector::add_scaled(const RowVector& other, std::uint32_t c) {
  if (other.size_ != size_ || !(other.p_ == p_)) {
    throw std::invalid_argument("RowVector size or field mismatch");
  }
  const auto p = static_cast<std::uint32_t>(p_.value());
  c %= p;
  if (c == 0) return;
  if (p_.is_two()) {
    for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] ^= other.bits_[w];
    return;
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (other.values_[i]) {
      values_[i] = static_cast<std::uint8_t>((values_[i] + c * other.values_[i]) % p);
    }
  }
}

void RowVector::scale(std::uint32_t c) {
  const auto p = static_cast<std::uint32_t>(p_.value());
  c %= p;
  if (p_.is_two()) {
    if (c == 0) std::fill(bits_.begin(), bits_.end(), 0);
    return;
  }
  for (auto& v : values_) v = static_cast<std::uint8_t>(v * c % p);
}

bool RowVector::is_zero() const { return !leading().has_value(); }

std::optional<std::size_t> RowVector::leading() const {
  if (p_.is_two()) {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      if (bits_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits_[w]));
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (values_[i]) return i;
  }
  return std::nullopt;
}

bool operator==(const RowVector& a, const RowVector& b) {
  return a.size_ == b.size_ && a.p_ == b.p_ && a.bits_ == b.bits_ && a.values_ == b.values_;
}

MatrixGFp::MatrixGFp(std::size_t rows, std::size_t cols, FieldPrime p)
    : cols_(cols), p_(p), rows_(rows, RowVector(cols, p)) {}

MatrixGFp::MatrixGFp(std::vector<RowVector> rows)
    : cols_(rows.empty() ? 0 : rows.front().size()),
      p_(rows.empty() ? FieldPrime(2) : rows.front().prime()),
      rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != cols_ || !(r.prime() == p_)) {
      throw std::invalid_argument("matrix rows disagree in length or field");
    }
  }
}

std::size_t MatrixGFp::rank() const {
  SpanBuilder b(cols_, p_);
  for (const auto& r : rows_) b.push(r);
  return b.rank();
}

MatrixGFp MatrixGFp::transpose() const {
  MatrixGFp t(cols_, rows_.size(), p_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (auto v = rows_[i].get(j)) t.rows_[j].set(i, v);
    }
  }
  return t;
}

Subspace::Subspace(std::size_t ambient_dim, FieldPrime p) : ambient_dim_(ambient_dim), p_(p) {}

void Subspace::check(const RowVector& v) const {
  if (v.size() != ambient_dim_ || !(v.prime() == p_)) {
    throw std::invalid_argument("vector does not belong to the ambient space");
  }
}

Subspace Subspace::span(std::span<const RowVector> vectors, std::size_t ambient_dim,
                        FieldPrime p) {
  SpanBuilder b(ambient_dim, p);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim || !(v.prime() == p)) {
      throw std::invalid_argument("span: vector length mismatch");
    }
    b.push(v);
  }
  return std::move(b).finish();
}

RowVector Subspace::reduce(const RowVector& v) const {
  check(v);
  RowVector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (auto c = r.get(pivots_[k])) {
      r.add_scaled(basis_[k], static_cast<std::uint32_t>(p_.value()) - c);
    }
  }
  return r;
}

bool Subspace::contains(const RowVector& v) const { return reduce(v).is_zero(); }

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_dim_ == b.ambient_dim_ && a.p_ == b.p_ && a.basis_ == b.basis_;
}

SumIntersection dim_sum_and_intersection(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim() || !(s.prime() == t.prime())) {
    throw std::invalid_argument("subspaces live in different ambient spaces");
  }
  SpanBuilder b(s.ambient_dim(), s.prime());
  for (const auto& r : s.basis()) b.push(r);
  for (const auto& r : t.basis()) b.push(r);
  std::size_t sum = b.rank();
  return {sum, s.dim() + t.dim() - sum};
}

SpanBuilder::SpanBuilder(std::size_t ambient_dim, FieldPrime p)
    : ambient_dim_(ambient_dim), p_(p), pivot_row_(ambient_dim, -1) {}

void SpanBuilder::reduce_in_place(RowVector& v) const {
  // Each stored row is zero at the pivots of the rows stored before it, so a
  // single pass in insertion order clears every pivot column.
  const auto p = static_cast<std::uint32_t>(p_.value());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (auto c = v.get(pivots_[k])) v.add_scaled(rows_[k], p - c);
  }
}

bool SpanBuilder::push(RowVector v) {
  if (v.size() != ambient_dim_ || !(v.prime() == p_)) {
    throw std::invalid_argument("SpanBuilder: vector does not match the ambient space");
  }
  reduce_in_place(v);
  auto lead = v.leading();
  if (!lead) return false;
  v.scale(p_.inverse(v.get(*lead)));
  pivot_row_[*lead] = static_cast<std::int32_t>(rows_.size());
  pivots_.push_back(*lead);
  rows_.push_back(std::move(v));
  return true;
}

bool SpanBuilder::contains(const RowVector& v) const {
  if (v.size() != ambient_dim_ || !(v.prime() == p_)) {
    throw std::invalid_argument("SpanBuilder: vector does not match the ambient space");
  }
  RowVector r = v;
  reduce_in_place(r);
  return r.is_zero();
}

Subspace SpanBuilder::finish() && {
  const auto p = static_cast<std::uint32_t>(p_.value());
  // Back-substitute so that every pivot column is zero outside its row, then
  // order rows by pivot.
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  for (std::size_t oi = order.size(); oi-- > 0;) {
    const std::size_t k = order[oi];
    for (std::size_t other = 0; other < rows_.size(); ++other) {
      if (other == k) continue;
      if (auto c = rows_[other].get(pivots_[k])) rows_[other].add_scaled(rows_[k], p - c);
    }
  }
  Subspace s(ambient_dim_, p_);
  for (std::size_t k : order) {
    s.basis_.push_back(std::move(rows_[k]));
    s.pivots_.push_back(pivots_[k]);
  }
  return s;
}

}  // namespace skg
