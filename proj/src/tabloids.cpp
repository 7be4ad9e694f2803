#include "skg/tabloids.hpp"

#include <algorithm>
#include <stdexcept>

namespace skg {

namespace {

// Insertion sort returning the parity of the number of swaps.
int sort_with_parity(std::uint8_t* first, std::size_t len) {
  int parity = 0;
  for (std::size_t i = 1; i < len; ++i) {
    std::uint8_t v = first[i];
    std::size_t k = i;
    while (k > 0 && first[k - 1] > v) {
      first[k] = first[k - 1];
      --k;
      parity ^= 1;
    }
    first[k] = v;
  }
  return parity;
}

TableauClass basis_class(TabloidKind kind) {
  if (kind.tag() == TabloidKind::Tag::Row) return TableauClass::RowSemistandard;
  return kind.vanishes_on_repeats() ? TableauClass::ColumnStandard
                                    : TableauClass::ColumnSemistandard;
}

}  // namespace

SignedTabloid canonicalize(const Partition& shape, std::span<const std::uint8_t> filling,
                           TabloidKind kind) {
  if (filling.size() != static_cast<std::size_t>(shape.size())) {
    throw std::invalid_argument("filling does not match the shape");
  }
  SignedTabloid out;
  out.rep.assign(filling.begin(), filling.end());
  if (kind.tag() == TabloidKind::Tag::Row) {
    std::vector<std::uint8_t> row;
    for (int i = 1; i <= shape.length(); ++i) {
      row.clear();
      for (int j = 1; j <= shape.part(i); ++j) row.push_back(out.rep[shape.position({i, j})]);
      std::sort(row.begin(), row.end());
      for (int j = 1; j <= shape.part(i); ++j) out.rep[shape.position({i, j})] = row[j - 1];
    }
    return out;
  }
  int parity = 0;
  for (int j = 1; j <= shape.num_columns(); ++j) {
    std::uint8_t* col = out.rep.data() + shape.column_start(j);
    auto h = static_cast<std::size_t>(shape.column_height(j));
    parity ^= sort_with_parity(col, h);
    if (kind.vanishes_on_repeats() && std::adjacent_find(col, col + h) != col + h) {
      out.is_zero = true;
    }
  }
  out.sign = (parity && !kind.prime().is_two()) ? -1 : 1;
  return out;
}

SignedTabloid canonicalize(const Tableau& t, TabloidKind kind) {
  return canonicalize(t.shape(), t.entries(), kind);
}

TabloidBasis::TabloidBasis(Partition shape, int d, TabloidKind kind)
    : shape_(std::move(shape)), d_(d), kind_(kind) {
  if (d < 1 || d > 255) throw std::invalid_argument("d must lie in [1, 255]");
  reps_ = enumerate_fillings(shape_, d_, basis_class(kind_));
  index_.reserve(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) index_.emplace(reps_[i], i);
}

std::optional<std::size_t> TabloidBasis::find(const Filling& rep) const {
  auto it = index_.find(rep);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BasisPtr make_basis(const Partition& shape, int d, TabloidKind kind) {
  return std::make_shared<const TabloidBasis>(shape, d, kind);
}

TabloidVector::TabloidVector(BasisPtr basis) : basis_(std::move(basis)) {
  if (!basis_) throw std::invalid_argument("null basis");
}

TabloidVector TabloidVector::unit(BasisPtr basis, std::size_t index) {
  TabloidVector v(std::move(basis));
  v.add_index(index, 1);
  return v;
}

std::uint32_t TabloidVector::coefficient(std::size_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{index, 0},
                             [](const Term& a, const Term& b) { return a.first < b.first; });
  return (it != terms_.end() && it->first == index) ? it->second : 0;
}

void TabloidVector::add_index(std::size_t index, std::uint32_t c) {
  if (index >= basis_->dim()) throw std::out_of_range("tabloid index");
  const FieldPrime p = basis_->prime();
  c = p.reduce(c);
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{index, 0},
                             [](const Term& a, const Term& b) { return a.first < b.first; });
  if (it != terms_.end() && it->first == index) {
    it->second = p.reduce(static_cast<std::int64_t>(it->second) + c);
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {index, c});
  }
}

void TabloidVector::add_filling(std::span<const std::uint8_t> filling, std::int64_t c) {
  auto st = canonicalize(basis_->shape(), filling, basis_->kind());
  if (st.is_zero) return;
  auto idx = basis_->find(st.rep);
  if (!idx) throw std::invalid_argument("filling uses entries outside the alphabet");
  add_index(*idx, basis_->prime().reduce(c * st.sign));
}

void TabloidVector::add(const TabloidVector& other, std::uint32_t c) {
  if (other.basis_ != basis_) throw std::invalid_argument("vectors over different bases");
  for (const auto& [i, v] : other.terms_) {
    add_index(i, basis_->prime().reduce(static_cast<std::int64_t>(v) * c));
  }
}

RowVector TabloidVector::to_row_vector() const {
  RowVector r(basis_->dim(), basis_->prime());
  for (const auto& [i, v] : terms_) r.set(i, v);
  return r;
}

TabloidVector TabloidVector::from_row_vector(BasisPtr basis, const RowVector& v) {
  TabloidVector out(std::move(basis));
  if (v.size() != out.basis_->dim()) throw std::invalid_argument("row vector length");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (auto c = v.get(i)) out.terms_.emplace_back(i, c);
  }
  return out;
}

void TermAccumulator::add_filling(std::span<const std::uint8_t> filling, std::int64_t c) {
  auto st = canonicalize(basis_->shape(), filling, basis_->kind());
  if (st.is_zero) return;
  auto idx = basis_->find(st.rep);
  if (!idx) throw std::invalid_argument("filling uses entries outside the alphabet");
  raw_.emplace_back(*idx, c * st.sign);
}

TabloidVector TermAccumulator::finish() && {
  std::sort(raw_.begin(), raw_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  TabloidVector out(basis_);
  const FieldPrime p = basis_->prime();
  for (std::size_t k = 0; k < raw_.size();) {
    std::size_t idx = raw_[k].first;
    std::int64_t sum = 0;
    for (; k < raw_.size() && raw_[k].first == idx; ++k) sum += raw_[k].second;
    if (auto c = p.reduce(sum)) out.add_index(idx, c);
  }
  return out;
}

std::vector<TabloidVector> ker_q_generators(const BasisPtr& skew_basis) {
  const auto kind = skew_basis->kind();
  if (kind.tag() != TabloidKind::Tag::SkewColumn || !kind.prime().is_two()) {
    throw std::invalid_argument("ker q lives in the skew tabloid space at p = 2");
  }
  std::vector<TabloidVector> out;
  for (std::size_t i = 0; i < skew_basis->dim(); ++i) {
    if (skew_basis->tableau(i).has_repeated_column_entry()) {
      out.push_back(TabloidVector::unit(skew_basis, i));
    }
  }
  return out;
}

}  // namespace skg
