#include "skg/garnir.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"

namespace skg {

namespace {

std::vector<Box> sorted_boxes(std::vector<Box> boxes) {
  std::sort(boxes.begin(), boxes.end());
  return boxes;
}

int permutation_parity(std::vector<std::size_t>& perm) {
  int parity = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    while (perm[i] != i) {
      std::swap(perm[i], perm[perm[i]]);
      parity ^= 1;
    }
  }
  return parity;
}

// Shuffles (S, complement) of {0..k-1}: entries at positions in S go to the A
// boxes, the rest to the B boxes, each in order.
template <class Visit>
void for_each_shuffle(const GarnirLabel& label, std::mt19937_64* rng, Visit&& visit) {
  const Partition& shape = label.t.shape();
  const auto A = sorted_boxes(label.A);
  const auto B = sorted_boxes(label.B);
  const std::size_t a = A.size();
  const std::size_t k = A.size() + B.size();
  std::vector<std::size_t> slots;
  for (const auto& b : A) slots.push_back(shape.position(b));
  for (const auto& b : B) slots.push_back(shape.position(b));
  std::vector<std::uint8_t> entries;
  for (auto s : slots) entries.push_back(label.t.entries()[s]);

  Filling f = label.t.entries();
  std::vector<std::uint8_t> moved(k);
  std::vector<std::size_t> perm_a(a), perm_b(k - a);
  const std::uint64_t last = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::uint64_t mask = (a == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << a) - 1;
  while (true) {
    // sign: inversions between complement elements and later elements of S
    int parity = 0;
    std::size_t ia = 0, ib = 0;
    std::size_t outside_before = 0;
    for (std::size_t x = 0; x < k; ++x) {
      if (mask >> x & 1u) {
        parity ^= static_cast<int>(outside_before & 1u);
        moved[ia++] = entries[x];
      } else {
        ++outside_before;
        moved[a + ib++] = entries[x];
      }
    }
    if (rng) {
      std::iota(perm_a.begin(), perm_a.end(), std::size_t{0});
      std::iota(perm_b.begin(), perm_b.end(), std::size_t{0});
      std::shuffle(perm_a.begin(), perm_a.end(), *rng);
      std::shuffle(perm_b.begin(), perm_b.end(), *rng);
      for (std::size_t x = 0; x < a; ++x) f[slots[x]] = moved[perm_a[x]];
      for (std::size_t x = 0; x < k - a; ++x) f[slots[a + x]] = moved[a + perm_b[x]];
      auto pa = perm_a;
      auto pb = perm_b;
      parity ^= permutation_parity(pa) ^ permutation_parity(pb);
    } else {
      for (std::size_t x = 0; x < k; ++x) f[slots[x]] = moved[x];
    }
    visit(f, parity ? -1 : 1);
    if (a == 0 || a == k) break;
    // Gosper: next mask with the same popcount
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t r = mask + c;
    if (r == 0 || r > last) break;
    mask = (((r ^ mask) >> 2) / c) | r;
    if (mask > last) break;
  }
}

TabloidVector relation_impl(const GarnirLabel& label, const BasisPtr& basis,
                            std::mt19937_64* rng) {
  label.validate();
  if (!(label.t.shape() == basis->shape())) {
    throw std::invalid_argument("label shape differs from the basis shape");
  }
  if (!basis->kind().is_column()) {
    throw std::invalid_argument("Garnir relations live in a column tabloid space");
  }
  TermAccumulator acc(basis);
  for_each_shuffle(label, rng, [&](const Filling& f, int sign) { acc.add_filling(f, sign); });
  return std::move(acc).finish();
}

}  // namespace

void GarnirLabel::validate() const {
  const Partition& shape = t.shape();
  if (A.empty()) throw std::invalid_argument("Garnir label: A is empty");
  const int j = A.front().col;
  int jp = B.empty() ? 0 : B.front().col;
  std::set<Box> seen;
  for (const auto& b : A) {
    if (!shape.contains(b) || b.col != j) throw std::invalid_argument("Garnir label: bad box in A");
    if (!seen.insert(b).second) throw std::invalid_argument("Garnir label: repeated box");
  }
  for (const auto& b : B) {
    if (!shape.contains(b) || b.col != jp) throw std::invalid_argument("Garnir label: bad box in B");
    if (!seen.insert(b).second) throw std::invalid_argument("Garnir label: repeated box");
  }
  if (!B.empty() && jp <= j) throw std::invalid_argument("Garnir label: B must lie right of A");
  if (static_cast<int>(A.size() + B.size()) <= shape.column_height(j)) {
    throw std::invalid_argument("Garnir label: |A| + |B| must exceed the column height");
  }
}

std::string GarnirLabel::to_string() const {
  std::ostringstream os;
  os << t.to_string() << " A={";
  for (std::size_t k = 0; k < A.size(); ++k) os << (k ? "," : "") << "(" << A[k].row << "," << A[k].col << ")";
  os << "} B={";
  for (std::size_t k = 0; k < B.size(); ++k) os << (k ? "," : "") << "(" << B[k].row << "," << B[k].col << ")";
  os << "}";
  return os.str();
}

GarnirLabel snake_label(const Tableau& t, int i, int j) {
  const Partition& shape = t.shape();
  if (j < 1 || j >= shape.num_columns() || i < 1 || i > shape.column_height(j + 1)) {
    throw std::invalid_argument("snake: box out of range");
  }
  GarnirLabel label{t, {}, {}};
  for (int x = i; x <= shape.column_height(j); ++x) label.A.push_back({x, j});
  for (int x = 1; x <= i; ++x) label.B.push_back({x, j + 1});
  return label;
}

TabloidVector garnir_relation(const GarnirLabel& label, const BasisPtr& basis) {
  return relation_impl(label, basis, nullptr);
}

TabloidVector garnir_relation(const GarnirLabel& label, const BasisPtr& basis,
                              std::mt19937_64& rng) {
  return relation_impl(label, basis, &rng);
}

TabloidVector snake_relation(const Tableau& t, int i, int j, const BasisPtr& basis) {
  return garnir_relation(snake_label(t, i, j), basis);
}

std::optional<Box> phi(const Tableau& t, PhiPolicy policy) {
  const Partition& shape = t.shape();
  std::optional<Box> found;
  auto descent = [&](int i, int j) { return t.at(i, j) > t.at(i, j + 1); };
  switch (policy) {
    case PhiPolicy::LeastColumnGreatestRow:
      for (int j = 1; j < shape.num_columns() && !found; ++j) {
        for (int i = shape.column_height(j + 1); i >= 1; --i) {
          if (descent(i, j)) {
            found = Box{i, j};
            break;
          }
        }
      }
      break;
    case PhiPolicy::LeastColumnLeastRow:
      for (int j = 1; j < shape.num_columns() && !found; ++j) {
        for (int i = 1; i <= shape.column_height(j + 1); ++i) {
          if (descent(i, j)) {
            found = Box{i, j};
            break;
          }
        }
      }
      break;
    case PhiPolicy::GreatestColumnGreatestRow:
      for (int j = shape.num_columns() - 1; j >= 1 && !found; --j) {
        for (int i = shape.column_height(j + 1); i >= 1; --i) {
          if (descent(i, j)) {
            found = Box{i, j};
            break;
          }
        }
      }
      break;
  }
  return found;
}

const char* to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::AltBasicSnake: return "alt-basic-snake";
    case RelationKind::SkewBasicSnake: return "skew-basic-snake";
    case RelationKind::SkewSupplementary: return "skew-supplementary";
    case RelationKind::AllAdjacentSnakes: return "all-adjacent-snakes";
    case RelationKind::ExhaustiveGarnir: return "exhaustive-garnir";
  }
  return "?";
}

std::size_t RelationSet::zero_count() const {
  return static_cast<std::size_t>(
      std::count_if(relations.begin(), relations.end(), [](const auto& r) { return r.is_zero(); }));
}

std::vector<GarnirLabel> relation_labels(const BasisPtr& basis, RelationKind kind,
                                         PhiPolicy policy) {
  const Partition& shape = basis->shape();
  const auto tag = basis->kind().tag();
  if (tag == TabloidKind::Tag::Row) {
    throw std::invalid_argument("relations are generated in column tabloid spaces");
  }
  const bool skew = tag == TabloidKind::Tag::SkewColumn;
  std::vector<GarnirLabel> labels;
  switch (kind) {
    case RelationKind::AltBasicSnake:
    case RelationKind::SkewBasicSnake: {
      if ((kind == RelationKind::SkewBasicSnake) != skew) {
        throw std::invalid_argument("relation kind does not match the tabloid space");
      }
      for (std::size_t idx = 0; idx < basis->dim(); ++idx) {
        Tableau t = basis->tableau(idx);
        if (auto box = phi(t, policy)) labels.push_back(snake_label(t, box->row, box->col));
      }
      break;
    }
    case RelationKind::SkewSupplementary: {
      if (!skew) throw std::invalid_argument("supplementary relations need skew tabloids");
      for (auto& t : enumerate_tableaux(shape, basis->d(), TableauClass::RowAndColumnSemistandard)) {
        for (int j = 1; j < shape.num_columns(); ++j) {
          for (int i = 1; i <= shape.column_height(j + 1); ++i) {
            if (t.at(i, j) == t.at(i, j + 1)) labels.push_back(snake_label(t, i, j));
          }
        }
      }
      break;
    }
    case RelationKind::AllAdjacentSnakes: {
      for (std::size_t idx = 0; idx < basis->dim(); ++idx) {
        Tableau t = basis->tableau(idx);
        for (int j = 1; j < shape.num_columns(); ++j) {
          for (int i = 1; i <= shape.column_height(j + 1); ++i) labels.push_back(snake_label(t, i, j));
        }
      }
      break;
    }
    case RelationKind::ExhaustiveGarnir: {
      if (shape.size() > 5) throw std::invalid_argument("exhaustive Garnir relations are capped at n = 5");
      // Column-sorted fillings suffice: relabelling A, B absorbs column permutations.
      for (auto& t : enumerate_tableaux(shape, basis->d(), TableauClass::ColumnSemistandard)) {
        for (int j = 1; j <= shape.num_columns(); ++j) {
          const int hj = shape.column_height(j);
          for (int jp = j + 1; jp <= shape.num_columns(); ++jp) {
            const int hjp = shape.column_height(jp);
            for (unsigned ma = 1; ma < (1u << hj); ++ma) {
              for (unsigned mb = 0; mb < (1u << hjp); ++mb) {
                if (std::popcount(ma) + std::popcount(mb) <= hj) continue;
                GarnirLabel label{t, {}, {}};
                for (int x = 0; x < hj; ++x) {
                  if (ma >> x & 1u) label.A.push_back({x + 1, j});
                }
                for (int x = 0; x < hjp; ++x) {
                  if (mb >> x & 1u) label.B.push_back({x + 1, jp});
                }
                labels.push_back(std::move(label));
              }
            }
          }
        }
      }
      break;
    }
  }
  return labels;
}

RelationSet generate_relation_set(const BasisPtr& basis, RelationKind kind, PhiPolicy policy,
                                  unsigned threads) {
  RelationSet set{kind, basis, {}, relation_labels(basis, kind, policy)};
  std::vector<std::optional<TabloidVector>> out(set.labels.size());
  const int d = basis->d();
  detail::parallel_for(set.labels.size(), threads, [&](std::size_t k) {
    const auto& label = set.labels[k];
    auto r = garnir_relation(label, basis);
    const Weight w = label.t.weight(d);
    for (const auto& [idx, c] : r.terms()) {
      if (weight_of(basis->rep(idx), d) != w) {
        throw std::logic_error("relation is not weight-homogeneous: " + label.to_string());
      }
    }
    out[k] = std::move(r);
  });
  set.relations.reserve(out.size());
  for (auto& r : out) set.relations.push_back(std::move(*r));
  return set;
}

Subspace relation_span(const RelationSet& set) {
  SpanBuilder b(set.basis->dim(), set.basis->prime());
  for (const auto& r : set.relations) {
    if (!r.is_zero()) b.push(r.to_row_vector());
  }
  return std::move(b).finish();
}

}  // namespace skg
