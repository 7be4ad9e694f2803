#include "skg/module_builder.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"

namespace skg {

QuotientModule::QuotientModule(BasisPtr ambient, std::vector<RelationKind> kinds,
                               const BuildOptions& options)
    : ambient_(std::move(ambient)), kinds_(std::move(kinds)) {
  const int d = ambient_->d();
  const FieldPrime p = ambient_->prime();
  const std::size_t m = ambient_->dim();
  std::vector<Weight> weights(m);
  for (std::size_t i = 0; i < m; ++i) {
    weights[i] = weight_of(ambient_->rep(i), d);
    block_index_.emplace(weights[i], 0);
  }
  std::size_t next = 0;
  for (auto& [w, idx] : block_index_) {
    idx = next++;
    blocks_.push_back({w, {}, Subspace(0, p), {}});
  }
  block_of_.resize(m);
  local_of_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto b = block_index_.at(weights[i]);
    block_of_[i] = b;
    local_of_[i] = blocks_[b].members.size();
    blocks_[b].members.push_back(i);
  }

  std::vector<SpanBuilder> builders;
  builders.reserve(blocks_.size());
  for (const auto& blk : blocks_) builders.emplace_back(blk.members.size(), p);

  for (RelationKind kind : kinds_) {
    auto labels = relation_labels(ambient_, kind, options.phi);
    std::vector<std::vector<std::size_t>> by_block(blocks_.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
      auto it = block_index_.find(labels[k].t.weight(d));
      // a label whose weight has no ambient tabloid yields the zero relation
      if (it != block_index_.end()) by_block[it->second].push_back(k);
    }
    detail::parallel_for(blocks_.size(), options.threads, [&](std::size_t b) {
      auto& builder = builders[b];
      for (std::size_t k : by_block[b]) {
        auto r = garnir_relation(labels[k], ambient_);
        if (r.is_zero()) continue;
        RowVector local(blocks_[b].members.size(), p);
        for (const auto& [idx, c] : r.terms()) {
          if (block_of_[idx] != b) {
            throw std::logic_error("relation is not weight-homogeneous: " + labels[k].to_string());
          }
          local.set(local_of_[idx], c);
        }
        builder.push(std::move(local));
      }
      blocks_[b].rank_by_stage.push_back(builder.rank());
    });
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    blocks_[b].relations = std::move(builders[b]).finish();
  }
}

const WeightBlock* QuotientModule::block(const Weight& w) const {
  auto it = block_index_.find(w);
  return it == block_index_.end() ? nullptr : &blocks_[it->second];
}

std::size_t QuotientModule::dim() const {
  std::size_t s = 0;
  for (const auto& b : blocks_) s += b.quotient_dim();
  return s;
}

std::size_t QuotientModule::relation_dim() const {
  std::size_t s = 0;
  for (const auto& b : blocks_) s += b.relations.dim();
  return s;
}

std::vector<std::size_t> QuotientModule::rank_by_stage() const {
  std::vector<std::size_t> out(kinds_.size(), 0);
  for (const auto& b : blocks_) {
    for (std::size_t s = 0; s < b.rank_by_stage.size(); ++s) out[s] += b.rank_by_stage[s];
  }
  return out;
}

TabloidVector QuotientModule::reduce(const TabloidVector& v) const {
  if (v.basis() != ambient_) throw std::invalid_argument("vector is not over this module's ambient basis");
  const FieldPrime p = ambient_->prime();
  std::map<std::size_t, RowVector> parts;
  for (const auto& [idx, c] : v.terms()) {
    auto b = block_of_[idx];
    auto it = parts.find(b);
    if (it == parts.end()) it = parts.emplace(b, RowVector(blocks_[b].members.size(), p)).first;
    it->second.set(local_of_[idx], c);
  }
  TabloidVector out(ambient_);
  for (auto& [b, local] : parts) {
    RowVector r = blocks_[b].relations.reduce(local);
    for (std::size_t x = 0; x < r.size(); ++x) {
      if (auto c = r.get(x)) out.add_index(blocks_[b].members[x], c);
    }
  }
  return out;
}

WeightTable QuotientModule::weight_table() const {
  WeightTable t;
  for (const auto& b : blocks_) {
    if (auto q = b.quotient_dim()) t[b.weight] = q;
  }
  return t;
}

std::vector<std::size_t> QuotientModule::quotient_basis() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks_) {
    std::vector<bool> pivot(b.members.size(), false);
    for (auto c : b.relations.pivots()) pivot[c] = true;
    for (std::size_t x = 0; x < b.members.size(); ++x) {
      if (!pivot[x]) out.push_back(b.members[x]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuotientModule build_dual_weyl(const Partition& lambda, int d, int p, const BuildOptions& options) {
  auto basis = make_basis(lambda, d, TabloidKind::alt_column(FieldPrime(p)));
  return QuotientModule(basis, {RelationKind::AltBasicSnake}, options);
}

QuotientModule build_gtensor_specht(const Partition& lambda, int d, int p,
                                    const BuildOptions& options) {
  auto basis = make_basis(lambda, d, TabloidKind::skew_column(FieldPrime(p)));
  return QuotientModule(basis, {RelationKind::SkewBasicSnake, RelationKind::SkewSupplementary},
                        options);
}

namespace {

void require_skew_two(const QuotientModule& g) {
  const auto kind = g.ambient()->kind();
  if (kind.tag() != TabloidKind::Tag::SkewColumn) {
    throw std::invalid_argument("expected the skew tabloid model of G⊗(S^λ)");
  }
}

// dim(ker q ∩ skGR) restricted to one block.
std::pair<std::size_t, std::size_t> kerq_block(const QuotientModule& g, const WeightBlock& b) {
  const auto& basis = *g.ambient();
  const FieldPrime p = basis.prime();
  std::vector<RowVector> units;
  for (std::size_t x = 0; x < b.members.size(); ++x) {
    if (basis.tableau(b.members[x]).has_repeated_column_entry()) {
      RowVector u(b.members.size(), p);
      u.set(x, 1);
      units.push_back(std::move(u));
    }
  }
  if (units.empty()) return {0, 0};
  auto kerq = Subspace::span(units, b.members.size(), p);
  auto si = dim_sum_and_intersection(kerq, b.relations);
  return {kerq.dim(), si.intersection};
}

}  // namespace

std::size_t u_lambda_dim(const QuotientModule& gtensor) {
  std::size_t total = 0;
  for (const auto& [w, u] : u_lambda_weight_table(gtensor)) total += u;
  return total;
}

WeightTable u_lambda_weight_table(const QuotientModule& gtensor) {
  require_skew_two(gtensor);
  WeightTable t;
  if (!gtensor.ambient()->prime().is_two()) return t;
  for (const auto& b : gtensor.blocks()) {
    auto [kq, inter] = kerq_block(gtensor, b);
    if (kq > inter) t[b.weight] = kq - inter;
  }
  return t;
}

std::size_t u_lambda_dim(const Partition& lambda, int d, const BuildOptions& options) {
  return u_lambda_dim(build_gtensor_specht(lambda, d, 2, options));
}

bool verify_iso(const QuotientModule& gtensor) {
  require_skew_two(gtensor);
  if (!gtensor.ambient()->prime().is_two()) return true;
  const auto& basis = *gtensor.ambient();
  for (const auto& b : gtensor.blocks()) {
    for (std::size_t x = 0; x < b.members.size(); ++x) {
      if (!basis.tableau(b.members[x]).has_repeated_column_entry()) continue;
      RowVector u(b.members.size(), basis.prime());
      u.set(x, 1);
      if (!b.relations.contains(u)) return false;
    }
  }
  return true;
}

bool verify_iso(const Partition& lambda, int d, int p, const BuildOptions& options) {
  if (p != 2) {
    FieldPrime checked(p);
    (void)checked;
    return true;
  }
  return verify_iso(build_gtensor_specht(lambda, d, p, options));
}

TabloidVector straighten(const Tableau& t, const BasisPtr& basis, PhiPolicy policy) {
  if (basis->kind().tag() != TabloidKind::Tag::AltColumn) {
    throw std::invalid_argument("straightening works in the alternating column tabloid space");
  }
  const Partition& shape = basis->shape();
  const FieldPrime p = basis->prime();
  TabloidVector v(basis);
  v.add_filling(t.entries(), 1);
  while (true) {
    std::optional<std::size_t> lead;
    for (const auto& [idx, c] : v.terms()) {
      const Filling& rep = basis->rep(idx);
      if (Tableau(shape, rep).is_row_semistandard()) continue;
      if (!lead) {
        lead = idx;
        continue;
      }
      auto cmp = col_compare(shape, rep, basis->rep(*lead));
      if (cmp == ColOrder::Greater || (cmp == ColOrder::Equivalent && basis->rep(*lead) < rep)) {
        lead = idx;
      }
    }
    if (!lead) return v;
    Tableau u = basis->tableau(*lead);
    auto box = phi(u, policy);
    auto r = snake_relation(u, box->row, box->col, basis);
    const auto lead_coeff = r.coefficient(*lead);
    if (lead_coeff == 0) throw std::logic_error("basic snake relation lost its leading term");
    const auto scale = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(v.coefficient(*lead)) * p.inverse(lead_coeff)) % p.value());
    v.add(r, static_cast<std::uint32_t>(p.value()) - scale);
  }
}

RestrictionResult restrict_entries(const Partition& lambda, int d, int d_prime, int p,
                                   const BuildOptions& options) {
  if (d_prime < 1 || d_prime > d) throw std::invalid_argument("need 1 <= d' <= d");
  auto big = build_gtensor_specht(lambda, d, p, options);
  std::size_t restricted = 0;
  for (const auto& b : big.blocks()) {
    bool inside = true;
    for (int k = d_prime; k < d; ++k) inside = inside && b.weight[k] == 0;
    if (inside) restricted += b.quotient_dim();
  }
  auto small = build_gtensor_specht(lambda, d_prime, p, options);
  return {restricted, small.dim()};
}

TabloidVector apply_transvection(const TabloidVector& v, int source, int target) {
  const auto& basis = v.basis();
  const int d = basis->d();
  if (source < 1 || source > d || target < 1 || target > d || source == target) {
    throw std::invalid_argument("transvection letters must be distinct and lie in 1..d");
  }
  TermAccumulator acc(basis);
  for (const auto& [idx, c] : v.terms()) {
    Filling f = basis->rep(idx);
    std::vector<std::size_t> hits;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (f[x] == source) hits.push_back(x);
    }
    if (hits.size() > 30) throw std::invalid_argument("too many boxes to expand");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << hits.size()); ++mask) {
      Filling g = f;
      for (std::size_t h = 0; h < hits.size(); ++h) {
        if (mask >> h & 1u) g[hits[h]] = static_cast<std::uint8_t>(target);
      }
      acc.add_filling(g, c);
    }
  }
  return std::move(acc).finish();
}

}  // namespace skg
