#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "skg/combinatorics.hpp"
#include "skg/garnir.hpp"
#include "skg/linalg.hpp"
#include "skg/tabloids.hpp"

namespace skg {

struct BuildOptions {
  PhiPolicy phi = PhiPolicy::LeastColumnGreatestRow;
  unsigned threads = 1;  // 0 = hardware concurrency
};

using WeightTable = std::map<Weight, std::size_t>;

/// Ambient tabloids of one weight together with the relations among them, in
/// local coordinates (position within `members`).
struct WeightBlock {
  Weight weight;
  std::vector<std::size_t> members;
  Subspace relations;
  /// Relation rank after each relation kind was added, in build order.
  std::vector<std::size_t> rank_by_stage;

  std::size_t quotient_dim() const { return members.size() - relations.dim(); }
};

/// A tabloid space modulo a weight-homogeneous relation subspace.
class QuotientModule {
 public:
  QuotientModule(BasisPtr ambient, std::vector<RelationKind> kinds, const BuildOptions& options);

  const BasisPtr& ambient() const { return ambient_; }
  const std::vector<RelationKind>& kinds() const { return kinds_; }
  const std::vector<WeightBlock>& blocks() const { return blocks_; }
  const WeightBlock* block(const Weight& w) const;

  std::size_t dim() const;
  std::size_t relation_dim() const;
  /// Relation rank summed over blocks after each stage of `kinds`.
  std::vector<std::size_t> rank_by_stage() const;

  /// Normal form of v modulo the relations.
  TabloidVector reduce(const TabloidVector& v) const;
  bool in_relations(const TabloidVector& v) const { return reduce(v).is_zero(); }

  WeightTable weight_table() const;
  /// Ambient indices that are not pivots of the relation span.
  std::vector<std::size_t> quotient_basis() const;

  std::size_t block_index_of(std::size_t ambient_index) const { return block_of_[ambient_index]; }
  std::size_t local_index_of(std::size_t ambient_index) const { return local_of_[ambient_index]; }

 private:
  BasisPtr ambient_;
  std::vector<RelationKind> kinds_;
  std::vector<WeightBlock> blocks_;
  std::map<Weight, std::size_t> block_index_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> local_of_;
};

/// Alternating column tabloids modulo basic snake relations.
QuotientModule build_dual_weyl(const Partition& lambda, int d, int p,
                               const BuildOptions& options = {});
/// Skew column tabloids modulo basic and supplementary skew snake relations.
QuotientModule build_gtensor_specht(const Partition& lambda, int d, int p,
                                    const BuildOptions& options = {});

/// dim ker q - dim(ker q ∩ skGR) at p = 2.
std::size_t u_lambda_dim(const Partition& lambda, int d, const BuildOptions& options = {});
std::size_t u_lambda_dim(const QuotientModule& gtensor);
/// Weight table of U at p = 2, block by block.
WeightTable u_lambda_weight_table(const QuotientModule& gtensor);

/// True iff every ker q generator lies in the skew Garnir span (always true for p odd).
bool verify_iso(const Partition& lambda, int d, int p, const BuildOptions& options = {});
bool verify_iso(const QuotientModule& gtensor);

/// Rewrites <t> modulo basic snake relations as a combination of
/// semistandard tabloids. `basis` must be an alternating column basis.
TabloidVector straighten(const Tableau& t, const BasisPtr& basis,
                         PhiPolicy policy = PhiPolicy::LeastColumnGreatestRow);

struct RestrictionResult {
  std::size_t restricted;
  std::size_t direct;
};
/// Dimension of the G⊗(S^λ) model at d restricted to entries ≤ d', and the
/// same built directly at d'.
RestrictionResult restrict_entries(const Partition& lambda, int d, int d_prime, int p,
                                   const BuildOptions& options = {});

/// Substitutes x_source -> x_source + x_target in every box, expanding multilinearly.
TabloidVector apply_transvection(const TabloidVector& v, int source, int target);

}  // namespace skg
