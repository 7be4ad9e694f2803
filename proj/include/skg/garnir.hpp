#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skg/combinatorics.hpp"
#include "skg/linalg.hpp"
#include "skg/tabloids.hpp"

namespace skg {

/// A Garnir label (t, A, B): A inside column j, B inside a later column j',
/// |A| + |B| > height of column j.
struct GarnirLabel {
  Tableau t;
  std::vector<Box> A;
  std::vector<Box> B;

  /// Throws std::invalid_argument if the label is malformed.
  void validate() const;
  std::string to_string() const;
};

GarnirLabel snake_label(const Tableau& t, int i, int j);

TabloidVector garnir_relation(const GarnirLabel& label, const BasisPtr& basis);
/// Same relation computed with a random transversal of the S_A x S_B cosets.
TabloidVector garnir_relation(const GarnirLabel& label, const BasisPtr& basis,
                              std::mt19937_64& rng);
TabloidVector snake_relation(const Tableau& t, int i, int j, const BasisPtr& basis);

enum class PhiPolicy {
  LeastColumnGreatestRow,
  LeastColumnLeastRow,
  GreatestColumnGreatestRow,
};

/// A box (i, j) with t(i, j) > t(i, j+1) chosen by the policy; empty when t is
/// row semistandard.
std::optional<Box> phi(const Tableau& t, PhiPolicy policy = PhiPolicy::LeastColumnGreatestRow);

enum class RelationKind {
  AltBasicSnake,
  SkewBasicSnake,
  SkewSupplementary,
  AllAdjacentSnakes,
  ExhaustiveGarnir,
};

const char* to_string(RelationKind kind);

struct RelationSet {
  RelationKind kind;
  BasisPtr basis;
  std::vector<TabloidVector> relations;
  std::vector<GarnirLabel> labels;

  std::size_t zero_count() const;
};

/// Labels of the requested kind, in basis order. Throws std::invalid_argument
/// when the kind does not fit the basis (or ExhaustiveGarnir beyond n = 5).
std::vector<GarnirLabel> relation_labels(const BasisPtr& basis, RelationKind kind,
                                         PhiPolicy policy = PhiPolicy::LeastColumnGreatestRow);

/// Zero relations are kept. Throws std::logic_error if a relation is not
/// weight-homogeneous.
RelationSet generate_relation_set(const BasisPtr& basis, RelationKind kind,
                                  PhiPolicy policy = PhiPolicy::LeastColumnGreatestRow,
                                  unsigned threads = 1);

Subspace relation_span(const RelationSet& set);

}  // namespace skg
