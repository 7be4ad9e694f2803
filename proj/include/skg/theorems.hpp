#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skg/combinatorics.hpp"
#include "skg/module_builder.hpp"

namespace skg {

/// True iff λ is 2-regular, or λ1 = λ2 ≥ λ3 + 2 with λ minus its first part 2-regular.
bool predict_iso(const Partition& lambda);

/// Least d from which the converse is claimed: n - 2 by default, or the
/// λ-dependent bound when `weaker` is set. Never below 1.
int converse_threshold(const Partition& lambda, bool weaker = false);

struct IsoVerdict {
  Partition lambda;
  bool predicted;
  int threshold;
  std::vector<std::pair<int, bool>> verified_at;

  /// Equality at d >= threshold, and predicted => verified below it.
  bool consistent() const;
};

/// Checks every λ ⊢ n at d = converse_threshold(λ, weaker) and at each extra d.
std::vector<IsoVerdict> verify_characterization(int n, bool weaker = false,
                                                const std::vector<int>& extra_d = {},
                                                const BuildOptions& options = {});

enum class D1Verdict { Zero, Line };
D1Verdict d1_predict(const Partition& lambda);

/// Dimension of the d = 2, p = 2 model for the hook (a, 1^(l-1)); needs a, l >= 2.
std::uint64_t hook_d2_dim(int a, int l);

/// Weight multiset of Fr(Sym^(l/2-1)) ⊗ Sym^(a-1) ⊗ det at d = 2.
WeightTable frobenius_weights(int a, int l);
/// Compares frobenius_weights(a, l) with the constructed weight table. l must be even.
bool frobenius_weight_check(int a, int l, const BuildOptions& options = {});

/// Distinct weights of (2,2,1)-tabloids with a repeated column entry, grouped
/// by dominant weight (the sorted weight).
std::map<Partition, std::uint64_t> table1_weight_counts(int d);
/// Closed forms for the same six classes.
std::map<Partition, std::uint64_t> table1_expected(int d);

using Multiset = std::map<Partition, long long>;

/// Multiplicities [∇^μ : L^ν] in characteristic 2 for n <= 5, with ν dominated
/// by μ. Loading validates the data and throws on any failure.
class DecompositionData {
 public:
  static DecompositionData load_file(const std::string& path);
  static DecompositionData parse(std::string_view text);
  /// Path from SKG_DECOMPOSITION_DATA, else the installed default.
  static std::string default_path();

  int max_n() const { return max_n_; }
  const Multiset& row(const Partition& mu) const;
  bool has(const Partition& mu) const { return rows_.count(mu) != 0; }

  std::int64_t dim_L(const Partition& mu, int d) const;
  /// Dominant weight multiplicities of L^μ: weight α ⊢ n -> multiplicity.
  const Multiset& character_L(const Partition& mu) const;

 private:
  void validate();

  int max_n_ = 0;
  std::map<Partition, Multiset> rows_;
  std::map<Partition, Multiset> characters_;
};

/// Dominant weight multiplicities of ∇^μ (Kostka numbers), by enumeration.
Multiset kostka_row(const Partition& mu);

/// The coefficients of d^5 .. d of dim L^μ for μ ⊢ 5.
std::optional<std::vector<std::pair<long long, long long>>> table2_polynomial(const Partition& mu);
long long table2_evaluate(const Partition& mu, int d);

struct FactorSolution {
  Multiset factors;
  /// U-dimension at each evaluation point and Σ m·dim L there.
  std::vector<std::pair<int, std::pair<long long, long long>>> evaluations;
  bool evaluations_match = true;
};

/// Composition factors of U^λ, p = 2, n <= 5: solved from dominant weight
/// multiplicities at d = n and cross-checked by dimensions at d = 1..#partitions(n).
/// Throws std::runtime_error on a negative or inconsistent solution.
FactorSolution composition_factors_U(const Partition& lambda, const DecompositionData& data,
                                     const BuildOptions& options = {});

/// Factors of ∇^λ read from the data.
Multiset nabla_factors(const Partition& lambda, const DecompositionData& data);

/// Whether the multiset is a sum of ∇-factor multisets with nonnegative coefficients.
bool nabla_filtration_feasible(const Multiset& factors, int n, const DecompositionData& data);

/// Exact degree of the minimal polynomial through (x_i, y_i); -1 for all-zero data.
int interpolation_degree(const std::vector<std::pair<long long, long long>>& points);

struct CheckItem {
  std::string lambda;
  int d = 0;
  int p = 0;
  std::string kind;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckItem> items;
  bool passed() const;
};

struct SuiteOptions {
  int n_min = 1;
  int n_max = 0;  // 0: the suite's default
  bool weaker_bound = false;
  unsigned threads = 1;
  std::string data_path;  // empty: DecompositionData::default_path()
};

/// thm1 | thm2 | d1 | hooks-d2 | tables | example61 | all
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);
const std::vector<std::string>& suite_names();

struct Table3 {
  int n;
  std::vector<Partition> columns;
  std::vector<std::pair<Partition, Multiset>> rows;
};
Table3 table3(int n, const DecompositionData& data, const BuildOptions& options = {});

std::string table1_csv(int d);
std::string table3_csv(const Table3& table);

}  // namespace skg
