#include <doctest.h>

#include <numeric>
#include <random>

#include "skg/module_builder.hpp"

using namespace skg;

namespace {

Weight all_ones(int n) { return Weight(static_cast<std::size_t>(n), 1); }

std::size_t table_at(const WeightTable& t, const Weight& w) {
  auto it = t.find(w);
  return it == t.end() ? 0 : it->second;
}

std::size_t table_sum(const WeightTable& t) {
  std::size_t s = 0;
  for (const auto& [w, m] : t) s += m;
  return s;
}

}  // namespace

TEST_SUITE("module_builder") {

TEST_CASE("dual Weyl module dimensions") {
  CHECK(build_dual_weyl(Partition({2, 2, 1}), 3, 2).dim() == 3);
  CHECK(build_dual_weyl(Partition({2, 1}), 2, 2).dim() == 2);
  for (int n = 1; n <= 5; ++n) {
    CHECK(build_dual_weyl(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), n, 3).dim() == 1);
    for (const auto& lambda : partitions_of(n)) {
      for (int d = 1; d <= 4; ++d) {
        for (int p : {2, 3, 5}) {
          const auto m = build_dual_weyl(lambda, d, p);
          CHECK(m.dim() == hook_content_dim(lambda, d));
          CHECK(table_sum(m.weight_table()) == m.dim());
          CHECK(m.quotient_basis().size() == m.dim());
        }
      }
    }
  }
  CHECK(table_at(build_dual_weyl(Partition({4}), 3, 2).weight_table(), Weight{4, 0, 0}) == 1);
}

TEST_CASE("G⊗ model dimensions") {
  for (int n = 1; n <= 5; ++n) {
    const Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (int d = 1; d <= 4; ++d) CHECK(build_gtensor_specht(column, d, 2).dim() == binomial(d + n - 1, n));
  }
  CHECK(build_gtensor_specht(Partition({2, 1}), 2, 2).dim() == 2);
  CHECK(build_gtensor_specht(Partition({2, 2, 1}), 4, 2).dim() == 76);
}

TEST_CASE("odd characteristic: G⊗ model equals the dual Weyl module") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int d = 1; d <= 4; ++d) {
        for (int p : {3, 5}) {
          const auto g = build_gtensor_specht(lambda, d, p);
          const auto nabla = build_dual_weyl(lambda, d, p);
          CHECK(g.dim() == nabla.dim());
          CHECK(g.weight_table() == nabla.weight_table());
          CHECK(verify_iso(lambda, d, p));
        }
      }
    }
  }
}

TEST_CASE("U dimension two ways") {
  CHECK(u_lambda_dim(Partition({2, 2, 1}), 4) == 56);
  CHECK(u_lambda_dim(Partition({2, 2, 1}), 5) == 125);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int d = 1; d <= 4; ++d) {
        const auto g = build_gtensor_specht(lambda, d, 2);
        const auto nabla = build_dual_weyl(lambda, d, 2);
        const auto u = u_lambda_dim(g);
        CHECK(u == g.dim() - nabla.dim());
        CHECK(u_lambda_dim(lambda, d) == u);
        CHECK(verify_iso(g) == (u == 0));
        if (is_two_regular(lambda)) CHECK(u == 0);
        const auto ut = u_lambda_weight_table(g);
        CHECK(table_sum(ut) == u);
        for (const auto& [w, m] : ut) CHECK(table_at(g.weight_table(), w) == table_at(nabla.weight_table(), w) + m);
      }
    }
  }
}

TEST_CASE("isomorphism examples") {
  CHECK(verify_iso(Partition({2, 1}), 3, 2));
  CHECK_FALSE(verify_iso(Partition({2, 2, 1}), 4, 2));
  CHECK(verify_iso(Partition({4, 3, 2, 1, 1}), 2, 2));
  CHECK_THROWS(verify_iso(Partition({2, 1}), 3, 4));
}

TEST_CASE("Schur functor weight space") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto g = build_gtensor_specht(lambda, n, 2);
      CHECK(table_at(g.weight_table(), all_ones(n)) == count_syt(lambda));
      CHECK(table_at(u_lambda_weight_table(g), all_ones(n)) == 0);
    }
  }
}

TEST_CASE("reduction and stages") {
  const auto g = build_gtensor_specht(Partition({2, 2, 1}), 3, 2);
  CHECK(g.kinds().size() == 2);
  const auto stages = g.rank_by_stage();
  REQUIRE(stages.size() == 2);
  CHECK(stages[0] <= stages[1]);
  CHECK(stages[1] == g.relation_dim());
  CHECK(g.dim() + g.relation_dim() == g.ambient()->dim());
  const auto set = generate_relation_set(g.ambient(), RelationKind::AllAdjacentSnakes);
  for (const auto& r : set.relations) CHECK(g.in_relations(r));
  std::size_t outside = 0;
  for (std::size_t i = 0; i < g.ambient()->dim(); ++i) {
    const auto v = TabloidVector::unit(g.ambient(), i);
    const auto red = g.reduce(v);
    CHECK(g.reduce(red) == red);
    outside += !red.is_zero();
    CHECK(g.block_index_of(i) < g.blocks().size());
    CHECK(g.blocks()[g.block_index_of(i)].members[g.local_index_of(i)] == i);
  }
  CHECK(outside > 0);
}

TEST_CASE("thread count does not change results") {
  const Partition lambda({3, 2, 1});
  const auto a = build_gtensor_specht(lambda, 4, 2, {PhiPolicy::LeastColumnGreatestRow, 1});
  const auto b = build_gtensor_specht(lambda, 4, 2, {PhiPolicy::LeastColumnGreatestRow, 4});
  CHECK(a.dim() == b.dim());
  CHECK(a.weight_table() == b.weight_table());
  CHECK(u_lambda_dim(a) == u_lambda_dim(b));
}

TEST_CASE("Phi policy does not change the modules") {
  for (auto policy : {PhiPolicy::LeastColumnLeastRow, PhiPolicy::GreatestColumnGreatestRow}) {
    for (const auto& lambda : partitions_of(5)) {
      CHECK(build_dual_weyl(lambda, 3, 2, {policy, 1}).weight_table() == build_dual_weyl(lambda, 3, 2).weight_table());
      CHECK(build_gtensor_specht(lambda, 3, 2, {policy, 1}).weight_table() ==
            build_gtensor_specht(lambda, 3, 2).weight_table());
    }
  }
}

TEST_CASE("straightening examples") {
  auto basis = make_basis(Partition({2, 1}), 3, TabloidKind::alt_column(FieldPrime(5)));
  const auto ssyt = Tableau::from_rows({{1, 2}, {3}});
  CHECK(straighten(ssyt, basis) == TabloidVector::unit(basis, *basis->find(ssyt.entries())));
  const auto s = straighten(Tableau::from_rows({{2, 1}, {3}}), basis);
  TabloidVector want(basis);
  want.add_filling(Tableau::from_rows({{1, 2}, {3}}).entries(), 1);
  want.add_filling(Tableau::from_rows({{1, 3}, {2}}).entries(), -1);
  CHECK(s == want);
  CHECK(straighten(Tableau::from_rows({{1, 2}, {1}}), basis).is_zero());
  CHECK_THROWS_AS(straighten(ssyt, make_basis(Partition({2, 1}), 3, TabloidKind::skew_column(FieldPrime(2)))),
                  std::invalid_argument);
}

TEST_CASE("straightening: semistandard support, congruence, idempotence") {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int d : {3, 4}) {
        for (int p : {2, 3}) {
          const auto nabla = build_dual_weyl(lambda, d, p);
          const auto& basis = nabla.ambient();
          const auto all = enumerate_fillings(lambda, d, TableauClass::All);
          for (int k = 0; k < 40; ++k) {
            const Tableau t(lambda, all[rng() % all.size()]);
            const auto s = straighten(t, basis);
            TabloidVector diff = s;
            TabloidVector orig(basis);
            orig.add_filling(t.entries(), 1);
            diff.add(orig, p - 1);
            CHECK(nabla.in_relations(diff));
            for (const auto& [idx, c] : s.terms()) {
              const Tableau u = basis->tableau(idx);
              CHECK(u.is_row_semistandard());
              CHECK(straighten(u, basis) == TabloidVector::unit(basis, idx));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("transvections") {
  FieldPrime two(2);
  auto basis = make_basis(Partition({1, 1}), 2, TabloidKind::skew_column(two));
  const auto v = TabloidVector::unit(basis, *basis->find({1, 1}));
  TabloidVector want(basis);
  want.add_filling(Filling{1, 1}, 1);
  want.add_filling(Filling{2, 2}, 1);
  CHECK(apply_transvection(v, 1, 2) == want);
  CHECK(apply_transvection(apply_transvection(v, 1, 2), 1, 2) == v);
  const auto w = TabloidVector::unit(basis, *basis->find({2, 2}));
  CHECK(apply_transvection(w, 1, 2) == w);
  CHECK_THROWS_AS(apply_transvection(v, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(apply_transvection(v, 1, 3), std::invalid_argument);
}

TEST_CASE("skew Garnir span is closed under transvections") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int d = 2; d <= 3; ++d) {
        const auto g = build_gtensor_specht(lambda, d, 2);
        for (auto kind : {RelationKind::SkewBasicSnake, RelationKind::SkewSupplementary}) {
          for (const auto& r : generate_relation_set(g.ambient(), kind).relations) {
            for (int s = 1; s <= d; ++s) {
              for (int t = 1; t <= d; ++t) {
                if (s != t) CHECK(g.in_relations(apply_transvection(r, s, t)));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("restriction to fewer letters") {
  auto r = restrict_entries(Partition({2, 2, 1}), 5, 4, 2);
  CHECK(r.restricted == 76);
  CHECK(r.direct == 76);
  r = restrict_entries(Partition({1, 1, 1}), 3, 1, 2);
  CHECK(r.restricted == 1);
  CHECK(r.direct == 1);
  for (const auto& lambda : partitions_of(4)) {
    for (int dp = 1; dp <= 4; ++dp) {
      r = restrict_entries(lambda, 4, dp, 2);
      CHECK(r.restricted == r.direct);
    }
    r = restrict_entries(lambda, 3, 3, 3);
    CHECK(r.restricted == r.direct);
  }
  CHECK_THROWS_AS(restrict_entries(Partition({2, 1}), 2, 3, 2), std::invalid_argument);
}

}
