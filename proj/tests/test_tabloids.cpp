#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "skg/tabloids.hpp"

using namespace skg;

namespace {

// All column-preserving place permutations of a shape, as maps on the
// column-major positions.
std::vector<std::vector<std::size_t>> column_permutations(const Partition& lambda) {
  std::vector<std::vector<std::size_t>> out{std::vector<std::size_t>(static_cast<std::size_t>(lambda.size()))};
  std::iota(out[0].begin(), out[0].end(), std::size_t{0});
  for (int j = 1; j <= lambda.num_columns(); ++j) {
    const std::size_t start = lambda.column_start(j);
    const std::size_t h = static_cast<std::size_t>(lambda.column_height(j));
    std::vector<std::vector<std::size_t>> next;
    for (const auto& base : out) {
      std::vector<std::size_t> seg(h);
      std::iota(seg.begin(), seg.end(), start);
      do {
        auto p = base;
        std::copy(seg.begin(), seg.end(), p.begin() + static_cast<long>(start));
        next.push_back(p);
      } while (std::next_permutation(seg.begin(), seg.end()));
    }
    out = std::move(next);
  }
  return out;
}

int sign_of(const std::vector<std::size_t>& perm) {
  std::vector<int> v(perm.begin(), perm.end());
  return oracle::perm_sign(v);
}

Filling permuted(const Filling& f, const std::vector<std::size_t>& perm) {
  Filling g(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) g[k] = f[perm[k]];
  return g;
}

std::vector<TabloidKind> kinds_for(int p) {
  FieldPrime f(p);
  return {TabloidKind::row(f), TabloidKind::alt_column(f), TabloidKind::skew_column(f)};
}

std::uint64_t product_dim(const Partition& lambda, int d, const TabloidKind& kind) {
  std::uint64_t dim = 1;
  if (kind.tag() == TabloidKind::Tag::Row) {
    for (int part : lambda.parts()) dim *= binomial(d + part - 1, part);
  } else if (kind.vanishes_on_repeats()) {
    for (int h : lambda.conjugate_parts()) dim *= binomial(d, h);
  } else {
    for (int h : lambda.conjugate_parts()) dim *= binomial(d + h - 1, h);
  }
  return dim;
}

}  // namespace

TEST_SUITE("tabloids") {

TEST_CASE("canonicalization examples") {
  FieldPrime three(3), two(2);
  const Partition col({1, 1});
  auto st = canonicalize(Tableau::from_rows({{2}, {1}}), TabloidKind::alt_column(three));
  CHECK(st.rep == Filling{1, 2});
  CHECK(st.sign == -1);
  CHECK_FALSE(st.is_zero);
  CHECK(canonicalize(Tableau::from_rows({{1}, {1}}), TabloidKind::alt_column(three)).is_zero);
  CHECK(canonicalize(Tableau::from_rows({{1}, {1}}), TabloidKind::alt_column(two)).is_zero);
  st = canonicalize(Tableau::from_rows({{1}, {1}}), TabloidKind::skew_column(two));
  CHECK_FALSE(st.is_zero);
  CHECK(st.rep == Filling{1, 1});
  CHECK(st.sign == 1);
  CHECK(canonicalize(Tableau::from_rows({{1}, {1}}), TabloidKind::skew_column(three)).is_zero);
  st = canonicalize(Tableau::from_rows({{3, 1, 2}}), TabloidKind::row(three));
  CHECK(st.rep == Filling{1, 2, 3});
  CHECK(st.sign == 1);
}

TEST_CASE("canonical form is invariant under column permutations, signs compose") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto perms = column_permutations(lambda);
      for (int d = 1; d <= 3; ++d) {
        const auto fillings = enumerate_fillings(lambda, d, TableauClass::All);
        for (int p : {2, 3}) {
          for (auto kind : {TabloidKind::alt_column(FieldPrime(p)), TabloidKind::skew_column(FieldPrime(p))}) {
            for (std::size_t k = 0; k < fillings.size(); k += (n >= 5 ? 7 : 1)) {
              const auto& f = fillings[k];
              const auto base = canonicalize(lambda, f, kind);
              CHECK(canonicalize(lambda, base.rep, kind).rep == base.rep);
              CHECK(canonicalize(lambda, base.rep, kind).sign == 1);
              CHECK(Tableau(lambda, base.rep).is_column_semistandard());
              CHECK(base.is_zero == (kind.vanishes_on_repeats() && Tableau(lambda, f).has_repeated_column_entry()));
              for (const auto& perm : perms) {
                const auto st = canonicalize(lambda, permuted(f, perm), kind);
                CHECK(st.is_zero == base.is_zero);
                if (base.is_zero) continue;
                CHECK(st.rep == base.rep);
                if (p != 2) CHECK(st.sign == base.sign * sign_of(perm));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("row canonical form sorts rows") {
  const Partition lambda({3, 2});
  for (const auto& f : enumerate_fillings(lambda, 3, TableauClass::All)) {
    const auto st = canonicalize(lambda, f, TabloidKind::row(FieldPrime(5)));
    auto rows = Tableau(lambda, f).rows();
    for (auto& r : rows) std::sort(r.begin(), r.end());
    CHECK(Tableau(lambda, st.rep).rows() == rows);
    CHECK(st.sign == 1);
    CHECK_FALSE(st.is_zero);
  }
}

TEST_CASE("basis sizes: product formulas and distinct canonical forms") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int d = 1; d <= (n <= 4 ? 4 : 3); ++d) {
        for (int p : {2, 3}) {
          for (auto kind : kinds_for(p)) {
            TabloidBasis basis(lambda, d, kind);
            CHECK(basis.dim() == product_dim(lambda, d, kind));
            std::set<Filling> reps;
            for (const auto& rows : oracle::all_fillings(lambda.parts(), d)) {
              auto st = canonicalize(Tableau::from_rows(rows), kind);
              if (!st.is_zero) reps.insert(st.rep);
            }
            CHECK(basis.dim() == reps.size());
            for (std::size_t i = 0; i < basis.dim(); ++i) {
              CHECK(basis.find(basis.rep(i)) == i);
              CHECK(reps.count(basis.rep(i)) == 1);
            }
            for (std::size_t i = 1; i < basis.dim(); ++i) CHECK(basis.rep(i - 1) < basis.rep(i));
          }
        }
      }
    }
  }
  const TabloidBasis skew(Partition({2, 2, 1}), 4, TabloidKind::skew_column(FieldPrime(2)));
  CHECK(skew.dim() == 200);
  CHECK(TabloidBasis(Partition({2, 1}), 2, TabloidKind::row(FieldPrime(2))).dim() == 6);
  CHECK(TabloidBasis(Partition({1, 1, 1}), 5, TabloidKind::alt_column(FieldPrime(3))).dim() == 10);
  CHECK(TabloidBasis(Partition({1, 1, 1}), 2, TabloidKind::alt_column(FieldPrime(3))).dim() == 0);
}

TEST_CASE("ker q generators") {
  FieldPrime two(2);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int d = 1; d <= 4; ++d) {
        auto skew = make_basis(lambda, d, TabloidKind::skew_column(two));
        auto alt = make_basis(lambda, d, TabloidKind::alt_column(two));
        const auto gens = ker_q_generators(skew);
        CHECK(alt->dim() + gens.size() == skew->dim());
        for (const auto& g : gens) {
          REQUIRE(g.terms().size() == 1);
          CHECK(g.terms()[0].second == 1);
          CHECK(skew->tableau(g.terms()[0].first).has_repeated_column_entry());
        }
      }
    }
  }
  CHECK(ker_q_generators(make_basis(Partition({4}), 3, TabloidKind::skew_column(two))).empty());
  CHECK(ker_q_generators(make_basis(Partition({1, 1}), 2, TabloidKind::skew_column(two))).size() == 2);
  CHECK(ker_q_generators(make_basis(Partition({2, 1}), 1, TabloidKind::skew_column(two))).size() == 1);
  CHECK_THROWS(ker_q_generators(make_basis(Partition({2, 1}), 2, TabloidKind::alt_column(two))));
}

TEST_CASE("tabloid vectors") {
  FieldPrime five(5);
  const Partition lambda({2, 1});
  auto basis = make_basis(lambda, 3, TabloidKind::alt_column(five));
  TabloidVector v(basis);
  CHECK(v.is_zero());
  v.add_filling(Tableau::from_rows({{2, 1}, {1}}).entries(), 1);  // columns (2,1),(1) -> -<(1,2),(1)>
  const auto idx = *basis->find(Tableau::from_rows({{1, 1}, {2}}).entries());
  CHECK(v.coefficient(idx) == 4);
  v.add_filling(Tableau::from_rows({{1, 1}, {1}}).entries(), 3);  // repeated column entry: zero
  CHECK(v.terms().size() == 1);
  v.add_index(idx, 1);
  CHECK(v.is_zero());
  v.add_index(0, 2);
  v.add_index(2, 3);
  auto w = TabloidVector::unit(basis, 2);
  w.add(v, 4);
  CHECK(w.coefficient(0) == 3);
  CHECK(w.coefficient(2) == 3);
  CHECK(TabloidVector::from_row_vector(basis, w.to_row_vector()) == w);
  for (std::size_t k = 1; k < w.terms().size(); ++k) CHECK(w.terms()[k - 1].first < w.terms()[k].first);

  TermAccumulator acc(basis);
  acc.add_filling(Tableau::from_rows({{2, 1}, {1}}).entries(), 1);
  acc.add_filling(Tableau::from_rows({{1, 1}, {2}}).entries(), 1);
  CHECK(std::move(acc).finish().is_zero());
}

}
