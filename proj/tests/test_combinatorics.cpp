#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "skg/combinatorics.hpp"

using namespace skg;

TEST_SUITE("combinatorics") {

TEST_CASE("partition parsing and display") {
  CHECK(Partition::parse("4,3,2,1,1").parts() == std::vector<int>{4, 3, 2, 1, 1});
  CHECK(Partition::parse("2^2,1").parts() == std::vector<int>{2, 2, 1});
  CHECK(Partition::parse(" 3 , 1^2 ").parts() == std::vector<int>{3, 1, 1});
  CHECK(Partition::parse("1^5").to_display() == "(1^5)");
  CHECK(Partition::parse("2,2,1").to_display() == "(2^2,1)");
  CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,0"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(Partition({4, 4, 4, 2, 1}).conjugate().parts() == std::vector<int>{5, 4, 3, 3});
  CHECK(Partition({6}).conjugate().parts() == std::vector<int>(6, 1));
  CHECK(Partition(std::vector<int>(6, 1)).conjugate().parts() == std::vector<int>{6});
  for (int n = 1; n <= 12; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      CHECK(lambda.conjugate().conjugate() == lambda);
      CHECK(lambda.conjugate().parts() == oracle::conjugate(lambda.parts()));
      CHECK(lambda.conjugate().size() == n);
    }
  }
}

TEST_CASE("partitions_of matches composition filter in order") {
  for (int n = 1; n <= 10; ++n) {
    auto want = oracle::partitions(n);
    auto got = partitions_of(n);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k].parts() == want[k]);
  }
}

TEST_CASE("diagram geometry") {
  Partition lambda({3, 2, 2});
  CHECK(lambda.column_height(1) == 3);
  CHECK(lambda.column_height(3) == 1);
  CHECK(lambda.column_height(4) == 0);
  CHECK(lambda.part(4) == 0);
  CHECK(lambda.contains({3, 2}));
  CHECK_FALSE(lambda.contains({3, 3}));
  for (std::size_t pos = 0; pos < 7; ++pos) CHECK(lambda.position(lambda.box_at(pos)) == pos);
  CHECK(lambda.box_at(3) == Box{1, 2});
}

TEST_CASE("two-regularity") {
  CHECK(is_two_regular(Partition({2, 1})));
  CHECK_FALSE(is_two_regular(Partition({2, 2, 1})));
  CHECK_FALSE(is_two_regular(Partition({4, 3, 2, 1, 1})));
  CHECK(is_two_regular(Partition({5})));
}

TEST_CASE("dominance agrees with partial sums") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : partitions_of(n)) {
      for (const auto& b : partitions_of(n)) {
        bool want = true;
        int sa = 0, sb = 0;
        for (int i = 1; i <= n; ++i) {
          sa += a.part(i);
          sb += b.part(i);
          want = want && sa >= sb;
        }
        CHECK(dominates(a, b) == want);
      }
    }
  }
}

TEST_CASE("tableau class predicates agree with the row-major oracle") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& rows : oracle::all_fillings(lambda.parts(), 3)) {
        const auto t = Tableau::from_rows(rows);
        CHECK(t.rows() == rows);
        CHECK(t.is_row_semistandard() == oracle::rows_weak(rows));
        CHECK(t.is_row_standard() == oracle::rows_strict(rows));
        CHECK(t.is_column_standard() == oracle::cols_strict(rows));
        CHECK(t.is_column_semistandard() == oracle::cols_weak(rows));
        CHECK(in_class(t, TableauClass::Semistandard) == oracle::is_ssyt(rows));
        CHECK(in_class(t, TableauClass::Standard) == (oracle::rows_strict(rows) && oracle::cols_strict(rows)));
        bool repeat = false;
        for (std::size_t j = 0; j < rows[0].size(); ++j) {
          auto c = oracle::column(rows, j);
          std::sort(c.begin(), c.end());
          repeat = repeat || std::adjacent_find(c.begin(), c.end()) != c.end();
        }
        CHECK(t.has_repeated_column_entry() == repeat);
      }
    }
  }
}

TEST_CASE("enumerate_fillings: exact class, no repeats, column-major lex order") {
  const TableauClass classes[] = {TableauClass::All,
                                  TableauClass::RowStandard,
                                  TableauClass::ColumnStandard,
                                  TableauClass::RowSemistandard,
                                  TableauClass::ColumnSemistandard,
                                  TableauClass::Standard,
                                  TableauClass::Semistandard,
                                  TableauClass::RowAndColumnSemistandard};
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int d = 1; d <= 3; ++d) {
        const auto every = oracle::all_fillings(lambda.parts(), d);
        for (auto cls : classes) {
          auto got = enumerate_fillings(lambda, d, cls);
          CHECK(std::is_sorted(got.begin(), got.end()));
          CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
          std::size_t want = 0;
          for (const auto& r : every) want += in_class(Tableau::from_rows(r), cls);
          CHECK(got.size() == want);
          for (const auto& f : got) CHECK(in_class(Tableau(lambda, f), cls));
        }
      }
    }
  }
}

TEST_CASE("enumerate_tableaux examples") {
  CHECK(enumerate_tableaux(Partition({1, 1}), 1, TableauClass::ColumnStandard).empty());
  CHECK(enumerate_tableaux(Partition({2, 2, 1}), 3, TableauClass::Semistandard).size() == 3);
  CHECK(enumerate_tableaux(Partition({2, 1}), 2, TableauClass::Semistandard).size() == 2);
}

TEST_CASE("hook content formula equals brute-force SSYT count") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int d = 1; d <= (n <= 5 ? 5 : 4); ++d) {
        const auto want = static_cast<std::uint64_t>(oracle::count_ssyt(lambda.parts(), d));
        CHECK(hook_content_dim(lambda, d) == want);
        CHECK(enumerate_fillings(lambda, d, TableauClass::Semistandard).size() == want);
      }
    }
  }
  CHECK(hook_content_dim(Partition({2, 2, 1}), 3) == 3);
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= 7; ++d) {
      CHECK(hook_content_dim(Partition({n}), d) == binomial(d + n - 1, n));
      CHECK(hook_content_dim(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), d) ==
            (d >= n ? binomial(d, n) : 0));
    }
  }
}

TEST_CASE("count_syt equals permutation count") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      CHECK(count_syt(lambda) == static_cast<std::uint64_t>(oracle::count_syt(lambda.parts())));
    }
  }
  CHECK(count_syt(Partition({2, 1})) == 2);
  CHECK(count_syt(Partition({2, 2, 1})) == 5);
  CHECK(count_syt(Partition({7})) == 1);
}

TEST_CASE("binomials and parity") {
  const auto tri = oracle::pascal(128);
  for (int a = 0; a <= 64; ++a) {
    for (int b = 0; b <= 64; ++b) {
      const auto c = tri[static_cast<std::size_t>(a + b)][static_cast<std::size_t>(a)];
      CHECK(binom_parity(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)) == static_cast<int>(c % 2));
    }
  }
  for (int m = 0; m <= 60; ++m) {
    for (int k = 0; k <= m; ++k) {
      CHECK(binomial(m, k) == static_cast<std::uint64_t>(tri[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)]));
    }
  }
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK_THROWS_AS(binomial(128, 64), std::overflow_error);
  CHECK(binom_parity(2, 2) == 0);
  CHECK(binom_parity(1, 3) == 0);
  CHECK(binom_parity(0, 17) == 1);
}

TEST_CASE("least index of an odd binomial") {
  const auto tri = oracle::pascal(128);
  for (std::uint64_t c = 2; c <= 128; ++c) {
    std::optional<std::uint64_t> want;
    for (std::uint64_t i = 1; i < c && !want; ++i) {
      if (tri[c][i] % 2) want = i;
    }
    CHECK(min_odd_binomial_index(c) == want);
    if (want) CHECK(c % (2 * *want) == *want);
    CHECK(is_power_of_two(c) == !want.has_value());
  }
  CHECK_FALSE(min_odd_binomial_index(4).has_value());
  CHECK(min_odd_binomial_index(6) == 2u);
  CHECK(min_odd_binomial_index(3) == 1u);
}

TEST_CASE("column ordering follows its definition") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto every = oracle::all_fillings(lambda.parts(), 3);
      for (const auto& a : every) {
        const auto ta = Tableau::from_rows(a);
        for (const auto& b : every) {
          const auto got = col_compare(ta, Tableau::from_rows(b));
          const int want = oracle::col_compare(a, b);
          CHECK(got == (want < 0 ? ColOrder::Less : want > 0 ? ColOrder::Greater : ColOrder::Equivalent));
        }
      }
    }
  }
}

TEST_CASE("column ordering is a total preorder") {
  const Partition lambda({2, 1, 1});
  const auto ts = enumerate_tableaux(lambda, 3, TableauClass::All);
  auto le = [](const Tableau& a, const Tableau& b) { return col_compare(a, b) != ColOrder::Greater; };
  for (const auto& a : ts) {
    CHECK(col_compare(a, a) == ColOrder::Equivalent);
    for (const auto& b : ts) {
      const auto ab = col_compare(a, b);
      const auto ba = col_compare(b, a);
      CHECK((ab == ColOrder::Less) == (ba == ColOrder::Greater));
      CHECK((ab == ColOrder::Equivalent) == (ba == ColOrder::Equivalent));
      for (const auto& c : ts) {
        if (le(a, b) && le(b, c)) CHECK(le(a, c));
      }
    }
  }
}

TEST_CASE("column ordering on the two extremal standard tableaux") {
  // Shape (4^3,2,1), entries 1..15: filled down the columns vs along the rows.
  const auto col_filled = Tableau::from_rows({{1, 6, 10, 13}, {2, 7, 11, 14}, {3, 8, 12, 15}, {4, 9}, {5}});
  const auto row_filled = Tableau::from_rows({{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}, {13, 14}, {15}});
  CHECK(col_filled.is_row_standard());
  CHECK(col_filled.is_column_standard());
  CHECK(row_filled.is_row_standard());
  CHECK(row_filled.is_column_standard());
  CHECK(col_compare(col_filled, row_filled) == ColOrder::Less);
  CHECK(col_compare(row_filled, col_filled) == ColOrder::Greater);
  CHECK_THROWS_AS(col_compare(col_filled, Tableau::from_rows({{1}})), std::invalid_argument);
}

TEST_CASE("weights") {
  const auto t = Tableau::from_rows({{1, 1}, {2}, {2}});
  CHECK(t.weight(3) == Weight{2, 2, 0});
  CHECK(t.max_entry() == 2);
}

}
