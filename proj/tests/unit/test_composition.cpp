#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "rorc/composition.hpp"
#include "support.hpp"

using namespace rorc;

namespace {

PairSet pairs(std::initializer_list<Pair> list) { return PairSet(list); }

const DimensionVector kRunning({7, 5, 2, 3, 5, 1, 2, 6, 5});

}  // namespace

TEST_CASE("DimensionVector parsing and accessors") {
  const DimensionVector d = DimensionVector::parse(" 3, 1,2 ,4 ");
  CHECK(d.parts() == std::vector<int>{3, 1, 2, 4});
  CHECK(d.t() == 4);
  CHECK(d.n() == 10);
  CHECK(d[1] == 3);
  CHECK(d[4] == 4);
  CHECK(d.offset(0) == 0);
  CHECK(d.offset(2) == 4);
  CHECK(d.block_of(0) == 1);
  CHECK(d.block_of(3) == 2);
  CHECK(d.block_of(9) == 4);
  CHECK(d.nilradical_dim() == 3 * 1 + 3 * 2 + 3 * 4 + 1 * 2 + 1 * 4 + 2 * 4);
  CHECK(d.slice(2, 3).parts() == std::vector<int>{1, 2});
  CHECK(d.to_string() == "(3,1,2,4)");

  for (const char* bad : {"", ",", "1,,2", "0", "1,-2", "a", "1.5", "1,2,"})
    CHECK_THROWS_AS(DimensionVector::parse(bad), std::invalid_argument);
  CHECK_THROWS(DimensionVector(std::vector<int>{}));
}

TEST_CASE("lambda(d) is the sorted conjugate") {
  CHECK(lambda_of(DimensionVector({3, 1, 2, 4})).parts() == std::vector<int>{4, 3, 2, 1});
  CHECK(lambda_of(kRunning).parts() == std::vector<int>{9, 8, 6, 5, 5, 2, 1});
  CHECK(lambda_of(DimensionVector({5})).parts() == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(lambda_of(DimensionVector({1, 1, 1})).parts() == std::vector<int>{3});
}

TEST_CASE("kappa counts the intermediate parts at or above the smaller end") {
  CHECK(kappa(kRunning, 1, 2) == 1);
  CHECK(kappa(kRunning, 2, 5) == 1);
  CHECK(kappa(kRunning, 1, 9) == 4);  // d_2 = 5, d_5 = 5, d_8 = 6
  CHECK(d_geq(kRunning, 1, 9) == std::vector<int>{2, 5, 8});
  CHECK(d_less(kRunning, 3, 7) == std::vector<int>{6});
  CHECK_THROWS_AS(kappa(kRunning, 3, 3), std::out_of_range);
  CHECK_THROWS_AS(kappa(kRunning, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(kappa(kRunning, 2, 10), std::out_of_range);
}

TEST_CASE("index-set fixtures for four compositions") {
  const DimensionVector a({1, 3, 4, 2});
  CHECK(gamma_set(a) == pairs({{1, 2}, {2, 3}, {3, 4}, {2, 4}, {1, 4}}));
  CHECK(lambda_set(a) == pairs({{2, 3}, {2, 4}, {1, 4}}));

  const DimensionVector b({1, 2, 3, 2});
  CHECK(gamma_set(b) == pairs({{1, 2}, {2, 3}, {3, 4}, {2, 4}}));
  CHECK(lambda_set(b) == pairs({{1, 2}, {2, 4}}));

  for (const auto& parts : std::vector<std::vector<int>>{{1, 2, 3, 4}, {6, 4, 4, 1}, {2, 2, 2}, {1, 5, 9}}) {
    const DimensionVector c(parts);
    PairSet adjacent;
    for (int i = 1; i < c.t(); ++i) adjacent.emplace(i, i + 1);
    CHECK(gamma_set(c) == adjacent);
    CHECK(lambda_set(c) == adjacent);
  }

  PairSet gamma_running;
  for (int i = 1; i <= 8; ++i) gamma_running.emplace(i, i + 1);
  for (const Pair& p : {Pair{1, 8}, {2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 7}, {5, 8}, {5, 9}, {7, 9}})
    gamma_running.insert(p);
  CHECK(gamma_running.size() == 19);
  CHECK(gamma_set(kRunning) == gamma_running);
  CHECK(lambda_set(kRunning) == pairs({{1, 8}, {2, 5}, {3, 7}, {5, 9}}));
  CHECK(to_string(lambda_set(kRunning)) == "{(1,8),(2,5),(3,7),(5,9)}");
}

TEST_CASE("index sets agree with the definitions on every composition of n <= 9") {
  for (int n = 1; n <= 9; ++n)
    for (const auto& d : compositions_of(n)) {
      CAPTURE(d.to_string());
      CHECK(gamma_set(d) == oracle::gamma(d));
      CHECK(lambda_set(d) == oracle::lambda(d));
    }
}

TEST_CASE("index-set properties on random compositions") {
  auto g = oracle::rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const DimensionVector d = oracle::random_d(g, 1, 12, 7);
    CAPTURE(d.to_string());
    const PairSet gamma = gamma_set(d);
    const PairSet lambda = lambda_set(d);
    for (const Pair& p : lambda) CHECK(gamma.contains(p));
    for (int i = 1; i < d.t(); ++i) CHECK(gamma.contains({i, i + 1}));
    CHECK(static_cast<int>(lambda.size()) <= std::max(d.t() - 1, 0));
    if (d.t() >= 2) CHECK_FALSE(lambda.empty());
    std::vector<int> reversed(d.parts().rbegin(), d.parts().rend());
    PairSet mirrored;
    for (const auto& [i, j] : lambda) mirrored.emplace(d.t() + 1 - j, d.t() + 1 - i);
    CHECK(lambda_set(DimensionVector(reversed)) == mirrored);
  }
}

TEST_CASE("partitions and compositions are counted correctly") {
  const std::vector<std::size_t> partition_counts{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) {
    CHECK(partitions_of(n).size() == partition_counts[static_cast<std::size_t>(n - 1)]);
    CHECK(compositions_of(n).size() == (std::size_t{1} << (n - 1)));
    for (const auto& p : partitions_of(n)) CHECK(p.weight() == n);
  }
  CHECK(partitions_of(3).front().parts() == std::vector<int>{3});
  CHECK(partitions_of(3).back().parts() == std::vector<int>{1, 1, 1});
}

TEST_CASE("dominance is a partial order on partitions of n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const auto all = partitions_of(n);
    for (const auto& a : all) {
      CHECK(dominance_leq(a, a));
      CHECK(dominance_leq(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), a));
      CHECK(dominance_leq(a, Partition({n})));
      CHECK(dominance_leq(a.conjugate().conjugate(), a));
      for (const auto& b : all) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        // Conjugation reverses the order.
        CHECK(dominance_leq(a, b) == dominance_leq(b.conjugate(), a.conjugate()));
        for (const auto& c : all)
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
    }
  }
  CHECK_FALSE(dominance_leq(Partition({3, 3}), Partition({4, 1, 1})));
  CHECK_FALSE(dominance_leq(Partition({4, 1, 1}), Partition({3, 3})));
  CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({1})), std::invalid_argument);
}

TEST_CASE("Partition construction and conjugation") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition::from_unsorted({1, 0, 3, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK(Partition({4, 2, 1}).conjugate().parts() == std::vector<int>{3, 2, 1, 1});
  CHECK(Partition({4, 2, 1}).part(4) == 0);
  CHECK(Partition().weight() == 0);
}

TEST_CASE("monotone and distinct predicates") {
  CHECK(is_weakly_monotone(DimensionVector({1, 2, 2, 5})));
  CHECK(is_weakly_monotone(DimensionVector({5, 5, 1})));
  CHECK_FALSE(is_weakly_monotone(DimensionVector({1, 3, 2})));
  CHECK(has_distinct_parts(DimensionVector({1, 3, 2})));
  CHECK_FALSE(has_distinct_parts(DimensionVector({1, 3, 1})));
}
