#include <doctest.h>

#include "ktpf/enumeration.hpp"
#include "ktpf/kernels.hpp"

using namespace ktpf;

TEST_CASE("parallel universe scan matches the serial reference") {
  for (std::size_t total = 1; total <= 7; ++total) {
    for (const Order& order : compositions(total, total)) {
      const UniverseStats fast = scan_universe(order);
      const UniverseStats slow = reference::scan_universe(order);
      REQUIRE(fast == slow);
      REQUIRE(fast.consistent());
      REQUIRE(fast.tpfs == count_tpfs(order));
      REQUIRE(fast.families == count_configurations(order));
    }
  }
}

TEST_CASE("scan detects a broken invariant") {
  UniverseStats s;
  s.families = s.distinct_configs = s.distinct_multisets = 3;
  CHECK(s.consistent());
  s.distinct_multisets = 2;
  CHECK_FALSE(s.consistent());
  s.distinct_multisets = 3;
  s.roundtrip_mismatches = 1;
  CHECK_FALSE(s.consistent());
}

TEST_CASE("family size sums agree across partitions") {
  for (const Order& order : {Order({3, 3, 2}), Order({2, 2, 2, 2}), Order({1, 1, 1, 1, 1, 1})}) {
    const BigInt fast = sum_family_sizes(order);
    CHECK(fast == reference::sum_family_sizes(order));
    CHECK(fast == count_tpfs(order));
  }
}

TEST_CASE("kernel budgets") {
  CHECK_THROWS_AS(scan_universe(Order({4, 4}), 10), BudgetExceeded);
  CHECK_THROWS_AS(sum_family_sizes(Order({4, 4}), 10), BudgetExceeded);
  CHECK_THROWS_AS(atleast_branch_tally_parallel(AtLeastInstance(5, {0, 0, 0}), 10),
                  BudgetExceeded);
  CHECK(kernel_threads() >= 1);
}
