#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ktpf/counting.hpp"
#include "ktpf/enumeration.hpp"
#include "oracles.hpp"

using namespace ktpf;

TEST_CASE("count_tpfs") {
  CHECK(count_tpfs(Order({3})) == 1);
  CHECK(count_tpfs(Order({4, 5})) == 3125);
  CHECK(count_tpfs(Order({2, 2})) == 9);
  CHECK(count_tpfs(Order({1, 1, 1})) == 6);
}

TEST_CASE("count_configurations") {
  CHECK(count_configurations(Order({6})) == 1);
  CHECK(count_configurations(Order({2, 2})) == 6);
  CHECK(count_configurations(Order({1, 1, 1})) == 6);
}

TEST_CASE("closed forms agree with brute force enumeration") {
  for (std::size_t total = 1; total <= 7; ++total) {
    for (const Order& order : compositions(total, 4)) {
      std::uint64_t tuples = 0;
      std::set<std::vector<std::uint32_t>> streets;
      oracle::for_each_tuple(order.parts(), [&](const oracle::Lists& lists) {
        ++tuples;
        streets.insert(oracle::park(order.parts(), lists));
      });
      REQUIRE(count_tpfs(order) == tuples);
      REQUIRE(count_configurations(order) == streets.size());
    }
  }
}

TEST_CASE("family_size") {
  CHECK(family_size(parse_tpf("(4;(2,3,4))")) == 6);
  CHECK(family_size(parse_tpf("(3;(1,1))")) == 1);
  CHECK(family_size(parse_tpf("(4;(0,1,1,2,2))")) == 30);
  CHECK(family_size(parse_tpf("(3)")) == 1);
  CHECK_THROWS_AS(family_size(parse_tpf("(2;(5))")), InvalidTpf);
}

TEST_CASE("family_size equals the brute-force class size") {
  for (const Order& order : {Order({4, 5}), Order({2, 2, 2}), Order({1, 2, 3}), Order({2, 1, 1, 2})}) {
    std::map<oracle::Lists, std::uint64_t> classes;
    oracle::for_each_tuple(order.parts(), [&](oracle::Lists lists) {
      for (auto& l : lists) std::sort(l.begin(), l.end());
      ++classes[lists];
    });
    for (const auto& [key, size] : classes) REQUIRE(family_size(ExactTPF(order, key)) == size);
  }
}

TEST_CASE("family_size multinomial against factorials") {
  // 7! / (2! 3! 1! 1!) for a single list
  const auto tpf = parse_tpf("(6;(0,0,4,4,4,5,6))");
  CHECK(family_size(tpf) == oracle::factorial(7) / (oracle::factorial(2) * oracle::factorial(3)));
}

TEST_CASE("verify_identity") {
  const auto r = verify_identity(Order({2, 2}));
  CHECK(r.identity_lhs == 9);
  CHECK(r.total_tpfs == 9);
  CHECK(r.identity_holds);
  CHECK(r.families_match);

  CHECK(verify_identity(Order({4})).identity_lhs == 1);
  CHECK(verify_identity(Order({1, 1, 1})).identity_lhs == 6);
  CHECK_THROWS_AS(verify_identity(Order({5, 5, 5}), 1000), BudgetExceeded);
}

TEST_CASE("identity holds for every order with M <= 8, k <= 4") {
  for (std::size_t total = 1; total <= 8; ++total)
    for (const Order& order : compositions(total, 4)) {
      const auto r = verify_identity(order);
      REQUIRE(r.identity_holds);
      REQUIRE(r.families_match);
    }
}

TEST_CASE("appending a part of size one scales both counts by M + 1") {
  for (const Order& order : compositions(6, 4)) {
    auto parts = order.parts();
    parts.push_back(1);
    const Order longer(parts);
    CHECK(count_tpfs(longer) == count_tpfs(order) * (order.total() + 1));
    CHECK(count_configurations(longer) == count_configurations(order) * (order.total() + 1));
  }
}

TEST_CASE("big orders stay exact") {
  // (1 + 20)^20 needs 88 bits.
  const BigInt n = count_tpfs(Order({20, 20}));
  CHECK(to_decimal(n) == "278218429446951548637196401");
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
  CHECK(count_configurations(Order({50, 50})) == binomial(100, 50));
}
