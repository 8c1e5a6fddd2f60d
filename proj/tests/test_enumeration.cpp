#include <doctest.h>

#include <set>

#include "ktpf/enumeration.hpp"
#include "oracles.hpp"

using namespace ktpf;

namespace {

std::vector<std::string> texts(auto&& stream) {
  std::vector<std::string> out;
  for (const auto& item : stream) out.push_back(format_tpf(item));
  return out;
}

}  // namespace

TEST_CASE("enumerate_tpfs examples") {
  CHECK(texts(TpfStream(Order({1, 1}))) == std::vector<std::string>{"(1;(0))", "(1;(1))"});
  CHECK(texts(TpfStream(Order({3}))) == std::vector<std::string>{"(3)"});
  CHECK(texts(TpfStream(Order({2, 2}))).size() == 9);
}

TEST_CASE("enumerate_tpfs matches brute force in the same order") {
  for (std::size_t total = 1; total <= 6; ++total) {
    for (const Order& order : compositions(total, 4)) {
      std::vector<oracle::Lists> streamed;
      for (const ExactTPF& tpf : TpfStream(order)) streamed.push_back(tpf.lists());
      REQUIRE(streamed == oracle::all_tuples(order.parts()));
      // strictly increasing lexicographic order of the concatenation
      for (std::size_t i = 1; i < streamed.size(); ++i) REQUIRE(streamed[i - 1] < streamed[i]);
    }
  }
}

TEST_CASE("rank slices of TpfStream tile the universe") {
  const Order order({2, 1, 3});
  const auto all = oracle::all_tuples(order.parts());
  for (std::uint64_t step : {1u, 3u, 7u, 50u, 1000u}) {
    std::vector<oracle::Lists> joined;
    for (std::uint64_t first = 0; first < all.size(); first += step)
      for (const ExactTPF& tpf : TpfStream(order, first, step)) joined.push_back(tpf.lists());
    CHECK(joined == all);
  }
  CHECK(TpfStream(order, all.size(), 5).done());
}

TEST_CASE("enumerate_families examples") {
  CHECK(texts(FamilyStream(Order({2, 2}))) ==
        std::vector<std::string>{"(2;(0,0))", "(2;(0,1))", "(2;(0,2))", "(2;(1,1))",
                                 "(2;(1,2))", "(2;(2,2))"});
  CHECK(texts(FamilyStream(Order({5}))).size() == 1);
  CHECK(texts(FamilyStream(Order({1, 1, 1}))).size() == 6);
}

TEST_CASE("families equal the sorted tuples of brute force, and slices tile them") {
  for (std::size_t total = 1; total <= 7; ++total) {
    for (const Order& order : compositions(total, 4)) {
      std::vector<oracle::Lists> expected;
      for (auto& l : oracle::all_tuples(order.parts()))
        if (oracle::sorted_lists(l)) expected.push_back(l);
      std::vector<oracle::Lists> streamed;
      for (const ExactTPF& c : FamilyStream(order)) streamed.push_back(c.lists());
      REQUIRE(streamed == expected);

      std::vector<oracle::Lists> joined;
      for (std::uint64_t first = 0; first < expected.size(); first += 4)
        for (const ExactTPF& c : FamilyStream(order, first, 4)) joined.push_back(c.lists());
      REQUIRE(joined == expected);
    }
  }
}

TEST_CASE("enumerate_configurations") {
  std::vector<std::string> streets;
  for (const Configuration& c : ConfigStream(Order({1, 1}))) streets.push_back(format_configuration(c));
  CHECK(streets == std::vector<std::string>{"2,1", "1,2"});

  streets.clear();
  for (const Configuration& c : ConfigStream(Order({2}))) streets.push_back(format_configuration(c));
  CHECK(streets == std::vector<std::string>{"1,1"});

  std::set<Configuration> distinct;
  std::size_t n = 0;
  for (const Configuration& c : ConfigStream(Order({2, 2}))) {
    distinct.insert(c);
    ++n;
  }
  CHECK(n == 6);
  CHECK(distinct.size() == 6);
}

TEST_CASE("streams are deterministic") {
  const Order order({2, 2, 1});
  CHECK(texts(TpfStream(order)) == texts(TpfStream(order)));
  CHECK(texts(FamilyStream(order)) == texts(FamilyStream(order)));
}

TEST_CASE("build_family_table") {
  SUBCASE("order (4,3)") {
    const FamilyTable table = build_family_table(Order({4, 3}));
    const auto& entry = table.at(canonicalize(parse_tpf("(4;(2,3,4))")));
    CHECK(entry.members == 6);
    CHECK(format_configuration(entry.config) == "1,1,2,1,2,1,2");
  }
  SUBCASE("order (1,1)") {
    const FamilyTable table = build_family_table(Order({1, 1}));
    CHECK(table.size() == 2);
    for (const auto& [key, entry] : table) CHECK(entry.members == 1);
  }
  SUBCASE("repeated entries") {
    const FamilyTable table = build_family_table(Order({3, 2}));
    CHECK(table.at(canonicalize(parse_tpf("(3;(1,1))"))).members == 1);
  }
  SUBCASE("partition and payload invariants") {
    for (const Order& order : {Order({2, 2, 2}), Order({1, 3, 1}), Order({3, 1, 1, 1})}) {
      const FamilyTable table = build_family_table(order);
      CHECK(table.size() == count_configurations(order));
      std::uint64_t members = 0;
      std::set<Configuration> configs;
      for (const auto& [key, entry] : table) {
        members += entry.members;
        CHECK(entry.config == park_simultaneous(key.tpf()));
        CHECK(family_size(key.tpf()) == entry.members);
        configs.insert(entry.config);
      }
      CHECK(members == count_tpfs(order));
      CHECK(configs.size() == table.size());
      for (const ExactTPF& tpf : TpfStream(order)) CHECK(table.contains(canonicalize(tpf)));
    }
  }
  SUBCASE("cap") { CHECK_THROWS_AS(build_family_table(Order({4, 4}), 100), BudgetExceeded); }
}

TEST_CASE("family_members lists every rearrangement once") {
  const auto members = family_members(parse_tpf("(4;(2,3,4))"));
  std::vector<std::string> got;
  for (const auto& m : members) got.push_back(format_tpf(m));
  CHECK(got == std::vector<std::string>{"(4;(2,3,4))", "(4;(2,4,3))", "(4;(3,2,4))",
                                        "(4;(3,4,2))", "(4;(4,2,3))", "(4;(4,3,2))"});

  const auto repeated = family_members(parse_tpf("(4;(1,0,1),(5,5))"));
  CHECK(repeated.size() == 3);
  CHECK(family_members(parse_tpf("(3)")).size() == 1);
  CHECK_THROWS_AS(family_members(parse_tpf("(9;(0,1,2,3,4,5,6,7))"), 100), BudgetExceeded);
}

TEST_CASE("compositions") {
  CHECK(compositions(4, 4).size() == 8);
  CHECK(compositions(4, 2).size() == 4);  // 4, 1+3, 2+2, 3+1
  CHECK(compositions(0, 3).empty());
  CHECK(compositions(3, 3).front().parts() == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("binomial_u64") {
  CHECK(binomial_u64(10, 3) == 120);
  CHECK(binomial_u64(3, 5) == 0);
  CHECK(binomial_u64(62, 31) == 465428353255261088ull);
  CHECK_THROWS_AS(binomial_u64(200, 100), std::overflow_error);
}
