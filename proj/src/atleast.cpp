#include "ktpf/atleast.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <type_traits>

namespace ktpf {

namespace {

Order two_type_order(std::size_t m1, std::size_t cars) {
  return cars == 0 ? Order({m1}) : Order({m1, cars});
}

void check_budget(const AtLeastInstance& inst, std::uint64_t budget) {
  const BigInt branches = inst.branches();
  if (branches > budget)
    throw BudgetExceeded("instance has " + to_decimal(branches) + " branches, budget is " +
                         std::to_string(budget));
}

// Branches whose gap multiset is exactly `gaps` (weakly increasing): assign
// cars with the largest lower bound first, each to a slot not yet taken, then
// divide out the orderings of equal slots.
BigInt branches_for(const std::vector<Gap>& gaps, std::vector<Gap> bounds) {
  std::sort(bounds.begin(), bounds.end(), std::greater<>());
  BigInt out = 1;
  for (std::size_t t = 0; t < bounds.size(); ++t) {
    const auto fit = static_cast<std::size_t>(
        gaps.end() - std::lower_bound(gaps.begin(), gaps.end(), bounds[t]));
    if (fit <= t) return 0;
    out *= fit - t;
  }
  for (std::size_t i = 0; i < gaps.size();) {
    std::size_t j = i;
    while (j < gaps.size() && gaps[j] == gaps[i]) ++j;
    for (std::size_t f = 2; f <= j - i; ++f) out /= f;
    i = j;
  }
  return out;
}

}  // namespace

AtLeastInstance::AtLeastInstance(std::size_t m1, std::vector<Gap> lower_bounds)
    : m1_(m1), bounds_(std::move(lower_bounds)) {
  if (m1_ == 0) throw InvalidOrder("m1 must be positive");
  for (std::size_t j = 0; j < bounds_.size(); ++j)
    if (bounds_[j] > m1_)
      throw InvalidTpf("lower bound " + std::to_string(bounds_[j]) + " of car " +
                       std::to_string(j + 1) + " exceeds m1 = " + std::to_string(m1_));
}

BigInt AtLeastInstance::branches() const {
  BigInt out = 1;
  for (Gap a : bounds_) out *= m1_ - a + 1;
  return out;
}

bool OutcomeSet::contains(const Configuration& street) const {
  return std::binary_search(
      outcomes.begin(), outcomes.end(), street,
      [](const auto& a, const auto& b) {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, Outcome>)
          return a.street < b;
        else
          return a < b.street;
      });
}

OutcomeSet atleast_outcomes(const AtLeastInstance& inst, std::uint64_t budget) {
  check_budget(inst, budget);
  std::vector<Gap> floor = inst.lower_bounds();
  std::sort(floor.begin(), floor.end());
  const std::size_t cars = floor.size();
  const Order order = two_type_order(inst.m1(), cars);

  OutcomeSet set{inst.branches(), {}};
  // A weakly increasing gap tuple s is reachable iff s_j >= floor_j for all j.
  std::vector<Gap> gaps(floor);
  for (;;) {
    std::vector<std::vector<Gap>> lists;
    if (cars) lists.push_back(gaps);
    set.outcomes.push_back(Outcome{park_simultaneous(ExactTPF(order, std::move(lists))),
                                   branches_for(gaps, inst.lower_bounds())});
    std::size_t j = cars;
    while (j > 0 && gaps[j - 1] == inst.m1()) --j;
    if (j == 0) break;
    const Gap value = gaps[j - 1] + 1;
    gaps[j - 1] = value;
    for (std::size_t r = j; r < cars; ++r) gaps[r] = std::max(value, floor[r]);
  }
  std::sort(set.outcomes.begin(), set.outcomes.end(),
            [](const Outcome& a, const Outcome& b) { return a.street < b.street; });
  return set;
}

BigInt atleast_count(const AtLeastInstance& inst, std::uint64_t budget) {
  check_budget(inst, budget);
  std::vector<Gap> floor = inst.lower_bounds();
  std::sort(floor.begin(), floor.end());
  const std::size_t top = inst.m1();
  // ways[v]: weakly increasing prefixes dominating floor that end in v.
  if (floor.empty()) return 1;
  std::vector<BigInt> ways(top + 1);
  for (std::size_t v = 0; v <= top; ++v) ways[v] = v >= floor[0] ? 1 : 0;
  for (std::size_t j = 1; j < floor.size(); ++j) {
    BigInt running = 0;
    for (std::size_t v = 0; v <= top; ++v) {
      running += ways[v];
      ways[v] = v >= floor[j] ? running : BigInt(0);
    }
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

Configuration park_choice(std::size_t m1, const std::vector<Gap>& gaps) {
  std::vector<std::vector<Gap>> lists;
  if (!gaps.empty()) lists.push_back(gaps);
  return park_iterative(ExactTPF(two_type_order(m1, gaps.size()), std::move(lists)));
}

std::map<Configuration, std::uint64_t> atleast_branch_tally(const AtLeastInstance& inst,
                                                            std::uint64_t budget) {
  check_budget(inst, budget);
  const auto& floor = inst.lower_bounds();
  std::map<Configuration, std::uint64_t> tally;
  std::vector<Gap> gaps(floor);
  for (;;) {
    ++tally[park_choice(inst.m1(), gaps)];
    std::size_t j = gaps.size();
    while (j > 0 && gaps[j - 1] == inst.m1()) {
      gaps[j - 1] = floor[j - 1];
      --j;
    }
    if (j == 0) break;
    ++gaps[j - 1];
  }
  return tally;
}

std::vector<SweepRow> atleast_sweep(std::size_t m1, std::size_t min_len, std::size_t max_len,
                                    std::uint64_t budget) {
  if (m1 == 0) throw InvalidOrder("m1 must be positive");
  BigInt rows = 0;
  for (std::size_t len = min_len; len <= max_len; ++len)
    rows += boost::multiprecision::pow(BigInt(m1 + 1), static_cast<unsigned>(len));
  if (rows > budget)
    throw BudgetExceeded("sweep has " + to_decimal(rows) + " rows, budget is " +
                         std::to_string(budget));

  constexpr auto unlimited = std::numeric_limits<std::uint64_t>::max();
  std::vector<SweepRow> out;
  out.reserve(static_cast<std::size_t>(rows));
  for (std::size_t len = min_len; len <= max_len; ++len) {
    std::vector<Gap> prefs(len, 0);
    for (;;) {
      AtLeastInstance inst(m1, prefs);
      std::vector<Gap> sorted = prefs;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(SweepRow{m1, prefs, inst.branches(), atleast_count(inst, unlimited),
                             atleast_count(AtLeastInstance(m1, sorted), unlimited)});
      std::size_t j = len;
      while (j > 0 && prefs[j - 1] == m1) prefs[--j] = 0;
      if (j == 0) break;
      ++prefs[j - 1];
    }
  }
  return out;
}

}  // namespace ktpf
