#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ktpf/core.hpp"
#include "ktpf/counting.hpp"

namespace ktpf {

inline constexpr std::uint64_t kDefaultBranchBudget = 1'000'000;

/// Two-type instance under "at least" semantics: car j of type 2 may take any
/// gap in lower_bounds[j]..m1.
class AtLeastInstance {
 public:
  /// Throws InvalidOrder if m1 == 0, InvalidTpf if some bound exceeds m1.
  AtLeastInstance(std::size_t m1, std::vector<Gap> lower_bounds);

  std::size_t m1() const noexcept { return m1_; }
  const std::vector<Gap>& lower_bounds() const noexcept { return bounds_; }
  /// prod_j (m1 - a_j + 1)
  BigInt branches() const;

 private:
  std::size_t m1_;
  std::vector<Gap> bounds_;
};

struct Outcome {
  Configuration street;
  BigInt multiplicity;  // choice branches that produce this street
};

struct OutcomeSet {
  BigInt branches;
  std::vector<Outcome> outcomes;  // sorted by street

  std::size_t count() const noexcept { return outcomes.size(); }
  bool contains(const Configuration& street) const;
};

/// Distinct streets, found by enumerating reachable gap multisets directly.
/// Throws BudgetExceeded when the branch count exceeds `budget`.
OutcomeSet atleast_outcomes(const AtLeastInstance& inst, std::uint64_t budget = kDefaultBranchBudget);

/// Number of distinct streets, counted without materialising them.
BigInt atleast_count(const AtLeastInstance& inst, std::uint64_t budget = kDefaultBranchBudget);

/// Street for one explicit gap choice per car, parked car by car.
Configuration park_choice(std::size_t m1, const std::vector<Gap>& gaps);

/// Naive oracle: simulates every branch and tallies the streets.
std::map<Configuration, std::uint64_t> atleast_branch_tally(
    const AtLeastInstance& inst, std::uint64_t budget = kDefaultBranchBudget);

struct SweepRow {
  std::size_t m1;
  std::vector<Gap> prefs;
  BigInt branches;
  BigInt distinct_count;
  BigInt sorted_distinct_count;  // same tuple rearranged weakly increasing
  bool permutation_sensitive() const { return distinct_count != sorted_distinct_count; }
};

/// Every tuple over {0..m1} with length in [min_len, max_len], shorter tuples
/// first, lexicographic within a length. Throws BudgetExceeded when the row
/// count exceeds `budget`.
std::vector<SweepRow> atleast_sweep(std::size_t m1, std::size_t min_len, std::size_t max_len,
                                    std::uint64_t budget = kDefaultBranchBudget);

}  // namespace ktpf
