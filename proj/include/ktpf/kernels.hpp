#pragma once

// Exhaustive scans over whole universes. The parallel versions split the rank
// space into chunks for OpenMP; ktpf::reference holds the plain serial loops
// they are tested against.

#include <cstdint>
#include <map>

#include "ktpf/atleast.hpp"
#include "ktpf/core.hpp"
#include "ktpf/counting.hpp"

namespace ktpf {

struct UniverseStats {
  std::uint64_t tpfs = 0;
  std::uint64_t families = 0;            // distinct canonical forms
  std::uint64_t distinct_configs = 0;    // distinct parked streets
  std::uint64_t distinct_multisets = 0;  // distinct generative multisets
  std::uint64_t simulator_mismatches = 0;      // park_iterative != park_simultaneous
  std::uint64_t family_config_mismatches = 0;  // member parks away from its canonical form
  std::uint64_t roundtrip_mismatches = 0;      // config_to_canonical(park(a)) != canonicalize(a)
  std::uint64_t multiset_mismatches = 0;       // one family, two generative multisets
  std::uint64_t family_size_mismatches = 0;    // member count != family_size

  /// Zero mismatches and the family/street/multiset counts all agree.
  bool consistent() const;

  friend bool operator==(const UniverseStats&, const UniverseStats&) = default;
};

/// Parks every TPF of `order` with both simulators and cross-checks the family,
/// round-trip and generative-multiset correspondences. Throws BudgetExceeded
/// when count_tpfs(order) > budget.
UniverseStats scan_universe(const Order& order, std::uint64_t budget = kDefaultEnumerationBudget);

/// Sum of family_size over all canonical forms of `order`.
BigInt sum_family_sizes(const Order& order, std::uint64_t budget = kDefaultEnumerationBudget);

/// Per-branch simulation, split over the first car's choices.
std::map<Configuration, std::uint64_t> atleast_branch_tally_parallel(
    const AtLeastInstance& inst, std::uint64_t budget = kDefaultBranchBudget);

/// Worker threads the parallel kernels will use.
int kernel_threads();

namespace reference {

UniverseStats scan_universe(const Order& order, std::uint64_t budget = kDefaultEnumerationBudget);
BigInt sum_family_sizes(const Order& order, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace reference

}  // namespace ktpf
