#include "ktpf/kernels.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ktpf/enumeration.hpp"

namespace ktpf {

namespace {

struct VecHash {
  template <typename V>
  std::size_t operator()(const V& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

using Street = std::vector<TypeLabel>;
using FlatKey = std::vector<Gap>;
using FlatMultiset = std::vector<std::size_t>;

struct FamilyRecord {
  std::uint64_t members = 0;
  Street street;
  FlatMultiset multiset;
};

struct Partial {
  std::unordered_map<FlatKey, FamilyRecord, VecHash> families;
  std::unordered_set<Street, VecHash> streets;
  UniverseStats stats;
};

FlatKey flatten(const ExactTPF& tpf) {
  FlatKey out;
  for (const auto& list : tpf.lists()) out.insert(out.end(), list.begin(), list.end());
  return out;
}

FlatMultiset flatten(const GenerativeMultiset& gm) {
  FlatMultiset out;
  for (const auto& tally : gm.per_type) {
    out.push_back(tally.size());
    for (const auto& [gap, count] : tally) {
      out.push_back(gap);
      out.push_back(count);
    }
  }
  return out;
}

ExactTPF unflatten(const Order& order, const FlatKey& key) {
  std::vector<std::vector<Gap>> lists;
  auto it = key.begin();
  for (std::size_t type = 2; type <= order.types(); ++type) {
    const auto len = static_cast<std::ptrdiff_t>(order.cars(type));
    lists.emplace_back(it, it + len);
    it += len;
  }
  return ExactTPF(order, std::move(lists));
}

void visit(const ExactTPF& tpf, Partial& part) {
  auto& s = part.stats;
  ++s.tpfs;
  const Configuration sim = park_simultaneous(tpf);
  if (park_iterative(tpf) != sim) ++s.simulator_mismatches;
  const CanonicalTPF canon = canonicalize(tpf);
  if (config_to_canonical(sim) != canon) ++s.roundtrip_mismatches;

  Street street(sim.street().begin(), sim.street().end());
  FlatMultiset gm = flatten(generative_multiset(tpf));
  auto [it, fresh] = part.families.try_emplace(flatten(canon.tpf()));
  FamilyRecord& rec = it->second;
  if (fresh) {
    rec.street = street;
    rec.multiset = std::move(gm);
  } else {
    if (rec.street != street) ++s.family_config_mismatches;
    if (rec.multiset != gm) ++s.multiset_mismatches;
  }
  ++rec.members;
  part.streets.insert(std::move(street));
}

void merge_into(Partial& into, Partial&& from) {
  auto& s = into.stats;
  s.tpfs += from.stats.tpfs;
  s.simulator_mismatches += from.stats.simulator_mismatches;
  s.roundtrip_mismatches += from.stats.roundtrip_mismatches;
  s.family_config_mismatches += from.stats.family_config_mismatches;
  s.multiset_mismatches += from.stats.multiset_mismatches;
  for (auto& [key, rec] : from.families) {
    auto [it, fresh] = into.families.try_emplace(key);
    if (fresh) {
      it->second = std::move(rec);
      continue;
    }
    if (it->second.street != rec.street) ++s.family_config_mismatches;
    if (it->second.multiset != rec.multiset) ++s.multiset_mismatches;
    it->second.members += rec.members;
  }
  into.streets.merge(from.streets);
}

void require_budget(const BigInt& items, std::uint64_t budget, const Order& order) {
  if (items > budget)
    throw BudgetExceeded("order " + format_order(order) + " needs " + to_decimal(items) +
                         " items, budget is " + std::to_string(budget));
}

std::uint64_t chunk_count(std::uint64_t items) {
  const auto wanted = static_cast<std::uint64_t>(kernel_threads()) * 8;
  return std::max<std::uint64_t>(1, std::min(items, wanted));
}

}  // namespace

bool UniverseStats::consistent() const {
  return simulator_mismatches == 0 && family_config_mismatches == 0 &&
         roundtrip_mismatches == 0 && multiset_mismatches == 0 && family_size_mismatches == 0 &&
         families == distinct_configs && families == distinct_multisets;
}

int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

UniverseStats scan_universe(const Order& order, std::uint64_t budget) {
  const BigInt total_big = count_tpfs(order);
  require_budget(total_big, budget, order);
  const auto total = static_cast<std::uint64_t>(total_big);
  const std::uint64_t chunks = chunk_count(total);
  const std::uint64_t step = (total + chunks - 1) / chunks;

  std::vector<Partial> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const auto first = static_cast<std::uint64_t>(c) * step;
    for (const ExactTPF& tpf : TpfStream(order, first, step)) visit(tpf, parts[c]);
  }

  Partial merged;
  for (auto& part : parts) merge_into(merged, std::move(part));

  UniverseStats stats = merged.stats;
  stats.families = merged.families.size();
  stats.distinct_configs = merged.streets.size();
  std::unordered_set<FlatMultiset, VecHash> multisets;
  for (const auto& [key, rec] : merged.families) {
    multisets.insert(rec.multiset);
    if (family_size(unflatten(order, key)) != rec.members) ++stats.family_size_mismatches;
  }
  stats.distinct_multisets = multisets.size();
  return stats;
}

BigInt sum_family_sizes(const Order& order, std::uint64_t budget) {
  const BigInt families_big = count_configurations(order);
  require_budget(families_big, budget, order);
  const auto families = static_cast<std::uint64_t>(families_big);
  const std::uint64_t chunks = chunk_count(families);
  const std::uint64_t step = (families + chunks - 1) / chunks;

  std::vector<BigInt> partial(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const auto first = static_cast<std::uint64_t>(c) * step;
    for (const ExactTPF& canonical : FamilyStream(order, first, step))
      partial[c] += family_size(canonical);
  }
  BigInt sum = 0;
  for (const auto& p : partial) sum += p;
  return sum;
}

std::map<Configuration, std::uint64_t> atleast_branch_tally_parallel(const AtLeastInstance& inst,
                                                                     std::uint64_t budget) {
  const BigInt branches = inst.branches();
  if (branches > budget)
    throw BudgetExceeded("instance has " + to_decimal(branches) + " branches, budget is " +
                         std::to_string(budget));
  const auto& floor = inst.lower_bounds();
  if (floor.empty()) return {{park_choice(inst.m1(), {}), 1}};

  const auto choices = static_cast<std::int64_t>(inst.m1() - floor[0] + 1);
  std::vector<std::map<Configuration, std::uint64_t>> partial(static_cast<std::size_t>(choices));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < choices; ++c) {
    auto& tally = partial[static_cast<std::size_t>(c)];
    std::vector<Gap> gaps(floor);
    gaps[0] = floor[0] + static_cast<Gap>(c);
    for (;;) {
      ++tally[park_choice(inst.m1(), gaps)];
      std::size_t j = gaps.size();
      while (j > 1 && gaps[j - 1] == inst.m1()) {
        gaps[j - 1] = floor[j - 1];
        --j;
      }
      if (j == 1) break;
      ++gaps[j - 1];
    }
  }
  std::map<Configuration, std::uint64_t> merged;
  for (auto& tally : partial)
    for (auto& [street, n] : tally) merged[street] += n;
  return merged;
}

namespace reference {

UniverseStats scan_universe(const Order& order, std::uint64_t budget) {
  require_budget(count_tpfs(order), budget, order);
  struct Record {
    std::uint64_t members;
    Configuration street;
    GenerativeMultiset multiset;
  };
  std::map<CanonicalTPF, Record> families;
  std::set<Configuration> streets;
  UniverseStats s;
  for (const ExactTPF& tpf : TpfStream(order)) {
    ++s.tpfs;
    Configuration sim = park_simultaneous(tpf);
    if (park_iterative(tpf) != sim) ++s.simulator_mismatches;
    CanonicalTPF canon = canonicalize(tpf);
    if (config_to_canonical(sim) != canon) ++s.roundtrip_mismatches;
    GenerativeMultiset gm = generative_multiset(tpf);
    auto it = families.find(canon);
    if (it == families.end()) {
      families.emplace(std::move(canon), Record{1, sim, std::move(gm)});
    } else {
      ++it->second.members;
      if (it->second.street != sim) ++s.family_config_mismatches;
      if (it->second.multiset != gm) ++s.multiset_mismatches;
    }
    streets.insert(std::move(sim));
  }
  std::set<GenerativeMultiset> multisets;
  for (const auto& [key, rec] : families) {
    multisets.insert(rec.multiset);
    if (family_size(key.tpf()) != rec.members) ++s.family_size_mismatches;
  }
  s.families = families.size();
  s.distinct_configs = streets.size();
  s.distinct_multisets = multisets.size();
  return s;
}

BigInt sum_family_sizes(const Order& order, std::uint64_t budget) {
  require_budget(count_configurations(order), budget, order);
  BigInt sum = 0;
  for (const ExactTPF& canonical : FamilyStream(order)) sum += family_size(canonical);
  return sum;
}

}  // namespace reference

}  // namespace ktpf
