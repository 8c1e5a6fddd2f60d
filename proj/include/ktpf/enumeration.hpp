#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <type_traits>

#include "ktpf/core.hpp"
#include "ktpf/counting.hpp"

namespace ktpf {

/// Input iterator over any stream exposing done()/current()/advance().
template <typename Stream>
class StreamIterator {
 public:
  using value_type = std::remove_cvref_t<decltype(std::declval<const Stream&>().current())>;
  using difference_type = std::ptrdiff_t;

  StreamIterator() = default;
  explicit StreamIterator(Stream* stream) : stream_(stream) {}

  const value_type& operator*() const { return stream_->current(); }
  StreamIterator& operator++() {
    stream_->advance();
    return *this;
  }
  void operator++(int) { stream_->advance(); }
  friend bool operator==(const StreamIterator& it, std::default_sentinel_t) {
    return it.stream_->done();
  }

 private:
  Stream* stream_ = nullptr;
};

/// Every valid exact TPF of an order, in lexicographic order of the
/// concatenated lists (P_2, ..., P_k). The current item is updated in place.
class TpfStream {
 public:
  explicit TpfStream(Order order);
  /// Items with lexicographic rank in [first, first + count), clipped to the
  /// universe. Requires count_tpfs(order) to fit in 64 bits.
  TpfStream(Order order, std::uint64_t first, std::uint64_t count);

  bool done() const noexcept { return done_; }
  const ExactTPF& current() const noexcept { return current_; }
  void advance();

  StreamIterator<TpfStream> begin() { return StreamIterator<TpfStream>(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  ExactTPF current_;
  bool done_ = false;
  std::optional<std::uint64_t> remaining_;
};

/// Every canonical form (one per family) of an order, lexicographically.
/// Weakly increasing lists are generated directly, never filtered.
class FamilyStream {
 public:
  explicit FamilyStream(Order order);
  /// Rank slice, as for TpfStream. Requires L to fit in 64 bits.
  FamilyStream(Order order, std::uint64_t first, std::uint64_t count);

  bool done() const noexcept { return done_; }
  /// Always weakly increasing; wrap in CanonicalTPF when a typed key is needed.
  const ExactTPF& current() const noexcept { return current_; }
  void advance();

  StreamIterator<FamilyStream> begin() { return StreamIterator<FamilyStream>(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  ExactTPF current_;
  bool done_ = false;
  std::optional<std::uint64_t> remaining_;
};

/// park_simultaneous over FamilyStream; every item distinct.
class ConfigStream {
 public:
  explicit ConfigStream(Order order);

  bool done() const noexcept { return families_.done(); }
  const Configuration& current() const noexcept { return *config_; }
  const ExactTPF& canonical() const noexcept { return families_.current(); }
  void advance();

  StreamIterator<ConfigStream> begin() { return StreamIterator<ConfigStream>(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  FamilyStream families_;
  std::optional<Configuration> config_;
};

inline TpfStream enumerate_tpfs(const Order& order) { return TpfStream(order); }
inline FamilyStream enumerate_families(const Order& order) { return FamilyStream(order); }
inline ConfigStream enumerate_configurations(const Order& order) { return ConfigStream(order); }

struct FamilyEntry {
  std::uint64_t members = 0;
  Configuration config;
};

using FamilyTable = std::map<CanonicalTPF, FamilyEntry>;

/// Groups every TPF of `order` under its canonical form. Throws
/// BudgetExceeded when count_tpfs(order) > cap.
FamilyTable build_family_table(const Order& order, std::uint64_t cap = kDefaultEnumerationBudget);

/// All distinct parking permutations of `tpf` (including itself), sorted.
/// Throws BudgetExceeded when the family is larger than cap.
std::vector<ExactTPF> family_members(const ExactTPF& tpf,
                                     std::uint64_t cap = kDefaultEnumerationBudget);

/// All compositions of `total` into at most `max_parts` parts, in
/// lexicographic order of the parts.
std::vector<Order> compositions(std::size_t total, std::size_t max_parts);

/// C(n, k) in 64 bits; throws std::overflow_error when it does not fit.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

}  // namespace ktpf
