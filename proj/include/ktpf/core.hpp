#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ktpf {

/// Gap index for a car of type i: the slot right after the gap-th parked car
/// of type < i, 0 meaning before all of them. Valid range is 0..mu(i).
using Gap = std::size_t;

/// 1-based car type.
using TypeLabel = std::uint32_t;

class InvalidOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidTpf : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Composition (m_1, ..., m_k) of M. Types are addressed 1-based.
class Order {
 public:
  /// Throws InvalidOrder on an empty composition or a zero part.
  explicit Order(std::vector<std::size_t> parts);

  std::size_t types() const noexcept { return parts_.size(); }
  std::size_t total() const noexcept { return prefix_.back(); }
  std::size_t cars(std::size_t type) const { return parts_.at(type - 1); }
  /// Number of cars of type < `type`; mu(1) == 0.
  std::size_t mu(std::size_t type) const { return prefix_.at(type - 1); }
  const std::vector<std::size_t>& parts() const noexcept { return parts_; }

  friend bool operator==(const Order&, const Order&) = default;
  friend auto operator<=>(const Order& a, const Order& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<std::size_t> parts_;
  std::vector<std::size_t> prefix_;  // prefix_[i] = m_1 + ... + m_i
};

/// An exact k-typed parking function (m_1; P_2, ..., P_k). Only the structure
/// is enforced on construction; preference bounds are checked by validate().
class ExactTPF {
 public:
  /// `prefs[t]` is the preference list of type t + 2. Throws InvalidTpf when
  /// the list count or a list length disagrees with the order.
  ExactTPF(Order order, std::vector<std::vector<Gap>> prefs);

  const Order& order() const noexcept { return order_; }
  /// Preference list of `type`, 2 <= type <= k.
  std::span<const Gap> prefs(std::size_t type) const { return prefs_.at(type - 2); }
  const std::vector<std::vector<Gap>>& lists() const noexcept { return prefs_; }

  friend bool operator==(const ExactTPF&, const ExactTPF&) = default;
  friend auto operator<=>(const ExactTPF& a, const ExactTPF& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.prefs_ <=> b.prefs_;
  }

 private:
  friend class TpfStream;
  friend class FamilyStream;
  Order order_;
  std::vector<std::vector<Gap>> prefs_;
};

/// A resulting street: one type label per spot, left to right.
class Configuration {
 public:
  /// Throws std::invalid_argument unless every label in 1..max occurs.
  explicit Configuration(std::vector<TypeLabel> street);

  std::span<const TypeLabel> street() const noexcept { return street_; }
  std::size_t size() const noexcept { return street_.size(); }
  /// Order recovered by counting labels.
  Order order() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::vector<TypeLabel> street_;
};

/// Family representative: every preference list weakly increasing.
class CanonicalTPF {
 public:
  /// Throws InvalidTpf if some list is not weakly increasing.
  explicit CanonicalTPF(ExactTPF tpf);

  const ExactTPF& tpf() const noexcept { return tpf_; }
  const Order& order() const noexcept { return tpf_.order(); }

  friend bool operator==(const CanonicalTPF&, const CanonicalTPF&) = default;
  friend auto operator<=>(const CanonicalTPF&, const CanonicalTPF&) = default;

 private:
  ExactTPF tpf_;
};

struct Violation {
  std::size_t type;   // i
  std::size_t index;  // j, 1-based within P_i
  Gap value;
  std::size_t bound;  // mu_i

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Per type i >= 2, the pairs (gap, count) with count > 0, ascending by gap.
using TypeMultiset = std::vector<std::pair<Gap, std::size_t>>;

struct GenerativeMultiset {
  std::vector<TypeMultiset> per_type;  // per_type[t] describes type t + 2

  friend bool operator==(const GenerativeMultiset&, const GenerativeMultiset&) = default;
  friend auto operator<=>(const GenerativeMultiset&, const GenerativeMultiset&) = default;
};

// -- text forms ---------------------------------------------------------------

/// Grammar: tpf := "(" int (";" list ("," list)*)? ")", list := "(" int ("," int)* ")".
/// Whitespace between tokens is ignored. Bounds are not checked.
ExactTPF parse_tpf(std::string_view text);
std::string format_tpf(const ExactTPF& tpf);

/// Comma-separated positive integers, e.g. "4,5".
Order parse_order(std::string_view text);
std::string format_order(const Order& order);

/// Comma-separated labels, e.g. "2,1,1".
Configuration parse_configuration(std::string_view text);
std::string format_configuration(const Configuration& config);

/// "{{(1,1),(2,1)},{(0,1)}}"
std::string format_multiset(const GenerativeMultiset& gm);

// -- operations ---------------------------------------------------------------

std::vector<Violation> validate(const ExactTPF& tpf);
bool is_valid(const ExactTPF& tpf);

/// Inserts each type's cars into their gaps in one pass per type.
Configuration park_simultaneous(const ExactTPF& tpf);

/// Parks one car at a time in list order.
Configuration park_iterative(const ExactTPF& tpf);

CanonicalTPF canonicalize(const ExactTPF& tpf);

/// Same order and every list a rearrangement of the corresponding list.
bool is_parking_permutation(const ExactTPF& a, const ExactTPF& b);

GenerativeMultiset generative_multiset(const ExactTPF& tpf);

/// Inverse of parking up to family: the canonical form that parks to `config`.
CanonicalTPF config_to_canonical(const Configuration& config);

}  // namespace ktpf
