#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "ktpf/core.hpp"

namespace ktpf {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

std::string to_decimal(const BigInt& value);

/// C(n, k) computed multiplicatively.
BigInt binomial(std::size_t n, std::size_t k);

/// prod_{i=2..k} (1 + mu_i)^{m_i}; 1 when k == 1.
BigInt count_tpfs(const Order& order);

/// L = prod_{i=1..k} C(m_1 + ... + m_i, m_i).
BigInt count_configurations(const Order& order);

/// Number of parking permutations of `tpf`: prod_i m_i! / prod_gap a_gap!.
/// Throws InvalidTpf when a preference is out of range.
BigInt family_size(const ExactTPF& tpf);

struct CountReport {
  Order order;
  BigInt total_tpfs;          // closed form
  BigInt num_configurations;  // L
  BigInt families_seen;       // canonical forms enumerated
  BigInt identity_lhs;        // sum of family sizes over all families
  bool identity_holds = false;
  bool families_match = false;  // families_seen == num_configurations
};

/// Sums family_size over every canonical form of `order` and compares with
/// count_tpfs. Throws BudgetExceeded when L exceeds `budget`.
CountReport verify_identity(const Order& order, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace ktpf
