#include "ktpf/counting.hpp"

#include "ktpf/enumeration.hpp"

namespace ktpf {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  // After step i, out == C(n - k + i, i), so each division is exact.
  for (std::size_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt count_tpfs(const Order& order) {
  BigInt out = 1;
  for (std::size_t type = 2; type <= order.types(); ++type)
    out *= boost::multiprecision::pow(BigInt(order.mu(type) + 1),
                                      static_cast<unsigned>(order.cars(type)));
  return out;
}

BigInt count_configurations(const Order& order) {
  BigInt out = 1;
  for (std::size_t type = 2; type <= order.types(); ++type)
    out *= binomial(order.mu(type) + order.cars(type), order.cars(type));
  return out;
}

BigInt family_size(const ExactTPF& tpf) {
  const auto gm = generative_multiset(tpf);
  BigInt out = 1;
  for (const auto& tally : gm.per_type) {
    // m!/(a_0! a_1! ...) as a product of binomials C(a_0 + ... + a_r, a_r).
    std::size_t placed = 0;
    for (const auto& [gap, count] : tally) {
      placed += count;
      out *= binomial(placed, count);
    }
  }
  return out;
}

CountReport verify_identity(const Order& order, std::uint64_t budget) {
  CountReport report{order, count_tpfs(order), count_configurations(order), 0, 0, false, false};
  if (report.num_configurations > budget)
    throw BudgetExceeded("order " + format_order(order) + " has " +
                         to_decimal(report.num_configurations) + " families, budget is " +
                         std::to_string(budget));
  for (const ExactTPF& canonical : FamilyStream(order)) {
    report.identity_lhs += family_size(canonical);
    ++report.families_seen;
  }
  report.identity_holds = report.identity_lhs == report.total_tpfs;
  report.families_match = report.families_seen == report.num_configurations;
  return report;
}

}  // namespace ktpf
