#include "ktpf/core.hpp"

#include <algorithm>
#include <string>

namespace ktpf {

namespace {

void require_valid(const ExactTPF& tpf) {
  const auto violations = validate(tpf);
  if (violations.empty()) return;
  const auto& v = violations.front();
  throw InvalidTpf("preference " + std::to_string(v.value) + " of car " + std::to_string(v.index) +
                   " of type " + std::to_string(v.type) + " exceeds gap bound " +
                   std::to_string(v.bound));
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

Order::Order(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidOrder("order needs at least one part");
  prefix_.reserve(parts_.size() + 1);
  prefix_.push_back(0);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0)
      throw InvalidOrder("order part m_" + std::to_string(i + 1) + " is zero");
    prefix_.push_back(prefix_.back() + parts_[i]);
  }
}

ExactTPF::ExactTPF(Order order, std::vector<std::vector<Gap>> prefs)
    : order_(std::move(order)), prefs_(std::move(prefs)) {
  if (prefs_.size() != order_.types() - 1)
    throw InvalidTpf("expected " + std::to_string(order_.types() - 1) + " preference lists, got " +
                     std::to_string(prefs_.size()));
  for (std::size_t t = 0; t < prefs_.size(); ++t) {
    if (prefs_[t].size() != order_.cars(t + 2))
      throw InvalidTpf("preference list of type " + std::to_string(t + 2) + " has length " +
                       std::to_string(prefs_[t].size()) + ", order says " +
                       std::to_string(order_.cars(t + 2)));
  }
}

Configuration::Configuration(std::vector<TypeLabel> street) : street_(std::move(street)) {
  if (street_.empty()) throw std::invalid_argument("empty configuration");
  const TypeLabel top = *std::max_element(street_.begin(), street_.end());
  std::vector<bool> seen(top + 1, false);
  for (TypeLabel label : street_) {
    if (label == 0) throw std::invalid_argument("type labels are 1-based");
    seen[label] = true;
  }
  for (TypeLabel label = 1; label <= top; ++label)
    if (!seen[label])
      throw std::invalid_argument("type " + std::to_string(label) + " missing from configuration");
}

Order Configuration::order() const {
  const TypeLabel top = *std::max_element(street_.begin(), street_.end());
  std::vector<std::size_t> parts(top, 0);
  for (TypeLabel label : street_) ++parts[label - 1];
  return Order(std::move(parts));
}

CanonicalTPF::CanonicalTPF(ExactTPF tpf) : tpf_(std::move(tpf)) {
  for (const auto& list : tpf_.lists())
    if (!std::is_sorted(list.begin(), list.end()))
      throw InvalidTpf("canonical form requires weakly increasing preference lists");
}

std::vector<Violation> validate(const ExactTPF& tpf) {
  std::vector<Violation> out;
  const Order& order = tpf.order();
  for (std::size_t type = 2; type <= order.types(); ++type) {
    const auto list = tpf.prefs(type);
    const std::size_t bound = order.mu(type);
    for (std::size_t j = 0; j < list.size(); ++j)
      if (list[j] > bound) out.push_back({type, j + 1, list[j], bound});
  }
  return out;
}

bool is_valid(const ExactTPF& tpf) {
  const Order& order = tpf.order();
  for (std::size_t type = 2; type <= order.types(); ++type)
    for (Gap g : tpf.prefs(type))
      if (g > order.mu(type)) return false;
  return true;
}

Configuration park_simultaneous(const ExactTPF& tpf) {
  require_valid(tpf);
  const Order& order = tpf.order();
  std::vector<TypeLabel> street(order.cars(1), 1);
  std::vector<TypeLabel> next;
  std::vector<std::size_t> per_gap;
  next.reserve(order.total());
  for (std::size_t type = 2; type <= order.types(); ++type) {
    per_gap.assign(order.mu(type) + 1, 0);
    for (Gap g : tpf.prefs(type)) ++per_gap[g];
    // Every car already on the street has a lower type.
    const auto label = static_cast<TypeLabel>(type);
    next.clear();
    next.insert(next.end(), per_gap[0], label);
    for (std::size_t pos = 0; pos < street.size(); ++pos) {
      next.push_back(street[pos]);
      next.insert(next.end(), per_gap[pos + 1], label);
    }
    street.swap(next);
  }
  return Configuration(std::move(street));
}

Configuration park_iterative(const ExactTPF& tpf) {
  require_valid(tpf);
  const Order& order = tpf.order();
  std::vector<TypeLabel> street(order.cars(1), 1);
  street.reserve(order.total());
  for (std::size_t type = 2; type <= order.types(); ++type) {
    const auto label = static_cast<TypeLabel>(type);
    for (Gap g : tpf.prefs(type)) {
      // Walk past g lower-type cars, then past same-type cars already in the gap.
      std::size_t pos = 0;
      std::size_t lower = 0;
      while (lower < g) {
        if (street[pos] < label) ++lower;
        ++pos;
      }
      while (pos < street.size() && street[pos] == label) ++pos;
      street.insert(street.begin() + static_cast<std::ptrdiff_t>(pos), label);
    }
  }
  return Configuration(std::move(street));
}

CanonicalTPF canonicalize(const ExactTPF& tpf) {
  auto lists = tpf.lists();
  for (auto& list : lists) std::sort(list.begin(), list.end());
  return CanonicalTPF(ExactTPF(tpf.order(), std::move(lists)));
}

bool is_parking_permutation(const ExactTPF& a, const ExactTPF& b) {
  return a.order() == b.order() && canonicalize(a) == canonicalize(b);
}

GenerativeMultiset generative_multiset(const ExactTPF& tpf) {
  require_valid(tpf);
  GenerativeMultiset gm;
  gm.per_type.reserve(tpf.lists().size());
  for (auto list : tpf.lists()) {
    std::sort(list.begin(), list.end());
    TypeMultiset tally;
    for (Gap g : list) {
      if (!tally.empty() && tally.back().first == g)
        ++tally.back().second;
      else
        tally.emplace_back(g, 1);
    }
    gm.per_type.push_back(std::move(tally));
  }
  return gm;
}

CanonicalTPF config_to_canonical(const Configuration& config) {
  Order order = config.order();
  const auto street = config.street();
  std::vector<std::vector<Gap>> lists(order.types() - 1);
  for (std::size_t type = 2; type <= order.types(); ++type) {
    auto& list = lists[type - 2];
    list.reserve(order.cars(type));
    Gap lower = 0;
    for (TypeLabel label : street) {
      if (label < type)
        ++lower;
      else if (label == type)
        list.push_back(lower);
    }
  }
  // Scanning left to right already yields weakly increasing lists.
  return CanonicalTPF(ExactTPF(std::move(order), std::move(lists)));
}

}  // namespace ktpf
