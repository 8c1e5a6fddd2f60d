#include "ktpf/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ktpf {

namespace {

ExactTPF zero_tpf(const Order& order) {
  std::vector<std::vector<Gap>> lists;
  lists.reserve(order.types() - 1);
  for (std::size_t type = 2; type <= order.types(); ++type)
    lists.emplace_back(order.cars(type), Gap{0});
  return ExactTPF(order, std::move(lists));
}

std::uint64_t checked_u64(const BigInt& value, const char* what) {
  if (value > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(value);
}

// Lexicographic unrank of a weakly increasing tuple over {0..top}.
void unrank_multiset(std::uint64_t rank, std::size_t top, std::vector<Gap>& out) {
  const std::size_t length = out.size();
  Gap value = 0;
  for (std::size_t pos = 0; pos < length; ++pos) {
    const std::size_t rest = length - pos - 1;
    for (;; ++value) {
      // Completions of the suffix once position pos holds `value`.
      const std::uint64_t block = binomial_u64(top - value + rest, rest);
      if (rank < block) break;
      rank -= block;
    }
    out[pos] = value;
  }
}

}  // namespace

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(out);
}

// -- TpfStream ----------------------------------------------------------------

TpfStream::TpfStream(Order order) : current_(zero_tpf(order)) {}

TpfStream::TpfStream(Order order, std::uint64_t first, std::uint64_t count)
    : current_(zero_tpf(order)) {
  const std::uint64_t total = checked_u64(count_tpfs(order), "TPF count");
  if (first >= total || count == 0) {
    done_ = true;
    return;
  }
  remaining_ = std::min(count, total - first);
  // Mixed radix, last entry of the last list least significant.
  std::uint64_t rank = first;
  for (std::size_t t = current_.prefs_.size(); t-- > 0;) {
    const std::uint64_t radix = current_.order_.mu(t + 2) + 1;
    auto& list = current_.prefs_[t];
    for (std::size_t j = list.size(); j-- > 0;) {
      list[j] = rank % radix;
      rank /= radix;
    }
  }
}

void TpfStream::advance() {
  if (done_) return;
  if (remaining_ && --*remaining_ == 0) {
    done_ = true;
    return;
  }
  for (std::size_t t = current_.prefs_.size(); t-- > 0;) {
    const Gap top = current_.order_.mu(t + 2);
    auto& list = current_.prefs_[t];
    for (std::size_t j = list.size(); j-- > 0;) {
      if (list[j] < top) {
        ++list[j];
        return;
      }
      list[j] = 0;
    }
  }
  done_ = true;
}

// -- FamilyStream -------------------------------------------------------------

FamilyStream::FamilyStream(Order order) : current_(zero_tpf(order)) {}

FamilyStream::FamilyStream(Order order, std::uint64_t first, std::uint64_t count)
    : current_(zero_tpf(order)) {
  const std::uint64_t total = checked_u64(count_configurations(order), "family count");
  if (first >= total || count == 0) {
    done_ = true;
    return;
  }
  remaining_ = std::min(count, total - first);
  std::uint64_t rank = first;
  for (std::size_t t = current_.prefs_.size(); t-- > 0;) {
    const std::size_t top = current_.order_.mu(t + 2);
    auto& list = current_.prefs_[t];
    const std::uint64_t radix = binomial_u64(top + list.size(), list.size());
    unrank_multiset(rank % radix, top, list);
    rank /= radix;
  }
}

void FamilyStream::advance() {
  if (done_) return;
  if (remaining_ && --*remaining_ == 0) {
    done_ = true;
    return;
  }
  auto& lists = current_.prefs_;
  for (std::size_t t = lists.size(); t-- > 0;) {
    const Gap top = current_.order_.mu(t + 2);
    auto& list = lists[t];
    for (std::size_t j = list.size(); j-- > 0;) {
      if (list[j] < top) {
        const Gap value = list[j] + 1;
        std::fill(list.begin() + static_cast<std::ptrdiff_t>(j), list.end(), value);
        for (std::size_t later = t + 1; later < lists.size(); ++later)
          std::fill(lists[later].begin(), lists[later].end(), Gap{0});
        return;
      }
    }
  }
  done_ = true;
}

// -- ConfigStream -------------------------------------------------------------

ConfigStream::ConfigStream(Order order) : families_(std::move(order)) {
  if (!families_.done()) config_.emplace(park_simultaneous(families_.current()));
}

void ConfigStream::advance() {
  families_.advance();
  if (!families_.done()) config_.emplace(park_simultaneous(families_.current()));
}

// -- tables -------------------------------------------------------------------

FamilyTable build_family_table(const Order& order, std::uint64_t cap) {
  const BigInt total = count_tpfs(order);
  if (total > cap)
    throw BudgetExceeded("order " + format_order(order) + " has " + to_decimal(total) +
                         " TPFs, budget is " + std::to_string(cap));
  FamilyTable table;
  for (const ExactTPF& tpf : TpfStream(order)) {
    CanonicalTPF key = canonicalize(tpf);
    auto it = table.find(key);
    if (it == table.end()) {
      Configuration config = park_simultaneous(key.tpf());
      it = table.emplace(std::move(key), FamilyEntry{0, std::move(config)}).first;
    }
    ++it->second.members;
  }
  return table;
}

std::vector<ExactTPF> family_members(const ExactTPF& tpf, std::uint64_t cap) {
  const BigInt size = family_size(tpf);
  if (size > cap)
    throw BudgetExceeded("family has " + to_decimal(size) + " members, budget is " +
                         std::to_string(cap));
  auto lists = canonicalize(tpf).tpf().lists();
  std::vector<ExactTPF> out;
  out.reserve(static_cast<std::size_t>(size));
  // Odometer over lists, each list stepping through its distinct permutations.
  for (;;) {
    out.emplace_back(tpf.order(), lists);
    std::size_t t = lists.size();
    while (t > 0) {
      --t;
      if (std::next_permutation(lists[t].begin(), lists[t].end())) break;
      // next_permutation wrapped list t back to sorted; carry into t - 1.
      if (t == 0) return out;
    }
    if (lists.empty()) return out;
  }
}

std::vector<Order> compositions(std::size_t total, std::size_t max_parts) {
  std::vector<Order> out;
  std::vector<std::size_t> parts;
  // Depth-first with parts in increasing lexicographic order.
  auto recurse = [&](auto&& self, std::size_t left) -> void {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    if (parts.size() == max_parts) return;
    for (std::size_t part = 1; part <= left; ++part) {
      parts.push_back(part);
      self(self, left - part);
      parts.pop_back();
    }
  };
  if (total > 0) recurse(recurse, total);
  return out;
}

}  // namespace ktpf
