#include <cctype>
#include <charconv>
#include <limits>
#include <string>

#include "ktpf/core.hpp"

namespace ktpf {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::size_t integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      if (start < text_.size() && text_[start] == '-')
        fail("negative integer");
      fail(start < text_.size() ? "non-integer token" : "expected integer, got end of input", start);
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail("integer out of range", start);
    // "12abc" or "1.5"
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                text_[pos_] == '.' || text_[pos_] == '_'))
      fail("non-integer token", start);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) { throw ParseError(what, at); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::size_t> comma_list(Cursor& in) {
  std::vector<std::size_t> out;
  out.push_back(in.integer());
  while (in.accept(',')) out.push_back(in.integer());
  return out;
}

template <typename Seq>
std::string join(const Seq& seq, char sep = ',') {
  std::string out;
  bool first = true;
  for (auto v : seq) {
    if (!first) out += sep;
    out += std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace

ExactTPF parse_tpf(std::string_view text) {
  Cursor in(text);
  in.expect('(');
  const std::size_t m1 = in.integer();
  std::vector<std::size_t> parts{m1};
  std::vector<std::vector<Gap>> lists;
  if (in.accept(';')) {
    do {
      in.expect('(');
      if (in.peek() == ')') in.fail("empty preference list");
      lists.push_back(comma_list(in));
      parts.push_back(lists.back().size());
      in.expect(')');
    } while (in.accept(','));
  }
  in.expect(')');
  if (!in.at_end()) in.fail("trailing input");
  return ExactTPF(Order(std::move(parts)), std::move(lists));
}

std::string format_tpf(const ExactTPF& tpf) {
  std::string out = "(" + std::to_string(tpf.order().cars(1));
  char sep = ';';
  for (const auto& list : tpf.lists()) {
    out += sep;
    out += "(" + join(list) + ")";
    sep = ',';
  }
  return out + ")";
}

Order parse_order(std::string_view text) {
  Cursor in(text);
  auto parts = comma_list(in);
  if (!in.at_end()) in.fail("trailing input");
  return Order(std::move(parts));
}

std::string format_order(const Order& order) { return join(order.parts()); }

Configuration parse_configuration(std::string_view text) {
  Cursor in(text);
  const auto values = comma_list(in);
  if (!in.at_end()) in.fail("trailing input");
  std::vector<TypeLabel> street;
  street.reserve(values.size());
  for (auto v : values) {
    if (v > std::numeric_limits<TypeLabel>::max()) throw ParseError("type label out of range", 0);
    street.push_back(static_cast<TypeLabel>(v));
  }
  return Configuration(std::move(street));
}

std::string format_configuration(const Configuration& config) { return join(config.street()); }

std::string format_multiset(const GenerativeMultiset& gm) {
  std::string out = "{";
  for (std::size_t t = 0; t < gm.per_type.size(); ++t) {
    if (t) out += ',';
    out += '{';
    for (std::size_t p = 0; p < gm.per_type[t].size(); ++p) {
      if (p) out += ',';
      out += "(" + std::to_string(gm.per_type[t][p].first) + "," +
             std::to_string(gm.per_type[t][p].second) + ")";
    }
    out += '}';
  }
  return out + "}";
}

}  // namespace ktpf
