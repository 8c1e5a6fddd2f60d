#include "ktpf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "ktpf/atleast.hpp"
#include "ktpf/core.hpp"
#include "ktpf/counting.hpp"
#include "ktpf/enumeration.hpp"
#include "ktpf/kernels.hpp"

namespace ktpf::cli {

namespace {

using nlohmann::json;

enum class Format { kPlain, kJson, kCsv };

/// Thrown for invariant failures the CLI reports with exit code 1.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  Format format = Format::kPlain;
  std::uint64_t budget = 0;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename... Fields>
void csv_row(std::ostream& os, const Fields&... fields) {
  bool first = true;
  ((os << (first ? "" : ",") << csv_field(fields), first = false), ...);
  os << '\n';
}

json labels(const Configuration& config) {
  return json(std::vector<TypeLabel>(config.street().begin(), config.street().end()));
}

json multiset_json(const GenerativeMultiset& gm) {
  json out = json::array();
  for (const auto& tally : gm.per_type) {
    json t = json::array();
    for (const auto& [gap, count] : tally) t.push_back({gap, count});
    out.push_back(std::move(t));
  }
  return out;
}

std::string join_semicolon(const std::vector<Gap>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(values[i]);
  }
  return out;
}

// parse_order rejects zeros; lower bounds may be zero, so parse by hand.
std::vector<Gap> parse_bounds(const std::string& text) {
  std::vector<Gap> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find(',', start), text.size());
    std::string token = text.substr(start, stop - start);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    Gap value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("bad preference '" + token + "'", start);
    out.push_back(value);
    start = stop + 1;
  }
  return out;
}

// -- subcommands --------------------------------------------------------------

void cmd_park(const Context& ctx, const std::string& text, const std::string& method,
              std::ostream& os) {
  const ExactTPF tpf = parse_tpf(text);
  std::optional<Configuration> sim, iter;
  if (method != "iter") sim = park_simultaneous(tpf);
  if (method != "sim") iter = park_iterative(tpf);

  switch (ctx.format) {
    case Format::kPlain:
      if (method == "both") {
        os << "sim " << format_configuration(*sim) << '\n'
           << "iter " << format_configuration(*iter) << '\n';
      } else {
        os << format_configuration(sim ? *sim : *iter) << '\n';
      }
      break;
    case Format::kJson: {
      json j{{"tpf", format_tpf(tpf)}};
      if (sim) j["sim"] = labels(*sim);
      if (iter) j["iter"] = labels(*iter);
      j["config"] = labels(sim ? *sim : *iter);
      os << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      csv_row(os, std::string("tpf"), std::string("method"), std::string("config"));
      if (sim) csv_row(os, format_tpf(tpf), std::string("sim"), format_configuration(*sim));
      if (iter) csv_row(os, format_tpf(tpf), std::string("iter"), format_configuration(*iter));
      break;
  }
  if (sim && iter && *sim != *iter) throw CheckFailed("simulators disagree");
}

void print_number(const Context& ctx, const std::string& key, const std::string& subject,
                  const std::string& subject_key, const BigInt& value, std::ostream& os) {
  switch (ctx.format) {
    case Format::kPlain:
      os << to_decimal(value) << '\n';
      break;
    case Format::kJson:
      os << json{{subject_key, subject}, {key, to_decimal(value)}}.dump() << '\n';
      break;
    case Format::kCsv:
      csv_row(os, subject_key, key);
      csv_row(os, subject, to_decimal(value));
      break;
  }
}

void cmd_gm(const Context& ctx, const std::string& text, std::ostream& os) {
  const ExactTPF tpf = parse_tpf(text);
  const auto gm = generative_multiset(tpf);
  switch (ctx.format) {
    case Format::kPlain:
      os << format_multiset(gm) << '\n';
      break;
    case Format::kJson:
      os << json{{"tpf", format_tpf(tpf)}, {"gm", multiset_json(gm)}}.dump() << '\n';
      break;
    case Format::kCsv:
      csv_row(os, std::string("tpf"), std::string("gm"));
      csv_row(os, format_tpf(tpf), format_multiset(gm));
      break;
  }
}

void emit_item(const Context& ctx, const ExactTPF& tpf, const ExactTPF& canonical,
               const Configuration& config, std::ostream& os) {
  switch (ctx.format) {
    case Format::kJson:
      os << json{{"tpf", format_tpf(tpf)},
                 {"canonical", format_tpf(canonical)},
                 {"config", labels(config)}}
                .dump()
         << '\n';
      break;
    case Format::kCsv:
      csv_row(os, format_tpf(tpf), format_tpf(canonical), format_configuration(config));
      break;
    case Format::kPlain:
      os << format_tpf(tpf) << ' ' << format_tpf(canonical) << ' '
         << format_configuration(config) << '\n';
      break;
  }
}

void cmd_enumerate(const Context& ctx, const std::string& order_text, const std::string& what,
                   std::ostream& os) {
  const Order order = parse_order(order_text);
  const BigInt items = what == "tpfs" ? count_tpfs(order) : count_configurations(order);
  if (items > ctx.budget)
    throw BudgetExceeded("enumeration of " + to_decimal(items) + " items exceeds budget " +
                         std::to_string(ctx.budget));
  if (ctx.format == Format::kCsv)
    csv_row(os, std::string("tpf"), std::string("canonical"), std::string("config"));

  std::uint64_t total = 0;
  if (what == "tpfs") {
    for (const ExactTPF& tpf : TpfStream(order)) {
      emit_item(ctx, tpf, canonicalize(tpf).tpf(), park_simultaneous(tpf), os);
      ++total;
    }
  } else if (what == "families") {
    for (const ExactTPF& canonical : FamilyStream(order)) {
      emit_item(ctx, canonical, canonical, park_simultaneous(canonical), os);
      ++total;
    }
  } else {
    ConfigStream configs(order);
    for (; !configs.done(); configs.advance()) {
      emit_item(ctx, configs.canonical(), configs.canonical(), configs.current(), os);
      ++total;
    }
  }
  switch (ctx.format) {
    case Format::kJson:
      os << json{{"total", std::to_string(total)}}.dump() << '\n';
      break;
    case Format::kCsv:
      break;
    case Format::kPlain:
      os << "total " << total << '\n';
      break;
  }
}

void cmd_family(const Context& ctx, const std::string& text, const std::string& order_text,
                std::ostream& os) {
  if (!order_text.empty()) {
    const FamilyTable table = build_family_table(parse_order(order_text), ctx.budget);
    if (ctx.format == Format::kCsv)
      csv_row(os, std::string("canonical"), std::string("members"), std::string("config"));
    for (const auto& [key, entry] : table) {
      switch (ctx.format) {
        case Format::kPlain:
          os << format_tpf(key.tpf()) << ' ' << entry.members << ' '
             << format_configuration(entry.config) << '\n';
          break;
        case Format::kJson:
          os << json{{"canonical", format_tpf(key.tpf())},
                     {"members", std::to_string(entry.members)},
                     {"config", labels(entry.config)}}
                    .dump()
             << '\n';
          break;
        case Format::kCsv:
          csv_row(os, format_tpf(key.tpf()), std::to_string(entry.members),
                  format_configuration(entry.config));
          break;
      }
    }
    return;
  }

  const ExactTPF tpf = parse_tpf(text);
  const auto members = family_members(tpf, ctx.budget);
  const Configuration config = park_simultaneous(tpf);
  switch (ctx.format) {
    case Format::kPlain:
      for (const auto& m : members) os << format_tpf(m) << '\n';
      os << "size " << members.size() << " config " << format_configuration(config) << '\n';
      break;
    case Format::kJson: {
      json list = json::array();
      for (const auto& m : members) list.push_back(format_tpf(m));
      os << json{{"tpf", format_tpf(tpf)},
                 {"canonical", format_tpf(canonicalize(tpf).tpf())},
                 {"size", std::to_string(members.size())},
                 {"config", labels(config)},
                 {"members", std::move(list)}}
                .dump()
         << '\n';
      break;
    }
    case Format::kCsv:
      csv_row(os, std::string("member"));
      for (const auto& m : members) csv_row(os, format_tpf(m));
      break;
  }
}

struct VerifyRow {
  std::optional<CountReport> report;
  std::optional<UniverseStats> universe;
  std::string budget_error;
};

void cmd_verify(const Context& ctx, std::size_t max_m, std::size_t max_k, bool exhaustive,
                std::ostream& os) {
  std::vector<Order> orders;
  for (std::size_t total = 1; total <= max_m; ++total)
    for (auto& order : compositions(total, max_k)) orders.push_back(std::move(order));

  std::vector<VerifyRow> rows(orders.size());
  // Each order is independent; rows are printed afterwards in canonical order.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(orders.size()); ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    try {
      row.report = verify_identity(orders[i], ctx.budget);
      if (exhaustive) row.universe = reference::scan_universe(orders[i], ctx.budget);
    } catch (const BudgetExceeded& e) {
      row.budget_error = e.what();
    }
  }
  for (const auto& row : rows)
    if (!row.budget_error.empty()) throw BudgetExceeded(row.budget_error);

  if (ctx.format == Format::kCsv) {
    if (exhaustive)
      csv_row(os, std::string("order"), std::string("total_tpfs"), std::string("identity_lhs"),
              std::string("num_configurations"), std::string("families_seen"),
              std::string("identity_holds"), std::string("tpfs_enumerated"),
              std::string("distinct_configs"), std::string("universe_consistent"));
    else
      csv_row(os, std::string("order"), std::string("total_tpfs"), std::string("identity_lhs"),
              std::string("num_configurations"), std::string("families_seen"),
              std::string("identity_holds"));
  }
  std::size_t failures = 0;
  for (const auto& row : rows) {
    const CountReport& r = *row.report;
    bool ok = r.identity_holds && r.families_match;
    if (row.universe)
      ok = ok && row.universe->consistent() && row.universe->tpfs == r.total_tpfs &&
           row.universe->distinct_configs == r.num_configurations;
    if (!ok) ++failures;
    const std::string holds = r.identity_holds ? "true" : "false";
    switch (ctx.format) {
      case Format::kPlain:
        os << '(' << format_order(r.order) << ") lhs=" << to_decimal(r.identity_lhs)
           << " rhs=" << to_decimal(r.total_tpfs) << " L=" << to_decimal(r.num_configurations)
           << " families=" << to_decimal(r.families_seen) << " identity_holds=" << holds;
        if (row.universe)
          os << " enumerated=" << row.universe->tpfs
             << " distinct_configs=" << row.universe->distinct_configs
             << " consistent=" << (row.universe->consistent() ? "true" : "false");
        os << '\n';
        break;
      case Format::kJson: {
        json j{{"order", format_order(r.order)},
               {"total_tpfs", to_decimal(r.total_tpfs)},
               {"num_configurations", to_decimal(r.num_configurations)},
               {"families_seen", to_decimal(r.families_seen)},
               {"identity_lhs", to_decimal(r.identity_lhs)},
               {"identity_holds", r.identity_holds}};
        if (row.universe) {
          j["tpfs_enumerated"] = std::to_string(row.universe->tpfs);
          j["distinct_configs"] = std::to_string(row.universe->distinct_configs);
          j["universe_consistent"] = row.universe->consistent();
        }
        os << j.dump() << '\n';
        break;
      }
      case Format::kCsv:
        if (row.universe)
          csv_row(os, format_order(r.order), to_decimal(r.total_tpfs), to_decimal(r.identity_lhs),
                  to_decimal(r.num_configurations), to_decimal(r.families_seen), holds,
                  std::to_string(row.universe->tpfs),
                  std::to_string(row.universe->distinct_configs),
                  std::string(row.universe->consistent() ? "true" : "false"));
        else
          csv_row(os, format_order(r.order), to_decimal(r.total_tpfs), to_decimal(r.identity_lhs),
                  to_decimal(r.num_configurations), to_decimal(r.families_seen), holds);
        break;
    }
  }
  if (ctx.format == Format::kPlain)
    os << "orders " << rows.size() << " failures " << failures << '\n';
  if (failures) throw CheckFailed(std::to_string(failures) + " orders failed verification");
}

void sweep_header(const Context& ctx, std::ostream& os) {
  if (ctx.format != Format::kJson)
    csv_row(os, std::string("m1"), std::string("prefs"), std::string("branches"),
            std::string("distinct_count"), std::string("sorted_distinct_count"),
            std::string("permutation_sensitive"));
}

void sweep_line(const Context& ctx, const SweepRow& row, std::ostream& os) {
  const std::string flag = row.permutation_sensitive() ? "true" : "false";
  if (ctx.format == Format::kJson) {
    os << json{{"m1", std::to_string(row.m1)},
               {"prefs", join_semicolon(row.prefs)},
               {"branches", to_decimal(row.branches)},
               {"distinct_count", to_decimal(row.distinct_count)},
               {"sorted_distinct_count", to_decimal(row.sorted_distinct_count)},
               {"permutation_sensitive", row.permutation_sensitive()}}
              .dump()
       << '\n';
  } else {
    csv_row(os, std::to_string(row.m1), join_semicolon(row.prefs), to_decimal(row.branches),
            to_decimal(row.distinct_count), to_decimal(row.sorted_distinct_count), flag);
  }
}

struct AtLeastArgs {
  std::size_t m1 = 0;
  std::string prefs;
  bool sweep = false;
  std::optional<std::size_t> len, min_len, max_len;
  bool naive = false;
  bool count_only = false;
};

void cmd_atleast(const Context& ctx, const AtLeastArgs& args, std::ostream& os) {
  if (args.sweep) {
    std::size_t lo = 0, hi = 0;
    if (args.len) {
      lo = hi = *args.len;
    } else {
      lo = args.min_len.value_or(0);
      hi = args.max_len.value_or(lo);
    }
    if (lo > hi) throw ParseError("--min-len exceeds --max-len", 0);
    const auto rows = atleast_sweep(args.m1, lo, hi, ctx.budget);
    sweep_header(ctx, os);
    for (const auto& row : rows) sweep_line(ctx, row, os);
    return;
  }

  const AtLeastInstance inst(args.m1, parse_bounds(args.prefs));
  if (args.count_only) {
    const BigInt count = atleast_count(inst, ctx.budget);
    std::vector<Gap> sorted = inst.lower_bounds();
    std::sort(sorted.begin(), sorted.end());
    const SweepRow row{inst.m1(), inst.lower_bounds(), inst.branches(), count,
                       atleast_count(AtLeastInstance(inst.m1(), sorted), ctx.budget)};
    if (ctx.format == Format::kPlain) {
      os << to_decimal(count) << '\n';
    } else {
      sweep_header(ctx, os);
      sweep_line(ctx, row, os);
    }
    return;
  }

  std::vector<Outcome> outcomes;
  BigInt branches = inst.branches();
  if (args.naive) {
    for (auto& [street, n] : atleast_branch_tally_parallel(inst, ctx.budget))
      outcomes.push_back(Outcome{street, n});
  } else {
    outcomes = atleast_outcomes(inst, ctx.budget).outcomes;
  }

  switch (ctx.format) {
    case Format::kPlain:
      for (const auto& o : outcomes)
        os << format_configuration(o.street) << ' ' << to_decimal(o.multiplicity) << '\n';
      os << "distinct " << outcomes.size() << " branches " << to_decimal(branches) << '\n';
      break;
    case Format::kJson: {
      json list = json::array();
      for (const auto& o : outcomes)
        list.push_back({{"config", labels(o.street)}, {"multiplicity", to_decimal(o.multiplicity)}});
      os << json{{"m1", std::to_string(inst.m1())},
                 {"prefs", join_semicolon(inst.lower_bounds())},
                 {"branches", to_decimal(branches)},
                 {"distinct_count", std::to_string(outcomes.size())},
                 {"outcomes", std::move(list)}}
                .dump()
         << '\n';
      break;
    }
    case Format::kCsv:
      csv_row(os, std::string("config"), std::string("multiplicity"));
      for (const auto& o : outcomes)
        csv_row(os, format_configuration(o.street), to_decimal(o.multiplicity));
      break;
  }
}

std::uint64_t parse_budget(const std::string& text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    throw ParseError("budget must be a positive integer, got '" + text + "'", 0);
  return value;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact k-typed parking functions: parking, enumeration, counting", "ktpf"};
  app.require_subcommand(1, 1);

  std::string format_name;
  std::string budget_text;
  std::string output_path;
  app.add_option("--format", format_name, "plain | json | csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--budget", budget_text, "Item cap for enumeration (env KTPF_BUDGET)");
  app.add_option("-o,--output", output_path, "Write output to this file");

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string tpf_text, order_text, method = "sim", what = "tpfs", family_order;
  std::size_t max_m = 0, max_k = 0;
  bool exhaustive = false;
  AtLeastArgs al;

  auto* park = sub("park", "Park a TPF and print the street");
  park->add_option("tpf", tpf_text, "e.g. \"(4;(0,1,1,2,2))\"")->required();
  park->add_option("--method", method)->check(CLI::IsMember({"sim", "iter", "both"}));

  auto* count = sub("count", "Number of exact TPFs of an order");
  count->add_option("order", order_text, "e.g. 1,1,1")->required();
  auto* configs = sub("configs", "Number of distinct configurations of an order");
  configs->add_option("order", order_text)->required();
  auto* famsize = sub("famsize", "Size of the family of a TPF");
  famsize->add_option("tpf", tpf_text)->required();
  auto* gm = sub("gm", "Generative multiset of a TPF");
  gm->add_option("tpf", tpf_text)->required();

  auto* enumerate = sub("enumerate", "Stream TPFs, families or configurations of an order");
  enumerate->add_option("order", order_text)->required();
  enumerate->add_option("--what", what)->check(CLI::IsMember({"tpfs", "families", "configs"}));

  auto* family = sub("family", "List the family of a TPF, or the family table of an order");
  auto* family_tpf = family->add_option("tpf", tpf_text);
  auto* family_table = family->add_option("--order", family_order, "Print the whole table");
  family_tpf->excludes(family_table);

  auto* verify = sub("verify", "Check the counting identity over all small orders");
  verify->add_option("--max-m", max_m)->required()->check(CLI::PositiveNumber);
  verify->add_option("--max-k", max_k)->required()->check(CLI::PositiveNumber);
  verify->add_flag("--exhaustive", exhaustive, "Also enumerate every TPF of every order");

  auto* atleast = sub("atleast", "Distinct streets under at-least semantics (two types)");
  atleast->add_option("m1", al.m1)->required();
  atleast->add_option("prefs", al.prefs, "Comma-separated lower bounds");
  atleast->add_flag("--sweep", al.sweep, "Tabulate every tuple over {0..m1}");
  atleast->add_option("--len", al.len, "Sweep tuples of exactly this length");
  atleast->add_option("--min-len", al.min_len);
  atleast->add_option("--max-len", al.max_len);
  atleast->add_flag("--naive", al.naive, "Simulate every branch instead of deduplicating");
  atleast->add_flag("--count-only", al.count_only, "Count without listing streets");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  std::ostringstream buffer;
  std::ofstream file;
  std::ostream* sink = &out;
  try {
    Context ctx;
    const bool enumerating = enumerate->parsed();
    if (format_name.empty())
      ctx.format = enumerating ? Format::kJson : (al.sweep ? Format::kCsv : Format::kPlain);
    else
      ctx.format = format_name == "json" ? Format::kJson
                   : format_name == "csv" ? Format::kCsv
                                          : Format::kPlain;
    ctx.budget = atleast->parsed() ? kDefaultBranchBudget : kDefaultEnumerationBudget;
    if (!budget_text.empty())
      ctx.budget = parse_budget(budget_text);
    else if (const char* env = std::getenv("KTPF_BUDGET"))
      ctx.budget = parse_budget(env);

    if (!output_path.empty()) {
      file.open(output_path);
      if (!file) {
        err << "error: cannot open " << output_path << '\n';
        return kInvalidInput;
      }
      sink = &file;
    }

    if (enumerating) {
      // Streams can be large; they go straight to the sink once the budget
      // check inside cmd_enumerate has passed.
      cmd_enumerate(ctx, order_text, what, *sink);
      return kOk;
    }
    if (park->parsed()) {
      cmd_park(ctx, tpf_text, method, buffer);
    } else if (count->parsed()) {
      const Order order = parse_order(order_text);
      print_number(ctx, "count", format_order(order), "order", count_tpfs(order), buffer);
    } else if (configs->parsed()) {
      const Order order = parse_order(order_text);
      print_number(ctx, "configurations", format_order(order), "order",
                   count_configurations(order), buffer);
    } else if (famsize->parsed()) {
      const ExactTPF tpf = parse_tpf(tpf_text);
      print_number(ctx, "famsize", format_tpf(tpf), "tpf", family_size(tpf), buffer);
    } else if (gm->parsed()) {
      cmd_gm(ctx, tpf_text, buffer);
    } else if (family->parsed()) {
      if (tpf_text.empty() && family_order.empty())
        throw ParseError("family needs a TPF or --order", 0);
      cmd_family(ctx, tpf_text, family_order, buffer);
    } else if (verify->parsed()) {
      cmd_verify(ctx, max_m, max_k, exhaustive, buffer);
    } else if (atleast->parsed()) {
      cmd_atleast(ctx, al, buffer);
    }
    *sink << buffer.str();
    return kOk;
  } catch (const CheckFailed& e) {
    // The rows explain the failure, so they are still printed.
    *sink << buffer.str();
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  }
}

}  // namespace ktpf::cli
