#include <partrec/cli.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include <partrec/counting.hpp>
#include <partrec/verify.hpp>

namespace partrec::cli {

namespace {

constexpr const char* kEnvMax = "PARTREC_DEFAULT_MAX";
constexpr const char* kEnvFormat = "PARTREC_DEFAULT_FORMAT";
constexpr std::size_t kBenchDefaultMax = 1000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, OutputFormat> kFormats = {
    {"plain", OutputFormat::plain}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

std::optional<std::size_t> env_max() {
  const char* raw = std::getenv(kEnvMax);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::string s(raw);
  if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw UsageError(std::string(kEnvMax) + " must be a nonnegative integer, got '" + s + "'");
  }
  return static_cast<std::size_t>(std::stoull(s));
}

OutputFormat resolve_format(const std::string& flag) {
  std::string name = flag;
  if (name.empty()) {
    const char* raw = std::getenv(kEnvFormat);
    name = (raw != nullptr && *raw != '\0') ? raw : "plain";
  }
  auto it = kFormats.find(name);
  if (it == kFormats.end()) throw UsageError("unknown output format '" + name + "'");
  return it->second;
}

std::vector<std::string> family_names() {
  return {"p", "q", "qq", "p2", "op", "opr", "v"};
}

std::optional<Method> resolve_method(Family family, const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto m = parse_method(name);
  const auto supported = methods_for(family);
  if (!m || std::find(supported.begin(), supported.end(), *m) == supported.end()) {
    throw UsageError("function " + std::string(to_string(family)) + " has no method '" + name + "'");
  }
  return m;
}

void print_table(const PartitionTable& t, OutputFormat fmt, std::ostream& out) {
  if (fmt == OutputFormat::csv) out << "n,value\n";
  for (std::size_t n = 0; n < t.values.size(); ++n) {
    switch (fmt) {
      case OutputFormat::plain:
        out << t.values[n].get_str() << '\n';
        break;
      case OutputFormat::csv:
        out << n << ',' << t.values[n].get_str() << '\n';
        break;
      case OutputFormat::json: {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["value"] = t.values[n].get_str();
        out << j.dump() << '\n';
        break;
      }
    }
  }
}

int cmd_verify(const std::string& selector, std::optional<std::size_t> max_n, OutputFormat fmt,
               std::ostream& out, std::ostream& err) {
  const auto checks = verify::select_checks(selector);
  if (checks.empty()) {
    err << "unknown check '" << selector << "'\n";
    return kUsage;
  }
  std::size_t table_bound = 0;
  for (const auto* c : checks) table_bound = std::max(table_bound, max_n.value_or(c->default_bound));
  const verify::TableSet tables = verify::TableSet::build(table_bound);

  if (fmt == OutputFormat::csv) out << "name,bound,status,n,lhs,rhs\n";
  bool ok = true;
  for (const auto* c : checks) {
    const verify::CheckResult r = verify::run_check(*c, tables, max_n.value_or(c->default_bound));
    ok = ok && r.passed();
    switch (fmt) {
      case OutputFormat::plain:
        out << verify::to_plain_line(r) << '\n';
        break;
      case OutputFormat::json:
        out << verify::to_json_line(r) << '\n';
        break;
      case OutputFormat::csv:
        out << r.name << ',' << r.bound << ',' << (r.passed() ? "pass" : "fail");
        if (r.failure) {
          out << ',' << r.failure->n << ',' << r.failure->lhs.get_str() << ','
              << r.failure->rhs.get_str();
        } else {
          out << ",,,";
        }
        out << '\n';
        break;
    }
  }
  return ok ? kOk : kFailure;
}

int cmd_parity(std::int64_t n, const std::string& method, std::ostream& out, std::ostream& err) {
  if (method != "all") {
    auto m = parse_parity_method(method);
    if (!m) throw UsageError("unknown parity method '" + method + "'");
    out << parity_p(n, *m) << '\n';
    return kOk;
  }
  const int direct = parity_p(n, ParityMethod::direct);
  const int thm7 = parity_p(n, ParityMethod::thm7);
  const int macmahon = parity_p(n, ParityMethod::macmahon);
  if (direct != thm7 || direct != macmahon) {
    err << "parity methods disagree at n=" << n << ": direct=" << direct << " thm7=" << thm7
        << " macmahon=" << macmahon << '\n';
    return kFailure;
  }
  out << direct << '\n';
  return kOk;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int cmd_bench(const BenchOptions& opts, OutputFormat fmt, std::ostream& out, std::ostream& err) {
  const BenchReport report = run_bench(opts);
  if (report.first_disagreement) {
    err << "methods disagree at n=" << *report.first_disagreement << " (" << report.disagreement
        << ")\n";
    return kFailure;
  }
  if (fmt == OutputFormat::csv) out << "method,kind,max,seconds,checksum\n";
  double p_total = 0.0;
  double parity_total = 0.0;
  for (const auto& t : report.timings) {
    (t.kind == "p" ? p_total : parity_total) += t.seconds;
    switch (fmt) {
      case OutputFormat::plain:
        out << t.method << " (" << t.kind << ") max=" << opts.max_n << " seconds=" << t.seconds
            << " checksum=" << t.checksum << '\n';
        break;
      case OutputFormat::csv:
        out << t.method << ',' << t.kind << ',' << opts.max_n << ',' << t.seconds << ','
            << t.checksum << '\n';
        break;
      case OutputFormat::json: {
        nlohmann::ordered_json j;
        j["method"] = t.method;
        j["kind"] = t.kind;
        j["max"] = opts.max_n;
        j["seconds"] = t.seconds;
        j["checksum"] = std::to_string(t.checksum);
        out << j.dump() << '\n';
        break;
      }
    }
  }
  if (fmt == OutputFormat::plain) {
    out << "total p=" << p_total << "s parity=" << parity_total << "s; all methods agree\n";
  }
  return kOk;
}

}  // namespace

BenchReport run_bench(const BenchOptions& opts) {
  using Clock = std::chrono::steady_clock;
  static const std::vector<std::string> kKnown = {"euler", "gf", "direct", "thm7", "macmahon"};
  for (const auto& m : opts.methods) {
    if (std::find(kKnown.begin(), kKnown.end(), m) == kKnown.end()) {
      throw std::invalid_argument("unknown bench method '" + m + "'");
    }
  }
  if (opts.fault && opts.fault->second > opts.max_n) {
    throw std::invalid_argument("fault index beyond max");
  }

  BenchReport report;
  std::vector<std::pair<std::string, std::vector<BigInt>>> values;
  std::vector<std::pair<std::string, std::vector<std::uint8_t>>> parities;

  for (const auto& m : opts.methods) {
    BenchTiming timing{m, "", 0.0, 0};
    const auto start = Clock::now();
    if (m == "euler" || m == "gf") {
      PartitionTable t = m == "euler" ? p_table_recurrence(opts.max_n) : p_table_gf(opts.max_n);
      timing.seconds = std::chrono::duration<double>(Clock::now() - start).count();
      timing.kind = "p";
      if (opts.fault && opts.fault->first == m) t.values[opts.fault->second] += 1;
      for (const auto& v : t.values) timing.checksum += low_bits(v);
      values.emplace_back(m, std::move(t.values));
    } else {
      auto bits = parity_table(opts.max_n, *parse_parity_method(m));
      timing.seconds = std::chrono::duration<double>(Clock::now() - start).count();
      timing.kind = "parity";
      if (opts.fault && opts.fault->first == m) bits[opts.fault->second] ^= 1;
      for (auto b : bits) timing.checksum += b;
      parities.emplace_back(m, std::move(bits));
    }
    report.timings.push_back(timing);
  }

  // Every p table against the first, every parity table against the first,
  // and the parity tables against the first p table reduced mod 2.
  auto note = [&](std::size_t n, const std::string& a, const std::string& b) {
    if (!report.first_disagreement || n < *report.first_disagreement) {
      report.first_disagreement = n;
      report.disagreement = a + " vs " + b;
    }
  };
  for (std::size_t k = 1; k < values.size(); ++k) {
    for (std::size_t n = 0; n <= opts.max_n; ++n) {
      if (values[k].second[n] != values[0].second[n]) {
        note(n, values[0].first, values[k].first);
        break;
      }
    }
  }
  for (std::size_t k = 1; k < parities.size(); ++k) {
    for (std::size_t n = 0; n <= opts.max_n; ++n) {
      if (parities[k].second[n] != parities[0].second[n]) {
        note(n, parities[0].first, parities[k].first);
        break;
      }
    }
  }
  if (!values.empty() && !parities.empty()) {
    for (std::size_t n = 0; n <= opts.max_n; ++n) {
      const std::uint8_t bit = mpz_odd_p(values[0].second[n].get_mpz_t()) ? 1 : 0;
      if (bit != parities[0].second[n]) {
        note(n, values[0].first, parities[0].first);
        break;
      }
    }
  }
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition counting functions, their recurrences, and identity checks", "partrec"};
  app.require_subcommand(1);

  std::string function;
  std::string method;
  std::string format;
  std::string check = "all";
  std::string methods = "euler,gf,direct,thm7,macmahon";
  std::string fault;
  std::int64_t n = 0;
  std::optional<std::size_t> max_n;
  const auto families = family_names();

  auto* compute = app.add_subcommand("compute", "Print one value f(n)");
  compute->add_option("--function,-f", function, "Counting function")
      ->required()
      ->check(CLI::IsMember(families));
  compute->add_option("--n,-n", n, "Argument")->required()->check(CLI::NonNegativeNumber);
  compute->add_option("--method,-m", method, "recurrence, gf or convolution");

  auto* table = app.add_subcommand("table", "Print f(0..max)");
  table->add_option("--function,-f", function, "Counting function")
      ->required()
      ->check(CLI::IsMember(families));
  table->add_option("--max", max_n, "Largest n (default $PARTREC_DEFAULT_MAX)");
  table->add_option("--method,-m", method, "recurrence, gf or convolution");
  table->add_option("--format", format, "plain, csv or json (default $PARTREC_DEFAULT_FORMAT)");

  auto* verify_cmd = app.add_subcommand("verify", "Run registered identity checks");
  verify_cmd->add_option("--check,-c", check, "Check name, group, or 'all'");
  verify_cmd->add_option("--max", max_n, "Bound for every selected check");
  verify_cmd->add_option("--format", format, "plain, csv or json");

  auto* parity = app.add_subcommand("parity", "Print p(n) mod 2");
  parity->add_option("--n,-n", n, "Argument")->required()->check(CLI::NonNegativeNumber);
  parity->add_option("--method,-m", method, "direct, thm7, macmahon or all")
      ->check(CLI::IsMember({"direct", "thm7", "macmahon", "all"}));

  auto* bench = app.add_subcommand("bench", "Time the p and parity methods");
  bench->add_option("--max", max_n, "Largest n");
  bench->add_option("--methods", methods, "Comma-separated subset of euler,gf,direct,thm7,macmahon");
  bench->add_option("--format", format, "plain, csv or json");
  bench->add_option("--inject-fault", fault, "METHOD:N, perturb one output (testing aid)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) {
      const Family f = *parse_family(function);
      const auto m = resolve_method(f, method);
      const PartitionTable t = build_table(f, static_cast<std::size_t>(n), m);
      out << t.values.back().get_str() << '\n';
      return kOk;
    }
    if (*table) {
      const Family f = *parse_family(function);
      const auto m = resolve_method(f, method);
      const OutputFormat fmt = resolve_format(format);
      const auto bound = max_n ? max_n : env_max();
      if (!bound) throw UsageError("table needs --max (or PARTREC_DEFAULT_MAX)");
      print_table(build_table(f, *bound, m), fmt, out);
      return kOk;
    }
    if (*verify_cmd) {
      const OutputFormat fmt = resolve_format(format);
      return cmd_verify(check, max_n ? max_n : env_max(), fmt, out, err);
    }
    if (*parity) {
      return cmd_parity(n, method.empty() ? "all" : method, out, err);
    }
    if (*bench) {
      const OutputFormat fmt = resolve_format(format);
      BenchOptions opts;
      opts.max_n = max_n.value_or(env_max().value_or(kBenchDefaultMax));
      opts.methods = split_csv(methods);
      if (opts.methods.empty()) throw UsageError("bench needs at least one method");
      if (!fault.empty()) {
        const auto colon = fault.find(':');
        if (colon == std::string::npos) throw UsageError("--inject-fault expects METHOD:N");
        try {
          opts.fault = std::make_pair(fault.substr(0, colon),
                                      static_cast<std::size_t>(std::stoull(fault.substr(colon + 1))));
        } catch (const std::logic_error&) {
          throw UsageError("--inject-fault expects METHOD:N");
        }
      }
      try {
        return cmd_bench(opts, fmt, out, err);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace partrec::cli
