#ifndef PARTREC_VERIFY_HPP
#define PARTREC_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <partrec/bigint.hpp>
#include <partrec/counting.hpp>

namespace partrec::verify {

/// The counting tables a check reads. p, q, qq, p2, op and opr come from
/// generating-function expansion; v comes from its defining recurrence, so
/// every recurrence check compares two independently built quantities.
struct TableSet {
  std::size_t bound = 0;
  PartitionTable p;
  PartitionTable q;
  PartitionTable qq;
  PartitionTable p2;
  PartitionTable op;
  PartitionTable opr;
  PartitionTable v;

  static TableSet build(std::size_t bound);

  PartitionTable& table(Family f);
  const PartitionTable& table(Family f) const;
};

struct Failure {
  std::int64_t n = 0;
  BigInt lhs;
  BigInt rhs;
  std::string detail;  // which side-identity of the check broke
};

struct CheckResult {
  std::string name;
  std::size_t bound = 0;
  std::optional<Failure> failure;  // smallest failing index

  bool passed() const noexcept { return !failure.has_value(); }
};

using Evaluator = std::function<CheckResult(const TableSet&, std::size_t bound)>;

struct CheckSpec {
  std::string name;
  std::string group;
  std::string description;
  std::size_t default_bound = 0;
  std::vector<Family> reads;  // tables consumed from the TableSet
  Evaluator evaluate;
};

inline constexpr std::size_t kRecurrenceBound = 2000;
inline constexpr std::size_t kIdentityBound = 500;

/// Every registered check, in a fixed order. Names are unique.
const std::vector<CheckSpec>& registry();

const CheckSpec* find_check(std::string_view name);

/// "all", a group name, or a check name. Empty when nothing matches.
std::vector<const CheckSpec*> select_checks(std::string_view selector);

/// Runs one check at `bound`; the tables must cover it.
CheckResult run_check(const CheckSpec& spec, const TableSet& tables, std::size_t bound);

/// Builds tables at `bound` and runs every registered check there.
std::vector<CheckResult> run_all(std::size_t bound);
std::vector<CheckResult> run_all(const TableSet& tables, std::size_t bound);

bool all_passed(const std::vector<CheckResult>& results);

/// {"name":..,"bound":..,"status":"pass"|"fail"[,"n":..,"lhs":"..","rhs":".."]}
/// with big integers as decimal strings.
std::string to_json_line(const CheckResult& r);
std::string to_plain_line(const CheckResult& r);

}  // namespace partrec::verify

#endif  // PARTREC_VERIFY_HPP
