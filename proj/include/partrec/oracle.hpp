#ifndef PARTREC_ORACLE_HPP
#define PARTREC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace partrec::oracle {

// Brute-force enumeration of constrained partitions. Nothing in here shares
// code with the series or counting modules; it walks part multisets
// directly and counts leaves, so its answers are independent ground truth.

enum class ConstraintKind {
  unrestricted,
  distinct,
  distinct_odd,
  two_color,
  overpartition,
  // Ordinary parts unrestricted; overlined even parts at most once;
  // overlined parts ≡ 1, 7 (mod 8) at most once in each of two
  // distinguishable colors; no other overlined parts.
  restricted_overpartition,
};

std::string_view to_string(ConstraintKind k);
std::optional<ConstraintKind> parse_kind(std::string_view s);
std::vector<ConstraintKind> all_kinds();

enum class Mark : std::uint8_t {
  plain,      ///< ordinary part (first color)
  bold,       ///< second color of a two-color partition
  overline,   ///< overlined part
  overline2,  ///< overlined part in the second overline color
};

struct Part {
  int value = 0;
  Mark mark = Mark::plain;

  friend auto operator<=>(const Part&, const Part&) = default;
};

/// Parts listed in decreasing (value, mark) order.
using Partition = std::vector<Part>;

std::string to_string(const Partition& p);

class BoundExceeded : public std::out_of_range {
 public:
  BoundExceeded() : std::out_of_range("oracle bound exceeded") {}
};

inline constexpr int kCountGuard = 60;
inline constexpr int kEnumerateGuard = 30;

/// Number of partitions of n of the given kind. 0 <= n <= 60.
std::uint64_t count_partitions(int n, ConstraintKind kind);

/// All partitions of n of the given kind, 0 <= n <= 30, in reverse
/// lexicographic order of their part sequences (parts compare by value, then
/// mark in the order plain < bold < overline < overline2).
std::vector<Partition> enumerate_partitions(int n, ConstraintKind kind);

}  // namespace partrec::oracle

#endif  // PARTREC_ORACLE_HPP
