#include <partrec/oracle.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace partrec::oracle {

namespace {

struct PartType {
  int value;
  Mark mark;
  int max_copies;  // INT_MAX for unbounded
};

constexpr int kUnbounded = std::numeric_limits<int>::max();

// Allowed (value, mark) pairs for parts of size <= n, largest first.
std::vector<PartType> part_types(int n, ConstraintKind kind) {
  std::vector<PartType> types;
  for (int v = n; v >= 1; --v) {
    switch (kind) {
      case ConstraintKind::unrestricted:
        types.push_back({v, Mark::plain, kUnbounded});
        break;
      case ConstraintKind::distinct:
        types.push_back({v, Mark::plain, 1});
        break;
      case ConstraintKind::distinct_odd:
        if (v % 2 == 1) types.push_back({v, Mark::plain, 1});
        break;
      case ConstraintKind::two_color:
        types.push_back({v, Mark::bold, kUnbounded});
        types.push_back({v, Mark::plain, kUnbounded});
        break;
      case ConstraintKind::overpartition:
        types.push_back({v, Mark::overline, 1});
        types.push_back({v, Mark::plain, kUnbounded});
        break;
      case ConstraintKind::restricted_overpartition:
        if (v % 8 == 1 || v % 8 == 7) {
          types.push_back({v, Mark::overline2, 1});
          types.push_back({v, Mark::overline, 1});
        } else if (v % 2 == 0) {
          types.push_back({v, Mark::overline, 1});
        }
        types.push_back({v, Mark::plain, kUnbounded});
        break;
    }
  }
  return types;
}

void check_bound(int n, int guard) {
  if (n < 0) throw std::invalid_argument("oracle needs n >= 0");
  if (n > guard) throw BoundExceeded();
}

// Picks the next part type at or after `idx` (so parts come out in
// nonincreasing type order) together with its multiplicity.
std::uint64_t count_from(const std::vector<PartType>& types, std::size_t idx, int remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = idx; i < types.size(); ++i) {
    const PartType& t = types[i];
    if (t.value > remaining) continue;
    int left = remaining;
    for (int c = 1; c <= t.max_copies && t.value <= left; ++c) {
      left -= t.value;
      total += count_from(types, i + 1, left);
    }
  }
  return total;
}

void enumerate_from(const std::vector<PartType>& types, std::size_t idx, int remaining,
                    Partition& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = idx; i < types.size(); ++i) {
    const PartType& t = types[i];
    if (t.value > remaining) continue;
    const std::size_t mark = current.size();
    int left = remaining;
    for (int c = 1; c <= t.max_copies && t.value <= left; ++c) {
      left -= t.value;
      current.push_back({t.value, t.mark});
      enumerate_from(types, i + 1, left, current, out);
    }
    current.resize(mark);
  }
}

}  // namespace

std::string_view to_string(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::unrestricted: return "unrestricted";
    case ConstraintKind::distinct: return "distinct";
    case ConstraintKind::distinct_odd: return "distinct_odd";
    case ConstraintKind::two_color: return "two_color";
    case ConstraintKind::overpartition: return "overpartition";
    case ConstraintKind::restricted_overpartition: return "restricted_overpartition";
  }
  return "?";
}

std::vector<ConstraintKind> all_kinds() {
  return {ConstraintKind::unrestricted,  ConstraintKind::distinct,
          ConstraintKind::distinct_odd,  ConstraintKind::two_color,
          ConstraintKind::overpartition, ConstraintKind::restricted_overpartition};
}

std::optional<ConstraintKind> parse_kind(std::string_view s) {
  for (ConstraintKind k : all_kinds()) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i].value;
    switch (p[i].mark) {
      case Mark::plain: break;
      case Mark::bold: os << "b"; break;
      case Mark::overline: os << "'"; break;
      case Mark::overline2: os << "\""; break;
    }
  }
  os << ")";
  return os.str();
}

std::uint64_t count_partitions(int n, ConstraintKind kind) {
  check_bound(n, kCountGuard);
  return count_from(part_types(n, kind), 0, n);
}

std::vector<Partition> enumerate_partitions(int n, ConstraintKind kind) {
  check_bound(n, kEnumerateGuard);
  std::vector<Partition> out;
  Partition current;
  enumerate_from(part_types(n, kind), 0, n, current, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace partrec::oracle
