#ifndef PARTREC_COUNTING_HPP
#define PARTREC_COUNTING_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <partrec/bigint.hpp>
#include <partrec/series.hpp>

namespace partrec {

/// Partition families with a counting table.
enum class Family {
  p,        ///< unrestricted partitions
  q,        ///< distinct parts
  qq,       ///< distinct odd parts
  p2,       ///< two-color partitions
  op,       ///< overpartitions
  opr,      ///< restricted overpartitions
  v,        ///< inverse of the squares-and-doubles theta series
};

enum class Method { recurrence, gf, convolution };

std::string_view to_string(Family f);
std::string_view to_string(Method m);
std::optional<Family> parse_family(std::string_view s);
std::optional<Method> parse_method(std::string_view s);

/// Values f(0..N) of one counting function and the method that built them.
struct PartitionTable {
  Family family = Family::p;
  Method method = Method::gf;
  std::vector<BigInt> values;

  std::size_t bound() const noexcept { return values.empty() ? 0 : values.size() - 1; }

  /// f(n), with f(n) = 0 for n < 0.
  const BigInt& at(std::int64_t n) const;

  Series as_series() const { return Series(values); }
};

// Euler's pentagonal recurrence
//   p(n) = Σ_{j>=1} (-1)^{j+1} [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)].
PartitionTable p_table_recurrence(std::size_t max_n);

// Inverse of the expansion of ∏(1 - x^k).
PartitionTable p_table_gf(std::size_t max_n);

// ∏(1 + x^k).
PartitionTable q_table(std::size_t max_n);

// ∏(1 + x^{2k-1}), parts 1, 3, 5, ...
PartitionTable qq_table(std::size_t max_n);

// convolution: Σ p(i) p(n-i) on the recurrence table.
// gf: inverse of the expansion of ∏(1 - x^k)².
PartitionTable p2_table(std::size_t max_n, Method method = Method::convolution);

// ∏(1 + x^k) / (1 - x^k).
PartitionTable overp_table(std::size_t max_n);

// ∏(1 + x^{2k})(1 + x^{8k-1})²(1 + x^{8k-7})² / (1 - x^k).
PartitionTable overp_r_table(std::size_t max_n);

// recurrence: v(n) = [n = 0] - Σ c_e v(n - e) over the nonzero terms of
// 1 + Σ_{j>=1} (-1)^j (x^{j²} + x^{2j²}) with e > 0.
// gf: series inverse of that theta series.
PartitionTable v_table(std::size_t max_n, Method method = Method::recurrence);

/// Dispatches to the builders above. Throws std::invalid_argument for a
/// method the family does not support.
PartitionTable build_table(Family family, std::size_t max_n,
                           std::optional<Method> method = std::nullopt);

/// Methods that produce a table for `family`; the first one is the default.
std::vector<Method> methods_for(Family family);

enum class ParityMethod { direct, thm7, macmahon };

std::string_view to_string(ParityMethod m);
std::optional<ParityMethod> parse_parity_method(std::string_view s);

/// p(0..N) mod 2.
///   direct:   reduce the Euler recurrence table.
///   thm7:     Σ_{j>=0} p(n - 4π_j) ≡ [n triangular] (mod 2), solved for p(n)
///             from smaller arguments; π_j runs over the generalized
///             pentagonal numbers.
///   macmahon: p(n) ≡ Σ_{t∈T(n)} p((n - t)/4) (mod 2), T(n) the triangular
///             t <= n with t ≡ n (mod 4).
std::vector<std::uint8_t> parity_table(std::size_t max_n, ParityMethod method);

/// p(n) mod 2 for one n. macmahon only visits the arguments reachable by
/// repeated quartering, memoized in a local map.
int parity_p(std::int64_t n, ParityMethod method);

/// Memoized tables that grow on demand.
///
/// get() returns a shared immutable snapshot covering at least 0..max_n.
/// Extending a recurrence table continues from the published prefix; other
/// methods are rebuilt at the larger bound. Safe for concurrent callers.
class TableCache {
 public:
  std::shared_ptr<const PartitionTable> get(Family family, std::size_t max_n,
                                            std::optional<Method> method = std::nullopt);

 private:
  struct Key {
    Family family;
    Method method;
    friend bool operator==(const Key&, const Key&) = default;
  };
  std::mutex mutex_;
  std::vector<std::pair<Key, std::shared_ptr<const PartitionTable>>> entries_;
};

/// Extends an Euler recurrence table in place to cover 0..max_n.
void extend_p_recurrence(std::vector<BigInt>& values, std::size_t max_n);

}  // namespace partrec

#endif  // PARTREC_COUNTING_HPP
