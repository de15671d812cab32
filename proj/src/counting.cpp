#include <partrec/counting.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <partrec/sequences.hpp>

namespace partrec {

namespace {

const BigInt kZero = 0;

PartitionTable from_series(Family family, Method method, const Series& s) {
  return PartitionTable{family, method, std::vector<BigInt>(s.coeffs().begin(), s.coeffs().end())};
}

void extend_v_recurrence(std::vector<BigInt>& v, std::size_t max_n) {
  if (v.empty()) v.emplace_back(1);
  const std::size_t start = v.size();
  if (max_n < start) return;
  const ExponentStream stream = gen_squares_and_doubles(static_cast<std::int64_t>(max_n));
  v.resize(max_n + 1);
  for (std::size_t n = start; n <= max_n; ++n) {
    BigInt acc = 0;
    for (const Term& t : stream) {
      if (t.exponent == 0) continue;
      if (static_cast<std::size_t>(t.exponent) > n) break;
      const BigInt& prev = v[n - static_cast<std::size_t>(t.exponent)];
      if (t.coefficient > 0) {
        mpz_submul_ui(acc.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(t.coefficient));
      } else {
        mpz_addmul_ui(acc.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(-t.coefficient));
      }
    }
    v[n] = std::move(acc);
  }
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::p: return "p";
    case Family::q: return "q";
    case Family::qq: return "qq";
    case Family::p2: return "p2";
    case Family::op: return "op";
    case Family::opr: return "opr";
    case Family::v: return "v";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::recurrence: return "recurrence";
    case Method::gf: return "gf";
    case Method::convolution: return "convolution";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  for (Family f : {Family::p, Family::q, Family::qq, Family::p2, Family::op, Family::opr, Family::v}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view s) {
  for (Method m : {Method::recurrence, Method::gf, Method::convolution}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

const BigInt& PartitionTable::at(std::int64_t n) const {
  if (n < 0) return kZero;
  if (static_cast<std::size_t>(n) >= values.size()) {
    throw std::out_of_range("table index " + std::to_string(n) + " beyond bound " +
                            std::to_string(bound()));
  }
  return values[static_cast<std::size_t>(n)];
}

void extend_p_recurrence(std::vector<BigInt>& p, std::size_t max_n) {
  if (p.empty()) p.emplace_back(1);
  const std::size_t start = p.size();
  if (max_n < start) return;
  p.resize(max_n + 1);
  for (std::size_t n = start; n <= max_n; ++n) {
    BigInt acc = 0;
    for (std::size_t j = 1;; ++j) {
      const std::size_t g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = g1 + j;  // j(3j+1)/2
      const bool add = (j % 2 == 1);
      if (add) {
        acc += p[n - g1];
        if (g2 <= n) acc += p[n - g2];
      } else {
        acc -= p[n - g1];
        if (g2 <= n) acc -= p[n - g2];
      }
    }
    p[n] = std::move(acc);
  }
}

PartitionTable p_table_recurrence(std::size_t max_n) {
  PartitionTable t{Family::p, Method::recurrence, {}};
  extend_p_recurrence(t.values, max_n);
  return t;
}

PartitionTable p_table_gf(std::size_t max_n) {
  const Series euler = expand_product(FactorSpec{{1, 0, -1, 1}}, max_n);
  return from_series(Family::p, Method::gf, series_invert(euler));
}

PartitionTable q_table(std::size_t max_n) {
  return from_series(Family::q, Method::gf, expand_product(FactorSpec{{1, 0, +1, 1}}, max_n));
}

PartitionTable qq_table(std::size_t max_n) {
  return from_series(Family::qq, Method::gf, expand_product(FactorSpec{{2, -1, +1, 1}}, max_n));
}

PartitionTable p2_table(std::size_t max_n, Method method) {
  if (method == Method::gf) {
    return from_series(Family::p2, Method::gf, expand_product(FactorSpec{{1, 0, -1, -2}}, max_n));
  }
  if (method != Method::convolution) {
    throw std::invalid_argument("p2 supports the convolution and gf methods");
  }
  const PartitionTable p = p_table_recurrence(max_n);
  PartitionTable t{Family::p2, Method::convolution, std::vector<BigInt>(max_n + 1)};
  for (std::size_t n = 0; n <= max_n; ++n) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      mpz_addmul(acc.get_mpz_t(), p.values[i].get_mpz_t(), p.values[n - i].get_mpz_t());
    }
    t.values[n] = std::move(acc);
  }
  return t;
}

PartitionTable overp_table(std::size_t max_n) {
  const FactorSpec spec{{1, 0, +1, 1}, {1, 0, -1, -1}};
  return from_series(Family::op, Method::gf, expand_product(spec, max_n));
}

PartitionTable overp_r_table(std::size_t max_n) {
  const FactorSpec spec{{2, 0, +1, 1}, {8, -1, +1, 2}, {8, -7, +1, 2}, {1, 0, -1, -1}};
  return from_series(Family::opr, Method::gf, expand_product(spec, max_n));
}

PartitionTable v_table(std::size_t max_n, Method method) {
  if (method == Method::gf) {
    const Series theta =
        theta_series(gen_squares_and_doubles(static_cast<std::int64_t>(max_n)), max_n);
    return from_series(Family::v, Method::gf, series_invert(theta));
  }
  if (method != Method::recurrence) {
    throw std::invalid_argument("v supports the recurrence and gf methods");
  }
  PartitionTable t{Family::v, Method::recurrence, {}};
  extend_v_recurrence(t.values, max_n);
  return t;
}

std::vector<Method> methods_for(Family family) {
  switch (family) {
    case Family::p: return {Method::recurrence, Method::gf};
    case Family::p2: return {Method::convolution, Method::gf};
    case Family::v: return {Method::recurrence, Method::gf};
    default: return {Method::gf};
  }
}

PartitionTable build_table(Family family, std::size_t max_n, std::optional<Method> method) {
  const auto supported = methods_for(family);
  const Method m = method.value_or(supported.front());
  if (std::find(supported.begin(), supported.end(), m) == supported.end()) {
    throw std::invalid_argument(std::string("family ") + std::string(to_string(family)) +
                                " has no " + std::string(to_string(m)) + " method");
  }
  switch (family) {
    case Family::p: return m == Method::gf ? p_table_gf(max_n) : p_table_recurrence(max_n);
    case Family::q: return q_table(max_n);
    case Family::qq: return qq_table(max_n);
    case Family::p2: return p2_table(max_n, m);
    case Family::op: return overp_table(max_n);
    case Family::opr: return overp_r_table(max_n);
    case Family::v: return v_table(max_n, m);
  }
  throw std::invalid_argument("unknown family");
}

std::string_view to_string(ParityMethod m) {
  switch (m) {
    case ParityMethod::direct: return "direct";
    case ParityMethod::thm7: return "thm7";
    case ParityMethod::macmahon: return "macmahon";
  }
  return "?";
}

std::optional<ParityMethod> parse_parity_method(std::string_view s) {
  for (ParityMethod m : {ParityMethod::direct, ParityMethod::thm7, ParityMethod::macmahon}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::vector<std::uint8_t> parity_table(std::size_t max_n, ParityMethod method) {
  std::vector<std::uint8_t> par(max_n + 1);
  const auto bound = static_cast<std::int64_t>(max_n);
  switch (method) {
    case ParityMethod::direct: {
      const PartitionTable p = p_table_recurrence(max_n);
      for (std::size_t n = 0; n <= max_n; ++n) {
        par[n] = static_cast<std::uint8_t>(mpz_odd_p(p.values[n].get_mpz_t()) ? 1 : 0);
      }
      break;
    }
    case ParityMethod::thm7: {
      std::vector<std::int64_t> shifts;  // 4π_j for j >= 1, ascending
      for (std::int64_t j = 1;; ++j) {
        const std::int64_t s = 4 * generalized_pentagonal(j);
        if (s > bound) break;
        shifts.push_back(s);
      }
      for (std::int64_t n = 0; n <= bound; ++n) {
        std::uint8_t bit = is_triangular(n) ? 1 : 0;
        for (std::int64_t s : shifts) {
          if (s > n) break;
          bit ^= par[static_cast<std::size_t>(n - s)];
        }
        par[static_cast<std::size_t>(n)] = bit;
      }
      break;
    }
    case ParityMethod::macmahon: {
      const ExponentStream tri = gen_triangular(bound);
      par[0] = 1;
      for (std::int64_t n = 1; n <= bound; ++n) {
        std::uint8_t bit = 0;
        for (const Term& t : tri) {
          if (t.exponent > n) break;
          if ((n - t.exponent) % 4 == 0) bit ^= par[static_cast<std::size_t>((n - t.exponent) / 4)];
        }
        par[static_cast<std::size_t>(n)] = bit;
      }
      break;
    }
  }
  return par;
}

namespace {

int macmahon_parity(std::int64_t n, std::unordered_map<std::int64_t, int>& memo) {
  if (n == 0) return 1;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  int bit = 0;
  for (std::int64_t m = 0;; ++m) {
    const std::int64_t t = m * (m + 1) / 2;
    if (t > n) break;
    if ((n - t) % 4 == 0) bit ^= macmahon_parity((n - t) / 4, memo);
  }
  memo.emplace(n, bit);
  return bit;
}

}  // namespace

int parity_p(std::int64_t n, ParityMethod method) {
  if (n < 0) return 0;
  if (method == ParityMethod::macmahon) {
    std::unordered_map<std::int64_t, int> memo;
    return macmahon_parity(n, memo);
  }
  return parity_table(static_cast<std::size_t>(n), method).back();
}

std::shared_ptr<const PartitionTable> TableCache::get(Family family, std::size_t max_n,
                                                      std::optional<Method> method) {
  const Method m = method.value_or(methods_for(family).front());
  const Key key{family, m};
  std::lock_guard lock(mutex_);
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const auto& e) { return e.first == key; });
  if (it != entries_.end() && it->second->bound() >= max_n) return it->second;

  std::shared_ptr<const PartitionTable> built;
  const bool extendable = m == Method::recurrence && (family == Family::p || family == Family::v);
  if (extendable && it != entries_.end()) {
    PartitionTable next = *it->second;
    if (family == Family::p) {
      extend_p_recurrence(next.values, max_n);
    } else {
      extend_v_recurrence(next.values, max_n);
    }
    built = std::make_shared<const PartitionTable>(std::move(next));
  } else {
    built = std::make_shared<const PartitionTable>(build_table(family, max_n, m));
  }
  if (it != entries_.end()) {
    it->second = built;
  } else {
    entries_.emplace_back(key, built);
  }
  return built;
}

}  // namespace partrec
