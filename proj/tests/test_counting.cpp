#include <doctest.h>

#include <thread>

#include <partrec/counting.hpp>
#include <partrec/oracle.hpp>

using namespace partrec;
using oracle::ConstraintKind;
using oracle::count_partitions;

namespace {

BigInt count(int n, ConstraintKind k) { return BigInt(static_cast<unsigned long>(count_partitions(n, k))); }

}  // namespace

TEST_CASE("p by Euler's recurrence") {
  const auto p = p_table_recurrence(9);
  CHECK(p.method == Method::recurrence);
  CHECK(p.values[5] == 7);
  CHECK(p.values[0] == 1);
  for (int n = 0; n <= 9; ++n) CHECK(p.values[n] == count(n, ConstraintKind::unrestricted));
  CHECK(p.at(-3) == 0);
  CHECK_THROWS_AS(p.at(10), std::out_of_range);
}

TEST_CASE("p by generating function agrees with the recurrence up to 2000") {
  const auto gf = p_table_gf(2000);
  const auto rec = p_table_recurrence(2000);
  CHECK(gf.values == rec.values);
  CHECK(gf.values[1] == 1);
  CHECK(gf.values[5] == 7);
  CHECK(p_table_gf(0).values == std::vector<BigInt>{1});
}

TEST_CASE("q and qq") {
  const auto q = q_table(10);
  CHECK(q.values[5] == 3);
  CHECK(q.values[5] == count(5, ConstraintKind::distinct));
  CHECK(q.values[0] == 1);

  const auto p = p_table_recurrence(6);
  CHECK(p.values[6] - p.values[5] - p.values[3] + p.values[0] == q.values[3]);

  const auto qq = qq_table(10);
  CHECK(qq.values[0] == 1);
  CHECK(qq.values[5] == 1);
  CHECK(qq.values[8] == 2);
  for (int n = 0; n <= 10; ++n) CHECK(qq.values[n] == count(n, ConstraintKind::distinct_odd));
}

TEST_CASE("p2 by convolution and by generating function") {
  const auto conv = p2_table(2000, Method::convolution);
  const auto gf = p2_table(2000, Method::gf);
  CHECK(conv.values == gf.values);
  CHECK(conv.values[2] == 5);
  CHECK(conv.values[0] == 1);
  const auto p = p_table_recurrence(3);
  CHECK(conv.values[3] == p.values[0] * p.values[3] + p.values[1] * p.values[2] +
                              p.values[2] * p.values[1] + p.values[3] * p.values[0]);
  CHECK(conv.values[3] == 10);
  CHECK_THROWS_AS(p2_table(5, Method::recurrence), std::invalid_argument);
}

TEST_CASE("overpartitions") {
  const auto op = overp_table(10);
  CHECK(op.values[3] == 8);
  CHECK(op.values[0] == 1);
  CHECK(op.values[1] == 2);

  const auto opr = overp_r_table(30);
  CHECK(opr.values[0] == 1);
  CHECK(opr.values[1] == 3);
  for (int n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(opr.values[n] == count(n, ConstraintKind::restricted_overpartition));
  }
}

TEST_CASE("v by recurrence and by series inversion") {
  const auto rec = v_table(2000, Method::recurrence);
  const auto gf = v_table(2000, Method::gf);
  CHECK(rec.values == gf.values);
  CHECK(rec.values[0] == 1);
  CHECK(rec.values[1] == 1);
  CHECK(rec.values[2] == 2);
  CHECK(rec.values[2] == overp_table(1).values[1]);
  CHECK(rec.values[1] == overp_r_table(0).values[0]);
}

TEST_CASE("v interleaves overpartitions and restricted overpartitions for m <= 1000") {
  const auto v = v_table(2001);
  const auto op = overp_table(1000);
  const auto opr = overp_r_table(1000);
  for (std::size_t m = 0; m <= 1000; ++m) {
    if (v.values[2 * m] != op.values[m] || v.values[2 * m + 1] != opr.values[m]) {
      FAIL("mismatch at m=" << m);
    }
  }
}

TEST_CASE("every family's values are nonnegative and start at 1") {
  for (Family f : {Family::p, Family::q, Family::qq, Family::p2, Family::op, Family::opr, Family::v}) {
    for (Method m : methods_for(f)) {
      const auto t = build_table(f, 300, m);
      CAPTURE(to_string(f));
      CHECK(t.values.size() == 301);
      CHECK(t.values[0] == 1);
      for (const auto& x : t.values) CHECK(x >= 0);
    }
  }
}

TEST_CASE("p is nondecreasing") {
  const auto p = p_table_recurrence(3000);
  for (std::size_t n = 1; n < p.values.size(); ++n) {
    if (p.values[n] < p.values[n - 1]) FAIL("decrease at n=" << n);
  }
}

TEST_CASE("build_table dispatch and method validation") {
  CHECK(build_table(Family::p, 5).method == Method::recurrence);
  CHECK(build_table(Family::p, 5, Method::gf).values.back() == 7);
  CHECK_THROWS_AS(build_table(Family::q, 5, Method::recurrence), std::invalid_argument);
  CHECK(parse_family("opr") == Family::opr);
  CHECK_FALSE(parse_family("x").has_value());
}

TEST_CASE("parity methods") {
  CHECK(parity_p(6, ParityMethod::macmahon) == 1);
  CHECK(parity_p(6, ParityMethod::direct) == 1);
  CHECK(parity_p(0, ParityMethod::direct) == 1);
  CHECK(parity_p(0, ParityMethod::thm7) == 1);
  CHECK(parity_p(0, ParityMethod::macmahon) == 1);
  CHECK(parity_p(3, ParityMethod::thm7) == 1);
  CHECK(parity_p(2, ParityMethod::thm7) == 0);
  CHECK(parity_p(4, ParityMethod::macmahon) == 1);
}

TEST_CASE("parity tables agree up to 5000 and qq = p (mod 2)") {
  const auto direct = parity_table(5000, ParityMethod::direct);
  CHECK(parity_table(5000, ParityMethod::thm7) == direct);
  CHECK(parity_table(5000, ParityMethod::macmahon) == direct);
  const auto qq = qq_table(5000);
  for (std::size_t n = 0; n <= 5000; ++n) {
    if ((mpz_odd_p(qq.values[n].get_mpz_t()) ? 1 : 0) != direct[n]) FAIL("n=" << n);
  }
  // Single-n macmahon recursion at a large argument against the table.
  const auto big = parity_table(40000, ParityMethod::thm7);
  for (std::int64_t n : {12345, 39999, 40000}) {
    CHECK(parity_p(n, ParityMethod::macmahon) == big[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("TableCache extends recurrence tables and shares snapshots") {
  TableCache cache;
  auto small = cache.get(Family::p, 10);
  CHECK(small->bound() == 10);
  auto large = cache.get(Family::p, 500);
  CHECK(large->bound() == 500);
  CHECK(small->bound() == 10);  // old snapshot untouched
  CHECK(cache.get(Family::p, 100) == large);
  CHECK(large->values == p_table_gf(500).values);

  auto v = cache.get(Family::v, 40);
  CHECK(cache.get(Family::v, 400)->values == v_table(400, Method::gf).values);
  CHECK(cache.get(Family::op, 20)->values == overp_table(20).values);

  std::vector<std::thread> workers;
  std::vector<std::shared_ptr<const PartitionTable>> seen(8);
  for (int i = 0; i < 8; ++i) {
    workers.emplace_back([&, i] { seen[i] = cache.get(Family::p, 200 * (i + 1)); });
  }
  for (auto& w : workers) w.join();
  const auto reference = p_table_recurrence(1600);
  for (int i = 0; i < 8; ++i) {
    REQUIRE(seen[i]->bound() >= static_cast<std::size_t>(200 * (i + 1)));
    for (std::size_t n = 0; n <= seen[i]->bound(); ++n) CHECK(seen[i]->values[n] == reference.values[n]);
  }
}
