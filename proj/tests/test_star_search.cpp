#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "diskpack/errors.hpp"
#include "diskpack/star_search.hpp"
#include "oracles.hpp"

using namespace diskpack;

namespace {

WeightedStar make_star(const std::vector<double>& radii, double center = 1.0, bool embedded = false) {
  WeightedStar s;
  s.center = "c";
  s.center_radius = center;
  s.embedded = embedded;
  for (std::size_t i = 0; i < radii.size(); ++i) s.leaves.push_back({"l" + std::to_string(i), radii[i]});
  return s;
}

void check_partition(const ThreePartitionInstance& a, const std::vector<Triple>& part) {
  std::set<std::size_t> used;
  for (const auto& t : part) {
    CHECK(a.A[t[0]] + a.A[t[1]] + a.A[t[2]] == a.B);
    for (auto i : t) CHECK(used.insert(i).second);
  }
  CHECK(used.size() == a.A.size());
}

// Every non-decreasing sequence of 3n values in (B/4, B/2) summing to nB.
void for_each_instance(std::size_t n, std::int64_t B, const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> cur;
  const std::int64_t lo = B / 4 + 1, hi = (B - 1) / 2;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t from, std::int64_t left) {
    const auto slots = static_cast<std::int64_t>(3 * n - cur.size());
    if (slots == 0) {
      if (left == 0) f(cur);
      return;
    }
    for (std::int64_t x = from; x <= hi; ++x) {
      if (x * slots > left) break;
      if (hi * slots < left) return;
      cur.push_back(x);
      rec(x, left - x);
      cur.pop_back();
    }
  };
  if (lo <= hi) rec(lo, static_cast<std::int64_t>(n) * B);
}

}  // namespace

TEST_CASE("unit leaves") {
  const auto five = star_wdc_bruteforce(make_star({1, 1, 1, 1, 1}));
  REQUIRE(five);
  CHECK(five->orders_tried == 1);
  CHECK(validate_dcr(five->packing, make_star({1, 1, 1, 1, 1}).to_graph()).valid);
  CHECK_FALSE(star_wdc_bruteforce(make_star({1, 1, 1, 1, 1, 1})));
}

TEST_CASE("small star with a tiny leaf") {
  const auto res = star_wdc_bruteforce(make_star({3, 3, 0.1}));
  REQUIRE(res);
  CHECK(res->order.size() == 3);
}

TEST_CASE("order matters for mixed radii") {
  // big and small leaves alternate only in some orders
  const std::vector<double> radii = {4, 4, 4, 0.5, 0.5, 0.5};
  const double R = 4.2;
  const auto res = star_wdc_bruteforce(make_star(radii, R));
  WeightedStar grouped = make_star({4, 4, 4, 0.5, 0.5, 0.5}, R, true);
  WeightedStar mixed = make_star({4, 0.5, 4, 0.5, 4, 0.5}, R, true);
  const bool g = decide_and_construct_embedded_star(grouped).realizable;
  const bool m = decide_and_construct_embedded_star(mixed).realizable;
  CHECK(res.has_value() == (g || m));
}

TEST_CASE("instance too large for oracle") {
  CHECK_THROWS_WITH_AS(star_wdc_bruteforce(make_star(std::vector<double>(11, 1.0), 5.0)),
                       doctest::Contains("too large for oracle"), InputError);
  CHECK_NOTHROW(star_wdc_bruteforce(make_star(std::vector<double>(11, 1.0), 5.0), {}, 11));
}

TEST_CASE("brute force succeeds whenever the given order does") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> rad(0.1, 10.0);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 7;
    std::vector<double> radii(n);
    for (auto& r : radii) r = rad(rng);
    const double R = rad(rng);
    const bool embedded = decide_and_construct_embedded_star(make_star(radii, R, true)).realizable;
    const auto found = star_wdc_bruteforce(make_star(radii, R));
    if (embedded) CHECK(found.has_value());
    if (found) {
      CHECK(validate_dcr(found->packing, make_star(radii, R).to_graph()).valid);
      // the reported order is itself realizable
      std::vector<double> ordered;
      for (auto i : found->order) ordered.push_back(radii[i]);
      CHECK(decide_and_construct_embedded_star(make_star(ordered, R, true)).realizable);
    }
  }
}

TEST_CASE("3-Partition examples") {
  const ThreePartitionInstance a{{6, 7, 7}, 20};
  const auto pa = three_partition_bruteforce(a);
  REQUIRE(pa);
  CHECK(*pa == std::vector<Triple>{{0, 1, 2}});

  const ThreePartitionInstance b{{6, 6, 7, 7, 7, 7}, 20};
  const auto pb = three_partition_bruteforce(b);
  REQUIRE(pb);
  check_partition(b, *pb);

  const ThreePartitionInstance c{{6, 6, 6, 7, 7, 8}, 20};
  const auto pc = three_partition_bruteforce(c);
  REQUIRE(pc);
  check_partition(c, *pc);

  const ThreePartitionInstance no{{7, 7, 7, 9, 9, 9}, 24};
  CHECK_FALSE(three_partition_bruteforce(no));
}

TEST_CASE("3-Partition preconditions name the element") {
  CHECK_THROWS_WITH_AS(validate_instance({{6, 7, 5, 6, 8, 8}, 20}), doctest::Contains("A[2]"), InputError);
  CHECK_THROWS_WITH_AS(validate_instance({{6, 7, 10, 6, 8, 3}, 20}), doctest::Contains("A[2]"), InputError);
  CHECK_THROWS_AS(validate_instance({{6, 7}, 20}), InputError);
  CHECK_THROWS_AS(validate_instance({{6, 7, 8}, 20}), InputError);
}

TEST_CASE("3-Partition backtracking agrees with the subset DP") {
  std::size_t instances = 0, yes = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::int64_t B = 5; B <= 60; ++B) {
      for_each_instance(n, B, [&](const std::vector<std::int64_t>& A) {
        const ThreePartitionInstance a{A, B};
        const auto part = three_partition_bruteforce(a);
        const bool dp = oracle::three_partition_dp(A, B);
        REQUIRE(part.has_value() == dp);
        if (part) {
          check_partition(a, *part);
          ++yes;
        }
        ++instances;
      });
    }
  }
  MESSAGE(instances << " instances, " << yes << " solvable");
  CHECK(instances > 1000);
}
