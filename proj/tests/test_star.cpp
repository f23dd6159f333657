#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "diskpack/errors.hpp"
#include "diskpack/star.hpp"
#include "oracles.hpp"

using namespace diskpack;

namespace {

WeightedStar make_star(const std::vector<double>& radii, double center = 1.0) {
  WeightedStar s;
  s.center = "c";
  s.center_radius = center;
  s.embedded = true;
  for (std::size_t i = 0; i < radii.size(); ++i) s.leaves.push_back({"l" + std::to_string(i), radii[i]});
  return s;
}

Graph star_graph(const WeightedStar& s) { return s.to_graph(); }

std::map<VertexId, double> star_weights(const WeightedStar& s) {
  std::map<VertexId, double> w = {{s.center, s.center_radius}};
  for (const auto& l : s.leaves) w[l.id] = l.radius;
  return w;
}

// Leaf ids sorted clockwise starting at the leaf on the positive x axis.
std::vector<VertexId> clockwise_ids(const Packing& p, const VertexId& center) {
  std::vector<std::pair<double, VertexId>> a;
  for (const auto& d : p.disks()) {
    if (d.id == center) continue;
    double ang = -std::atan2(d.cy, d.cx);
    if (ang < -1e-12) ang += 2 * M_PI;
    a.push_back({ang, d.id});
  }
  std::sort(a.begin(), a.end());
  std::vector<VertexId> out;
  for (const auto& [ang, id] : a) out.push_back(id);
  return out;
}

}  // namespace

TEST_CASE("leaf_separation_angle") {
  CHECK(leaf_separation_angle(1, 1, 1, 0) == doctest::Approx(M_PI / 3).epsilon(1e-14));
  CHECK(leaf_separation_angle(1, 1, 1, 0) == doctest::Approx(subtend_angle(1, 1, 1)));
  CHECK(leaf_separation_angle(1, 1, 1, 1e-6) > M_PI / 3);
  CHECK(leaf_separation_angle(0.01, 5, 5, 1) == doctest::Approx(M_PI));
}

TEST_CASE("five unit leaves fit, six do not") {
  const auto five = decide_and_construct_embedded_star(make_star({1, 1, 1, 1, 1}));
  CHECK(five.realizable);
  CHECK(five.residual == doctest::Approx(M_PI / 3).epsilon(1e-6));
  REQUIRE(five.packing);
  const auto& t = five.tight_angles;
  for (std::size_t i = 1; i < t.size(); ++i) CHECK((t[i] - t[i - 1]) * 180 / M_PI >= 60.0);
  CHECK(t.back() * 180 / M_PI == doctest::Approx(240.0).epsilon(1e-6));
  CHECK(validate_dcr(*five.packing, star_graph(make_star({1, 1, 1, 1, 1}))).valid);

  const auto six = decide_and_construct_embedded_star(make_star({1, 1, 1, 1, 1, 1}));
  CHECK_FALSE(six.realizable);
  CHECK_FALSE(six.packing);
  REQUIRE(six.rejected_at);
  CHECK(*six.rejected_at == 5);
}

TEST_CASE("a single leaf is always realizable") {
  for (double r : {0.01, 1.0, 100.0}) {
    const auto res = decide_and_construct_embedded_star(make_star({r}, 3.0));
    CHECK(res.realizable);
    REQUIRE(res.packing);
    CHECK(validate_dcr(*res.packing, star_graph(make_star({r}, 3.0))).valid);
  }
}

TEST_CASE("the second large disk is held back by the first") {
  const WeightedStar s = make_star({5, 0.2, 5});
  const auto res = decide_and_construct_embedded_star(s);
  REQUIRE(res.realizable);
  REQUIRE(res.tight_angles.size() == 3);

  // Walk the third disk clockwise until it clears both placed disks.
  const double R = 1.0, gap = 2.0 * kDefaultTolerance * 0.2;
  auto center = [&](double r, double a) { return std::pair<double, double>{(R + r) * std::cos(-a), (R + r) * std::sin(-a)}; };
  const auto d1 = center(5, 0.0);
  const auto d2 = center(0.2, res.tight_angles[1]);
  auto clear = [&](double a) {
    const auto c = center(5, a);
    return std::hypot(c.first - d1.first, c.second - d1.second) >= 10 + gap &&
           std::hypot(c.first - d2.first, c.second - d2.second) >= 5.2 + gap;
  };
  double lo = res.tight_angles[1], hi = M_PI;
  REQUIRE_FALSE(clear(lo));
  REQUIRE(clear(hi));
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (clear(mid) ? hi : lo) = mid;
  }
  CHECK(res.tight_angles[2] == doctest::Approx(hi).epsilon(1e-12));
  // the bound comes from the first disk, not the small one in between
  CHECK(res.tight_angles[2] > res.tight_angles[1] + leaf_separation_angle(R, 0.2, 5, gap) + 0.1);
  const auto w = star_weights(s);
  CHECK(validate_dcr(*res.packing, star_graph(s), &w).valid);
}

TEST_CASE("rotation starts at the first largest leaf") {
  const auto res = decide_and_construct_embedded_star(make_star({1, 3, 2, 3, 1}, 2.0));
  CHECK(res.order == std::vector<std::size_t>{1, 2, 3, 4, 0});
}

TEST_CASE("input errors") {
  WeightedStar s = make_star({1, 1});
  s.embedded = false;
  CHECK_THROWS_AS(decide_and_construct_embedded_star(s), InputError);
  CHECK_THROWS_AS(decide_and_construct_embedded_star(make_star({})), InputError);
  CHECK_THROWS_AS(decide_and_construct_embedded_star(make_star({1, -1})), InputError);
  CHECK_THROWS_AS(decide_and_construct_embedded_star(make_star({1, 1}), 0.0), InputError);
}

TEST_CASE("random stars against the all-pairs reference") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> rad(0.1, 10.0);
  int yes = 0;
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<double> radii(n);
    for (auto& r : radii) r = rad(rng);
    const double R = rad(rng);
    const WeightedStar s = make_star(radii, R);
    const auto res = decide_and_construct_embedded_star(s);

    std::vector<double> rotated;
    for (std::size_t i : res.order) rotated.push_back(radii[i]);
    const double rmin = std::min(R, *std::min_element(radii.begin(), radii.end()));
    const auto ref = oracle::star_all_pairs(R, rotated, 2.0 * kDefaultTolerance * rmin);
    REQUIRE(res.realizable == ref.realizable);
    CHECK(res.traversal_steps <= 2 * n);
    if (!res.realizable) continue;
    ++yes;
    for (std::size_t i = 0; i < n; ++i) CHECK(res.tight_angles[i] == doctest::Approx(ref.angles[i]).epsilon(1e-12));

    const auto w = star_weights(s);
    const auto rep = validate_dcr(*res.packing, star_graph(s), &w);
    CHECK(rep.valid);
    std::vector<VertexId> want;
    for (std::size_t i : res.order) want.push_back(s.leaves[i].id);
    CHECK(clockwise_ids(*res.packing, "c") == want);
  }
  CHECK(yes > 50);
}

TEST_CASE("candidate list radii never increase") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> rad(0.1, 10.0);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 11;
    std::vector<double> radii(n);
    for (auto& r : radii) r = rad(rng);
    // the largest first so every prefix keeps the same rotation
    std::rotate(radii.begin(), std::max_element(radii.begin(), radii.end()), radii.end());
    for (std::size_t k = 1; k <= n; ++k) {
      const std::vector<double> prefix(radii.begin(), radii.begin() + static_cast<long>(k));
      const auto res = decide_and_construct_embedded_star(make_star(prefix, 50.0));
      for (std::size_t i = 1; i < res.candidates.size(); ++i) {
        CHECK(prefix[res.candidates[i - 1]] >= prefix[res.candidates[i]]);
      }
    }
  }
}

TEST_CASE("scaling all radii keeps the verdict and scales the packing") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> rad(0.1, 10.0);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 10;
    std::vector<double> radii(n), scaled(n);
    const double lambda = 0.5 + rad(rng);
    for (std::size_t i = 0; i < n; ++i) {
      radii[i] = rad(rng);
      scaled[i] = radii[i] * lambda;
    }
    const double R = rad(rng);
    const auto a = decide_and_construct_embedded_star(make_star(radii, R));
    const auto b = decide_and_construct_embedded_star(make_star(scaled, R * lambda));
    REQUIRE(a.realizable == b.realizable);
    if (!a.realizable) continue;
    for (std::size_t i = 0; i < a.packing->size(); ++i) {
      CHECK(b.packing->disks()[i].cx == doctest::Approx(lambda * a.packing->disks()[i].cx).epsilon(1e-9));
      CHECK(b.packing->disks()[i].cy == doctest::Approx(lambda * a.packing->disks()[i].cy).epsilon(1e-9));
    }
  }
}
