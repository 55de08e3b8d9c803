#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "csplab/csp.hpp"
#include "csplab/diagrams.hpp"
#include "csplab/liechar.hpp"

using namespace csplab;

namespace {

IntPolynomial P(const std::string& s) { return parse_polynomial(s); }

FiniteAction cycle_action(const std::vector<int>& cycle_lengths, int order) {
  FiniteAction a;
  a.order = order;
  std::size_t start = 0;
  for (int len : cycle_lengths) {
    for (int j = 0; j < len; ++j) {
      a.elements.push_back("x" + std::to_string(start + static_cast<std::size_t>(j)));
      a.generator.push_back(start + static_cast<std::size_t>((j + 1) % len));
    }
    start += static_cast<std::size_t>(len);
  }
  return a;
}

// Evaluation at powers of a primitive root of unity, against fixed points.
bool root_of_unity_condition(const IntPolynomial& p, const OrbitReport& rep) {
  const double pi = std::numbers::pi;
  for (int d = 0; d < rep.order; ++d) {
    std::complex<double> value = 0;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
      value += c[i].convert_to<double>() * std::polar(1.0, 2 * pi * static_cast<double>(d) * static_cast<double>(i) / rep.order);
    }
    if (std::abs(value - static_cast<double>(rep.fixed_points[static_cast<std::size_t>(d)])) > 1e-6) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("csp") {
  TEST_CASE("orbits") {
    const auto a = cycle_action({3, 1, 3, 2}, 6);
    const auto rep = orbits(a);
    CHECK(rep.size == 9);
    CHECK(rep.counts == std::map<int, std::int64_t>{{1, 1}, {2, 1}, {3, 2}});
    CHECK(rep.orbit_count() == 4);
    CHECK(rep.fixed_points == std::vector<std::int64_t>{9, 1, 3, 7, 3, 1});
    CHECK(rep.fixed_point_identity());
    CHECK(rep.representatives == std::vector<std::string>{"x0", "x3", "x4", "x7"});
    const auto sets = orbit_sets(a);
    CHECK(sets.size() == 4);
    CHECK(sets[0] == std::vector<std::string>{"x0", "x1", "x2"});
    CHECK(csp_polynomial(rep, 6) == P("4 + 2q^2 + q^3 + 2q^4"));
  }

  TEST_CASE("invalid actions") {
    FiniteAction bad = cycle_action({2}, 2);
    bad.generator = {0, 0};
    CHECK_THROWS_AS(orbits(bad), std::invalid_argument);
    bad.generator = {0};
    CHECK_THROWS_AS(orbits(bad), std::invalid_argument);
    CHECK_THROWS_AS(orbits(cycle_action({3}, 4)), OrderViolation);
    CHECK_THROWS_AS(orbits(cycle_action({1}, 0)), std::invalid_argument);
  }

  TEST_CASE("verify_csp verdicts") {
    const auto a = cycle_action({2, 1}, 2);
    const auto good = verify_csp(a, P("1 + q + q^2"));
    CHECK(good.csp);
    CHECK(good.reduced == P("2 + q"));
    CHECK_FALSE(good.mismatch.has_value());
    const auto bad = verify_csp(a, P("2q + 1"));
    CHECK_FALSE(bad.csp);
    REQUIRE(bad.mismatch.has_value());
    CHECK(bad.mismatch->exponent == 0);
    CHECK(bad.mismatch->expected == 2);
    CHECK(bad.mismatch->actual == 1);
    CHECK_FALSE(verify_csp(cycle_action({1}, 2), P("q")).csp);
    CHECK(verify_csp(cycle_action({1}, 1), P("q")).csp);
    CHECK_THROWS_AS(verify_csp(a, P("4 - q")), PolynomialMismatch);
    CHECK_THROWS_AS(verify_csp(a, P("1 + q")), PolynomialMismatch);
    CHECK(verify_csp(FiniteAction{}, IntPolynomial{}).csp);
  }

  TEST_CASE("orbit polynomial always sieves") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int order = 1 + static_cast<int>(rng() % 12);
      std::vector<int> divisors;
      for (int d = 1; d <= order; ++d) {
        if (order % d == 0) divisors.push_back(d);
      }
      std::vector<int> lengths;
      const int orbits_wanted = static_cast<int>(rng() % 6);
      for (int i = 0; i < orbits_wanted; ++i) lengths.push_back(divisors[rng() % divisors.size()]);
      const auto a = cycle_action(lengths, order);
      const auto rep = orbits(a);
      const IntPolynomial poly = csp_polynomial(rep, order);
      const auto v = verify_csp(a, poly);
      CHECK(v.csp);
      CHECK(root_of_unity_condition(poly, rep));
      // shifting by q^order does not change the verdict
      CHECK(verify_csp(a, reduce_cyclic(poly.shifted(static_cast<std::size_t>(order)), order)).csp);
    }
  }

  TEST_CASE("root-of-unity evaluation agrees with orbit counting") {
    for (int r = 1; r <= 5; ++r) {
      const auto a = tl_rotation_action(r);
      const IntPolynomial p = fake_degree(Partition(std::vector<int>(static_cast<std::size_t>(r), 2)));
      CHECK(root_of_unity_condition(p, orbits(a)));
    }
    const auto g2 = root_system("G2");
    const auto X = builtin_crystal("g2_fund7");
    for (int r = 2; r <= 6; ++r) {
      const auto a = promotion_action(X, r);
      const IntPolynomial p = invariants_fake_degree(frobenius_invariants(g2, g2->fundamental_weight(1), r));
      CHECK(root_of_unity_condition(p, orbits(a)));
      CHECK(verify_csp(a, p).csp);
    }
  }

  TEST_CASE("json report shape") {
    const auto v = verify_csp(cycle_action({2, 1}, 2), P("1 + q^2 + q"));
    const auto j = to_json(v);
    for (const char* key : {"size", "order", "orbit_counts", "polynomial", "reduced", "fixed_points",
                            "fixed_point_identity", "csp", "mismatch"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["orbit_counts"]["2"] == 1);
    CHECK(j["mismatch"].is_null());
    CHECK(j["polynomial"].dump() == "[1,1,1]");
    CHECK(to_json(v.report).contains("representatives"));
  }
}
