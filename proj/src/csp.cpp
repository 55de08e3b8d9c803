#include "csplab/csp.hpp"

#include <algorithm>

namespace csplab {

std::int64_t OrbitReport::orbit_count() const {
  std::int64_t n = 0;
  for (const auto& [s, c] : counts) n += c;
  return n;
}

bool OrbitReport::fixed_point_identity() const {
  for (int d = 0; d < order; ++d) {
    std::int64_t expected = 0;
    for (const auto& [s, c] : counts) {
      if (d % s == 0) expected += s * c;
    }
    if (static_cast<std::size_t>(d) >= fixed_points.size() || fixed_points[static_cast<std::size_t>(d)] != expected) {
      return false;
    }
  }
  return true;
}

OrbitReport orbits(const FiniteAction& a) {
  const std::size_t n = a.elements.size();
  if (a.generator.size() != n) throw std::invalid_argument("orbits: generator size differs from element count");
  if (a.order < 1) throw std::invalid_argument("orbits: order must be positive");
  std::vector<char> hit(n, 0);
  for (std::size_t g : a.generator) {
    if (g >= n || hit[g]) throw std::invalid_argument("orbits: generator is not a bijection");
    hit[g] = 1;
  }

  OrbitReport rep;
  rep.order = a.order;
  rep.size = n;
  std::vector<char> seen(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int length = 0;
    std::string least = a.elements[start];
    std::size_t x = start;
    do {
      seen[x] = 1;
      least = std::min(least, a.elements[x]);
      x = a.generator[x];
      ++length;
    } while (x != start);
    if (a.order % length != 0) {
      throw OrderViolation("orbit of size " + std::to_string(length) + " does not divide order " +
                           std::to_string(a.order));
    }
    ++rep.counts[length];
    rep.representatives.push_back(least);
  }
  std::sort(rep.representatives.begin(), rep.representatives.end());

  std::vector<std::size_t> power(n);
  for (std::size_t i = 0; i < n; ++i) power[i] = i;
  for (int d = 0; d < a.order; ++d) {
    std::int64_t fixed = 0;
    for (std::size_t i = 0; i < n; ++i) fixed += power[i] == i ? 1 : 0;
    rep.fixed_points.push_back(fixed);
    for (auto& p : power) p = a.generator[p];
  }
  return rep;
}

std::vector<std::vector<std::string>> orbit_sets(const FiniteAction& a) {
  orbits(a);
  std::vector<std::vector<std::string>> out;
  std::vector<char> seen(a.elements.size(), 0);
  for (std::size_t start = 0; start < a.elements.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::string> orbit;
    for (std::size_t x = start; !seen[x]; x = a.generator[x]) {
      seen[x] = 1;
      orbit.push_back(a.elements[x]);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntPolynomial csp_polynomial(const OrbitReport& rep, int n) {
  if (n < 1) throw std::invalid_argument("csp_polynomial: order must be positive");
  std::vector<BigInt> a(static_cast<std::size_t>(n), BigInt(0));
  for (int l = 0; l < n; ++l) {
    for (const auto& [size, count] : rep.counts) {
      if (n % size != 0) continue;
      if (l % (n / size) == 0) a[static_cast<std::size_t>(l)] += count;
    }
  }
  return IntPolynomial(std::move(a));
}

CspVerdict verify_csp(const FiniteAction& a, const IntPolynomial& P) {
  if (!P.has_nonnegative_coefficients()) throw PolynomialMismatch("polynomial has a negative coefficient");
  if (P(BigInt(1)) != BigInt(a.elements.size())) {
    throw PolynomialMismatch("P(1) = " + P(BigInt(1)).str() + " but the set has " +
                             std::to_string(a.elements.size()) + " elements");
  }
  CspVerdict v;
  v.report = orbits(a);
  v.polynomial = P;
  v.reduced = reduce_cyclic(P, a.order);
  v.orbit_polynomial = csp_polynomial(v.report, a.order);
  v.fixed_point_identity = v.report.fixed_point_identity();
  for (int l = 0; l < a.order; ++l) {
    const auto idx = static_cast<std::size_t>(l);
    if (v.reduced.coeff(idx) != v.orbit_polynomial.coeff(idx)) {
      v.mismatch = CspMismatch{l, v.orbit_polynomial.coeff(idx), v.reduced.coeff(idx)};
      break;
    }
  }
  v.csp = !v.mismatch && v.fixed_point_identity;
  return v;
}

nlohmann::json to_json(const OrbitReport& rep) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [s, c] : rep.counts) counts[std::to_string(s)] = c;
  return {{"size", rep.size},
          {"order", rep.order},
          {"orbit_counts", counts},
          {"representatives", rep.representatives},
          {"fixed_points", rep.fixed_points}};
}

nlohmann::json to_json(const CspVerdict& v) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [s, c] : v.report.counts) counts[std::to_string(s)] = c;
  nlohmann::json mismatch = nullptr;
  if (v.mismatch) {
    mismatch = {{"exponent", v.mismatch->exponent},
                {"expected", bigint_to_json(v.mismatch->expected)},
                {"actual", bigint_to_json(v.mismatch->actual)}};
  }
  return {{"size", v.report.size},
          {"order", v.report.order},
          {"orbit_counts", counts},
          {"polynomial", to_json(v.polynomial)},
          {"reduced", to_json(v.reduced)},
          {"fixed_points", v.report.fixed_points},
          {"fixed_point_identity", v.fixed_point_identity},
          {"csp", v.csp},
          {"mismatch", mismatch}};
}

}  // namespace csplab
