#pragma once

// Orbits of a finite cyclic action and the cyclic sieving check.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "csplab/qpoly.hpp"

namespace csplab {

/// The generator of the group acts on elements[k] by sending it to
/// elements[generator[k]]; the group has declared order `order`.
struct FiniteAction {
  std::vector<std::string> elements;
  std::vector<std::size_t> generator;
  int order = 1;
};

/// Raised when the generator's order does not divide the declared order.
class OrderViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a candidate polynomial cannot be a sieving polynomial for the
/// set at all (negative coefficients or P(1) != |X|).
class PolynomialMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OrbitReport {
  int order = 1;
  std::size_t size = 0;
  /// orbit size -> number of orbits
  std::map<int, std::int64_t> counts;
  /// Lexicographically least element of each orbit, sorted.
  std::vector<std::string> representatives;
  /// fix(c^d) for d = 0..order-1, counted directly from the generator.
  std::vector<std::int64_t> fixed_points;

  std::int64_t orbit_count() const;
  /// fix(c^d) == sum over orbit sizes s dividing d of s * count(s), all d.
  bool fixed_point_identity() const;
};

/// Throws std::invalid_argument if the generator is not a bijection and
/// OrderViolation if an orbit size does not divide the order.
OrbitReport orbits(const FiniteAction& a);

/// Orbits as sorted element lists, ordered by their least element.
std::vector<std::vector<std::string>> orbit_sets(const FiniteAction& a);

/// sum_{l<n} a_l q^l, a_l = #orbits whose stabiliser order n/size divides l.
IntPolynomial csp_polynomial(const OrbitReport& rep, int n);

struct CspMismatch {
  int exponent = 0;
  BigInt expected;  // from the orbit structure
  BigInt actual;    // from the reduced polynomial
};

struct CspVerdict {
  OrbitReport report;
  IntPolynomial polynomial;
  IntPolynomial reduced;
  IntPolynomial orbit_polynomial;
  bool fixed_point_identity = false;
  bool csp = false;
  std::optional<CspMismatch> mismatch;
};

/// Throws PolynomialMismatch when P has a negative coefficient or P(1) != |X|.
CspVerdict verify_csp(const FiniteAction& a, const IntPolynomial& P);

nlohmann::json to_json(const OrbitReport& rep);
nlohmann::json to_json(const CspVerdict& v);

}  // namespace csplab
