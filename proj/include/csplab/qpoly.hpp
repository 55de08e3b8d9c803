#pragma once

// Exact polynomials in one variable q and the q-analogue primitives built on
// them. Coefficients are arbitrary precision; nothing here touches floating
// point.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace csplab {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a polynomial division that must be exact leaves a remainder or
/// needs fractional coefficients.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial; index i of the coefficient vector holds the
/// coefficient of q^i. The representation is canonical: trailing zeros are
/// stripped and the zero polynomial has no coefficients at all.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  Polynomial(std::initializer_list<Scalar> coeffs)
      : coeffs_(coeffs.begin(), coeffs.end()) {
    trim();
  }

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }

  /// c * q^exponent
  static Polynomial monomial(std::size_t exponent, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(exponent + 1, Scalar(0));
    v[exponent] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Scalar coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Scalar(0);
  }

  const Scalar& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  Scalar operator()(const Scalar& q) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  /// Multiplies by q^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Scalar> v(k, Scalar(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Scalar& c) { return c >= 0; });
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;

/// Human-readable form such as "1 + 2q + q^3".
std::string to_string(const IntPolynomial& p);

/// Inverse of to_string; also accepts terms in any order, repeated exponents,
/// "q^0" and explicit "*" ("2*q^3").
IntPolynomial parse_polynomial(const std::string& text);

// --- q-analogues --------------------------------------------------------

/// [n] = 1 + q + ... + q^(n-1); [0] = 0.
IntPolynomial q_int(int n);

/// [n]! = [n][n-1]...[1]; [0]! = 1.
IntPolynomial q_factorial(int n);

/// Gauss binomial coefficient; throws std::invalid_argument unless 0 <= k <= n.
IntPolynomial q_binomial(int n, int k);

/// Returns h with g*h == f. Throws InexactDivision if g does not divide f over
/// the integers, std::domain_error if g is zero.
IntPolynomial poly_exact_div(const IntPolynomial& f, const IntPolynomial& g);

/// Representative of f modulo q^n - 1 with degree < n.
IntPolynomial reduce_cyclic(const IntPolynomial& f, int n);

/// gcd of the coefficients (nonnegative); zero for the zero polynomial.
BigInt content(const IntPolynomial& f);

/// Greatest common divisor in Z[q], content included, normalised to a
/// positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Reduced quotient of two integer polynomials.
class RationalQ {
 public:
  RationalQ() : den_(IntPolynomial::constant(1)) {}
  RationalQ(IntPolynomial num);  // NOLINT(google-explicit-constructor)
  RationalQ(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }

  RationalQ inverse() const { return RationalQ(den_, num_); }

  friend RationalQ operator+(const RationalQ& a, const RationalQ& b);
  friend RationalQ operator-(const RationalQ& a, const RationalQ& b);
  friend RationalQ operator*(const RationalQ& a, const RationalQ& b);
  friend RationalQ operator/(const RationalQ& a, const RationalQ& b);
  friend bool operator==(const RationalQ& a, const RationalQ& b) = default;

 private:
  void normalise();

  IntPolynomial num_;
  IntPolynomial den_;
};

/// Coefficients 1/[n]! of exp_q(z) for n = 0..N.
std::vector<RationalQ> exp_q_truncated(int N);

// --- JSON ---------------------------------------------------------------

/// Integer as JSON number when it fits in 64 bits, otherwise as a decimal
/// string.
nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

/// `[c0, c1, ...]`
nlohmann::json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace csplab
