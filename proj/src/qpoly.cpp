#include "csplab/qpoly.hpp"

#include <cctype>
#include <sstream>

namespace csplab {

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    BigInt mag = c[i] < 0 ? BigInt(-c[i]) : c[i];
    if (first) {
      if (c[i] < 0) os << "-";
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "q";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  IntPolynomial out;
  std::size_t pos = 0;
  auto digits = [&](std::size_t& p) {
    const std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return s.substr(start, p - start);
  };
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("cannot parse polynomial '" + text + "'");
    }
    const std::string coeff = digits(pos);
    std::size_t exponent = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::string e = digits(pos);
        if (e.empty()) throw std::invalid_argument("cannot parse polynomial '" + text + "'");
        exponent = std::stoul(e);
      }
    } else if (coeff.empty()) {
      throw std::invalid_argument("cannot parse polynomial '" + text + "'");
    }
    BigInt c = coeff.empty() ? BigInt(1) : BigInt(coeff);
    out += IntPolynomial::monomial(exponent, negative ? BigInt(-c) : c);
  }
  return out;
}

IntPolynomial q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

IntPolynomial q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  IntPolynomial acc = IntPolynomial::constant(1);
  for (int k = 2; k <= n; ++k) acc *= q_int(k);
  return acc;
}

IntPolynomial q_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
  return poly_exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

IntPolynomial poly_exact_div(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::domain_error("poly_exact_div: division by zero polynomial");
  if (f.is_zero()) return {};
  const std::size_t df = *f.degree();
  const std::size_t dg = *g.degree();
  if (df < dg) throw InexactDivision("poly_exact_div: divisor has larger degree");

  std::vector<BigInt> rem = f.coefficients();
  std::vector<BigInt> quot(df - dg + 1, BigInt(0));
  const BigInt& lead = g.leading();
  const auto& gc = g.coefficients();
  for (std::size_t k = df - dg + 1; k-- > 0;) {
    const BigInt& top = rem[k + dg];
    if (top == 0) continue;
    if (top % lead != 0) throw InexactDivision("poly_exact_div: fractional quotient coefficient");
    BigInt c = top / lead;
    quot[k] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= c * gc[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw InexactDivision("poly_exact_div: nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial reduce_cyclic(const IntPolynomial& f, int n) {
  if (n <= 0) throw std::invalid_argument("reduce_cyclic: modulus exponent must be positive");
  std::vector<BigInt> out(static_cast<std::size_t>(n), BigInt(0));
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) out[i % static_cast<std::size_t>(n)] += c[i];
  return IntPolynomial(std::move(out));
}

BigInt content(const IntPolynomial& f) {
  BigInt g = 0;
  for (const auto& c : f.coefficients()) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? BigInt(-g) : g;
}

namespace {

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  BigInt c = content(f);
  std::vector<BigInt> v = f.coefficients();
  for (auto& x : v) x /= c;
  return IntPolynomial(std::move(v));
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> r = a.coefficients();
  const std::size_t db = *b.degree();
  const auto& bc = b.coefficients();
  const BigInt& lb = b.leading();
  while (r.size() > db && !r.empty()) {
    BigInt top = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= top * bc[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  BigInt c = boost::multiprecision::gcd(content(a), content(b));
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.is_zero()) std::swap(x, y);
  while (!y.is_zero()) {
    if (*x.degree() < *y.degree()) std::swap(x, y);
    IntPolynomial r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  if (x.leading() < 0) x = -x;
  return x * c;
}

RationalQ::RationalQ(IntPolynomial num) : num_(std::move(num)), den_(IntPolynomial::constant(1)) {}

RationalQ::RationalQ(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalise();
}

void RationalQ::normalise() {
  if (den_.is_zero()) throw std::domain_error("RationalQ: zero denominator");
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  IntPolynomial g = poly_gcd(num_, den_);
  num_ = poly_exact_div(num_, g);
  den_ = poly_exact_div(den_, g);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalQ operator+(const RationalQ& a, const RationalQ& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalQ operator-(const RationalQ& a, const RationalQ& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalQ operator*(const RationalQ& a, const RationalQ& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalQ operator/(const RationalQ& a, const RationalQ& b) {
  if (b.num_.is_zero()) throw std::domain_error("RationalQ: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::vector<RationalQ> exp_q_truncated(int N) {
  if (N < 0) throw std::invalid_argument("exp_q_truncated: negative order");
  std::vector<RationalQ> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) out.emplace_back(IntPolynomial::constant(1), q_factorial(n));
  return out;
}

nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

nlohmann::json to_json(const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(bigint_to_json(c));
  return arr;
}

IntPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<BigInt> v;
  for (const auto& c : j) v.push_back(bigint_from_json(c));
  return IntPolynomial(std::move(v));
}

}  // namespace csplab
