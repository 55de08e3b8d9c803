#include <doctest.h>

#include "csplab/qpoly.hpp"

using namespace csplab;

namespace {

IntPolynomial P(const std::string& s) { return parse_polynomial(s); }

// [n choose k] = [n-1 choose k-1] + q^k [n-1 choose k]
IntPolynomial pascal(int n, int k) {
  if (k == 0 || k == n) return IntPolynomial{1};
  return pascal(n - 1, k - 1) + pascal(n - 1, k).shifted(static_cast<std::size_t>(k));
}

}  // namespace

TEST_SUITE("qpoly") {
  TEST_CASE("canonical form and arithmetic") {
    IntPolynomial z{0, 0, 0};
    CHECK(z.is_zero());
    CHECK_FALSE(z.degree().has_value());
    const IntPolynomial a{1, 2}, b{0, 1};
    CHECK(a * b == IntPolynomial{0, 1, 2});
    CHECK(a - a == IntPolynomial{});
    CHECK((a + b).coeff(1) == 3);
    CHECK(a(BigInt(2)) == 5);
    CHECK(IntPolynomial::monomial(3, 4) == P("4q^3"));
    CHECK_THROWS_AS(IntPolynomial{}.leading(), std::domain_error);
  }

  TEST_CASE("to_string and parse_polynomial round trip") {
    for (const char* s : {"0", "1", "q", "1 + 2q + q^3", "-q^2 + 5", "3 - q^7"}) {
      const IntPolynomial p = P(s);
      CHECK(P(to_string(p)) == p);
    }
    CHECK(to_string(P("q^4+q^2")) == "q^2 + q^4");
    CHECK(P("2*q^3 + q^0 + q^3") == IntPolynomial{1, 0, 0, 3});
    CHECK_THROWS(P("q^"));
    CHECK_THROWS(P("1 + x"));
  }

  TEST_CASE("q-integers, factorials and binomials") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(4) == IntPolynomial{1, 1, 1, 1});
    CHECK(q_factorial(0) == IntPolynomial{1});
    CHECK(q_factorial(3) == P("1 + 2q + 2q^2 + q^3"));
    BigInt fact = 1;
    for (int n = 0; n <= 10; ++n) {
      if (n > 0) fact *= n;
      CHECK(q_factorial(n)(BigInt(1)) == fact);
      for (int k = 0; k <= n; ++k) CHECK(q_binomial(n, k) == pascal(n, k));
    }
    CHECK_THROWS_AS(q_binomial(3, 4), std::invalid_argument);
  }

  TEST_CASE("exact division") {
    const IntPolynomial f = q_int(6) * q_int(5);
    CHECK(poly_exact_div(f, q_int(5)) == q_int(6));
    CHECK(poly_exact_div(f, q_int(3) * q_int(2)) * q_int(3) * q_int(2) == f);
    CHECK_THROWS_AS(poly_exact_div(q_int(5), q_int(2)), InexactDivision);
    CHECK_THROWS_AS(poly_exact_div(P("q"), IntPolynomial{2}), InexactDivision);
    CHECK_THROWS_AS(poly_exact_div(f, IntPolynomial{}), std::domain_error);
  }

  TEST_CASE("reduce_cyclic is congruent modulo q^n - 1") {
    const IntPolynomial f = P("q^6+q^8+q^9+q^10+q^12");
    CHECK(reduce_cyclic(f, 6) == P("2+q^2+q^3+q^4"));
    for (int n = 1; n <= 9; ++n) {
      const IntPolynomial red = reduce_cyclic(f, n);
      CHECK(red.coefficients().size() <= static_cast<std::size_t>(n));
      const IntPolynomial modulus = IntPolynomial::monomial(static_cast<std::size_t>(n)) - IntPolynomial{1};
      CHECK_NOTHROW(poly_exact_div(f - red, modulus));
      CHECK(red(BigInt(1)) == f(BigInt(1)));
    }
  }

  TEST_CASE("content and gcd") {
    CHECK(content(P("4 + 6q")) == 2);
    CHECK(content(IntPolynomial{}) == 0);
    CHECK(poly_gcd(q_int(6), q_int(4)) == q_int(2));
    CHECK(poly_gcd(P("2+2q"), P("4+4q")) == P("2+2q"));
    CHECK(poly_gcd(P("-1-q"), P("1+q")) == P("1+q"));
  }

  TEST_CASE("rational functions and exp_q") {
    const RationalQ x(q_int(6), q_int(3));
    CHECK(x.numerator() == P("1+q^3"));
    CHECK(x.denominator() == IntPolynomial{1});
    const RationalQ h(IntPolynomial{1}, q_int(2));
    CHECK(h + h == RationalQ(IntPolynomial{2}, q_int(2)));
    CHECK(h * RationalQ(q_int(2)) == RationalQ(IntPolynomial{1}));
    CHECK(h / h == RationalQ(IntPolynomial{1}));
    CHECK(h - h == RationalQ(IntPolynomial{}));
    const auto e = exp_q_truncated(5);
    REQUIRE(e.size() == 6);
    for (int n = 0; n <= 5; ++n) {
      CHECK(e[static_cast<std::size_t>(n)] * RationalQ(q_factorial(n)) == RationalQ(IntPolynomial{1}));
    }
    CHECK_THROWS(RationalQ(IntPolynomial{1}, IntPolynomial{}));
  }

  TEST_CASE("json") {
    const BigInt big = boost::multiprecision::pow(BigInt(10), 30);
    CHECK(bigint_to_json(BigInt(42)) == nlohmann::json(42));
    CHECK(bigint_to_json(big).is_string());
    CHECK(bigint_from_json(bigint_to_json(big)) == big);
    const IntPolynomial p{1, 0, big};
    CHECK(polynomial_from_json(to_json(p)) == p);
    CHECK(to_json(P("q^2+q^4")).dump() == "[0,0,1,0,1]");
  }
}
