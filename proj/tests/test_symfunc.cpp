#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "csplab/diagrams.hpp"
#include "csplab/symfunc.hpp"

using namespace csplab;

namespace {

IntPolynomial P(const std::string& s) { return parse_polynomial(s); }
SymFunc S(const std::string& s) { return parse_symfunc(s); }

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int perm_maj(const std::vector<int>& p) {
  int m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) m += static_cast<int>(i) + 1;
  }
  return m;
}

// sum of q^maj over permutations of 1..n with exactly k fixed points
IntPolynomial maj_by_fixed_points(int n, int k) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<BigInt> c(static_cast<std::size_t>(n * (n - 1) / 2 + 1), BigInt(0));
  do {
    int fixed = 0;
    for (int i = 0; i < n; ++i) fixed += p[static_cast<std::size_t>(i)] == i + 1 ? 1 : 0;
    if (fixed == k) c[static_cast<std::size_t>(perm_maj(p))] += 1;
  } while (std::next_permutation(p.begin(), p.end()));
  return IntPolynomial(c);
}

}  // namespace

TEST_SUITE("symfunc") {
  TEST_CASE("partitions") {
    const std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions(n).size() == counts[static_cast<std::size_t>(n)]);
    CHECK(partitions(4).front() == Partition{4});
    CHECK(partitions(4).back() == Partition{1, 1, 1, 1});
    CHECK(parse_partition("2^3,1") == Partition{2, 2, 2, 1});
    CHECK(parse_partition("(4,2)") == Partition{4, 2});
    CHECK(parse_partition("3,0") == Partition{3});
    CHECK(to_string(Partition{}) == "()");
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{3, 2, 1}.b_statistic() == 4);
    CHECK(doubled(Partition{2, 1}) == Partition{4, 2});
    CHECK_THROWS(parse_partition("1,2"));
    CHECK_THROWS(parse_partition("a"));
  }

  TEST_CASE("hook length dimensions") {
    for (int n = 0; n <= 9; ++n) {
      std::int64_t squares = 0;
      for (const auto& l : partitions(n)) {
        const auto d = dim_partition(l);
        squares += d * d;
        CHECK(fake_degree_maj(l)(BigInt(1)) == d);
      }
      CHECK(squares == factorial(n));
    }
  }

  TEST_CASE("fake degrees") {
    CHECK(fake_degree(Partition{2, 2}) == P("q^2+q^4"));
    CHECK(fake_degree(Partition{2, 2, 2}) == P("q^6+q^8+q^9+q^10+q^12"));
    CHECK(fake_degree(Partition{3, 1, 1}) == P("q^3+q^4+2q^5+q^6+q^7"));
    CHECK(fake_degree(Partition{}) == IntPolynomial{1});
    for (int n = 1; n <= 8; ++n) {
      const std::size_t top = static_cast<std::size_t>(n * (n - 1) / 2);
      for (const auto& l : partitions(n)) {
        const IntPolynomial f = fake_degree(l);
        const IntPolynomial g = fake_degree(l.conjugate());
        // f_{lambda'}(q) = q^{n(n-1)/2} f_lambda(1/q)
        for (std::size_t i = 0; i <= top; ++i) CHECK(g.coeff(i) == f.coeff(top - i));
      }
    }
  }

  TEST_CASE("Murnaghan-Nakayama characters are orthonormal") {
    for (int n = 1; n <= 7; ++n) {
      const auto ps = partitions(n);
      std::int64_t classes = 0;
      for (const auto& mu : ps) classes += class_size(mu);
      CHECK(classes == factorial(n));
      for (const auto& a : ps) {
        CHECK(mn_character(a, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == dim_partition(a));
        for (const auto& b : ps) {
          std::int64_t inner = 0;
          for (const auto& mu : ps) inner += class_size(mu) * mn_character(a, mu) * mn_character(b, mu);
          CHECK(inner == (a == b ? factorial(n) : 0));
        }
      }
    }
    CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(z_value(Partition{2, 2, 1}) == 8);
  }

  TEST_CASE("symmetric function bases") {
    CHECK(to_schur(S("h[2,1]")) == S("s[3] + s[2,1]"));
    CHECK(to_schur(S("h[1,1,1]")) == S("s[3] + 2s[2,1] + s[1,1,1]"));
    CHECK(to_homogeneous(S("s[1,1]")) == S("h[1,1] - h[2]"));
    for (int n = 1; n <= 6; ++n) {
      for (const auto& l : partitions(n)) {
        SymFunc s(Basis::schur);
        s.add(l, 1);
        CHECK(to_schur(to_homogeneous(s)) == s);
        SymFunc h(Basis::homogeneous);
        h.add(l, 1);
        CHECK(to_homogeneous(to_schur(h)) == h);
      }
    }
    CHECK(h_product(S("h[2]"), S("h[3,1]")) == S("h[3,2,1]"));
    CHECK(to_string(S("4s[4] + s[3,1]")) == "4s[4] + s[3,1]");
    CHECK(to_string(S("3")) == "3");
    CHECK(S("0").is_zero());
    CHECK(dimension(S("s[2,1] + 2s[3]")) == 4);
    CHECK(symfunc_from_json(to_json(S("2h[3,1] + h[2]"))) == S("2h[3,1] + h[2]"));
  }

  TEST_CASE("cycle values and Schur expansion") {
    for (int n = 1; n <= 6; ++n) {
      CycleTypeFunction trivial, sign;
      trivial.degree = sign.degree = n;
      for (const auto& mu : partitions(n)) {
        trivial.values[mu] = 1;
        sign.values[mu] = (n - mu.length()) % 2 == 0 ? 1 : -1;
      }
      SymFunc t(Basis::schur), s(Basis::schur);
      t.add(Partition{n}, 1);
      s.add(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), 1);
      CHECK(cycle_values_to_schur(trivial) == t);
      CHECK(cycle_values_to_schur(sign) == s);
    }
    CycleTypeFunction half;
    half.degree = 2;
    half.values = {{Partition{2}, 1}, {Partition{1, 1}, 0}};
    CHECK_THROWS_AS(cycle_values_to_schur(half), std::domain_error);
    CycleTypeFunction partial;
    partial.degree = 3;
    partial.values = {{Partition{3}, 1}};
    CHECK_THROWS(partial.check_complete());
    // permutation character on cosets of S(2) x S(1)
    CHECK(homogeneous_cycle_value(Partition{2, 1}, Partition{1, 1, 1}) == 3);
    CHECK(homogeneous_cycle_value(Partition{2, 1}, Partition{2, 1}) == 1);
    CHECK(homogeneous_cycle_value(Partition{2, 1}, Partition{3}) == 0);
  }

  TEST_CASE("fake_degree_module") {
    CHECK(fake_degree_module(S("s[2,2]"), false) == P("q^2+q^4"));
    CHECK(fake_degree_module(S("s[3,3]"), true) == fake_degree(Partition{2, 2, 2}));
    CHECK_THROWS_AS(fake_degree_module(S("-s[2]"), false), std::invalid_argument);
  }

  TEST_CASE("matchings Schur sum") {
    CHECK(matchings_schur_sum(2) == S("s[4] + s[2,2]"));
    CHECK(matchings_schur_sum(3) == S("s[6] + s[4,2] + s[2,2,2]"));
    std::int64_t odd = 1;
    for (int r = 1; r <= 6; ++r) {
      odd *= 2 * r - 1;
      CHECK(dimension(matchings_schur_sum(r)) == odd);
    }
  }

  TEST_CASE("rencontre series") {
    const auto F = rencontre_series(6);
    CHECK(F[0][0] == S("h[]"));
    CHECK(F[1][0].is_zero());
    CHECK(F[4][0] == S("3h[4] + h[2,2]"));
    CHECK(F[3][1] == S("h[2,1]"));
    CHECK(F[4][1] == S("2h[3,1]"));
    CHECK(F[2][2] == S("h[2]"));
  }

  TEST_CASE("q-rencontre polynomials match major index over permutations") {
    for (int n = 0; n <= 7; ++n) {
      CHECK(q_derangement(n) == maj_by_fixed_points(n, 0));
      for (int k = 0; k <= n; ++k) CHECK(q_rencontre(n, k) == maj_by_fixed_points(n, k));
    }
    CHECK_THROWS(q_rencontre(3, 4));
  }
}
