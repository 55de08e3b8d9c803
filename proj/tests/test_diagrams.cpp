#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "csplab/diagrams.hpp"

using namespace csplab;

namespace {

SymFunc S(const std::string& s) { return parse_symfunc(s); }

std::int64_t catalan(int r) {
  std::int64_t c = 1;
  for (int i = 0; i < r; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return c;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Product of matrices of adjacent transpositions for a reduced word of
// a permutation with the given cycle type: the cycles are consecutive blocks.
IntMatrix block_cycle_matrix(int r, const Partition& mu) {
  const auto dim = static_cast<Eigen::Index>(tl_words(r).size());
  IntMatrix m = IntMatrix::Identity(dim, dim);
  int start = 1;
  for (int len : mu.parts()) {
    for (int i = start; i < start + len - 1; ++i) m = tl_transposition_matrix(r, i) * m;
    start += len;
  }
  return m;
}

}  // namespace

TEST_SUITE("diagrams") {
  TEST_CASE("word encodings") {
    for (int r = 0; r <= 7; ++r) {
      const auto words = tl_words(r);
      CHECK(static_cast<std::int64_t>(words.size()) == catalan(r));
      CHECK(std::is_sorted(words.begin(), words.end(), [](const std::string& a, const std::string& b) {
        std::string x = a, y = b;
        std::replace(x.begin(), x.end(), 'D', 'Z');
        std::replace(y.begin(), y.end(), 'D', 'Z');
        return x < y;
      }));
      for (const auto& w : words) {
        const TLDiagram d = word_to_tl(w);
        CHECK(is_noncrossing(d));
        CHECK(d.points() == 2 * r);
        CHECK(tl_to_word(d) == w);
        CHECK(dyck_to_word(word_to_dyck(w)) == w);
        CHECK(tableau_to_word(word_to_tableau(w)) == w);
      }
    }
    CHECK(to_string(word_to_tl("UUDD")) == "(1,4)(2,3)");
    CHECK(word_to_dyck("UDUD") == std::vector<int>{1, -1, 1, -1});
    CHECK(word_to_tableau("UUDD") == RectTableau{{1, 2}, {3, 4}});
    CHECK_FALSE(is_tl_word("DU"));
    CHECK_FALSE(is_tl_word("UUD"));
    CHECK_THROWS(word_to_tl("UDD"));
    CHECK_FALSE(is_noncrossing(TLDiagram{{{1, 3}, {2, 4}}}));
  }

  TEST_CASE("rotation and word promotion") {
    CHECK(tl_word_promote("UUDD") == "UDUD");
    CHECK(tl_word_promote("UDUD") == "UUDD");
    CHECK(rotate_tl(word_to_tl("UDUD")) == word_to_tl("UUDD"));
    for (int r = 1; r <= 6; ++r) {
      for (const auto& w : tl_words(r)) {
        CHECK(tl_to_word(rotate_tl(word_to_tl(w))) == tl_word_promote(w));
        TLDiagram d = word_to_tl(w);
        for (int s = 0; s < 2 * r; ++s) d = rotate_tl(d);
        CHECK(d == word_to_tl(w));
        CHECK(tl_word_promote(tableau_to_word(jdt_promote(word_to_tableau(w)))) ==
              tl_word_promote(tl_word_promote(w)));
      }
    }
  }

  TEST_CASE("skein action is a representation of S(2r) with character 2^r") {
    for (int r = 1; r <= 4; ++r) {
      const auto dim = static_cast<Eigen::Index>(tl_words(r).size());
      const IntMatrix id = IntMatrix::Identity(dim, dim);
      for (int i = 1; i <= 2 * r - 1; ++i) {
        const IntMatrix si = tl_transposition_matrix(r, i);
        CHECK(si * si == id);
        if (i + 1 <= 2 * r - 1) {
          const IntMatrix sj = tl_transposition_matrix(r, i + 1);
          CHECK(si * sj * si == sj * si * sj);
        }
        for (int j = i + 2; j <= 2 * r - 1; ++j) {
          const IntMatrix sj = tl_transposition_matrix(r, j);
          CHECK(si * sj == sj * si);
        }
      }
      const Partition two_r(std::vector<int>(static_cast<std::size_t>(r), 2));
      for (const auto& mu : partitions(2 * r)) CHECK(block_cycle_matrix(r, mu).trace() == mn_character(two_r, mu));
      CHECK(tl_long_cycle_matrix(r) == tl_rotation_matrix(r));
    }
    const auto combo = tl_skein_transposition(2, 2, word_to_tl("UUDD"));
    CHECK(combo == TLLinearCombo{{word_to_tl("UUDD"), 1}});
    const auto combo2 = tl_skein_transposition(2, 2, word_to_tl("UDUD"));
    CHECK(combo2 == TLLinearCombo{{word_to_tl("UDUD"), -1}, {word_to_tl("UUDD"), -1}});
    CHECK_THROWS(tl_skein_transposition(2, 4, word_to_tl("UDUD")));
  }

  TEST_CASE("rectangular tableaux") {
    const RectTableau t = {{1, 2, 3}, {4, 5, 7}, {6, 8, 9}};
    CHECK(jdt_promote(t) == RectTableau{{1, 2, 6}, {3, 4, 8}, {5, 7, 9}});
    CHECK(tableau_to_lattice_word(t) == Word{1, 1, 1, 2, 2, 3, 2, 3, 3});
    CHECK(lattice_word_to_tableau(tableau_to_lattice_word(t)) == t);
    CHECK(maj(RectTableau{{1, 3}, {2, 4}}) == 4);
    CHECK(maj(RectTableau{{1, 2}, {3, 4}}) == 2);
    CHECK_THROWS(check_rect_tableau(RectTableau{{1, 2}, {3}}));
    CHECK_THROWS(check_rect_tableau(RectTableau{{2, 1}, {3, 4}}));
    CHECK_THROWS(check_rect_tableau(RectTableau{{1, 3}, {2, 5}}));
    for (int n = 2; n <= 4; ++n) {
      for (int k = 1; k <= 3; ++k) {
        const auto X = builtin_crystal("typeA_vector", n);
        IntPolynomial maj_sum;
        for (const auto& w : enumerate_invariants(X, k * n)) {
          RectTableau x = lattice_word_to_tableau(w);
          maj_sum += IntPolynomial::monomial(static_cast<std::size_t>(maj(x)));
          const RectTableau start = x;
          for (int s = 0; s < k * n; ++s) x = jdt_promote(x);
          CHECK(x == start);
        }
        CHECK(maj_sum == fake_degree(Partition(std::vector<int>(static_cast<std::size_t>(n), k))));
      }
    }
  }

  TEST_CASE("perfect matchings") {
    std::int64_t odd = 1;
    for (int r = 1; r <= 5; ++r) {
      odd *= 2 * r - 1;
      const auto ms = matchings_enumerate(r);
      CHECK(static_cast<std::int64_t>(ms.size()) == odd);
      CHECK(std::set<PerfectMatching>(ms.begin(), ms.end()).size() == ms.size());
      Permutation id(static_cast<std::size_t>(2 * r));
      std::iota(id.begin(), id.end(), 1);
      CHECK(fixed_matchings(r, id) == odd);
    }
    CHECK(fixed_matchings(2, Permutation{2, 1, 4, 3}) == 3);
    CHECK(fixed_matchings(2, Permutation{2, 3, 4, 1}) == 1);
    for (int r = 1; r <= 4; ++r) CHECK(cycle_values_to_schur(matching_character(r)) == matchings_schur_sum(r));
    CHECK(rotate_matching(PerfectMatching{{{1, 3}, {2, 4}}}) == PerfectMatching{{{1, 3}, {2, 4}}});
    CHECK_THROWS_AS(matchings_enumerate(7), BudgetExceeded);
  }

  TEST_CASE("derangements and conjugation") {
    const std::vector<std::int64_t> D = {1, 0, 1, 2, 9, 44, 265, 1854, 14833};
    for (int n = 0; n <= 8; ++n) CHECK(static_cast<std::int64_t>(derangements_enumerate(n).size()) == D[static_cast<std::size_t>(n)]);
    CHECK(conj_long_cycle(Permutation{2, 1, 3}) == Permutation{1, 3, 2});
    for (int n = 1; n <= 6; ++n) {
      const auto ders = derangements_enumerate(n);
      for (const auto& tau : all_permutations(n)) {
        std::int64_t brute = 0;
        for (const auto& s : ders) brute += compose(tau, s) == compose(s, tau) ? 1 : 0;
        if (n <= 5) CHECK(fixed_derangements(n, tau) == brute);
      }
    }
    CHECK(cycle_values_to_schur(derangement_character(3)) == S("s[3] + s[1,1,1]"));
    for (int n = 1; n <= 7; ++n) {
      for (const auto& mu : partitions(n)) CHECK(cycle_type(permutation_of_cycle_type(mu)) == mu);
    }
    CHECK(to_string(Permutation{2, 3, 1}) == "(2,3,1)");
    CHECK_THROWS_AS(derangements_enumerate(9), BudgetExceeded);
  }

  TEST_CASE("block-restricted diagrams match sl2 promotion") {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= (k == 1 ? 8 : 6); ++n) {
        const auto X = builtin_crystal("sl2", k);
        const auto words = enumerate_invariants(X, n);
        CHECK(block_tl_subset(k, n).size() == words.size());
        const auto block = orbits(block_tl_rotation_action(k, n));
        const auto promo = promotion_orbits(X, n);
        CHECK(block.counts == promo.counts);
      }
    }
    CHECK_THROWS_AS(block_tl_subset(3, 7), BudgetExceeded);
  }

  TEST_CASE("cyclic actions") {
    for (int r = 1; r <= 6; ++r) {
      const auto a = tl_rotation_action(r);
      CHECK(a.order == 2 * r);
      CHECK(verify_csp(a, fake_degree(Partition(std::vector<int>(static_cast<std::size_t>(r), 2)))).csp);
    }
    for (int r = 1; r <= 5; ++r) {
      CHECK(verify_csp(matching_rotation_action(r), fake_degree_module(matchings_schur_sum(r), false)).csp);
    }
    for (int n = 1; n <= 7; ++n) {
      const auto a = derangement_conjugation_action(n);
      CHECK(verify_csp(a, fake_degree_module(cycle_values_to_schur(derangement_character(n)), false)).csp);
    }
    CHECK(to_json(word_to_tl("UUDD")).dump() == "[[1,4],[2,3]]");
    CHECK(tableau_to_json(RectTableau{{1, 2}, {3, 4}}).dump() == "[[1,2],[3,4]]");
  }
}
