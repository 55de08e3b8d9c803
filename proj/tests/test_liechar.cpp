#include <doctest.h>

#include "csplab/crystal.hpp"
#include "csplab/liechar.hpp"

using namespace csplab;

namespace {

SymFunc S(const std::string& s) { return parse_symfunc(s); }

const std::vector<std::string> kSystems = {"A1", "A2", "A3", "A4", "A5", "B3", "C2", "C3", "G2"};

// dominant weights with label sum at most `total`
std::vector<Weight> small_dominant(int rank, int total) {
  std::vector<Weight> out;
  Weight w = Weight::Zero(rank);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank) {
      out.push_back(w);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      w(i) = v;
      rec(i + 1, left - v);
    }
    w(i) = 0;
  };
  rec(0, total);
  return out;
}

Character power(const Character& chi, int r) {
  Character acc = trivial_character(chi.root_system());
  for (int i = 0; i < r; ++i) acc = char_mul(acc, chi);
  return acc;
}

}  // namespace

TEST_SUITE("liechar") {
  TEST_CASE("root systems") {
    const std::map<std::string, std::pair<std::size_t, std::size_t>> expect = {
        {"A1", {1, 2}},  {"A2", {3, 6}},  {"A3", {6, 24}}, {"A4", {10, 120}}, {"A5", {15, 720}},
        {"B3", {9, 48}}, {"C2", {4, 8}}, {"C3", {9, 48}}, {"G2", {6, 12}}};
    for (const auto& [name, counts] : expect) {
      const auto rs = root_system(name);
      CAPTURE(name);
      CHECK(rs->name() == name);
      CHECK(rs->positive_roots().size() == counts.first);
      CHECK(rs->weyl_group().size() == counts.second);
      const auto& len = rs->weyl_lengths();
      CHECK(len.front() == 0);
      CHECK(*std::max_element(len.begin(), len.end()) == static_cast<int>(counts.first));
      CHECK(std::count(len.begin(), len.end(), static_cast<int>(counts.first)) == 1);
      for (int i = 0; i < rs->rank(); ++i) {
        CHECK(rs->cartan()(i, i) == 2);
        CHECK(rs->reflect(rs->reflect(rs->rho(), i), i) == rs->rho());
      }
    }
    CHECK(root_system("G2")->highest_root() == (Weight(2) << 0, 1).finished());
    CHECK(root_system('A', 3)->highest_root() == (Weight(3) << 1, 0, 1).finished());
    CHECK_THROWS_AS(root_system('E', 6), std::invalid_argument);
    CHECK_THROWS_AS(root_system("F4"), std::invalid_argument);
    CHECK(parse_weight("1,0,2") == (Weight(3) << 1, 0, 2).finished());
    CHECK(to_string(parse_weight("(0,1)")) == "(0,1)");
  }

  TEST_CASE("Freudenthal agrees with the Weyl dimension formula") {
    for (const auto& name : kSystems) {
      const auto rs = root_system(name);
      for (const auto& w : small_dominant(rs->rank(), name == "A5" ? 2 : 3)) {
        CAPTURE(name);
        CAPTURE(to_string(w));
        const Character chi = irreducible_character(rs, w);
        CHECK(BigInt(chi.dimension()) == weyl_dimension(*rs, w));
        CHECK(chi.at(w) == 1);
        CHECK(is_weyl_invariant(chi));
      }
    }
    const auto g2 = root_system("G2");
    const Character v7 = irreducible_character(g2, g2->fundamental_weight(1));
    CHECK(v7.dimension() == 7);
    CHECK(v7.at(Weight::Zero(2)) == 1);
    const auto b3 = root_system('B', 3);
    CHECK(irreducible_character(b3, b3->fundamental_weight(3)).dimension() == 8);
    CHECK(irreducible_character(b3, b3->fundamental_weight(1)).dimension() == 7);
    CHECK_THROWS_AS(irreducible_character(g2, (Weight(2) << -1, 0).finished()), std::invalid_argument);
  }

  TEST_CASE("tensor products: extraction against the alternating Weyl sum") {
    for (const auto& name : {"A2", "B3", "C2", "G2"}) {
      const auto rs = root_system(name);
      const auto ws = small_dominant(rs->rank(), 1);
      for (const auto& a : ws) {
        for (const auto& b : ws) {
          const Character prod = char_mul(irreducible_character(rs, a), irreducible_character(rs, b));
          const auto parts = decompose_by_extraction(prod);
          std::int64_t dim = 0, trivial = 0;
          Character rebuilt(rs);
          for (const auto& [w, m] : parts) {
            CHECK(m > 0);
            const Character irreducible = irreducible_character(rs, w);
            dim += m * irreducible.dimension();
            if (w.isZero()) trivial = m;
            for (const auto& [mu, c] : irreducible.multiplicities()) rebuilt.add(mu, m * c);
          }
          CHECK(dim == prod.dimension());
          CHECK(rebuilt == prod);
          CHECK(trivial == trivial_multiplicity(prod));
          CHECK(trivial == trivial_multiplicity_of_product(
                               {irreducible_character(rs, a), irreducible_character(rs, b)}));
        }
      }
    }
    const auto a1 = root_system('A', 1);
    Character lopsided(a1);
    lopsided.add((Weight(1) << 1).finished(), 1);
    CHECK_THROWS_AS(trivial_multiplicity(lopsided), std::invalid_argument);
    CHECK_THROWS_AS(char_mul(trivial_character(a1), trivial_character(root_system('A', 2))), std::invalid_argument);
  }

  TEST_CASE("Adams operations") {
    const auto rs = root_system('A', 2);
    const Character chi = irreducible_character(rs, rs->fundamental_weight(1));
    CHECK(adams(chi, 1) == chi);
    const Character a2 = adams(chi, 2);
    CHECK(a2.dimension() == 3);
    CHECK(a2.at(2 * rs->fundamental_weight(1)) == 1);
    // psi^2 V = S^2 V - Lambda^2 V
    CHECK(trivial_multiplicity(char_mul(a2, irreducible_character(rs, (Weight(2) << 0, 2).finished()))) == 1);
  }

  TEST_CASE("two rho pairing and twist") {
    const auto a1 = root_system('A', 1);
    const auto g2 = root_system("G2");
    const auto b3 = root_system('B', 3);
    CHECK(two_rho_pairing(*a1, a1->fundamental_weight(1)) == 1);
    CHECK(two_rho_pairing(*g2, g2->fundamental_weight(1)) == 6);
    CHECK(two_rho_pairing(*b3, b3->fundamental_weight(3)) == 6);
    const auto inv = frobenius_invariants(a1, a1->fundamental_weight(1), 4);
    CHECK(inv.twisted());
    CHECK(inv.schur == S("s[2,2]"));
    CHECK(invariants_fake_degree(inv) == parse_polynomial("q^2+q^4"));
    const auto inv6 = frobenius_invariants(a1, a1->fundamental_weight(1), 6);
    CHECK(inv6.schur == S("s[3,3]"));
    CHECK(invariants_fake_degree(inv6) == fake_degree(Partition{2, 2, 2}));
  }

  TEST_CASE("invariant dimensions: characters against crystal enumeration") {
    struct Case {
      std::string system;
      int fundamental;
      int scale;
      std::string crystal;
      int param;
      int rmax;
    };
    const std::vector<Case> cases = {{"A1", 1, 1, "sl2", 1, 8},          {"A1", 1, 2, "sl2", 2, 8},
                                     {"A1", 1, 3, "sl2", 3, 6},          {"A2", 1, 1, "typeA_vector", 3, 6},
                                     {"A3", 1, 1, "typeA_vector", 4, 8}, {"G2", 1, 1, "g2_fund7", 0, 6},
                                     {"B3", 3, 1, "b3_spin", 0, 6},      {"B3", 1, 1, "so_vector", 7, 5}};
    for (const auto& c : cases) {
      const auto rs = root_system(c.system);
      const Weight lambda = c.scale * rs->fundamental_weight(c.fundamental);
      const auto X = builtin_crystal(c.crystal, c.param);
      const Character chi = irreducible_character(rs, lambda);
      CHECK(BigInt(chi.dimension()) == BigInt(X.size()));
      for (int r = 0; r <= c.rmax; ++r) {
        CAPTURE(c.system);
        CAPTURE(r);
        const auto inv = frobenius_invariants(rs, lambda, r);
        const auto words = static_cast<std::int64_t>(enumerate_invariants(X, r).size());
        CHECK(inv.dimension() == words);
        if (r <= 4) CHECK(trivial_multiplicity(power(chi, r)) == words);
        if (r > 0 && c.system == "A1") {
          // m_0 - m_2 of the r-th tensor power
          const Character pw = power(chi, r);
          CHECK(pw.at(Weight::Zero(1)) - pw.at((Weight(1) << 2).finished()) == words);
        }
      }
    }
  }

  TEST_CASE("G2 adjoint invariants") {
    const auto g2 = root_system("G2");
    const Weight theta = g2->highest_root();
    CHECK(irreducible_character(g2, theta).dimension() == 14);
    CHECK(frobenius_invariants(g2, theta, 2).schur == S("s[2]"));
    CHECK(frobenius_invariants(g2, theta, 3).schur == S("s[1,1,1]"));
    CHECK(frobenius_invariants(g2, theta, 4).schur == S("s[4] + 2s[2,2]"));
    CHECK(frobenius_invariants(g2, theta, 5).schur == S("2s[3,1,1] + s[2,1,1,1]"));
    const auto inv6 = frobenius_invariants(g2, theta, 6);
    CHECK(inv6.schur == S("2s[6] + 3s[4,2] + s[3,2,1] + s[3,1,1,1] + 4s[2,2,2] + s[2,1,1,1,1]"));
    CHECK(invariants_fake_degree(inv6) ==
          parse_polynomial("2+3q^2+3q^3+7q^4+5q^5+13q^6+7q^7+12q^8+8q^9+9q^10+3q^11+6q^12+q^13+q^14"));
    CHECK(reduce_cyclic(invariants_fake_degree(inv6), 6) == parse_polynomial("21+8q+16q^2+11q^3+16q^4+8q^5"));
  }

  TEST_CASE("json") {
    const auto a1 = root_system('A', 1);
    const auto j = to_json(frobenius_invariants(a1, a1->fundamental_weight(1), 4));
    CHECK(j.at("degree") == 4);
    CHECK(j.contains("schur"));
    CHECK(to_json(irreducible_character(a1, a1->fundamental_weight(1))).size() == 2);
  }
}
