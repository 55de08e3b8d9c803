#include "csplab/repro.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "csplab/budget.hpp"
#include "csplab/crystal.hpp"
#include "csplab/csp.hpp"
#include "csplab/diagrams.hpp"
#include "csplab/liechar.hpp"
#include "csplab/qpoly.hpp"
#include "csplab/symfunc.hpp"

namespace csplab {

namespace {

using Counts = std::map<int, std::int64_t>;

struct Context {
  const ReproOptions& options;
  CriterionResult& result;

  void check(bool ok, const std::string& what) {
    if (!ok) result.failures.push_back(what);
  }
  void note(const std::string& what) { result.notes.push_back(what); }

  void expect_poly(const std::string& what, const IntPolynomial& got, const IntPolynomial& want) {
    if (got == want) return;
    std::size_t k = 0;
    while (got.coeff(k) == want.coeff(k)) ++k;
    result.failures.push_back(what + ": expected " + to_string(want) + ", got " + to_string(got) +
                              " (q^" + std::to_string(k) + ": " + want.coeff(k).str() + " vs " +
                              got.coeff(k).str() + ")");
  }
  void expect_sym(const std::string& what, const SymFunc& got, const SymFunc& want) {
    if (got == want) return;
    result.failures.push_back(what + ": expected " + to_string(want) + ", got " + to_string(got));
  }
  void expect_counts(const std::string& what, const OrbitReport& rep, const Counts& want) {
    if (rep.counts == want) return;
    result.failures.push_back(what + ": expected orbits " + counts_string(want) + ", got " +
                              counts_string(rep.counts));
  }
  void expect_int(const std::string& what, std::int64_t got, std::int64_t want) {
    if (got == want) return;
    result.failures.push_back(what + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
  }
  /// verify_csp with the failure reason folded into the report.
  std::optional<CspVerdict> expect_csp(const std::string& what, const FiniteAction& a, const IntPolynomial& P) {
    try {
      CspVerdict v = verify_csp(a, P);
      if (!v.csp) {
        std::string why = v.fixed_point_identity ? "" : " (fixed-point identity fails)";
        if (v.mismatch) {
          why = " at q^" + std::to_string(v.mismatch->exponent) + ": orbits give " + v.mismatch->expected.str() +
                ", polynomial gives " + v.mismatch->actual.str();
        }
        result.failures.push_back(what + ": CSP fails" + why);
      }
      return v;
    } catch (const PolynomialMismatch& e) {
      result.failures.push_back(what + ": " + e.what());
      return std::nullopt;
    }
  }

  /// Fake degree of an invariant module, twisted as computed unless sabotaged.
  IntPolynomial invariant_fake_degree(const InvariantsCharacter& inv) const {
    return fake_degree_module(inv.schur, inv.twisted() != options.sabotage_twist);
  }

  static std::string counts_string(const Counts& c) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      os << (first ? "" : ",") << it->first << ":" << it->second;
      first = false;
    }
    os << "}";
    return os.str();
  }
};

IntPolynomial P(const std::string& text) { return parse_polynomial(text); }
SymFunc S(const std::string& text) { return parse_symfunc(text); }

Partition rectangle(int rows, int cols) { return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols)); }

SymFunc schur_from_table(const std::map<std::string, std::int64_t>& table) {
  SymFunc f(Basis::schur);
  for (const auto& [shape, m] : table) f.add(parse_partition(shape), m);
  return f;
}

std::string rs(int r) { return "r=" + std::to_string(r); }

// --- 1 ------------------------------------------------------------------

void tl_fakedeg(Context& ctx) {
  const std::vector<std::string> printed = {"1", "1", "q^4+q^2", "q^6+q^8+q^9+q^10+q^12"};
  const std::vector<std::string> reduced = {"1", "1", "1+q^2", "1+q+q^2+q^3+q^4"};
  const auto a1 = root_system('A', 1);
  for (int r = 0; r <= 3; ++r) {
    const auto idx = static_cast<std::size_t>(r);
    const Partition shape = rectangle(r, 2);
    const IntPolynomial want = P(printed[idx]);
    ctx.expect_poly(rs(r) + " hook formula", fake_degree(shape), want);
    ctx.expect_poly(rs(r) + " maj sum", fake_degree_maj(shape), want);
    const auto inv = frobenius_invariants(a1, a1->fundamental_weight(1), 2 * r);
    const IntPolynomial via_inv = ctx.invariant_fake_degree(inv);
    ctx.expect_poly(rs(r) + " invariant route", via_inv, want);
    const IntPolynomial red = r == 0 ? via_inv : reduce_cyclic(via_inv, 2 * r);
    ctx.expect_poly(rs(r) + " reduction", red, P(reduced[idx]));
    const IntPolynomial printed_red = r == 0 ? want : reduce_cyclic(want, 2 * r);
    if (printed_red != P(reduced[idx])) {
      ctx.note(rs(r) + ": the printed polynomial " + to_string(want) + " reduces to " + to_string(printed_red) +
               ", not to the printed " + reduced[idx]);
    }
  }
}

// --- 2 ------------------------------------------------------------------

void tl_csp(Context& ctx) {
  const auto a1 = root_system('A', 1);
  for (int r = 1; r <= 6; ++r) {
    const auto inv = frobenius_invariants(a1, a1->fundamental_weight(1), 2 * r);
    const IntPolynomial Pinv = ctx.invariant_fake_degree(inv);
    ctx.expect_poly(rs(r) + " invariant route vs fake_degree(2^r)", Pinv, fake_degree(rectangle(r, 2)));
    const auto v = ctx.expect_csp(rs(r), tl_rotation_action(r), Pinv);
    if (r == 3 && v) ctx.expect_counts("r=3", v->report, {{3, 1}, {2, 1}});
  }
}

// --- 3 ------------------------------------------------------------------

void riordan(Context& ctx) {
  const std::vector<std::int64_t> want = {1, 0, 1, 1, 3, 6, 15, 36, 91, 232};
  const auto X = builtin_crystal("sl2", 2);
  for (int r = 0; r <= 9; ++r) {
    ctx.expect_int(rs(r) + " invariant words", static_cast<std::int64_t>(enumerate_invariants(X, r).size()),
                   want[static_cast<std::size_t>(r)]);
  }
}

// --- 4 ------------------------------------------------------------------

bool three_parts_same_parity(const Partition& p) {
  if (p.length() > 3) return false;
  const int parity = p.part(0) % 2;
  return p.part(1) % 2 == parity && p.part(2) % 2 == parity;
}

void riordan_conjecture(Context& ctx) {
  ctx.result.label = "CONJECTURE-CONFIRMED";
  const auto a1 = root_system('A', 1);
  const auto X = builtin_crystal("sl2", 2);
  const Weight two_omega = 2 * a1->fundamental_weight(1);
  std::map<int, IntPolynomial> fake;
  for (int r = 0; r <= 5; ++r) {
    const auto inv = frobenius_invariants(a1, two_omega, r);
    SymFunc want(Basis::schur);
    for (const auto& p : partitions(r)) {
      if (three_parts_same_parity(p)) want.add(p, 1);
    }
    ctx.expect_sym(rs(r) + " Schur support", inv.schur, want);
    fake[r] = ctx.invariant_fake_degree(inv);
    ctx.expect_csp(rs(r) + " against promotion", promotion_action(X, r), fake[r]);
  }
  ctx.expect_poly("r=4 fake degree", fake[4], P("q^4+q^2+1"));
  ctx.expect_poly("r=4 reduction", reduce_cyclic(fake[4], 4), P("q^2+2"));
  ctx.expect_poly("r=5 fake degree", fake[5], P("q^7+q^6+2q^5+q^4+q^3"));
  ctx.expect_poly("r=5 reduction", reduce_cyclic(fake[5], 5), P("q^4+q^3+q^2+q+2"));
}

// --- 5 ------------------------------------------------------------------

void matchings(Context& ctx) {
  {
    const auto v = ctx.expect_csp("r=1", matching_rotation_action(1),
                                  fake_degree_module(matchings_schur_sum(1), false));
    if (v) ctx.expect_counts("r=1", v->report, {{1, 1}});
  }
  {
    const auto a = matching_rotation_action(2);
    const std::set<std::string> elems(a.elements.begin(), a.elements.end());
    ctx.check(elems == std::set<std::string>{"(1,2)(3,4)", "(1,4)(2,3)", "(1,3)(2,4)"}, "r=2 element set");
    const auto v = ctx.expect_csp("r=2", a, fake_degree_module(matchings_schur_sum(2), false));
    if (v) {
      ctx.expect_poly("r=2 reduction", v->reduced, P("2+q^2"));
      ctx.expect_counts("r=2", v->report, {{2, 1}, {1, 1}});
    }
  }
  {
    const IntPolynomial P3 = fake_degree_module(matchings_schur_sum(3), false);
    const IntPolynomial structured =
        IntPolynomial{1} + poly_exact_div(q_int(6) * q_int(3), q_int(2)).shifted(2) +
        poly_exact_div(q_int(6) * q_int(5), q_int(3) * q_int(2)).shifted(6);
    ctx.expect_poly("r=3 product form", P3, structured);
    ctx.expect_poly("r=3 expanded", P3, P("1+q^2+q^3+2q^4+q^5+3q^6+q^7+2q^8+q^9+q^10+q^12"));
    const IntPolynomial literal_form = IntPolynomial{1} + (q_int(6) * q_int(3)).shifted(2) +
                                       poly_exact_div(q_int(6) * q_int(5), q_int(3) * q_int(2)).shifted(6);
    ctx.note("r=3: the middle term needs the factor 1/[2]; without it P(1) = " + literal_form(BigInt(1)).str() +
             " instead of 15");
    const auto a = matching_rotation_action(3);
    const auto v = ctx.expect_csp("r=3", a, P3);
    if (v) {
      ctx.expect_poly("r=3 reduction", v->reduced, P("5+q+3q^2+2q^3+3q^4+q^5"));
      ctx.expect_counts("r=3", v->report, {{6, 1}, {3, 2}, {2, 1}, {1, 1}});
    }
    std::set<std::set<std::string>> got;
    for (const auto& o : orbit_sets(a)) got.emplace(o.begin(), o.end());
    const std::set<std::set<std::string>> want = {
        {"(1,4)(2,5)(3,6)"},
        {"(1,2)(3,4)(5,6)", "(1,6)(2,3)(4,5)"},
        {"(1,6)(2,5)(3,4)", "(1,2)(3,6)(4,5)", "(1,4)(2,3)(5,6)"},
        {"(1,3)(2,5)(4,6)", "(1,5)(2,4)(3,6)", "(1,4)(2,6)(3,5)"},
        {"(1,3)(2,4)(5,6)", "(1,6)(2,4)(3,5)", "(1,2)(3,5)(4,6)", "(1,5)(2,3)(4,6)", "(1,5)(2,6)(3,4)",
         "(1,3)(2,6)(4,5)"}};
    ctx.check(got == want, "r=3 orbits differ from the listed orbits");
  }
  {
    const IntPolynomial P4 = fake_degree_module(matchings_schur_sum(4), false);
    ctx.expect_poly("r=4 polynomial", P4,
                    P("1+q^2+q^3+3q^4+2q^5+5q^6+4q^7+8q^8+6q^9+9q^10+7q^11+11q^12+7q^13+9q^14+6q^15+8q^16+"
                      "4q^17+5q^18+2q^19+3q^20+q^21+q^22+q^24"));
    const auto a = matching_rotation_action(4);
    ctx.expect_int("r=4 element count", static_cast<std::int64_t>(a.elements.size()), 105);
    const auto v = ctx.expect_csp("r=4", a, P4);
    if (v) {
      ctx.expect_poly("r=4 reduction", v->reduced, P("18+10q+15q^2+10q^3+17q^4+10q^5+15q^6+10q^7"));
      ctx.expect_counts("r=4", v->report, {{8, 10}, {4, 5}, {2, 2}, {1, 1}});
    }
  }
}

// --- 6 ------------------------------------------------------------------

void matchings_character(Context& ctx) {
  const auto b3 = root_system('B', 3);
  for (int r = 1; r <= 4; ++r) {
    const SymFunc want = matchings_schur_sum(r);
    ctx.expect_sym(rs(r) + " permutation character", cycle_values_to_schur(matching_character(r)), want);
    if (r <= 3) {
      const auto inv = frobenius_invariants(b3, b3->fundamental_weight(1), 2 * r);
      ctx.expect_sym(rs(r) + " invariants of the vector representation", inv.schur, want);
    }
  }
}

// --- 7 ------------------------------------------------------------------

void adjoint(Context& ctx) {
  using Row = std::map<std::string, std::int64_t>;
  // tables[r][n]
  std::map<int, std::map<int, Row>> tables;
  tables[2][2] = {{"2", 1}};
  tables[3][2] = {{"1,1,1", 1}};
  tables[3][3] = {{"3", 1}, {"1,1,1", 1}};
  {
    const std::vector<std::string> cols = {"4", "2,2", "2,1,1"};
    const std::map<int, std::vector<std::int64_t>> rows = {{2, {1, 1, 0}}, {3, {1, 2, 1}}, {4, {2, 2, 1}}};
    for (const auto& [n, row] : rows) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (row[c] != 0) tables[4][n][cols[c]] = row[c];
      }
    }
  }
  {
    const std::vector<std::string> cols = {"5", "4,1", "3,2", "3,1,1", "2,2,1", "2,1,1,1", "1^5"};
    const std::map<int, std::vector<std::int64_t>> rows = {{2, {0, 0, 0, 1, 0, 0, 0}},
                                                           {3, {1, 1, 1, 2, 1, 1, 1}},
                                                           {4, {1, 1, 2, 3, 1, 1, 1}},
                                                           {5, {2, 1, 2, 3, 1, 1, 1}}};
    for (const auto& [n, row] : rows) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (row[c] != 0) tables[5][n][cols[c]] = row[c];
      }
    }
  }
  {
    const std::vector<std::string> cols = {"6",   "5,1",   "4,2",     "3,3",     "4,1,1",
                                           "3,2,1", "2,2,2", "3,1,1,1", "2,2,1,1", "2,1,1,1,1"};
    const std::map<int, std::vector<std::int64_t>> rows = {{2, {1, 0, 1, 0, 0, 0, 1, 0, 0, 0}},
                                                           {3, {2, 0, 3, 1, 2, 2, 3, 3, 1, 1}},
                                                           {4, {3, 1, 5, 1, 3, 4, 5, 4, 2, 2}},
                                                           {5, {3, 1, 6, 1, 4, 4, 5, 4, 2, 2}},
                                                           {6, {4, 1, 6, 1, 4, 4, 5, 4, 2, 2}}};
    for (const auto& [n, row] : rows) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (row[c] != 0) tables[6][n][cols[c]] = row[c];
      }
    }
  }
  const std::map<int, std::string> printed = {
      {2, "1"},
      {3, "1+q^3"},
      {4, "2+2q^2+q^3+3q^4+q^5"},
      {5, "2+q+3q^2+6q^3+7q^4+9q^5+7q^6+5q^7+2q^8+q^9+q^10"},
      {6, "4+q+7q^2+12q^3+21q^4+24q^5+38q^6+33q^7+37q^8+30q^9+25q^10+14q^11+13q^12+4q^13+2q^14"}};
  const std::map<int, std::string> printed_reduction = {{2, "1"},
                                                        {3, "2"},
                                                        {4, "5+q+2q^2+q^3"},
                                                        {5, "12+8q+8q^2+8q^3+8q^4"},
                                                        {6, "51+35q+43q^2+39q^3+43q^4+35q^5"}};
  const std::map<int, std::int64_t> derangements = {{2, 1}, {3, 2}, {4, 9}, {5, 44}, {6, 265}};

  for (int r = 2; r <= 6; ++r) {
    InvariantsCharacter stable;
    for (int n = 2; n <= r; ++n) {
      const auto sys = root_system('A', n - 1);
      const auto inv = frobenius_invariants(sys, sys->highest_root(), r);
      ctx.expect_sym(rs(r) + " sl" + std::to_string(n), inv.schur, schur_from_table(tables[r][n]));
      if (n == r) stable = inv;
    }
    ctx.expect_int(rs(r) + " sum of m_lambda dim(lambda)", dimension(stable.schur), derangements.at(r));
    const IntPolynomial Pr = ctx.invariant_fake_degree(stable);
    const IntPolynomial printed_poly = P(printed.at(r));
    ctx.expect_poly(rs(r) + " fake degree", Pr, printed_poly);
    const IntPolynomial red = reduce_cyclic(Pr, r);
    const IntPolynomial printed_red = P(printed_reduction.at(r));
    ctx.expect_poly(rs(r) + " reduction", red, printed_red);
    if (printed_red(BigInt(1)) != BigInt(derangements.at(r))) {
      ctx.note(rs(r) + ": printed reduction " + to_string(printed_red) + " sums to " +
               printed_red(BigInt(1)).str() + ", not " + std::to_string(derangements.at(r)) +
               "; the printed polynomial reduces to " + to_string(reduce_cyclic(printed_poly, r)));
    }
    const auto a = derangement_conjugation_action(r);
    ctx.expect_int(rs(r) + " derangements", static_cast<std::int64_t>(a.elements.size()), derangements.at(r));
    ctx.expect_csp(rs(r) + " conjugation orbits", a, Pr);
  }
}

// --- 8 ------------------------------------------------------------------

void rencontre(Context& ctx) {
  const int N = 8;
  const auto F = rencontre_series(N);
  const std::vector<std::string> h_row = {"h[2]", "2h[3]", "3h[4] + h[2,2]", "4h[5] + 4h[3,2]"};
  const std::vector<std::string> s_row = {"s[2]", "2s[3]", "4s[4] + s[3,1] + s[2,2]", "8s[5] + 4s[4,1] + 4s[3,2]"};
  for (int n = 2; n <= 5; ++n) {
    const auto i = static_cast<std::size_t>(n - 2);
    ctx.expect_sym("F(" + std::to_string(n) + ",0)", F[static_cast<std::size_t>(n)][0], S(h_row[i]));
    ctx.expect_sym("F(" + std::to_string(n) + ",0) Schur", to_schur(F[static_cast<std::size_t>(n)][0]), S(s_row[i]));
  }
  std::vector<std::int64_t> D;
  for (int m = 0; m <= N; ++m) D.push_back(static_cast<std::int64_t>(derangements_enumerate(m).size()));
  for (int n = 0; n <= N; ++n) {
    std::int64_t binom = 1;
    for (int k = 0; k <= n; ++k) {
      const auto nk = static_cast<std::size_t>(n);
      const auto kk = static_cast<std::size_t>(k);
      SymFunc hk(Basis::homogeneous);
      hk.add(k == 0 ? Partition{} : Partition{k}, 1);
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      ctx.expect_sym("F" + tag + " = h_k F(n-k,0)", F[nk][kk], h_product(hk, F[nk - kk][0]));
      const std::int64_t count = binom * D[nk - kk];
      ctx.expect_int("dim F" + tag, dimension(F[nk][kk]), count);
      const BigInt at_one = q_rencontre(n, k)(BigInt(1));
      ctx.check(at_one == BigInt(count), "D" + tag + "(1) = " + at_one.str() + ", expected " + std::to_string(count));
      binom = binom * (n - k) / (k + 1);
    }
  }
}

// --- 9 ------------------------------------------------------------------

void g2(Context& ctx) {
  const auto X = builtin_crystal("g2_fund7");
  const auto sys = root_system("G2");
  const std::vector<std::int64_t> counts = {1, 0, 1, 1, 4, 10, 35};
  for (int r = 0; r <= 6; ++r) {
    ctx.expect_int(rs(r) + " invariant words", static_cast<std::int64_t>(enumerate_invariants(X, r).size()),
                   counts[static_cast<std::size_t>(r)]);
  }
  try {
    ctx.expect_int("r=7 invariant words", static_cast<std::int64_t>(enumerate_invariants(X, 7).size()), 120);
  } catch (const BudgetExceeded& e) {
    ctx.check(false, std::string("r=7: ") + e.what());
  }

  using Row = std::map<std::string, std::int64_t>;
  const std::map<int, Row> vector_table = {{2, {{"2", 1}}},
                                           {3, {{"1,1,1", 1}}},
                                           {4, {{"4", 1}, {"2,2", 1}, {"1,1,1,1", 1}}},
                                           {5, {{"3,1,1", 1}, {"2,1,1,1", 1}}},
                                           {6, {{"6", 1}, {"4,2", 1}, {"3,1,1,1", 1}, {"2,2,2", 2}, {"2,1,1,1,1", 1}}}};
  const std::map<int, std::string> printed = {
      {4, "1+q^2+q^4+q^6"},
      {5, "q^3+q^4+2q^5+2q^6+2q^7+q^8+q^9"},
      {6, "1+q^2+q^3+2q^4+q^5+5q^6+2q^7+5q^8+4q^9+5q^10+2q^11+4q^12+q^13+q^14"}};
  const std::map<int, std::string> printed_reduction = {
      {4, "2+2q^2"}, {5, "2+2q+2q^2+2q^3+2q^4"}, {6, "10+3q+7q^2+5q^3+7q^4+3q^5"}};
  const std::map<int, Counts> orbit_reports = {
      {4, {{2, 2}}}, {5, {{5, 2}}}, {6, {{6, 3}, {3, 4}, {2, 2}, {1, 1}}}};

  for (int r = 2; r <= 6; ++r) {
    const auto action = promotion_action(X, r);
    const SymFunc table = schur_from_table(vector_table.at(r));
    const IntPolynomial from_table = fake_degree_module(table, false);
    if (printed.count(r)) ctx.expect_poly(rs(r) + " printed polynomial", from_table, P(printed.at(r)));
    const auto v = ctx.expect_csp(rs(r) + " printed table", action, from_table);
    if (v && printed_reduction.count(r)) ctx.expect_poly(rs(r) + " reduction", v->reduced, P(printed_reduction.at(r)));
    if (v && orbit_reports.count(r)) ctx.expect_counts(rs(r), v->report, orbit_reports.at(r));

    const auto inv = frobenius_invariants(sys, sys->fundamental_weight(1), r);
    ctx.expect_sym(rs(r) + " invariants", inv.schur, table);
    const IntPolynomial via_inv = ctx.invariant_fake_degree(inv);
    ctx.expect_poly(rs(r) + " invariant route", via_inv, from_table);
    ctx.expect_csp(rs(r) + " invariant route", action, via_inv);
  }

  const std::map<int, Row> adjoint_table = {
      {2, {{"2", 1}}}, {3, {{"1,1,1", 1}}}, {4, {{"4", 1}, {"2,2", 2}}}};
  for (int r = 2; r <= 4; ++r) {
    const auto inv = frobenius_invariants(sys, sys->highest_root(), r);
    ctx.expect_sym(rs(r) + " adjoint invariants", inv.schur, schur_from_table(adjoint_table.at(r)));
    if (r == 4) {
      const IntPolynomial Pa = ctx.invariant_fake_degree(inv);
      ctx.expect_poly("r=4 adjoint fake degree", Pa, P("1+2q^2+2q^4"));
      ctx.expect_poly("r=4 adjoint reduction", reduce_cyclic(Pa, 4), P("3+2q^2"));
    }
  }
}

// --- 10 -----------------------------------------------------------------

void spin(Context& ctx) {
  const auto X = builtin_crystal("b3_spin");
  const auto b3 = root_system('B', 3);
  const Weight omega3 = b3->fundamental_weight(3);
  for (int r = 1; r <= 5; r += 2) {
    ctx.expect_int(rs(r) + " invariant words", static_cast<std::int64_t>(enumerate_invariants(X, r).size()), 0);
    ctx.expect_int(rs(r) + " invariant dimension", frobenius_invariants(b3, omega3, r).dimension(), 0);
  }
  struct Case {
    int r;
    std::string table;
    std::string poly;
    std::string reduction;
    Counts orbits;
  };
  const std::vector<Case> cases = {
      {4, "s[4] + s[2,2] + s[1,1,1,1]", "1+q^2+q^4+q^6", "2+2q^2", {{2, 2}}},
      {6, "s[6] + s[4,2] + s[3,1,1,1] + s[2,2,2] + s[2,1,1,1,1]",
       "1+q^2+q^3+2q^4+q^5+4q^6+2q^7+4q^8+3q^9+4q^10+2q^11+3q^12+q^13+q^14", "8+3q+6q^2+4q^3+6q^4+3q^5",
       {{6, 3}, {3, 3}, {2, 1}, {1, 1}}}};
  for (const auto& c : cases) {
    const auto action = promotion_action(X, c.r);
    const SymFunc table = S(c.table);
    const IntPolynomial from_table = fake_degree_module(table, false);
    ctx.expect_poly(rs(c.r) + " printed polynomial", from_table, P(c.poly));
    const auto v = ctx.expect_csp(rs(c.r) + " printed table", action, from_table);
    if (v) {
      ctx.expect_poly(rs(c.r) + " reduction", v->reduced, P(c.reduction));
      ctx.expect_counts(rs(c.r), v->report, c.orbits);
    }
    const auto inv = frobenius_invariants(b3, omega3, c.r);
    ctx.expect_sym(rs(c.r) + " invariants", inv.schur, table);
    const IntPolynomial via_inv = ctx.invariant_fake_degree(inv);
    ctx.expect_poly(rs(c.r) + " invariant route", via_inv, from_table);
    ctx.expect_csp(rs(c.r) + " invariant route", action, via_inv);
  }
}

// --- 11 -----------------------------------------------------------------

void promotion(Context& ctx) {
  const std::vector<std::pair<RectTableau, RectTableau>> worked = {
      {{{1, 2, 3}, {4, 5, 7}, {6, 8, 9}}, {{1, 2, 6}, {3, 4, 8}, {5, 7, 9}}},
      {{{1, 4, 6}, {2, 5, 7}, {3, 9, 11}, {8, 10, 12}}, {{1, 3, 5}, {2, 4, 6}, {7, 8, 10}, {9, 11, 12}}}};
  const std::vector<std::pair<std::string, std::string>> worked_words = {{"111223233", "112231323"},
                                                                         {"123121243434", "121212334344"}};
  for (std::size_t i = 0; i < worked.size(); ++i) {
    const auto& [before, after] = worked[i];
    const std::string tag = "example " + std::to_string(i + 1);
    ctx.check(jdt_promote(before) == after, tag + ": jeu de taquin");
    const Word w = tableau_to_lattice_word(before);
    ctx.check(word_to_string(w) == worked_words[i].first, tag + ": lattice word");
    const auto X = builtin_crystal("typeA_vector", static_cast<int>(before.size()));
    const Word pw = promote(X, w);
    ctx.check(word_to_string(pw) == worked_words[i].second, tag + ": crystal promotion gives " + word_to_string(pw));
  }

  for (int k = 1; k <= 3; ++k) {
    const RectTableau row = {[k] {
      std::vector<int> v;
      for (int j = 1; j <= k; ++j) v.push_back(j);
      return v;
    }()};
    ctx.check(jdt_promote(row) == row, "single row of length " + std::to_string(k));
  }
  for (int n = 2; n <= 4; ++n) {
    const auto X = builtin_crystal("typeA_vector", n);
    for (int k = 1; k <= 3; ++k) {
      const std::string tag = "shape " + std::to_string(k) + "^" + std::to_string(n);
      const auto words = enumerate_invariants(X, k * n);
      ctx.expect_int(tag + " tableau count", static_cast<std::int64_t>(words.size()), dim_partition(rectangle(n, k)));
      std::size_t bad = 0;
      for (const auto& w : words) {
        if (jdt_promote(lattice_word_to_tableau(w)) != lattice_word_to_tableau(promote(X, w))) ++bad;
      }
      ctx.check(bad == 0, tag + ": " + std::to_string(bad) + " tableaux where the two promotions differ");
      try {
        promotion_orbits(X, k * n);
      } catch (const std::exception& e) {
        ctx.check(false, tag + ": " + e.what());
      }
    }
  }
  for (const auto& [name, param, rmax] : std::vector<std::tuple<std::string, int, int>>{
           {"sl2", 1, 10}, {"sl2", 2, 8}, {"sl2", 3, 7}, {"g2_fund7", 0, 6}, {"b3_spin", 0, 6}, {"so_vector", 7, 5}}) {
    const auto X = builtin_crystal(name, param);
    for (int r = 0; r <= rmax; ++r) {
      try {
        promotion_orbits(X, r);
      } catch (const std::exception& e) {
        ctx.check(false, X.name() + " " + rs(r) + ": " + e.what());
      }
    }
  }

  for (int r = 1; r <= 6; ++r) {
    for (const auto& w : tl_words(r)) {
      if (tl_to_word(rotate_tl(word_to_tl(w))) != tl_word_promote(w)) {
        ctx.check(false, rs(r) + ": word promotion differs from rotation at " + w);
        break;
      }
    }
  }
  for (int r = 1; r <= 4; ++r) {
    ctx.check(tl_long_cycle_matrix(r) == tl_rotation_matrix(r), rs(r) + ": long cycle differs from rotation");
  }
  for (int n = 0; n <= 10; ++n) {
    for (const auto& lambda : partitions(n)) {
      if (fake_degree(lambda) != fake_degree_maj(lambda)) {
        ctx.check(false, "fake degree of " + to_string(lambda) + ": hook and maj forms differ");
      }
    }
  }
  for (int r = 0; r <= 8; ++r) {
    IntPolynomial sum;
    for (const auto& lambda : partitions(r)) sum += fake_degree(lambda) * BigInt(dim_partition(lambda));
    ctx.expect_poly(rs(r) + " sum of dim * fake degree", sum, q_factorial(r));
  }
}

using Runner = std::function<void(Context&)>;

const std::vector<std::pair<CriterionInfo, Runner>>& registry() {
  static const std::vector<std::pair<CriterionInfo, Runner>> table = {
      {{1, "tl-fakedeg", "TL fake degrees and reductions", 1.0}, tl_fakedeg},
      {{2, "tl-csp", "CSP for rotation of TL diagrams", 1.0}, tl_csp},
      {{3, "riordan", "Riordan counts of sl2 invariant words", 5.0}, riordan},
      {{4, "riordan-conjecture", "Riordan Schur support and CSP", 30.0}, riordan_conjecture},
      {{5, "matchings", "Perfect matchings under rotation", 5.0}, matchings},
      {{6, "matchings-character", "Matching character is sum of s_2mu", 30.0}, matchings_character},
      {{7, "adjoint", "Adjoint sl(n) tables and derangement CSP", 120.0}, adjoint},
      {{8, "rencontre", "Rencontre series", 5.0}, rencontre},
      {{9, "g2", "G2 vector and adjoint invariants", 120.0}, g2},
      {{10, "spin", "Spin representation of so(7)", 180.0}, spin},
      {{11, "promotion", "Promotion equivalences", 60.0}, promotion},
  };
  return table;
}

CriterionResult run_one(const CriterionInfo& info, const Runner& run, const ReproOptions& options) {
  CriterionResult result;
  result.id = info.id;
  result.key = info.key;
  result.title = info.title;
  result.limit_seconds = info.limit_seconds;
  Context ctx{options, result};
  const auto start = std::chrono::steady_clock::now();
  try {
    run(ctx);
  } catch (const std::exception& e) {
    result.failures.push_back(std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.seconds > info.limit_seconds) {
    std::ostringstream os;
    os << "runtime " << std::fixed << std::setprecision(2) << result.seconds << " s exceeds " << info.limit_seconds
       << " s";
    result.failures.push_back(os.str());
  }
  result.pass = result.failures.empty();
  return result;
}

}  // namespace

const std::vector<CriterionInfo>& acceptance_criteria() {
  static const std::vector<CriterionInfo> infos = [] {
    std::vector<CriterionInfo> v;
    for (const auto& [info, run] : registry()) v.push_back(info);
    return v;
  }();
  return infos;
}

std::vector<CriterionResult> run_acceptance(const ReproOptions& options) {
  std::set<std::string> wanted(options.only.begin(), options.only.end());
  for (const auto& w : wanted) {
    bool known = false;
    for (const auto& info : acceptance_criteria()) {
      if (w == info.key || w == std::to_string(info.id)) known = true;
    }
    if (!known) throw std::invalid_argument("unknown criterion '" + w + "'");
  }
  std::vector<std::pair<CriterionInfo, Runner>> selected;
  for (const auto& entry : registry()) {
    if (wanted.empty() || wanted.count(entry.first.key) || wanted.count(std::to_string(entry.first.id))) {
      selected.push_back(entry);
    }
  }
  std::vector<CriterionResult> results;
  if (options.parallel) {
    std::vector<std::future<CriterionResult>> futures;
    for (const auto& [info, run] : selected) {
      futures.push_back(std::async(std::launch::async, run_one, info, run, std::cref(options)));
    }
    for (auto& f : futures) results.push_back(f.get());
  } else {
    for (const auto& [info, run] : selected) results.push_back(run_one(info, run, options));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << std::left << std::setw(20) << r.key
     << std::right << r.title;
  if (r.pass && !r.label.empty()) os << "  " << r.label;
  os << "\n";
  for (const auto& f : r.failures) os << "      fail: " << f << "\n";
  for (const auto& n : r.notes) os << "      note: " << n << "\n";
  return os.str();
}

nlohmann::json to_json(const CriterionResult& r) {
  return {{"id", r.id},
          {"key", r.key},
          {"title", r.title},
          {"pass", r.pass},
          {"label", r.label},
          {"failures", r.failures},
          {"notes", r.notes},
          {"limit_seconds", r.limit_seconds}};
}

}  // namespace csplab
