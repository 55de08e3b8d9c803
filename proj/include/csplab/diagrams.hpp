#pragma once

// Temperley-Lieb diagrams, Dyck paths, rectangular tableaux, perfect
// matchings and derangements, with their rotations.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "csplab/budget.hpp"
#include "csplab/crystal.hpp"
#include "csplab/csp.hpp"
#include "csplab/symfunc.hpp"

namespace csplab {

/// Arcs (a, b), a < b, on points 1..2r, sorted by opener.
struct TLDiagram {
  std::vector<std::pair<int, int>> arcs;

  int points() const { return 2 * static_cast<int>(arcs.size()); }
  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;
  friend auto operator<=>(const TLDiagram&, const TLDiagram&) = default;
};

/// Same representation as TLDiagram, crossings allowed.
using PerfectMatching = TLDiagram;

/// Image sequence of a permutation of 1..n.
using Permutation = std::vector<int>;

/// Rows of a standard tableau, top row first.
using RectTableau = std::vector<std::vector<int>>;

using TLLinearCombo = std::map<TLDiagram, std::int64_t>;

/// Balanced word in U and D whose prefixes never have more D than U.
bool is_tl_word(const std::string& w);
/// All such words of length 2r, lexicographic with U < D.
std::vector<std::string> tl_words(int r);

TLDiagram word_to_tl(const std::string& w);
std::string tl_to_word(const TLDiagram& d);
std::vector<int> word_to_dyck(const std::string& w);
std::string dyck_to_word(const std::vector<int>& steps);
/// Two-row tableau: positions of U in the first row, D in the second.
RectTableau word_to_tableau(const std::string& w);
std::string tableau_to_word(const RectTableau& t);

bool is_noncrossing(const TLDiagram& d);
std::string to_string(const TLDiagram& d);

/// Rotation of the disc by one step: point i becomes point i-1 (1 becomes 2r).
TLDiagram rotate_tl(const TLDiagram& d);
PerfectMatching rotate_matching(const PerfectMatching& m);

/// Throws std::invalid_argument unless t is a standard tableau of
/// rectangular shape filled with 1..kn.
void check_rect_tableau(const RectTableau& t);
RectTableau jdt_promote(const RectTableau& t);
/// Sum of i such that i+1 lies in a strictly lower row.
int maj(const RectTableau& t);
/// Letter at position v is the (1-based) row containing v.
Word tableau_to_lattice_word(const RectTableau& t);
RectTableau lattice_word_to_tableau(const Word& w);

/// Promotion on TL words: drop the leading U, turn into U the last D whose
/// prefix is still a TL word, append D.
std::string tl_word_promote(const std::string& w);

/// s_i acting on the skein module with loop value -2 and
/// crossing = -identity - cupcap.
TLLinearCombo tl_skein_transposition(int r, int i, const TLDiagram& d);

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Matrix of s_i on the basis tl_words(r); column j is the image of basis j.
IntMatrix tl_transposition_matrix(int r, int i);
/// Permutation matrix of rotate_tl on the basis tl_words(r).
IntMatrix tl_rotation_matrix(int r);
/// Matrix of the long cycle s_{2r-1} ... s_2 s_1 (s_1 applied first); r <= 4.
IntMatrix tl_long_cycle_matrix(int r);

/// All perfect matchings of 1..2r, r <= 6.
std::vector<PerfectMatching> matchings_enumerate(int r);
/// Number of perfect matchings of 1..2r mapped to themselves by sigma.
std::int64_t fixed_matchings(int r, const Permutation& sigma);

/// Derangements of 1..n in lexicographic order, n <= 8.
std::vector<Permutation> derangements_enumerate(int n);
/// c sigma c^-1 with c = (1 2 ... n).
Permutation conj_long_cycle(const Permutation& sigma);
/// Number of derangements of 1..n commuting with tau.
std::int64_t fixed_derangements(int n, const Permutation& tau);

/// TL diagrams on kn points with no arc inside a block {ki+1..ki+k}; k n <= 18.
/// Empty when kn is odd.
std::vector<TLDiagram> block_tl_subset(int k, int n);

/// A permutation with cycle type mu.
Permutation permutation_of_cycle_type(const Partition& mu);
Partition cycle_type(const Permutation& p);
std::string to_string(const Permutation& p);

/// Cyclic actions used by the experiments.
FiniteAction tl_rotation_action(int r);
FiniteAction matching_rotation_action(int r);
FiniteAction derangement_conjugation_action(int n);
FiniteAction block_tl_rotation_action(int k, int n);

/// Conjugation character of S(r) on derangements of r letters.
CycleTypeFunction derangement_character(int r);
/// Permutation character of S(2r) on perfect matchings.
CycleTypeFunction matching_character(int r);

nlohmann::json to_json(const TLDiagram& d);
nlohmann::json tableau_to_json(const RectTableau& t);

}  // namespace csplab
