#pragma once

// Root systems of small rank, Weyl groups, weight-multiplicity characters and
// the symmetric-group character on invariant tensors.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "csplab/qpoly.hpp"
#include "csplab/symfunc.hpp"

namespace csplab {

inline constexpr int kMaxRank = 6;

/// Weight in Dynkin labels (coordinates in the fundamental-weight basis).
using Weight = Eigen::Matrix<int, Eigen::Dynamic, 1, 0, kMaxRank, 1>;
/// Integer matrix acting on Dynkin labels.
using WeightMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxRank, kMaxRank>;

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Lexicographic order on labels, used wherever output must be deterministic.
bool weight_less(const Weight& a, const Weight& b);

std::string to_string(const Weight& w);
Weight parse_weight(const std::string& text);

class RootSystem {
 public:
  /// Supported: A1..A5, B3, C2, C3, G2.
  RootSystem(char type, int rank);

  const std::string& name() const { return name_; }
  char type() const { return type_; }
  int rank() const { return rank_; }

  /// cartan(i,j) = <alpha_i^vee, alpha_j>; column j holds the labels of alpha_j.
  const WeightMatrix& cartan() const { return cartan_; }
  /// Invariant form on simple roots, scaled so short roots have length 2.
  const WeightMatrix& form() const { return form_; }
  /// d_j = (alpha_j, alpha_j) / 2.
  int root_scale(int j) const { return form_(j, j) / 2; }

  /// Positive roots in simple-root coordinates.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  Weight root_to_weight(const Weight& root_coords) const { return cartan_ * root_coords; }
  Weight rho() const { return Weight::Ones(rank_); }
  Weight fundamental_weight(int i) const;
  /// Highest root theta in Dynkin labels.
  Weight highest_root() const;

  /// Weyl group elements as matrices on Dynkin labels, identity first,
  /// ordered by length.
  const std::vector<WeightMatrix>& weyl_group() const { return weyl_; }
  const std::vector<int>& weyl_lengths() const { return weyl_lengths_; }
  Weight reflect(const Weight& w, int i) const;

  /// (mu, alpha) for a weight in labels and a root in simple-root coordinates.
  std::int64_t pair_weight_root(const Weight& mu, const Weight& root) const;
  std::int64_t pair_roots(const Weight& a, const Weight& b) const;

  bool is_dominant(const Weight& w) const;
  void check_weight(const Weight& w) const;

 private:
  void build_roots();
  void build_weyl_group();

  char type_;
  int rank_;
  std::string name_;
  WeightMatrix cartan_;
  WeightMatrix form_;
  std::vector<Weight> positive_roots_;
  std::vector<WeightMatrix> weyl_;
  std::vector<int> weyl_lengths_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Shared, cached instance; throws std::invalid_argument when unsupported.
RootSystemPtr root_system(char type, int rank);
/// "A2", "B3", "G2", ...
RootSystemPtr root_system(const std::string& name);

/// Finite weight -> multiplicity map; multiplicities may be negative.
class Character {
 public:
  using Map = std::unordered_map<Weight, std::int64_t, WeightHash>;

  explicit Character(RootSystemPtr rs) : rs_(std::move(rs)) {}

  const RootSystemPtr& root_system() const { return rs_; }
  const Map& multiplicities() const { return mult_; }
  std::int64_t at(const Weight& w) const;
  void add(const Weight& w, std::int64_t m);
  std::int64_t dimension() const;
  /// Weights sorted lexicographically.
  std::vector<Weight> sorted_weights() const;

  friend bool operator==(const Character& a, const Character& b);

 private:
  RootSystemPtr rs_;
  Map mult_;
};

/// Freudenthal's recursion. Throws std::invalid_argument for non-dominant lambda.
Character irreducible_character(const RootSystemPtr& rs, const Weight& lambda);

/// Weyl dimension formula.
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

Character trivial_character(const RootSystemPtr& rs);
Character adams(const Character& chi, int l);
/// Throws std::invalid_argument on root-system mismatch.
Character char_mul(const Character& a, const Character& b);

/// Whether m(s_i mu) = m(mu) for every weight and simple reflection.
bool is_weyl_invariant(const Character& chi);

/// Multiplicity of the trivial module via sum_w (-1)^l(w) m(rho - w rho).
/// Throws std::invalid_argument on non-Weyl-invariant input.
std::int64_t trivial_multiplicity(const Character& chi);

/// Trivial multiplicity of a product, without expanding the last factor.
std::int64_t trivial_multiplicity_of_product(const std::vector<Character>& factors);

/// Highest-weight decomposition by repeatedly removing the top dominant weight.
std::vector<std::pair<Weight, std::int64_t>> decompose_by_extraction(const Character& chi);

/// sum over positive roots of <lambda, alpha^vee>.
std::int64_t two_rho_pairing(const RootSystem& rs, const Weight& lambda);

struct InvariantsCharacter {
  int degree = 0;
  CycleTypeFunction cycle_values;
  SymFunc schur{Basis::schur};
  std::int64_t two_rho = 0;

  bool twisted() const { return two_rho % 2 != 0; }
  std::int64_t dimension() const;
};

/// S(r)-character of the invariant space in the r-th tensor power of V(lambda).
InvariantsCharacter frobenius_invariants(const RootSystemPtr& rs, const Weight& lambda, int r);

/// Fake-degree polynomial of the invariant module, conjugated when twisted.
IntPolynomial invariants_fake_degree(const InvariantsCharacter& inv);

nlohmann::json to_json(const Character& chi);
nlohmann::json to_json(const InvariantsCharacter& inv);

}  // namespace csplab
