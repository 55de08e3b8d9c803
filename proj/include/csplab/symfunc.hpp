#pragma once

// Partitions, symmetric-group characters, fake-degree polynomials and the
// small symmetric-function toolkit (Schur and complete homogeneous bases).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "csplab/qpoly.hpp"

namespace csplab {

/// Weakly decreasing sequence of positive integers. Trailing zeros passed to
/// the constructor are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// i-th part (0-based), zero past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;

  /// Hook lengths row by row.
  std::vector<std::vector<int>> hooks() const;

  /// b(lambda) = sum (i-1) lambda_i.
  int b_statistic() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  /// Reverse-lexicographic: (n) sorts first among partitions of n.
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ > b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// "(4,2)"; the empty partition prints as "()".
std::string to_string(const Partition& p);

/// Parses "4,2" / "(4,2)" / "2^3,1".
Partition parse_partition(const std::string& text);

/// All partitions of n, (n) first.
std::vector<Partition> partitions(int n);

/// Partition with each part doubled.
Partition doubled(const Partition& p);

Partition conjugate(const Partition& p);

/// Number of standard tableaux of shape lambda (hook length formula).
std::int64_t dim_partition(const Partition& lambda);

/// q-hook formula q^b(lambda) [n]! / prod [h].
IntPolynomial fake_degree(const Partition& lambda);

/// Upper bound on |lambda| accepted by the tableau enumerations.
inline constexpr int kMaxEnumeratedShape = 12;

/// Sum of q^maj(T) over standard tableaux T of shape lambda, where i is a
/// descent when i+1 sits in a strictly lower row.
IntPolynomial fake_degree_maj(const Partition& lambda);

/// Irreducible character chi^lambda at cycle type mu (Murnaghan-Nakayama).
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// z_mu = prod i^m_i m_i!
std::int64_t z_value(const Partition& mu);

/// Size of the conjugacy class of cycle type mu in S(|mu|).
std::int64_t class_size(const Partition& mu);

/// A class function on S(r) recorded by cycle type.
struct CycleTypeFunction {
  int degree = 0;
  std::map<Partition, std::int64_t> values;

  /// Throws std::invalid_argument unless every partition of `degree` has a value.
  void check_complete() const;
  std::int64_t at(const Partition& mu) const;
};

enum class Basis { schur, homogeneous };

std::string to_string(Basis b);

/// Finite integer combination of s_lambda or h_lambda.
class SymFunc {
 public:
  explicit SymFunc(Basis basis = Basis::schur) : basis_(basis) {}

  Basis basis() const { return basis_; }
  const std::map<Partition, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t coeff(const Partition& p) const;
  void add(const Partition& p, std::int64_t c);

  SymFunc& operator+=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator*(std::int64_t c, const SymFunc& f);
  friend bool operator==(const SymFunc& a, const SymFunc& b) = default;

 private:
  Basis basis_;
  std::map<Partition, std::int64_t> terms_;
};

/// "4s[4] + s[3,1] + s[2,2]" / "3h[4] + h[2,2]"
std::string to_string(const SymFunc& f);

/// Inverse of to_string: "4s[4] + s[3,1]", "3h[4] + h[2,2]", "0". A bare
/// integer is a multiple of the empty partition.
SymFunc parse_symfunc(const std::string& text);

/// Product in the homogeneous basis: h_lambda h_mu = h_(lambda union mu).
SymFunc h_product(const SymFunc& a, const SymFunc& b);

/// Value at cycle type mu of the permutation character on cosets of the
/// Young subgroup S(lambda), i.e. the class function of h_lambda.
std::int64_t homogeneous_cycle_value(const Partition& lambda, const Partition& mu);

/// Class function of a homogeneous-degree symmetric function.
CycleTypeFunction to_cycle_values(const SymFunc& f, int degree);

/// Schur expansion m_lambda = sum_mu chi(mu) chi^lambda(mu) / z_mu. Throws
/// std::domain_error when a coefficient is not an integer.
SymFunc cycle_values_to_schur(const CycleTypeFunction& chi);

SymFunc to_schur(const SymFunc& f);
SymFunc to_homogeneous(const SymFunc& f);

/// Dimension of the S(n)-representation with this Frobenius character,
/// summed over all degrees present.
std::int64_t dimension(const SymFunc& f);

/// sum_lambda m_lambda f_q(lambda), or with each lambda conjugated.
IntPolynomial fake_degree_module(const std::map<Partition, std::int64_t>& mults, bool conjugate_flag);
IntPolynomial fake_degree_module(const SymFunc& schur, bool conjugate_flag);

/// sum over lambda |- r of s_(2 lambda).
SymFunc matchings_schur_sum(int r);

/// F[n][k] for 0 <= k <= n <= N, homogeneous basis, from the series
/// H(tz) / (1 - sum_{n>=2} (n-1) h_n z^n).
std::vector<std::vector<SymFunc>> rencontre_series(int N);

/// q-derangement polynomial D_{n,0}(q).
IntPolynomial q_derangement(int n);

/// q-rencontre polynomial D_{n,k}(q) = [n choose k] D_{n-k,0}(q).
IntPolynomial q_rencontre(int n, int k);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const nlohmann::json& j);

}  // namespace csplab
