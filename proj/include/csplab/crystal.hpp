#pragma once

// Finite crystal graphs, words in their tensor powers, invariant words and
// promotion.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "csplab/budget.hpp"
#include "csplab/csp.hpp"

namespace csplab {

/// Word in a crystal: vertex identifiers 1..m, leftmost tensor factor first.
using Word = std::vector<int>;

class CrystalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CrystalGraph {
 public:
  CrystalGraph(std::string name, int rank, int size,
               const std::vector<std::tuple<int, int, int>>& edges);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int size() const { return size_; }

  /// f_i(v) and e_i(v); 0 when undefined. Labels are 1-based.
  int f(int v, int i) const { return down_[idx(v, i)]; }
  int e(int v, int i) const { return up_[idx(v, i)]; }

  /// Length of the i-string above v (raising moves) and below v (lowering).
  int H(int v, int i) const { return h_[idx(v, i)]; }
  int D(int v, int i) const { return d_[idx(v, i)]; }
  int max_H(int i) const { return max_h_[static_cast<std::size_t>(i - 1)]; }

  int source() const { return source_; }
  int sink() const { return sink_; }

  /// Dynkin labels D - H of vertex v.
  std::vector<int> weight(int v) const;

  /// Label sequence of the lexicographically least lowering path source -> sink.
  const std::vector<int>& lowering_path() const { return path_; }

  /// Edges (a, i, b) with f_i(a) = b, sorted.
  std::vector<std::tuple<int, int, int>> edges() const;

 private:
  std::size_t idx(int v, int i) const {
    return static_cast<std::size_t>(v - 1) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(i - 1);
  }

  std::string name_;
  int rank_;
  int size_;
  std::vector<int> down_, up_, h_, d_, max_h_;
  int source_ = 0;
  int sink_ = 0;
  std::vector<int> path_;
};

/// Parses and validates the line-oriented crystal format:
///   name <id> / labels <rank> / vertices <m> / edge <a> <i> <b>, '#' comments.
/// Errors are CrystalError with the offending line number where one exists.
CrystalGraph load_crystal(const std::string& text);

/// Built-in crystals: "typeA_vector" (param n <= 6), "sl2" (param k <= 6),
/// "g2_fund7", "b3_spin", "so_vector" (param 7).
CrystalGraph builtin_crystal(const std::string& name, int param = 0);
/// File text of a built-in crystal.
std::string builtin_crystal_text(const std::string& name, int param = 0);

struct StringData {
  std::vector<int> H;
  std::vector<int> D;
};

/// Left fold of the tensor rule over the letters of w.
StringData string_data(const CrystalGraph& X, const Word& w);
bool is_invariant(const CrystalGraph& X, const Word& w);

/// Raising and lowering operators on words; nullopt when undefined.
std::optional<Word> apply_e(const CrystalGraph& X, const Word& w, int i);
std::optional<Word> apply_f(const CrystalGraph& X, const Word& w, int i);

/// All words of length r with H = D = 0, lexicographically ordered.
/// Throws BudgetExceeded when the search exceeds the state budget.
std::vector<Word> enumerate_invariants(const CrystalGraph& X, int r);

/// Promotion of an invariant word. Throws std::invalid_argument on
/// non-invariant input and std::logic_error if an operator step is undefined.
Word promote(const CrystalGraph& X, const Word& w);

/// "1 2 3" style, or compact digits when every vertex id is below 10.
std::string word_to_string(const Word& w);
Word parse_word(const std::string& text);

/// Promotion as a cyclic action of order r on invariant words of length r.
FiniteAction promotion_action(const CrystalGraph& X, int r);

/// Orbit report of promotion, after checking promote^r = id on every word.
OrbitReport promotion_orbits(const CrystalGraph& X, int r);

}  // namespace csplab
