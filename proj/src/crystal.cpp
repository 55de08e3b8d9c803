#include "csplab/crystal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "csplab/budget.hpp"

namespace csplab {

CrystalGraph::CrystalGraph(std::string name, int rank, int size,
                           const std::vector<std::tuple<int, int, int>>& edges)
    : name_(std::move(name)), rank_(rank), size_(size) {
  if (rank_ < 1) throw CrystalError("crystal " + name_ + ": rank must be positive");
  if (size_ < 1) throw CrystalError("crystal " + name_ + ": needs at least one vertex");
  const auto cells = static_cast<std::size_t>(rank_) * static_cast<std::size_t>(size_);
  down_.assign(cells, 0);
  up_.assign(cells, 0);
  for (const auto& [a, i, b] : edges) {
    if (a < 1 || a > size_ || b < 1 || b > size_) throw CrystalError("edge endpoint out of range");
    if (i < 1 || i > rank_) throw CrystalError("edge label out of range");
    if (a == b) throw CrystalError("edge " + std::to_string(a) + " -> " + std::to_string(b) + " is a loop");
    if (down_[idx(a, i)]) throw CrystalError("vertex " + std::to_string(a) + " has two outgoing " + std::to_string(i) + "-edges");
    if (up_[idx(b, i)]) throw CrystalError("vertex " + std::to_string(b) + " has two incoming " + std::to_string(i) + "-edges");
    down_[idx(a, i)] = b;
    up_[idx(b, i)] = a;
  }

  h_.assign(cells, 0);
  d_.assign(cells, 0);
  max_h_.assign(static_cast<std::size_t>(rank_), 0);
  for (int v = 1; v <= size_; ++v) {
    for (int i = 1; i <= rank_; ++i) {
      int steps = 0;
      for (int x = up_[idx(v, i)]; x; x = up_[idx(x, i)]) {
        if (x == v || ++steps > size_) throw CrystalError("the " + std::to_string(i) + "-string through vertex " + std::to_string(v) + " is a cycle");
      }
      h_[idx(v, i)] = steps;
      steps = 0;
      for (int x = down_[idx(v, i)]; x; x = down_[idx(x, i)]) {
        if (x == v || ++steps > size_) throw CrystalError("the " + std::to_string(i) + "-string through vertex " + std::to_string(v) + " is a cycle");
      }
      d_[idx(v, i)] = steps;
      max_h_[static_cast<std::size_t>(i - 1)] = std::max(max_h_[static_cast<std::size_t>(i - 1)], h_[idx(v, i)]);
    }
  }

  // Connectivity, ignoring edge direction.
  std::vector<char> seen(static_cast<std::size_t>(size_) + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int i = 1; i <= rank_; ++i) {
      for (int w : {down_[idx(v, i)], up_[idx(v, i)]}) {
        if (w && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  for (int v = 1; v <= size_; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) throw CrystalError("crystal " + name_ + " is disconnected (vertex " + std::to_string(v) + ")");
  }

  std::vector<int> sources, sinks;
  for (int v = 1; v <= size_; ++v) {
    bool no_up = true, no_down = true;
    for (int i = 1; i <= rank_; ++i) {
      no_up = no_up && H(v, i) == 0;
      no_down = no_down && D(v, i) == 0;
    }
    if (no_up) sources.push_back(v);
    if (no_down) sinks.push_back(v);
  }
  if (sources.size() != 1) throw CrystalError("crystal " + name_ + " has " + std::to_string(sources.size()) + " source vertices, expected one");
  if (sinks.size() != 1) throw CrystalError("crystal " + name_ + " has " + std::to_string(sinks.size()) + " sink vertices, expected one");
  source_ = sources.front();
  sink_ = sinks.front();

  // Every non-sink vertex has a lowering move, so the greedy path is the
  // lexicographically least one and reaches the sink.
  for (int v = source_; v != sink_;) {
    int label = 0;
    for (int i = 1; i <= rank_ && !label; ++i) {
      if (f(v, i)) label = i;
    }
    path_.push_back(label);
    v = f(v, label);
    if (path_.size() > static_cast<std::size_t>(size_)) throw CrystalError("lowering path does not terminate");
  }
}

std::vector<int> CrystalGraph::weight(int v) const {
  std::vector<int> w;
  for (int i = 1; i <= rank_; ++i) w.push_back(D(v, i) - H(v, i));
  return w;
}

std::vector<std::tuple<int, int, int>> CrystalGraph::edges() const {
  std::vector<std::tuple<int, int, int>> out;
  for (int v = 1; v <= size_; ++v) {
    for (int i = 1; i <= rank_; ++i) {
      if (f(v, i)) out.emplace_back(v, i, f(v, i));
    }
  }
  return out;
}

CrystalGraph load_crystal(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::string name = "unnamed";
  int rank = 0;
  int size = 0;
  std::vector<std::tuple<int, int, int>> edges;
  std::map<std::pair<int, int>, int> out_line, in_line;
  std::vector<std::pair<int, std::tuple<int, int, int>>> pending;

  auto fail = [&](const std::string& msg) -> CrystalError {
    return CrystalError("line " + std::to_string(lineno) + ": " + msg);
  };
  auto read_int = [&](std::istringstream& ss, const char* what) {
    long long v = 0;
    if (!(ss >> v)) throw fail(std::string("expected integer ") + what);
    return static_cast<int>(v);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string keyword;
    if (!(ss >> keyword)) continue;
    if (keyword == "name") {
      if (!(ss >> name)) throw fail("missing crystal name");
    } else if (keyword == "labels") {
      rank = read_int(ss, "rank");
      if (rank < 1) throw fail("rank must be positive");
    } else if (keyword == "vertices") {
      size = read_int(ss, "vertex count");
      if (size < 1) throw fail("vertex count must be positive");
    } else if (keyword == "edge") {
      const int a = read_int(ss, "source vertex");
      const int i = read_int(ss, "label");
      const int b = read_int(ss, "target vertex");
      pending.push_back({lineno, {a, i, b}});
    } else {
      throw fail("unknown keyword '" + keyword + "'");
    }
    std::string extra;
    if (ss >> extra) throw fail("unexpected trailing token '" + extra + "'");
  }

  if (rank == 0) throw CrystalError("missing 'labels' line");
  if (size == 0) throw CrystalError("missing 'vertices' line");
  for (const auto& [ln, edge] : pending) {
    lineno = ln;
    const auto [a, i, b] = edge;
    if (a < 1 || a > size || b < 1 || b > size) throw fail("vertex out of range 1.." + std::to_string(size));
    if (i < 1 || i > rank) throw fail("label out of range 1.." + std::to_string(rank));
    if (a == b) throw fail("edge is a loop");
    if (auto [it, ok] = out_line.emplace(std::make_pair(a, i), ln); !ok) {
      throw fail("vertex " + std::to_string(a) + " already has an outgoing " + std::to_string(i) +
                 "-edge (line " + std::to_string(it->second) + ")");
    }
    if (auto [it, ok] = in_line.emplace(std::make_pair(b, i), ln); !ok) {
      throw fail("vertex " + std::to_string(b) + " already has an incoming " + std::to_string(i) +
                 "-edge (line " + std::to_string(it->second) + ")");
    }
    edges.push_back(edge);
  }
  return CrystalGraph(name, rank, size, edges);
}

namespace {

std::string chain_text(const std::string& name, int rank, const std::vector<int>& labels) {
  std::ostringstream os;
  os << "name " << name << "\nlabels " << rank << "\nvertices " << labels.size() + 1 << "\n";
  for (std::size_t k = 0; k < labels.size(); ++k) os << "edge " << k + 1 << " " << labels[k] << " " << k + 2 << "\n";
  return os.str();
}

// Spin crystal of B3 on sign vectors (s1,s2,s3), vertex 1 + 4b1 + 2b2 + b3
// with b = 1 for a minus sign.
constexpr const char* kB3Spin = R"(name b3_spin
labels 3
vertices 8
# f1: (+,-,x) -> (-,+,x)
edge 3 1 5
edge 4 1 6
# f2: (x,+,-) -> (x,-,+)
edge 2 2 3
edge 6 2 7
# f3: (x,y,+) -> (x,y,-)
edge 1 3 2
edge 3 3 4
edge 5 3 6
edge 7 3 8
)";

}  // namespace

std::string builtin_crystal_text(const std::string& name, int param) {
  if (name == "typeA_vector") {
    if (param < 2 || param > 6) throw std::invalid_argument("typeA_vector needs 2 <= n <= 6");
    std::vector<int> labels;
    for (int i = 1; i < param; ++i) labels.push_back(i);
    return chain_text("typeA_vector_" + std::to_string(param), param - 1, labels);
  }
  if (name == "sl2") {
    if (param < 1 || param > 6) throw std::invalid_argument("sl2 needs 1 <= k <= 6");
    return chain_text("sl2_" + std::to_string(param), 1, std::vector<int>(static_cast<std::size_t>(param), 1));
  }
  if (name == "g2_fund7") return chain_text("g2_fund7", 2, {1, 2, 1, 1, 2, 1});
  if (name == "so_vector") {
    if (param != 0 && param != 7) throw std::invalid_argument("so_vector is available for n = 7 only");
    return chain_text("so_vector_7", 3, {1, 2, 3, 3, 2, 1});
  }
  if (name == "b3_spin") return kB3Spin;
  throw std::invalid_argument("unknown built-in crystal '" + name + "'");
}

CrystalGraph builtin_crystal(const std::string& name, int param) {
  return load_crystal(builtin_crystal_text(name, param));
}

StringData string_data(const CrystalGraph& X, const Word& w) {
  StringData s{std::vector<int>(static_cast<std::size_t>(X.rank()), 0),
               std::vector<int>(static_cast<std::size_t>(X.rank()), 0)};
  for (int v : w) {
    for (int i = 1; i <= X.rank(); ++i) {
      auto& h = s.H[static_cast<std::size_t>(i - 1)];
      auto& d = s.D[static_cast<std::size_t>(i - 1)];
      const int hb = X.H(v, i);
      const int db = X.D(v, i);
      const int new_h = h + std::max(0, hb - d);
      const int new_d = db + std::max(0, d - hb);
      h = new_h;
      d = new_d;
    }
  }
  return s;
}

bool is_invariant(const CrystalGraph& X, const Word& w) {
  const auto s = string_data(X, w);
  return std::all_of(s.H.begin(), s.H.end(), [](int x) { return x == 0; }) &&
         std::all_of(s.D.begin(), s.D.end(), [](int x) { return x == 0; });
}

namespace {

void check_word(const CrystalGraph& X, const Word& w) {
  for (int v : w) {
    if (v < 1 || v > X.size()) throw std::invalid_argument("word letter " + std::to_string(v) + " is not a vertex of " + X.name());
  }
}

// Positions of the unmatched '-' and '+' in the i-signature: each letter
// reads as -^H +^D, and a '+' cancels against a later '-'.
struct Unmatched {
  std::vector<std::size_t> minus;  // positions, left to right
  std::vector<std::size_t> plus;
};

Unmatched signature(const CrystalGraph& X, const Word& w, int i) {
  Unmatched u;
  std::vector<std::size_t> open_plus;
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (int k = 0; k < X.H(w[p], i); ++k) {
      if (!open_plus.empty()) {
        open_plus.pop_back();
      } else {
        u.minus.push_back(p);
      }
    }
    for (int k = 0; k < X.D(w[p], i); ++k) open_plus.push_back(p);
  }
  u.plus = std::move(open_plus);
  return u;
}

}  // namespace

std::optional<Word> apply_e(const CrystalGraph& X, const Word& w, int i) {
  check_word(X, w);
  if (i < 1 || i > X.rank()) throw std::invalid_argument("label out of range");
  const auto u = signature(X, w, i);
  if (u.minus.empty()) return std::nullopt;
  Word out = w;
  const std::size_t p = u.minus.back();
  out[p] = X.e(out[p], i);
  return out;
}

std::optional<Word> apply_f(const CrystalGraph& X, const Word& w, int i) {
  check_word(X, w);
  if (i < 1 || i > X.rank()) throw std::invalid_argument("label out of range");
  const auto u = signature(X, w, i);
  if (u.plus.empty()) return std::nullopt;
  Word out = w;
  const std::size_t p = u.plus.front();
  out[p] = X.f(out[p], i);
  return out;
}

namespace {

struct InvariantSearch {
  const CrystalGraph& X;
  int r;
  std::size_t budget;
  std::size_t visited = 0;
  Word prefix;
  std::vector<Word> out;

  void run(const std::vector<int>& d) {
    if (++visited > budget) throw BudgetExceeded("invariant-word enumeration exceeds the state budget");
    const int remaining = r - static_cast<int>(prefix.size());
    if (remaining == 0) {
      if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) out.push_back(prefix);
      return;
    }
    std::vector<int> next(d.size());
    for (int v = 1; v <= X.size(); ++v) {
      bool ok = true;
      for (int i = 1; i <= X.rank() && ok; ++i) {
        const int hb = X.H(v, i);
        const int dd = d[static_cast<std::size_t>(i - 1)];
        // H of the prefix can never decrease, so it must stay zero.
        if (hb > dd) {
          ok = false;
          break;
        }
        next[static_cast<std::size_t>(i - 1)] = X.D(v, i) + dd - hb;
        if (next[static_cast<std::size_t>(i - 1)] > (remaining - 1) * X.max_H(i)) ok = false;
      }
      if (!ok) continue;
      prefix.push_back(v);
      run(next);
      prefix.pop_back();
    }
  }
};

}  // namespace

std::vector<Word> enumerate_invariants(const CrystalGraph& X, int r) {
  if (r < 0) throw std::invalid_argument("enumerate_invariants: negative length");
  InvariantSearch search{X, r, enumeration_budget(), 0, {}, {}};
  search.run(std::vector<int>(static_cast<std::size_t>(X.rank()), 0));
  return search.out;
}

Word promote(const CrystalGraph& X, const Word& w) {
  check_word(X, w);
  if (w.empty()) return w;
  if (!is_invariant(X, w)) throw std::invalid_argument("promote: word " + word_to_string(w) + " is not invariant");
  if (w.front() != X.source() || w.back() != X.sink()) {
    throw std::invalid_argument("promote: word must start at the source and end at the sink");
  }
  Word cur(w.begin() + 1, w.end());
  for (int label : X.lowering_path()) {
    auto next = apply_e(X, cur, label);
    if (!next) {
      throw std::logic_error("promote: raising step " + std::to_string(label) + " undefined on " + word_to_string(cur) +
                             "; crystal data is inconsistent");
    }
    cur = std::move(*next);
  }
  cur.push_back(X.sink());
  return cur;
}

std::string word_to_string(const Word& w) {
  const bool compact = std::all_of(w.begin(), w.end(), [](int v) { return v >= 0 && v < 10; });
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!compact && k) os << ' ';
    os << w[k];
  }
  return os.str();
}

Word parse_word(const std::string& text) {
  Word w;
  const bool spaced = text.find_first_of(" ,") != std::string::npos;
  if (spaced) {
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream ss(t);
    int v = 0;
    while (ss >> v) w.push_back(v);
    if (!ss.eof()) throw std::invalid_argument("cannot parse word '" + text + "'");
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("cannot parse word '" + text + "'");
      w.push_back(c - '0');
    }
  }
  return w;
}

FiniteAction promotion_action(const CrystalGraph& X, int r) {
  const auto words = enumerate_invariants(X, r);
  FiniteAction a;
  a.order = std::max(r, 1);
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) {
    index.emplace(words[k], k);
    a.elements.push_back(word_to_string(words[k]));
  }
  for (const auto& w : words) {
    const auto it = index.find(promote(X, w));
    if (it == index.end()) throw std::logic_error("promote left the set of invariant words");
    a.generator.push_back(it->second);
  }
  return a;
}

OrbitReport promotion_orbits(const CrystalGraph& X, int r) { return orbits(promotion_action(X, r)); }

}  // namespace csplab
