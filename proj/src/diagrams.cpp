#include "csplab/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "csplab/budget.hpp"

namespace csplab {

namespace {

// partner[p] for p = 1..2r; index 0 unused.
std::vector<int> partners(const TLDiagram& d) {
  std::vector<int> p(static_cast<std::size_t>(d.points()) + 1, 0);
  for (const auto& [a, b] : d.arcs) {
    p[static_cast<std::size_t>(a)] = b;
    p[static_cast<std::size_t>(b)] = a;
  }
  return p;
}

TLDiagram from_partners(const std::vector<int>& p) {
  TLDiagram d;
  for (std::size_t a = 1; a < p.size(); ++a) {
    if (static_cast<int>(a) < p[a]) d.arcs.emplace_back(static_cast<int>(a), p[a]);
  }
  return d;
}

TLDiagram relabel(const TLDiagram& d, int shift) {
  const int n = d.points();
  TLDiagram out;
  for (const auto& [a, b] : d.arcs) {
    int x = ((a - 1 + shift) % n + n) % n + 1;
    int y = ((b - 1 + shift) % n + n) % n + 1;
    out.arcs.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

}  // namespace

bool is_tl_word(const std::string& w) {
  int height = 0;
  for (char c : w) {
    if (c == 'U') {
      ++height;
    } else if (c == 'D') {
      if (--height < 0) return false;
    } else {
      return false;
    }
  }
  return height == 0;
}

std::vector<std::string> tl_words(int r) {
  if (r < 0) throw std::invalid_argument("tl_words: negative size");
  if (r > 12) throw BudgetExceeded("tl_words: r too large");
  std::vector<std::string> out;
  std::string cur;
  std::function<void(int, int)> go = [&](int ups_left, int height) {
    if (ups_left == 0 && height == 0) {
      out.push_back(cur);
      return;
    }
    if (ups_left > 0) {
      cur.push_back('U');
      go(ups_left - 1, height + 1);
      cur.pop_back();
    }
    if (height > 0) {
      cur.push_back('D');
      go(ups_left, height - 1);
      cur.pop_back();
    }
  };
  go(r, 0);
  return out;
}

TLDiagram word_to_tl(const std::string& w) {
  if (!is_tl_word(w)) throw std::invalid_argument("'" + w + "' is not a balanced U/D word");
  TLDiagram d;
  std::vector<int> stack;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const int p = static_cast<int>(k) + 1;
    if (w[k] == 'U') {
      stack.push_back(p);
    } else {
      d.arcs.emplace_back(stack.back(), p);
      stack.pop_back();
    }
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

std::string tl_to_word(const TLDiagram& d) {
  if (!is_noncrossing(d)) throw std::invalid_argument("diagram " + to_string(d) + " has crossing arcs");
  std::string w(static_cast<std::size_t>(d.points()), '?');
  for (const auto& [a, b] : d.arcs) {
    w[static_cast<std::size_t>(a - 1)] = 'U';
    w[static_cast<std::size_t>(b - 1)] = 'D';
  }
  return w;
}

std::vector<int> word_to_dyck(const std::string& w) {
  if (!is_tl_word(w)) throw std::invalid_argument("'" + w + "' is not a balanced U/D word");
  std::vector<int> steps;
  for (char c : w) steps.push_back(c == 'U' ? 1 : -1);
  return steps;
}

std::string dyck_to_word(const std::vector<int>& steps) {
  std::string w;
  for (int s : steps) {
    if (s != 1 && s != -1) throw std::invalid_argument("Dyck steps must be +1 or -1");
    w.push_back(s == 1 ? 'U' : 'D');
  }
  if (!is_tl_word(w)) throw std::invalid_argument("step sequence is not a Dyck path");
  return w;
}

RectTableau word_to_tableau(const std::string& w) {
  if (!is_tl_word(w)) throw std::invalid_argument("'" + w + "' is not a balanced U/D word");
  RectTableau t(2);
  for (std::size_t k = 0; k < w.size(); ++k) t[w[k] == 'U' ? 0 : 1].push_back(static_cast<int>(k) + 1);
  if (w.empty()) t.clear();
  return t;
}

std::string tableau_to_word(const RectTableau& t) {
  if (t.empty()) return "";
  if (t.size() != 2) throw std::invalid_argument("tableau_to_word needs two rows");
  check_rect_tableau(t);
  std::string w(t[0].size() * 2, 'U');
  for (int v : t[1]) w[static_cast<std::size_t>(v - 1)] = 'D';
  return w;
}

bool is_noncrossing(const TLDiagram& d) {
  for (const auto& [a, b] : d.arcs) {
    for (const auto& [c, e] : d.arcs) {
      if (a < c && c < b && b < e) return false;
    }
  }
  return true;
}

std::string to_string(const TLDiagram& d) {
  std::ostringstream os;
  for (const auto& [a, b] : d.arcs) os << "(" << a << "," << b << ")";
  return os.str();
}

TLDiagram rotate_tl(const TLDiagram& d) { return relabel(d, -1); }
PerfectMatching rotate_matching(const PerfectMatching& m) { return relabel(m, -1); }

void check_rect_tableau(const RectTableau& t) {
  if (t.empty()) return;
  const std::size_t cols = t.front().size();
  if (cols == 0) throw std::invalid_argument("tableau has an empty row");
  for (const auto& row : t) {
    if (row.size() != cols) throw std::invalid_argument("tableau shape is not rectangular");
  }
  std::vector<char> seen(t.size() * cols + 1, 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const int v = t[i][j];
      if (v < 1 || static_cast<std::size_t>(v) >= seen.size() || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("tableau entries must be 1..kn, each once");
      }
      seen[static_cast<std::size_t>(v)] = 1;
      if ((j > 0 && t[i][j - 1] > v) || (i > 0 && t[i - 1][j] > v)) {
        throw std::invalid_argument("tableau rows and columns must increase");
      }
    }
  }
}

RectTableau jdt_promote(const RectTableau& t) {
  check_rect_tableau(t);
  if (t.empty()) return t;
  RectTableau out = t;
  const std::size_t rows = out.size();
  const std::size_t cols = out.front().size();
  for (auto& row : out) {
    for (auto& v : row) --v;
  }
  std::size_t hi = 0, hj = 0;
  while (true) {
    const bool right = hj + 1 < cols;
    const bool below = hi + 1 < rows;
    if (!right && !below) break;
    if (right && (!below || out[hi][hj + 1] < out[hi + 1][hj])) {
      out[hi][hj] = out[hi][hj + 1];
      ++hj;
    } else {
      out[hi][hj] = out[hi + 1][hj];
      ++hi;
    }
  }
  out[hi][hj] = static_cast<int>(rows * cols);
  return out;
}

int maj(const RectTableau& t) {
  std::vector<std::size_t> row_of;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int v : t[i]) {
      if (v < 1) throw std::invalid_argument("tableau entries must be positive");
      if (row_of.size() <= static_cast<std::size_t>(v)) row_of.resize(static_cast<std::size_t>(v) + 1, 0);
      row_of[static_cast<std::size_t>(v)] = i;
    }
  }
  int total = 0;
  for (std::size_t v = 1; v + 1 < row_of.size(); ++v) {
    if (row_of[v + 1] > row_of[v]) total += static_cast<int>(v);
  }
  return total;
}

Word tableau_to_lattice_word(const RectTableau& t) {
  check_rect_tableau(t);
  std::size_t n = 0;
  for (const auto& row : t) n += row.size();
  Word w(n, 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int v : t[i]) w[static_cast<std::size_t>(v - 1)] = static_cast<int>(i) + 1;
  }
  return w;
}

RectTableau lattice_word_to_tableau(const Word& w) {
  int rows = 0;
  for (int letter : w) rows = std::max(rows, letter);
  RectTableau t(static_cast<std::size_t>(rows));
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] < 1) throw std::invalid_argument("lattice word letters must be positive");
    t[static_cast<std::size_t>(w[k] - 1)].push_back(static_cast<int>(k) + 1);
  }
  check_rect_tableau(t);
  return t;
}

std::string tl_word_promote(const std::string& w) {
  if (!is_tl_word(w)) throw std::invalid_argument("'" + w + "' is not a balanced U/D word");
  if (w.empty()) return w;
  std::string rest = w.substr(1);
  std::size_t flip = std::string::npos;
  int height = 0;
  for (std::size_t k = 0; k < rest.size(); ++k) {
    if (rest[k] == 'D' && height == 0) {
      flip = k;
      break;
    }
    height += rest[k] == 'U' ? 1 : -1;
  }
  if (flip == std::string::npos) throw std::logic_error("tl_word_promote: no D with balanced prefix");
  rest[flip] = 'U';
  rest.push_back('D');
  return rest;
}

TLLinearCombo tl_skein_transposition(int r, int i, const TLDiagram& d) {
  if (d.points() != 2 * r) throw std::invalid_argument("diagram has the wrong number of points");
  if (i < 1 || i > 2 * r - 1) throw std::invalid_argument("transposition index out of range");
  auto p = partners(d);
  TLLinearCombo out;
  const auto si = static_cast<std::size_t>(i);
  if (p[si] == i + 1) {
    // -d - (cupcap d) and the cap closes a loop worth -2.
    out[d] = 1;
    return out;
  }
  const int a = p[si];
  const int b = p[si + 1];
  auto q = p;
  q[static_cast<std::size_t>(a)] = b;
  q[static_cast<std::size_t>(b)] = a;
  q[si] = i + 1;
  q[si + 1] = i;
  out[d] = -1;
  out[from_partners(q)] = -1;
  return out;
}

namespace {

std::map<TLDiagram, Eigen::Index> basis_index(int r) {
  std::map<TLDiagram, Eigen::Index> index;
  Eigen::Index k = 0;
  for (const auto& w : tl_words(r)) index.emplace(word_to_tl(w), k++);
  return index;
}

}  // namespace

IntMatrix tl_transposition_matrix(int r, int i) {
  const auto index = basis_index(r);
  const auto n = static_cast<Eigen::Index>(index.size());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (const auto& [d, col] : index) {
    for (const auto& [img, c] : tl_skein_transposition(r, i, d)) m(index.at(img), col) += c;
  }
  return m;
}

IntMatrix tl_rotation_matrix(int r) {
  const auto index = basis_index(r);
  const auto n = static_cast<Eigen::Index>(index.size());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (const auto& [d, col] : index) m(index.at(rotate_tl(d)), col) = 1;
  return m;
}

IntMatrix tl_long_cycle_matrix(int r) {
  if (r < 0 || r > 4) throw std::invalid_argument("tl_long_cycle_matrix: need 0 <= r <= 4");
  const auto n = static_cast<Eigen::Index>(tl_words(r).size());
  IntMatrix m = IntMatrix::Identity(n, n);
  for (int i = 1; i <= 2 * r - 1; ++i) m = tl_transposition_matrix(r, i) * m;
  return m;
}

std::vector<PerfectMatching> matchings_enumerate(int r) {
  if (r < 0) throw std::invalid_argument("matchings_enumerate: negative size");
  if (r > 6) throw BudgetExceeded("matchings_enumerate: r must be at most 6");
  std::vector<PerfectMatching> out;
  std::vector<int> p(static_cast<std::size_t>(2 * r) + 1, 0);
  std::function<void()> go = [&]() {
    std::size_t first = 1;
    while (first < p.size() && p[first]) ++first;
    if (first >= p.size()) {
      out.push_back(from_partners(p));
      return;
    }
    for (std::size_t other = first + 1; other < p.size(); ++other) {
      if (p[other]) continue;
      p[first] = static_cast<int>(other);
      p[other] = static_cast<int>(first);
      go();
      p[first] = p[other] = 0;
    }
  };
  go();
  return out;
}

namespace {

void check_permutation(const Permutation& p) {
  std::vector<char> seen(p.size() + 1, 0);
  for (int v : p) {
    if (v < 1 || static_cast<std::size_t>(v) > p.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation: " + to_string(p));
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

TLDiagram apply_permutation(const Permutation& sigma, const TLDiagram& m) {
  TLDiagram out;
  for (const auto& [a, b] : m.arcs) {
    const int x = sigma[static_cast<std::size_t>(a - 1)];
    const int y = sigma[static_cast<std::size_t>(b - 1)];
    out.arcs.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

}  // namespace

std::int64_t fixed_matchings(int r, const Permutation& sigma) {
  if (sigma.size() != static_cast<std::size_t>(2 * r)) throw std::invalid_argument("fixed_matchings: permutation must act on 2r points");
  check_permutation(sigma);
  std::int64_t count = 0;
  for (const auto& m : matchings_enumerate(r)) count += apply_permutation(sigma, m) == m ? 1 : 0;
  return count;
}

std::vector<Permutation> derangements_enumerate(int n) {
  if (n < 0) throw std::invalid_argument("derangements_enumerate: negative size");
  if (n > 8) throw BudgetExceeded("derangements_enumerate: n must be at most 8");
  std::vector<Permutation> out;
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    bool fixed = false;
    for (int i = 0; i < n && !fixed; ++i) fixed = p[static_cast<std::size_t>(i)] == i + 1;
    if (!fixed) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation conj_long_cycle(const Permutation& sigma) {
  check_permutation(sigma);
  const int n = static_cast<int>(sigma.size());
  Permutation out(sigma.size());
  // (c sigma c^-1)(c(i)) = c(sigma(i)), with c(i) = i mod n + 1.
  for (int i = 1; i <= n; ++i) {
    out[static_cast<std::size_t>(i % n)] = sigma[static_cast<std::size_t>(i - 1)] % n + 1;
  }
  return out;
}

std::int64_t fixed_derangements(int n, const Permutation& tau) {
  if (tau.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("fixed_derangements: permutation size mismatch");
  check_permutation(tau);
  std::int64_t count = 0;
  for (const auto& sigma : derangements_enumerate(n)) {
    bool commute = true;
    for (int i = 0; i < n && commute; ++i) {
      const auto si = static_cast<std::size_t>(i);
      commute = tau[static_cast<std::size_t>(sigma[si] - 1)] == sigma[static_cast<std::size_t>(tau[si] - 1)];
    }
    count += commute ? 1 : 0;
  }
  return count;
}

std::vector<TLDiagram> block_tl_subset(int k, int n) {
  if (k < 1 || n < 0) throw std::invalid_argument("block_tl_subset: need k >= 1 and n >= 0");
  if (k * n > 18) throw BudgetExceeded("block_tl_subset: kn must be at most 18");
  std::vector<TLDiagram> out;
  if ((k * n) % 2 != 0) return out;
  for (const auto& w : tl_words(k * n / 2)) {
    TLDiagram d = word_to_tl(w);
    const bool ok = std::none_of(d.arcs.begin(), d.arcs.end(), [k](const auto& arc) {
      return (arc.first - 1) / k == (arc.second - 1) / k;
    });
    if (ok) out.push_back(std::move(d));
  }
  return out;
}

Permutation permutation_of_cycle_type(const Partition& mu) {
  Permutation p;
  int start = 1;
  for (int len : mu.parts()) {
    for (int j = 0; j < len; ++j) p.push_back(start + (j + 1) % len);
    start += len;
  }
  return p;
}

Partition cycle_type(const Permutation& p) {
  check_permutation(p);
  std::vector<char> seen(p.size() + 1, 0);
  std::vector<int> lengths;
  for (std::size_t s = 1; s <= p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x - 1])) {
      seen[x] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(lengths);
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

namespace {

template <typename T, typename Encode, typename Step>
FiniteAction make_action(const std::vector<T>& elements, int order, Encode encode, Step step) {
  FiniteAction a;
  a.order = std::max(order, 1);
  std::map<T, std::size_t> index;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    index.emplace(elements[k], k);
    a.elements.push_back(encode(elements[k]));
  }
  for (const auto& x : elements) {
    const auto it = index.find(step(x));
    if (it == index.end()) throw std::logic_error("cyclic action leaves its set");
    a.generator.push_back(it->second);
  }
  return a;
}

}  // namespace

FiniteAction tl_rotation_action(int r) {
  std::vector<TLDiagram> ds;
  for (const auto& w : tl_words(r)) ds.push_back(word_to_tl(w));
  return make_action(ds, 2 * r, [](const TLDiagram& d) { return tl_to_word(d); }, rotate_tl);
}

FiniteAction matching_rotation_action(int r) {
  return make_action(matchings_enumerate(r), 2 * r, [](const PerfectMatching& m) { return to_string(m); },
                     rotate_matching);
}

FiniteAction derangement_conjugation_action(int n) {
  return make_action(derangements_enumerate(n), n, [](const Permutation& p) { return to_string(p); },
                     conj_long_cycle);
}

FiniteAction block_tl_rotation_action(int k, int n) {
  return make_action(block_tl_subset(k, n), n, [](const TLDiagram& d) { return tl_to_word(d); },
                     [k](const TLDiagram& d) {
                       TLDiagram x = d;
                       for (int s = 0; s < k; ++s) x = rotate_tl(x);
                       return x;
                     });
}

CycleTypeFunction derangement_character(int r) {
  CycleTypeFunction chi;
  chi.degree = r;
  for (const auto& mu : partitions(r)) chi.values[mu] = fixed_derangements(r, permutation_of_cycle_type(mu));
  return chi;
}

CycleTypeFunction matching_character(int r) {
  CycleTypeFunction chi;
  chi.degree = 2 * r;
  for (const auto& mu : partitions(2 * r)) chi.values[mu] = fixed_matchings(r, permutation_of_cycle_type(mu));
  return chi;
}

nlohmann::json to_json(const TLDiagram& d) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& [a, b] : d.arcs) arcs.push_back({a, b});
  return arcs;
}

nlohmann::json tableau_to_json(const RectTableau& t) { return t; }

}  // namespace csplab
