#include "csplab/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace csplab {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::int64_t checked_int64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

void generate_partitions(int remaining, int max_part, std::vector<int>& current,
                         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate_partitions(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

// --- Partition -----------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts_.empty()) {
    c.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int row : parts_) {
      for (int j = 0; j < row; ++j) ++c[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(c));
}

std::vector<std::vector<int>> Partition::hooks() const {
  const Partition conj = conjugate();
  std::vector<std::vector<int>> h(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (int j = 0; j < parts_[i]; ++j) {
      const int arm = parts_[i] - j - 1;
      const int leg = conj.part(static_cast<std::size_t>(j)) - static_cast<int>(i) - 1;
      h[i].push_back(arm + leg + 1);
    }
  }
  return h;
}

int Partition::b_statistic() const {
  int b = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) b += static_cast<int>(i) * parts_[i];
  return b;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
  os << ")";
  return os.str();
}

Partition parse_partition(const std::string& text) {
  std::string cleaned;
  for (char c : text) {
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') cleaned.push_back(c);
  }
  std::vector<int> parts;
  std::stringstream ss(cleaned);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto caret = token.find('^');
    try {
      if (caret == std::string::npos) {
        parts.push_back(std::stoi(token));
      } else {
        const int value = std::stoi(token.substr(0, caret));
        const int times = std::stoi(token.substr(caret + 1));
        if (times < 0) throw std::invalid_argument("negative exponent");
        parts.insert(parts.end(), static_cast<std::size_t>(times), value);
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("cannot parse partition '" + text + "'");
    }
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  generate_partitions(n, n, current, out);
  return out;
}

Partition doubled(const Partition& p) {
  std::vector<int> v = p.parts();
  for (auto& x : v) x *= 2;
  return Partition(std::move(v));
}

Partition conjugate(const Partition& p) { return p.conjugate(); }

// --- dimensions and fake degrees -----------------------------------------

std::int64_t dim_partition(const Partition& lambda) {
  BigInt denom = 1;
  for (const auto& row : lambda.hooks()) {
    for (int h : row) denom *= h;
  }
  return checked_int64(factorial(lambda.size()) / denom, "dim_partition");
}

IntPolynomial fake_degree(const Partition& lambda) {
  IntPolynomial denom = IntPolynomial::constant(1);
  for (const auto& row : lambda.hooks()) {
    for (int h : row) denom *= q_int(h);
  }
  return poly_exact_div(q_factorial(lambda.size()), denom)
      .shifted(static_cast<std::size_t>(lambda.b_statistic()));
}

namespace {

struct TableauWalker {
  const Partition& shape;
  std::vector<int> row_length;
  std::vector<int> row_of;  // row_of[v] for v = 1..n
  std::vector<std::int64_t> maj_counts;

  void place(int value, int n) {
    if (value > n) {
      int maj = 0;
      for (int v = 1; v < n; ++v) {
        if (row_of[static_cast<std::size_t>(v + 1)] > row_of[static_cast<std::size_t>(v)]) maj += v;
      }
      if (static_cast<std::size_t>(maj) >= maj_counts.size()) maj_counts.resize(static_cast<std::size_t>(maj) + 1, 0);
      ++maj_counts[static_cast<std::size_t>(maj)];
      return;
    }
    for (std::size_t r = 0; r < row_length.size(); ++r) {
      if (row_length[r] >= shape.part(r)) continue;
      if (r > 0 && row_length[r - 1] <= row_length[r]) continue;
      ++row_length[r];
      row_of[static_cast<std::size_t>(value)] = static_cast<int>(r);
      place(value + 1, n);
      --row_length[r];
    }
  }
};

}  // namespace

IntPolynomial fake_degree_maj(const Partition& lambda) {
  if (lambda.size() > kMaxEnumeratedShape) {
    throw std::invalid_argument("fake_degree_maj: shape larger than enumeration bound");
  }
  TableauWalker walker{lambda, std::vector<int>(static_cast<std::size_t>(lambda.length()), 0),
                       std::vector<int>(static_cast<std::size_t>(lambda.size()) + 1, 0), {}};
  walker.place(1, lambda.size());
  std::vector<BigInt> coeffs(walker.maj_counts.begin(), walker.maj_counts.end());
  return IntPolynomial(std::move(coeffs));
}

// --- symmetric group characters -------------------------------------------

namespace {

using BetaMemo = std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>;

// beta is sorted ascending; parts of mu are removed in order as rim hooks.
std::int64_t mn_recursive(const std::vector<int>& beta, const std::vector<int>& mu, std::size_t idx,
                          BetaMemo& memo) {
  if (idx == mu.size()) return 1;
  auto key = std::make_pair(beta, idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int k = mu[idx];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - k;
    if (target < 0 || std::binary_search(beta.begin(), beta.end(), target)) continue;
    int between = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++between;
    }
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end());
    const std::int64_t sub = mn_recursive(next, mu, idx + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

struct CharacterTable {
  std::vector<Partition> parts;
  std::map<Partition, std::size_t> index;
  std::vector<std::vector<std::int64_t>> chi;  // chi[lambda][mu]
};

const CharacterTable& character_table(int r) {
  static std::mutex mutex;
  static std::map<int, CharacterTable> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  CharacterTable table;
  table.parts = partitions(r);
  for (std::size_t i = 0; i < table.parts.size(); ++i) table.index.emplace(table.parts[i], i);
  for (const auto& lambda : table.parts) {
    std::vector<std::int64_t> row;
    for (const auto& mu : table.parts) row.push_back(mn_character(lambda, mu));
    table.chi.push_back(std::move(row));
  }
  return cache.emplace(r, std::move(table)).first->second;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: size mismatch");
  const int len = lambda.length();
  std::vector<int> beta;
  for (int i = 0; i < len; ++i) beta.push_back(lambda.part(static_cast<std::size_t>(i)) + (len - 1 - i));
  std::sort(beta.begin(), beta.end());
  BetaMemo memo;
  return mn_recursive(beta, mu.parts(), 0, memo);
}

std::int64_t z_value(const Partition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  BigInt z = 1;
  for (const auto& [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    z *= factorial(m);
  }
  return checked_int64(z, "z_value");
}

std::int64_t class_size(const Partition& mu) {
  return checked_int64(factorial(mu.size()) / z_value(mu), "class_size");
}

void CycleTypeFunction::check_complete() const {
  const auto all = partitions(degree);
  if (values.size() != all.size()) {
    throw std::invalid_argument("class function is not defined on every cycle type of degree " +
                                std::to_string(degree));
  }
  for (const auto& mu : all) {
    if (!values.contains(mu)) throw std::invalid_argument("class function missing cycle type " + to_string(mu));
  }
}

std::int64_t CycleTypeFunction::at(const Partition& mu) const {
  auto it = values.find(mu);
  if (it == values.end()) throw std::out_of_range("no value at cycle type " + to_string(mu));
  return it->second;
}

// --- SymFunc ---------------------------------------------------------------

std::string to_string(Basis b) { return b == Basis::schur ? "schur" : "homogeneous"; }

std::int64_t SymFunc::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void SymFunc::add(const Partition& p, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.basis_ != basis_ && !o.is_zero()) throw std::invalid_argument("SymFunc: basis mismatch in addition");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

SymFunc operator*(std::int64_t c, const SymFunc& f) {
  SymFunc out(f.basis());
  for (const auto& [p, v] : f.terms()) out.add(p, c * v);
  return out;
}

std::string to_string(const SymFunc& f) {
  if (f.is_zero()) return "0";
  const char letter = f.basis() == Basis::schur ? 's' : 'h';
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : f.terms()) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (p.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << letter << "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
    os << "]";
  }
  return os.str();
}

SymFunc parse_symfunc(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "0") return SymFunc(Basis::schur);
  std::optional<Basis> basis;
  std::vector<std::pair<Partition, std::int64_t>> terms;
  std::size_t pos = 0;
  auto bad = [&]() { return std::invalid_argument("cannot parse symmetric function '" + text + "'"); };
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw bad();
    }
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    const std::int64_t c = pos > start ? std::stoll(s.substr(start, pos - start)) : 1;
    if (pos < s.size() && (s[pos] == 's' || s[pos] == 'h')) {
      const Basis b = s[pos] == 's' ? Basis::schur : Basis::homogeneous;
      if (basis && *basis != b) throw bad();
      basis = b;
      ++pos;
      if (pos >= s.size() || s[pos] != '[') throw bad();
      const std::size_t close = s.find(']', pos);
      if (close == std::string::npos) throw bad();
      terms.emplace_back(parse_partition(s.substr(pos + 1, close - pos - 1)), sign * c);
      pos = close + 1;
    } else {
      if (pos == start) throw bad();
      terms.emplace_back(Partition(), sign * c);
    }
  }
  SymFunc f(basis.value_or(Basis::schur));
  for (const auto& [p, c] : terms) f.add(p, c);
  return f;
}

SymFunc h_product(const SymFunc& a, const SymFunc& b) {
  if (a.basis() != Basis::homogeneous || b.basis() != Basis::homogeneous) {
    throw std::invalid_argument("h_product: operands must be in the homogeneous basis");
  }
  SymFunc out(Basis::homogeneous);
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      std::vector<int> merged = pa.parts();
      merged.insert(merged.end(), pb.parts().begin(), pb.parts().end());
      std::sort(merged.begin(), merged.end(), std::greater<>());
      out.add(Partition(std::move(merged)), ca * cb);
    }
  }
  return out;
}

namespace {

std::int64_t count_bin_fillings(const std::vector<int>& cycles, std::size_t idx, std::vector<int>& capacity) {
  if (idx == cycles.size()) {
    return std::all_of(capacity.begin(), capacity.end(), [](int c) { return c == 0; }) ? 1 : 0;
  }
  std::int64_t total = 0;
  for (auto& cap : capacity) {
    if (cap >= cycles[idx]) {
      cap -= cycles[idx];
      total += count_bin_fillings(cycles, idx + 1, capacity);
      cap += cycles[idx];
    }
  }
  return total;
}

}  // namespace

std::int64_t homogeneous_cycle_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("homogeneous_cycle_value: size mismatch");
  std::vector<int> capacity = lambda.parts();
  return count_bin_fillings(mu.parts(), 0, capacity);
}

CycleTypeFunction to_cycle_values(const SymFunc& f, int degree) {
  CycleTypeFunction out;
  out.degree = degree;
  const auto all = partitions(degree);
  for (const auto& mu : all) out.values[mu] = 0;
  for (const auto& [lambda, c] : f.terms()) {
    if (lambda.size() != degree) throw std::invalid_argument("to_cycle_values: term of wrong degree");
    for (const auto& mu : all) {
      const std::int64_t v = f.basis() == Basis::schur ? mn_character(lambda, mu)
                                                        : homogeneous_cycle_value(lambda, mu);
      out.values[mu] += c * v;
    }
  }
  return out;
}

SymFunc cycle_values_to_schur(const CycleTypeFunction& chi) {
  chi.check_complete();
  const CharacterTable& table = character_table(chi.degree);
  const BigInt order = factorial(chi.degree);
  SymFunc out(Basis::schur);
  for (std::size_t l = 0; l < table.parts.size(); ++l) {
    BigInt sum = 0;
    for (std::size_t m = 0; m < table.parts.size(); ++m) {
      sum += BigInt(class_size(table.parts[m])) * chi.at(table.parts[m]) * table.chi[l][m];
    }
    if (sum % order != 0) {
      throw std::domain_error("cycle_values_to_schur: non-integer multiplicity for " + to_string(table.parts[l]));
    }
    out.add(table.parts[l], checked_int64(sum / order, "cycle_values_to_schur"));
  }
  return out;
}

SymFunc to_schur(const SymFunc& f) {
  if (f.basis() == Basis::schur) return f;
  std::map<int, SymFunc> by_degree;
  for (const auto& [p, c] : f.terms()) {
    by_degree.try_emplace(p.size(), Basis::homogeneous).first->second.add(p, c);
  }
  SymFunc out(Basis::schur);
  for (const auto& [deg, part] : by_degree) out += cycle_values_to_schur(to_cycle_values(part, deg));
  return out;
}

SymFunc to_homogeneous(const SymFunc& f) {
  if (f.basis() == Basis::homogeneous) return f;
  // h_lambda = s_lambda + (terms strictly larger in dominance, hence in lex
  // order), so peeling the lex-smallest Schur term terminates.
  SymFunc remaining = f;
  SymFunc out(Basis::homogeneous);
  while (!remaining.is_zero()) {
    const auto [lambda, c] = *std::prev(remaining.terms().end());
    SymFunc h(Basis::homogeneous);
    h.add(lambda, c);
    out.add(lambda, c);
    remaining += (-1) * to_schur(h);
  }
  return out;
}

std::int64_t dimension(const SymFunc& f) {
  BigInt total = 0;
  for (const auto& [p, c] : f.terms()) {
    if (f.basis() == Basis::schur) {
      total += BigInt(c) * dim_partition(p);
    } else {
      BigInt d = factorial(p.size());
      for (int part : p.parts()) d /= factorial(part);
      total += c * d;
    }
  }
  return checked_int64(total, "dimension");
}

IntPolynomial fake_degree_module(const std::map<Partition, std::int64_t>& mults, bool conjugate_flag) {
  IntPolynomial out;
  for (const auto& [lambda, m] : mults) {
    if (m < 0) throw std::invalid_argument("fake_degree_module: negative multiplicity");
    if (m == 0) continue;
    out += fake_degree(conjugate_flag ? lambda.conjugate() : lambda) * BigInt(m);
  }
  return out;
}

IntPolynomial fake_degree_module(const SymFunc& schur, bool conjugate_flag) {
  if (schur.basis() != Basis::schur) return fake_degree_module(to_schur(schur), conjugate_flag);
  return fake_degree_module(schur.terms(), conjugate_flag);
}

SymFunc matchings_schur_sum(int r) {
  if (r < 0 || r > 6) throw std::invalid_argument("matchings_schur_sum: need 0 <= r <= 6");
  SymFunc out(Basis::schur);
  for (const auto& mu : partitions(r)) out.add(doubled(mu), 1);
  return out;
}

std::vector<std::vector<SymFunc>> rencontre_series(int N) {
  if (N < 0 || N > 8) throw std::invalid_argument("rencontre_series: need 0 <= N <= 8");
  auto h = [](int n) {
    SymFunc f(Basis::homogeneous);
    f.add(n == 0 ? Partition() : Partition({n}), 1);
    return f;
  };
  // G(z) = 1 / (1 - sum_{n>=2} (n-1) h_n z^n), by the recurrence for the
  // reciprocal of a series with constant term 1.
  std::vector<SymFunc> g(static_cast<std::size_t>(N) + 1, SymFunc(Basis::homogeneous));
  g[0] = h(0);
  for (int n = 1; n <= N; ++n) {
    for (int m = 2; m <= n; ++m) g[static_cast<std::size_t>(n)] += h_product((m - 1) * h(m), g[static_cast<std::size_t>(n - m)]);
  }
  // Coefficient of t^k z^n in H(tz) G(z).
  std::vector<std::vector<SymFunc>> F(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    for (int k = 0; k <= n; ++k) {
      F[static_cast<std::size_t>(n)].push_back(h_product(h(k), g[static_cast<std::size_t>(n - k)]));
    }
  }
  return F;
}

IntPolynomial q_derangement(int n) {
  if (n < 0) throw std::invalid_argument("q_derangement: negative argument");
  // [n]! * sum_k (-1)^k q^C(k,2) / [k]!, each term divided exactly by [k]!.
  const IntPolynomial nfact = q_factorial(n);
  IntPolynomial total;
  for (int k = 0; k <= n; ++k) {
    IntPolynomial term = poly_exact_div(nfact, q_factorial(k)).shifted(static_cast<std::size_t>(k * (k - 1) / 2));
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

IntPolynomial q_rencontre(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("q_rencontre: need 0 <= k <= n");
  return q_binomial(n, k) * q_derangement(n - k);
}

nlohmann::json to_json(const Partition& p) { return p.parts(); }

nlohmann::json to_json(const SymFunc& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : f.terms()) terms.push_back({{"partition", p.parts()}, {"coeff", c}});
  return {{"basis", to_string(f.basis())}, {"terms", terms}};
}

SymFunc symfunc_from_json(const nlohmann::json& j) {
  const std::string basis = j.at("basis").get<std::string>();
  if (basis != "schur" && basis != "homogeneous") throw std::invalid_argument("unknown basis '" + basis + "'");
  SymFunc f(basis == "schur" ? Basis::schur : Basis::homogeneous);
  for (const auto& t : j.at("terms")) {
    f.add(Partition(t.at("partition").get<std::vector<int>>()), t.at("coeff").get<std::int64_t>());
  }
  return f;
}

}  // namespace csplab
