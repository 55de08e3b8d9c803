#include "csplab/liechar.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "csplab/budget.hpp"

namespace csplab {

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    h ^= std::hash<int>{}(w(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool weight_less(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < w.size(); ++i) os << (i ? "," : "") << w(i);
  os << ")";
  return os.str();
}

Weight parse_weight(const std::string& text) {
  std::vector<int> v;
  std::string token;
  for (char c : text + ",") {
    if (c == ',' || c == ' ') {
      if (!token.empty()) {
        try {
          v.push_back(std::stoi(token));
        } catch (const std::logic_error&) {
          throw std::invalid_argument("cannot parse weight '" + text + "'");
        }
        token.clear();
      }
    } else if (c != '(' && c != ')' && c != '[' && c != ']') {
      token.push_back(c);
    }
  }
  if (v.empty() || v.size() > static_cast<std::size_t>(kMaxRank)) {
    throw std::invalid_argument("cannot parse weight '" + text + "'");
  }
  Weight w(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) w(static_cast<Eigen::Index>(i)) = v[i];
  return w;
}

// --- RootSystem ------------------------------------------------------------

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  const bool ok = (type == 'A' && rank >= 1 && rank <= 5) || (type == 'B' && rank == 3) ||
                  (type == 'C' && (rank == 2 || rank == 3)) || (type == 'G' && rank == 2);
  if (!ok) {
    throw std::invalid_argument("unsupported root system " + std::string(1, type) + std::to_string(rank));
  }
  name_ = std::string(1, type) + std::to_string(rank);
  form_ = WeightMatrix::Zero(rank, rank);
  switch (type) {
    case 'A':
      for (int i = 0; i < rank; ++i) {
        form_(i, i) = 2;
        if (i + 1 < rank) form_(i, i + 1) = form_(i + 1, i) = -1;
      }
      break;
    case 'B':
      form_ << 4, -2, 0, -2, 4, -2, 0, -2, 2;
      break;
    case 'C':
      if (rank == 2) {
        form_ << 2, -2, -2, 4;
      } else {
        form_ << 2, -1, 0, -1, 2, -2, 0, -2, 4;
      }
      break;
    case 'G':
      form_ << 2, -3, -3, 6;
      break;
  }
  cartan_ = WeightMatrix(rank, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) cartan_(i, j) = 2 * form_(i, j) / form_(i, i);
  }
  build_roots();
  build_weyl_group();
}

void RootSystem::build_roots() {
  std::unordered_set<Weight, WeightHash> seen;
  std::vector<Weight> level;
  for (int i = 0; i < rank_; ++i) {
    Weight e = Weight::Zero(rank_);
    e(i) = 1;
    level.push_back(e);
    seen.insert(e);
  }
  while (!level.empty()) {
    positive_roots_.insert(positive_roots_.end(), level.begin(), level.end());
    std::vector<Weight> next;
    for (const auto& beta : level) {
      for (int i = 0; i < rank_; ++i) {
        const int pairing = cartan_.row(i).dot(beta);
        int p = 0;
        Weight down = beta;
        while (true) {
          down(i) -= 1;
          if (!seen.contains(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          Weight up = beta;
          up(i) += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }
}

void RootSystem::build_weyl_group() {
  std::vector<WeightMatrix> simple;
  for (int i = 0; i < rank_; ++i) {
    // s_i(lambda) = lambda - lambda_i alpha_i
    WeightMatrix s = WeightMatrix::Identity(rank_, rank_);
    s.col(i) -= cartan_.col(i);
    simple.push_back(s);
  }
  auto key = [](const WeightMatrix& m) { return std::vector<int>(m.data(), m.data() + m.size()); };
  std::set<std::vector<int>> seen;
  std::vector<WeightMatrix> level{WeightMatrix::Identity(rank_, rank_)};
  seen.insert(key(level.front()));
  int length = 0;
  while (!level.empty()) {
    for (const auto& g : level) {
      weyl_.push_back(g);
      weyl_lengths_.push_back(length);
    }
    std::vector<WeightMatrix> next;
    for (const auto& g : level) {
      for (const auto& s : simple) {
        WeightMatrix h = s * g;
        if (seen.insert(key(h)).second) next.push_back(h);
      }
    }
    level = std::move(next);
    ++length;
  }
}

Weight RootSystem::fundamental_weight(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("fundamental weight index out of range");
  Weight w = Weight::Zero(rank_);
  w(i - 1) = 1;
  return w;
}

Weight RootSystem::highest_root() const {
  const Weight* best = &positive_roots_.front();
  for (const auto& r : positive_roots_) {
    if (r.sum() > best->sum()) best = &r;
  }
  return root_to_weight(*best);
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  return w - w(i) * Weight(cartan_.col(i));
}

std::int64_t RootSystem::pair_weight_root(const Weight& mu, const Weight& root) const {
  std::int64_t s = 0;
  for (int j = 0; j < rank_; ++j) s += static_cast<std::int64_t>(mu(j)) * root(j) * root_scale(j);
  return s;
}

std::int64_t RootSystem::pair_roots(const Weight& a, const Weight& b) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) s += static_cast<std::int64_t>(a(i)) * form_(i, j) * b(j);
  }
  return s;
}

bool RootSystem::is_dominant(const Weight& w) const {
  return w.size() == rank_ && (w.array() >= 0).all();
}

void RootSystem::check_weight(const Weight& w) const {
  if (w.size() != rank_) {
    throw std::invalid_argument("weight " + to_string(w) + " has wrong rank for " + name_);
  }
}

RootSystemPtr root_system(char type, int rank) {
  static std::mutex mutex;
  static std::map<std::pair<char, int>, RootSystemPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{type, rank}];
  if (!slot) slot = std::make_shared<const RootSystem>(type, rank);
  return slot;
}

RootSystemPtr root_system(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("unsupported root system '" + name + "'");
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("unsupported root system '" + name + "'");
  }
  return root_system(static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))), rank);
}

// --- Character -------------------------------------------------------------

std::int64_t Character::at(const Weight& w) const {
  auto it = mult_.find(w);
  return it == mult_.end() ? 0 : it->second;
}

void Character::add(const Weight& w, std::int64_t m) {
  if (m == 0) return;
  auto [it, inserted] = mult_.emplace(w, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) mult_.erase(it);
  }
}

std::int64_t Character::dimension() const {
  std::int64_t d = 0;
  for (const auto& [w, m] : mult_) d += m;
  return d;
}

std::vector<Weight> Character::sorted_weights() const {
  std::vector<Weight> out;
  out.reserve(mult_.size());
  for (const auto& [w, m] : mult_) out.push_back(w);
  std::sort(out.begin(), out.end(), weight_less);
  return out;
}

bool operator==(const Character& a, const Character& b) {
  return a.rs_ == b.rs_ && a.mult_ == b.mult_;
}

Character irreducible_character(const RootSystemPtr& rs, const Weight& lambda) {
  rs->check_weight(lambda);
  if (!rs->is_dominant(lambda)) throw std::invalid_argument("weight " + to_string(lambda) + " is not dominant");
  const int n = rs->rank();
  const auto& roots = rs->positive_roots();
  std::vector<std::int64_t> root_norm;
  std::vector<std::int64_t> lambda_dot_root;
  for (const auto& a : roots) {
    root_norm.push_back(rs->pair_roots(a, a));
    lambda_dot_root.push_back(rs->pair_weight_root(lambda, a));
  }
  const Weight lambda_rho = lambda + rs->rho();

  // Multiplicity of lambda - beta, beta in simple-root coordinates.
  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  Weight zero = Weight::Zero(n);
  mult[zero] = 1;
  std::vector<Weight> level{zero};
  while (!level.empty()) {
    std::unordered_set<Weight, WeightHash> candidates;
    for (const auto& beta : level) {
      for (int i = 0; i < n; ++i) {
        Weight b = beta;
        b(i) += 1;
        candidates.insert(b);
      }
    }
    std::vector<Weight> ordered(candidates.begin(), candidates.end());
    std::sort(ordered.begin(), ordered.end(), weight_less);
    std::vector<Weight> next;
    for (const auto& beta : ordered) {
      const std::int64_t denom = 2 * rs->pair_weight_root(lambda_rho, beta) - rs->pair_roots(beta, beta);
      std::int64_t num = 0;
      for (std::size_t a = 0; a < roots.size(); ++a) {
        const std::int64_t beta_dot = rs->pair_roots(beta, roots[a]);
        Weight shifted = beta;
        for (int k = 1;; ++k) {
          shifted -= roots[a];
          if ((shifted.array() < 0).any()) break;
          auto it = mult.find(shifted);
          if (it == mult.end()) continue;
          num += (lambda_dot_root[a] - beta_dot + k * root_norm[a]) * it->second;
        }
      }
      num *= 2;
      if (num == 0) continue;
      if (denom <= 0 || num % denom != 0) {
        throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
      }
      mult[beta] = num / denom;
      next.push_back(beta);
    }
    level = std::move(next);
  }

  Character chi(rs);
  for (const auto& [beta, m] : mult) chi.add(Weight(lambda - rs->cartan() * beta), m);
  return chi;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  const Weight lambda_rho = lambda + rs.rho();
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& a : rs.positive_roots()) {
    num *= rs.pair_weight_root(lambda_rho, a);
    den *= rs.pair_weight_root(rs.rho(), a);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula gave a fraction");
  return num / den;
}

Character trivial_character(const RootSystemPtr& rs) {
  Character chi(rs);
  chi.add(Weight::Zero(rs->rank()), 1);
  return chi;
}

Character adams(const Character& chi, int l) {
  if (l < 1) throw std::invalid_argument("adams: degree must be positive");
  Character out(chi.root_system());
  for (const auto& [w, m] : chi.multiplicities()) out.add(Weight(l * w), m);
  return out;
}

Character char_mul(const Character& a, const Character& b) {
  if (a.root_system() != b.root_system()) throw std::invalid_argument("char_mul: root-system mismatch");
  const std::size_t budget = enumeration_budget();
  Character out(a.root_system());
  for (const auto& [wa, ma] : a.multiplicities()) {
    for (const auto& [wb, mb] : b.multiplicities()) out.add(Weight(wa + wb), ma * mb);
    if (out.multiplicities().size() > budget) {
      throw BudgetExceeded("character product exceeds the weight budget");
    }
  }
  return out;
}

bool is_weyl_invariant(const Character& chi) {
  const auto& rs = *chi.root_system();
  for (const auto& [w, m] : chi.multiplicities()) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (chi.at(rs.reflect(w, i)) != m) return false;
    }
  }
  return true;
}

namespace {

// (sign(w), rho - w rho) for every Weyl group element.
std::vector<std::pair<int, Weight>> rho_shifts(const RootSystem& rs) {
  std::vector<std::pair<int, Weight>> out;
  const Weight rho = rs.rho();
  for (std::size_t k = 0; k < rs.weyl_group().size(); ++k) {
    out.emplace_back(rs.weyl_lengths()[k] % 2 == 0 ? 1 : -1, Weight(rho - rs.weyl_group()[k] * rho));
  }
  return out;
}

}  // namespace

std::int64_t trivial_multiplicity(const Character& chi) {
  if (!is_weyl_invariant(chi)) throw std::invalid_argument("trivial_multiplicity: character is not Weyl invariant");
  std::int64_t total = 0;
  for (const auto& [sign, target] : rho_shifts(*chi.root_system())) total += sign * chi.at(target);
  return total;
}

std::int64_t trivial_multiplicity_of_product(const std::vector<Character>& factors) {
  if (factors.empty()) return 1;
  for (const auto& f : factors) {
    if (f.root_system() != factors.front().root_system()) {
      throw std::invalid_argument("trivial_multiplicity_of_product: root-system mismatch");
    }
    if (!is_weyl_invariant(f)) throw std::invalid_argument("trivial_multiplicity_of_product: factor is not Weyl invariant");
  }
  if (factors.size() == 1) return trivial_multiplicity(factors.front());
  Character head = factors.front();
  for (std::size_t i = 1; i + 1 < factors.size(); ++i) head = char_mul(head, factors[i]);
  const Character& last = factors.back();
  std::int64_t total = 0;
  for (const auto& [sign, target] : rho_shifts(*head.root_system())) {
    std::int64_t coeff = 0;
    for (const auto& [w, m] : last.multiplicities()) coeff += m * head.at(Weight(target - w));
    total += sign * coeff;
  }
  return total;
}

std::int64_t two_rho_pairing(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  std::int64_t total = 0;
  for (const auto& a : rs.positive_roots()) {
    const std::int64_t num = 2 * rs.pair_weight_root(lambda, a);
    const std::int64_t norm = rs.pair_roots(a, a);
    if (num % norm != 0) throw std::logic_error("non-integral coroot pairing");
    total += num / norm;
  }
  return total;
}

std::vector<std::pair<Weight, std::int64_t>> decompose_by_extraction(const Character& chi) {
  const auto& rs = chi.root_system();
  std::vector<std::pair<Weight, std::int64_t>> out;
  Character rest = chi;
  while (!rest.multiplicities().empty()) {
    const Weight* top = nullptr;
    std::int64_t top_height = 0;
    for (const auto& [w, m] : rest.multiplicities()) {
      if (!rs->is_dominant(w)) continue;
      const std::int64_t h = two_rho_pairing(*rs, w);
      if (!top || h > top_height || (h == top_height && weight_less(*top, w))) {
        top = &w;
        top_height = h;
      }
    }
    if (!top) throw std::invalid_argument("decompose_by_extraction: character has no dominant weight");
    const Weight lambda = *top;
    const std::int64_t c = rest.at(lambda);
    out.emplace_back(lambda, c);
    const Character irreducible = irreducible_character(rs, lambda);
    for (const auto& [w, m] : irreducible.multiplicities()) rest.add(w, -c * m);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return weight_less(x.first, y.first); });
  return out;
}

// --- invariants of tensor powers --------------------------------------------

std::int64_t InvariantsCharacter::dimension() const {
  std::vector<int> ones(static_cast<std::size_t>(degree), 1);
  return cycle_values.at(Partition(ones));
}

InvariantsCharacter frobenius_invariants(const RootSystemPtr& rs, const Weight& lambda, int r) {
  if (r < 0) throw std::invalid_argument("frobenius_invariants: negative degree");
  const Character base = irreducible_character(rs, lambda);
  const auto types = partitions(r);

  auto evaluate = [&](const Partition& mu) {
    std::vector<Character> factors;
    for (int l : mu.parts()) factors.push_back(adams(base, l));
    // Keep the widest factor last so it is never expanded.
    std::stable_sort(factors.begin(), factors.end(), [](const Character& a, const Character& b) {
      return a.multiplicities().size() < b.multiplicities().size();
    });
    return trivial_multiplicity_of_product(factors);
  };

  std::vector<std::int64_t> values(types.size());
  if (std::thread::hardware_concurrency() > 1) {
    std::vector<std::future<std::int64_t>> jobs;
    for (const auto& mu : types) jobs.push_back(std::async(std::launch::async, evaluate, mu));
    for (std::size_t i = 0; i < jobs.size(); ++i) values[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < types.size(); ++i) values[i] = evaluate(types[i]);
  }

  InvariantsCharacter inv;
  inv.degree = r;
  inv.cycle_values.degree = r;
  for (std::size_t i = 0; i < types.size(); ++i) inv.cycle_values.values[types[i]] = values[i];
  inv.schur = cycle_values_to_schur(inv.cycle_values);
  inv.two_rho = two_rho_pairing(*rs, lambda);
  return inv;
}

IntPolynomial invariants_fake_degree(const InvariantsCharacter& inv) {
  return fake_degree_module(inv.schur, inv.twisted());
}

nlohmann::json to_json(const Character& chi) {
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& w : chi.sorted_weights()) {
    weights.push_back({{"weight", std::vector<int>(w.data(), w.data() + w.size())}, {"mult", chi.at(w)}});
  }
  return {{"root_system", chi.root_system()->name()}, {"weights", weights}};
}

nlohmann::json to_json(const InvariantsCharacter& inv) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& [mu, v] : inv.cycle_values.values) {
    values.push_back({{"cycle_type", mu.parts()}, {"value", v}});
  }
  return {{"degree", inv.degree},
          {"cycle_values", values},
          {"schur", to_json(inv.schur)},
          {"two_rho", inv.two_rho},
          {"twisted", inv.twisted()}};
}

}  // namespace csplab
