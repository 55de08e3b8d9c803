// csp-lab: cyclic sieving experiments from the command line.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csplab/budget.hpp"
#include "csplab/crystal.hpp"
#include "csplab/csp.hpp"
#include "csplab/diagrams.hpp"
#include "csplab/liechar.hpp"
#include "csplab/repro.hpp"
#include "csplab/symfunc.hpp"

using namespace csplab;

namespace {

enum class Format { text, json, csv };

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Experiment {
  std::string name;
  std::vector<std::pair<std::string, int>> params;
  std::string polynomial_source;
  FiniteAction action;
  IntPolynomial polynomial;
};

std::string counts_text(const OrbitReport& rep) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto it = rep.counts.rbegin(); it != rep.counts.rend(); ++it) {
    os << (first ? "" : ",") << it->first << ":" << it->second;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string join(const std::vector<std::int64_t>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string coeff_list(const IntPolynomial& p, const std::string& sep) {
  std::ostringstream os;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? sep : "") << c[i];
  return os.str();
}

std::string render(const Experiment& e, const CspVerdict& v, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      nlohmann::json j = to_json(v);
      nlohmann::json params = nlohmann::json::object();
      for (const auto& [k, x] : e.params) params[k] = x;
      j["experiment"] = e.name;
      j["parameters"] = params;
      j["polynomial_source"] = e.polynomial_source;
      j["representatives"] = v.report.representatives;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      os << "field,value\n";
      os << "experiment," << e.name << "\n";
      for (const auto& [k, x] : e.params) os << k << "," << x << "\n";
      os << "size," << v.report.size << "\n";
      os << "order," << v.report.order << "\n";
      for (auto it = v.report.counts.rbegin(); it != v.report.counts.rend(); ++it) {
        os << "orbits_of_size_" << it->first << "," << it->second << "\n";
      }
      os << "polynomial,\"" << coeff_list(v.polynomial, " ") << "\"\n";
      os << "reduced,\"" << coeff_list(v.reduced, " ") << "\"\n";
      os << "fixed_points,\"" << join(v.report.fixed_points, " ") << "\"\n";
      os << "fixed_point_identity," << (v.fixed_point_identity ? "true" : "false") << "\n";
      os << "csp," << (v.csp ? "PASS" : "FAIL") << "\n";
      break;
    }
    case Format::text: {
      os << "experiment: " << e.name;
      for (const auto& [k, x] : e.params) os << " " << k << "=" << x;
      os << "\n";
      os << "elements: " << v.report.size << "\n";
      os << "order: " << v.report.order << "\n";
      os << "orbit counts: " << counts_text(v.report) << "\n";
      os << "polynomial (" << e.polynomial_source << "): " << to_string(v.polynomial) << "\n";
      os << "reduced mod q^" << v.report.order << " - 1: " << to_string(v.reduced) << "\n";
      os << "fixed points: " << join(v.report.fixed_points, " ") << "\n";
      if (v.mismatch) {
        os << "mismatch at q^" << v.mismatch->exponent << ": orbits give " << v.mismatch->expected
           << ", polynomial gives " << v.mismatch->actual << "\n";
      }
      os << "CSP: " << (v.csp ? "PASS" : "FAIL") << "\n";
      break;
    }
  }
  return os.str();
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw FileError("cannot write '" + output + "'");
  out << text;
  if (!out) throw FileError("cannot write '" + output + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read crystal file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntPolynomial invariant_fake_degree_for(const RootSystemPtr& sys, const Weight& lambda, int r) {
  return invariants_fake_degree(frobenius_invariants(sys, lambda, r));
}

Experiment crystal_experiment(const std::string& name, const CrystalGraph& X, const RootSystemPtr& sys,
                              const Weight& lambda, int r, std::vector<std::pair<std::string, int>> params) {
  Experiment e;
  e.name = name;
  e.params = std::move(params);
  e.polynomial_source = "fake degree of the invariant tensors of " + sys->name() + " " + to_string(lambda);
  e.action = promotion_action(X, r);
  e.polynomial = invariant_fake_degree_for(sys, lambda, r);
  return e;
}

int run_experiment(const Experiment& e, Format format, const std::string& output) {
  const CspVerdict v = verify_csp(e.action, e.polynomial);
  emit(render(e, v, format), output);
  return v.csp ? 0 : 1;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic sieving experiments: orbit structure of rotation and promotion"};
  app.require_subcommand(1);

  Format format = Format::text;
  std::string output;
  const std::map<std::string, Format> formats = {{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--output", output, "write the report to this file");
  };

  int r = 0, k = 0, n = 0;
  auto* tl = app.add_subcommand("tl", "rotation of Temperley-Lieb diagrams on 2r points");
  tl->add_option("--r", r, "number of arcs")->required();
  add_common(tl);

  auto* sl2 = app.add_subcommand("sl2", "promotion on invariant words of the (k+1)-dimensional sl2 module");
  sl2->add_option("--k", k, "highest weight")->required();
  sl2->add_option("--r", r, "tensor power")->required();
  add_common(sl2);

  auto* typeA = app.add_subcommand("typeA", "promotion on rectangular tableaux with n rows and k columns");
  typeA->add_option("--n", n, "rows (rank + 1)")->required();
  typeA->add_option("--k", k, "columns")->required();
  add_common(typeA);

  auto* g2 = app.add_subcommand("g2", "promotion on invariant words of the 7-dimensional G2 module");
  g2->add_option("--r", r, "tensor power")->required();
  add_common(g2);

  auto* spin = app.add_subcommand("spin", "promotion on invariant words of the spin module of so(7)");
  spin->add_option("--r", r, "tensor power")->required();
  add_common(spin);

  auto* matchings = app.add_subcommand("matchings", "rotation of perfect matchings of 2r points");
  matchings->add_option("--r", r, "number of pairs")->required();
  add_common(matchings);

  auto* derangements = app.add_subcommand("derangements", "conjugation of derangements by the long cycle");
  derangements->add_option("--r", r, "number of letters")->required();
  add_common(derangements);

  std::string shape;
  auto* fakedeg = app.add_subcommand("fakedeg", "fake degree polynomial of a partition");
  fakedeg->add_option("--shape", shape, "partition, e.g. 2,2 or 2^3,1")->required();
  add_common(fakedeg);

  std::string file, builtin, word;
  auto* crystal = app.add_subcommand("crystal", "load and validate a crystal, then promote");
  auto* file_opt = crystal->add_option("--file", file, "crystal file");
  crystal->add_option("--builtin", builtin, "built-in crystal: typeA_vector, sl2, g2_fund7, b3_spin, so_vector")
      ->excludes(file_opt);
  crystal->add_option("--k", k, "parameter of a built-in crystal");
  crystal->add_option("--r", r, "tensor power for invariant words and promotion orbits");
  crystal->add_option("--word", word, "invariant word to promote");
  bool dump = false;
  crystal->add_flag("--dump", dump, "print the crystal in file format");
  add_common(crystal);

  std::vector<std::string> only;
  bool sabotage = false, parallel = false;
  auto* repro = app.add_subcommand("repro", "run the acceptance suite");
  repro->add_option("--only", only, "criterion keys or ids")->delimiter(',');
  repro->add_flag("--sabotage-twist", sabotage, "negative control: flip the sign twist");
  repro->add_flag("--parallel", parallel, "run criteria concurrently");
  add_common(repro);

  if (argc > 1 && argv[1][0] != '-') {
    const std::string command = argv[1];
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == command;
    if (!known) {
      std::cerr << "unknown command '" << command << "'\n";
      return 2;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (tl->parsed()) {
      require(r >= 0, "--r must be nonnegative");
      const auto a1 = root_system('A', 1);
      Experiment e;
      e.name = "tl";
      e.params = {{"r", r}};
      e.action = tl_rotation_action(r);
      e.polynomial_source = "fake degree of the invariant tensors of A1 (1)";
      e.polynomial = invariant_fake_degree_for(a1, a1->fundamental_weight(1), 2 * r);
      return run_experiment(e, format, output);
    }
    if (sl2->parsed()) {
      require(r >= 0, "--r must be nonnegative");
      const auto a1 = root_system('A', 1);
      return run_experiment(crystal_experiment("sl2", builtin_crystal("sl2", k), a1, k * a1->fundamental_weight(1), r,
                                               {{"k", k}, {"r", r}}),
                            format, output);
    }
    if (typeA->parsed()) {
      require(k >= 1, "--k must be positive");
      const auto X = builtin_crystal("typeA_vector", n);
      const auto sys = root_system('A', n - 1);
      return run_experiment(
          crystal_experiment("typeA", X, sys, sys->fundamental_weight(1), k * n, {{"n", n}, {"k", k}}), format,
          output);
    }
    if (g2->parsed()) {
      require(r >= 0, "--r must be nonnegative");
      const auto sys = root_system("G2");
      return run_experiment(
          crystal_experiment("g2", builtin_crystal("g2_fund7"), sys, sys->fundamental_weight(1), r, {{"r", r}}),
          format, output);
    }
    if (spin->parsed()) {
      require(r >= 0, "--r must be nonnegative");
      const auto sys = root_system('B', 3);
      return run_experiment(
          crystal_experiment("spin", builtin_crystal("b3_spin"), sys, sys->fundamental_weight(3), r, {{"r", r}}),
          format, output);
    }
    if (matchings->parsed()) {
      require(r >= 0, "--r must be nonnegative");
      Experiment e;
      e.name = "matchings";
      e.params = {{"r", r}};
      e.action = matching_rotation_action(r);
      e.polynomial_source = "sum of fake degrees of s_2mu";
      e.polynomial = fake_degree_module(matchings_schur_sum(r), false);
      return run_experiment(e, format, output);
    }
    if (derangements->parsed()) {
      require(r >= 1, "--r must be positive");
      Experiment e;
      e.name = "derangements";
      e.params = {{"r", r}};
      e.action = derangement_conjugation_action(r);
      e.polynomial_source = "fake degree of the conjugation character";
      e.polynomial = fake_degree_module(cycle_values_to_schur(derangement_character(r)), false);
      return run_experiment(e, format, output);
    }
    if (fakedeg->parsed()) {
      const Partition lambda = parse_partition(shape);
      require(lambda.size() <= 64, "--shape is too large");
      const IntPolynomial f = fake_degree(lambda);
      std::string text;
      switch (format) {
        case Format::json:
          text = to_json(f).dump() + "\n";
          break;
        case Format::csv:
          text = "exponent,coefficient\n";
          for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
            text += std::to_string(i) + "," + f.coefficients()[i].str() + "\n";
          }
          break;
        case Format::text:
          text = "[" + coeff_list(f, ",") + "]\n";
          break;
      }
      emit(text, output);
      return 0;
    }
    if (crystal->parsed()) {
      require(!file.empty() || !builtin.empty(), "crystal needs --file or --builtin");
      const CrystalGraph X = file.empty() ? builtin_crystal(builtin, k) : load_crystal(read_file(file));
      if (dump) {
        emit(file.empty() ? builtin_crystal_text(builtin, k) : read_file(file), output);
        return 0;
      }
      nlohmann::json j;
      j["name"] = X.name();
      j["rank"] = X.rank();
      j["vertices"] = X.size();
      j["source"] = X.source();
      j["sink"] = X.sink();
      j["lowering_path"] = X.lowering_path();
      if (crystal->count("--r")) {
        require(r >= 0, "--r must be nonnegative");
        const auto rep = promotion_orbits(X, r);
        j["r"] = r;
        j["invariant_words"] = rep.size;
        nlohmann::json counts = nlohmann::json::object();
        for (const auto& [s, c] : rep.counts) counts[std::to_string(s)] = c;
        j["orbit_counts"] = counts;
        j["fixed_points"] = rep.fixed_points;
      }
      if (!word.empty()) {
        const Word w = parse_word(word);
        j["word"] = word_to_string(w);
        j["promoted"] = word_to_string(promote(X, w));
      }
      std::ostringstream os;
      switch (format) {
        case Format::json:
          os << j.dump(2) << "\n";
          break;
        case Format::csv:
          os << "field,value\n";
          for (const auto& [key, value] : j.items()) {
            os << key << ",\"" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\"\n";
          }
          break;
        case Format::text:
          os << "crystal " << X.name() << ": rank " << X.rank() << ", " << X.size() << " vertices, source "
             << X.source() << ", sink " << X.sink() << "\n";
          if (j.contains("r")) {
            os << "r=" << r << ": " << j["invariant_words"].get<std::size_t>() << " invariant words, orbit counts "
               << j["orbit_counts"].dump() << "\n";
          }
          if (j.contains("promoted")) {
            os << "promote(" << j["word"].get<std::string>() << ") = " << j["promoted"].get<std::string>() << "\n";
          }
          break;
      }
      emit(os.str(), output);
      return 0;
    }
    if (repro->parsed()) {
      ReproOptions options;
      options.only = only;
      options.sabotage_twist = sabotage;
      options.parallel = parallel;
      const auto results = run_acceptance(options);
      bool all = true;
      std::ostringstream os;
      if (format == Format::json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& res : results) j.push_back(to_json(res));
        os << j.dump(2) << "\n";
      } else if (format == Format::csv) {
        os << "id,key,status\n";
        for (const auto& res : results) os << res.id << "," << res.key << "," << (res.pass ? "PASS" : "FAIL") << "\n";
      } else {
        for (const auto& res : results) os << format_result(res);
      }
      for (const auto& res : results) all = all && res.pass;
      emit(os.str(), output);
      return all ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const FileError& e) {
    std::cerr << "file error: " << e.what() << "\n";
    return 2;
  } catch (const CrystalError& e) {
    std::cerr << "crystal error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
