#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rorc/composition.hpp"
#include "rorc/json_io.hpp"
#include "rorc/line_diagram.hpp"
#include "rorc/strata.hpp"
#include "rorc/tableau.hpp"
#include "rorc/verifier.hpp"

namespace {

using namespace rorc;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalid = 2;
constexpr int kMaxElementaryTerms = 24;

/// Bad user input; reported on stderr with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string d;
  std::string pair;
  std::string mode = "sample";
  std::string field;
  std::string checks = "theorem";
  std::string out;
  std::string matrix;
  std::optional<std::uint64_t> seed;
  long trials = 1000;
  long budget = WitnessOptions{}.budget;
  int dim_cap = 20;
  bool json = false;
  bool timing = false;
};

DimensionVector parse_d(const std::string& text) {
  try {
    return DimensionVector::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("malformed d '" + text + "': " + e.what());
  }
}

Pair parse_pair(const std::string& text, const DimensionVector& d) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("expected i,j");
    std::size_t used_i = 0;
    std::size_t used_j = 0;
    const std::string left = text.substr(0, comma);
    const std::string right = text.substr(comma + 1);
    const int i = std::stoi(left, &used_i);
    const int j = std::stoi(right, &used_j);
    if (used_i != left.size() || used_j != right.size()) throw std::invalid_argument("expected i,j");
    check_pair(d, i, j);
    return {i, j};
  } catch (const std::exception&) {
    throw UsageError("bad pair '" + text + "' for d = " + d.to_string() + " (need 1 <= i < j <= " +
                     std::to_string(d.t()) + ")");
  }
}

std::uint32_t parse_prime(const std::string& text) {
  std::string digits = text.rfind("Fp:", 0) == 0 ? text.substr(3) : text;
  try {
    std::size_t used = 0;
    const unsigned long p = std::stoul(digits, &used);
    if (used != digits.size() || p > 0x7fffffffUL || !is_prime(p)) throw std::invalid_argument("not a prime");
    return static_cast<std::uint32_t>(p);
  } catch (const std::exception&) {
    throw UsageError("bad field '" + text + "' (expected a prime p or Fp:p)");
  }
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  const char* env = std::getenv("RORC_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const std::string text(env);
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("RORC_SEED is not an unsigned integer: '") + env + "'");
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

/// Prints JSON or text to stdout; --out additionally receives the JSON.
void emit(const Options& o, const Json& json, const std::string& text) {
  const std::string dumped = json.dump(2) + "\n";
  std::cout << (o.json ? dumped : text);
  if (!o.out.empty()) write_file(o.out, dumped);
}

std::string pair_text(const Pair& p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

std::string indent(const std::string& block, const std::string& prefix) {
  std::istringstream in(block);
  std::string line;
  std::string out;
  while (std::getline(in, line)) out += prefix + line + "\n";
  return out;
}

int run_analyze(const Options& o) {
  const DimensionVector d = parse_d(o.d);
  const Decomposition dec = decompose(d);
  const PairSet gamma = gamma_set(d);

  Json json = decomposition_to_json(dec);
  json["n"] = d.n();
  json["t"] = d.t();
  json["gamma"] = pairs_to_json(gamma);

  std::ostringstream text;
  text << "d = " << d.to_string() << "  n = " << d.n() << "  t = " << d.t() << "\n";
  text << "lambda(d) = " << dec.lambda.to_string() << "\n";
  text << "Gamma(d) = " << to_string(gamma) << "  (" << gamma.size() << " pairs)\n";
  PairSet lambda;
  for (const auto& s : dec.strata) lambda.insert(s.pair);
  text << "Lambda(d) = " << to_string(lambda) << "\n";
  if (dec.strata.empty()) {
    text << "components: 0 (the complement of the Richardson orbit is empty)\n";
  } else {
    text << "components: " << dec.strata.size() << "\n";
    for (const auto& s : dec.strata) {
      text << "\nZ" << pair_text(s.pair) << ": kappa = " << s.kappa << ", rank < " << s.rank_threshold
           << ", codim = " << s.codim << ", mu = " << s.mu.to_string() << "\n";
      text << indent(s.tableau.to_string(), "    ");
    }
  }
  emit(o, json, text.str());
  return kExitPass;
}

int run_diagram(const Options& o) {
  const DimensionVector d = parse_d(o.d);
  LineDiagram diagram = complete_diagram(d);
  Json json{{"d", d.parts()}};
  if (!o.pair.empty()) {
    const Pair p = parse_pair(o.pair, d);
    diagram = subdiagram(diagram, p.first, p.second);
    json["window"] = {p.first, p.second};
  }
  Json edges = Json::array();
  for (const auto& [u, v] : diagram.edges()) edges.push_back({u, v});
  json["columns"] = diagram.columns().parts();
  json["edges"] = std::move(edges);
  json["chain_lengths"] = chain_stats(diagram).lengths;
  json["class"] = diagram_class(diagram).parts();
  emit(o, json, render_ascii(diagram));
  return kExitPass;
}

int run_tableau(const Options& o) {
  const DimensionVector d = parse_d(o.d);
  if (o.pair.empty()) {
    const YoungTableau t = t_of_d(d);
    emit(o, tableau_to_json(t), t.to_string());
    return kExitPass;
  }
  const Pair p = parse_pair(o.pair, d);
  const MinimalMovement m = minimal_movement(d, p.first, p.second);
  Json json = tableau_to_json(m.tableau);
  json["pair"] = {p.first, p.second};
  json["from_row"] = m.from_row;
  json["to_row"] = m.to_row;
  json["codim"] = m.codim;
  std::ostringstream text;
  text << "T" << pair_text(p) << "  shape " << m.mu.to_string() << "  box " << p.second << " moved from row "
       << m.from_row << " to row " << m.to_row << "  c = " << m.codim << "\n";
  text << m.tableau.to_string();
  emit(o, json, text.str());
  return kExitPass;
}

template <class M>
std::string brief(const M& m) {
  const int support = m.support_size();
  return support <= kMaxElementaryTerms ? elementary_form(m) : std::to_string(support) + " nonzero entries";
}

std::string summarize(const VerificationReport& report) {
  std::ostringstream text;
  const ExperimentConfig& c = report.config;
  text << "d = " << c.d.to_string() << "  mode = " << to_string(c.mode) << "  field = "
       << (c.prime == 0 ? std::string("Q") : "Fp:" + std::to_string(c.prime)) << "  trials = " << c.trials
       << "  seed = " << c.seed << "  dim_cap = " << c.dim_cap << "\n";
  const PairSet lambda = lambda_set(c.d);
  text << "components: " << lambda.size() << "  " << to_string(lambda) << "\n";
  for (const auto& check : report.checks) {
    text << "  " << (check.passed() ? "pass " : "FAIL ") << check.name;
    for (const auto& [key, value] : check.counts) text << "  " << key << "=" << value;
    if (!check.passed()) text << "  violations=" << check.violation_count;
    text << "\n";
    for (const auto& v : check.violations) {
      text << "      " << v.detail;
      if (v.matrix) text << "  " << std::visit([](const auto& m) { return brief(m); }, *v.matrix);
      text << "\n";
    }
  }
  if (report.elapsed_ms) text << "elapsed: " << *report.elapsed_ms << " ms\n";
  text << "result: " << (report.passed() ? "pass" : "violations found") << "\n";
  return text.str();
}

VerificationReport verify_matrix_file(const Options& o) {
  std::ifstream file(o.matrix);
  if (!file) throw UsageError("cannot read '" + o.matrix + "'");
  std::optional<BlockMatrix> parsed;
  try {
    parsed = matrix_from_json(Json::parse(file));
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed matrix JSON: ") + e.what());
  } catch (const JsonFormatError& e) {
    throw UsageError(std::string("malformed matrix JSON: ") + e.what());
  }
  const BlockMatrix& input = *parsed;
  if (!o.d.empty() && !(parse_d(o.d) == input.d))
    throw UsageError("-d " + o.d + " disagrees with the matrix file's d = " + input.d.to_string());
  try {
    return check_matrix(input.matrix, input.d);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int run_verify(const Options& o) {
  std::optional<VerificationReport> result;
  if (!o.matrix.empty()) {
    result = verify_matrix_file(o);
  } else {
    if (o.d.empty()) throw UsageError("verify needs -d or --matrix");
    ExperimentConfig cfg;
    cfg.d = parse_d(o.d);
    cfg.mode = parse_mode(o.mode);
    cfg.prime = o.field.empty() ? (cfg.mode == Mode::exhaustive ? 2 : PrimeField::kDefaultPrime) : parse_prime(o.field);
    cfg.trials = o.trials;
    cfg.seed = resolve_seed(o);
    cfg.dim_cap = o.dim_cap;
    cfg.record_timing = o.timing;
    cfg.validate();
    if (o.checks == "theorem")
      result = cfg.mode == Mode::exhaustive ? check_theorem_exhaustive(cfg) : check_theorem_sampled(cfg);
    else if (o.checks == "lemmas")
      result = check_lemmas(cfg);
    else if (o.checks == "witnesses")
      result = check_witnesses(cfg);
    else if (o.checks == "components")
      result = check_component_count(cfg);
    else
      result = run_checks(cfg);
  }
  const VerificationReport& report = *result;
  emit(o, report_to_json(report), summarize(report));
  return report.passed() ? kExitPass : kExitViolation;
}

int run_witness(const Options& o) {
  const DimensionVector d = parse_d(o.d);
  if (o.pair.empty()) throw UsageError("witness needs --pair i,j");
  const Pair p = parse_pair(o.pair, d);
  const RankThresholds thr(d);
  if (!thr.components().contains(p))
    throw UsageError(pair_text(p) + " is not in Lambda(d) = " + to_string(thr.components()));
  WitnessOptions options;
  options.seed = resolve_seed(o);
  options.budget = o.budget;
  if (!o.field.empty()) options.prime = parse_prime(o.field);
  if (options.budget < 1) throw UsageError("budget must be positive");

  std::optional<WitnessResult> found;
  try {
    found = witness(d, p, options);
  } catch (const WitnessNotFound& e) {
    std::cerr << "rorc: " << e.what() << "\n";
    return kExitViolation;
  }
  const WitnessResult& w = *found;
  const auto [profile, containing] = std::visit(
      [&](const auto& m) {
        DefectTable<std::decay_t<decltype(m)>> table(m, thr);
        return std::pair{table.profile(), table.containing_components()};
      },
      w.matrix);

  Json defects = Json::array();
  for (const auto& x : profile) defects.push_back({x.i, x.j, x.k});
  const Json json{{"d", d.parts()},
                  {"pair", {p.first, p.second}},
                  {"method", w.method},
                  {"trials", w.trials},
                  {"seed", options.seed},
                  {"matrix", matrix_to_json(w.matrix, d)},
                  {"defect_profile", std::move(defects)},
                  {"components", pairs_to_json(containing)}};

  std::ostringstream text;
  text << "witness for Z" << pair_text(p) << " of d = " << d.to_string() << "  (" << w.method << ", " << w.trials
       << " trials)\n";
  text << "A = " << std::visit([](const auto& m) { return brief(m); }, w.matrix) << "\n";
  text << indent(std::visit([](const auto& m) { return to_string(m); }, w.matrix), "    ");
  text << "defect profile (i,j,k):";
  for (const auto& x : profile) text << " (" << x.i << "," << x.j << "," << x.k << ")";
  text << "\ncomponents containing A: " << to_string(containing) << "\n";
  emit(o, json, text.str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Components of the complement of the Richardson orbit in a parabolic nilradical"};
  app.require_subcommand(1);
  Options o;

  const auto add_d = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-d,--dims", o.d, "dimension vector, e.g. 3,1,2,4");
    if (required) opt->required();
  };
  const auto add_output = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "print JSON instead of text");
    sub->add_option("--out", o.out, "also write the JSON output to this file");
  };

  auto* analyze = app.add_subcommand("analyze", "lambda(d), Gamma(d), Lambda(d) and per-component data");
  add_d(analyze, true);
  add_output(analyze);

  auto* diagram = app.add_subcommand("diagram", "ASCII rendering of L_R(d) or one of its windows");
  add_d(diagram, true);
  diagram->add_option("--pair", o.pair, "window i,j");
  add_output(diagram);

  auto* tableau = app.add_subcommand("tableau", "T(d), or T(i,j) with --pair");
  add_d(tableau, true);
  tableau->add_option("--pair", o.pair, "pair i,j");
  add_output(tableau);

  auto* verify = app.add_subcommand("verify", "exact checks of the decomposition");
  add_d(verify, false);
  verify->add_option("--mode", o.mode, "exhaustive or sample")->capture_default_str();
  verify->add_option("--field", o.field, "prime p or Fp:p (default 2 when exhaustive, 32003 when sampling)");
  verify->add_option("--trials", o.trials, "samples per population")->capture_default_str();
  verify->add_option("--seed", o.seed, "seed (falls back to RORC_SEED, then 0)");
  verify->add_option("--dim-cap", o.dim_cap, "enumeration budget exponent")->capture_default_str();
  verify->add_option("--checks", o.checks, "theorem, lemmas, witnesses, components or all")
      ->check(CLI::IsMember({"theorem", "lemmas", "witnesses", "components", "all"}))
      ->capture_default_str();
  verify->add_option("--matrix", o.matrix, "check a single matrix read from a JSON file");
  verify->add_flag("--timing", o.timing, "record elapsed time in the report");
  add_output(verify);

  auto* witness = app.add_subcommand("witness", "a matrix in Z_ij and in no other component");
  add_d(witness, true);
  witness->add_option("--pair", o.pair, "pair i,j in Lambda(d)")->required();
  witness->add_option("--seed", o.seed, "seed (falls back to RORC_SEED, then 0)");
  witness->add_option("--field", o.field, "prime p or Fp:p for the search");
  witness->add_option("--budget", o.budget, "search budget")->capture_default_str();
  add_output(witness);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*analyze) return run_analyze(o);
    if (*diagram) return run_diagram(o);
    if (*tableau) return run_tableau(o);
    if (*verify) return run_verify(o);
    return run_witness(o);
  } catch (const UsageError& e) {
    std::cerr << "rorc: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ConfigError& e) {
    std::cerr << "rorc: invalid configuration: " << e.what() << "\n";
    return kExitInvalid;
  }
}
