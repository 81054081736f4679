#include "rorc/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "rorc/bit_matrix.hpp"
#include "rorc/random.hpp"
#include "rorc/sampling.hpp"
#include "rorc/strata.hpp"
#include "rorc/tableau.hpp"

namespace rorc {

std::string to_string(Mode mode) { return mode == Mode::exhaustive ? "exhaustive" : "sample"; }

Mode parse_mode(const std::string& text) {
  if (text == "exhaustive") return Mode::exhaustive;
  if (text == "sample") return Mode::sample;
  throw ConfigError("unknown mode '" + text + "' (expected exhaustive or sample)");
}

void ExperimentConfig::validate() const {
  if (!is_prime(prime) || prime >= (1u << 31)) throw ConfigError("field order must be a prime below 2^31");
  if (trials < 1) throw ConfigError("trials must be positive");
  if (dim_cap < 0 || dim_cap > 32) throw ConfigError("dim-cap must lie in 0..32");
  if (mode == Mode::exhaustive) {
    const double bits = static_cast<double>(d.nilradical_dim()) * std::log2(static_cast<double>(prime));
    if (bits > dim_cap + 1e-9)
      throw ConfigError("exhaustive enumeration needs " + std::to_string(prime) + "^" +
                        std::to_string(d.nilradical_dim()) + " matrices, above the budget 2^" +
                        std::to_string(dim_cap));
    if (prime == 2 && d.n() > BitMatrix::kMaxSize) throw ConfigError("exhaustive F_2 mode supports n <= 64");
  }
}

void CheckResult::add_violation(std::string detail, std::optional<ExactMatrix> matrix) {
  ++violation_count;
  if (violations.size() < kKeptViolations) violations.push_back({std::move(detail), std::move(matrix), {}});
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

int gamma_reduction_index(const DimensionVector& d, int i, int j) {
  check_pair(d, i, j);
  const int lo = std::min(d[i], d[j]);
  const int hi = std::max(d[i], d[j]);
  int best = 0;
  for (int l = i + 1; l < j; ++l)
    if (d[l] >= lo && d[l] <= hi && (best == 0 || d[l] < d[best])) best = l;
  if (best == 0) throw std::invalid_argument("pair lies in Gamma(d)");
  return best;
}

std::pair<int, int> deepest_dips(const DimensionVector& d, int i, int j) {
  const auto less = d_less(d, i, j);
  if (less.empty()) throw std::invalid_argument("no intermediate block below min(d_i, d_j)");
  int depth = 0;
  for (int l : less) depth = std::max(depth, d[l]);
  int first = 0;
  int last = 0;
  for (int l : less)
    if (d[l] == depth) {
      if (first == 0) first = l;
      last = l;
    }
  return {first, last};
}

namespace {

std::string pair_label(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

ExactMatrix as_exact(const BitMatrix& a) { return a.to_modular(); }
ExactMatrix as_exact(const ModularMatrix& a) { return a; }
ExactMatrix as_exact(const RationalMatrix& a) { return a; }

/// Per-pair data every pointwise check needs, computed once per d.
struct PairPlan {
  int i;
  int j;
  int kappa;
  std::optional<std::pair<int, int>> dips;
  int reduction = 0;
  /// Gamma pairs (k,l) with i <= k < l <= j, for pairs outside Gamma.
  std::vector<Pair> inner_gamma;
  bool outside_lambda = false;
};

std::vector<PairPlan> plan_pairs(const RankThresholds& thr) {
  const DimensionVector& d = thr.d();
  std::vector<PairPlan> plans;
  for (int i = 1; i <= d.t(); ++i)
    for (int j = i + 1; j <= d.t(); ++j) {
      PairPlan p{i, j, thr.kappa(i, j), std::nullopt};
      if (!d_less(d, i, j).empty()) p.dips = deepest_dips(d, i, j);
      if (!thr.gamma().contains({i, j})) {
        p.reduction = gamma_reduction_index(d, i, j);
        for (const auto& [k, l] : thr.gamma())
          if (k >= i && l <= j) p.inner_gamma.emplace_back(k, l);
      } else {
        p.outside_lambda = !thr.components().contains({i, j});
      }
      plans.push_back(p);
    }
  return plans;
}

/// Accumulates the pointwise checks over a population of matrices.
class PointwiseChecks {
 public:
  PointwiseChecks(const RankThresholds& thr, bool theorem, bool lemmas)
      : thr_(thr), plans_(plan_pairs(thr)), theorem_(theorem), lemmas_(lemmas) {
    covered_.name = "theorem";
    below_.name = "lemma-below-kappa";
    above_.name = "lemma-above-kappa";
    outside_gamma_.name = "lemma-outside-gamma";
    inner_gamma_.name = "lemma-outside-gamma-union";
    outside_lambda_.name = "lemma-outside-lambda";
    for (const auto& [i, j] : thr.components()) covered_.counts["stratum" + pair_label(i, j)] = 0;
    for (auto* c : {&below_, &above_, &outside_gamma_, &inner_gamma_, &outside_lambda_}) c->counts["premises"] = 0;
  }

  template <class M>
  void add(const M& a, bool forced) {
    const DefectTable<M> table(a, thr_);
    if (theorem_) theorem_point(table, a, forced);
    if (lemmas_) lemma_point(table, a);
  }

  void append_to(VerificationReport& report) {
    if (theorem_) report.checks.push_back(covered_);
    if (lemmas_)
      for (auto* c : {&below_, &above_, &outside_gamma_, &inner_gamma_, &outside_lambda_}) report.checks.push_back(*c);
  }

  CheckResult& theorem() { return covered_; }

 private:
  template <class M>
  void theorem_point(const DefectTable<M>& table, const M& a, bool forced) {
    ++covered_.counts["matrices"];
    const bool richardson = table.richardson();
    const PairSet hit = table.containing_components();
    for (const auto& [i, j] : hit) ++covered_.counts["stratum" + pair_label(i, j)];
    if (richardson) {
      ++covered_.counts["richardson"];
      if (!hit.empty()) covered_.add_violation("Richardson matrix inside a component", as_exact(a));
      if (forced) covered_.add_violation("forced-defect sample is not defective", as_exact(a));
    } else {
      ++covered_.counts["defective"];
      if (hit.empty()) {
        ++covered_.counts["uncovered"];
        covered_.add_violation("defective matrix outside every component", as_exact(a));
      }
    }
  }

  template <class M>
  void lemma_point(const DefectTable<M>& table, const M& a) {
    for (const PairPlan& p : plans_) {
      const bool in_z = table.in_Z(p.i, p.j);
      for (int l = 1; l < p.kappa; ++l) {
        if (!table.in_Zk(p.i, p.j, l)) continue;
        ++below_.counts["premises"];
        if (!in_z)
          below_.add_violation("power " + std::to_string(l) + " defective on " + pair_label(p.i, p.j) +
                                   " but power kappa=" + std::to_string(p.kappa) + " is not",
                               as_exact(a));
      }
      for (int l = p.kappa + 1; l <= p.j - p.i; ++l) {
        if (!table.in_Zk(p.i, p.j, l)) continue;
        ++above_.counts["premises"];
        const auto [i0, j0] = *p.dips;
        if (!table.in_Z(p.i, j0) && !table.in_Z(i0, p.j))
          above_.add_violation("power " + std::to_string(l) + " defective on " + pair_label(p.i, p.j) +
                                   " but neither Z" + pair_label(p.i, j0) + " nor Z" + pair_label(i0, p.j),
                               as_exact(a));
      }
      if (!in_z) continue;
      if (p.reduction != 0) {
        ++outside_gamma_.counts["premises"];
        if (!table.in_Z(p.i, p.reduction) && !table.in_Z(p.reduction, p.j))
          outside_gamma_.add_violation("Z" + pair_label(p.i, p.j) + " point outside Z" + pair_label(p.i, p.reduction) +
                                           " and Z" + pair_label(p.reduction, p.j),
                                       as_exact(a));
        ++inner_gamma_.counts["premises"];
        const bool covered = std::any_of(p.inner_gamma.begin(), p.inner_gamma.end(),
                                         [&](const Pair& q) { return table.in_Z(q.first, q.second); });
        if (!covered)
          inner_gamma_.add_violation("Z" + pair_label(p.i, p.j) + " point outside every Gamma component inside the window",
                                     as_exact(a));
      } else if (p.outside_lambda) {
        ++outside_lambda_.counts["premises"];
        if (table.containing_components().empty())
          outside_lambda_.add_violation("Z" + pair_label(p.i, p.j) + " point outside every component", as_exact(a));
      }
    }
  }

  const RankThresholds& thr_;
  std::vector<PairPlan> plans_;
  bool theorem_;
  bool lemmas_;
  CheckResult covered_;
  CheckResult below_;
  CheckResult above_;
  CheckResult outside_gamma_;
  CheckResult inner_gamma_;
  CheckResult outside_lambda_;
};

std::vector<std::pair<int, int>> nilradical_positions(const DimensionVector& d) {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < d.n(); ++r)
    for (int c = d.offset(d.block_of(r)); c < d.n(); ++c) out.emplace_back(r, c);
  return out;
}

void enumerate(const ExperimentConfig& cfg, PointwiseChecks& checks) {
  const auto positions = nilradical_positions(cfg.d);
  if (cfg.prime == 2) {
    const std::uint64_t total = std::uint64_t{1} << positions.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      BitMatrix a(cfg.d.n());
      for (std::size_t b = 0; b < positions.size(); ++b)
        if ((mask >> b) & 1u) a.set(positions[b].first, positions[b].second, true);
      checks.add(a, false);
    }
    return;
  }
  const PrimeField field(cfg.prime);
  ModularMatrix a = ModularMatrix::zero(field, cfg.d.n());
  while (true) {
    checks.add(a, false);
    std::size_t b = 0;
    for (; b < positions.size(); ++b) {
      auto& v = a.at(positions[b].first, positions[b].second);
      v = field.add(v, 1);
      if (v != 0) break;
    }
    if (b == positions.size()) break;
  }
}

constexpr std::uint64_t kUniformStream = 1;
constexpr std::uint64_t kForcedStream = 2;

/// Uniform samples followed by forced defects, trial streams keyed by index.
void sample(const ExperimentConfig& cfg, const RankThresholds& thr, PointwiseChecks& checks, CheckResult* frequency) {
  const PrimeField field(cfg.prime);
  long richardson = 0;
  for (long k = 0; k < cfg.trials; ++k) {
    auto rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k), kUniformStream);
    const ModularMatrix a = random_nilradical(thr.d(), field, rng);
    if (DefectTable<ModularMatrix>(a, thr).richardson()) ++richardson;
    checks.add(a, false);
  }
  if (frequency) {
    frequency->counts["samples"] = cfg.trials;
    frequency->counts["richardson"] = richardson;
    // Pass threshold: at least 99 in 100 uniform samples are Richardson.
    if (richardson * 100 < cfg.trials * 99)
      frequency->add_violation("Richardson frequency " + std::to_string(richardson) + "/" + std::to_string(cfg.trials) +
                               " is below 99%");
  }
  if (thr.t() < 2) return;
  long rejections = 0;
  std::map<std::string, long> strategies;
  for (long k = 0; k < cfg.trials; ++k) {
    auto rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k), kForcedStream);
    const ForcedDefect fd = forced_defect(thr, field, rng);
    rejections += fd.rejections;
    ++strategies[fd.strategy];
    checks.add(fd.matrix, true);
  }
  CheckResult& theorem = checks.theorem();
  theorem.counts["forced_samples"] = cfg.trials;
  theorem.counts["forced_rejections"] = rejections;
  for (const auto& [name, count] : strategies) theorem.counts["forced_" + name] = count;
}

CheckResult emptiness_check(const RankThresholds& thr) {
  CheckResult result;
  result.name = "lemma-empty-strata";
  const DimensionVector& d = thr.d();
  const ModularMatrix zero = ModularMatrix::zero(PrimeField(2), d.n());
  const DefectTable<ModularMatrix> table(zero, thr);
  for (int i = 1; i <= d.t(); ++i)
    for (int j = i + 1; j <= d.t(); ++j)
      for (int k = 1; k <= j - i + 1; ++k) {
        ++result.counts["windows"];
        const bool positive = r_rank(d, i, j, k) > 0;
        if (positive != (k <= j - i))
          result.add_violation("threshold of " + pair_label(i, j) + " at power " + std::to_string(k) +
                               (positive ? " is positive" : " vanishes"));
        if (table.in_Zk(i, j, k) != positive)
          result.add_violation("zero matrix membership disagrees with threshold positivity at " + pair_label(i, j));
      }
  return result;
}

CheckResult kappa_tableau_check(const DimensionVector& d) {
  CheckResult result;
  result.name = "kappa-tableau";
  const YoungTableau td = t_of_d(d);
  for (int i = 1; i <= d.t(); ++i)
    for (int j = i + 1; j <= d.t(); ++j) {
      ++result.counts["pairs"];
      const int between = boxes_between(td, s_row(d, i, j), i, j);
      if (between != kappa(d, i, j) - 1)
        result.add_violation("row " + std::to_string(s_row(d, i, j)) + " has " + std::to_string(between) +
                             " boxes between " + std::to_string(i) + " and " + std::to_string(j));
    }
  return result;
}

template <class Fn>
VerificationReport timed(const ExperimentConfig& cfg, Fn&& body) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report{cfg, {}, std::nullopt};
  body(report);
  if (cfg.record_timing)
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void run_population(const ExperimentConfig& cfg, VerificationReport& report, bool theorem, bool lemmas) {
  const RankThresholds thr(cfg.d);
  PointwiseChecks checks(thr, theorem, lemmas);
  CheckResult frequency;
  frequency.name = "richardson-frequency";
  if (cfg.mode == Mode::exhaustive)
    enumerate(cfg, checks);
  else
    sample(cfg, thr, checks, theorem ? &frequency : nullptr);
  checks.append_to(report);
  if (theorem && cfg.mode == Mode::sample) report.checks.push_back(frequency);
  if (lemmas) {
    report.checks.push_back(emptiness_check(thr));
    report.checks.push_back(kappa_tableau_check(cfg.d));
  }
}

}  // namespace

VerificationReport check_theorem_exhaustive(const ExperimentConfig& cfg) {
  if (cfg.mode != Mode::exhaustive) throw ConfigError("exhaustive check needs exhaustive mode");
  return timed(cfg, [&](VerificationReport& report) { run_population(cfg, report, true, false); });
}

VerificationReport check_theorem_sampled(const ExperimentConfig& cfg) {
  if (cfg.mode != Mode::sample) throw ConfigError("sampled check needs sample mode");
  return timed(cfg, [&](VerificationReport& report) { run_population(cfg, report, true, false); });
}

VerificationReport check_lemmas(const ExperimentConfig& cfg) {
  return timed(cfg, [&](VerificationReport& report) { run_population(cfg, report, false, true); });
}

VerificationReport check_witnesses(const ExperimentConfig& cfg) {
  return timed(cfg, [&](VerificationReport& report) {
    CheckResult result;
    result.name = "witness-separation";
    const RankThresholds thr(cfg.d);
    if (thr.components().size() >= 2) {
      WitnessOptions options;
      options.seed = cfg.seed;
      options.prime = cfg.prime == 2 || cfg.prime == 3 ? PrimeField::kDefaultPrime : cfg.prime;
      for (const Pair& pair : thr.components()) {
        ++result.counts["components"];
        try {
          const WitnessResult w = witness(cfg.d, pair, options);
          ++result.counts["method_" + w.method];
          result.counts["trials"] += w.trials;
          const bool ok = std::visit([&](const auto& m) { return separates(m, thr, pair); }, w.matrix);
          if (!ok) result.add_violation("witness for " + pair_label(pair.first, pair.second) + " does not separate");
        } catch (const WitnessNotFound& e) {
          result.add_violation(e.what());
        }
      }
    }
    report.checks.push_back(std::move(result));
  });
}

VerificationReport run_checks(const ExperimentConfig& cfg) {
  return timed(cfg, [&](VerificationReport& report) {
    run_population(cfg, report, true, true);
    ExperimentConfig untimed = cfg;
    untimed.record_timing = false;
    for (auto& c : check_witnesses(untimed).checks) report.checks.push_back(std::move(c));
  });
}

VerificationReport check_matrix(const ExactMatrix& a, const DimensionVector& d) {
  ExperimentConfig cfg;
  cfg.d = d;
  cfg.trials = 1;
  cfg.prime = std::visit(
      [](const auto& m) -> std::uint32_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, ModularMatrix>)
          return m.field().modulus();
        else
          return 0;
      },
      a);
  std::visit([&](const auto& m) { detail::require_nilradical(m, d); }, a);
  VerificationReport report{cfg, {}, std::nullopt};
  const RankThresholds thr(d);
  PointwiseChecks checks(thr, true, true);
  std::visit([&](const auto& m) { checks.add(m, false); }, a);
  checks.append_to(report);
  return report;
}

VerificationReport check_component_count(const ExperimentConfig& cfg) {
  return timed(cfg, [&](VerificationReport& report) {
    CheckResult bound;
    bound.name = "component-bound";
    CheckResult monotone;
    monotone.name = "component-count-monotone";
    CheckResult distinct;
    distinct.name = "component-count-distinct";
    CheckResult gap;
    gap.name = "component-count-gap";
    CheckResult excluded;
    excluded.name = "component-count-gap-pairs";
    for (long k = 0; k < cfg.trials; ++k) {
      auto rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k), 3);
      const DimensionVector d = random_dimension_vector(rng, 10, 6, 1);
      const long count = static_cast<long>(lambda_set(d).size());
      ++bound.counts["compositions"];
      if (count > d.t() - 1) bound.add_violation(d.to_string() + " has " + std::to_string(count) + " components");

      const PairSet lambda = lambda_set(d);
      bool has_gap = false;
      for (int i = 1; i <= d.t(); ++i)
        for (int j = i + 2; j <= d.t(); ++j) {
          if (d[i] != d[j]) continue;
          // Closest values above and below d_i strictly inside the window.
          int above = 0;
          int below = 0;
          for (int l = i + 1; l < j; ++l) {
            if (d[l] > d[i] && (above == 0 || d[l] < above)) above = d[l];
            if (d[l] < d[i] && d[l] > below) below = d[l];
          }
          if (above == 0 && below == 0) continue;
          has_gap = true;
          for (int l = i + 1; l < j; ++l) {
            if (d[l] != above && d[l] != below) continue;
            ++excluded.counts["intermediates"];
            for (const Pair& p : {Pair{i, l}, Pair{l, j}})
              if (lambda.contains(p))
                excluded.add_violation(pair_label(p.first, p.second) + " lies in Lambda" + d.to_string() +
                                       " although d_" + std::to_string(i) + " = d_" + std::to_string(j));
          }
        }
      if (has_gap) {
        ++gap.counts["compositions"];
        if (count > d.t() - 2) gap.add_violation(d.to_string() + " has " + std::to_string(count) + " components");
      }

      for (bool ascending : {true, false}) {
        auto parts = d.parts();
        if (ascending)
          std::sort(parts.begin(), parts.end());
        else
          std::sort(parts.begin(), parts.end(), std::greater<>());
        const DimensionVector m(std::move(parts));
        ++monotone.counts["compositions"];
        if (static_cast<int>(lambda_set(m).size()) != m.t() - 1)
          monotone.add_violation(m.to_string() + " does not have t-1 components");
      }

      std::vector<int> pool(12);
      std::iota(pool.begin(), pool.end(), 1);
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 8)(rng)));
      const DimensionVector u(std::move(pool));
      ++distinct.counts["compositions"];
      if (static_cast<int>(lambda_set(u).size()) != u.t() - 1)
        distinct.add_violation(u.to_string() + " does not have t-1 components");
    }
    for (auto* c : {&bound, &monotone, &distinct, &gap, &excluded}) report.checks.push_back(std::move(*c));
  });
}

const std::map<std::vector<int>, int>& gl5_expected_components() {
  static const std::map<std::vector<int>, int> expected{
      {{1, 1, 1, 1, 1}, 4},
      {{1, 1, 1, 2}, 3},
      {{2, 1, 1, 1}, 3},
      {{1, 1, 2, 1}, 2},
      {{1, 2, 1, 1}, 2},
      {{2, 2, 1}, 2},
      {{1, 2, 2}, 2},
      {{2, 1, 2}, 1},
      {{1, 3, 1}, 1},
      {{3, 1, 1}, 2},
      {{1, 1, 3}, 2},
      {{4, 1}, 1},
      {{1, 4}, 1},
      {{2, 3}, 1},
      {{3, 2}, 1},
  };
  return expected;
}

VerificationReport gl5_fixture_suite() {
  ExperimentConfig cfg;
  cfg.d = DimensionVector({1, 1, 1, 1, 1});
  cfg.mode = Mode::exhaustive;
  cfg.prime = 2;
  VerificationReport report{cfg, {}, std::nullopt};
  for (const auto& d : compositions_of(5)) {
    if (d.t() < 2) continue;
    ExperimentConfig one = cfg;
    one.d = d;
    VerificationReport sub = check_theorem_exhaustive(one);
    CheckResult result = sub.checks.front();
    result.name = "gl5" + d.to_string();
    for (auto& v : result.violations) v.blocks = d.parts();
    const auto& expected = gl5_expected_components();
    const auto it = expected.find(d.parts());
    const int components = static_cast<int>(decompose(d).strata.size());
    result.counts["components"] = components;
    if (it == expected.end() || it->second != components)
      result.add_violation("component count " + std::to_string(components) + " differs from the expected value");
    // Two blocks of sizes 1 and 4: the complement is the zero matrix.
    if ((d.parts() == std::vector<int>{4, 1} || d.parts() == std::vector<int>{1, 4}) && result.counts["defective"] != 1)
      result.add_violation("complement is not exactly the zero matrix");
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace rorc
