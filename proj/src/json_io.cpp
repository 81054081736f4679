#include "rorc/json_io.hpp"

#include <limits>

namespace rorc {

namespace {

Json rational_to_json(const mpq_class& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return v.get_str();
}

mpq_class rational_from_json(const Json& v) {
  if (v.is_number_integer()) return mpq_class(mpz_class(std::to_string(v.get<long long>())));
  if (v.is_string()) {
    mpq_class q;
    if (q.set_str(v.get<std::string>(), 10) != 0) throw JsonFormatError("bad rational entry " + v.dump());
    q.canonicalize();
    return q;
  }
  throw JsonFormatError("matrix entries must be integers or \"p/q\" strings");
}

std::uint32_t residue_from_json(const Json& v, const PrimeField& field) {
  if (!v.is_number_integer()) throw JsonFormatError("entries over F_p must be integers");
  return field.from_int(v.get<long long>());
}

template <class Field, class Read>
Matrix<Field> read_entries(const Json& j, const Field& field, int n, Read read) {
  Matrix<Field> a = Matrix<Field>::zero(field, n);
  if (j.contains("entries")) {
    const Json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw JsonFormatError("entries must hold n rows");
    for (int r = 0; r < n; ++r) {
      const Json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != n) throw JsonFormatError("every row must hold n entries");
      for (int c = 0; c < n; ++c) a.at(r, c) = read(row[static_cast<std::size_t>(c)]);
    }
  } else if (j.contains("sparse")) {
    for (const Json& triple : j.at("sparse")) {
      if (!triple.is_array() || triple.size() != 3) throw JsonFormatError("sparse entries are [row, col, value]");
      const int r = triple[0].get<int>();
      const int c = triple[1].get<int>();
      if (r < 1 || c < 1 || r > n || c > n) throw JsonFormatError("sparse index out of range");
      a.at(r - 1, c - 1) = read(triple[2]);
    }
  } else {
    throw JsonFormatError("matrix needs \"entries\" or \"sparse\"");
  }
  return a;
}

}  // namespace

std::variant<Rationals, PrimeField> parse_field(const std::string& text) {
  if (text == "Q") return Rationals{};
  if (text.rfind("Fp:", 0) == 0) {
    try {
      const unsigned long p = std::stoul(text.substr(3));
      if (p > std::numeric_limits<std::uint32_t>::max()) throw JsonFormatError("prime too large");
      return PrimeField(static_cast<std::uint32_t>(p));
    } catch (const JsonFormatError&) {
      throw;
    } catch (const std::exception&) {
      throw JsonFormatError("bad field '" + text + "'");
    }
  }
  throw JsonFormatError("field must be \"Q\" or \"Fp:<p>\"");
}

Json matrix_to_json(const ExactMatrix& a, const DimensionVector& d) {
  return std::visit(
      [&](const auto& m) {
        Json entries = Json::array();
        for (int r = 0; r < m.rows(); ++r) {
          Json row = Json::array();
          for (int c = 0; c < m.cols(); ++c) {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, RationalMatrix>)
              row.push_back(rational_to_json(m.at(r, c)));
            else
              row.push_back(m.at(r, c));
          }
          entries.push_back(std::move(row));
        }
        return Json{{"n", m.rows()}, {"d", d.parts()}, {"field", m.field().name()}, {"entries", std::move(entries)}};
      },
      a);
}

BlockMatrix matrix_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw JsonFormatError("matrix JSON must be an object");
    DimensionVector d(j.at("d").get<std::vector<int>>());
    const int n = j.contains("n") ? j.at("n").get<int>() : d.n();
    if (n != d.n()) throw JsonFormatError("n differs from the sum of d");
    const auto field = parse_field(j.value("field", std::string("Q")));
    if (std::holds_alternative<Rationals>(field))
      return {d, read_entries(j, Rationals{}, n, rational_from_json)};
    const PrimeField& fp = std::get<PrimeField>(field);
    return {d, read_entries(j, fp, n, [&](const Json& v) { return residue_from_json(v, fp); })};
  } catch (const JsonFormatError&) {
    throw;
  } catch (const Json::exception& e) {
    throw JsonFormatError(e.what());
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
}

Json partition_to_json(const Partition& p) { return p.parts(); }

Json pairs_to_json(const PairSet& pairs) {
  Json out = Json::array();
  for (const auto& [i, j] : pairs) out.push_back({i, j});
  return out;
}

Json tableau_to_json(const YoungTableau& tableau) {
  return Json{{"shape", tableau.shape().parts()}, {"rows", tableau.rows()}};
}

YoungTableau tableau_from_json(const Json& j) {
  try {
    YoungTableau t(j.at("rows").get<std::vector<std::vector<int>>>());
    if (j.contains("shape") && j.at("shape").get<std::vector<int>>() != t.shape().parts())
      throw JsonFormatError("shape does not match the rows");
    return t;
  } catch (const JsonFormatError&) {
    throw;
  } catch (const Json::exception& e) {
    throw JsonFormatError(e.what());
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
}

Json stratum_to_json(const StratumSpec& spec) {
  return Json{{"pair", {spec.pair.first, spec.pair.second}},
              {"kappa", spec.kappa},
              {"rank_threshold", spec.rank_threshold},
              {"codim", spec.codim},
              {"mu", partition_to_json(spec.mu)},
              {"tableau", tableau_to_json(spec.tableau)}};
}

Json decomposition_to_json(const Decomposition& decomposition) {
  Json components = Json::array();
  for (const auto& s : decomposition.strata) components.push_back(stratum_to_json(s));
  return Json{{"d", decomposition.d.parts()},
              {"lambda", partition_to_json(decomposition.lambda)},
              {"components", std::move(components)}};
}

Json config_to_json(const ExperimentConfig& cfg) {
  return Json{{"d", cfg.d.parts()},
              {"mode", to_string(cfg.mode)},
              {"field", cfg.prime == 0 ? std::string("Q") : "Fp:" + std::to_string(cfg.prime)},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"dim_cap", cfg.dim_cap}};
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json violations = Json::array();
    for (const auto& v : c.violations) {
      Json item{{"detail", v.detail}};
      if (v.matrix) item["matrix"] = matrix_to_json(*v.matrix, v.blocks.empty() ? report.config.d : DimensionVector(v.blocks));
      violations.push_back(std::move(item));
    }
    checks.push_back(Json{{"name", c.name},
                          {"passed", c.passed()},
                          {"violation_count", c.violation_count},
                          {"counts", c.counts},
                          {"violations", std::move(violations)}});
  }
  Json out{{"schema_version", VerificationReport::kSchemaVersion},
           {"passed", report.passed()},
           {"config", config_to_json(report.config)},
           {"checks", std::move(checks)}};
  if (report.elapsed_ms) out["elapsed_ms"] = *report.elapsed_ms;
  return out;
}

}  // namespace rorc
