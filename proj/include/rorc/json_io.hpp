#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rorc/composition.hpp"
#include "rorc/matrix.hpp"
#include "rorc/strata.hpp"
#include "rorc/tableau.hpp"
#include "rorc/verifier.hpp"

namespace rorc {

using Json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix read from JSON together with its block structure.
struct BlockMatrix {
  DimensionVector d;
  ExactMatrix matrix;
};

/// {"n", "d", "field", "entries"}; rationals that are not integers are
/// written as "p/q" strings.
Json matrix_to_json(const ExactMatrix& a, const DimensionVector& d);

/// Accepts dense "entries" (list of rows) or "sparse" triples [row, col,
/// value] with 1-based indices. "field" defaults to "Q".
BlockMatrix matrix_from_json(const Json& j);

/// Parses "Q" or "Fp:<p>". Throws JsonFormatError otherwise.
std::variant<Rationals, PrimeField> parse_field(const std::string& text);

Json tableau_to_json(const YoungTableau& tableau);
YoungTableau tableau_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Json pairs_to_json(const PairSet& pairs);
Json stratum_to_json(const StratumSpec& spec);
Json decomposition_to_json(const Decomposition& decomposition);

Json config_to_json(const ExperimentConfig& cfg);
Json report_to_json(const VerificationReport& report);

}  // namespace rorc
