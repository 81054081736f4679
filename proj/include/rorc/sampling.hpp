#pragma once

#include <random>
#include <string>

#include "rorc/composition.hpp"
#include "rorc/matrix.hpp"
#include "rorc/strata.hpp"

namespace rorc {

/// Uniform element of the nilradical of d over F_p.
ModularMatrix random_nilradical(const DimensionVector& d, const PrimeField& field, std::mt19937_64& rng);

/// Random invertible block upper triangular matrix (an element of the
/// parabolic of d): invertible diagonal blocks times a unipotent factor.
ModularMatrix random_parabolic(const DimensionVector& d, const PrimeField& field, std::mt19937_64& rng);

/// g a g^-1.
ModularMatrix conjugate(const ModularMatrix& a, const ModularMatrix& g);

/// Random composition with 2..max_t parts, each in 1..max_part.
DimensionVector random_dimension_vector(std::mt19937_64& rng, int max_t, int max_part, int min_t = 2);

struct ForcedDefect {
  ModularMatrix matrix;
  /// "diagram", "window-cut", "low-rank-block", "zero-line" or "sparse".
  std::string strategy;
  /// Non-defective candidates drawn and discarded before this one.
  int rejections;
};

/// A nilradical matrix outside the Richardson orbit. Each draw picks one
/// generation strategy at random, and candidates are checked and redrawn
/// until one is rank-defective.
ForcedDefect forced_defect(const RankThresholds& thresholds, const PrimeField& field, std::mt19937_64& rng);

}  // namespace rorc
