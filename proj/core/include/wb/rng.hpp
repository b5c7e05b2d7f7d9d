#pragma once

// Deterministic randomness for property suites and for the sampled
// certification steps inside a few operations. All draws reduce the raw
// engine output explicitly instead of going through std::*_distribution,
// whose results may differ between standard library implementations; a seed
// therefore reproduces every result everywhere.

#include "wb/exactlin.hpp"

#include <cstdint>

#include <random>

namespace wb {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  // Uniform integer in [lo, hi], both ends included.
  int uniform(int lo, int hi);
  // Rational with numerator in [-3, 3] and denominator in {1, 2}.
  Scalar small_scalar();
  // Matrix of small_scalar entries with roughly a third zeroed out.
  LinMap matrix(int rows, int cols);
  // Invertible matrix assembled from elementary row operations, so both it
  // and its inverse have small exact entries.
  LinMap invertible(int dim);

 private:
  std::mt19937_64 engine_;
};

// Seed taken from the WB_SEED environment variable; 0 when unset or bad.
std::uint64_t seed_from_env();

}  // namespace wb
