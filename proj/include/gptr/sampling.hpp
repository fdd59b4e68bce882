#pragma once

#include <cstdint>
#include <random>

#include "gptr/matrix.hpp"
#include "gptr/meter.hpp"
#include "gptr/state_space.hpp"

namespace gptr {

/// Seeded generator producing exact rationals. Only raw mt19937_64 output is used
/// (no std distributions), so a seed gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform index in [0, n), n > 0.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  /// k/den with k uniform in [0, den].
  Rational fraction(unsigned long den);
  /// k/den with k uniform in [-den, den].
  Rational signed_fraction(unsigned long den);

 private:
  std::mt19937_64 engine_;
};

/// Positive weights normalized to sum 1.
Vector random_probability_vector(Rng& rng, std::size_t n);
/// Row-stochastic rows×cols matrix; roughly a third of the entries are zero.
Matrix random_stochastic_matrix(Rng& rng, std::size_t rows, std::size_t cols);
/// Valid effect: a random functional rescaled affinely so its vertex range is a random
/// subinterval of [0, 1]. Polytope backend only.
Effect random_effect(Rng& rng, const StateSpace& s);
/// Random n-outcome meter on a polytope: n−1 random cone elements scaled so their sum
/// stays below u, completed by the remainder as the last outcome.
Meter random_meter(Rng& rng, const StateSpace& s, std::size_t n);

}  // namespace gptr
