#pragma once

#include <cstdint>
#include <random>

#include "krein/types.hpp"

namespace krein {

/// Seeded random source with platform-stable output: all draws reduce to
/// mt19937_64 words, so a fixed seed reproduces identical streams anywhere
/// (std::normal_distribution is implementation-defined and is avoided).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);
  double gaussian();                      // standard normal, Box-Muller
  Complex complex_gaussian();             // re, im independent N(0, 1)

  Vector unit_vector(Index n);            // Haar on the complex sphere
  Matrix gaussian_matrix(Index rows, Index cols);
  RealMatrix real_gaussian_matrix(Index rows, Index cols);
  Matrix haar_unitary(Index n);           // QR with phase fix
  RealMatrix haar_orthogonal(Index n);

private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

} // namespace krein
