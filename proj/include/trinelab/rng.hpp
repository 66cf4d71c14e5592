// rng.hpp — seeded random inputs for sweeps and property tests. Gaussian
// variates use Box-Muller on top of mt19937_64 so the streams are identical
// across platforms and standard-library implementations.

#pragma once

#include <cstdint>
#include <random>

#include "trinelab/matrix.hpp"

namespace trinelab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform();  // [0, 1)
  double normal();   // standard normal
  Complex cnormal() { return {normal(), normal()}; }

  Ket random_ket(int dim);        // Haar-ish unit vector
  CMat random_hermitian(int dim); // (G + G^dag)/2
  CMat random_psd(int dim);       // G^dag G
  CMat random_unitary(int dim);   // Gram-Schmidt of a random complex matrix

 private:
  std::mt19937_64 gen_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace trinelab
