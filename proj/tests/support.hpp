#pragma once

#include <random>

#include "evokit/degeneration.hpp"

namespace evokit::fixtures {

inline CycScalar small_scalar(std::mt19937& rng) {
  static const CycScalar pool[] = {CycScalar(0), CycScalar(0), CycScalar(0), CycScalar(1),
                                   CycScalar(-1), CycScalar(2), CycScalar::imag_unit(), CycScalar::zeta(1)};
  std::uniform_int_distribution<int> pick(0, 7);
  return pool[pick(rng)];
}

inline EvolutionAlgebra random_algebra(std::mt19937& rng, std::size_t n) {
  ScalarMatrix m(n, n, CycScalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = small_scalar(rng);
  return EvolutionAlgebra(m, "random");
}

// Lower triangular with monomial diagonal, so always invertible.
inline BasisChangeFamily random_family(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> e(-2, 2);
  std::uniform_int_distribution<int> coin(0, 3);
  LaurentMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    CycScalar d = small_scalar(rng);
    if (d.is_zero()) d = CycScalar(1);
    g(i, i) = LaurentPoly::monomial(d, e(rng));
    for (std::size_t j = 0; j < i; ++j)
      if (coin(rng) == 0) g(i, j) = LaurentPoly::monomial(small_scalar(rng), e(rng));
  }
  return {g, "random"};
}

inline std::size_t random_dim(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> d(1, 4);
  return d(rng);
}

}  // namespace evokit::fixtures
