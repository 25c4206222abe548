#pragma once

// Coboundaries d(phi)(u,v) = phi(uv) - u phi(v) - phi(u) v, the space B^2 of
// 2-coboundaries inside Z^2 (identified with n x n matrices, flattened row
// major) and the derivation space.
//
// An endomorphism phi is given by the matrix xi with phi(e_i) = sum_k xi_ki e_k;
// as a vector of unknowns xi is flattened row major as well.

#include <cstddef>
#include <optional>
#include <vector>

#include "evokit/evolution.hpp"

namespace evokit {

using EndoMatrix = ScalarMatrix;
using CocycleMatrix = ScalarMatrix;
using Subspace = SubspaceBasis<CycScalar>;

/// Component [i][j][k] is the coefficient of e_k in theta(e_i, e_j).
class BilinearTensor {
 public:
  explicit BilinearTensor(std::size_t n) : n_(n), data_(n * n * n, CycScalar(0)) {}

  std::size_t dim() const { return n_; }
  CycScalar& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const CycScalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }

  bool is_zero() const { return is_zero_vector(data_); }
  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (at(i, j, k) != at(j, i, k)) return false;
    return true;
  }
  bool off_diagonal_vanishes() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (i != j && !at(i, j, k).is_zero()) return false;
    return true;
  }

  /// Row i holds theta(e_i, e_i).
  CocycleMatrix diagonal_part() const {
    CocycleMatrix m(n_, n_, CycScalar(0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) m(i, k) = at(i, i, k);
    return m;
  }

 private:
  std::size_t n_;
  std::vector<CycScalar> data_;
};

inline Vec apply_endo(const EndoMatrix& phi, const Vec& v) { return phi * v; }

inline BilinearTensor coboundary(const EvolutionAlgebra& alg, const EndoMatrix& phi) {
  const std::size_t n = alg.dim();
  if (phi.rows() != n || phi.cols() != n) throw DimensionMismatch("endomorphism size differs from algebra");
  BilinearTensor out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = basis_vector(n, i);
    Vec phi_ei = apply_endo(phi, ei);
    for (std::size_t j = 0; j < n; ++j) {
      Vec ej = basis_vector(n, j);
      Vec phi_ej = apply_endo(phi, ej);
      Vec a = apply_endo(phi, product(alg, ei, ej));
      Vec b = product(alg, ei, phi_ej);
      Vec c = product(alg, phi_ei, ej);
      for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = a[k] - b[k] - c[k];
    }
  }
  return out;
}

inline bool is_derivation(const EvolutionAlgebra& alg, const EndoMatrix& phi) {
  return coboundary(alg, phi).is_zero();
}

/// The coboundary map as two matrices acting on the flattened xi:
/// `off` collects the components of d(phi)(e_i, e_j), i < j, and `diag` maps
/// xi to the flattened diagonal part (row i = d(phi)(e_i, e_i)).
struct CoboundarySystem {
  ScalarMatrix off;
  ScalarMatrix diag;
};

inline CoboundarySystem coboundary_system(const EvolutionAlgebra& alg) {
  const std::size_t n = alg.dim();
  const std::size_t nn = n * n;
  auto var = [n](std::size_t row, std::size_t col) { return row * n + col; };
  const std::size_t pairs = n * (n - 1) / 2;
  CoboundarySystem s{ScalarMatrix(pairs * n, nn, CycScalar(0)), ScalarMatrix(nn, nn, CycScalar(0))};
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // -xi_ij w_i - xi_ji w_j
      for (std::size_t k = 0; k < n; ++k, ++r) {
        s.off(r, var(i, j)) -= alg.omega(i, k);
        s.off(r, var(j, i)) -= alg.omega(j, k);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      // sum_k w_ik xi_pk - 2 xi_ii w_ip
      for (std::size_t k = 0; k < n; ++k) s.diag(i * n + p, var(p, k)) += alg.omega(i, k);
      s.diag(i * n + p, var(i, i)) -= CycScalar(2) * alg.omega(i, p);
    }
  }
  return s;
}

inline ScalarMatrix stack(const ScalarMatrix& top, const ScalarMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw DimensionMismatch("stacked blocks differ in width");
  ScalarMatrix out(top.rows() + bottom.rows(), top.cols(), CycScalar(0));
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

/// Endomorphisms whose coboundary has no off-diagonal part.
inline Subspace natural_endomorphisms(const EvolutionAlgebra& alg) {
  return kernel_basis(coboundary_system(alg).off);
}

inline Subspace b2_basis(const EvolutionAlgebra& alg) {
  const std::size_t n = alg.dim();
  CoboundarySystem s = coboundary_system(alg);
  Subspace k = natural_endomorphisms(alg);
  std::vector<Vec> images;
  for (const auto& v : k.vectors()) images.push_back(s.diag * v);
  return Subspace::span(n * n, images);
}

inline CocycleMatrix unflatten(std::size_t n, const Vec& v) {
  return CocycleMatrix::from_flat(n, n, v);
}

struct CohomologyReport {
  Subspace b2;
  std::size_t b2_dim = 0;
  std::size_t h2_dim = 0;
  std::vector<CocycleMatrix> representatives;
  std::vector<std::pair<std::size_t, std::size_t>> positions;  // zero based (row, col)
};

inline CohomologyReport h2(const EvolutionAlgebra& alg) {
  const std::size_t n = alg.dim();
  CohomologyReport rep;
  rep.b2 = b2_basis(alg);
  rep.b2_dim = rep.b2.dim();
  for (std::size_t idx : rep.b2.non_pivots()) {
    rep.representatives.push_back(unflatten(n, basis_vector(n * n, idx)));
    rep.positions.emplace_back(idx / n, idx % n);
  }
  rep.h2_dim = rep.representatives.size();
  return rep;
}

inline Subspace derivation_space(const EvolutionAlgebra& alg) {
  CoboundarySystem s = coboundary_system(alg);
  return kernel_basis(stack(s.off, s.diag));
}

/// Some xi with d(xi) = the cocycle `target` (flattened), or nothing when
/// target is not a coboundary.
inline std::optional<EndoMatrix> coboundary_preimage(const EvolutionAlgebra& alg, const Vec& target) {
  const std::size_t n = alg.dim();
  if (target.size() != n * n) throw DimensionMismatch("cocycle has wrong length");
  CoboundarySystem s = coboundary_system(alg);
  Vec rhs(s.off.rows(), CycScalar(0));
  rhs.insert(rhs.end(), target.begin(), target.end());
  auto x = solve(stack(s.off, s.diag), rhs);
  if (!x) return std::nullopt;
  return unflatten(n, *x);
}

}  // namespace evokit
