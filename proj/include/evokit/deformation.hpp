#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evokit/cohomology.hpp"

namespace evokit {

/// mu + nu1 t, considered modulo t^2.
struct FirstOrderDeformation {
  EvolutionAlgebra base;
  CocycleMatrix nu1;

  FirstOrderDeformation(EvolutionAlgebra b, CocycleMatrix n) : base(std::move(b)), nu1(std::move(n)) {
    if (nu1.rows() != base.dim() || nu1.cols() != base.dim())
      throw DimensionMismatch("infinitesimal has wrong size for its base");
  }
};

/// mu + sum_k coeffs[k] t^(k+1). Only the first coefficient carries any
/// computable meaning here.
struct Deformation {
  EvolutionAlgebra base;
  std::vector<CocycleMatrix> coeffs;

  FirstOrderDeformation truncated() const {
    if (coeffs.empty()) return {base, CocycleMatrix(base.dim(), base.dim(), CycScalar(0))};
    return {base, coeffs.front()};
  }
};

inline bool is_trivial_infinitesimal(const FirstOrderDeformation& d) {
  return in_span(b2_basis(d.base), d.nu1.flat());
}

namespace detail {

inline void require_same_base(const FirstOrderDeformation& a, const FirstOrderDeformation& b) {
  if (!(a.base == b.base)) throw DimensionMismatch("deformations have different base algebras");
}

}  // namespace detail

inline bool infinitesimals_equivalent(const FirstOrderDeformation& d1, const FirstOrderDeformation& d2) {
  detail::require_same_base(d1, d2);
  return in_span(b2_basis(d1.base), (d2.nu1 - d1.nu1).flat());
}

/// The matrix xi of phi_1 relating two infinitesimals over the same base:
///   xi_ji w_jk + xi_ij w_ik = 0                  (i != j, all k)
///   rho_ik + sum_p w_ip xi_kp = sigma_ik + 2 xi_ii w_ik
class EquivalenceWitness {
 public:
  static std::optional<EquivalenceWitness> make(const FirstOrderDeformation& d1,
                                                const FirstOrderDeformation& d2,
                                                EndoMatrix xi) {
    if (!satisfies(d1, d2, xi)) return std::nullopt;
    return EquivalenceWitness(std::move(xi));
  }

  static bool satisfies(const FirstOrderDeformation& d1, const FirstOrderDeformation& d2,
                        const EndoMatrix& xi) {
    const EvolutionAlgebra& mu = d1.base;
    const std::size_t n = mu.dim();
    if (xi.rows() != n || xi.cols() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (!(xi(j, i) * mu.omega(j, k) + xi(i, j) * mu.omega(i, k)).is_zero()) return false;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        CycScalar lhs = d1.nu1(i, k);
        for (std::size_t p = 0; p < n; ++p) lhs += mu.omega(i, p) * xi(k, p);
        CycScalar rhs = d2.nu1(i, k) + CycScalar(2) * xi(i, i) * mu.omega(i, k);
        if (lhs != rhs) return false;
      }
    return true;
  }

  const EndoMatrix& xi() const { return xi_; }

 private:
  explicit EquivalenceWitness(EndoMatrix xi) : xi_(std::move(xi)) {}
  EndoMatrix xi_;
};

inline std::optional<EquivalenceWitness> equivalence_witness(const FirstOrderDeformation& d1,
                                                             const FirstOrderDeformation& d2) {
  detail::require_same_base(d1, d2);
  auto xi = coboundary_preimage(d1.base, (d2.nu1 - d1.nu1).flat());
  if (!xi) return std::nullopt;
  auto w = EquivalenceWitness::make(d1, d2, *xi);
  if (!w) throw InternalContradiction("solved xi fails the equivalence conditions");
  return w;
}

enum class NonrigidityBranch { regular_zero_row, regular_violating_entry, nonregular_sign_vector };

inline const char* branch_name(NonrigidityBranch b) {
  switch (b) {
    case NonrigidityBranch::regular_zero_row: return "regular-zero-row";
    case NonrigidityBranch::regular_violating_entry: return "regular-violating-entry";
    case NonrigidityBranch::nonregular_sign_vector: return "nonregular-sign-vector";
  }
  return "?";
}

struct NonrigidityCertificate {
  FirstOrderDeformation deformation;
  NonrigidityBranch branch;
  std::optional<std::vector<int>> sign_vector;
};

/// A first-order deformation outside B^2. Regular algebras: a unit on a zero
/// diagonal entry of the structure matrix if there is one, otherwise the first
/// off-diagonal unit that is not a coboundary. Other algebras: diag(b_1..b_n)
/// with b_i = +-1, signs enumerated lexicographically from all +1.
inline NonrigidityCertificate nontrivial_infinitesimal(const EvolutionAlgebra& alg) {
  const std::size_t n = alg.dim();
  const Subspace b2 = b2_basis(alg);
  auto unit = [n](std::size_t i, std::size_t k) {
    CocycleMatrix m(n, n, CycScalar(0));
    m(i, k) = CycScalar(1);
    return m;
  };
  auto finish = [&](CocycleMatrix nu1, NonrigidityBranch branch,
                    std::optional<std::vector<int>> signs) -> std::optional<NonrigidityCertificate> {
    if (in_span(b2, nu1.flat())) return std::nullopt;
    NonrigidityCertificate cert{FirstOrderDeformation(alg, std::move(nu1)), branch, std::move(signs)};
    if (is_trivial_infinitesimal(cert.deformation))
      throw InternalContradiction("certificate became trivial on re-check");
    return cert;
  };

  if (is_regular(alg)) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!alg.omega(i, i).is_zero()) continue;
      if (auto c = finish(unit(i, i), NonrigidityBranch::regular_zero_row, std::nullopt)) return *c;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == k) continue;
        if (auto c = finish(unit(i, k), NonrigidityBranch::regular_violating_entry, std::nullopt))
          return *c;
      }
    throw InternalContradiction("no nontrivial infinitesimal found for a regular algebra");
  }

  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> signs(n);
    CocycleMatrix nu1(n, n, CycScalar(0));
    for (std::size_t i = 0; i < n; ++i) {
      signs[i] = (mask >> (n - 1 - i)) & 1 ? -1 : 1;
      nu1(i, i) = CycScalar(signs[i]);
    }
    if (auto c = finish(nu1, NonrigidityBranch::nonregular_sign_vector, signs)) return *c;
  }
  throw InternalContradiction("no sign vector gives a nontrivial infinitesimal");
}

inline std::vector<CocycleMatrix> infdef_representatives(const EvolutionAlgebra& alg) {
  return h2(alg).representatives;
}

}  // namespace evokit
