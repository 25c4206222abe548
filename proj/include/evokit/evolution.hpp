#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "evokit/linalg.hpp"
#include "evokit/scalars.hpp"

namespace evokit {

using ScalarMatrix = Matrix<CycScalar>;
using Vec = std::vector<CycScalar>;

/// Row i of the structure matrix holds the coordinates of e_i^2.
class EvolutionAlgebra {
 public:
  EvolutionAlgebra() = default;
  explicit EvolutionAlgebra(ScalarMatrix structure, std::string label = {})
      : structure_(std::move(structure)), label_(std::move(label)) {
    if (!structure_.is_square() || structure_.rows() == 0)
      throw DimensionMismatch("structure matrix must be square and nonempty");
  }

  std::size_t dim() const { return structure_.rows(); }
  const ScalarMatrix& structure() const { return structure_; }
  const CycScalar& omega(std::size_t i, std::size_t j) const { return structure_(i, j); }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Vec square_of_basis(std::size_t i) const { return structure_.row(i); }
  bool row_is_zero(std::size_t i) const { return is_zero_vector(structure_.row(i)); }

  friend bool operator==(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
    return a.structure_ == b.structure_;
  }

 private:
  ScalarMatrix structure_;
  std::string label_;
};

inline EvolutionAlgebra abelian(std::size_t n) {
  return EvolutionAlgebra(ScalarMatrix(n, n, CycScalar(0)), "mu_" + std::to_string(n) + "_1");
}

/// Build an algebra from e_i^2 = sum_j rows[i][j] e_j.
inline EvolutionAlgebra algebra_from_rows(const std::vector<std::vector<CycScalar>>& rows,
                                          std::string label = {}) {
  const std::size_t n = rows.size();
  ScalarMatrix m(n, n, CycScalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DimensionMismatch("structure rows must have length dim");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return EvolutionAlgebra(std::move(m), std::move(label));
}

inline Vec product(const EvolutionAlgebra& alg, const Vec& u, const Vec& v) {
  const std::size_t n = alg.dim();
  if (u.size() != n || v.size() != n) throw DimensionMismatch("product operands have wrong length");
  Vec out(n, CycScalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero() || v[i].is_zero()) continue;
    CycScalar c = u[i] * v[i];
    for (std::size_t k = 0; k < n; ++k) {
      if (!alg.omega(i, k).is_zero()) out[k] += c * alg.omega(i, k);
    }
  }
  return out;
}

inline Vec basis_vector(std::size_t n, std::size_t i) {
  Vec v(n, CycScalar(0));
  v.at(i) = CycScalar(1);
  return v;
}

inline SubspaceBasis<CycScalar> annihilator(const EvolutionAlgebra& alg) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (alg.row_is_zero(i)) idx.push_back(i);
  return SubspaceBasis<CycScalar>::coordinate(alg.dim(), idx);
}

struct AnnSeries {
  std::vector<SubspaceBasis<CycScalar>> subspaces;
  std::vector<std::vector<std::size_t>> index_sets;  // natural basis indices spanning each term
  std::size_t stabilized_at = 0;                     // number of distinct terms r
  bool reaches_full = false;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& s : subspaces) out.push_back(s.dim());
    return out;
  }
};

/// ann^1 = span{e_i : e_i^2 = 0}, ann^k = span{e_i : e_i^2 in ann^(k-1)}.
/// Iteration stops when the whole space is reached, or when a term repeats;
/// in the latter case the repeated term is kept as the last entry.
inline AnnSeries ann_series(const EvolutionAlgebra& alg) {
  const std::size_t n = alg.dim();
  AnnSeries out;
  std::vector<bool> prev(n, false);
  for (;;) {
    std::vector<bool> cur(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      bool inside = true;
      for (std::size_t j = 0; j < n && inside; ++j)
        if (!alg.omega(i, j).is_zero() && !prev[j]) inside = false;
      cur[i] = inside;
    }
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (cur[i]) idx.push_back(i);
    out.subspaces.push_back(SubspaceBasis<CycScalar>::coordinate(n, idx));
    out.index_sets.push_back(idx);
    if (out.subspaces.size() > 1 && cur == prev) {
      out.stabilized_at = out.subspaces.size() - 1;
      break;
    }
    if (idx.size() == n) {
      out.stabilized_at = out.subspaces.size();
      out.reaches_full = true;
      break;
    }
    prev = cur;
  }
  return out;
}

struct TypeSeq {
  std::vector<std::size_t> parts;

  std::size_t total() const {
    std::size_t s = 0;
    for (auto p : parts) s += p;
    return s;
  }

  friend bool operator==(const TypeSeq&, const TypeSeq&) = default;
};

/// Lexicographic comparison with the shorter sequence padded by zeros.
inline int compare_lex(const TypeSeq& a, const TypeSeq& b) {
  const std::size_t n = std::max(a.parts.size(), b.parts.size());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t x = k < a.parts.size() ? a.parts[k] : 0;
    std::size_t y = k < b.parts.size() ? b.parts[k] : 0;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

inline std::string format_type(const TypeSeq& t) {
  std::string out = "[";
  for (std::size_t k = 0; k < t.parts.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(t.parts[k]);
  }
  return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const TypeSeq& t) { return os << format_type(t); }

inline TypeSeq type_sequence(const EvolutionAlgebra& alg) {
  TypeSeq out;
  std::size_t prev = 0;
  for (std::size_t d : ann_series(alg).dims()) {
    if (d > prev) out.parts.push_back(d - prev);
    prev = d;
  }
  return out;
}

inline bool is_nilpotent(const EvolutionAlgebra& alg) { return ann_series(alg).reaches_full; }

inline std::size_t square_dim(const EvolutionAlgebra& alg) { return rank(alg.structure()); }

inline bool is_regular(const EvolutionAlgebra& alg) { return square_dim(alg) == alg.dim(); }

/// Dimensions of E^1 = E, E^k = sum_{i+j=k} E^i E^j for k = 1..max_power.
inline std::vector<std::size_t> power_dims(const EvolutionAlgebra& alg, std::size_t max_power) {
  const std::size_t n = alg.dim();
  std::vector<SubspaceBasis<CycScalar>> pw{SubspaceBasis<CycScalar>::full(n)};
  for (std::size_t k = 2; k <= max_power; ++k) {
    std::vector<Vec> gens;
    for (std::size_t i = 1; i < k; ++i) {
      const auto& a = pw[i - 1];
      const auto& b = pw[k - i - 1];
      for (const auto& u : a.vectors())
        for (const auto& v : b.vectors()) gens.push_back(product(alg, u, v));
    }
    pw.push_back(SubspaceBasis<CycScalar>::span(n, gens));
  }
  std::vector<std::size_t> dims;
  for (const auto& s : pw) dims.push_back(s.dim());
  return dims;
}

}  // namespace evokit
