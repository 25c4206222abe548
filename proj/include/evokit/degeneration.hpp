#pragma once

// Families g_t of natural basis changes, the action
//   (g.mu)(x, y) = g mu(g^-1 x, g^-1 y),
// t -> 0 limits, necessary conditions for a degeneration, and a bounded
// search for monomial witnesses.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "evokit/cohomology.hpp"
#include "evokit/parallel.hpp"

namespace evokit {

using LaurentMatrix = Matrix<LaurentPoly>;
using RfMatrix = Matrix<RationalFn>;

struct BasisChangeFamily {
  LaurentMatrix g;
  std::string label;

  std::size_t dim() const { return g.rows(); }

  static BasisChangeFamily parse(const std::vector<std::vector<std::string>>& rows, std::string label = {}) {
    const std::size_t n = rows.size();
    LaurentMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw DimensionMismatch("family rows must have length dim");
      for (std::size_t j = 0; j < n; ++j) g(i, j) = parse_laurent(rows[i][j]);
    }
    return {std::move(g), std::move(label)};
  }

  /// t^e times the identity.
  static BasisChangeFamily scalar(std::size_t n, int exponent) {
    LaurentMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = LaurentPoly::t(exponent);
    return {std::move(g), {}};
  }

  RfMatrix as_rational() const {
    return map_entries<RationalFn>(g, [](const LaurentPoly& p) { return RationalFn(p); });
  }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) out[i].push_back(format_laurent(g(i, j)));
    return out;
  }
};

namespace detail {

inline RfMatrix structure_rf(const EvolutionAlgebra& alg) {
  return map_entries<RationalFn>(alg.structure(), [](const CycScalar& c) { return RationalFn(c); });
}

struct ActionData {
  RfMatrix g;
  RfMatrix q;
  RfMatrix omega;
};

inline ActionData prepare(const EvolutionAlgebra& alg, const BasisChangeFamily& fam) {
  if (fam.dim() != alg.dim()) throw DimensionMismatch("family size differs from algebra");
  ActionData d{fam.as_rational(), {}, structure_rf(alg)};
  d.q = inverse(d.g);
  return d;
}

/// g mu(g^-1 e_i, g^-1 e_j) as a coordinate vector.
inline std::vector<RationalFn> acted_product(const ActionData& d, std::size_t i, std::size_t j) {
  const std::size_t n = d.g.rows();
  std::vector<RationalFn> mu(n, RationalFn(0));
  for (std::size_t k = 0; k < n; ++k) {
    RationalFn c = d.q(k, i) * d.q(k, j);
    if (c.is_zero()) continue;
    for (std::size_t m = 0; m < n; ++m)
      if (!d.omega(k, m).is_zero()) mu[m] += c * d.omega(k, m);
  }
  return d.g * mu;
}

}  // namespace detail

/// Structure matrix of g_t.mu in the original basis, row i = (g.mu)(e_i, e_i).
inline RfMatrix act(const EvolutionAlgebra& alg, const BasisChangeFamily& fam) {
  auto d = detail::prepare(alg, fam);
  const std::size_t n = alg.dim();
  RfMatrix out(n, n, RationalFn(0));
  for (std::size_t i = 0; i < n; ++i) {
    auto row = detail::acted_product(d, i, i);
    for (std::size_t m = 0; m < n; ++m) out(i, m) = row[m];
  }
  return out;
}

/// M'^T = g M^T (g^-1)^(2).
inline RfMatrix act_via_formula(const EvolutionAlgebra& alg, const BasisChangeFamily& fam) {
  auto d = detail::prepare(alg, fam);
  return (d.g * d.omega.transpose() * hadamard_square(d.q)).transpose();
}

inline bool is_natural_family(const EvolutionAlgebra& alg, const BasisChangeFamily& fam) {
  auto d = detail::prepare(alg, fam);
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j)
      if (!is_zero_vector(detail::acted_product(d, i, j))) return false;
  return true;
}

struct OffendingEntry {
  std::size_t row = 0;  // zero based
  std::size_t col = 0;
  int valuation = 0;
};

struct LimitOutcome {
  std::optional<EvolutionAlgebra> algebra;
  std::vector<OffendingEntry> offending;
};

inline LimitOutcome try_limit(const RfMatrix& acted) {
  LimitOutcome out;
  ScalarMatrix m(acted.rows(), acted.cols(), CycScalar(0));
  for (std::size_t i = 0; i < acted.rows(); ++i)
    for (std::size_t j = 0; j < acted.cols(); ++j) {
      const RationalFn& f = acted(i, j);
      if (f.valuation() < 0) {
        out.offending.push_back({i, j, f.valuation()});
      } else {
        m(i, j) = f.limit0();
      }
    }
  if (out.offending.empty()) out.algebra = EvolutionAlgebra(std::move(m));
  return out;
}

inline EvolutionAlgebra limit(const RfMatrix& acted) {
  auto out = try_limit(acted);
  if (out.algebra) return *out.algebra;
  std::string what = "no limit at t = 0:";
  for (const auto& e : out.offending)
    what += " entry (" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1) +
            ") has valuation " + std::to_string(e.valuation) + ";";
  what.pop_back();
  throw NoLimitError(what);
}

enum class MatchMode { exact, permutation };

/// New basis f'_i = d_i f_{perm(i)}; perm is zero based.
struct Relabeling {
  std::vector<std::size_t> permutation;
  std::vector<CycScalar> scalings;
};

inline ScalarMatrix relabel(const ScalarMatrix& m, const Relabeling& r) {
  const std::size_t n = m.rows();
  ScalarMatrix out(n, n, CycScalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = r.scalings[i] * r.scalings[i] * m(r.permutation[i], r.permutation[j]) / r.scalings[j];
  return out;
}

/// A relabeling taking `from` to `to` using permutations and unit scalings
/// in {1, -1, i, -i}, tried in a fixed order.
inline std::optional<Relabeling> find_relabeling(const ScalarMatrix& from, const ScalarMatrix& to) {
  const std::size_t n = from.rows();
  if (to.rows() != n) return std::nullopt;
  const std::array<CycScalar, 4> units{CycScalar(1), CycScalar(-1), CycScalar::zeta(2), CycScalar::zeta(6)};
  Relabeling r;
  r.permutation.resize(n);
  std::iota(r.permutation.begin(), r.permutation.end(), std::size_t{0});
  do {
    std::size_t combos = 1;
    for (std::size_t k = 0; k < n; ++k) combos *= units.size();
    for (std::size_t c = 0; c < combos; ++c) {
      r.scalings.clear();
      std::size_t rest = c;
      for (std::size_t k = 0; k < n; ++k) {
        r.scalings.push_back(units[rest % units.size()]);
        rest /= units.size();
      }
      if (relabel(from, r) == to) return r;
    }
  } while (std::next_permutation(r.permutation.begin(), r.permutation.end()));
  return std::nullopt;
}

enum class DegenerationStatus { verified, not_natural, no_limit, limit_mismatch };

inline const char* status_name(DegenerationStatus s) {
  switch (s) {
    case DegenerationStatus::verified: return "verified";
    case DegenerationStatus::not_natural: return "not-natural";
    case DegenerationStatus::no_limit: return "no-limit";
    case DegenerationStatus::limit_mismatch: return "limit-mismatch";
  }
  return "?";
}

struct DegenerationReport {
  DegenerationStatus status = DegenerationStatus::limit_mismatch;
  RfMatrix acted;
  std::optional<EvolutionAlgebra> limit_algebra;
  std::vector<OffendingEntry> offending;
  std::optional<Relabeling> relabeling;
  std::vector<Rational> pole_warnings;  // t in (0,1] where det g_t vanishes
  bool pole_check_skipped = false;

  bool ok() const { return status == DegenerationStatus::verified; }
};

namespace detail {

inline std::vector<mpz_class> small_divisors(mpz_class a) {
  a = abs(a);
  std::vector<mpz_class> out;
  if (a == 0) return out;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    out.push_back(d);
    if (d * d != a) out.push_back(a / d);
  }
  return out;
}

/// Rational roots in (0, 1] of a polynomial with rational coefficients.
inline std::optional<std::vector<Rational>> roots_in_unit_interval(std::vector<Rational> p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  std::size_t lead_zero = 0;
  while (lead_zero < p.size() && sgn(p[lead_zero]) == 0) ++lead_zero;
  p.erase(p.begin(), p.begin() + static_cast<long>(lead_zero));
  std::vector<Rational> roots;
  if (p.size() <= 1) return roots;
  mpz_class l = 1;
  for (const auto& c : p) l = lcm(l, c.get_den());
  std::vector<mpz_class> z;
  for (const auto& c : p) {
    Rational scaled = c * l;
    z.push_back(scaled.get_num());
  }
  const mpz_class limit = mpz_class(1) << 40;
  if (abs(z.front()) > limit || abs(z.back()) > limit) return std::nullopt;
  for (const auto& num : small_divisors(z.front()))
    for (const auto& den : small_divisors(z.back())) {
      Rational r(num, den);
      r.canonicalize();
      if (r > 1) continue;
      Rational v = 0;
      for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * r + *it;
      if (sgn(v) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

/// Rational t in (0, 1] with det g_t = 0. Irrational zeros are not detected.
inline std::optional<std::vector<Rational>> rational_poles(const BasisChangeFamily& fam) {
  RationalFn det = determinant(fam.as_rational());
  std::optional<std::vector<Rational>> common;
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<Rational> coord;
    for (const auto& c : det.num().coeffs()) coord.push_back(c.coeff(k));
    auto r = detail::roots_in_unit_interval(coord);
    bool all_zero = std::all_of(coord.begin(), coord.end(), [](const Rational& x) { return sgn(x) == 0; });
    if (all_zero) continue;
    if (!r) return std::nullopt;
    if (!common) {
      common = *r;
    } else {
      std::vector<Rational> keep;
      for (const auto& x : *common)
        if (std::find(r->begin(), r->end(), x) != r->end()) keep.push_back(x);
      common = keep;
    }
  }
  return common.value_or(std::vector<Rational>{});
}

inline DegenerationReport verify_degeneration(const EvolutionAlgebra& alg, const BasisChangeFamily& fam,
                                              const EvolutionAlgebra& target,
                                              MatchMode mode = MatchMode::exact) {
  if (alg.dim() != target.dim()) throw DimensionMismatch("source and target dimensions differ");
  DegenerationReport rep;
  auto d = detail::prepare(alg, fam);
  const std::size_t n = alg.dim();
  rep.acted = RfMatrix(n, n, RationalFn(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto v = detail::acted_product(d, i, j);
      if (i == j) {
        for (std::size_t m = 0; m < n; ++m) rep.acted(i, m) = v[m];
      } else if (!is_zero_vector(v)) {
        rep.status = DegenerationStatus::not_natural;
        rep.offending.push_back({i, j, 0});
      }
    }
  }
  if (rep.status == DegenerationStatus::not_natural) return rep;
  auto lim = try_limit(rep.acted);
  if (!lim.algebra) {
    rep.status = DegenerationStatus::no_limit;
    rep.offending = lim.offending;
    return rep;
  }
  rep.limit_algebra = lim.algebra;
  if (lim.algebra->structure() == target.structure()) {
    rep.status = DegenerationStatus::verified;
  } else if (mode == MatchMode::permutation) {
    if (auto r = find_relabeling(lim.algebra->structure(), target.structure())) {
      rep.relabeling = r;
      rep.status = DegenerationStatus::verified;
    }
  }
  if (rep.status != DegenerationStatus::verified) {
    rep.status = DegenerationStatus::limit_mismatch;
    return rep;
  }
  if (auto poles = rational_poles(fam)) {
    rep.pole_warnings = *poles;
  } else {
    rep.pole_check_skipped = true;
  }
  return rep;
}

struct ObstructionReport {
  std::pair<std::size_t, std::size_t> ann_dims;
  std::pair<TypeSeq, TypeSeq> types;
  int type_comparison = 0;  // sign of type(mu) - type(lambda)
  std::pair<std::size_t, std::size_t> square_dims;
  std::pair<std::size_t, std::size_t> b2_dims;
  std::pair<std::size_t, std::size_t> h2_dims;
  bool ann_ok = false;
  bool type_ok = false;
  bool square_ok = false;
  bool b2_ok = false;
  bool h2_ok = false;
  bool all_pass = false;
};

inline ObstructionReport obstructions(const EvolutionAlgebra& mu, const EvolutionAlgebra& lam) {
  if (mu.dim() != lam.dim()) throw DimensionMismatch("algebras have different dimensions");
  ObstructionReport r;
  r.ann_dims = {annihilator(mu).dim(), annihilator(lam).dim()};
  r.types = {type_sequence(mu), type_sequence(lam)};
  r.type_comparison = compare_lex(r.types.first, r.types.second);
  r.square_dims = {square_dim(mu), square_dim(lam)};
  auto hm = h2(mu);
  auto hl = h2(lam);
  r.b2_dims = {hm.b2_dim, hl.b2_dim};
  r.h2_dims = {hm.h2_dim, hl.h2_dim};
  r.ann_ok = r.ann_dims.first <= r.ann_dims.second;
  r.type_ok = r.type_comparison <= 0;
  r.square_ok = r.square_dims.second <= r.square_dims.first;
  r.b2_ok = r.b2_dims.first >= r.b2_dims.second;
  r.h2_ok = r.h2_dims.first <= r.h2_dims.second;
  r.all_pass = r.ann_ok && r.type_ok && r.square_ok && r.b2_ok && r.h2_ok;
  return r;
}

struct SearchBounds {
  int max_abs_exponent = 2;
  std::vector<CycScalar> coefficient_set{CycScalar(1)};
  std::size_t max_offdiag_nonzeros = 1;
};

struct SearchOptions {
  unsigned threads = 0;
  bool skip_obstructions = false;
  MatchMode mode = MatchMode::exact;
};

struct SearchResult {
  std::optional<BasisChangeFamily> family;
  std::optional<DegenerationReport> report;
  std::uint64_t candidate_index = 0;
  std::uint64_t space_size = 0;
  bool obstructed = false;
};

/// Enumerates diagonal monomial families plus a bounded number of monomial
/// off-diagonal entries. Candidate order: diagonal exponent vectors by total
/// degree sum |m_i| then lexicographically; off-diagonal support patterns by
/// size then index order; off-diagonal exponents lexicographically; then
/// coefficients in the given order.
class WitnessSpace {
 public:
  WitnessSpace(std::size_t n, SearchBounds bounds) : n_(n), b_(std::move(bounds)) {
    if (b_.coefficient_set.empty()) throw DimensionMismatch("coefficient set is empty");
    const int e = b_.max_abs_exponent;
    std::vector<int> cur(n_, -e);
    for (;;) {
      diag_.push_back(cur);
      std::size_t k = n_;
      while (k > 0 && cur[k - 1] == e) cur[--k] = -e;
      if (k == 0) break;
      ++cur[k - 1];
    }
    std::stable_sort(diag_.begin(), diag_.end(), [](const auto& a, const auto& b) {
      return weight(a) < weight(b);
    });
    std::vector<std::pair<std::size_t, std::size_t>> positions;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j) positions.emplace_back(i, j);
    for (std::size_t size = 0; size <= std::min(b_.max_offdiag_nonzeros, positions.size()); ++size)
      add_patterns(positions, size, 0, {});
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(e) + 1;
    const std::uint64_t cs = b_.coefficient_set.size();
    per_diag_ = 0;
    for (const auto& p : patterns_) {
      std::uint64_t size = checked_pow(span, p.size());
      size = checked_mul(size, checked_pow(cs, n_ + p.size()));
      pattern_offset_.push_back(per_diag_);
      per_diag_ = checked_add(per_diag_, size);
    }
    total_ = checked_mul(per_diag_, diag_.size());
  }

  std::uint64_t size() const { return total_; }

  BasisChangeFamily decode(std::uint64_t idx) const {
    const std::uint64_t di = idx / per_diag_;
    std::uint64_t rest = idx % per_diag_;
    std::size_t pi = static_cast<std::size_t>(
        std::upper_bound(pattern_offset_.begin(), pattern_offset_.end(), rest) - pattern_offset_.begin() - 1);
    rest -= pattern_offset_[pi];
    const auto& pattern = patterns_[pi];
    const std::uint64_t cs = b_.coefficient_set.size();
    const std::size_t ncoef = n_ + pattern.size();
    std::uint64_t coef_block = checked_pow(cs, ncoef);
    std::uint64_t exp_index = rest / coef_block;
    std::uint64_t coef_index = rest % coef_block;
    std::vector<std::size_t> coef(ncoef);
    for (std::size_t k = ncoef; k-- > 0;) {
      coef[k] = static_cast<std::size_t>(coef_index % cs);
      coef_index /= cs;
    }
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(b_.max_abs_exponent) + 1;
    std::vector<int> offexp(pattern.size());
    for (std::size_t k = pattern.size(); k-- > 0;) {
      offexp[k] = static_cast<int>(exp_index % span) - b_.max_abs_exponent;
      exp_index /= span;
    }
    LaurentMatrix g(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      g(i, i) = LaurentPoly::monomial(b_.coefficient_set[coef[i]], diag_[di][i]);
    for (std::size_t k = 0; k < pattern.size(); ++k)
      g(pattern[k].first, pattern[k].second) =
          LaurentPoly::monomial(b_.coefficient_set[coef[n_ + k]], offexp[k]);
    return {std::move(g), {}};
  }

 private:
  static int weight(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x < 0 ? -x : x;
    return s;
  }
  static std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw DimensionMismatch("search space is too large");
    return r;
  }
  static std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw DimensionMismatch("search space is too large");
    return r;
  }
  static std::uint64_t checked_pow(std::uint64_t a, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t k = 0; k < e; ++k) r = checked_mul(r, a);
    return r;
  }
  void add_patterns(const std::vector<std::pair<std::size_t, std::size_t>>& pos, std::size_t size,
                    std::size_t from, std::vector<std::pair<std::size_t, std::size_t>> cur) {
    if (cur.size() == size) {
      patterns_.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < pos.size(); ++k) {
      cur.push_back(pos[k]);
      add_patterns(pos, size, k + 1, cur);
      cur.pop_back();
    }
  }

  std::size_t n_;
  SearchBounds b_;
  std::vector<std::vector<int>> diag_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> patterns_;
  std::vector<std::uint64_t> pattern_offset_;
  std::uint64_t per_diag_ = 0;
  std::uint64_t total_ = 0;
};

inline SearchResult search_witness(const EvolutionAlgebra& mu, const EvolutionAlgebra& lam,
                                   const SearchBounds& bounds, const SearchOptions& opts = {}) {
  if (mu.dim() != lam.dim()) throw DimensionMismatch("algebras have different dimensions");
  SearchResult out;
  if (!opts.skip_obstructions && !obstructions(mu, lam).all_pass) {
    out.obstructed = true;
    return out;
  }
  WitnessSpace space(mu.dim(), bounds);
  out.space_size = space.size();
  auto check = [&](std::uint64_t idx) {
    BasisChangeFamily fam = space.decode(idx);
    try {
      return verify_degeneration(mu, fam, lam, opts.mode).ok();
    } catch (const SingularMatrixError&) {
      return false;
    }
  };
  auto hit = first_match(space.size(), resolve_threads(opts.threads), check);
  if (!hit) return out;
  out.candidate_index = *hit;
  out.family = space.decode(*hit);
  out.report = verify_degeneration(mu, *out.family, lam, opts.mode);
  return out;
}

}  // namespace evokit
