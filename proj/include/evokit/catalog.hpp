#pragma once

// Built-in algebras: nilpotent evolution algebras of dimension at most 4,
// the two-dimensional families E1..E6, the algebras of the non-transitivity
// example, and explicit degeneration families between them.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "evokit/degeneration.hpp"
#include "evokit/deformation.hpp"

namespace evokit {

using Position = std::pair<std::size_t, std::size_t>;  // one based (row, col)

struct ExpectedInvariants {
  std::optional<TypeSeq> type;
  std::optional<std::size_t> square_dim;
  std::optional<std::vector<ScalarMatrix>> b2_generators;
  std::optional<std::vector<Position>> h2_positions;
};

struct CatalogEntry {
  std::string label;
  EvolutionAlgebra algebra;
  std::vector<std::pair<std::string, Rational>> parameters;
  ExpectedInvariants expected;
  bool nilpotent_classification = false;
};

struct WitnessEntry {
  std::string from;
  std::string to;
  BasisChangeFamily family;
};

namespace detail {

using Rows = std::vector<std::vector<long>>;

inline EvolutionAlgebra int_algebra(const Rows& rows, const std::string& label) {
  std::vector<std::vector<CycScalar>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return algebra_from_rows(r, label);
}

/// e_i^2 = e_j pairs (one based) on an otherwise zero n x n structure.
inline Rows squares(std::size_t n, std::initializer_list<std::pair<int, int>> terms) {
  Rows m(n, std::vector<long>(n, 0));
  for (auto [i, j] : terms) m[i - 1][j - 1] += 1;
  return m;
}

inline ScalarMatrix mat2(long a, long b, long c, long d) {
  return ScalarMatrix{{CycScalar(a), CycScalar(b)}, {CycScalar(c), CycScalar(d)}};
}

inline ScalarMatrix mat2q(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return ScalarMatrix{{CycScalar(a), CycScalar(b)}, {CycScalar(c), CycScalar(d)}};
}

inline CatalogEntry nilpotent(const std::string& label, const Rows& rows, std::vector<std::size_t> type,
                              std::size_t sq) {
  CatalogEntry e{label, int_algebra(rows, label), {}, {}, true};
  e.expected.type = TypeSeq{std::move(type)};
  e.expected.square_dim = sq;
  return e;
}

inline std::vector<CatalogEntry> build_nilpotent() {
  std::vector<CatalogEntry> v;
  v.push_back(nilpotent("mu_1_1", squares(1, {}), {1}, 0));
  v.push_back(nilpotent("mu_2_1", squares(2, {}), {2}, 0));
  v.push_back(nilpotent("mu_2_2", squares(2, {{1, 2}}), {1, 1}, 1));
  v.push_back(nilpotent("mu_3_1", squares(3, {}), {3}, 0));
  v.push_back(nilpotent("mu_3_2", squares(3, {{1, 2}}), {2, 1}, 1));
  v.push_back(nilpotent("mu_3_3", squares(3, {{1, 3}, {2, 3}}), {1, 2}, 1));
  v.push_back(nilpotent("mu_3_4", squares(3, {{1, 2}, {2, 3}}), {1, 1, 1}, 2));
  v.push_back(nilpotent("mu_4_1", squares(4, {}), {4}, 0));
  v.push_back(nilpotent("mu_4_2", squares(4, {{1, 2}}), {3, 1}, 1));
  v.push_back(nilpotent("mu_4_3", squares(4, {{1, 3}, {2, 3}}), {2, 2}, 1));
  v.push_back(nilpotent("mu_4_4", squares(4, {{1, 3}, {2, 4}}), {2, 2}, 2));
  v.push_back(nilpotent("mu_4_5", squares(4, {{1, 2}, {2, 4}}), {2, 1, 1}, 2));
  v.push_back(nilpotent("mu_4_6", squares(4, {{1, 4}, {2, 4}, {3, 4}}), {1, 3}, 1));
  v.push_back(nilpotent("mu_4_7", squares(4, {{1, 2}, {2, 4}, {3, 4}}), {1, 2, 1}, 2));
  {
    // e1^2 = e2 + i e3
    CatalogEntry e = nilpotent("mu_4_8", squares(4, {{1, 2}, {2, 4}, {3, 4}}), {1, 2, 1}, 2);
    ScalarMatrix m = e.algebra.structure();
    m(0, 2) = CycScalar::imag_unit();
    e.algebra = EvolutionAlgebra(m, "mu_4_8");
    v.push_back(e);
  }
  v.push_back(nilpotent("mu_4_9", squares(4, {{1, 3}, {2, 3}, {3, 4}}), {1, 1, 2}, 2));
  v.push_back(nilpotent("mu_4_10", squares(4, {{1, 3}, {2, 3}, {2, 4}, {3, 4}}), {1, 1, 2}, 2));
  v.push_back(nilpotent("mu_4_11", squares(4, {{1, 2}, {2, 3}, {3, 4}}), {1, 1, 1, 1}, 3));
  v.push_back(nilpotent("mu_4_12", squares(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}), {1, 1, 1, 1}, 3));
  return v;
}

inline CatalogEntry family_entry(const std::string& label, const Rows& rows, std::vector<ScalarMatrix> gens,
                                 std::vector<Position> positions) {
  CatalogEntry e{label, int_algebra(rows, label), {}, {}, false};
  e.expected.b2_generators = std::move(gens);
  e.expected.h2_positions = std::move(positions);
  return e;
}

inline std::string format_params(const std::vector<Rational>& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ",";
    out += format_rational(p[k]);
  }
  return out + ")";
}

}  // namespace detail

/// e1^2 = e1 + a2 e2, e2^2 = a3 e1 + e2 with 1 - a2 a3 != 0.
inline CatalogEntry family_e5(const Rational& a2, const Rational& a3) {
  if (a2 * a3 == 1) throw UnknownLabel("E5" + detail::format_params({a2, a3}) + " (requires a2*a3 != 1)");
  std::string label = "E5" + detail::format_params({a2, a3});
  ScalarMatrix m = detail::mat2q(1, a2, a3, 1);
  CatalogEntry e{label, EvolutionAlgebra(m, label), {{"a2", a2}, {"a3", a3}}, {}, false};
  e.expected.b2_generators = std::vector<ScalarMatrix>{detail::mat2q(-1, -2 * a2, a3, 0),
                                                       detail::mat2q(0, a2, -2 * a3, -1)};
  if (sgn(a2) != 0) {
    e.expected.h2_positions = std::vector<Position>{{2, 1}, {2, 2}};
  } else if (sgn(a3) == 0) {
    e.expected.h2_positions = std::vector<Position>{{1, 2}, {2, 1}};
  } else {
    e.expected.h2_positions = std::vector<Position>{{1, 2}, {2, 2}};
  }
  return e;
}

/// e1^2 = e2, e2^2 = e1 + a4 e2.
inline CatalogEntry family_e6(const Rational& a4) {
  std::string label = "E6" + detail::format_params({a4});
  ScalarMatrix m = detail::mat2q(0, 1, 1, a4);
  CatalogEntry e{label, EvolutionAlgebra(m, label), {{"a4", a4}}, {}, false};
  e.expected.b2_generators = std::vector<ScalarMatrix>{detail::mat2q(0, 1, -2, -a4), detail::mat2(0, -2, 1, 0)};
  e.expected.h2_positions = std::vector<Position>{{1, 1}, {2, 2}};
  return e;
}

inline const std::vector<std::pair<Rational, Rational>>& e5_samples() {
  static const std::vector<std::pair<Rational, Rational>> s{{1, 0}, {1, 2}, {0, 0}, {0, 1}};
  return s;
}

inline const std::vector<Rational>& e6_samples() {
  static const std::vector<Rational> s{0, 1};
  return s;
}

class Catalog {
 public:
  static const Catalog& instance() {
    static const Catalog c;
    return c;
  }

  const std::vector<CatalogEntry>& nilpotent() const { return nilpotent_; }

  /// E1..E4 plus the sampled members of E5 and E6.
  const std::vector<CatalogEntry>& families() const { return families_; }

  const std::vector<CatalogEntry>& examples() const { return examples_; }

  std::vector<CatalogEntry> all() const {
    std::vector<CatalogEntry> out = nilpotent_;
    out.insert(out.end(), families_.begin(), families_.end());
    out.insert(out.end(), examples_.begin(), examples_.end());
    return out;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& e : all()) out.push_back(e.label);
    return out;
  }

  /// Accepts plain labels and parametrised ones such as "E5(1,0)" or "E6(1/2)".
  CatalogEntry get(const std::string& label) const {
    for (const auto* list : {&nilpotent_, &families_, &examples_})
      for (const auto& e : *list)
        if (e.label == label) return e;
    auto open = label.find('(');
    if (open != std::string::npos && label.back() == ')') {
      std::string head = label.substr(0, open);
      std::vector<Rational> args;
      std::stringstream ss(label.substr(open + 1, label.size() - open - 2));
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          CycScalar c = parse_scalar(item);
          if (!c.is_rational()) throw UnknownLabel(label);
          args.push_back(c.coeff(0));
        } catch (const ParseError&) {
          throw UnknownLabel(label);
        }
      }
      if (head == "E5" && args.size() == 2) return family_e5(args[0], args[1]);
      if (head == "E6" && args.size() == 1) return family_e6(args[0]);
    }
    throw UnknownLabel(label);
  }

  EvolutionAlgebra algebra(const std::string& label) const { return get(label).algebra; }

  const std::vector<WitnessEntry>& witnesses() const { return witnesses_; }

  /// Edges of the degeneration diagrams in dimensions 2, 3 and 4.
  std::vector<std::pair<std::string, std::string>> hasse_edges(int dim) const {
    switch (dim) {
      case 2: return {{"mu_2_2", "mu_2_1"}};
      case 3:
        return {{"mu_3_4", "mu_3_3"}, {"mu_3_3", "mu_3_2"}, {"mu_3_2", "mu_3_1"}, {"mu_3_4", "mu_3_2"}};
      case 4:
        return {{"mu_4_12", "mu_4_11"}, {"mu_4_12", "mu_4_10"}, {"mu_4_12", "mu_4_8"}, {"mu_4_11", "mu_4_7"},
                {"mu_4_10", "mu_4_9"},  {"mu_4_9", "mu_4_6"},   {"mu_4_8", "mu_4_6"},  {"mu_4_7", "mu_4_6"},
                {"mu_4_7", "mu_4_5"},   {"mu_4_6", "mu_4_3"},   {"mu_4_5", "mu_4_4"},  {"mu_4_4", "mu_4_3"},
                {"mu_4_3", "mu_4_2"},   {"mu_4_2", "mu_4_1"}};
      default: throw DimensionMismatch("diagrams exist for dimensions 2, 3 and 4 only");
    }
  }

  /// The explicit family for an edge, or t^-1 I when the target is abelian.
  BasisChangeFamily edge_family(const std::string& from, const std::string& to) const {
    for (const auto& w : witnesses_)
      if (w.from == from && w.to == to) return w.family;
    EvolutionAlgebra target = algebra(to);
    if (square_dim(target) == 0) return BasisChangeFamily::scalar(target.dim(), -1);
    throw UnknownLabel(from + " -> " + to);
  }

 private:
  Catalog() {
    nilpotent_ = detail::build_nilpotent();

    families_.push_back(detail::family_entry("E1", {{1, 0}, {0, 0}},
                                             {detail::mat2(1, 0, 0, 0), detail::mat2(0, 1, 0, 0)},
                                             {{2, 1}, {2, 2}}));
    families_.push_back(detail::family_entry(
        "E2", {{1, 0}, {1, 0}},
        {detail::mat2(-1, 0, 1, 0), detail::mat2(0, 1, 0, 1), detail::mat2(0, 0, -2, 0)}, {{2, 2}}));
    families_.push_back(detail::family_entry("E3", {{1, 1}, {-1, -1}},
                                             {detail::mat2(1, 1, -1, -1), detail::mat2(0, 1, 2, 1)},
                                             {{2, 1}, {2, 2}}));
    families_.push_back(detail::family_entry("E4", {{0, 1}, {0, 0}}, {detail::mat2(0, 1, 0, 0)},
                                             {{1, 1}, {2, 1}, {2, 2}}));
    for (const auto& [a2, a3] : e5_samples()) families_.push_back(family_e5(a2, a3));
    for (const auto& a4 : e6_samples()) families_.push_back(family_e6(a4));

    examples_.push_back({"ex1_mu1", detail::int_algebra({{1, 0}, {0, 1}}, "ex1_mu1"), {}, {}, false});
    examples_.push_back({"ex1_mu2", detail::int_algebra({{1, 0}, {0, 0}}, "ex1_mu2"), {}, {}, false});
    examples_.push_back({"ex1_mu3", detail::int_algebra({{0, 1}, {0, 0}}, "ex1_mu3"), {}, {}, false});

    auto add = [this](const char* from, const char* to, std::vector<std::vector<std::string>> g) {
      witnesses_.push_back({from, to, BasisChangeFamily::parse(g, std::string(from) + " -> " + to)});
    };
    add("mu_3_4", "mu_3_3", {{"1", "0", "0"}, {"0", "t", "0"}, {"0", "1", "t^2"}});
    add("mu_3_3", "mu_3_2", {{"t", "0", "0"}, {"0", "1", "0"}, {"0", "0", "t^2"}});
    add("mu_3_4", "mu_3_2", {{"1", "0", "0"}, {"0", "t", "0"}, {"0", "0", "t^2"}});

    add("mu_4_12", "mu_4_11", {{"t", "0", "0", "0"}, {"0", "t^2", "0", "0"}, {"0", "0", "t^4", "0"},
                               {"0", "0", "0", "t^8"}});
    add("mu_4_12", "mu_4_10", {{"t^-1", "0", "0", "0"}, {"0", "t^-1", "0", "0"}, {"0", "0", "t^-2", "0"},
                               {"0", "-t^-2", "t^-2", "t^-4"}});
    add("mu_4_12", "mu_4_8", {{"sqrt_i*t^-1", "0", "0", "0"}, {"0", "i*t^-2", "0", "0"},
                              {"0", "0", "-t^-2", "0"}, {"0", "t^-4", "-t^-4", "t^-4"}});
    add("mu_4_11", "mu_4_7", {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "t", "0"},
                              {"0", "0", "1", "t^2"}});
    add("mu_4_10", "mu_4_9", {{"t", "0", "0", "0"}, {"0", "t", "0", "0"}, {"0", "0", "t^2", "0"},
                              {"0", "0", "0", "t^4"}});
    add("mu_4_9", "mu_4_6", {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "t", "0"},
                             {"0", "0", "1", "t^2"}});
    add("mu_4_8", "mu_4_6", {{"t", "0", "0", "0"}, {"0", "t^3", "0", "0"}, {"0", "0", "t^3", "0"},
                             {"0", "0", "-i*t^2", "t^6"}});
    add("mu_4_7", "mu_4_6", {{"1", "0", "0", "0"}, {"0", "t", "0", "0"}, {"0", "0", "t", "0"},
                             {"0", "1", "0", "t^2"}});
    add("mu_4_7", "mu_4_5", {{"t", "0", "0", "0"}, {"0", "t^2", "0", "0"}, {"0", "0", "1", "0"},
                             {"0", "0", "0", "t^4"}});
    add("mu_4_6", "mu_4_3", {{"t^2", "0", "0", "0"}, {"0", "t^2", "0", "0"}, {"0", "0", "1", "0"},
                             {"0", "0", "0", "t^4"}});
    add("mu_4_5", "mu_4_4", {{"1", "0", "0", "0"}, {"0", "t", "0", "0"}, {"0", "1", "1", "0"},
                             {"0", "0", "0", "t^2"}});
    add("mu_4_4", "mu_4_3", {{"t^-3", "0", "0", "0"}, {"0", "t^-1", "0", "0"}, {"0", "0", "t^-4", "0"},
                             {"0", "0", "t^-6", "t^-2"}});
    add("mu_4_3", "mu_4_2", {{"1", "0", "0", "0"}, {"0", "t^-1", "0", "0"}, {"0", "0", "1", "0"},
                             {"0", "0", "0", "1"}});
  }

  std::vector<CatalogEntry> nilpotent_;
  std::vector<CatalogEntry> families_;
  std::vector<CatalogEntry> examples_;
  std::vector<WitnessEntry> witnesses_;
};

struct WitnessCheck {
  WitnessEntry witness;
  DegenerationReport report;
};

struct WitnessSummary {
  std::vector<WitnessCheck> checks;
  std::size_t verified = 0;
};

/// Runs every stored family. Limits are matched up to relabeling of the
/// basis, which is recorded in each report.
inline WitnessSummary verify_all_witnesses(std::optional<int> dim = std::nullopt,
                                           MatchMode mode = MatchMode::permutation) {
  const Catalog& cat = Catalog::instance();
  WitnessSummary out;
  for (const auto& w : cat.witnesses()) {
    EvolutionAlgebra from = cat.algebra(w.from);
    if (dim && static_cast<int>(from.dim()) != *dim) continue;
    auto rep = verify_degeneration(from, w.family, cat.algebra(w.to), mode);
    if (rep.ok()) ++out.verified;
    out.checks.push_back({w, std::move(rep)});
  }
  return out;
}

inline std::string dot_id(const std::string& label) {
  std::string out;
  for (char c : label) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

inline std::string hasse_dot(int dim) {
  const Catalog& cat = Catalog::instance();
  auto edges = cat.hasse_edges(dim);
  std::ostringstream os;
  os << "digraph N" << dim << " {\n";
  os << "  rankdir=LR;\n";
  for (const auto& e : cat.nilpotent())
    if (static_cast<int>(e.algebra.dim()) == dim)
      os << "  " << dot_id(e.label) << " [label=\"" << e.label << "\"];\n";
  for (const auto& [from, to] : edges) {
    bool ok = false;
    try {
      ok = verify_degeneration(cat.algebra(from), cat.edge_family(from, to), cat.algebra(to),
                               MatchMode::permutation)
               .ok();
    } catch (const Error&) {
      ok = false;
    }
    os << "  " << dot_id(from) << " -> " << dot_id(to) << " [label=\"" << (ok ? "verified" : "unverified")
       << "\"" << (ok ? "" : ", style=dashed") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace evokit
