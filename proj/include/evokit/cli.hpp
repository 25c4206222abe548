#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evokit/json_io.hpp"

namespace evokit::cli {

enum ExitCode { kOk = 0, kDomainFailure = 1, kUsage = 2 };

inline std::string combination(const std::vector<std::string>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const std::string& c = coeffs[k];
    if (c == "0") continue;
    std::string basis = "e" + std::to_string(k + 1);
    std::string term;
    if (c == "1") {
      term = basis;
    } else if (c == "-1") {
      term = "-" + basis;
    } else if (c.find(' ') == std::string::npos) {
      term = c + "*" + basis;
    } else {
      term = "(" + c + ")*" + basis;
    }
    detail::append_term(out, term);
  }
  return out.empty() ? "0" : out;
}

inline std::string structure_text(const ScalarMatrix& m, const char* var = "e") {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> c;
    for (std::size_t j = 0; j < m.cols(); ++j) c.push_back(format_scalar(m(i, j)));
    out += "  " + std::string(var) + std::to_string(i + 1) + "^2 = " + combination(c) + "\n";
  }
  return out;
}

inline std::string rf_structure_text(const RfMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> c;
    for (std::size_t j = 0; j < m.cols(); ++j) c.push_back(format_rational_fn(m(i, j)));
    out += "  e" + std::to_string(i + 1) + "^2 = " + combination(c) + "\n";
  }
  return out;
}

inline std::string matrix_text(const ScalarMatrix& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += format_scalar(m(i, j));
    }
  }
  return out + ")";
}

inline std::string positions_text(const std::vector<std::pair<std::size_t, std::size_t>>& zero_based) {
  std::string out;
  for (auto [i, j] : zero_based) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  }
  return out.empty() ? "none" : out;
}

/// A path to an algebra JSON file, or a catalog label.
inline EvolutionAlgebra resolve_algebra(const std::string& ref) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(ref, ec)) {
    EvolutionAlgebra alg = parse_algebra_file(ref);
    if (alg.label().empty()) alg.set_label(ref);
    return alg;
  }
  return Catalog::instance().algebra(ref);
}

struct Options {
  std::string format = "text";
  std::string alg;
  std::string from;
  std::string to;
  std::string g;
  std::string def;
  std::string d1;
  std::string d2;
  int dim = 0;
  bool skip_obstructions = false;
  bool up_to_permutation = false;
  int max_exponent = 2;
  std::vector<std::string> coefficients{"1"};
  std::size_t max_offdiag = 1;
  unsigned threads = 0;
};

struct BuiltinCheck {
  explicit BuiltinCheck(std::string n) : name(std::move(n)) {}
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;
  bool ok() const { return passed == total; }
};

inline std::vector<BuiltinCheck> builtin_checks() {
  const Catalog& cat = Catalog::instance();
  std::vector<BuiltinCheck> out;

  BuiltinCheck nil{"nilpotent classification (type, dim E^2)"};
  for (const auto& e : cat.nilpotent()) {
    ++nil.total;
    if (type_sequence(e.algebra) == *e.expected.type && square_dim(e.algebra) == *e.expected.square_dim) {
      ++nil.passed;
    } else {
      nil.failures.push_back(e.label);
    }
  }
  out.push_back(nil);

  BuiltinCheck fam{"two-dimensional families (B^2, H^2 positions)"};
  for (const auto& e : cat.families()) {
    ++fam.total;
    auto rep = h2(e.algebra);
    std::vector<Vec> gens;
    for (const auto& m : *e.expected.b2_generators) gens.push_back(m.flat());
    std::vector<Position> pos;
    for (auto [i, j] : rep.positions) pos.push_back({i + 1, j + 1});
    if (rep.b2 == Subspace::span(4, gens) && pos == *e.expected.h2_positions) {
      ++fam.passed;
    } else {
      fam.failures.push_back(e.label);
    }
  }
  out.push_back(fam);

  BuiltinCheck wit{"degeneration witnesses"};
  for (const auto& c : verify_all_witnesses().checks) {
    ++wit.total;
    if (c.report.ok()) {
      ++wit.passed;
    } else {
      wit.failures.push_back(c.witness.from + " -> " + c.witness.to + ": " + status_name(c.report.status));
    }
  }
  out.push_back(wit);

  BuiltinCheck nonrigid{"nontrivial infinitesimal deformations"};
  BuiltinCheck sink{"degeneration to the abelian algebra"};
  for (const auto& e : cat.all()) {
    ++nonrigid.total;
    try {
      auto cert = nontrivial_infinitesimal(e.algebra);
      if (!is_trivial_infinitesimal(cert.deformation)) ++nonrigid.passed;
    } catch (const InternalContradiction& ex) {
      nonrigid.failures.push_back(e.label + ": " + ex.what());
    }
    ++sink.total;
    auto rep = verify_degeneration(e.algebra, BasisChangeFamily::scalar(e.algebra.dim(), -1),
                                   abelian(e.algebra.dim()));
    if (rep.ok()) {
      ++sink.passed;
    } else {
      sink.failures.push_back(e.label);
    }
  }
  out.push_back(nonrigid);
  out.push_back(sink);
  return out;
}

namespace detail {

inline void emit_degeneration_text(std::ostream& out, const DegenerationReport& r) {
  out << "status: " << status_name(r.status) << "\n";
  if (r.status == DegenerationStatus::not_natural) {
    for (const auto& e : r.offending)
      out << "  (g.mu)(f" << e.row + 1 << ", f" << e.col + 1 << ") is not identically zero\n";
    return;
  }
  out << "acted structure:\n" << rf_structure_text(r.acted);
  if (r.status == DegenerationStatus::no_limit) {
    for (const auto& e : r.offending)
      out << "  entry (" << e.row + 1 << "," << e.col + 1 << ") has valuation " << e.valuation << "\n";
    return;
  }
  if (r.limit_algebra) out << "limit:\n" << structure_text(r.limit_algebra->structure());
  if (r.relabeling) {
    out << "matched after relabeling: sigma = (";
    for (std::size_t i = 0; i < r.relabeling->permutation.size(); ++i)
      out << (i ? " " : "") << r.relabeling->permutation[i] + 1;
    out << "), d = (";
    for (std::size_t i = 0; i < r.relabeling->scalings.size(); ++i)
      out << (i ? ", " : "") << format_scalar(r.relabeling->scalings[i]);
    out << ")\n";
  }
  for (const auto& p : r.pole_warnings) out << "warning: det g_t vanishes at t = " << format_rational(p) << "\n";
  if (r.pole_check_skipped) out << "warning: pole check skipped (coefficients too large)\n";
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with evolution algebras: cohomology, deformations, degenerations.",
               "evokit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "evokit 0.1.0");
  Options o;

  auto fmt = [&](CLI::App* s, std::vector<std::string> allowed) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };
  auto alg_cmd = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--alg", o.alg, "Catalog label or algebra JSON file")->required();
    fmt(s, {"text", "json"});
    return s;
  };
  auto pair_opts = [&](CLI::App* s, bool required) {
    auto* f = s->add_option("--from", o.from, "Source algebra (label or file)");
    auto* t = s->add_option("--to", o.to, "Target algebra (label or file)");
    if (required) {
      f->required();
      t->required();
    }
  };

  alg_cmd("info", "Summary of an algebra");
  alg_cmd("ann-series", "Upper annihilating series");
  alg_cmd("type", "Type sequence");
  alg_cmd("nilpotent", "Nilpotency test");
  alg_cmd("square-dim", "Dimension of E^2");
  alg_cmd("b2", "Space of 2-coboundaries");
  alg_cmd("h2", "Second cohomology");
  alg_cmd("derivations", "Derivation space");
  alg_cmd("infdef", "Infinitesimal deformations up to equivalence");
  alg_cmd("nonrigid", "A nontrivial first-order deformation");

  CLI::App* trivial = app.add_subcommand("deform-trivial", "Is the infinitesimal of a deformation a coboundary");
  trivial->add_option("--def", o.def, "Deformation JSON file")->required();
  fmt(trivial, {"text", "json"});

  CLI::App* equiv = app.add_subcommand("deform-equiv", "Compare two infinitesimal deformations");
  equiv->add_option("--d1", o.d1, "First deformation JSON file")->required();
  equiv->add_option("--d2", o.d2, "Second deformation JSON file")->required();
  fmt(equiv, {"text", "json"});

  CLI::App* degen = app.add_subcommand("degenerate", "Verify a degeneration along a family g_t");
  pair_opts(degen, false);
  degen->add_option("--g", o.g, "Witness JSON file")->required();
  degen->add_flag("--match-up-to-permutation", o.up_to_permutation, "Accept relabelled limits");
  fmt(degen, {"text", "json"});

  CLI::App* obst = app.add_subcommand("obstructions", "Necessary conditions for a degeneration");
  pair_opts(obst, true);
  fmt(obst, {"text", "json"});

  CLI::App* search = app.add_subcommand("search", "Bounded search for a monomial witness");
  pair_opts(search, true);
  search->add_option("--max-exponent", o.max_exponent, "Largest |exponent|")->check(CLI::Range(0, 8));
  search->add_option("--coefficients", o.coefficients, "Coefficient set")->delimiter(',');
  search->add_option("--max-offdiag", o.max_offdiag, "Off-diagonal nonzeros")->check(CLI::Range(0, 4));
  search->add_option("--threads", o.threads, "Worker threads (default EVOKIT_THREADS or all cores)");
  search->add_flag("--skip-obstructions", o.skip_obstructions, "Do not pre-check obstructions");
  search->add_flag("--match-up-to-permutation", o.up_to_permutation, "Accept relabelled limits");
  fmt(search, {"text", "json"});

  CLI::App* catalog = app.add_subcommand("catalog", "List built-in algebras and witnesses");
  fmt(catalog, {"text", "json"});

  CLI::App* hasse = app.add_subcommand("hasse", "Degeneration diagram");
  hasse->add_option("--dim", o.dim, "Dimension (2, 3 or 4)")->required();
  o.format = "text";
  fmt(hasse, {"dot", "text", "json"});

  CLI::App* builtin = app.add_subcommand("verify-paper", "Re-check all built-in data");
  fmt(builtin, {"text", "json"});

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const bool json = o.format == "json";
  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();

  try {
    if (!o.alg.empty()) {
      EvolutionAlgebra alg = resolve_algebra(o.alg);
      const std::string label = alg.label();
      Json j;
      j["algebra"] = label;
      if (name == "info") {
        auto series = ann_series(alg);
        j["dim"] = alg.dim();
        j["matrix"] = scalar_matrix_json(alg.structure());
        j["type"] = type_json(type_sequence(alg));
        j["nilpotent"] = series.reaches_full;
        j["square_dim"] = square_dim(alg);
        j["regular"] = is_regular(alg);
        j["ann_dim"] = annihilator(alg).dim();
        if (!json) {
          out << label << " (dim " << alg.dim() << ")\n" << structure_text(alg.structure());
          out << "type: " << type_sequence(alg) << "\n";
          out << "nilpotent: " << (series.reaches_full ? "yes" : "no") << "\n";
          out << "dim E^2: " << square_dim(alg) << "\n";
          out << "regular: " << (is_regular(alg) ? "yes" : "no") << "\n";
          out << "dim ann: " << annihilator(alg).dim() << "\n";
        }
      } else if (name == "ann-series") {
        auto series = ann_series(alg);
        j["dims"] = series.dims();
        Json sets = Json::array();
        for (const auto& s : series.index_sets) {
          Json one = Json::array();
          for (auto k : s) one.push_back(k + 1);
          sets.push_back(one);
        }
        j["spans"] = sets;
        j["stabilized_at"] = series.stabilized_at;
        j["reaches_full"] = series.reaches_full;
        if (!json) {
          for (std::size_t k = 0; k < series.index_sets.size(); ++k) {
            out << "ann^" << k + 1 << " = span{";
            for (std::size_t m = 0; m < series.index_sets[k].size(); ++m)
              out << (m ? ", " : "") << "e" << series.index_sets[k][m] + 1;
            out << "}  dim " << series.subspaces[k].dim() << "\n";
          }
          out << (series.reaches_full ? "reaches E" : "stabilizes below E") << "\n";
        }
      } else if (name == "type") {
        j["type"] = type_json(type_sequence(alg));
        if (!json) out << type_sequence(alg) << "\n";
      } else if (name == "nilpotent") {
        j["nilpotent"] = is_nilpotent(alg);
        if (!json) out << (is_nilpotent(alg) ? "nilpotent" : "not nilpotent") << "\n";
      } else if (name == "square-dim") {
        j["square_dim"] = square_dim(alg);
        if (!json) out << square_dim(alg) << "\n";
      } else if (name == "b2" || name == "h2" || name == "infdef") {
        auto rep = h2(alg);
        j.update(cohomology_json(alg, rep));
        if (!json) {
          out << "dim B^2 = " << rep.b2_dim << "\n";
          for (const auto& v : rep.b2.vectors()) out << "  " << matrix_text(unflatten(alg.dim(), v)) << "\n";
          if (name != "b2") {
            out << "dim H^2 = " << rep.h2_dim << "\n";
            out << "free positions: " << positions_text(rep.positions) << "\n";
          }
          if (name == "infdef") {
            out << "family: mu + t * (";
            for (std::size_t k = 0; k < rep.positions.size(); ++k)
              out << (k ? " + " : "") << "a" << k + 1 << "*E" << rep.positions[k].first + 1
                  << rep.positions[k].second + 1;
            out << (rep.positions.empty() ? "0" : "") << ")\n";
          }
        }
      } else if (name == "derivations") {
        auto d = derivation_space(alg);
        j["dim"] = d.dim();
        j["basis"] = subspace_json(d, alg.dim());
        if (!json) {
          out << "dim Der = " << d.dim() << "\n";
          for (const auto& v : d.vectors()) out << "  " << matrix_text(unflatten(alg.dim(), v)) << "\n";
        }
      } else if (name == "nonrigid") {
        auto cert = nontrivial_infinitesimal(alg);
        j.update(certificate_json(cert));
        if (!json) {
          out << "branch: " << branch_name(cert.branch) << "\n";
          out << "nu1: " << matrix_text(cert.deformation.nu1) << "\n";
          out << "nu1 lies outside B^2\n";
        }
      }
      if (json) out << j.dump(2) << "\n";
      return kOk;
    }

    if (name == "deform-trivial") {
      Deformation d = parse_deformation_file(o.def);
      bool trivial = is_trivial_infinitesimal(d.truncated());
      if (json) {
        out << Json{{"trivial", trivial}}.dump(2) << "\n";
      } else {
        out << (trivial ? "trivial (infinitesimal lies in B^2)" : "nontrivial (infinitesimal lies outside B^2)")
            << "\n";
      }
      return kOk;
    }

    if (name == "deform-equiv") {
      auto a = parse_deformation_file(o.d1).truncated();
      auto b = parse_deformation_file(o.d2).truncated();
      bool eq = infinitesimals_equivalent(a, b);
      auto w = equivalence_witness(a, b);
      Json j;
      j["equivalent"] = eq;
      if (w) j["xi"] = scalar_matrix_json(w->xi());
      if (json) {
        out << j.dump(2) << "\n";
      } else {
        out << (eq ? "equivalent" : "not equivalent") << "\n";
        if (w) out << "xi: " << matrix_text(w->xi()) << "\n";
      }
      return kOk;
    }

    if (name == "degenerate") {
      WitnessFile wf = parse_witness_file(o.g);
      std::string from = !o.from.empty() ? o.from : wf.from.value_or("");
      std::string to = !o.to.empty() ? o.to : wf.to.value_or("");
      if (from.empty() || to.empty()) {
        err << "degenerate: --from and --to are required unless the witness file names them\n";
        return kUsage;
      }
      auto rep = verify_degeneration(resolve_algebra(from), wf.family, resolve_algebra(to),
                                     o.up_to_permutation ? MatchMode::permutation : MatchMode::exact);
      if (json) {
        Json j{{"from", from}, {"to", to}};
        j.update(degeneration_json(rep));
        out << j.dump(2) << "\n";
      } else {
        out << from << " -> " << to << "\n";
        detail::emit_degeneration_text(out, rep);
      }
      return rep.ok() ? kOk : kDomainFailure;
    }

    if (name == "obstructions") {
      auto r = obstructions(resolve_algebra(o.from), resolve_algebra(o.to));
      if (json) {
        out << obstruction_json(r).dump(2) << "\n";
      } else {
        auto line = [&](const char* what, bool ok, const std::string& detail) {
          out << (ok ? "pass  " : "FAIL  ") << what << ": " << detail << "\n";
        };
        auto pr = [](auto a, auto b, const char* rel) {
          return std::to_string(a) + " " + rel + " " + std::to_string(b);
        };
        line("dim ann(mu) <= dim ann(lambda)", r.ann_ok, pr(r.ann_dims.first, r.ann_dims.second, "vs"));
        line("type(mu) <= type(lambda)", r.type_ok,
             format_type(r.types.first) + " vs " + format_type(r.types.second));
        line("dim lambda^2 <= dim mu^2", r.square_ok, pr(r.square_dims.second, r.square_dims.first, "vs"));
        line("dim B^2(mu) >= dim B^2(lambda)", r.b2_ok, pr(r.b2_dims.first, r.b2_dims.second, "vs"));
        line("dim H^2(mu) <= dim H^2(lambda)", r.h2_ok, pr(r.h2_dims.first, r.h2_dims.second, "vs"));
        out << (r.all_pass ? "all conditions hold" : "degeneration is impossible") << "\n";
      }
      return kOk;
    }

    if (name == "search") {
      SearchBounds b;
      b.max_abs_exponent = o.max_exponent;
      b.max_offdiag_nonzeros = o.max_offdiag;
      b.coefficient_set.clear();
      for (const auto& c : o.coefficients) b.coefficient_set.push_back(parse_scalar(c));
      SearchOptions so;
      so.threads = o.threads;
      so.skip_obstructions = o.skip_obstructions;
      so.mode = o.up_to_permutation ? MatchMode::permutation : MatchMode::exact;
      auto res = search_witness(resolve_algebra(o.from), resolve_algebra(o.to), b, so);
      Json j{{"from", o.from}, {"to", o.to}, {"found", res.family.has_value()},
             {"obstructed", res.obstructed}, {"space_size", res.space_size}};
      if (res.family) {
        j["candidate_index"] = res.candidate_index;
        j["g"] = family_json(*res.family);
        if (res.report->relabeling) j["relabeling"] = relabeling_json(*res.report->relabeling);
      }
      if (json) {
        out << j.dump(2) << "\n";
      } else if (res.obstructed) {
        out << "not found: the necessary conditions already fail\n";
      } else if (!res.family) {
        out << "not found among " << res.space_size << " candidates (this proves nothing)\n";
      } else {
        out << "found candidate #" << res.candidate_index << " of " << res.space_size << "\n";
        for (const auto& row : res.family->to_strings()) {
          out << " ";
          for (const auto& s : row) out << " " << s;
          out << "\n";
        }
      }
      return res.family ? kOk : kDomainFailure;
    }

    if (name == "catalog") {
      if (json) {
        out << catalog_json().dump(2) << "\n";
        return kOk;
      }
      for (const auto& e : Catalog::instance().all()) {
        out << e.label << "\n" << structure_text(e.algebra.structure());
      }
      out << "witnesses:\n";
      for (const auto& w : Catalog::instance().witnesses()) out << "  " << w.from << " -> " << w.to << "\n";
      return kOk;
    }

    if (name == "hasse") {
      const Catalog& cat = Catalog::instance();
      auto edges = cat.hasse_edges(o.dim);
      if (o.format == "dot") {
        out << hasse_dot(o.dim);
        return kOk;
      }
      Json j = Json::array();
      for (const auto& [from, to] : edges) {
        bool ok = verify_degeneration(cat.algebra(from), cat.edge_family(from, to), cat.algebra(to),
                                      MatchMode::permutation)
                      .ok();
        j.push_back({{"from", from}, {"to", to}, {"verified", ok}});
        if (!json) out << from << " -> " << to << "  " << (ok ? "verified" : "unverified") << "\n";
      }
      if (json) out << j.dump(2) << "\n";
      return kOk;
    }

    if (name == "verify-paper") {
      auto checks = builtin_checks();
      bool all = true;
      Json j = Json::array();
      for (const auto& c : checks) {
        all = all && c.ok();
        j.push_back({{"check", c.name}, {"passed", c.passed}, {"total", c.total}, {"failures", c.failures}});
        if (!json) {
          out << (c.ok() ? "ok    " : "FAIL  ") << c.name << ": " << c.passed << "/" << c.total << "\n";
          for (const auto& f : c.failures) out << "        " << f << "\n";
        }
      }
      if (json) out << j.dump(2) << "\n";
      return all ? kOk : kDomainFailure;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownLabel& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SingularMatrixError& e) {
    err << "error: the family is singular as a matrix of rational functions\n";
    return kDomainFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  err << "unhandled command " << name << "\n";
  return kUsage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(std::move(args), out, err);
}

}  // namespace evokit::cli
