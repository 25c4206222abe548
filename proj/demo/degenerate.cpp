// Degenerates mu_3_4 to mu_3_3 along g_t and prints the acted structure.
#include <iostream>

#include "evokit/cli.hpp"

using namespace evokit;

int main(int argc, char** argv) {
  std::string path = argc > 1 ? argv[1] : EVOKIT_DEMO_DIR "/witness_mu34_mu33.json";
  WitnessFile w = parse_witness_file(path);
  const Catalog& cat = Catalog::instance();
  EvolutionAlgebra from = cat.algebra(w.from.value_or("mu_3_4"));
  EvolutionAlgebra to = cat.algebra(w.to.value_or("mu_3_3"));

  std::cout << "source:\n" << cli::structure_text(from.structure());
  auto obs = obstructions(from, to);
  std::cout << "necessary conditions: " << (obs.all_pass ? "hold" : "fail") << "\n";

  DegenerationReport r = verify_degeneration(from, w.family, to);
  std::cout << "g_t . mu:\n" << cli::rf_structure_text(r.acted);
  std::cout << "status: " << status_name(r.status) << "\n";
  if (r.limit_algebra) std::cout << "limit at t = 0:\n" << cli::structure_text(r.limit_algebra->structure());
  return r.ok() ? 0 : 1;
}
