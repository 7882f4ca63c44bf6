// One removal run at a chosen n, with the typicality trace.
#include <cstdlib>
#include <iostream>

#include "cliquedec/removal.hpp"

int main(int argc, char** argv) {
  cliquedec::RemovalConfig cfg;
  cfg.n = argc > 1 ? std::atoi(argv[1]) : 120;
  cfg.seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 7;
  const auto run = cliquedec::sample_gamma_c(cfg);
  std::cout << "schedule: " << run.schedule.four_clique_steps << " K4 + " << run.schedule.triangle_steps << " K3\n";
  for (const auto& cp : run.typicality_trace)
    std::cout << "  phase " << cp.phase << " step " << cp.step << "  density " << cp.report.density << "  worst "
              << cp.report.worst_relative_deviation << (cp.report.passed ? "" : "  (failed)") << '\n';
  if (!run.succeeded()) {
    std::cout << "aborted\n";
    return 1;
  }
  std::cout << "cliques: " << run.clique_counts.four << " K4, " << run.clique_counts.three << " K3, " << run.clique_counts.two
            << " edges\n";
}
