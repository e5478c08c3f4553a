#pragma once
// End-to-end reproduction pipeline: seeded property sweeps over random sets
// plus one witness instance per counterexample family, assembled into an
// empirical summary matrix (planarity / connectedness / undirected spanner /
// directed spanner, single quadrant vs adjacent pair). Reports are written
// as deterministic byte streams so repeated runs compare equal.

#include <string>
#include <vector>

namespace yao4 {

struct ReproduceOptions {
  std::string out_dir;
  int seeds = 100;  // random sweep repetitions
  int n = 200;      // points per random set
  bool echo = true; // print per-check lines to stdout
};

struct ReproduceCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ReproduceResult {
  bool all_ok = false;
  std::vector<ReproduceCheck> checks;
  std::vector<std::string> files_written;
};

ReproduceResult run_reproduce(const ReproduceOptions& options);

}  // namespace yao4
