#pragma once

#include <map>
#include <string>
#include <vector>

#include "abideal/abposets.hpp"

namespace abideal {

struct Check {
  std::string anchor;       // clause label, e.g. "Prop 7.7 cardinality"
  std::string description;  // what was checked
  bool pass = false;
  std::string detail;       // counts or the failing witness
};

struct Report {
  std::vector<Check> checks;
  bool all_pass() const;
  int failures() const;
};

// Invariant suites; every assertion carries its clause anchor.
Report verify_counts(const RootSystem& sys);
Report verify_encodings(const RootSystem& sys);
Report verify_posets(const RootSystem& sys);
Report verify_towers(const RootSystem& sys);
Report verify_all(const RootSystem& sys);

// One row of the dimension table: tower step h at a long simple root.
struct TowerRow {
  int alpha = 0;  // 0-based simple index
  int h = 0;
  Coroot tau;
  std::string tau_label;
  std::string hat_type;      // type of the affine step system (empty at h = k)
  std::vector<int> g_seq;    // [g, g_1, ..., g_{h-1}]
  int dim_formula = 0;
  int dim_explicit = 0;
};

// Full tower table over the long simple roots.
std::vector<TowerRow> tower_table(const RootSystem& sys);

// Published dimension values keyed by (0-based alpha, h); empty when the
// type/rank carries no asserted table (B2).
std::map<std::pair<int, int>, int> golden_dims(const RootSystem& sys);

// Published maximal abelian dimension, or -1 when not asserted directly.
int golden_malcev(const RootSystem& sys);

}  // namespace abideal
