#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclicity/cyclicity.hpp"

namespace cyclicity {

struct Violation {
  std::string check;
  std::string graph;  // canonical edge-list text
  double slack = 0;
};

struct NordhausGaddumRecord {
  std::string graph;
  int n = 0;
  int m = 0;
  double c_g = 0;
  double c_gbar = 0;
  double sum = 0;
  double product = 0;
  double sum_lower = 0;     // n(n-1)(n-4)/8
  double sum_upper = 0;     // n(n-1)(n-4)/4, strict
  double product_upper = 0; // sum_lower squared, strict
  bool sum_lower_tight = false;
};

// Graphs whose count of non-adjacent-or-adjacent pairs at resistance 2/n
// exceeds the sharp value (n^2-5n+6)/2 while staying within the stated
// (n^2-5n+8)/2 allowance.
struct PairCountFlag {
  std::string graph;
  int count = 0;
  int sharp = 0;
};

struct CertificationRun {
  std::string mode;  // "exhaustive" | "sampled"
  int n_min = 3;
  int n_max = 0;
  std::vector<int> sizes;  // sampled mode
  int samples_per_n = 0;
  double edge_probability = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  double tight_tolerance = 1e-7;
  std::int64_t graphs_checked = 0;
  std::int64_t checks_performed = 0;
  std::int64_t ng_checked = 0;
  double ng_max_sum_ratio = 0;  // max of sum / strict upper bound
  std::int64_t degree_bound_tree_tight = 0;  // stars: tight without the complete-graph condition
  std::vector<Violation> violations;
  std::map<std::string, std::vector<std::string>> tight_witnesses;
  std::vector<NordhausGaddumRecord> ng_records;  // sum-lower-tight cases
  std::vector<PairCountFlag> pair_count_flags;
};

// Complement-pair record with bound values; requires n >= 5 and both g and
// its complement connected.
NordhausGaddumRecord nordhaus_gaddum(const Graph& g, const Tolerances& tol = {});

// Runs the full check battery over every connected graph on 3..n_max
// vertices (n_max <= 7): cyclicity sign and tree-zero, Foster sum, every
// bound with bidirectional tightness conditions, per-edge adjacent
// resistance bound with its equality condition, cut-edge and 2/n pair-count
// lemmas, per-non-edge addition delta against a fresh solve (n <= 6), strict
// monotonicity, and the complement-pair bounds where defined.
CertificationRun certify_exhaustive(int n_max, const Tolerances& tol = {});

// Same battery over random connected samples (delta sweep still n <= 6 only,
// equality conditions enforced one-directionally above n = 7).
CertificationRun certify_sampled(const std::vector<int>& sizes, int samples_per_n,
                                 double edge_probability, std::uint64_t seed,
                                 const Tolerances& tol = {});

std::string to_certrun(const CertificationRun& run);
CertificationRun parse_certrun(const std::string& text);  // CorruptRun on bad input

// Re-derives every recorded violation, witness, complement-pair record and
// pair-count flag from its stored graph; true when everything matches the
// recomputation exactly.
bool replay(const CertificationRun& run);

}  // namespace cyclicity
