#pragma once

#include <cstdint>
#include <vector>

#include "nisq/density_matrix.hpp"

namespace nisq {

/// Family F of index subsets of {0..n-1} with per-index coverage counts,
/// the combinatorial side of the subset entropy inequality
/// sum_F S(rho_F) >= t S(rho) for t up to the minimum coverage.
struct SubsetFamily {
  int n = 0;
  std::vector<std::vector<int>> subsets;
  std::vector<int> coverage;  // coverage[i] = number of subsets containing i

  // validates ranges, sorts members, precomputes coverage
  static SubsetFamily make(int n, std::vector<std::vector<int>> subsets);
  static SubsetFamily all_k_subsets(int n, int k);
};

// Largest t for which the family qualifies: min_i coverage(i).
int min_coverage(const SubsetFamily& family);

// sum_F S(rho_F) - t S(rho). Refuses t > min_coverage: the inequality is not
// guaranteed there and a vacuous pass would mislead.
double shearer_slack(const DensityMatrix& state, const SubsetFamily& family, int t);

// Worst slack over `trials` random (state, qualifying family, t) instances;
// per-trial seeds are counter-split from the master seed.
double randomized_shearer_audit(int n, int trials, std::uint64_t seed);

}  // namespace nisq
