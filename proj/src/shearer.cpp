#include "nisq/shearer.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "nisq/infotheory.hpp"
#include "nisq/random.hpp"

namespace nisq {

SubsetFamily SubsetFamily::make(int n, std::vector<std::vector<int>> subsets) {
  if (n < 1) throw std::invalid_argument("subset family needs n >= 1");
  SubsetFamily family;
  family.n = n;
  family.coverage.assign(n, 0);
  for (auto& subset : subsets) {
    std::set<int> uniq(subset.begin(), subset.end());
    if (uniq.size() != subset.size()) throw std::invalid_argument("subset contains a duplicate index");
    for (int q : uniq) {
      if (q < 0 || q >= n) throw std::invalid_argument("subset index out of range");
      family.coverage[q] += 1;
    }
    subset.assign(uniq.begin(), uniq.end());
  }
  family.subsets = std::move(subsets);
  return family;
}

SubsetFamily SubsetFamily::all_k_subsets(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("k out of range");
  std::vector<std::vector<int>> subsets;
  std::vector<int> current;
  // lexicographic enumeration
  auto recurse = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == k) {
      subsets.push_back(current);
      return;
    }
    for (int q = start; q < n; ++q) {
      current.push_back(q);
      self(self, q + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return make(n, std::move(subsets));
}

int min_coverage(const SubsetFamily& family) {
  return *std::min_element(family.coverage.begin(), family.coverage.end());
}

double shearer_slack(const DensityMatrix& state, const SubsetFamily& family, int t) {
  if (state.n != family.n) throw std::invalid_argument("state and family sizes differ");
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  if (t > min_coverage(family))
    throw std::invalid_argument("t=" + std::to_string(t) + " exceeds the family's minimum coverage " +
                                std::to_string(min_coverage(family)) +
                                "; the inequality is not guaranteed there");
  double sum = 0;
  for (const auto& subset : family.subsets)
    sum += von_neumann_entropy(partial_trace(state, subset));
  return sum - static_cast<double>(t) * von_neumann_entropy(state);
}

double randomized_shearer_audit(int n, int trials, std::uint64_t seed) {
  if (n < 1 || n > 4) throw std::invalid_argument("audit supports 1 <= n <= 4");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  double worst = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
    const DensityMatrix state = random_density_matrix(n, rng);

    // random family with at least one subset per index so min coverage >= 1
    const int extra = rng.uniform_int(1, 2 * n);
    std::vector<std::vector<int>> subsets;
    for (int q = 0; q < n; ++q) subsets.push_back({q});
    for (int s = 0; s < extra; ++s) {
      std::vector<int> subset;
      for (int q = 0; q < n; ++q)
        if (rng.uniform() < 0.5) subset.push_back(q);
      if (!subset.empty()) subsets.push_back(std::move(subset));
    }
    const SubsetFamily family = SubsetFamily::make(n, std::move(subsets));
    const int t = rng.uniform_int(0, min_coverage(family));
    worst = std::min(worst, shearer_slack(state, family, t));
  }
  return worst;
}

}  // namespace nisq
