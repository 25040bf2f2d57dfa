#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nisq/infotheory.hpp"
#include "nisq/random.hpp"
#include "nisq/shearer.hpp"
#include "test_support.hpp"

using namespace nisq;
using namespace nisq::testing;

namespace {
long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}
}  // namespace

TEST_CASE("min coverage counts each element's membership") {
  const SubsetFamily f = SubsetFamily::make(2, {{0}, {1}});
  CHECK(min_coverage(f) == 1);
}

TEST_CASE("all-k-subset families cover each index binom(n-1, k-1) times") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      const SubsetFamily f = SubsetFamily::all_k_subsets(n, k);
      CHECK(static_cast<long>(f.subsets.size()) == binomial(n, k));
      CHECK(min_coverage(f) == binomial(n - 1, k - 1));
    }
}

TEST_CASE("uncovered elements drop the coverage to zero") {
  const SubsetFamily f = SubsetFamily::make(3, {{0, 1}});
  CHECK(min_coverage(f) == 0);
}

TEST_CASE("families reject out-of-range or duplicate members") {
  CHECK_THROWS_AS(SubsetFamily::make(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SubsetFamily::make(2, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("product pure state has zero slack at full coverage") {
  const DensityMatrix s = DensityMatrix::zero_state(3);
  const SubsetFamily f = SubsetFamily::make(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(shearer_slack(s, f, min_coverage(f)) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("maximally mixed state saturates the all-k-subset inequality") {
  // sum_F S = C(n,k) k and t S = C(n-1,k-1) n agree exactly
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      const DensityMatrix s = DensityMatrix::maximally_mixed(n);
      const SubsetFamily f = SubsetFamily::all_k_subsets(n, k);
      const long direct = binomial(n, k) * k - binomial(n - 1, k - 1) * n;
      CHECK(direct == 0);
      CHECK(shearer_slack(s, f, binomial(n - 1, k - 1)) == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("Bell state slack over singleton subsets is two bits") {
  const SubsetFamily f = SubsetFamily::make(2, {{0}, {1}});
  CHECK(shearer_slack(bell_state(), f, 1) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("a single-set family at t=1 has zero slack") {
  const DensityMatrix s = random_density_matrix(1, 21u);
  const SubsetFamily f = SubsetFamily::make(1, {{0}});
  CHECK(shearer_slack(s, f, 1) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("slack is refused above the minimum coverage") {
  const SubsetFamily f = SubsetFamily::make(2, {{0}, {1}});
  CHECK_THROWS_AS(shearer_slack(bell_state(), f, 2), std::invalid_argument);
}

TEST_CASE("lowering t adds one global entropy to the slack") {
  Rng rng(22u);
  const DensityMatrix s = random_density_matrix(3, rng);
  const SubsetFamily f = SubsetFamily::all_k_subsets(3, 2);
  const int t = min_coverage(f);
  const double s_global = von_neumann_entropy(s);
  CHECK(shearer_slack(s, f, t - 1) ==
        doctest::Approx(shearer_slack(s, f, t) + s_global).epsilon(1e-9));
  CHECK(shearer_slack(s, f, t - 1) >= shearer_slack(s, f, t) - 1e-12);
}

TEST_CASE("strong subadditivity on three qubits") {
  Rng rng(23u);
  for (int trial = 0; trial < 25; ++trial) {
    const DensityMatrix s = random_density_matrix(3, rng);
    const double lhs = von_neumann_entropy(partial_trace(s, {0, 1})) +
                       von_neumann_entropy(partial_trace(s, {1, 2}));
    const double rhs = von_neumann_entropy(s) + von_neumann_entropy(partial_trace(s, {1}));
    CHECK(lhs >= rhs - 1e-7);
  }
}

TEST_CASE("all two-subsets of three qubits stay nonnegative at t=2") {
  Rng rng(24u);
  const SubsetFamily f = SubsetFamily::all_k_subsets(3, 2);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(shearer_slack(random_density_matrix(3, rng), f, 2) >= -1e-7);
}

TEST_CASE("randomized audit never finds negative slack") {
  CHECK(randomized_shearer_audit(2, 500, 42u) >= -1e-7);
  CHECK(randomized_shearer_audit(3, 100, 43u) >= -1e-7);
  CHECK(randomized_shearer_audit(4, 50, 44u) >= -1e-7);
}

TEST_CASE("the audit is deterministic in its seed") {
  CHECK(randomized_shearer_audit(3, 40, 7u) == randomized_shearer_audit(3, 40, 7u));
}
