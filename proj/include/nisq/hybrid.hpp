#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "nisq/circuit.hpp"
#include "nisq/infotheory.hpp"
#include "nisq/simulator.hpp"

namespace nisq {

/// Transcript of completed rounds: outcome of round i as a basis index over
/// that round's qubits (qubit 0 most significant, matching bitstring order).
using Transcript = std::vector<std::uint64_t>;

struct RoundRequest {
  Circuit circuit;
  // <0: run at the caller's noise strength; otherwise a per-round override
  // (uniform-coin rounds are circuits forced to p = 1).
  double noise_override = -1;
};

/// Deterministic adaptive controller: per round a transcript-dependent circuit
/// request, then a decision bit from the full transcript.
class Scenario {
 public:
  virtual ~Scenario() = default;
  virtual int rounds() const = 0;
  virtual int width(int round) const = 0;  // qubits measured in that round
  virtual RoundRequest request(int round, const Transcript& prior) const = 0;
  virtual int decide(const Transcript& transcript) const = 0;
  // minimum depth every requested circuit is guaranteed to have
  virtual int declared_depth() const = 0;

  int total_bits() const;
};

inline constexpr int kTranscriptBitCap = 20;

struct TranscriptLaw {
  std::vector<int> widths;
  OutcomeDistribution joint;     // law over concatenated (X_1 ... X_q) bitstrings
  Eigen::Vector2d output_law;    // pushforward under the decision map
};

// Exact joint law by transcript-tree enumeration: every branch evolves the
// requested circuit and multiplies its outcome probabilities. Total bits are
// capped (2^bits probabilities are materialized).
TranscriptLaw run_exact(const Scenario& scenario, NoiseStrength p, int bit_cap = kTranscriptBitCap);

struct JointEntropyCheck {
  double s_joint = 0;      // Shannon entropy of the transcript, bits
  double lower_bound = 0;  // (1 - (1-p)^t) * total bits
  bool pass = false;
};

JointEntropyCheck joint_entropy_check(const Scenario& scenario, NoiseStrength p, int t);

// Uniform transcript of the same total length pushed through the same
// decision map; models trading every device call for fair coins.
TranscriptLaw coin_replace(const TranscriptLaw& law, const Scenario& scenario);

struct ReplacementGap {
  double s_joint = 0;
  double kl_bits = 0;      // D(joint || uniform) = total bits - S(joint)
  double kl_nats = 0;
  double one_norm = 0;     // output-law gap against the coin-replaced run
  double pinsker_rhs = 0;  // sqrt(2 * kl_nats)
};

ReplacementGap replacement_gap(const Scenario& scenario, NoiseStrength p);

// Exact probability that an odd-reps majority vote is correct given the
// per-run success probability.
double majority_amplify(double base_correct_prob, int reps);

// first odd reps with majority_amplify >= target
int majority_reps_needed(double base_correct_prob, double target);

using FactorOracle = std::function<bool(std::uint64_t n, std::uint64_t k)>;

struct FactorSearchResult {
  std::optional<std::uint64_t> factor;  // empty: no non-trivial factor (prime)
  int oracle_calls = 0;
  std::vector<std::pair<std::uint64_t, bool>> answers;  // every (k, reply) observed
};

// A monotone oracle can never answer yes below a no; throws when a recorded
// answer set violates that.
void verify_factor_oracle_answers(const std::vector<std::pair<std::uint64_t, bool>>& answers);

// Binary search over "does n have a non-trivial factor below k"; the observed
// answers are audited with verify_factor_oracle_answers and reported back.
FactorSearchResult smallest_factor_via_decision(std::uint64_t n, const FactorOracle& oracle);

// ---- built-in scenarios ----------------------------------------------------

// CNOT-brickwork rounds of equal depth; decision = parity of round 1's bits.
std::unique_ptr<Scenario> make_parity_scenario(std::vector<int> widths, int depth);

// Round 1 spreads each qubit with Hadamards; round 2 copies round 1's outcome
// by conditional X gates. Decision = parity of round 2's bits.
std::unique_ptr<Scenario> make_adaptive_copy_scenario(int width, int depth);

// Parity rounds plus a trailing uniform-coin round (single noise-1 layer),
// modeling explicit classical randomness appended to the transcript.
std::unique_ptr<Scenario> make_coin_pad_scenario(std::vector<int> widths, int depth, int pad_bits);

// Transcript-seeded random chain circuits per round; decision = parity of the
// whole transcript. Deterministic in `seed`.
std::unique_ptr<Scenario> make_random_adaptive_scenario(std::uint64_t seed, std::vector<int> widths,
                                                        int depth);

}  // namespace nisq
