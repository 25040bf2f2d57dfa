#include "nisq/hybrid.hpp"

#include <cmath>
#include <stdexcept>

#include "nisq/random.hpp"

namespace nisq {

namespace {
constexpr double kLn2 = 0.69314718055994530942;

Circuit brickwork_cnot_circuit(int n, int depth) {
  Circuit circuit;
  circuit.topology = Topology::chain(n);
  for (int t = 0; t < depth; ++t) {
    GateLayer layer;
    for (int q = t % 2; q + 1 < n; q += 2) layer.gates.push_back(Gate::from_name("CNOT", q, q + 1));
    circuit.layers.push_back(std::move(layer));
  }
  return circuit;
}

Circuit empty_circuit(int n, int depth) {
  Circuit circuit;
  circuit.topology = Topology::chain(n);
  circuit.layers.resize(depth);
  return circuit;
}

int transcript_parity(std::uint64_t outcome) { return __builtin_popcountll(outcome) & 1; }

}  // namespace

int Scenario::total_bits() const {
  int total = 0;
  for (int i = 0; i < rounds(); ++i) total += width(i);
  return total;
}

TranscriptLaw run_exact(const Scenario& scenario, NoiseStrength p, int bit_cap) {
  const int q = scenario.rounds();
  if (q < 1) throw std::invalid_argument("scenario needs at least one round");
  TranscriptLaw law;
  int total = 0;
  for (int i = 0; i < q; ++i) {
    law.widths.push_back(scenario.width(i));
    total += scenario.width(i);
  }
  if (total > bit_cap)
    throw qubit_cap_error("transcript has " + std::to_string(total) + " bits, cap is " +
                          std::to_string(bit_cap));
  law.joint.n = total;
  law.joint.probs = Eigen::VectorXd::Zero(1L << total);
  law.output_law.setZero();

  Transcript prefix;
  auto recurse = [&](auto&& self, int round, std::uint64_t index, double prob) -> void {
    if (round == q) {
      law.joint.probs(index) += prob;
      law.output_law(scenario.decide(prefix)) += prob;
      return;
    }
    const RoundRequest request = scenario.request(round, prefix);
    const int w = scenario.width(round);
    if (request.circuit.num_qubits() != w)
      throw std::invalid_argument("scenario requested a circuit of the wrong width");
    const ValidationReport report = validate_circuit(request.circuit);
    if (!report.ok())
      throw std::invalid_argument("scenario requested an invalid circuit: " + report.summary());
    const NoiseStrength noise =
        request.noise_override >= 0 ? NoiseStrength(request.noise_override) : p;
    const OutcomeDistribution dist =
        output_distribution(evolve(request.circuit, noise).final_state);
    for (long x = 0; x < dist.size(); ++x) {
      if (dist.probs(x) == 0) continue;
      prefix.push_back(static_cast<std::uint64_t>(x));
      self(self, round + 1, (index << w) | static_cast<std::uint64_t>(x), prob * dist.probs(x));
      prefix.pop_back();
    }
  };
  recurse(recurse, 0, 0, 1.0);
  return law;
}

JointEntropyCheck joint_entropy_check(const Scenario& scenario, NoiseStrength p, int t) {
  if (scenario.declared_depth() < t)
    throw std::invalid_argument("scenario depth " + std::to_string(scenario.declared_depth()) +
                                " is below the requested t=" + std::to_string(t));
  const TranscriptLaw law = run_exact(scenario, p);
  JointEntropyCheck check;
  check.s_joint = shannon_entropy(law.joint);
  check.lower_bound = (1.0 - std::pow(1.0 - p.p, t)) * scenario.total_bits();
  check.pass = check.s_joint >= check.lower_bound - 1e-7;
  return check;
}

TranscriptLaw coin_replace(const TranscriptLaw& law, const Scenario& scenario) {
  TranscriptLaw replaced;
  replaced.widths = law.widths;
  const int total = law.joint.n;
  replaced.joint = OutcomeDistribution::uniform(total);
  replaced.output_law.setZero();
  const double mass = 1.0 / static_cast<double>(1L << total);
  Transcript transcript(law.widths.size());
  for (long y = 0; y < (1L << total); ++y) {
    std::uint64_t rest = static_cast<std::uint64_t>(y);
    for (int i = static_cast<int>(law.widths.size()) - 1; i >= 0; --i) {
      transcript[i] = rest & ((1ULL << law.widths[i]) - 1);
      rest >>= law.widths[i];
    }
    replaced.output_law(scenario.decide(transcript)) += mass;
  }
  return replaced;
}

ReplacementGap replacement_gap(const Scenario& scenario, NoiseStrength p) {
  const TranscriptLaw law = run_exact(scenario, p);
  const TranscriptLaw replaced = coin_replace(law, scenario);
  ReplacementGap gap;
  gap.s_joint = shannon_entropy(law.joint);
  gap.kl_bits = kl_divergence(law.joint, OutcomeDistribution::uniform(law.joint.n), LogBase::bits);
  gap.kl_nats = gap.kl_bits * kLn2;
  const double identity_route = scenario.total_bits() - gap.s_joint;
  if (std::abs(gap.kl_bits - identity_route) > 1e-9)
    throw std::runtime_error("divergence routes disagree: direct KL vs total bits - S(joint)");
  gap.one_norm = std::abs(law.output_law(0) - replaced.output_law(0)) +
                 std::abs(law.output_law(1) - replaced.output_law(1));
  gap.pinsker_rhs = std::sqrt(2.0 * gap.kl_nats);
  if (gap.one_norm > gap.pinsker_rhs + 1e-9)
    throw std::runtime_error("output gap exceeds the Pinsker bound; data processing is broken");
  return gap;
}

double majority_amplify(double base_correct_prob, int reps) {
  if (!(base_correct_prob > 0.5 && base_correct_prob <= 1.0))
    throw std::invalid_argument("base probability must lie in (0.5, 1]");
  if (reps < 1 || reps % 2 == 0) throw std::invalid_argument("reps must be odd and positive");
  if (base_correct_prob == 1.0) return 1.0;
  const double lq = std::log(base_correct_prob);
  const double lr = std::log1p(-base_correct_prob);
  double tail = 0;
  for (int k = reps / 2 + 1; k <= reps; ++k) {
    const double log_comb =
        std::lgamma(reps + 1.0) - std::lgamma(k + 1.0) - std::lgamma(reps - k + 1.0);
    tail += std::exp(log_comb + k * lq + (reps - k) * lr);
  }
  return std::min(tail, 1.0);
}

int majority_reps_needed(double base_correct_prob, double target) {
  if (!(target > 0 && target < 1)) throw std::invalid_argument("target must lie in (0, 1)");
  for (int reps = 1; reps < 2'000'001; reps += 2)
    if (majority_amplify(base_correct_prob, reps) >= target) return reps;
  throw std::runtime_error("amplification target not reached within 2e6 repetitions");
}

void verify_factor_oracle_answers(const std::vector<std::pair<std::uint64_t, bool>>& answers) {
  for (const auto& [k1, a1] : answers)
    for (const auto& [k2, a2] : answers)
      if (a1 && !a2 && k2 > k1)
        throw std::runtime_error("oracle is inconsistent: yes at " + std::to_string(k1) +
                                 " but no at " + std::to_string(k2));
}

FactorSearchResult smallest_factor_via_decision(std::uint64_t n, const FactorOracle& oracle) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  FactorSearchResult result;
  auto ask = [&](std::uint64_t k) {
    const bool ans = oracle(n, k);
    ++result.oracle_calls;
    result.answers.emplace_back(k, ans);
    return ans;
  };
  // smallest k in [3, n] with "a non-trivial factor below k exists"
  std::uint64_t lo = 3, hi = n;
  bool found = false;
  if (n >= 3) {
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (ask(mid)) {
        hi = mid;
        found = true;
      } else {
        lo = mid + 1;
      }
    }
    if (!found) found = ask(lo);
  }
  verify_factor_oracle_answers(result.answers);
  if (found) result.factor = lo - 1;
  return result;
}

// ---- built-in scenarios -----------------------------------------------------

namespace {

class ParityScenario final : public Scenario {
 public:
  ParityScenario(std::vector<int> widths, int depth) : widths_(std::move(widths)), depth_(depth) {
    if (widths_.empty() || depth_ < 1) throw std::invalid_argument("parity scenario needs rounds and depth >= 1");
  }
  int rounds() const override { return static_cast<int>(widths_.size()); }
  int width(int round) const override { return widths_.at(round); }
  RoundRequest request(int round, const Transcript&) const override {
    return {brickwork_cnot_circuit(widths_.at(round), depth_), -1};
  }
  int decide(const Transcript& transcript) const override { return transcript_parity(transcript.at(0)); }
  int declared_depth() const override { return depth_; }

 private:
  std::vector<int> widths_;
  int depth_;
};

class AdaptiveCopyScenario final : public Scenario {
 public:
  AdaptiveCopyScenario(int width, int depth) : width_(width), depth_(depth) {
    if (width_ < 2 || width_ % 2 != 0)
      throw std::invalid_argument("adaptive-copy needs an even width >= 2");
    if (depth_ < 1) throw std::invalid_argument("depth must be >= 1");
  }
  int rounds() const override { return 2; }
  int width(int) const override { return width_; }
  RoundRequest request(int round, const Transcript& prior) const override {
    Circuit circuit = empty_circuit(width_, depth_);
    if (round == 0) {
      // spread every qubit with H (x) H before the padding layers
      GateLayer layer;
      const Matrix4 hh = gates::kron2(gates::hadamard(), gates::hadamard());
      for (int q = 0; q + 1 < width_; q += 2) layer.gates.push_back(Gate::from_matrix(hh, q, q + 1));
      circuit.layers[0] = std::move(layer);
    } else {
      // reproduce round 1's outcome with conditional bit flips
      const std::uint64_t x = prior.at(0);
      GateLayer layer;
      for (int q = 0; q + 1 < width_; q += 2) {
        const bool f0 = (x >> (width_ - 1 - q)) & 1;
        const bool f1 = (x >> (width_ - 2 - q)) & 1;
        if (!f0 && !f1) continue;
        const Matrix2 u = f0 ? gates::pauli_x() : gates::identity2();
        const Matrix2 v = f1 ? gates::pauli_x() : gates::identity2();
        layer.gates.push_back(Gate::from_matrix(gates::kron2(u, v), q, q + 1));
      }
      circuit.layers[0] = std::move(layer);
    }
    return {std::move(circuit), -1};
  }
  int decide(const Transcript& transcript) const override { return transcript_parity(transcript.at(1)); }
  int declared_depth() const override { return depth_; }

 private:
  int width_;
  int depth_;
};

class CoinPadScenario final : public Scenario {
 public:
  CoinPadScenario(std::vector<int> widths, int depth, int pad_bits)
      : device_(std::move(widths), depth), pad_bits_(pad_bits) {
    if (pad_bits_ < 1) throw std::invalid_argument("coin-pad needs pad bits >= 1");
  }
  int rounds() const override { return device_.rounds() + 1; }
  int width(int round) const override {
    return round < device_.rounds() ? device_.width(round) : pad_bits_;
  }
  RoundRequest request(int round, const Transcript& prior) const override {
    if (round < device_.rounds()) return device_.request(round, prior);
    // explicit classical randomness: one fully depolarized layer
    return {empty_circuit(pad_bits_, 1), 1.0};
  }
  int decide(const Transcript& transcript) const override { return device_.decide(transcript); }
  int declared_depth() const override { return device_.declared_depth(); }

 private:
  ParityScenario device_;
  int pad_bits_;
};

class RandomAdaptiveScenario final : public Scenario {
 public:
  RandomAdaptiveScenario(std::uint64_t seed, std::vector<int> widths, int depth)
      : seed_(seed), widths_(std::move(widths)), depth_(depth) {
    if (widths_.empty() || depth_ < 1) throw std::invalid_argument("scenario needs rounds and depth >= 1");
  }
  int rounds() const override { return static_cast<int>(widths_.size()); }
  int width(int round) const override { return widths_.at(round); }
  RoundRequest request(int round, const Transcript& prior) const override {
    std::uint64_t h = derive_seed(seed_, static_cast<std::uint64_t>(round));
    for (std::uint64_t outcome : prior) h = derive_seed(h, outcome + 1);
    return {random_chain_circuit(widths_.at(round), depth_, h), -1};
  }
  int decide(const Transcript& transcript) const override {
    int parity = 0;
    for (std::uint64_t outcome : transcript) parity ^= transcript_parity(outcome);
    return parity;
  }
  int declared_depth() const override { return depth_; }

 private:
  std::uint64_t seed_;
  std::vector<int> widths_;
  int depth_;
};

}  // namespace

std::unique_ptr<Scenario> make_parity_scenario(std::vector<int> widths, int depth) {
  return std::make_unique<ParityScenario>(std::move(widths), depth);
}

std::unique_ptr<Scenario> make_adaptive_copy_scenario(int width, int depth) {
  return std::make_unique<AdaptiveCopyScenario>(width, depth);
}

std::unique_ptr<Scenario> make_coin_pad_scenario(std::vector<int> widths, int depth, int pad_bits) {
  return std::make_unique<CoinPadScenario>(std::move(widths), depth, pad_bits);
}

std::unique_ptr<Scenario> make_random_adaptive_scenario(std::uint64_t seed, std::vector<int> widths,
                                                        int depth) {
  return std::make_unique<RandomAdaptiveScenario>(seed, std::move(widths), depth);
}

}  // namespace nisq
