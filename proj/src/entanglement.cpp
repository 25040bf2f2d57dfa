#include "nisq/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nisq/random.hpp"

namespace nisq {

namespace {

long pack_bits(long full, const std::vector<int>& qubits, int n) {
  long packed = 0;
  const int k = static_cast<int>(qubits.size());
  for (int i = 0; i < k; ++i) {
    const int pos = n - 1 - qubits[i];
    if ((full >> pos) & 1) packed |= 1L << (k - 1 - i);
  }
  return packed;
}

}  // namespace

MatrixX embed_product(const MatrixX& factor_a, const MatrixX& factor_b, const Bipartition& part) {
  const int n = part.n;
  const std::vector<int> side_b = part.complement();
  const long d = 1L << n;
  MatrixX out(d, d);
  for (long r = 0; r < d; ++r) {
    const long ra = pack_bits(r, part.a, n);
    const long rb = pack_bits(r, side_b, n);
    for (long c = 0; c < d; ++c) {
      const long ca = pack_bits(c, part.a, n);
      const long cb = pack_bits(c, side_b, n);
      out(r, c) = factor_a(ra, ca) * factor_b(rb, cb);
    }
  }
  return out;
}

SeparableWitness assemble_witness(const Bipartition& part, std::vector<SeparableComponent> components) {
  SeparableWitness w;
  w.part = part;
  const long d = 1L << part.n;
  w.assembled = MatrixX::Zero(d, d);
  for (const auto& comp : components)
    w.assembled += comp.weight * embed_product(comp.factor_a, comp.factor_b, part);
  w.components = std::move(components);
  return w;
}

double witness_assembly_error(const SeparableWitness& witness) {
  const long d = 1L << witness.part.n;
  MatrixX sum = MatrixX::Zero(d, d);
  for (const auto& comp : witness.components)
    sum += comp.weight * embed_product(comp.factor_a, comp.factor_b, witness.part);
  return (sum - witness.assembled).cwiseAbs().maxCoeff();
}

double entanglement_entropy_pure(const DensityMatrix& state, const Bipartition& part) {
  if (part.n != state.n) throw std::invalid_argument("bipartition does not match state size");
  const Eigen::VectorXd w = clamped_spectrum(state);
  if (w.maxCoeff() < 1.0 - 1e-8)
    throw std::invalid_argument("entanglement_entropy_pure needs a pure input");
  return von_neumann_entropy(partial_trace(state, part.a));
}

double er_upper_via_max_mixed(const DensityMatrix& state) { return distance_to_max_mixed(state); }

namespace {

struct SearchSpace {
  long da = 0, db = 0;
  int k = 0;

  int params_per_component() const { return static_cast<int>(2 * da + 2 * db) + 1; }
  int total_params() const { return k * params_per_component(); }
};

// components from the flat parameter vector: softmax weights, normalized
// outer-product factors
std::vector<SeparableComponent> decode(const SearchSpace& space, const std::vector<double>& theta) {
  std::vector<double> logits(space.k);
  std::vector<Eigen::VectorXcd> avecs(space.k), bvecs(space.k);
  int at = 0;
  for (int i = 0; i < space.k; ++i) {
    Eigen::VectorXcd a(space.da), b(space.db);
    for (long j = 0; j < space.da; ++j) {
      a(j) = Complex(theta[at], theta[at + 1]);
      at += 2;
    }
    for (long j = 0; j < space.db; ++j) {
      b(j) = Complex(theta[at], theta[at + 1]);
      at += 2;
    }
    logits[i] = theta[at++];
    if (a.norm() < 1e-12) a(0) = 1.0;
    if (b.norm() < 1e-12) b(0) = 1.0;
    avecs[i] = a / a.norm();
    bvecs[i] = b / b.norm();
  }
  const double max_logit = *std::max_element(logits.begin(), logits.end());
  double total = 0;
  std::vector<double> weights(space.k);
  for (int i = 0; i < space.k; ++i) {
    weights[i] = std::exp(logits[i] - max_logit);
    total += weights[i];
  }
  std::vector<SeparableComponent> components(space.k);
  for (int i = 0; i < space.k; ++i) {
    components[i].weight = weights[i] / total;
    components[i].factor_a = avecs[i] * avecs[i].adjoint();
    components[i].factor_b = bvecs[i] * bvecs[i].adjoint();
  }
  return components;
}

double objective(const DensityMatrix& rho, const Bipartition& part, const SearchSpace& space,
                 const std::vector<double>& theta) {
  DensityMatrix sigma;
  sigma.n = part.n;
  sigma.mat = MatrixX::Zero(rho.dim(), rho.dim());
  for (const auto& comp : decode(space, theta))
    sigma.mat += comp.weight * embed_product(comp.factor_a, comp.factor_b, part);
  return relative_entropy(rho, sigma);
}

}  // namespace

ErSearchResult er_upper_via_search(const DensityMatrix& state, const Bipartition& part,
                                   const ErSearchConfig& config) {
  if (part.n != state.n) throw std::invalid_argument("bipartition does not match state size");
  if (state.n > 6) throw std::invalid_argument("er_upper_via_search caps at 6 qubits");

  const std::vector<int> side_b = part.complement();
  SearchSpace space;
  space.da = 1L << part.size_a();
  space.db = 1L << part.size_b();
  const int min_side = std::min(part.size_a(), part.size_b());
  space.k = config.components > 0 ? config.components : (1 << (2 * min_side));

  ErSearchResult best;
  best.bound = std::numeric_limits<double>::infinity();
  auto consider = [&](double bound, SeparableWitness witness) {
    if (bound < best.bound) {
      best.bound = bound;
      best.witness = std::move(witness);
    }
  };

  // maximally mixed candidate: keeps the result at or below D(rho || I/2^n)
  {
    SeparableComponent comp;
    comp.weight = 1.0;
    comp.factor_a = MatrixX::Identity(space.da, space.da) / static_cast<double>(space.da);
    comp.factor_b = MatrixX::Identity(space.db, space.db) / static_cast<double>(space.db);
    consider(er_upper_via_max_mixed(state), assemble_witness(part, {comp}));
  }
  // dephased input: a basis-diagonal mixture, optimal for maximally
  // correlated states
  {
    std::vector<SeparableComponent> comps;
    for (long x = 0; x < state.dim(); ++x) {
      const double w = std::real(state.mat(x, x));
      if (w <= 1e-15) continue;
      SeparableComponent comp;
      comp.weight = w;
      Eigen::VectorXcd ea = Eigen::VectorXcd::Zero(space.da);
      Eigen::VectorXcd eb = Eigen::VectorXcd::Zero(space.db);
      ea(pack_bits(x, part.a, state.n)) = 1.0;
      eb(pack_bits(x, side_b, state.n)) = 1.0;
      comp.factor_a = ea * ea.adjoint();
      comp.factor_b = eb * eb.adjoint();
      comps.push_back(std::move(comp));
    }
    double total = 0;
    for (auto& c : comps) total += c.weight;
    for (auto& c : comps) c.weight /= total;
    SeparableWitness witness = assemble_witness(part, std::move(comps));
    DensityMatrix sigma;
    sigma.n = state.n;
    sigma.mat = witness.assembled;
    consider(relative_entropy(state, sigma), std::move(witness));
  }
  // product of marginals: exact for product inputs, D = I(A:B)
  {
    SeparableComponent comp;
    comp.weight = 1.0;
    comp.factor_a = partial_trace(state, part.a).mat;
    comp.factor_b = partial_trace(state, side_b).mat;
    SeparableWitness witness = assemble_witness(part, {comp});
    DensityMatrix sigma;
    sigma.n = state.n;
    sigma.mat = witness.assembled;
    consider(relative_entropy(state, sigma), std::move(witness));
  }

  // coordinate refinement over restarts, step halving on stalled sweeps
  for (int restart = 0; restart < config.restarts; ++restart) {
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(restart)));
    std::vector<double> theta(space.total_params());
    for (auto& v : theta) v = rng.gaussian() * 0.5;

    double value = objective(state, part, space, theta);
    double step = 0.2;
    for (int iter = 0; iter < config.iterations && step > 1e-8; ++iter) {
      bool improved = false;
      for (size_t j = 0; j < theta.size(); ++j) {
        const double original = theta[j];
        for (const double delta : {step, -step}) {
          theta[j] = original + delta;
          const double candidate = objective(state, part, space, theta);
          if (candidate < value) {
            value = candidate;
            improved = true;
            break;
          }
          theta[j] = original;
        }
      }
      if (!improved) step *= 0.5;
    }
    if (value < best.bound) {
      SeparableWitness witness = assemble_witness(part, decode(space, theta));
      consider(value, std::move(witness));
    }
  }
  return best;
}

}  // namespace nisq
