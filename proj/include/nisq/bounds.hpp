#pragma once

#include <string>
#include <vector>

namespace nisq {

// n (1-p)^t, the information remaining after t noisy layers, in bits
double decay_bound(int n, double p, int t);

// Greatest integer t >= 0 with n (1-p)^t >= t, by ascending scan.
int t_star_1d(int n, double p);

// Chain bound: log2(n) / (-log2(1-p)) when n > 1/(1-p), else 1.
double ent_bound_1d(int n, double p);

struct EntBound2d {
  double value = 0;
  // The closed form is certified only for n > (3/(1-p))^2; below the
  // threshold the value is still reported but flagged.
  bool certified = false;
};

// Square-lattice bound B*2*sqrt(n) + B^2 with B = (log2(n)/2 - 1)/(-log2(1-p));
// n must be a perfect square >= 4.
EntBound2d ent_bound_2d(int n, double p);

struct CurvePoint {
  int n = 0;
  double p = 0;
  std::string topology;  // "chain" or "grid"
  double bound = 0;
  double curve_value = 0;  // min(n/2, bound)
};

enum class CurveTopology { chain, grid };

// One row per n: the lattice bound capped at n/2 (grid rows only for perfect
// squares). Monotone nondecreasing in n.
std::vector<CurvePoint> fig_curve(const std::vector<int>& n_list, double p, CurveTopology topology);

// header n,p,topology,bound,curve_value; 12 significant digits; byte-stable
std::string curve_csv(const std::vector<CurvePoint>& points);

std::string format_sig12(double v);

enum class ThresholdVariant { thmC1, thmC2 };

// Depth beyond which a T-step algorithm's noisy-device outputs can be traded
// for fair coins: (log2 T + 5) / (-log2(1-p)) for thmC1 and half that for
// thmC2. Only the thmC1 depth forces T (1-p)^t <= 1/32; the thmC2 constants
// guarantee T (1-p)^{2t} <= 1/32 instead.
double advantage_depth_threshold(double T, double p, ThresholdVariant variant);

struct DeviceSpec {
  double t1 = 0;  // coherence time, seconds
  double tg = 0;  // two-qubit gate duration, seconds
  std::string label;
};

struct NoiseEstimate {
  double p = 0;          // tg/t1 clamped to [0, 1]
  double raw_ratio = 0;  // unclamped tg/t1
  bool unit_warning = false;  // ratio > 1: the inputs cannot both be in seconds
};

NoiseEstimate estimate_p(const DeviceSpec& spec);

// one significant figure, e.g. 1.049e-3 -> 1e-3
double round_to_one_sig_fig(double v);

}  // namespace nisq
