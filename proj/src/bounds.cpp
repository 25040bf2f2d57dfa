#include "nisq/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace nisq {

double decay_bound(int n, double p, int t) {
  if (n < 1 || t < 0 || p < 0 || p > 1) throw std::invalid_argument("decay_bound: bad arguments");
  return static_cast<double>(n) * std::pow(1.0 - p, t);
}

int t_star_1d(int n, double p) {
  if (n < 1 || !(p > 0 && p < 1)) throw std::invalid_argument("t_star_1d needs n >= 1, 0 < p < 1");
  int t = 0;
  while (static_cast<double>(n) * std::pow(1.0 - p, t + 1) >= static_cast<double>(t + 1)) ++t;
  return t;
}

double ent_bound_1d(int n, double p) {
  if (n < 2 || !(p > 0 && p < 1)) throw std::invalid_argument("ent_bound_1d needs n >= 2, 0 < p < 1");
  if (static_cast<double>(n) > 1.0 / (1.0 - p)) return std::log2(n) / (-std::log2(1.0 - p));
  return 1.0;
}

EntBound2d ent_bound_2d(int n, double p) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("ent_bound_2d needs 0 < p < 1");
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (n < 4 || side * side != n) throw std::invalid_argument("ent_bound_2d needs a perfect square n >= 4");
  const double b = (0.5 * std::log2(n) - 1.0) / (-std::log2(1.0 - p));
  const double threshold = 3.0 / (1.0 - p);
  EntBound2d out;
  out.value = b * 2.0 * side + b * b;
  out.certified = static_cast<double>(n) > threshold * threshold;
  return out;
}

std::vector<CurvePoint> fig_curve(const std::vector<int>& n_list, double p, CurveTopology topology) {
  std::vector<CurvePoint> points;
  for (int n : n_list) {
    CurvePoint pt;
    pt.n = n;
    pt.p = p;
    if (topology == CurveTopology::chain) {
      pt.topology = "chain";
      pt.bound = ent_bound_1d(n, p);
    } else {
      const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
      if (n < 4 || side * side != n) continue;  // grid rows exist only at perfect squares
      pt.topology = "grid";
      pt.bound = ent_bound_2d(n, p).value;
    }
    pt.curve_value = std::min(static_cast<double>(n) / 2.0, pt.bound);
    points.push_back(pt);
  }
  return points;
}

std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string curve_csv(const std::vector<CurvePoint>& points) {
  std::ostringstream os;
  os << "n,p,topology,bound,curve_value\n";
  for (const auto& pt : points)
    os << pt.n << "," << format_sig12(pt.p) << "," << pt.topology << "," << format_sig12(pt.bound)
       << "," << format_sig12(pt.curve_value) << "\n";
  return os.str();
}

double advantage_depth_threshold(double T, double p, ThresholdVariant variant) {
  if (!(T >= 1) || !(p > 0 && p < 1))
    throw std::invalid_argument("advantage_depth_threshold needs T >= 1, 0 < p < 1");
  const double L = -std::log2(1.0 - p);
  if (variant == ThresholdVariant::thmC1) return std::log2(T) / L + 5.0 / L;
  return std::log2(T) / (2.0 * L) + 5.0 / (2.0 * L);
}

NoiseEstimate estimate_p(const DeviceSpec& spec) {
  if (!(spec.t1 > 0) || !(spec.tg > 0)) throw std::invalid_argument("device times must be positive");
  NoiseEstimate est;
  est.raw_ratio = spec.tg / spec.t1;
  est.unit_warning = est.raw_ratio > 1.0;
  est.p = std::clamp(est.raw_ratio, 0.0, 1.0);
  return est;
}

double round_to_one_sig_fig(double v) {
  if (v == 0) return 0;
  const double mag = std::pow(10.0, std::floor(std::log10(std::abs(v))));
  return std::round(v / mag) * mag;
}

}  // namespace nisq
