#include "wflow/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wflow {

ActionGrid make_grid(double lo, double hi, std::size_t n) {
  if (!(hi > lo)) throw std::invalid_argument("make_grid: hi must exceed lo");
  if (n < 2) throw std::invalid_argument("make_grid: need at least 2 cells, got " + std::to_string(n));
  ActionGrid g;
  g.lo = lo;
  g.hi = hi;
  g.n = n;
  g.h = (hi - lo) / static_cast<double>(n);
  g.centers.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    g.centers[i] = lo + (static_cast<double>(i) + 0.5) * g.h;
  return g;
}

DiscreteMeasure::DiscreteMeasure(ActionGrid g, std::vector<double> weights)
    : grid(std::move(g)), w(std::move(weights)) {
  if (w.size() != grid.n) throw std::invalid_argument("DiscreteMeasure: weight/grid size mismatch");
  double sum = 0.0;
  for (double x : w) {
    if (!(x >= 0.0)) throw std::invalid_argument("DiscreteMeasure: negative or NaN weight");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("DiscreteMeasure: mass " + std::to_string(sum) + " != 1");
}

DiscreteMeasure DiscreteMeasure::normalized(ActionGrid g, std::vector<double> weights) {
  double sum = 0.0;
  for (double x : weights) {
    if (!(x >= 0.0)) throw std::invalid_argument("DiscreteMeasure: negative or NaN weight");
    sum += x;
  }
  if (sum <= 0.0) throw std::invalid_argument("DiscreteMeasure: zero total mass");
  for (double& x : weights) x /= sum;
  return DiscreteMeasure(std::move(g), std::move(weights));
}

DiscreteMeasure DiscreteMeasure::uniform(const ActionGrid& g) {
  return DiscreteMeasure(g, std::vector<double>(g.n, 1.0 / static_cast<double>(g.n)));
}

DiscreteMeasure DiscreteMeasure::point_mass(const ActionGrid& g, std::size_t cell) {
  if (cell >= g.n) throw std::invalid_argument("point_mass: cell out of range");
  std::vector<double> w(g.n, 0.0);
  w[cell] = 1.0;
  return DiscreteMeasure(g, std::move(w));
}

bool DiscreteMeasure::strictly_positive() const {
  return std::all_of(w.begin(), w.end(), [](double x) { return x > 0.0; });
}

RewardField::RewardField(ActionGrid g, std::vector<double> values)
    : grid(std::move(g)), r(std::move(values)) {
  if (r.size() != grid.n) throw std::invalid_argument("RewardField: value/grid size mismatch");
  for (double x : r)
    if (!std::isfinite(x)) throw std::invalid_argument("RewardField: non-finite reward value");
}

namespace {
void require_same_grid(const ActionGrid& a, const ActionGrid& b, const char* who) {
  if (!a.same_as(b)) throw std::invalid_argument(std::string(who) + ": grid mismatch");
}
void require_beta(double beta, const char* who) {
  if (!(beta > 0.0)) throw std::invalid_argument(std::string(who) + ": beta must be positive");
}
}  // namespace

DiscreteMeasure gibbs_policy(const RewardField& r, double beta) {
  require_beta(beta, "gibbs_policy");
  const std::size_t n = r.grid.n;
  double m = -std::numeric_limits<double>::infinity();
  for (double x : r.r) m = std::max(m, x / beta);
  std::vector<double> w(n);
  double z = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::exp(r.r[i] / beta - m);
    z += w[i];
  }
  for (double& x : w) x /= z;
  return DiscreteMeasure(r.grid, std::move(w));
}

double expected_reward(const DiscreteMeasure& pi, const RewardField& r) {
  require_same_grid(pi.grid, r.grid, "expected_reward");
  double s = 0.0;
  for (std::size_t i = 0; i < pi.grid.n; ++i) s += pi.w[i] * r.r[i];
  return s;
}

double entropy(const DiscreteMeasure& pi) {
  const double h = pi.grid.h;
  double s = 0.0;
  for (double wi : pi.w)
    if (wi > 0.0) s += wi * std::log(wi / h);
  return s;
}

FreeEnergyBreakdown free_energy(const DiscreteMeasure& pi, const RewardField& r, double beta) {
  require_beta(beta, "free_energy");
  FreeEnergyBreakdown out;
  out.expected_reward = expected_reward(pi, r);
  out.entropy = entropy(pi);
  out.beta = beta;
  out.free_energy = out.expected_reward - beta * out.entropy;
  return out;
}

std::vector<double> grid_gradient(const ActionGrid& g, const std::vector<double>& f) {
  const std::size_t n = g.n;
  std::vector<double> out(n);
  out[0] = (f[1] - f[0]) / g.h;
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * g.h);
  out[n - 1] = (f[n - 1] - f[n - 2]) / g.h;
  return out;
}

FirstVariationField first_variation(const DiscreteMeasure& pi, const RewardField& r, double beta) {
  require_beta(beta, "first_variation");
  require_same_grid(pi.grid, r.grid, "first_variation");
  const std::size_t n = pi.grid.n;
  FirstVariationField out;
  out.grid = pi.grid;
  out.density.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(pi.w[i] > 0.0))
      throw std::domain_error("first_variation: zero-mass cell " + std::to_string(i));
    out.density[i] = r.r[i] - beta * (1.0 + std::log(pi.w[i] / pi.grid.h));
  }
  out.velocity = grid_gradient(pi.grid, out.density);
  return out;
}

double kl_divergence(const DiscreteMeasure& p, const DiscreteMeasure& q) {
  require_same_grid(p.grid, q.grid, "kl_divergence");
  double s = 0.0;
  for (std::size_t i = 0; i < p.grid.n; ++i) {
    if (p.w[i] == 0.0) continue;
    if (q.w[i] == 0.0) return std::numeric_limits<double>::infinity();
    s += p.w[i] * std::log(p.w[i] / q.w[i]);
  }
  return s;
}

double total_variation(const DiscreteMeasure& p, const DiscreteMeasure& q) {
  require_same_grid(p.grid, q.grid, "total_variation");
  double s = 0.0;
  for (std::size_t i = 0; i < p.grid.n; ++i) s += std::abs(p.w[i] - q.w[i]);
  return 0.5 * s;
}

}  // namespace wflow
