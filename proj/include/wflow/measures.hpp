#pragma once

// Action grids, discrete policies, reward fields, the free-energy functional
// J(pi) = K_r(pi) - beta*H(pi) and its first variation. Entropy follows the
// convex convention H(pi) = sum_i w_i log(w_i/h), i.e. the differential
// entropy (up to sign) of the piecewise-constant density w/h. Under this
// convention the Gibbs policy maximizes J exactly on the grid and the
// first-variation density is cell-constant at the optimum.

#include <cstddef>
#include <vector>

namespace wflow {

struct ActionGrid {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t n = 0;
  double h = 0.0;
  std::vector<double> centers;

  bool same_as(const ActionGrid& o) const { return lo == o.lo && hi == o.hi && n == o.n; }
};

// Rejects n < 2 and hi <= lo.
ActionGrid make_grid(double lo, double hi, std::size_t n);

struct DiscreteMeasure {
  ActionGrid grid;
  std::vector<double> w;  // nonnegative cell masses summing to 1

  DiscreteMeasure() = default;
  // validates nonnegativity and |sum - 1| <= 1e-12
  DiscreteMeasure(ActionGrid g, std::vector<double> weights);

  // rescales a nonnegative, not-all-zero weight vector to total mass 1
  static DiscreteMeasure normalized(ActionGrid g, std::vector<double> weights);
  static DiscreteMeasure uniform(const ActionGrid& g);
  static DiscreteMeasure point_mass(const ActionGrid& g, std::size_t cell);

  bool strictly_positive() const;
};

struct RewardField {
  ActionGrid grid;
  std::vector<double> r;

  RewardField() = default;
  RewardField(ActionGrid g, std::vector<double> values);  // rejects non-finite entries
};

struct FreeEnergyBreakdown {
  double expected_reward = 0.0;  // K_r
  double entropy = 0.0;          // H (convex sign)
  double beta = 0.0;
  double free_energy = 0.0;      // J = K_r - beta*H
};

struct FirstVariationField {
  ActionGrid grid;
  std::vector<double> density;   // dJ/dpi per cell: r - beta*(1 + log(w/h))
  std::vector<double> velocity;  // action-gradient of density
};

// pi* proportional to exp(r/beta); max-subtracted so |r|/beta up to ~700 is safe
DiscreteMeasure gibbs_policy(const RewardField& r, double beta);

double expected_reward(const DiscreteMeasure& pi, const RewardField& r);

// sum_i w_i log(w_i/h), with 0 log 0 = 0
double entropy(const DiscreteMeasure& pi);

FreeEnergyBreakdown free_energy(const DiscreteMeasure& pi, const RewardField& r, double beta);

// requires strictly positive pi (throws std::domain_error on a zero cell)
FirstVariationField first_variation(const DiscreteMeasure& pi, const RewardField& r, double beta);

// +infinity when p charges a cell where q vanishes
double kl_divergence(const DiscreteMeasure& p, const DiscreteMeasure& q);

double total_variation(const DiscreteMeasure& p, const DiscreteMeasure& q);

// centered differences in the interior, first-order one-sided at the ends;
// shared by first_variation, the PDE diagnostics and the particle drift
std::vector<double> grid_gradient(const ActionGrid& g, const std::vector<double>& f);

}  // namespace wflow
