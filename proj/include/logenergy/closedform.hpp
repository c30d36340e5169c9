#pragma once

// Closed-form penalized logarithmic energies of the mean ESD of GUE,
// complex Ginibre and square LUE.

#include <vector>

#include "logenergy/penalty.hpp"

namespace logenergy {

struct EnergyBreakdown {
  double raw_energy = 0.0;  // nats
  double moment = 0.0;      // m2 (GUE, Ginibre) or m1 (LUE)
  Penalty penalty;
  double penalized = 0.0;
};

struct TailValue {
  double value = 0.0;
  double error_bound = 0.0;  // certified bound on |value - exact|
  unsigned last_term = 0;    // largest k summed explicitly
};

inline constexpr double kDefaultTailTol = 1e-13;

enum class Ensemble { GUE, Ginibre, LUE };

EnergyBreakdown gue_energy(unsigned n);

/// b_n = (1/2) sum_{k>n} 4^{-k} C(2k,k) / (k(k-1)), with the discarded
/// remainder bracketed by integrals of Wallis-type majorants.
TailValue ginibre_tail(unsigned n, double tol = kDefaultTailTol);

/// b_1 .. b_{n_max} from one tail evaluation and backward accumulation.
std::vector<TailValue> ginibre_tail_sequence(unsigned n_max, double tol = kDefaultTailTol);

EnergyBreakdown ginibre_energy(unsigned n);
EnergyBreakdown lue_energy(unsigned n);
EnergyBreakdown energy(Ensemble which, unsigned n);

struct LimitEnergies {
  double semicircle = 0.75;
  double circular = 0.75;
  double marchenko_pastur = 1.5;
};

LimitEnergies limit_energies();

struct MonotonicityRow {
  unsigned n = 0;
  double penalized = 0.0;
  double first_difference = 0.0;   // u_{n+1} - u_n (0 on the last row)
  double second_difference = 0.0;  // u_{n+1} - 2 u_n + u_{n-1} (0 on the first and last rows)
  bool decrease_violation = false;
  bool convexity_violation = false;
};

struct MonotonicityReport {
  std::vector<MonotonicityRow> rows;
  unsigned decrease_violations = 0;
  unsigned convexity_violations = 0;
};

/// Penalized energies for n = 1..n_max with their finite differences; flags
/// any failure of strict decrease or strict convexity. n_max >= 3.
MonotonicityReport monotonicity_report(unsigned n_max, Ensemble which);

}  // namespace logenergy
