#include "logenergy/closedform.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "logenergy/errors.hpp"
#include "logenergy/specfun.hpp"

namespace logenergy {

namespace {

constexpr unsigned kAsymptoticFrom = 64;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_positive(unsigned n, const char* who) {
  if (n == 0) throw DomainError(std::string(who) + ": n must be >= 1");
}

// log n + gamma + 1/(2n) - H_n. For large n the direct form cancels to a
// few ulps of H_n, so the Euler-Maclaurin expansion of H_n takes over.
double harmonic_defect(unsigned n) {
  const double nd = n;
  if (n < kAsymptoticFrom) {
    return std::log(nd) + kEulerGamma + 0.5 / nd - static_cast<double>(harmonic(n));
  }
  const double x = 1.0 / (nd * nd);
  // 1/(12n^2) - 1/(120n^4) + 1/(252n^6) - 1/(240n^8) + 1/(132n^10)
  return x * (1.0 / 12 - x * (1.0 / 120 - x * (1.0 / 252 - x * (1.0 / 240 - x / 132))));
}

// Integral over [x, inf) of 1/(sqrt(pi (t+a)) t (t-1)), x > 1. Written as a
// difference of two atanh terms and expanded in powers of 1/(x+a) so the
// cancellation between them is exact.
double wallis_tail_integral(double x, double a) {
  const double w2 = x + a;
  const double w = std::sqrt(w2);
  const double q1 = (a + 1.0) / w2;
  const double q0 = a / w2;
  double p1 = 1.0;
  double p0 = 1.0;
  CompensatedSum s;
  for (int j = 1; j < 10000; ++j) {
    p1 *= q1;
    p0 *= q0;
    const double term = (p1 - p0) / (2.0 * j + 1.0);
    s += term;
    if (std::fabs(term) < 1e-20 * std::fabs(s.value())) break;
  }
  return 2.0 / w * s.value() / std::sqrt(std::numbers::pi);
}

struct Bracket {
  double lower;
  double upper;
};

// 1/sqrt(pi(k+1/2)) < 4^{-k} C(2k,k) <= 1/sqrt(pi(k+1/4)), and the summands
// decrease, so the remainder past K sits between these two integrals.
Bracket remainder_bracket(unsigned last) {
  const double k = last;
  return {wallis_tail_integral(k + 1.0, 0.5), wallis_tail_integral(k, 0.25)};
}

}  // namespace

EnergyBreakdown gue_energy(unsigned n) {
  require_positive(n, "gue_energy");
  EnergyBreakdown e;
  e.raw_energy = 0.25 + 0.5 * harmonic_defect(n);
  e.moment = 1.0;
  e.penalty = QuadraticPenalty{1.0};
  e.penalized = penalize(e.raw_energy, e.moment, e.penalty);
  return e;
}

TailValue ginibre_tail(unsigned n, double tol) {
  require_positive(n, "ginibre_tail");
  if (!(tol > 0)) throw DomainError("ginibre_tail: tol must be > 0");
  unsigned last = std::max(n, 16u);
  Bracket br = remainder_bracket(last);
  while (0.5 * (br.upper - br.lower) > 0.25 * tol) {
    if (last > (1u << 30)) throw NumericalError("ginibre_tail: tolerance out of reach");
    last *= 2;
    br = remainder_bracket(last);
  }
  // Forward recurrence: r_k carries relative error <= 2k eps, which is
  // accounted for term by term in the bound.
  CompensatedSum s;
  CompensatedSum drift;
  double r = central_binom_ratio(n + 1);
  for (unsigned k = n + 1; k <= last; ++k) {
    const double kd = k;
    const double term = r / (kd * (kd - 1.0));
    s += term;
    drift += 2.0 * (kd + 1.0) * kEps * term;
    r *= (2.0 * kd + 1.0) / (2.0 * kd + 2.0);
  }
  s += 0.5 * (br.lower + br.upper);
  TailValue t;
  t.value = 0.5 * s.value();
  t.last_term = last;
  t.error_bound = 0.25 * (br.upper - br.lower) + 0.5 * drift.value() + 4.0 * kEps * t.value;
  return t;
}

std::vector<TailValue> ginibre_tail_sequence(unsigned n_max, double tol) {
  require_positive(n_max, "ginibre_tail_sequence");
  std::vector<TailValue> out(n_max);
  TailValue top = ginibre_tail(n_max, tol);
  out[n_max - 1] = top;
  std::vector<double> ratio(n_max + 1);
  ratio[0] = 1.0;
  for (unsigned k = 1; k <= n_max; ++k) ratio[k] = ratio[k - 1] * (2.0 * k - 1.0) / (2.0 * k);
  CompensatedSum s;
  s += top.value;
  for (unsigned n = n_max - 1; n >= 1; --n) {
    const double kd = n + 1.0;  // adds the k = n + 1 term
    s += 0.5 * ratio[n + 1] / (kd * (kd - 1.0));
    TailValue t;
    t.value = s.value();
    t.last_term = top.last_term;
    t.error_bound = top.error_bound + 4.0 * (kd + 1.0) * kEps * t.value;
    out[n - 1] = t;
  }
  return out;
}

EnergyBreakdown ginibre_energy(unsigned n) {
  require_positive(n, "ginibre_energy");
  const EnergyBreakdown gue = gue_energy(n);
  EnergyBreakdown e;
  e.moment = 0.5 + 0.5 / n;
  e.penalty = QuadraticPenalty{0.5};
  e.penalized = gue.penalized + ginibre_tail(n).value;
  e.raw_energy = e.penalized - e.moment;
  return e;
}

EnergyBreakdown lue_energy(unsigned n) {
  require_positive(n, "lue_energy");
  const EnergyBreakdown gue = gue_energy(n);
  EnergyBreakdown e;
  e.raw_energy = 2.0 * gue.raw_energy;
  e.moment = 1.0;
  e.penalty = LinearPenalty{};
  e.penalized = 2.0 * gue.penalized;
  return e;
}

EnergyBreakdown energy(Ensemble which, unsigned n) {
  switch (which) {
    case Ensemble::GUE:
      return gue_energy(n);
    case Ensemble::Ginibre:
      return ginibre_energy(n);
    case Ensemble::LUE:
      return lue_energy(n);
  }
  throw DomainError("energy: unknown ensemble");
}

LimitEnergies limit_energies() { return {}; }

MonotonicityReport monotonicity_report(unsigned n_max, Ensemble which) {
  if (n_max < 3) throw DomainError("monotonicity_report: n_max must be >= 3");
  std::vector<double> u(n_max);
  for (unsigned n = 1; n <= n_max; ++n) u[n - 1] = gue_energy(n).penalized;
  if (which == Ensemble::Ginibre) {
    const auto tails = ginibre_tail_sequence(n_max);
    for (unsigned n = 1; n <= n_max; ++n) u[n - 1] += tails[n - 1].value;
  } else if (which == Ensemble::LUE) {
    for (double& v : u) v *= 2.0;
  }
  MonotonicityReport rep;
  rep.rows.resize(n_max);
  for (unsigned i = 0; i < n_max; ++i) {
    MonotonicityRow& row = rep.rows[i];
    row.n = i + 1;
    row.penalized = u[i];
    if (i + 1 < n_max) {
      row.first_difference = u[i + 1] - u[i];
      row.decrease_violation = !(row.first_difference < 0);
    }
    if (i > 0 && i + 1 < n_max) {
      row.second_difference = (u[i + 1] - u[i]) - (u[i] - u[i - 1]);
      row.convexity_violation = !(row.second_difference > 0);
    }
    rep.decrease_violations += row.decrease_violation;
    rep.convexity_violations += row.convexity_violation;
  }
  return rep;
}

}  // namespace logenergy
