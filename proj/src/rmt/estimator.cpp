#include "logenergy/rmt/estimator.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "logenergy/closedform.hpp"
#include "logenergy/errors.hpp"
#include "logenergy/specfun.hpp"

namespace logenergy {

namespace {

struct PairStat {
  bool rejected = false;
  double raw = 0.0;
  double moment = 0.0;
};

double replica_moment(const Eigen::VectorXcd& s, bool linear) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) m += linear ? s(i).real() : std::norm(s(i));
  return m / double(s.size());
}

PairStat pair_stat(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, bool linear, double eps) {
  PairStat p;
  const Eigen::Index n = a.size();
  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d = std::abs(a(i) - b(j));
      if (d < eps) {
        p.rejected = true;
        return p;
      }
      s += std::log(d);
    }
  p.raw = -s / double(n * n);
  p.moment = 0.5 * (replica_moment(a, linear) + replica_moment(b, linear));
  return p;
}

EstimateWithError summarize(const std::vector<double>& xs, unsigned rejected) {
  EstimateWithError e;
  e.replica_pairs_used = static_cast<unsigned>(xs.size());
  e.rejected_pairs = rejected;
  CompensatedSum s;
  for (double x : xs) s += x;
  e.value = s.value() / double(xs.size());
  if (xs.size() > 1) {
    CompensatedSum q;
    for (double x : xs) q += (x - e.value) * (x - e.value);
    e.std_error = std::sqrt(q.value() / double(xs.size() - 1) / double(xs.size()));
  }
  return e;
}

}  // namespace

MeanEnergyEstimate estimate_from_batch(const SpectrumBatch& batch, const Penalty& penalty, double collision_eps) {
  if (batch.replica_count < 2 || batch.replica_count % 2 != 0)
    throw DomainError("estimate: replica count must be even and >= 2");
  if (!(collision_eps >= 0)) throw DomainError("estimate: collision_eps must be nonnegative");
  const bool linear = std::holds_alternative<LinearPenalty>(penalty);
  const unsigned pairs = batch.replica_count / 2;

  std::vector<PairStat> stats(pairs);
  const unsigned w = std::min(worker_count(), pairs);
  auto run = [&](unsigned worker) {
    for (unsigned k = worker; k < pairs; k += w)
      stats[k] = pair_stat(batch.spectra.col(2 * k), batch.spectra.col(2 * k + 1), linear, collision_eps);
  };
  if (w <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < w; ++i) pool.emplace_back(run, i);
    for (auto& t : pool) t.join();
  }

  std::vector<double> raw, mom, pen, nominal;
  unsigned rejected = 0;
  for (const auto& p : stats) {
    if (p.rejected) {
      ++rejected;
      continue;
    }
    raw.push_back(p.raw);
    mom.push_back(p.moment);
    pen.push_back(penalize(p.raw, p.moment, penalty));
    nominal.push_back(penalize(p.raw, 1.0, penalty));
  }
  if (raw.empty()) throw NumericalError("estimate: every replica pair was rejected by the collision rule", 0.0, 0.0);

  MeanEnergyEstimate out;
  out.raw = summarize(raw, rejected);
  out.moment = summarize(mom, rejected);
  out.penalized = summarize(pen, rejected);
  out.penalized_nominal = summarize(nominal, rejected);
  out.penalty = penalty;
  return out;
}

MeanEnergyEstimate estimate_mean_energy(const EnsembleSpec& spec, unsigned replicas, std::uint64_t master_seed,
                                        double collision_eps, unsigned workers) {
  if (replicas < 2 || replicas % 2 != 0) throw DomainError("estimate_mean_energy: replicas must be even and >= 2");
  const auto batch = sample_spectra(spec, replicas, master_seed, workers);
  auto out = estimate_from_batch(batch, spec.penalty(), collision_eps);
  out.reference = reference_energy(spec);
  return out;
}

std::optional<double> reference_energy(const EnsembleSpec& spec) {
  const bool complex_gauss = spec.dist && std::holds_alternative<GaussianComplex>(spec.dist->kind());
  switch (spec.model) {
    case Model::GUE_exact:
      return gue_energy(spec.n).penalized;
    case Model::BetaHermite:
      if (spec.beta == 2.0) return gue_energy(spec.n).penalized;
      return std::nullopt;
    case Model::Wigner:
      if (complex_gauss) return gue_energy(spec.n).penalized;
      return std::nullopt;
    case Model::Ginibre_exact:
      return ginibre_energy(spec.n).penalized;
    case Model::IID:
      if (complex_gauss) return ginibre_energy(spec.n).penalized;
      return std::nullopt;
    case Model::LUE_exact:
      return lue_energy(spec.n).penalized;
    case Model::Wishart:
      if (complex_gauss) return lue_energy(spec.n).penalized;
      return std::nullopt;
  }
  return std::nullopt;
}

EstimateWithError within_replica_energy(const SpectrumBatch& batch) {
  std::vector<double> xs;
  unsigned rejected = 0;
  const Eigen::Index n = batch.n;
  for (unsigned r = 0; r < batch.replica_count; ++r) {
    const auto s = batch.spectra.col(r);
    double sum = 0.0;
    bool bad = false;
    for (Eigen::Index i = 0; i < n && !bad; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i == j) continue;
        const double d = std::abs(s(i) - s(j));
        if (d == 0) {
          bad = true;
          break;
        }
        sum += std::log(d);
      }
    if (bad) {
      ++rejected;
      continue;
    }
    xs.push_back(-sum / double(n * n));
  }
  if (xs.empty()) throw NumericalError("within_replica_energy: every replica has repeated eigenvalues", 0.0, 0.0);
  return summarize(xs, rejected);
}

}  // namespace logenergy
