#include "logenergy/rmt/sampling.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "logenergy/errors.hpp"
#include "logenergy/rmt/eigensolvers.hpp"

namespace logenergy {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool needs_dist(Model m) { return m == Model::Wigner || m == Model::IID || m == Model::Wishart; }

Eigen::MatrixXcd iid_matrix(unsigned n, const EntryDistribution& dist, Rng& rng) {
  Eigen::MatrixXcd x(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) x(i, j) = dist.sample(rng);
  return x;
}

Eigen::MatrixXcd ginibre(unsigned n, Rng& rng) {
  const double s = std::sqrt(0.5 / n);
  Eigen::MatrixXcd g(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const double re = sample_normal(rng);
      const double im = sample_normal(rng);
      g(i, j) = {s * re, s * im};
    }
  return g;
}

Eigen::VectorXcd as_complex(const Eigen::VectorXd& v) { return v.cast<std::complex<double>>(); }

}  // namespace

void EnsembleSpec::validate() const {
  if (n == 0) throw DomainError("EnsembleSpec: n must be >= 1");
  if (model == Model::BetaHermite && !(beta > 0)) throw DomainError("EnsembleSpec: beta must be positive");
  if (needs_dist(model) && !dist) throw DomainError("EnsembleSpec: " + model_name(model) + " needs an entry distribution");
}

std::string EnsembleSpec::label() const {
  std::string s = model_name(model);
  if (model == Model::BetaHermite) s += "(" + std::to_string(beta) + ")";
  if (needs_dist(model) && dist) s += "(" + dist->name() + ")";
  return s;
}

bool EnsembleSpec::hermitian() const { return model != Model::Ginibre_exact && model != Model::IID; }

Penalty EnsembleSpec::penalty() const {
  switch (model) {
    case Model::Ginibre_exact:
    case Model::IID:
      return QuadraticPenalty{0.5};
    case Model::LUE_exact:
    case Model::Wishart:
      return LinearPenalty{};
    default:
      return QuadraticPenalty{1.0};
  }
}

Model parse_model(const std::string& name) {
  std::string key;
  for (char c : name)
    if (c != '-' && c != '_') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "gue" || key == "gueexact") return Model::GUE_exact;
  if (key == "ginibre" || key == "ginibreexact") return Model::Ginibre_exact;
  if (key == "lue" || key == "lueexact") return Model::LUE_exact;
  if (key == "betahermite") return Model::BetaHermite;
  if (key == "wigner") return Model::Wigner;
  if (key == "iid") return Model::IID;
  if (key == "wishart") return Model::Wishart;
  throw DomainError("unknown model '" + name + "'");
}

std::string model_name(Model model) {
  switch (model) {
    case Model::GUE_exact: return "GUE";
    case Model::Ginibre_exact: return "Ginibre";
    case Model::LUE_exact: return "LUE";
    case Model::BetaHermite: return "BetaHermite";
    case Model::Wigner: return "Wigner";
    case Model::IID: return "IID";
    case Model::Wishart: return "Wishart";
  }
  return "?";
}

std::uint64_t replica_seed(std::uint64_t master_seed, std::uint64_t replica_index) {
  return splitmix64(splitmix64(master_seed) ^ splitmix64(replica_index + 0x632be59bd9b4e019ULL));
}

Tridiagonal sample_beta_hermite(unsigned n, double beta, Rng& rng) {
  if (n == 0) throw DomainError("sample_beta_hermite: n must be >= 1");
  if (!(beta > 0)) throw DomainError("sample_beta_hermite: beta must be positive");
  const double norm = 1.0 / std::sqrt(2.0 + beta * (n - 1.0));
  Tridiagonal t;
  t.diagonal.resize(n);
  t.off_diagonal.resize(n - 1);
  for (unsigned i = 0; i < n; ++i) t.diagonal(i) = std::numbers::sqrt2 * sample_normal(rng) * norm;
  for (unsigned i = 1; i < n; ++i) t.off_diagonal(i - 1) = sample_chi((n - i) * beta, rng) * norm;
  return t;
}

Eigen::MatrixXcd sample_matrix(const EnsembleSpec& spec, Rng& rng) {
  spec.validate();
  const unsigned n = spec.n;
  switch (spec.model) {
    case Model::GUE_exact: {
      Eigen::MatrixXcd a(n, n);
      const double sd = 1.0 / std::sqrt(double(n));
      const double so = std::sqrt(0.5 / n);
      for (unsigned i = 0; i < n; ++i) {
        a(i, i) = sd * sample_normal(rng);
        for (unsigned j = i + 1; j < n; ++j) {
          const double re = sample_normal(rng);
          const double im = sample_normal(rng);
          a(i, j) = {so * re, so * im};
          a(j, i) = std::conj(a(i, j));
        }
      }
      return a;
    }
    case Model::Ginibre_exact:
      return ginibre(n, rng);
    case Model::LUE_exact: {
      const Eigen::MatrixXcd g = ginibre(n, rng);
      return g * g.adjoint();
    }
    case Model::BetaHermite: {
      const auto t = sample_beta_hermite(n, spec.beta, rng);
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
      for (unsigned i = 0; i < n; ++i) a(i, i) = t.diagonal(i);
      for (unsigned i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = t.off_diagonal(i);
      return a;
    }
    case Model::Wigner: {
      const EntryDistribution& dist = *spec.dist;
      const EntryDistribution diag_dist = dist.is_complex() ? EntryDistribution(GaussianReal{}, false) : dist;
      Eigen::MatrixXcd m(n, n);
      for (unsigned i = 0; i < n; ++i) {
        m(i, i) = diag_dist.sample(rng).real();
        for (unsigned j = i + 1; j < n; ++j) {
          m(i, j) = dist.sample(rng);
          m(j, i) = std::conj(m(i, j));
        }
      }
      return m;
    }
    case Model::IID:
      return iid_matrix(n, *spec.dist, rng);
    case Model::Wishart: {
      const Eigen::MatrixXcd x = iid_matrix(n, *spec.dist, rng);
      return (x * x.adjoint()) / double(n);
    }
  }
  throw DomainError("sample_matrix: unknown model");
}

Eigen::VectorXcd sample_spectrum(const EnsembleSpec& spec, Rng& rng) {
  spec.validate();
  const double root_n = std::sqrt(double(spec.n));
  switch (spec.model) {
    case Model::BetaHermite: {
      const auto t = sample_beta_hermite(spec.n, spec.beta, rng);
      return as_complex(eig_tridiagonal<double>(t.diagonal, t.off_diagonal));
    }
    case Model::Ginibre_exact:
      return eig_complex(sample_matrix(spec, rng));
    case Model::IID:
      return eig_complex(sample_matrix(spec, rng)) / root_n;
    case Model::Wigner:
      return as_complex(eig_hermitian(sample_matrix(spec, rng))) / root_n;
    default:
      return as_complex(eig_hermitian(sample_matrix(spec, rng)));
  }
}

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  unsigned w = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LOGENERGY_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap > 0) w = std::min<unsigned>(w, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
    }
  }
  return w;
}

SpectrumBatch sample_spectra(const EnsembleSpec& spec, unsigned replicas, std::uint64_t master_seed,
                             unsigned workers) {
  spec.validate();
  if (replicas == 0) throw DomainError("sample_spectra: replicas must be >= 1");
  SpectrumBatch batch;
  batch.n = spec.n;
  batch.replica_count = replicas;
  batch.master_seed = master_seed;
  batch.hermitian = spec.hermitian();
  batch.spectra.resize(spec.n, replicas);

  const unsigned w = std::min(worker_count(workers), replicas);
  std::vector<std::exception_ptr> errors(w);
  auto run = [&](unsigned worker) {
    try {
      for (unsigned r = worker; r < replicas; r += w) {
        Rng rng(replica_seed(master_seed, r));
        batch.spectra.col(r) = sample_spectrum(spec, rng);
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < w; ++i) pool.emplace_back(run, i);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return batch;
}

}  // namespace logenergy
