#include "logenergy/rmt/distributions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "logenergy/errors.hpp"

namespace logenergy {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::uint64_t kSelfTestSeed = 0x5eed5eed5eedULL;
constexpr int kSelfTestDraws = 1000000;

double random_sign(Rng& rng) { return (rng() >> 63) ? 1.0 : -1.0; }

}  // namespace

double sample_normal(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  return normal(rng);
}

double sample_chi(double k, Rng& rng) {
  if (!(k > 0)) throw DomainError("sample_chi: degrees of freedom must be positive");
  std::gamma_distribution<double> gamma(k / 2, 1.0);
  return std::sqrt(2.0 * gamma(rng));
}

EntryDistribution::EntryDistribution(EntryKind kind, bool self_test) : kind_(kind) {
  std::visit(overloaded{
                 [](const GaussianReal&) {},
                 [](const GaussianComplex&) {},
                 [](const Rademacher&) {},
                 [this](const SGG& s) {
                   if (!(s.d > 0) || !(s.p > 0)) throw DomainError("SGG: d and p must be positive");
                   raw_variance_ = std::exp(std::lgamma((s.d + 2) / s.p) - std::lgamma(s.d / s.p));
                 },
                 [this](const Heavy& h) {
                   if (!(h.alpha > 2)) throw DomainError("Heavy: alpha must exceed 2 (finite variance)");
                   raw_variance_ = 2.0 / ((h.alpha - 1) * (h.alpha - 2));
                   if (h.alpha <= 4)
                     warning_ = name() + ": alpha <= 4, infinite fourth moment; variance self-test skipped";
                 },
             },
             kind_);
  scale_ = 1.0 / std::sqrt(raw_variance_);
  if (!self_test || !warning_.empty()) return;

  Rng rng(kSelfTestSeed);
  double s1 = 0.0, s2 = 0.0;
  for (int i = 0; i < kSelfTestDraws; ++i) {
    const double v = std::norm(sample(rng));
    s1 += v;
    s2 += v * v;
  }
  const double mean = s1 / kSelfTestDraws;
  const double var = std::max(0.0, s2 / kSelfTestDraws - mean * mean);
  const double se = std::sqrt(var / kSelfTestDraws);
  if (std::abs(mean - 1.0) > 3.0 * se + 1e-12) {
    std::ostringstream os;
    os << name() << ": variance self-test failed, sample variance " << mean << " (se " << se << ")";
    throw NumericalError(os.str(), mean, se);
  }
}

std::string EntryDistribution::name() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const GaussianReal&) { os << "GaussianReal"; },
                 [&](const GaussianComplex&) { os << "GaussianComplex"; },
                 [&](const Rademacher&) { os << "Rademacher"; },
                 [&](const SGG& s) { os << "SGG(" << s.d << "," << s.p << ")"; },
                 [&](const Heavy& h) { os << "Heavy(" << h.alpha << ")"; },
             },
             kind_);
  return os.str();
}

std::complex<double> EntryDistribution::sample(Rng& rng) const {
  return std::visit(
      overloaded{
          [&](const GaussianReal&) { return std::complex<double>(sample_normal(rng), 0.0); },
          [&](const GaussianComplex&) {
            const double re = sample_normal(rng);
            const double im = sample_normal(rng);
            return std::complex<double>(re * (1.0 / std::numbers::sqrt2), im * (1.0 / std::numbers::sqrt2));
          },
          [&](const Rademacher&) { return std::complex<double>(random_sign(rng), 0.0); },
          [&](const SGG& s) {
            std::gamma_distribution<double> gamma(s.d / s.p, 1.0);
            const double g = gamma(rng);
            return std::complex<double>(random_sign(rng) * std::pow(g, 1.0 / s.p) * scale_, 0.0);
          },
          [&](const Heavy& h) {
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            const double u = 1.0 - unif(rng);  // (0, 1]
            const double x = std::pow(u, -1.0 / h.alpha) - 1.0;
            return std::complex<double>(random_sign(rng) * x * scale_, 0.0);
          },
      },
      kind_);
}

}  // namespace logenergy
