#include "logenergy/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <tuple>

#include "json.hpp"

#include "logenergy/closedform.hpp"
#include "logenergy/density.hpp"
#include "logenergy/errors.hpp"
#include "logenergy/quadrature.hpp"

namespace logenergy {

namespace {

using Params = std::vector<std::pair<std::string, double>>;

IdentityReport exact_report(std::string name, Params params, Rational lhs, Rational rhs) {
  IdentityReport r;
  r.identity = std::move(name);
  r.params = std::move(params);
  r.mode = IdentityMode::Exact;
  r.tolerance = 0.0;
  r.discrepancy = std::abs(static_cast<double>(Rational(lhs - rhs)));
  r.pass = (lhs == rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

IdentityReport quad_report(std::string name, Params params, double lhs, double rhs, double discrepancy,
                           double tol) {
  IdentityReport r;
  r.identity = std::move(name);
  r.params = std::move(params);
  r.mode = IdentityMode::Quadrature;
  r.lhs = lhs;
  r.rhs = rhs;
  r.discrepancy = discrepancy;
  r.tolerance = tol;
  r.pass = std::isfinite(discrepancy) && discrepancy <= tol;
  return r;
}

IdentityReport quad_report(std::string name, Params params, double lhs, double rhs, double tol) {
  return quad_report(std::move(name), std::move(params), lhs, rhs, std::abs(lhs - rhs), tol);
}

Rational sign(unsigned e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational half_minus(unsigned k) { return Rational(2 * static_cast<int>(k) - 1, 2); }  // k - 1/2

// p_k = 2 (-1)^{n-k} C(n-1,k) binom(k-1/2, n)
std::vector<Rational> pk(unsigned n) {
  std::vector<Rational> p(n);
  for (unsigned k = 0; k < n; ++k)
    p[k] = 2 * sign(n - k) * Rational(binomial(n - 1, k)) * binom_general(half_minus(k), n);
  return p;
}

double factorial(unsigned k) { return std::tgamma(k + 1.0); }

// Pointwise comparison of two sides given as (lhs, rhs, summand magnitude).
template <class F>
IdentityReport pointwise(std::string name, Params params, std::span<const double> grid, F&& sides, double tol) {
  double worst = 0.0, wl = 0.0, wr = 0.0, wx = grid.empty() ? 0.0 : grid[0];
  bool first = true;
  for (double x : grid) {
    auto [l, r, scale] = sides(x);
    const double d = std::abs(l - r) / std::max(scale, std::numeric_limits<double>::min());
    if (first || d > worst || !std::isfinite(d)) {
      worst = std::isfinite(d) ? d : std::numeric_limits<double>::infinity();
      wl = l;
      wr = r;
      wx = x;
      first = false;
    }
  }
  params.emplace_back("x", wx);
  return quad_report(std::move(name), std::move(params), wl, wr, worst, tol);
}

}  // namespace

IdentityReport check_hockey_stick(unsigned n, unsigned r) {
  if (r >= n || n > 100) throw DomainError("check_hockey_stick: need 0 <= r < n <= 100");
  BigInt s = 0;
  for (unsigned k = 0; k < n; ++k) s += binomial(k, r);
  return exact_report("hockey_stick", {{"n", n}, {"r", r}}, Rational(s), Rational(binomial(n, r + 1)));
}

IdentityReport check_calcul_gue(unsigned n) {
  if (n == 0) throw DomainError("check_calcul_gue: n must be >= 1");
  Rational s = 0;
  for (unsigned k = 0; k < n; ++k)
    for (unsigned l = 0; l < n; ++l) {
      if (k + l == 0) continue;
      s += sign(k + l) * Rational(binomial(n, k + 1) * binomial(n, l + 1) * binomial(k + l, k)) /
           Rational(k + l);
    }
  const Rational lhs = s / Rational(2 * n * n);
  const Rational rhs = Rational(1, 4) + (Rational(1, 2 * n) - harmonic(n)) / 2;
  return exact_report("calcul_gue", {{"n", n}}, lhs, rhs);
}

IdentityReport check_binomial_identity(unsigned k, unsigned l, unsigned p) {
  if (k > 25 || l > 25 || p > 25) throw DomainError("check_binomial_identity: parameters must be <= 25");
  BigInt s = 0;
  for (unsigned i = 0; i <= l; ++i) {
    BigInt t = binomial(l, i + p) * binomial(i, k);
    if ((i + k) % 2 == 0)
      s += t;
    else
      s -= t;
  }
  BigInt rhs = 0;
  if (k == l && p == 0) rhs += 1;
  if (l > k && p >= 1) rhs += binomial(l - k - 1, p - 1);
  return exact_report("binomial_identity", {{"k", k}, {"l", l}, {"p", p}}, Rational(s), Rational(rhs));
}

IdentityReport check_harmonic_identity(unsigned n) {
  if (n == 0) throw DomainError("check_harmonic_identity: n must be >= 1");
  std::vector<Rational> b(n);
  for (unsigned k = 0; k < n; ++k) b[k] = Rational(binomial(n - 1, k)) * binom_general(half_minus(k), n);
  Rational s = 0;
  for (unsigned k = 0; k < n; ++k)
    for (unsigned l = k + 1; l < n; ++l) s += sign(k + l) * b[k] * b[l] * odd_harmonic(l - k);
  const Rational lhs = 16 * s;
  const Rational rhs = harmonic(n) - Rational(1, 2 * n) - Rational(1, 2);
  return exact_report("harmonic_identity", {{"n", n}}, lhs, rhs);
}

IdentityReport check_pk(unsigned n) {
  if (n == 0) throw DomainError("check_pk: n must be >= 1");
  const auto p = pk(n);
  Rational sum = 0;
  Rational negative = 0;
  for (const auto& v : p) {
    sum += v;
    if (v < 0) negative -= v;
  }
  // Any negative coefficient is carried into the lhs so the check fails.
  return exact_report("pk", {{"n", n}}, sum + negative, Rational(1));
}

IdentityReport check_stieltjes(unsigned n, std::span<const double> z_grid) {
  if (n == 0 || n > 20) throw DomainError("check_stieltjes: need 1 <= n <= 20");
  const auto p = pk(n);
  auto S = [&](const Rational& z) {
    Rational s = 0;
    for (unsigned l = 0; l < n; ++l) s += p[l] / (z + l);
    return s;
  };
  auto R = [&](const Rational& z) {
    Rational r = 1;
    for (unsigned j = 1; j <= n; ++j) r *= (z + half_minus(j)) / (z + Rational(j - 1));
    return r;
  };
  Rational wl = 0, wr = 0;
  double wz = z_grid.empty() ? 0.0 : z_grid[0];
  bool found = false;
  for (double zd : z_grid) {
    if (zd <= 0 && zd == std::floor(zd) && zd > -double(n))
      throw DomainError("check_stieltjes: z must avoid 0, -1, ..., -(n-1)");
    const Rational z(zd);
    Rational l = S(z), r = 2 * (R(z) - 1) / Rational(n);
    if (!found || l != r) {
      wl = l;
      wr = r;
      wz = zd;
      found = (l != r);
    }
    if (found) break;
  }
  const Rational big(1000000);
  const double mean_limit = static_cast<double>(Rational(big * (1 - big * S(big))));
  auto rep = exact_report("stieltjes", {{"n", n}, {"z", wz}, {"mean_limit", mean_limit}}, wl, wr);
  const double mean_gap = std::abs(mean_limit - (n - 1) / 4.0);
  if (mean_gap > 1e-3) {
    rep.pass = false;
    rep.discrepancy = std::max(rep.discrepancy, mean_gap);
  }
  return rep;
}

IdentityReport check_feldheim(unsigned k, std::span<const double> grid) {
  if (k > 12) throw DomainError("check_feldheim: k must be <= 12");
  const double pre = std::ldexp(factorial(k), int(k));
  auto sides = [&](double x) {
    const double h = hermite_h(k, x);
    double s = 0.0, mag = 0.0;
    for (unsigned r = 0; r <= k; ++r) {
      const double t = pre * static_cast<double>(binomial(k, r)) / std::ldexp(factorial(r), int(r)) *
                       hermite_h(2 * r, x);
      s += t;
      mag += std::abs(t);
    }
    return std::tuple{h * h, s, std::max(mag, h * h)};
  };
  return pointwise("feldheim", {{"k", k}}, grid, sides, 1e-9);
}

IdentityReport check_howell(unsigned k, std::span<const double> grid) {
  if (k > 10) throw DomainError("check_howell: k must be <= 10");
  auto sides = [&](double s) {
    const double L = laguerre_l(k, s);
    double sum = 0.0, mag = 0.0;
    for (unsigned r = 0; r <= k; ++r) {
      const double t = static_cast<double>(binomial(2 * r, r) * binomial(2 * k - 2 * r, k - r)) *
                       std::ldexp(laguerre_l(2 * r, 2 * s), -2 * int(k));
      sum += t;
      mag += std::abs(t);
    }
    return std::tuple{L * L, sum, std::max(mag, L * L)};
  };
  return pointwise("howell", {{"k", k}}, grid, sides, 1e-9);
}

IdentityReport check_integral_mh(unsigned n, double t) {
  if (n == 0 || n > 5) throw DomainError("check_integral_mh: need 1 <= n <= 5");
  if (!(t > 0)) throw DomainError("check_integral_mh: t must be positive");
  const auto phi = gue_density(n, false);
  const auto& rule = gauss_legendre(16);
  auto tensor = [&](int panels) {
    std::vector<double> x, w;
    const double h = (phi.hi - phi.lo) / panels;
    for (int p = 0; p < panels; ++p) {
      const double a = phi.lo + p * h;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double xi = a + 0.5 * h * (rule.nodes[i] + 1.0);
        x.push_back(xi);
        w.push_back(0.5 * h * rule.weights[i] * phi(xi));
      }
    }
    CompensatedSum total;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        const double d = x[i] - x[j];
        row += w[j] * std::exp(-d * d / t);
      }
      total += w[i] * row;
    }
    return total.value();
  };
  const double coarse = tensor(48);
  const double lhs = tensor(96);
  if (std::abs(lhs - coarse) > 1e-10) throw NumericalError("check_integral_mh: quadrature did not settle", lhs,
                                                           std::abs(lhs - coarse));
  CompensatedSum rhs;
  for (unsigned k = 0; k < n; ++k)
    for (unsigned l = 0; l < n; ++l) {
      const double term = static_cast<double>(binomial(n, k + 1)) / factorial(k) *
                          static_cast<double>(binomial(n, l + 1)) / factorial(l) * factorial(2 * k + 2 * l) /
                          factorial(k + l) * std::pow(2 * t + 4, -double(k + l) - 0.5);
      rhs += ((k + l) % 2 == 0) ? term : -term;
    }
  const double r = std::sqrt(2 * t) / (double(n) * n) * rhs.value();
  return quad_report("integral_mh", {{"n", n}, {"t", t}}, lhs, r, 1e-8);
}

IdentityReport check_beta_prime_log(unsigned n) {
  if (n == 0 || n > 20) throw DomainError("check_beta_prime_log: need 1 <= n <= 20");
  auto f = [n](double x) {
    return (std::log(x) - x) * std::exp(n * std::log(x) - (2.0 * n + 2.0) * std::log1p(x));
  };
  const auto q = integrate_adaptive(f, 0.0, 1.0, 1e-14, true, false);
  const double norm = 2.0 * (n + 1) * static_cast<double>(binomial(2 * n + 1, n));
  const double lhs = norm * q.value;
  const double rhs = -(n + 1.0) / n + 4.0 * ginibre_tail(n).value;
  return quad_report("beta_prime_log", {{"n", n}}, lhs, rhs, 1e-8);
}

IdentityReport check_laguerre_convolution(unsigned k, unsigned l, double t) {
  if (k > 4 || l > 4) throw DomainError("check_laguerre_convolution: k, l must be <= 4");
  if (!(t > 0)) throw DomainError("check_laguerre_convolution: t must be positive");
  const double a = t + 0.5, b = 0.5 - t;
  const double decay = std::min(1.0, a);
  const double X = (60.0 + 4.0 * (k + l + 1)) / decay;
  const auto& rule = gauss_legendre(16);
  auto inner = [&](double y) { return std::exp(-b * y) * laguerre_l(2 * l, y); };
  auto run = [&](int panels) {
    const double h = X / panels;
    CompensatedSum outer;
    double cumulative = 0.0;  // inner integral over [0, panel start]
    for (int p = 0; p < panels; ++p) {
      const double lo = p * h;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = lo + 0.5 * h * (rule.nodes[i] + 1.0);
        const double in = cumulative + integrate_gl(inner, lo, x, rule);
        outer += 0.5 * h * rule.weights[i] * std::exp(-a * x) * laguerre_l(2 * k, x) * in;
      }
      cumulative += integrate_gl(inner, lo, lo + h, rule);
    }
    return outer.value();
  };
  const double lhs = run(int(std::ceil(X)) * 2);
  double rhs = 0.0;
  if (k == l) rhs = 1.0 / a;
  if (k > l) {
    const int e = 2 * int(k - l);
    rhs = -std::pow(t - 0.5, e - 1) / std::pow(a, e + 1);
  }
  return quad_report("laguerre_convolution", {{"k", k}, {"l", l}, {"t", t}}, lhs, rhs, 1e-8);
}

namespace {

// int_0^inf h(t, t - 1/2) dt / t with a possible simple pole at t = 1/2 taken
// as a principal value: [1/4, 3/4] is folded about 1/2 and [1, inf) is mapped
// by t = 1/u.
double half_line_pv(const std::function<double(double, double)>& h) {
  auto direct = [&](double t) { return h(t, t - 0.5) / t; };
  auto folded = [&](double s) { return h(0.5 + s, s) / (0.5 + s) + h(0.5 - s, -s) / (0.5 - s); };
  auto mapped = [&](double u) { return h(1.0 / u, 1.0 / u - 0.5) / u; };
  const double tol = 1e-13;
  return integrate_adaptive(direct, 0.0, 0.25, tol, true, false).value +
         integrate_adaptive(folded, 0.0, 0.25, tol, true, false).value +
         integrate_adaptive(direct, 0.75, 1.0, tol, false, false).value +
         integrate_adaptive(mapped, 0.0, 1.0, tol, true, false).value;
}

}  // namespace

IdentityReport check_lue_log_integral() {
  const double lhs = half_line_pv([](double t, double) { return 2.0 / (1.0 + t) - 1.0 / (t + 0.5); });
  return quad_report("lue_integrals", {{"part", 1}}, lhs, 2.0 * std::numbers::ln2, 1e-8);
}

IdentityReport check_lue_integrals(unsigned m) {
  if (m > 15) throw DomainError("check_lue_integrals: m must be <= 15");
  const int e = 2 * int(m) - 1;
  auto h = [e](double t, double d) {
    const double q = d / (t + 0.5);
    return 4.0 / (1.0 + t) + std::pow(q, e) / ((t + 0.5) * (t + 0.5));
  };
  const double lhs = half_line_pv(h);
  const double rhs = 4.0 * (std::numbers::ln2 + 2.0 * static_cast<double>(odd_harmonic(m)));
  return quad_report("lue_integrals", {{"part", 2}, {"m", m}}, lhs, rhs, 1e-8);
}

std::vector<std::string> identity_names() {
  return {"hockey_stick",     "calcul_gue", "binomial_identity",  "harmonic_identity",
          "pk",               "stieltjes",  "feldheim",           "howell",
          "integral_mh",      "beta_prime_log", "laguerre_convolution", "lue_integrals"};
}

std::vector<IdentityReport> run_suite(const SuiteOptions& options) {
  const auto names = identity_names();
  if (!options.only.empty() && std::find(names.begin(), names.end(), options.only) == names.end())
    throw DomainError("run_suite: unknown identity '" + options.only + "'");
  auto want = [&](const char* name) { return options.only.empty() || options.only == name; };
  auto cap = [&](unsigned dflt) { return options.n_max == 0 ? dflt : std::min(dflt, options.n_max); };

  std::vector<IdentityReport> out;
  if (want("hockey_stick"))
    for (unsigned n = 1; n <= cap(30); ++n)
      for (unsigned r = 0; r < n; ++r) out.push_back(check_hockey_stick(n, r));
  if (want("calcul_gue"))
    for (unsigned n = 1; n <= cap(30); ++n) out.push_back(check_calcul_gue(n));
  if (want("binomial_identity"))
    for (unsigned k = 0; k <= cap(12); ++k)
      for (unsigned l = 0; l <= cap(12); ++l)
        for (unsigned p = 0; p <= cap(12); ++p) out.push_back(check_binomial_identity(k, l, p));
  if (want("harmonic_identity"))
    for (unsigned n = 1; n <= cap(25); ++n) out.push_back(check_harmonic_identity(n));
  if (want("pk"))
    for (unsigned n = 1; n <= cap(25); ++n) out.push_back(check_pk(n));
  if (want("stieltjes")) {
    const double z[] = {0.5, 1.0, 2.5, 10.0};
    for (unsigned n = 1; n <= cap(10); ++n) out.push_back(check_stieltjes(n, z));
  }
  if (want("feldheim")) {
    std::vector<double> grid(50);
    for (int i = 0; i < 50; ++i) grid[i] = -5.0 + 10.0 * i / 49.0;
    for (unsigned k = 0; k <= cap(10); ++k) out.push_back(check_feldheim(k, grid));
  }
  if (want("howell")) {
    std::vector<double> grid(50);
    for (int i = 0; i < 50; ++i) grid[i] = 10.0 * i / 49.0;
    for (unsigned k = 0; k <= cap(8); ++k) out.push_back(check_howell(k, grid));
  }
  if (want("integral_mh"))
    for (unsigned n = 1; n <= cap(4); ++n)
      for (double t : {0.5, 1.0, 2.0}) out.push_back(check_integral_mh(n, t));
  if (want("beta_prime_log"))
    for (unsigned n = 1; n <= cap(20); ++n) out.push_back(check_beta_prime_log(n));
  if (want("laguerre_convolution"))
    for (unsigned k = 0; k <= cap(4); ++k)
      for (unsigned l = 0; l <= cap(4); ++l)
        for (double t : {0.3, 0.5, 1.0, 2.0}) out.push_back(check_laguerre_convolution(k, l, t));
  if (want("lue_integrals")) {
    out.push_back(check_lue_log_integral());
    for (unsigned m = 0; m <= cap(15); ++m) out.push_back(check_lue_integrals(m));
  }
  return out;
}

namespace {

nlohmann::ordered_json value_json(const IdentityValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return q->str();
  return std::get<double>(v);
}

}  // namespace

std::string to_json_line(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, v] : r.params) {
    if (v == std::floor(v) && std::abs(v) < 1e15)
      params[name] = static_cast<long long>(v);
    else
      params[name] = v;
  }
  j["params"] = params;
  j["lhs"] = value_json(r.lhs);
  j["rhs"] = value_json(r.rhs);
  j["discrepancy"] = r.discrepancy;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["mode"] = r.mode == IdentityMode::Exact ? "exact" : "quadrature";
  j["tolerance"] = r.tolerance;
  return j.dump();
}

void write_json_lines(std::ostream& out, const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) out << to_json_line(r) << '\n';
}

}  // namespace logenergy
