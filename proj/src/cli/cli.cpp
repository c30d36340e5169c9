#include "logenergy/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "logenergy/closedform.hpp"
#include "logenergy/errors.hpp"
#include "logenergy/identities.hpp"
#include "logenergy/logenergy.hpp"
#include "logenergy/rmt/estimator.hpp"
#include "logenergy/rmt/spectrum_io.hpp"

namespace logenergy::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string normalized(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != '-' && c != '_') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

// shortest round-trip form
std::string fmt(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

// A table cell; monostate is an empty CSV field and a JSON null.
using Cell = std::variant<std::monostate, double, long long, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // extra JSON-only fields per row
  std::vector<Json> extras;
};

std::string csv_cell(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return "";
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? fmt(*d) : "";
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

Json json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? Json(*d) : Json(nullptr);
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return nullptr;
}

void write_table(std::ostream& out, const Table& t, Format format, const std::string& command) {
  if (format == Format::Csv) {
    for (std::size_t j = 0; j < t.columns.size(); ++j) out << (j ? "," : "") << t.columns[j];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_cell(row[j]);
      out << '\n';
    }
    return;
  }
  Json doc;
  doc["command"] = command;
  doc["columns"] = t.columns;
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    Json r;
    for (std::size_t j = 0; j < t.columns.size(); ++j) r[t.columns[j]] = json_cell(t.rows[i][j]);
    if (i < t.extras.size())
      for (const auto& [k, v] : t.extras[i].items()) r[k] = v;
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

Ensemble parse_ensemble(const std::string& name) {
  const auto key = normalized(name);
  if (key == "gue") return Ensemble::GUE;
  if (key == "ginibre") return Ensemble::Ginibre;
  if (key == "lue") return Ensemble::LUE;
  throw DomainError("unknown ensemble '" + name + "' (expected gue, ginibre or lue)");
}

EntryDistribution parse_dist(const RunConfig& c) {
  const auto key = normalized(c.dist);
  if (key == "gaussian" || key == "gaussianreal" || key == "real") return EntryDistribution(GaussianReal{});
  if (key == "gaussiancomplex" || key == "complexgaussian" || key == "complex")
    return EntryDistribution(GaussianComplex{});
  if (key == "rademacher") return EntryDistribution(Rademacher{});
  if (key == "sgg") return EntryDistribution(SGG{c.d, c.p});
  if (key == "heavy") return EntryDistribution(Heavy{c.alpha});
  throw DomainError("unknown distribution '" + c.dist +
                    "' (expected gaussian, gaussian-complex, rademacher, sgg or heavy)");
}

Table closed_form_table(const RunConfig& c) {
  const auto which = parse_ensemble(c.ensemble);
  Table t;
  t.columns = {"n", "raw", "moment", "penalized", "delta", "delta2"};
  for (unsigned n : c.n_list) {
    const auto e = energy(which, n);
    const double next = energy(which, n + 1).penalized;
    const double delta = next - e.penalized;
    Cell delta2;
    if (n >= 2) delta2 = next - 2 * e.penalized + energy(which, n - 1).penalized;
    t.rows.push_back({static_cast<long long>(n), e.raw_energy, e.moment, e.penalized, delta, delta2});
  }
  return t;
}

Table quadrature_table(const RunConfig& c, bool& all_pass) {
  const auto which = parse_ensemble(c.ensemble);
  QuadSpec quad;
  quad.target_tol = c.quad_tol;
  validate(quad);
  Table t;
  t.columns = {"n", "closed_form", "quadrature", "abs_diff", "tol", "pass"};
  all_pass = true;
  for (unsigned n : c.n_list) {
    if (n > 12) throw DomainError("quadrature-check supports n <= 12");
    const double exact = energy(which, n).raw_energy;
    const EnergyEstimate q = which == Ensemble::Ginibre ? log_energy_radial_estimate(ginibre_density(n, true), quad)
                             : which == Ensemble::GUE   ? log_energy_1d_estimate(gue_density(n, true), quad)
                                                        : log_energy_1d_estimate(lue_density(n, true), quad);
    const double diff = std::abs(q.value - exact);
    const bool pass = diff < c.tol;
    all_pass = all_pass && pass;
    t.rows.push_back({static_cast<long long>(n), exact, q.value, diff, c.tol, pass});
    t.extras.push_back(Json{{"error_bound", q.error_bound}, {"panels", q.panel_count_used}});
  }
  return t;
}

std::string params_text(const IdentityReport& r) {
  std::string s;
  for (const auto& [k, v] : r.params) s += (s.empty() ? "" : ";") + k + "=" + fmt(v);
  return s;
}

std::string value_text(const IdentityValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return q->str();
  return fmt(std::get<double>(v));
}

int cmd_identities(const RunConfig& c, std::ostream& out, std::ostream& err) {
  SuiteOptions opt;
  if (!c.only.empty()) {
    opt.only = c.only;
    std::replace(opt.only.begin(), opt.only.end(), '-', '_');
  }
  opt.n_max = c.n_max;
  const auto reports = run_suite(opt);
  if (c.format == Format::Json) {
    write_json_lines(out, reports);
  } else {
    out << "identity,params,lhs,rhs,discrepancy,tolerance,mode,verdict\n";
    for (const auto& r : reports)
      out << r.identity << ',' << params_text(r) << ',' << value_text(r.lhs) << ',' << value_text(r.rhs) << ','
          << fmt(r.discrepancy) << ',' << fmt(r.tolerance) << ',' << (r.mode == IdentityMode::Exact ? "exact" : "quadrature")
          << ',' << (r.pass ? "pass" : "fail") << '\n';
  }
  std::size_t failures = 0;
  for (const auto& r : reports)
    if (!r.pass) {
      ++failures;
      err << "FAIL " << to_json_line(r) << '\n';
    }
  err << reports.size() << " checks, " << failures << " failures\n";
  return failures == 0 ? kOk : kIdentityFailure;
}

std::string spectra_path(const std::string& base, unsigned n, bool many) {
  if (!many) return base;
  const auto dot = base.find_last_of('.');
  const auto slash = base.find_last_of('/');
  const std::string tag = ".n" + std::to_string(n);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return base + tag;
  return base.substr(0, dot) + tag + base.substr(dot);
}

Table mc_table(const RunConfig& c, std::ostream& err) {
  EnsembleSpec spec;
  spec.model = parse_model(c.model);
  spec.beta = c.beta;
  const bool wants_dist = spec.model == Model::Wigner || spec.model == Model::IID || spec.model == Model::Wishart;
  if (wants_dist) {
    if (c.dist.empty()) throw DomainError("--dist is required for model " + model_name(spec.model));
    spec.dist = parse_dist(c);
    if (!spec.dist->warning().empty()) err << "warning: " << spec.dist->warning() << '\n';
    if (const auto* s = std::get_if<SGG>(&spec.dist->kind()); s && s->d == 1.0 && s->p == 2.0) {
      if (spec.model == Model::IID) err << "note: SGG(1,2) is the real Gaussian law; IID corresponds to the real Ginibre ensemble\n";
      if (spec.model == Model::Wigner) err << "note: SGG(1,2) is the real Gaussian law; Wigner corresponds to GOE\n";
    }
  } else if (!c.dist.empty()) {
    throw DomainError("--dist applies only to wigner, iid and wishart");
  }

  Table t;
  t.columns = {"model", "dist", "n", "estimate", "stderr", "rejected", "moment", "penalized", "reference"};
  std::string dist_label;
  if (spec.dist) dist_label = spec.dist->name();
  if (spec.model == Model::BetaHermite) dist_label = "beta=" + fmt(spec.beta);
  const unsigned workers = worker_count(c.threads);
  for (unsigned n : c.n_list) {
    spec.n = n;
    spec.validate();
    const auto batch = sample_spectra(spec, c.replicas, c.seed, workers);
    if (!c.spectra.empty()) {
      const auto path = spectra_path(c.spectra, n, c.n_list.size() > 1);
      std::ofstream f(path);
      if (!f) throw DomainError("cannot write " + path);
      write_spectrum_csv(f, batch);
    }
    const auto e = estimate_from_batch(batch, spec.penalty());
    const auto ref = reference_energy(spec);
    Cell reference;
    if (ref) reference = *ref;
    t.rows.push_back({model_name(spec.model), dist_label, static_cast<long long>(n), e.raw.value, e.raw.std_error,
                      static_cast<long long>(e.raw.rejected_pairs), e.moment.value, e.penalized.value, reference});
    t.extras.push_back(Json{{"moment_stderr", e.moment.std_error},
                            {"penalized_stderr", e.penalized.std_error},
                            {"penalized_nominal", e.penalized_nominal.value},
                            {"pairs", e.raw.replica_pairs_used},
                            {"replicas", c.replicas},
                            {"seed", c.seed}});
  }
  return t;
}

std::string json_arg(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number_float()) return fmt(v.get<double>());
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + json_arg(x);
    return s;
  }
  throw DomainError("unsupported config value " + v.dump());
}

}  // namespace

void RunConfig::validate() const {
  if (n_list.empty()) throw DomainError("--n is required");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] == 0) throw DomainError("n must be positive");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw DomainError("n list must be strictly increasing");
  }
  if (replicas < 2 || replicas % 2 != 0) throw DomainError("--replicas must be even and >= 2");
}

std::vector<unsigned> parse_n_list(const std::string& text) {
  std::vector<unsigned> out;
  auto number = [&](const std::string& s) -> unsigned {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || s[0] == '-') throw DomainError("bad n value '" + s + "'");
    return static_cast<unsigned>(v);
  };
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }), item.end());
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const unsigned a = number(item.substr(0, dots));
    const unsigned b = number(item.substr(dots + 2));
    if (b < a) throw DomainError("empty n range '" + item + "'");
    for (unsigned n = a; n <= b; ++n) out.push_back(n);
  }
  if (out.empty()) throw DomainError("empty n list");
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string n_text, format_text, config_path;

  CLI::App app("Logarithmic energies of random matrix spectra", "logenergy");
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", c.output, "Output file (default: stdout)");
    sub->add_option("--config", config_path, "JSON file of option values; flags take precedence");
  };
  auto* closed = app.add_subcommand("closed-form", "Closed-form energies with finite differences");
  closed->add_option("--ensemble", c.ensemble, "gue, ginibre or lue");
  closed->add_option("--n", n_text, "Comma list or a..b span");
  common(closed);
  auto* quad = app.add_subcommand("quadrature-check", "Closed form against quadrature of the mean density");
  quad->add_option("--ensemble", c.ensemble, "gue, ginibre or lue");
  quad->add_option("--n", n_text, "Comma list or a..b span, n <= 12");
  quad->add_option("--tol", c.tol, "Pass threshold on |diff|");
  quad->add_option("--quad-tol", c.quad_tol, "Quadrature target tolerance");
  common(quad);
  auto* ids = app.add_subcommand("identities", "Run the identity suite");
  ids->add_option("--only", c.only, "Run a single identity");
  ids->add_option("--n-max", c.n_max, "Cap on the size parameter");
  common(ids);
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of the mean-ESD energy");
  mc->add_option("--model", c.model, "gue, ginibre, lue, beta-hermite, wigner, iid, wishart");
  mc->add_option("--dist", c.dist, "gaussian, gaussian-complex, rademacher, sgg, heavy");
  mc->add_option("--d", c.d, "SGG shape d");
  mc->add_option("--p", c.p, "SGG exponent p");
  mc->add_option("--alpha", c.alpha, "Heavy tail index");
  mc->add_option("--beta", c.beta, "beta-Hermite parameter");
  mc->add_option("--n", n_text, "Comma list or a..b span");
  mc->add_option("--replicas", c.replicas, "Even number of matrix draws per n");
  mc->add_option("--seed", c.seed, "Master seed");
  mc->add_option("--threads", c.threads, "Worker threads (0: hardware, capped by LOGENERGY_THREADS)");
  mc->add_option("--spectra", c.spectra, "Also write sampled spectra as CSV");
  common(mc);

  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  auto parse = [&](std::vector<std::string> a) {
    std::reverse(a.begin(), a.end());
    app.parse(a);
  };
  try {
    parse(args);
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw DomainError("cannot read config " + config_path);
      const Json cfg = Json::parse(f);
      if (!cfg.is_object()) throw DomainError("config must be a JSON object");
      CLI::App* sub = app.get_subcommands().front();
      std::vector<std::string> extra;
      for (const auto& [key, value] : cfg.items()) {
        std::string flag = "--" + key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        const CLI::Option* opt = sub->get_option_no_throw(flag);
        if (opt == nullptr || flag == "--config") throw DomainError("unknown config key '" + key + "'");
        if (opt->count() > 0) continue;
        extra.push_back(flag);
        extra.push_back(json_arg(value));
      }
      auto merged = args;
      merged.insert(merged.end(), extra.begin(), extra.end());
      app.clear();
      parse(merged);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: config: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  c.command = sub->get_name();
  c.format = (format_text.empty() ? (c.command == "identities" ? "json" : "csv") : format_text) == "json" ? Format::Json
                                                                                                           : Format::Csv;
  try {
    if (c.command != "identities") {
      c.n_list = parse_n_list(n_text);
      c.validate();
    }
    std::ofstream file;
    if (!c.output.empty()) {
      file.open(c.output);
      if (!file) throw DomainError("cannot write " + c.output);
    }
    std::ostream& sink = c.output.empty() ? out : file;
    if (c.command == "identities") return cmd_identities(c, sink, err);
    if (c.command == "closed-form") {
      write_table(sink, closed_form_table(c), c.format, c.command);
      return kOk;
    }
    if (c.command == "quadrature-check") {
      bool all_pass = true;
      write_table(sink, quadrature_table(c, all_pass), c.format, c.command);
      if (!all_pass) err << "error: quadrature disagrees with the closed form beyond tolerance\n";
      return all_pass ? kOk : kNumerical;
    }
    write_table(sink, mc_table(c, err), c.format, c.command);
    return kOk;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace logenergy::cli
