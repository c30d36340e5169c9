#pragma once

// Command-line front end: closed-form tables, quadrature cross-checks, the
// identity suite and Monte Carlo figure data.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace logenergy::cli {

enum ExitCode { kOk = 0, kIdentityFailure = 1, kUsage = 2, kNumerical = 3 };

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;
  std::string ensemble = "gue";  // closed-form, quadrature-check
  std::string model = "gue";     // mc
  std::string dist;
  double d = 1.0;
  double p = 2.0;
  double alpha = 5.0;
  double beta = 2.0;
  std::vector<unsigned> n_list;
  unsigned replicas = 20000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  double tol = 1e-6;        // quadrature-check pass threshold
  double quad_tol = 1e-7;   // quadrature target
  std::string only;
  unsigned n_max = 0;
  std::string output;
  std::string spectra;
  Format format = Format::Csv;

  /// Throws DomainError on an empty or non-increasing n list or odd replicas.
  void validate() const;
};

/// "1,2,4" or "1..10" (mixed: "1..3,8").
std::vector<unsigned> parse_n_list(const std::string& text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace logenergy::cli
