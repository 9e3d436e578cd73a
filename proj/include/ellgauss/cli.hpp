#pragma once

#include <iosfwd>
#include <string>

#include "ellgauss/report.hpp"

namespace ellgauss {

/// Environment variable holding the default working precision in bits.
inline constexpr const char* kPrecisionEnv = "ELLGAUSS_PREC";

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

struct RunConfig {
  mpfr_prec_t precision_bits = 128;
  mpfr_prec_t max_precision = 4096;
  unsigned long lmax = 500;
  report::Format format = report::Format::Text;
  unsigned jobs = 1;
  std::string out;
  unsigned long ell = 0;
  unsigned long prime = 0;
  unsigned long norm_bound = 1000;

  /// Throws InvalidArgument unless precision is in [64, 4096] and lmax >= 7.
  void validate() const;
  PrecisionPolicy policy() const { return {precision_bits, max_precision}; }
};

/// Full pipeline for one prime as a single JSON record; "status" is pass, fail, skip or error.
report::json verify_record(unsigned long ell, const RunConfig& cfg);

int cmd_tables(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_gauss(const RunConfig& cfg, std::ostream& out);
int cmd_curve(const RunConfig& cfg, std::ostream& out);
int cmd_sha(const RunConfig& cfg, std::ostream& out);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ellgauss
