#pragma once
// Command-line front end: job parsing, decision/lift runs with JSON
// certificates on stdout, certificate verification, the identity self-test
// suite, and the demo reproducing the golden examples.

#include <iosfwd>
#include <map>

#include "spinlift/image_decision.hpp"
#include "spinlift/selftest.hpp"

namespace spinlift {

// Process exit codes for the decision commands.
inline constexpr int kExitInImage = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitObstruction = 3;
inline constexpr int kExitRank2ForwardOnly = 4;

struct JobSpec {
  enum class Command { Decide, Lift, VerifyCertificate, SelfTest, Demo };

  Command command = Command::Demo;
  Field field = Field::rationals();
  int rank = 0;
  std::optional<Matrix> matrix;
  std::map<std::string, std::string> params;  // e.g. "cert" for verify
  std::uint64_t seed = 0;
  int rank_bound = 6;
  bool pretty = false;
};

// Parses an argv-style command line; a "--job <file>" option may supply the
// same data as JSON.  Throws Error on invalid input.
JobSpec parse_job(int argc, const char* const* argv);

// Runs a validated job; certificate or report JSON goes to `out`.
int run_job(const JobSpec& job, std::ostream& out);

// parse_job + run_job with structured JSON errors on `err` and exit code 2.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinlift
