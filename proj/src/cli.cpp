#include "spinlift/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spinlift/spin_rep.hpp"

namespace spinlift {

namespace {

// Accepts the CLI form "GF:p" as well as the tag form "GF(p)".
Field parse_field_option(const std::string& text) {
  if (text.rfind("GF:", 0) == 0) {
    mpz_class p;
    if (mpz_set_str(p.get_mpz_t(), text.substr(3).c_str(), 10) != 0) {
      throw Error(ErrorCode::ParseError, "bad prime in field option '" + text + "'");
    }
    return Field::prime(p);
  }
  return Field::parse_tag(text);
}

Matrix parse_matrix_option(const Field& field, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("matrix JSON: ") + e.what());
  }
  Matrix m = matrix_from_json(field, j);
  if (m.rows() != m.cols()) throw Error(ErrorCode::ParseError, "matrix must be square");
  return m;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void apply_job_file(JobSpec& job, const std::string& path) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("job JSON: ") + e.what());
  }
  if (j.contains("field")) job.field = parse_field_option(j["field"].get<std::string>());
  if (j.contains("seed")) job.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("rank_max")) job.rank_bound = j["rank_max"].get<int>();
  if (j.contains("pretty")) job.pretty = j["pretty"].get<bool>();
  if (j.contains("matrix")) {
    Matrix m = matrix_from_json(job.field, j["matrix"]);
    if (m.rows() != m.cols()) throw Error(ErrorCode::ParseError, "matrix must be square");
    job.matrix = std::move(m);
  }
  if (j.contains("cert")) job.params["cert"] = j["cert"].get<std::string>();
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::InImage: return kExitInImage;
    case Verdict::Obstruction: return kExitObstruction;
    case Verdict::Rank2ForwardOnly: return kExitRank2ForwardOnly;
  }
  return kExitError;
}

int run_decide(const JobSpec& job, std::ostream& out) {
  const SpinLiftCertificate cert = levi_decide({*job.matrix});
  out << dump(certificate_to_json(cert), job.pretty) << "\n";
  return verdict_exit_code(cert.verdict);
}

int run_verify(const JobSpec& job, std::ostream& out) {
  const auto it = job.params.find("cert");
  if (it == job.params.end()) {
    throw Error(ErrorCode::ParseError, "verify needs --cert <file> (or '-' for stdin)");
  }
  json j;
  try {
    j = json::parse(read_text(it->second));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("certificate JSON: ") + e.what());
  }
  const SpinLiftCertificate cert = certificate_from_json(j);
  const bool ok = verify_certificate(cert);
  json report;
  report["verified"] = ok;
  report["verdict"] = verdict_name(cert.verdict);
  report["field"] = cert.field.tag();
  report["det"] = cert.det.str();
  out << dump(report, job.pretty) << "\n";
  return ok ? 0 : kExitVerifyFailed;
}

int run_selftest_job(const JobSpec& job, std::ostream& out) {
  SelfTestOptions options;
  options.rank_max = job.rank_bound;
  options.seed = job.seed;
  const SelfTestResult result = run_selftest(options);
  json items = json::array();
  for (const auto& item : result.items) {
    json entry;
    entry["name"] = item.name;
    entry["passed"] = item.passed;
    if (!item.passed) entry["detail"] = item.detail;
    items.push_back(std::move(entry));
  }
  json report;
  report["seed"] = job.seed;
  report["rank_max"] = job.rank_bound;
  report["checks"] = std::move(items);
  report["all_passed"] = result.all_passed();
  out << dump(report, job.pretty) << "\n";
  return result.all_passed() ? 0 : kExitVerifyFailed;
}

int run_demo(const JobSpec& job, std::ostream& out) {
  json report;

  // The rational obstruction: diag(2,1,1) has nonsquare determinant.
  const Field rationals = Field::rationals();
  Matrix diag = Matrix::identity(rationals, 3);
  diag.at(0, 0) = rationals.from_int(2);
  report["obstruction"] = certificate_to_json(levi_decide({diag}));

  // The same diagonal over GF(7), where 2 = 3^2 is a square.
  const Field gf7 = Field::prime(7);
  Matrix diag7 = Matrix::identity(gf7, 3);
  diag7.at(0, 0) = gf7.from_int(2);
  report["lift_mod_7"] = certificate_to_json(levi_decide({diag7}));

  // The rank-2 shear: delta = e^2, w = e_1.
  const LiftFactor shear = transvection_lift(DualVector::basis(rationals, 2, 2),
                                             PrimalVector::basis(rationals, 2, 1));
  json shear_json;
  shear_json["element"] = clifford_to_json(shear.element);
  shear_json["orthogonal_action"] = matrix_to_json(shear.ortho.matrix());
  shear_json["exterior_action"] = matrix_to_json(spinor_action(shear.element).matrix());
  report["shear"] = std::move(shear_json);

  out << dump(report, job.pretty) << "\n";
  return 0;
}

}  // namespace

JobSpec parse_job(int argc, const char* const* argv) {
  JobSpec job;
  CLI::App app{"spinlift: exact spin lifts and square-class decisions for split hyperbolic forms"};
  app.require_subcommand(1);

  std::string field_text = "Q";
  std::string matrix_text;
  std::string job_file;
  std::string cert_path;

  auto add_common = [&](CLI::App* cmd, bool with_matrix) {
    cmd->add_option("--field", field_text, "field: Q or GF:p (p an odd prime)");
    if (with_matrix) cmd->add_option("--matrix", matrix_text, "square matrix as JSON");
    cmd->add_option("--job", job_file, "job description as a JSON file");
    cmd->add_option("--rank-max", job.rank_bound, "largest accepted rank");
    cmd->add_flag("--pretty", job.pretty, "indent JSON output");
    cmd->add_flag("--json", [](std::int64_t) {}, "emit JSON (default)");
  };

  CLI::App* decide = app.add_subcommand("decide", "decide spin-image membership");
  add_common(decide, true);
  CLI::App* lift = app.add_subcommand("lift", "construct and verify an explicit lift");
  add_common(lift, true);
  CLI::App* verify = app.add_subcommand("verify", "re-check a certificate");
  add_common(verify, false);
  verify->add_option("--cert", cert_path, "certificate JSON file, or '-' for stdin");
  CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite");
  add_common(selftest, false);
  selftest->add_option("--seed", job.seed, "random seed");
  CLI::App* demo = app.add_subcommand("demo", "print the golden examples");
  add_common(demo, false);

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    throw;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }

  if (decide->parsed()) job.command = JobSpec::Command::Decide;
  if (lift->parsed()) job.command = JobSpec::Command::Lift;
  if (verify->parsed()) job.command = JobSpec::Command::VerifyCertificate;
  if (selftest->parsed()) job.command = JobSpec::Command::SelfTest;
  if (demo->parsed()) job.command = JobSpec::Command::Demo;

  job.field = parse_field_option(field_text);
  if (!job_file.empty()) apply_job_file(job, job_file);
  if (!matrix_text.empty()) job.matrix = parse_matrix_option(job.field, matrix_text);
  if (!cert_path.empty()) job.params["cert"] = cert_path;

  const bool needs_matrix = job.command == JobSpec::Command::Decide ||
                            job.command == JobSpec::Command::Lift;
  if (needs_matrix) {
    if (!job.matrix) throw Error(ErrorCode::ParseError, "decide/lift need --matrix or --job");
    job.rank = job.matrix->rows();
    if (job.rank < 1) throw Error(ErrorCode::ParseError, "matrix must have positive rank");
    if (job.rank > job.rank_bound) {
      throw Error(ErrorCode::RankBoundExceeded,
                  "rank " + std::to_string(job.rank) + " exceeds bound " +
                      std::to_string(job.rank_bound));
    }
  }
  return job;
}

int run_job(const JobSpec& job, std::ostream& out) {
  if (job.rank_bound > max_operator_rank()) set_max_operator_rank(job.rank_bound);
  switch (job.command) {
    case JobSpec::Command::Decide:
    case JobSpec::Command::Lift:
      return run_decide(job, out);
    case JobSpec::Command::VerifyCertificate:
      return run_verify(job, out);
    case JobSpec::Command::SelfTest:
      return run_selftest_job(job, out);
    case JobSpec::Command::Demo:
      return run_demo(job, out);
  }
  return kExitError;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const JobSpec job = parse_job(argc, argv);
    return run_job(job, out);
  } catch (const CLI::CallForHelp&) {
    return 0;
  } catch (const Error& e) {
    json j;
    j["error"] = error_code_name(e.code());
    j["message"] = e.what();
    err << j.dump() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    json j;
    j["error"] = "Internal";
    j["message"] = e.what();
    err << j.dump() << "\n";
    return kExitError;
  }
}

}  // namespace spinlift
