#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace psg::cli {

using Json = nlohmann::ordered_json;

/// One unit of work, from flags or from a batch line.
struct JobSpec {
  std::string command = "invariants";
  std::vector<std::int64_t> gens;
  std::int64_t p_lo = 0;
  std::int64_t p_hi = 0;
  bool p_is_range = false;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> trunc;
  std::optional<std::int64_t> modulus;
  int mu = 3;
  bool verify = false;
  bool gaps = false;
};

/// "3,10,17" -> {3, 10, 17}. Throws ValidationError.
std::vector<std::int64_t> parse_gens(const std::string& text);

/// "5" or "2..9". Throws ValidationError.
void parse_p(const std::string& text, JobSpec& job);

/// Reads a batch line. Throws ValidationError on malformed input.
JobSpec job_from_json(const Json& line);

/// Runs one job and returns its canonical JSON document. Sweeps return
/// {"command": "sweep", "rows": [...]}.
Json run_job(const JobSpec& job);

/// Exit code for an exception escaping run_job: 2 for validation, 1 otherwise.
int exit_code_for(const std::exception& e);

/// The whole command line. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

}  // namespace psg::cli
