#pragma once

// Command-line front end. Exit status: 0 when every check passes, 1 when a
// verification fails, 2 for usage and configuration errors.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quiltlab::cli {

struct RunConfig {
  std::string command;  // catalog, verify, sweep, area, floer, moment-plot, eight
  std::string quilt;
  std::string family;   // const, maslov1 or all
  std::optional<double> h;
  std::vector<double> h_grid;
  std::optional<std::size_t> samples;
  std::optional<double> tol_seam;
  std::optional<double> tol_boundary;
  std::optional<double> tol_area;
  std::string side = "cp2";
  std::string out;
  std::string report;
  std::string tamper;
  std::uint64_t seed = 1;
  bool json = false;
};

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Reads "key = value" lines (# comments) or a flat JSON object.
/// Throws std::runtime_error on malformed input.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Parses arguments (argv[0] excluded), merges --config file values under
/// the flags and runs the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Writes each file to a temporary name in dir, then renames them all into place.
void write_files_atomically(const std::string& dir, const std::vector<std::pair<std::string, std::string>>& files);

}  // namespace quiltlab::cli
