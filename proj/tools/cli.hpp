#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "subcomp/graph.hpp"

namespace subcomp::cli {

enum ExitCode : int {
  kDecided = 0,
  kInternal = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Parameters for `gen`. Unused fields are ignored by a family.
struct GenerateParams {
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<std::size_t> t;
  std::uint64_t seed = 0;
  std::string of = "diamond";  // disjoint-union: component family
  std::size_t copies = 2;      // disjoint-union: component count
};

/// Families: path, cycle, star, complete, empty, diamond, paw, petersen,
/// disjoint-union, gnp. Throws std::invalid_argument on an unknown family
/// or missing parameter.
auto generate(std::string_view family, const GenerateParams& params) -> Graph;

/**
 * One solver outcome. Rendered either as key=value lines or as a single
 * JSON object line. Extra fields keep their insertion order; string extras
 * render bare in key=value form, everything else as compact JSON.
 */
struct RunReport {
  std::string answer;
  std::optional<std::vector<Vertex>> witness;
  std::string provenance;
  std::optional<double> elapsed_ms;
  std::string input_digest;
  std::vector<std::pair<std::string, nlohmann::ordered_json>> extra;

  auto to_lines() const -> std::string;
  auto to_single_line() const -> std::string;
  auto to_json() const -> std::string;
};

/// Entry point behind the `subcomp` binary; `args` excludes the program name.
auto run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) -> int;

}  // namespace subcomp::cli
