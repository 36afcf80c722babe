#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fsplit/ideal.hpp"
#include "fsplit/splitting.hpp"

namespace fsplit {

struct ScenarioIdeal {
  std::string name;
  std::vector<Polynomial> generators;

  Ideal ideal(const RingPtr& ring) const { return Ideal(ring, generators); }

  friend bool operator==(const ScenarioIdeal&, const ScenarioIdeal&) = default;
};

/// A parsed scenario file. Grammar, one declaration per line:
///
///   ring p=<prime> vars=<name>,<name>,... [max-degree=<int>]
///   weights <int>,<int>,...            (repeatable; first row distinguished)
///   splitting standard | splitting g = <polynomial>
///   ideal <name> = <polynomial>, ...   (empty list is the zero ideal)
///   param <key> = <value>
///   # comment
struct Scenario {
  RingPtr ring;
  bool standard = false;
  std::optional<Splitting> splitting;
  std::vector<ScenarioIdeal> ideals;
  std::map<std::string, std::string> params;

  const ScenarioIdeal* find_ideal(std::string_view name) const;

  friend bool operator==(const Scenario& a, const Scenario& b);
};

/// Parameters accepted in `param` lines.
const std::vector<std::string>& known_params();

/// Throws ParseError with the offending line and column, including
/// "premultiplier is not a splitting: Tr(g) = ..." for invalid splittings.
Scenario parse_scenario(std::string_view text);

std::string serialize_scenario(const Scenario& s);

inline constexpr int kReportSchemaVersion = 1;

struct CommandResult {
  std::string summary;
  nlohmann::json report;
  /// 0 success, 1 mathematical refutation, 2 usage or parse error.
  int exit_code = 0;
};

/// Runs one command, e.g. {"rigidity", "I", "--degree-bound", "4"}.
CommandResult run_command(const Scenario& scenario, const std::vector<std::string>& args);

}  // namespace fsplit
