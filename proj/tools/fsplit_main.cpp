// Command-line front end: fsplit [--out report.json] <scenario> <command> [args...]

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fsplit/errors.hpp"
#include "fsplit/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Frobenius splittings of graded polynomial rings over F_p"};
  std::string scenario_path;
  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON report to this path");
  app.add_option("scenario", scenario_path, "Scenario file")->required();
  app.prefix_command();
  app.footer(
      "Commands:\n"
      "  check-splitting\n"
      "  graded-part\n"
      "  check-compatible <ideal>\n"
      "  enumerate [--seeds I,J | --brute-force] [--exclude-zero] [--exclude-unit]\n"
      "  hilbert <ideal> [--window k] [--max-n k]\n"
      "  rigidity <ideal> [--degree-bound k]\n"
      "  phi-check <ideal> --N k\n"
      "  fixed-points --hilbert <polynomial in n>\n"
      "Exit codes: 0 success, 1 mathematical refutation, 2 usage or parse error.");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ifstream in(scenario_path);
  if (!in) {
    std::cerr << "cannot open " << scenario_path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  fsplit::Scenario scenario;
  try {
    scenario = fsplit::parse_scenario(buf.str());
  } catch (const fsplit::ParseError& e) {
    std::cerr << scenario_path << ":" << e.what() << "\n";
    return 2;
  }

  fsplit::CommandResult result = fsplit::run_command(scenario, app.remaining());
  (result.exit_code == 2 ? std::cerr : std::cout) << result.summary;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}
