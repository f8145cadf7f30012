#include "tamagawa/cli.hpp"

#include <iostream>

#include "CLI11.hpp"
#include "tamagawa/config.hpp"
#include "tamagawa/errors.hpp"
#include "tamagawa/report.hpp"

namespace tamagawa {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Tamagawa numbers, volumes and Siegel masses for split groups over curves"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "text";
  bool verbose = false;
  auto* compute = app.add_subcommand("compute", "Compute the mass report for a group and curve");
  compute->add_option("--config", config_path, "JSON config file")->required();
  compute->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  compute->add_flag("--verbose", verbose, "Print per-degree Euler factors and per-stratum rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    const Config config = load_config(config_path);
    const MassReport report = build_report(config);
    out << (format == "structured" ? render_structured(report, verbose) : render_text(report, verbose));
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  }
}

}  // namespace tamagawa
