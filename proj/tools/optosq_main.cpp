// optosq command-line front end.
//
//   optosq [command] [--preset NAME] [--config FILE] [--set section.key=value]...
//          [--out PATH] [--format csv|json] [--threads N]
//
// Layers apply in order: preset, config file, --set, then the explicit flags.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optosq/config.hpp"
#include "optosq/errors.hpp"
#include "optosq/presets.hpp"
#include "optosq/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw optosq::IoError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

optosq::RunConfig assemble(const std::string& command, const std::string& preset_name,
                           const std::string& config_path, const std::vector<std::string>& sets,
                           const std::string& out, const std::string& format) {
  auto cfg = optosq::preset(preset_name);
  if (!config_path.empty()) optosq::apply_document(cfg, read_file(config_path));
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw optosq::ConfigError("--set expects section.key=value, got '" + s + "'");
    optosq::apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
  }
  if (!command.empty()) optosq::apply_setting(cfg, "run.command", command);
  if (!out.empty()) optosq::apply_setting(cfg, "output.path", out);
  if (!format.empty()) optosq::apply_setting(cfg, "output.format", format);
  optosq::validate(cfg);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirror fluctuation spectra and variances of an optomechanical cavity driven by squeezed vacuum"};
  std::string command, preset_name = "paper-default", config_path, out, format;
  std::vector<std::string> sets;
  unsigned threads = 0;
  bool print_config = false, list_presets = false;

  app.add_option("command", command, "spectrum | variance | sweep | stability | critical-power");
  app.add_option("--preset", preset_name, "starting configuration")->capture_default_str();
  app.add_option("--config", config_path, "config file with section.key = value lines");
  app.add_option("--set", sets, "override one key, e.g. --set system.power_w=5mW");
  app.add_option("--out", out, "output file (default: standard output)");
  app.add_option("--format", format, "csv | json");
  app.add_option("--threads", threads, "worker threads (0: hardware concurrency)");
  app.add_flag("--print-config", print_config, "print the canonical config and exit");
  app.add_flag("--list-presets", list_presets, "list preset names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(optosq::ErrorCategory::config);
  }

  if (list_presets) {
    for (auto name : optosq::preset_names()) std::cout << name << '\n';
    return 0;
  }

  optosq::RunConfig cfg;
  try {
    cfg = assemble(command, preset_name, config_path, sets, out, format);
  } catch (const optosq::Error& e) {
    std::cerr << "optosq: " << optosq::to_string(e.category()) << " error: " << e.what() << '\n';
    return static_cast<int>(e.category());
  }
  if (print_config) {
    std::cout << optosq::serialize(cfg);
    return 0;
  }
  return optosq::run(cfg, std::cout, std::cerr, threads);
}
