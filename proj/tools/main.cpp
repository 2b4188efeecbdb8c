#include <higgslab/higgslab.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using Json = nlohmann::ordered_json;

int fail_usage(const std::string& msg) {
  std::cerr << "higgslab: " << msg << "\n";
  return 2;
}

void print_summary(const std::string& command, const Json& report) {
  std::cout << "higgslab " << hl_version() << "  command=" << command
            << "  status=" << report.value("status", std::string("?")) << "\n";
  if (report.contains("checks")) {
    int passed = 0, total = 0;
    for (const Json& c : report.at("checks")) {
      ++total;
      if (c.value("pass", false)) ++passed;
    }
    std::cout << "checks: " << passed << "/" << total << " passed\n";
    for (const Json& c : report.at("checks"))
      if (!c.value("pass", false)) {
        std::cout << "  FAIL " << c.value("name", std::string("?"));
        if (c.contains("detail")) std::cout << ": " << c.at("detail").get<std::string>();
        std::cout << "\n";
      }
  }
  if (report.contains("failure")) {
    const Json& f = report.at("failure");
    std::cout << "failure: " << f.value("code", std::string("?")) << ": "
              << f.value("detail", std::string("")) << "\n";
  }
  if (report.contains("artifacts")) {
    std::cout << "artifacts:";
    for (auto it = report.at("artifacts").begin(); it != report.at("artifacts").end(); ++it)
      std::cout << " " << it.key();
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectral correspondence workbench for split orthogonal Higgs data"};
  std::string command, config_path, out_path;
  long long seed = 0;
  bool parallel = false;
  app.add_option("command", command,
                 "construct-split | build-extension | verify | cayley | "
                 "direct-image | charclass | census | selftest")
      ->required();
  app.add_option("--config", config_path, "JSON config file (default: empty config)");
  app.add_option("--out", out_path, "write the full JSON report to this file");
  CLI::Option* seed_opt =
      app.add_option("--seed", seed, "RNG seed; recorded in the report");
  app.add_flag("--parallel", parallel, "fan out independent work across threads");
  app.set_version_flag("--version", std::string(hl_version()));
  CLI11_PARSE(app, argc, argv);

  std::string config_text = "{}";
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) return fail_usage("cannot read config file '" + config_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    config_text = buf.str();
  }
  if (seed_opt->count() > 0) {
    try {
      Json config = Json::parse(config_text);
      config["seed"] = seed;
      config_text = config.dump();
    } catch (const std::exception&) {
      // leave malformed text alone; the engine reports the schema error
    }
  }

  hl_engine* eng = hl_engine_new();
  if (!eng) return fail_usage("out of memory");
  int exit_code = 2;
  char* report_text =
      hl_run(eng, command.c_str(), config_text.c_str(), parallel ? 1 : 0, &exit_code);
  if (!report_text) {
    hl_engine_free(eng);
    return fail_usage("out of memory");
  }

  try {
    print_summary(command, Json::parse(report_text));
  } catch (const std::exception&) {
    std::cout << report_text;
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      hl_free_string(report_text);
      hl_engine_free(eng);
      return fail_usage("cannot write report file '" + out_path + "'");
    }
    out << report_text;
  }

  hl_free_string(report_text);
  hl_engine_free(eng);
  return exit_code;
}
