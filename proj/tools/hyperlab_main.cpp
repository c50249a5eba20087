// Scenario runner: validates, executes and reports declarative experiment
// configs. Exit code 0 covers every computed verdict, including negative
// ones; nonzero codes signal validation or execution problems only.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperlab/scenario.hpp"

namespace fs = std::filesystem;
using hyperlab::Json;

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json doc;
  in >> doc;
  return doc;
}

std::string output_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("HYPERLAB_OUT")) return env;
  return "out";
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void persist_record(const Json& record, const fs::path& dir) {
  const std::string name = record["scenario"].value("name", "scenario");
  fs::create_directories(dir);
  write_file(dir / (name + ".record.json"), record.dump(2) + "\n");
  write_file(dir / (name + ".machine.jsonl"), hyperlab::emit_machine(record));
  for (const auto& [suffix, content] : hyperlab::emit_csv(record))
    write_file(dir / (name + "." + suffix), content);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperlab: induced hyperspace dynamics laboratory"};
  app.require_subcommand(1);

  std::string config_path, record_path, out_flag, format = "table-text";
  std::string scenario_dir = "scenarios";

  auto* run = app.add_subcommand("run", "execute a scenario config");
  run->add_option("config", config_path, "scenario JSON file")->required();
  run->add_option("--out", out_flag, "output directory (or $HYPERLAB_OUT)");

  auto* validate = app.add_subcommand("validate", "check a scenario config");
  validate->add_option("config", config_path, "scenario JSON file")->required();

  auto* report = app.add_subcommand("report", "re-emit reports from a record");
  report->add_option("record", record_path, "record JSON file")->required();
  report->add_option("--format", format, "table-text | machine");
  report->add_option("--out", out_flag, "output directory (or $HYPERLAB_OUT)");

  auto* list = app.add_subcommand("list-scenarios", "list shipped scenarios");
  list->add_option("--dir", scenario_dir, "scenario directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(run)) {
      const Json doc = load_json(config_path);
      const auto val = hyperlab::validate_scenario_document(doc);
      if (!val.ok) {
        std::cerr << "invalid config " << config_path << ":\n";
        for (const auto& p : val.problems) std::cerr << "  - " << p << "\n";
        return 1;
      }
      const fs::path dir = output_dir(out_flag);
      for (const auto& record : hyperlab::run_scenario_document(doc)) {
        persist_record(record, dir);
        std::cout << hyperlab::emit_table_text(record);
      }
      return 0;
    }
    if (app.got_subcommand(validate)) {
      const Json doc = load_json(config_path);
      const auto val = hyperlab::validate_scenario_document(doc);
      if (val.ok) {
        std::cout << "ok\n";
        return 0;
      }
      for (const auto& p : val.problems) std::cout << "  - " << p << "\n";
      return 1;
    }
    if (app.got_subcommand(report)) {
      const Json record = load_json(record_path);
      if (format == "machine") {
        const std::string text = hyperlab::emit_machine(record);
        if (!out_flag.empty() || std::getenv("HYPERLAB_OUT")) {
          const fs::path dir = output_dir(out_flag);
          fs::create_directories(dir);
          const std::string name = record["scenario"].value("name", "scenario");
          write_file(dir / (name + ".machine.jsonl"), text);
          for (const auto& [suffix, content] : hyperlab::emit_csv(record))
            write_file(dir / (name + "." + suffix), content);
        } else {
          std::cout << text;
        }
      } else if (format == "table-text") {
        std::cout << hyperlab::emit_table_text(record);
      } else {
        std::cerr << "unknown format: " << format << "\n";
        return 1;
      }
      return 0;
    }
    if (app.got_subcommand(list)) {
      if (!fs::exists(scenario_dir)) {
        std::cerr << "no scenario directory: " << scenario_dir << "\n";
        return 1;
      }
      std::vector<std::string> names;
      for (const auto& e : fs::directory_iterator(scenario_dir))
        if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
      std::sort(names.begin(), names.end());
      for (const auto& n : names) std::cout << n << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
