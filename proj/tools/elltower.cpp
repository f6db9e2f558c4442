#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "elltower/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) elltower::fail(elltower::errc::parse_error, "cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) elltower::fail(elltower::errc::parse_error, "cannot open output file: " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iwasawa invariants of ell-adic towers over Cayley graphs"};
  app.require_subcommand(1);

  std::string input, out_path, format = "json";
  long precision = -1, depth = -1, level = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "job config (JSON)")->required();
    cmd->add_option("--precision", precision, "ell-adic digits for local valuations");
    cmd->add_option("--depth", depth, "tower depth");
    cmd->add_option("--out", out_path, "output path (default stdout)");
    cmd->add_option("--format", format, "json|dot (export only)");
  };

  CLI::App* cmd_validate = app.add_subcommand("validate", "check the admissibility gates");
  CLI::App* cmd_invariants = app.add_subcommand("invariants", "Iwasawa invariants and checks");
  CLI::App* cmd_tower = app.add_subcommand("tower", "complexity growth along the tower");
  CLI::App* cmd_export = app.add_subcommand("export", "derived cover as DOT");
  CLI::App* cmd_report = app.add_subcommand("report", "all-in-one report");
  for (CLI::App* c : {cmd_validate, cmd_invariants, cmd_tower, cmd_export, cmd_report})
    add_common(c);
  cmd_export->add_option("--level", level, "cover level (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    elltower::JobConfig cfg = elltower::parse_config(read_file(input));
    if (precision > 0) cfg.precision = precision;
    if (depth > 0) cfg.tower_depth = depth;

    if (cmd_validate->parsed()) {
      elltower::Json rep = elltower::run_validate(cfg);
      write_output(out_path, elltower::format_json(rep));
      return rep["ok"].get<bool>() ? 0 : 1;
    }
    if (cmd_invariants->parsed()) {
      write_output(out_path, elltower::format_json(elltower::run_invariants(cfg)));
      return 0;
    }
    if (cmd_tower->parsed()) {
      write_output(out_path, elltower::format_json(elltower::run_tower(cfg)));
      return 0;
    }
    if (cmd_export->parsed()) {
      if (format != "dot" && format != "json")
        elltower::fail(elltower::errc::parse_error, "format must be json or dot");
      std::string dot = elltower::export_dot(cfg, level);
      if (format == "dot") {
        write_output(out_path, dot);
      } else {
        elltower::Json wrap;
        wrap["level"] = level;
        wrap["dot"] = dot;
        write_output(out_path, elltower::format_json(wrap));
      }
      return 0;
    }
    if (cmd_report->parsed()) {
      write_output(out_path, elltower::format_json(elltower::run_report(cfg)));
      return 0;
    }
  } catch (const elltower::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == elltower::errc::parse_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
