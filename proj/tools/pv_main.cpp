#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pv/cli.hpp"
#include "pv/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picard-Vessiot rings, their Hopf algebras and Galois correspondences"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run the pipeline on a spec document");
  std::string spec_path, stages_list, out_path;
  std::optional<int> degree, samples;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  run->add_option("spec", spec_path, "Spec document (JSON)")->required();
  run->add_option("--stages", stages_list, "Comma-separated subset of universal,quotient,pv,hopf,group,correspondence");
  run->add_option("--degree-bound", degree, "Degree bound for constants and invariants")->check(CLI::PositiveNumber);
  run->add_option("--samples", samples, "Random samples for the simplicity check")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Seed for the simplicity samples");
  run->add_option("--out", out_path, "Write the report here ('-' for standard output)");
  run->add_flag("--timing", timing, "Record per-stage wall time in the report");

  auto* cat = app.add_subcommand("catalog", "The shipped examples");
  bool list = false, run_all = false;
  std::string out_dir, specs_dir;
  auto* list_flag = cat->add_flag("--list", list, "List the entries");
  auto* all_flag = cat->add_flag("--run-all", run_all, "Run every entry through all of its stages");
  cat->add_option("--out-dir", out_dir, "Directory for the reports of --run-all");
  cat->add_option("--write-specs", specs_dir, "Write the spec documents to a directory");
  cat->add_flag("--timing", timing, "Record per-stage wall time in the reports");
  list_flag->excludes(all_flag);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      pv::SpecDocument spec = pv::parse_spec(read_file(spec_path));
      if (degree) spec.bounds.degree = *degree;
      if (samples) spec.bounds.samples = *samples;
      if (seed) spec.bounds.seed = *seed;
      const auto stages = stages_list.empty() ? pv::default_stages(spec) : pv::parse_stages(stages_list);
      pv::Report report;
      try {
        report = pv::run_pipeline(spec, stages, {timing});
      } catch (const pv::Error& e) {
        // Stage selection errors still leave a report behind.
        if (!out_path.empty() && out_path != "-") {
          pv::Json doc;
          doc["name"] = spec.name;
          doc["error"] = pv::to_string(e.kind());
          doc["cause"] = e.what();
          doc["passed"] = false;
          write_file(out_path, doc.dump(2) + "\n");
        }
        throw;
      }
      if (out_path == "-") {
        std::cout << report.text();
        std::cerr << pv::summarize(report.document);
      } else {
        if (!out_path.empty()) write_file(out_path, report.text());
        std::cout << pv::summarize(report.document);
      }
      return report.passed ? 0 : 1;
    }

    if (!specs_dir.empty()) {
      std::filesystem::create_directories(specs_dir);
      for (const auto& s : pv::catalog()) write_file(std::filesystem::path(specs_dir) / (s.name + ".json"), pv::serialize_spec(s));
    }
    if (list) {
      for (const auto& s : pv::catalog()) std::cout << s.name << "\n";
      return 0;
    }
    if (run_all) {
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      bool ok = true;
      for (const auto& s : pv::catalog()) {
        const auto report = pv::run_pipeline(s, pv::default_stages(s), {timing});
        if (!out_dir.empty()) write_file(std::filesystem::path(out_dir) / (s.name + ".json"), report.text());
        std::cout << pv::summarize(report.document);
        ok = ok && report.passed;
      }
      return ok ? 0 : 1;
    }
    if (specs_dir.empty()) std::cout << cat->help();
    return 0;
  } catch (const pv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
