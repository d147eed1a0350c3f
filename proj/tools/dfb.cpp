// Command line front end for the deformation workbench.
#include <iostream>

#include "CLI11.hpp"

#include "dfb/workbench/session.hpp"

using namespace dfb;
using namespace dfb::wb;

namespace {

constexpr int kOk = 0, kMath = 1, kInput = 2, kMismatch = 3;

int run_corpus(const SessionConfig& cfg) {
  auto outcomes = check_corpus(cfg);
  int bad = 0, total = 0;
  for (const auto& o : outcomes) {
    total += o.checked;
    std::cout << (o.mismatches.empty() ? "ok      " : "MISMATCH") << "  " << o.entry << "  (" << o.checked
              << " values)\n";
    for (const auto& m : o.mismatches) std::cout << "          " << m << "\n";
    bad += !o.mismatches.empty();
  }
  std::cout << outcomes.size() - bad << "/" << outcomes.size() << " entries match, " << total << " values checked\n";
  return bad ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded deformation workbench: resolutions, Ext, cotangent cohomology, MCM approximations"};
  app.set_version_flag("--version", std::string(kVersion));

  std::string command;
  std::vector<std::string> args;
  SessionConfig cfg;
  std::string format = "json";
  bool no_cache = false;
  std::string field;
  std::uint32_t prime = 0;
  int bound = 0, length = 0;

  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("args", args, "Definition file or corpus entry, then module names (check-corpus: corpus directories)");
  auto* fo = app.add_option("--field", field, "Coefficient field override")->check(CLI::IsMember({"Q", "Fp"}));
  auto* po = app.add_option("--prime", prime, "Characteristic for --field Fp");
  auto* bo = app.add_option("--degree-bound", bound, "Degree bound for modules of infinite length");
  auto* lo = app.add_option("--length", length, "Resolution length (resolve) or top Ext index (ext)");
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached reports");
  app.add_flag("--no-cache", no_cache, "Neither read nor write the cache");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }
  if (*fo) cfg.field = field;
  if (*po) cfg.prime = prime;
  if (*bo) cfg.degree_bound = bound;
  if (*lo) cfg.length = length;
  cfg.use_cache = !no_cache;
  cfg.format = format == "text" ? Format::Text : Format::Json;

  try {
    if (command == "check-corpus") {
      cfg.corpus_paths = args;
      return run_corpus(cfg);
    }
    Report r = run_command(command, args, cfg);
    std::cout << r.render(cfg.format);
    return r.certificates_ok() ? kOk : kMath;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const ConfigError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const MathError& e) {
    std::cerr << "math error: " << e.what() << "\n";
    return kMath;
  }
}
