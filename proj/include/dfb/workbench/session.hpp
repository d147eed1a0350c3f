#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dfb/workbench/definition.hpp"

namespace dfb::wb {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { Json, Text };

struct SessionConfig {
  std::optional<std::string> field;  // "Q" or "Fp"; overrides the definition file
  std::optional<std::uint32_t> prime;
  std::optional<int> degree_bound;
  std::optional<int> length;
  std::vector<std::string> corpus_paths;
  std::string cache_dir;
  bool use_cache = true;
  Format format = Format::Json;

  // Throws InputError: prime required iff field = Fp, and must be prime.
  void validate() const;
  std::optional<Field> field_override() const;
  // Stable text used in cache keys.
  std::string fingerprint() const;
};

struct Report {
  std::string command;
  std::string input_digest;
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json certificates = nlohmann::json::array();
  nlohmann::json bounds = nlohmann::json::object();
  std::string version = kVersion;
  double seconds = 0;
  bool from_cache = false;

  // Everything except timing; byte-stable for identical inputs.
  nlohmann::json body() const;
  std::string render(Format f) const;
  bool certificates_ok() const;
  static Report from_body(const nlohmann::json& j);
};

std::string sha256_hex(const std::string& data);

// Definition file path or corpus entry name.
std::string resolve_definition_path(const std::string& what, const SessionConfig& cfg);

/// Runs one command. args[0] names the definition (file or corpus entry);
/// the remaining arguments name modules.
Report run_command(const std::string& command, const std::vector<std::string>& args, const SessionConfig& cfg);
Report run_on(const Definition& def, const std::string& command, const std::vector<std::string>& modules,
              const SessionConfig& cfg);

const std::vector<std::string>& command_names();

struct CorpusOutcome {
  std::string entry;
  int checked = 0;
  std::vector<std::string> mismatches;
};
std::vector<CorpusOutcome> check_corpus(const SessionConfig& cfg);

}  // namespace dfb::wb
