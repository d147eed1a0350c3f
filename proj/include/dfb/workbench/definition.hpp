#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dfb/cm.hpp"

namespace dfb::wb {

/// Malformed input: bad syntax, unknown names, invalid configuration.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& msg, int line = 0, int column = 0);
  int line = 0, column = 0;
};

/// A parsed definition file: one ring and its named modules.
struct Definition {
  std::string name;
  std::string source;  // file text as read
  QRingPtr ring;
  std::vector<std::string> module_names;  // declaration order
  std::map<std::string, ModPtr> modules;

  // Declared module, or a builtin constructor applied to the ring.
  ModPtr module(const std::string& name) const;
  const DualizingModule& omega() const;

 private:
  mutable std::optional<DualizingModule> omega_;
};

// Names accepted after `builtin`.
const std::vector<std::string>& builtin_names();
ModPtr builtin_module(const Definition& d, const std::string& name);

/// Parses the definition grammar. `field` overrides the file's field line.
Definition parse_definition(const std::string& text, const std::optional<Field>& field = std::nullopt);
Definition load_definition(const std::string& path, const std::optional<Field>& field = std::nullopt);

}  // namespace dfb::wb
