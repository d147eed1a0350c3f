#include "dfb/workbench/session.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

namespace dfb::wb {

using nlohmann::json;
namespace fs = std::filesystem;

// ------------------------------------------------------------ config

void SessionConfig::validate() const {
  if (field && *field != "Q" && *field != "Fp") throw InputError("--field must be Q or Fp");
  bool fp = field && *field == "Fp";
  if (fp && !prime) throw InputError("--field Fp requires --prime");
  if (!fp && prime) throw InputError("--prime is only valid with --field Fp");
  if (prime && !is_prime(*prime)) throw InputError(std::to_string(*prime) + " is not prime");
  if (length && *length < 0) throw InputError("--length must be nonnegative");
}

std::optional<Field> SessionConfig::field_override() const {
  if (!field) return std::nullopt;
  if (*field == "Fp") return Field::prime(*prime);
  return Field::rationals();
}

std::string SessionConfig::fingerprint() const {
  std::ostringstream s;
  s << "field=" << field.value_or("-") << ";prime=" << (prime ? std::to_string(*prime) : "-")
    << ";bound=" << (degree_bound ? std::to_string(*degree_bound) : "-")
    << ";length=" << (length ? std::to_string(*length) : "-");
  return s.str();
}

// ------------------------------------------------------------ report

json Report::body() const {
  return {{"command", command},           {"input_digest", input_digest}, {"results", results},
          {"certificates", certificates}, {"bounds", bounds},             {"version", version}};
}

Report Report::from_body(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.input_digest = j.at("input_digest").get<std::string>();
  r.results = j.at("results");
  r.certificates = j.at("certificates");
  r.bounds = j.at("bounds");
  r.version = j.at("version").get<std::string>();
  return r;
}

bool Report::certificates_ok() const {
  for (const auto& c : certificates)
    if (!c.at("ok").get<bool>()) return false;
  return true;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else {
    out << "  " << prefix << " = " << j.dump() << "\n";
  }
}

}  // namespace

std::string Report::render(Format f) const {
  if (f == Format::Json) {
    json j = body();
    j["timings"] = {{"seconds", seconds}, {"cached", from_cache}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << command << "  (version " << version << ", input " << input_digest.substr(0, 12) << ")\n";
  out << "results:\n";
  flatten(results, "", out);
  if (!bounds.empty()) {
    out << "bounds:\n";
    flatten(bounds, "", out);
  }
  if (!certificates.empty()) {
    out << "certificates:\n";
    for (const auto& c : certificates) {
      out << "  " << (c.at("ok").get<bool>() ? "ok    " : "FAILED") << "  " << c.at("name").get<std::string>();
      auto d = c.at("detail").get<std::string>();
      if (!d.empty()) out << "  (" << d << ")";
      out << "\n";
    }
  }
  out << std::fixed << std::setprecision(3) << "time: " << seconds << " s" << (from_cache ? " (cached)" : "") << "\n";
  return out.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw std::runtime_error("sha256 failed");
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return s.str();
}

// ------------------------------------------------------------ paths and cache

namespace {

std::vector<std::string> corpus_dirs(const SessionConfig& cfg) {
  if (!cfg.corpus_paths.empty()) return cfg.corpus_paths;
  return {DFB_CORPUS_DIR};
}

std::string default_cache_dir() {
  if (const char* d = std::getenv("DFB_CACHE_DIR")) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME")) return std::string(x) + "/dfb";
  if (const char* h = std::getenv("HOME")) return std::string(h) + "/.cache/dfb";
  return ".dfb-cache";
}

std::optional<json> cache_load(const fs::path& p) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("version").get<std::string>() != kVersion) return std::nullopt;
    Report::from_body(j);
    return j;
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring corrupt cache entry " << p << "\n";
    return std::nullopt;
  }
}

void cache_store(const fs::path& p, const json& body) {
  std::error_code ec;
  fs::create_directories(p.parent_path(), ec);
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << body.dump();
  }
  fs::rename(tmp, p, ec);
}

}  // namespace

std::string resolve_definition_path(const std::string& what, const SessionConfig& cfg) {
  if (fs::is_regular_file(what)) return what;
  for (const auto& dir : corpus_dirs(cfg)) {
    fs::path p = fs::path(dir) / (what + ".def");
    if (fs::is_regular_file(p)) return p.string();
  }
  throw InputError("no definition file or corpus entry named '" + what + "'");
}

Report run_command(const std::string& command, const std::vector<std::string>& args, const SessionConfig& cfg) {
  cfg.validate();
  if (args.empty()) throw InputError(command + ": missing definition argument");
  auto t0 = std::chrono::steady_clock::now();
  Definition def = load_definition(resolve_definition_path(args[0], cfg), cfg.field_override());
  std::vector<std::string> mods(args.begin() + 1, args.end());

  fs::path cpath;
  if (cfg.use_cache) {
    std::string key = std::string(kVersion) + "\n" + command + "\n" + cfg.fingerprint() + "\n";
    for (const auto& m : mods) key += m + "\n";
    key += def.source;
    cpath = fs::path(cfg.cache_dir.empty() ? default_cache_dir() : cfg.cache_dir) / (sha256_hex(key) + ".json");
    if (auto j = cache_load(cpath)) {
      Report r = Report::from_body(*j);
      r.from_cache = true;
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return r;
    }
  }
  Report r = run_on(def, command, mods, cfg);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (cfg.use_cache) cache_store(cpath, r.body());
  return r;
}

// ------------------------------------------------------------ corpus

namespace {

CorpusOutcome check_entry(const fs::path& expect_file, const SessionConfig& cfg) {
  CorpusOutcome out;
  std::ifstream in(expect_file);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const std::exception& e) {
    out.entry = expect_file.stem().string();
    out.mismatches.push_back(std::string("unreadable expectation file: ") + e.what());
    return out;
  }
  out.entry = doc.value("entry", expect_file.stem().stem().string());
  fs::path def_path = expect_file.parent_path() / doc.at("definition").get<std::string>();
  Definition def = load_definition(def_path.string(), cfg.field_override());

  // one run per distinct (command, modules, options)
  std::map<std::string, Report> runs;
  for (const auto& e : doc.at("expect")) {
    std::string source = e.value("source", "");
    if (source == "literature" && e.value("anchor", "").empty()) {
      out.mismatches.push_back("expectation without anchor: " + e.dump());
      continue;
    }
    std::string cmd = e.at("command").get<std::string>();
    std::vector<std::string> mods = e.value("modules", std::vector<std::string>{});
    SessionConfig c = cfg;
    if (e.contains("length")) c.length = e.at("length").get<int>();
    if (e.contains("degree_bound")) c.degree_bound = e.at("degree_bound").get<int>();
    std::string key = cmd + "|" + json(mods).dump() + "|" + c.fingerprint();
    auto it = runs.find(key);
    if (it == runs.end()) {
      try {
        it = runs.emplace(key, run_on(def, cmd, mods, c)).first;
      } catch (const std::exception& ex) {
        out.mismatches.push_back(cmd + " " + json(mods).dump() + ": " + ex.what());
        continue;
      }
      if (!it->second.certificates_ok())
        out.mismatches.push_back(cmd + " " + json(mods).dump() + ": a certificate failed");
    }
    ++out.checked;
    json got;
    std::string ptr = e.at("path").get<std::string>();
    try {
      got = it->second.results.at(json::json_pointer(ptr));
    } catch (const std::exception&) {
      got = nullptr;
    }
    if (got != e.at("value"))
      out.mismatches.push_back(cmd + " " + json(mods).dump() + " " + ptr + ": expected " + e.at("value").dump() +
                               ", got " + got.dump());
  }
  return out;
}

}  // namespace

std::vector<CorpusOutcome> check_corpus(const SessionConfig& cfg) {
  cfg.validate();
  std::set<fs::path> files;
  for (const auto& dir : corpus_dirs(cfg)) {
    if (!fs::is_directory(dir)) throw InputError("corpus directory " + dir + " not found");
    for (const auto& f : fs::directory_iterator(dir)) {
      std::string n = f.path().filename().string();
      if (n.size() > 12 && n.substr(n.size() - 12) == ".expect.json") files.insert(f.path());
    }
  }
  std::vector<std::future<CorpusOutcome>> jobs;
  for (const auto& f : files)
    jobs.push_back(std::async(std::launch::async, [f, &cfg] {
      try {
        return check_entry(f, cfg);
      } catch (const std::exception& e) {
        CorpusOutcome o;
        o.entry = f.stem().stem().string();
        o.mismatches.push_back(e.what());
        return o;
      }
    }));
  std::vector<CorpusOutcome> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace dfb::wb
