#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "dfb/cotangent.hpp"
#include "dfb/workbench/session.hpp"

using namespace dfb;
using namespace dfb::wb;
namespace fs = std::filesystem;

namespace {
const char* kA1 =
    "ring A1;\n"
    "field Q;\n"
    "vars x:1 y:1 z:1;\n"
    "ideal: x*y-z^2;\n"
    "module k: builtin residue_field;\n"
    "module line: matrix [[x, z], [z, y]] twists [0, 0];\n";

fs::path temp_dir(const std::string& tag) {
  auto p = fs::temp_directory_path() / ("dfb-test-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}
}  // namespace

TEST_CASE("Definition parser: ring, modules and builtins") {
  auto d = parse_definition(kA1);
  CHECK(d.name == "A1");
  CHECK(d.ring->krull_dimension() == 2);
  CHECK(d.module_names == std::vector<std::string>{"k", "line"});
  CHECK(d.module("line")->gen_degrees() == std::vector<int>{0, 0});
  CHECK(is_mcm(d.module("line")));
  CHECK(d.module("maximal_ideal") != nullptr);
  CHECK_THROWS_AS(d.module("nope"), InputError);
}

TEST_CASE("Definition parser: errors carry positions") {
  try {
    parse_definition("ring R;\nvars x:1 y:1;\nideal: x*y;\nbogus 3;\n");
    FAIL("expected an InputError");
  } catch (const InputError& e) {
    CHECK(e.line == 4);
    CHECK(e.column == 1);
  }
  try {
    parse_definition("ring R;\nvars x:1 y:1;\nideal: x^2+y;\n");
    FAIL("inhomogeneous ideal accepted");
  } catch (const InputError& e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(parse_definition("ring R;\nvars x:1;\nideal: x;\nmodule a: matrix [[x, x^2]] twists [0];\n"),
                  InputError);
  CHECK_THROWS_AS(parse_definition("ring R;\nvars x:1;\nideal: x\n"), InputError);
  CHECK_THROWS_AS(parse_definition("ring R;\nfield Fp 12;\nvars x:1;\nideal: ;\n"), InputError);
}

TEST_CASE("Definition parser: empty ideal gives the polynomial ring") {
  auto d = parse_definition("ring P;\nvars x:1;\nideal: ;\n");
  CHECK(d.ring->krull_dimension() == 1);
  CHECK(t1(d.ring).total_dim == 0);
}

TEST_CASE("Session config validation") {
  SessionConfig c;
  c.field = "Fp";
  CHECK_THROWS_AS(c.validate(), InputError);
  c.prime = 32004;
  CHECK_THROWS_AS(c.validate(), InputError);
  c.prime = 32003;
  CHECK_NOTHROW(c.validate());
  c.field = "R";
  CHECK_THROWS_AS(c.validate(), InputError);
  SessionConfig q;
  q.prime = 7;
  CHECK_THROWS_AS(q.validate(), InputError);
}

TEST_CASE("Reports are byte-reproducible and the cache is transparent") {
  auto dir = temp_dir("cache");
  auto def = dir / "a1.def";
  {
    std::ofstream(def) << kA1;
  }
  SessionConfig c;
  c.cache_dir = (dir / "cache").string();
  c.use_cache = false;
  auto r1 = run_command("pair-cohomology", {def.string(), "line"}, c);
  auto r2 = run_command("pair-cohomology", {def.string(), "line"}, c);
  CHECK(r1.body().dump() == r2.body().dump());
  CHECK(r1.certificates_ok());

  c.use_cache = true;
  auto cold = run_command("pair-cohomology", {def.string(), "line"}, c);
  auto warm = run_command("pair-cohomology", {def.string(), "line"}, c);
  CHECK_FALSE(cold.from_cache);
  CHECK(warm.from_cache);
  CHECK(warm.body().dump() == r1.body().dump());

  // different field, different key
  c.field = "Fp";
  c.prime = 32003;
  auto p = run_command("pair-cohomology", {def.string(), "line"}, c);
  CHECK_FALSE(p.from_cache);
  CHECK(p.results.at("ot1") == r1.results.at("ot1"));

  // a corrupt entry is bypassed
  for (const auto& f : fs::directory_iterator(c.cache_dir)) std::ofstream(f.path()) << "{ not json";
  c.field.reset();
  c.prime.reset();
  auto again = run_command("pair-cohomology", {def.string(), "line"}, c);
  CHECK_FALSE(again.from_cache);
  CHECK(again.body().dump() == r1.body().dump());
  fs::remove_all(dir);
}

TEST_CASE("Unknown commands and modules are input errors") {
  auto d = parse_definition(kA1);
  SessionConfig c;
  CHECK_THROWS_AS(run_on(d, "frobnicate", {}, c), InputError);
  CHECK_THROWS_AS(run_on(d, "ext", {"nope"}, c), InputError);
  CHECK_THROWS_AS(run_command("t1", {}, c), InputError);
}
