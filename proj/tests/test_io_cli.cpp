#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/config.hpp"
#include "semiring_lab/io.hpp"
#include "semiring_lab/lattice.hpp"

using namespace semiring_lab;
using nlohmann::json;

namespace {

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "semiring_lab_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the built CLI (path provided by ctest through SEMIRING_LAB_CLI).
CliResult run_cli(const std::string& args) {
  const char* cli = std::getenv("SEMIRING_LAB_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "SEMIRING_LAB_CLI must point at the binary");
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("semiring JSON round trip") {
  auto b31 = truncated_naturals_b31();
  auto j = semiring_to_json(*b31);
  auto back = semiring_from_json(json::parse(j.dump()));
  CHECK(same_semiring(*b31, *back));
  CHECK(back->labels == b31->labels);
}

TEST_CASE("semimodule JSON round trip with an inline ring") {
  auto reg = regular_semimodule(chain_semiring_b3());
  auto j = module_to_json(*reg);
  auto back = module_from_json(json::parse(j.dump()));
  CHECK(same_module(*reg, *back));
}

TEST_CASE("semimodule ring may be referenced by path") {
  auto dir = temp_dir();
  auto b3 = chain_semiring_b3();
  write_text_file((dir / "ring.json").string(),
                  semiring_to_json(*b3).dump(2) + "\n");
  auto j = module_to_json(*regular_semimodule(b3));
  j["ring"] = "ring.json";
  write_text_file((dir / "module.json").string(), j.dump(2) + "\n");
  auto loaded = load_structure((dir / "module.json").string());
  REQUIRE(loaded.kind == LoadedKind::Semimodule);
  CHECK(same_module(*loaded.module, *regular_semimodule(b3)));
}

TEST_CASE("lattice JSON round trip") {
  auto m3 = diamond_m3();
  auto j = lattice_to_json(m3);
  auto back = lattice_from_json(json::parse(j.dump()));
  CHECK(back.size == 5);
  CHECK(back.leq == m3.leq);
}

TEST_CASE("malformed JSON raises FormatError") {
  CHECK_THROWS_AS(semiring_from_json(json::parse("{\"elements\": [\"0\"]}")),
                  FormatError);
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), FormatError);
  auto dir = temp_dir();
  write_text_file((dir / "broken.json").string(), "{not json");
  CHECK_THROWS_AS(load_json_file((dir / "broken.json").string()), FormatError);
}

TEST_CASE("config parsing") {
  auto cfg = parse_config("congruence_cap = 17\n# comment\nthreads=2\n");
  CHECK(cfg.congruence_cap == 17);
  CHECK(cfg.threads == 2);
  CHECK(cfg.size_cap == kDefaultSizeCap);
  CHECK_THROWS_AS(parse_config("bogus_key = 3\n"), BadParams);
  CHECK_THROWS_AS(parse_config("threads = zero\n"), BadParams);
}

TEST_CASE("cli: construct, validate, report, check round trip") {
  auto dir = temp_dir();
  auto b3_path = (dir / "b3.json").string();
  auto r = run_cli("construct B3 -o " + b3_path);
  REQUIRE(r.exit_code == 0);
  r = run_cli("validate " + b3_path);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["valid"] == true);
  r = run_cli("report " + b3_path);
  REQUIRE(r.exit_code == 0);
  auto rep = json::parse(r.out);
  CHECK(rep["anti_bounded"]["value"] == true);
  CHECK(rep["zerosumfree"]["value"] == true);
  r = run_cli("check cp " + b3_path);
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out)["is_cp"] == true);
}

TEST_CASE("cli: broken distributivity exits 1 and names the law") {
  auto dir = temp_dir();
  // start from B31 and corrupt one multiplication entry: 2*2 := 1
  auto j = semiring_to_json(*truncated_naturals_b31());
  j["mul"][2][2] = 1;
  auto path = (dir / "broken_semiring.json").string();
  write_text_file(path, j.dump(2) + "\n");
  auto r = run_cli("validate " + path);
  CHECK(r.exit_code == 1);
  auto payload = json::parse(r.out);
  CHECK(payload["valid"] == false);
  CHECK(payload["error"] == "axiom_violation");
  CHECK(payload.contains("axiom"));
  CHECK(payload.contains("witness"));
}

TEST_CASE("cli: missing file exits 2") {
  CHECK(run_cli("validate /no/such/file.json").exit_code == 2);
}

TEST_CASE("cli: Z4 is not CP and carries the even-odd witness") {
  auto dir = temp_dir();
  auto path = (dir / "z4.json").string();
  REQUIRE(run_cli("construct Z4 -o " + path).exit_code == 0);
  auto r = run_cli("check cp " + path);
  REQUIRE(r.exit_code == 0);
  auto v = json::parse(r.out);
  CHECK(v["is_cp"] == false);
  CHECK(v["witness_blocks"] == json::parse("[[0,2],[1,3]]"));
}

TEST_CASE("cli: simpleness checks") {
  auto dir = temp_dir();
  auto path = (dir / "m2b.json").string();
  REQUIRE(run_cli("construct MatB 2 -o " + path).exit_code == 0);
  auto r = run_cli("check simple " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out)["simple"] == true);
}

TEST_CASE("cli: congruence enumeration and the cap exit code") {
  auto dir = temp_dir();
  auto path = (dir / "b3c.json").string();
  REQUIRE(run_cli("construct B3 -o " + path).exit_code == 0);
  auto r = run_cli("congruences " + path);
  REQUIRE(r.exit_code == 0);
  auto payload = json::parse(r.out);
  CHECK(payload["count"] == 3);
  CHECK(payload["complete"] == true);
  CHECK(payload["congruences"][0]["blocks"].is_array());
  // a tiny cap must surface exit code 3, never a truncated answer
  auto cfg_path = (dir / "tiny_cap.cfg").string();
  write_text_file(cfg_path, "congruence_cap = 2\n");
  r = run_cli("--config " + cfg_path + " check cp " + path);
  CHECK(r.exit_code == 3);
  CHECK(json::parse(r.out)["error"] == "congruence_limit_exceeded");
}

TEST_CASE("cli: enumerate writes files or streams lines") {
  auto dir = (temp_dir() / "enum_out").string();
  std::filesystem::remove_all(dir);
  auto r = run_cli("enumerate semirings --order 2 --dir " + dir);
  REQUIRE(r.exit_code == 0);
  CHECK(std::filesystem::exists(dir + "/semiring_order2_0.json"));
  CHECK(std::filesystem::exists(dir + "/semiring_order2_1.json"));
  r = run_cli("enumerate semirings --order 2");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line))
    if (!line.empty()) {
      ++count;
      CHECK(json::parse(line).contains("add"));
    }
  CHECK(count == 2);
  r = run_cli("enumerate semirings --order 2 --predicate zerosumfree");
  std::istringstream lines2(r.out);
  count = 0;
  while (std::getline(lines2, line))
    if (!line.empty()) ++count;
  CHECK(count == 1);  // B survives, Z2 does not
}

TEST_CASE("cli: lattice subcommands") {
  auto dir = temp_dir();
  auto path = (dir / "m3.json").string();
  write_text_file(path, lattice_to_json(diamond_m3()).dump(2) + "\n");
  auto r = run_cli("lattice check-59 " + path);
  REQUIRE(r.exit_code == 0);
  auto payload = json::parse(r.out);
  CHECK(payload["distributive"] == false);
  CHECK(payload["forbidden_kind"] == "M3");
  auto chain = chain_lattice(3);
  auto cpath = (dir / "c3.json").string();
  write_text_file(cpath, lattice_to_json(chain).dump(2) + "\n");
  r = run_cli("lattice check-59 " + cpath);
  REQUIRE(r.exit_code == 0);
  payload = json::parse(r.out);
  CHECK(payload["quotient_condition"] == true);
  CHECK(payload["tchain_condition"] == true);
  r = run_cli("lattice endo " + cpath);
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out)["elements"].size() == 6);
}

TEST_CASE("cli: verify runs a suite and reports items") {
  auto r = run_cli("verify facts-4.12");
  REQUIRE(r.exit_code == 0);
  auto payload = json::parse(r.out);
  CHECK(payload["suite"] == "facts-4.12");
  CHECK(payload["passed"] == true);
  CHECK(payload["items"].size() >= 2);
}

TEST_CASE("cli: byte-identical output across runs") {
  auto a = run_cli("construct Ext Z4");
  auto b = run_cli("construct Ext Z4");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["elements"].size() == 6);
}
