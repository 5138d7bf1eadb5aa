#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pknets::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(PKNETS_DATA_DIR) + "/" + name; }

std::string temp_config(const std::string& name, const json& j) {
  const auto path = std::string(PKNETS_TEST_TMP) + "/" + name;
  std::ofstream(path) << j.dump();
  return path;
}

}  // namespace

TEST_CASE("homset tables") {
  const auto r = run({"--config", data("triads.json"), "homset", "U", "V"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("24 morphisms") != std::string::npos);
  CHECK(r.out.find("X:I1 Y:I7 Z:I1") != std::string::npos);
  CHECK(r.out.find("X:T3 Y:T1 Z:T1") != std::string::npos);
  CHECK(r.out.find("X:T0 Y:T-2 Z:T-2") != std::string::npos);
  const auto n = run({"homset", "U", "V", "--config", data("triads.json"), "--normalize-labels"});
  CHECK(n.out.find("X:T0 Y:T10 Z:T10") != std::string::npos);

  const auto j = json::parse(run({"--config", data("berg.json"), "--json", "homset", "U", "V"}).out);
  REQUIRE(j["count"] == 24);
  // η_X = T_p gives η_Y = T_{1-p}, η_Z = T_{-p}.
  CHECK(j["morphisms"][3]["components"] == json{{"X", "T3"}, {"Y", "T-2"}, {"Z", "T-3"}});
}

TEST_CASE("analysis and DOT") {
  const auto j = json::parse(run({"--config", data("berg.json"), "--json", "analyze", "part1"}).out);
  std::vector<std::string> labels;
  for (const auto& s : j["steps"]) labels.push_back(s["label"]);
  CHECK(labels == std::vector<std::string>{"^{UV}T-2", "^{VV}T-1", "^{VU}T2", "^{UU}T1"});
  const auto flats = run({"--config", data("berg.json"), "--flats", "analyze", "part2"});
  CHECK(flats.out.find("X:Bb Y:Bb Z:F") != std::string::npos);
  CHECK(flats.out.find("^{WU'}T1") != std::string::npos);
  const auto dot = run({"--config", data("berg.json"), "dot", "part2"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(dot.out.find("color=red") != std::string::npos);
}

TEST_CASE("act and nf") {
  const auto j = json::parse(run({"--config", data("triads.json"), "--json", "--flats", "act", "fmajor", "U", "I8"}).out);
  CHECK(j["result"] == json{{"X", "Eb"}, {"Y", "G"}, {"Z", "Bb"}});
  CHECK(j["components"] == json{{"X", "I8"}, {"Y", "I4"}, {"Z", "I10"}});
  CHECK(j["valid"] == true);
  const auto nf = json::parse(run({"--config", data("triads.json"), "--json", "nf", "V"}).out);
  CHECK(nf["count"] == 12);
  CHECK(run({"--config", data("triads.json"), "act", "fmajor", "U", "Q8"}).code == 2);
}

TEST_CASE("groupoid commands") {
  const auto hook = data("hook.json");
  const auto b = json::parse(run({"--config", hook, "--json", "bisections"}).out);
  CHECK(b["order"] == 288);
  CHECK(b["elements"].size() == 288);
  CHECK(b["literals"][0]["h_part"] == json{"^{UV}T0", "^{VU}T0"});
  const auto w = run({"--config", hook, "wreath-iso"});
  CHECK(w.code == 0);
  CHECK(w.out.find("order 288") != std::string::npos);
  CHECK(run({"--config", hook, "trivialize"}).code == 0);
  const auto s = json::parse(run({"--config", data("berg.json"), "--json", "subgroupoid"}).out);
  CHECK(s["ok"] == true);
  CHECK(s["morphisms"] == 192);
  CHECK(run({"--config", data("pair-z3.json"), "wreath-iso"}).code == 0);
}

TEST_CASE("verify") {
  const auto all = run({"verify", "--json"});
  CHECK(all.code == 0);
  const auto j = json::parse(all.out);
  CHECK(j["ok"] == true);
  bool saw288 = false;
  for (const auto& c : j["checks"])
    if (c["suite"] == "bisections" && c["instance"] == "hook" && c.contains("data") && c["data"].value("order", 0) == 288)
      saw288 = true;
  CHECK(saw288);

  const auto seeded = run({"verify", "bisections", "--seed", "7"});
  CHECK(seeded.code == 0);
  CHECK(seeded.out.find("seed 7") != std::string::npos);

  const auto bad = run({"--config", data("corrupted.json"), "verify", "--json"});
  CHECK(bad.code == 1);
  const auto b = json::parse(bad.out);
  CHECK(b["ok"] == false);
  CHECK(b["checks"][0]["detail"].get<std::string>().find("categories.Chain") != std::string::npos);
  CHECK_FALSE(b["checks"][0]["data"]["witness"].get<std::string>().empty());

  // A table that is not a group.
  const auto path = temp_config("bad_group.json", {{"group", {{"kind", "table"}, {"order", 2}, {"multiply", {0, 1, 1, 1}}}}});
  CHECK(run({"--config", path, "verify", "groups"}).code == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"homset", "U", "V"}).code == 2);  // no config
  CHECK(run({"--config", data("triads.json"), "homset", "U", "Nope"}).code == 2);
  CHECK(run({"--config", data("triads.json"), "bogus"}).code == 2);
  CHECK(run({"--config", "/nonexistent.json", "nf", "U"}).code == 2);
  CHECK(run({"verify", "everything"}).code == 2);
  CHECK(run({"--config", data("corrupted.json"), "nf", "F"}).code == 2);
  const auto bound = run({"--config", data("hook.json"), "--bound", "100", "bisections"});
  CHECK(bound.code == 3);
  CHECK(bound.err.find("bound") != std::string::npos);
  CHECK(run({"verify", "bisections", "--bound", "100"}).code == 3);

  // Output is deterministic.
  CHECK(run({"--config", data("hook.json"), "--json", "bisections"}).out ==
        run({"--config", data("hook.json"), "--json", "bisections"}).out);
}
