#include <doctest.h>

#include "engine.hpp"

using namespace higgslab;

namespace {

Json golden_split_config() {
  return Json::parse(R"({
    "sc": {"p": 1, "q": 1, "g": 2, "a": [["0", "1"]]},
    "signs": {"0": "+1"}
  })");
}

}  // namespace

TEST_CASE("construct-split command produces the golden chart") {
  RunResult r = run_command("construct-split", golden_split_config(), false);
  CHECK(r.exit_code == 0);
  CHECK(r.report.at("status") == "pass");
  CHECK(r.report.at("tool") == "higgslab");
  CHECK(r.report.at("seed") == 0);
  CHECK(r.report.at("field").at("modulus") == "1000003");
  const Json& chart = r.report.at("artifacts").at("chart");
  CHECK(chart.at("qv") == Json::parse(R"([[[], ["1"]], [["1"], ["0", "1"]]])"));
  CHECK(chart.at("beta") == Json::parse(R"([[["0", "1"]], [["1000002"]]])"));
  CHECK(chart.at("gamma") == Json::parse(R"([[["1000002"], []]])"));
  CHECK(r.report.at("artifacts").at("s_plus") == Json::parse(R"(["0", "1"])"));
  for (const Json& c : r.report.at("checks")) CHECK(c.at("pass") == true);
  // odd sign imbalance: no b artifact, but the chart still builds
  CHECK(!r.report.at("artifacts").contains("b"));
}

TEST_CASE("construct-split reports b when the imbalance is even") {
  Json cfg = Json::parse(R"({
    "sc": {"p": 1, "q": 1, "g": 2, "a": [["0", "1000002", "0", "1"]]},
    "signs": {"0": "+1", "1": "+1", "1000002": "-1"}
  })");
  // a_1 = z^3 - z = z(z-1)(z+1); two plus one minus is still odd
  RunResult odd = run_command("construct-split", cfg, false);
  CHECK(odd.exit_code == 0);
  CHECK(!odd.report.at("artifacts").contains("b"));

  Json balanced = Json::parse(R"({
    "sc": {"p": 1, "q": 1, "g": 2, "a": [["0", "1000002", "1"]]},
    "signs": {"0": "+1", "1": "-1"}
  })");
  RunResult even = run_command("construct-split", balanced, false);
  CHECK(even.exit_code == 0);
  CHECK(even.report.at("artifacts").at("b") == 0);
}

TEST_CASE("build-extension rejects a scaled vector with a witness") {
  Json cfg = Json::parse(R"({
    "sc": {"p": 1, "q": 1, "g": 2, "a": [["0", "1"]]},
    "extension": {"D": ["0"], "i": [["1000001"]]}
  })");
  RunResult r = run_command("build-extension", cfg, false);
  CHECK(r.exit_code == 1);
  CHECK(r.report.at("status") == "fail");
  CHECK(r.report.at("failure").at("code") == "IsometryViolation");
  bool some_failed = false;
  for (const Json& c : r.report.at("checks")) some_failed |= !c.at("pass").get<bool>();
  CHECK(some_failed);
}

TEST_CASE("build-extension accepts tau and echoes the explicit extension") {
  Json cfg = Json::parse(R"({
    "sc": {"p": 1, "q": 1, "g": 2, "a": [["0", "1"]]},
    "tau": [1]
  })");
  RunResult r = run_command("build-extension", cfg, false);
  REQUIRE(r.exit_code == 0);
  Json explicit_cfg = Json::parse(R"({"sc": {"p": 1, "q": 1, "g": 2, "a": [["0", "1"]]}})");
  explicit_cfg["extension"] = r.report.at("artifacts").at("extension");
  RunResult r2 = run_command("build-extension", explicit_cfg, false);
  REQUIRE(r2.exit_code == 0);
  CHECK(r2.report.at("artifacts").at("chart") == r.report.at("artifacts").at("chart"));
}

TEST_CASE("verify command flags a tampered chart") {
  RunResult built = run_command("construct-split", golden_split_config(), false);
  Json cfg;
  cfg["sc"] = Json::parse(R"({"p": 1, "q": 1, "g": 2, "a": [["0", "1"]]})");
  cfg["chart"] = built.report.at("artifacts").at("chart");
  RunResult ok = run_command("verify", cfg, false);
  CHECK(ok.exit_code == 0);

  cfg["chart"]["qv"][0][0] = Json::parse(R"(["1"])");
  RunResult bad = run_command("verify", cfg, false);
  CHECK(bad.exit_code == 1);
  CHECK(bad.report.at("status") == "fail");
  CHECK(bad.report.at("failure").at("code") == "VerificationFailed");
}

TEST_CASE("cayley command reports the companion determinant") {
  RunResult built = run_command("construct-split", golden_split_config(), false);
  Json cfg;
  cfg["sc"] = Json::parse(R"({"p": 1, "q": 1, "g": 2, "a": [["0", "1"]]})");
  cfg["chart"] = built.report.at("artifacts").at("chart");
  RunResult r = run_command("cayley", cfg, false);
  CHECK(r.exit_code == 0);
  // det beta_F = (-1)^p a_p = -z
  CHECK(r.report.at("artifacts").at("det_beta_f") == Json::parse(R"(["0", "1000002"])"));
  CHECK(r.report.at("artifacts").at("twice_weights") == Json::parse("[1, -1]"));
}

TEST_CASE("census command is parallel safe and byte stable") {
  Json cfg = Json::parse(R"({"p": [1, 2], "q": [1, 2], "g": [2, 3]})");
  RunResult serial = run_command("census", cfg, false);
  RunResult parallel = run_command("census", cfg, true);
  CHECK(serial.exit_code == 0);
  CHECK(serial.report.at("artifacts").at("rows").size() == 8);
  CHECK(serial.report.dump(2) == parallel.report.dump(2));
}

TEST_CASE("direct-image bundle mode freezes the hyperbolic swap") {
  Json cfg = Json::parse(R"({
    "sc": {"p": 1, "q": 2, "g": 2, "a": [["0", "1"]]},
    "bundle": {
      "degrees": [0, 0],
      "qm": [["0", "1"], ["1", "0"]],
      "sigma": [[["0", "1"], ["1", "0"]]]
    }
  })");
  RunResult r = run_command("direct-image", cfg, false);
  REQUIRE(r.exit_code == 0);
  const Json& q0 = r.report.at("artifacts").at("v0").at("q0");
  CHECK(q0 == Json::parse(R"([[["2"], []], [[], ["0", "1000001"]]])"));
  CHECK(r.report.at("artifacts").at("v0").at("weights") == Json::parse("[0, -1]"));
}

TEST_CASE("direct-image v0 mode lifts and round trips exactly") {
  Json cfg = Json::parse(R"({
    "sc": {"p": 1, "q": 2, "g": 2, "a": [["0", "1"]]},
    "v0": {"weights": [0, -1], "q0": [[["2"], []], [[], ["0", "1000001"]]]}
  })");
  RunResult r = run_command("direct-image", cfg, false);
  CHECK(r.exit_code == 0);
  bool saw_roundtrip = false;
  for (const Json& c : r.report.at("checks"))
    if (c.at("name") == "roundtrip_exact") saw_roundtrip = c.at("pass").get<bool>();
  CHECK(saw_roundtrip);
  CHECK(r.report.at("artifacts").contains("bundle"));
  CHECK(r.report.at("artifacts").contains("frame"));
}

TEST_CASE("charclass command computes omega classes") {
  Json cfg = Json::parse(R"({
    "g_sbar": 2, "g_sigma": 1,
    "q_sbar_diag": [0, 1, 0, 0],
    "L": [0, 1, 0, 0],
    "q": 3
  })");
  RunResult r = run_command("charclass", cfg, false);
  REQUIRE(r.exit_code == 0);
  CHECK(r.report.at("artifacts").at("w1_w") == Json::parse("[0, 0]"));
  CHECK(r.report.at("artifacts").at("w2_w") == 1);
  CHECK(r.report.at("artifacts").at("w2_v") == 1);
  CHECK(r.report.at("artifacts").at("arf_sbar") == 0);

  cfg["q"] = 2;
  cfg["w2_v0prime"] = 1;
  RunResult bad = run_command("charclass", cfg, false);
  CHECK(bad.exit_code == 2);
  CHECK(bad.report.at("failure").at("code") == "RankError");
}

TEST_CASE("selftest is deterministic and parallel safe") {
  Json cfg;
  cfg["seed"] = 123;
  RunResult a = run_command("selftest", cfg, false);
  RunResult b = run_command("selftest", cfg, false);
  RunResult c = run_command("selftest", cfg, true);
  CHECK(a.exit_code == 0);
  CHECK(a.report.at("seed") == 123);
  CHECK(a.report.at("checks").size() >= 20);
  CHECK(a.report.dump(2) == b.report.dump(2));
  CHECK(a.report.dump(2) == c.report.dump(2));
}

TEST_CASE("input errors map to exit two") {
  RunResult unknown = run_command("transmogrify", Json::object(), false);
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.report.at("failure").at("code") == "BadInput");

  RunResult nojson = run_command_text("census", "not json", false);
  CHECK(nojson.exit_code == 2);
  CHECK(nojson.report.at("failure").at("code") == "BadInput");

  RunResult missing = run_command("construct-split", Json::object(), false);
  CHECK(missing.exit_code == 2);
  std::string detail = missing.report.at("failure").at("detail");
  CHECK(detail.find("config schema") != std::string::npos);
}

TEST_CASE("kernel violations map to exit one") {
  Json cfg = Json::parse(R"({
    "sc": {"p": 2, "q": 1, "g": 2, "a": [["1"], ["1000002", "0", "1"]]},
    "extension": {"D": ["1", "1000002"], "i": [["1", "0"], ["1", "0"]]}
  })");
  RunResult r = run_command("build-extension", cfg, false);
  CHECK(r.exit_code == 1);
  CHECK(r.report.at("failure").at("code") == "KernelViolation");
}
