#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>

#include "capkit/generate.hpp"
#include "capkit/integrals.hpp"
#include "commands.hpp"
#include "document.hpp"

namespace capkit::cli {
namespace {

const std::string kFixtures = CAPKIT_FIXTURES_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

RunResult run_with(const std::string& command, const std::vector<std::string>& args, const std::string& stdin_text = "") {
  return run(command, args, [&] { return stdin_text; });
}

Json output_of(const RunResult& r) { return Json::parse(r.output); }

/// Runs the installed binary through the shell and captures stdout.
std::pair<int, std::string> shell(const std::string& line) {
  std::string out;
  FILE* pipe = popen(line.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

TEST(CliGoldens, IntegrateOnFixtures) {
  const std::vector<std::string> inputs{fixture("c0.json"), fixture("phi0.json")};
  auto with = [&](std::vector<std::string> flags) {
    flags.insert(flags.end(), inputs.begin(), inputs.end());
    return flags;
  };
  const auto s = run_with("integrate", with({"--kind", "sugeno"}));
  ASSERT_EQ(s.exit_code, kExitOk) << s.error;
  EXPECT_EQ(output_of(s)["value"], "1/2");

  const auto c = run_with("integrate", with({"--kind", "choquet"}));
  EXPECT_EQ(output_of(c)["value"], "59/100");

  const auto f = run_with("integrate", with({"--kind", "fuzzy", "--odot", "product"}));
  EXPECT_EQ(output_of(f)["value"], "1/2");
  EXPECT_EQ(output_of(f)["continuity_hypothesis"], true);

  const auto p = run_with("integrate", with({"--kind", "fuzzy", "--odot", "probsum"}));
  EXPECT_EQ(output_of(p)["value"], "1");
  EXPECT_EQ(output_of(p)["continuity_hypothesis"], false);
}

TEST(CliGoldens, BinaryRerunsAreByteIdentical) {
  const std::string line = std::string(CAPKIT_CLI_BINARY) + " integrate --kind choquet " + fixture("c0.json") + " " +
                           fixture("phi0.json");
  const auto first = shell(line);
  const auto second = shell(line);
  EXPECT_EQ(first.first, 0);
  EXPECT_EQ(first.second, second.second);
  EXPECT_NE(first.second.find("\"59/100\""), std::string::npos);

  const auto from_stdin = shell("cat " + fixture("c0.json") + " | " + CAPKIT_CLI_BINARY + " validate");
  EXPECT_EQ(from_stdin.first, 0);
}

TEST(CliGoldens, AdapterMatchesLibrary) {
  Rng rng(90);
  for (int n = 0; n < 50; ++n) {
    const GroundSet g = letters(1 + n % 4);
    const Capacity c = random_capacity(rng, g, 1 + n % 7);
    const Observable phi = random_observable(rng, g, 1 + n % 9);
    const std::string text = Json::array({to_json(c), to_json(phi)}).dump();
    EXPECT_EQ(output_of(run_with("integrate", {"--kind", "sugeno"}, text))["value"], sugeno(c, phi).str());
    EXPECT_EQ(output_of(run_with("integrate", {"--kind", "choquet"}, text))["value"], choquet(c, phi).str());
    EXPECT_EQ(output_of(run_with("integrate", {"--kind", "fuzzy", "--odot", "product"}, text))["value"],
              fuzzy(c, phi, Pseudomultiplication::product()).value.str());
  }
}

TEST(CliValidate, NonMonotoneTableNamesThePair) {
  const auto r = run_with("validate", {fixture("non_monotone.json")});
  EXPECT_EQ(r.exit_code, kExitInvalid);
  const Json report = output_of(r);
  EXPECT_FALSE(report["passed"].get<bool>());
  bool named = false;
  for (const auto& v : report["violations"]) {
    if (v["rule"] == "monotonicity" && v["subsets"].size() == 2 && v["subsets"][0]["mask"] == 1 &&
        v["subsets"][1]["mask"] == 3) {
      named = true;
      EXPECT_EQ(v["values"], Json::array({"1/2", "1/4"}));
    }
  }
  EXPECT_TRUE(named);
}

TEST(CliValidate, AcceptsValidDocuments) {
  for (const char* name : {"c0.json", "c0_completion.json", "phi0.json", "two_diracs.json", "hh.json", "h_abc.json",
                           "collapse.json"}) {
    const auto r = run_with("validate", {fixture(name)});
    EXPECT_EQ(r.exit_code, kExitOk) << name << "\n" << r.output << r.error;
  }
}

TEST(CliValidate, ReportsMissingAndDuplicateAssignments) {
  const std::string doc = R"({"version":1,"kind":"capacity","space":["a","b"],
    "assignments":[{"set":[],"value":"0"},{"set":["a"],"value":"1/2"},{"set":["a"],"value":"1/3"}]})";
  const auto r = run_with("validate", {}, doc);
  EXPECT_EQ(r.exit_code, kExitInvalid);
  std::set<std::string> rules;
  const Json report = output_of(r);
  for (const auto& v : report["violations"]) rules.insert(v["rule"].get<std::string>());
  EXPECT_TRUE(rules.count("duplicate-assignment"));
  EXPECT_TRUE(rules.count("missing-assignment"));
}

TEST(CliErrors, SchemaFailuresExitTwo) {
  const std::vector<std::string> bad{
      "not json",
      R"({"kind":"capacity","space":["a"],"table":["0","1"]})",
      R"({"version":2,"kind":"capacity","space":["a"],"table":["0","1"]})",
      R"({"version":1,"kind":"blob","space":["a"]})",
      R"({"version":1,"kind":"capacity","space":["a"],"assignments":[{"set":["z"],"value":"1"}]})",
      R"({"version":1,"kind":"capacity","space":["a"],"table":["0","3/2"]})",
      R"({"version":1,"kind":"capacity","space":["a"],"table":["0","x"]})",
      R"({"version":1,"kind":"observable","space":["a","b"],"values":["1"]})",
  };
  for (const auto& text : bad) EXPECT_EQ(run_with("validate", {}, text).exit_code, kExitSchema) << text;
  EXPECT_EQ(run_with("integrate", {"--kind", "median", fixture("c0.json")}).exit_code, kExitSchema);
  EXPECT_EQ(run_with("integrate", {"--kind", "sugeno", fixture("c0.json")}).exit_code, kExitSchema);
  EXPECT_EQ(run_with("integrate", {"--kind", "sugeno", "/nonexistent.json"}).exit_code, kExitSchema);
  EXPECT_EQ(run_with("frobnicate", {}).exit_code, kExitSchema);
}

TEST(CliErrors, SemanticFailuresExitOne) {
  const UnitValue half(1, 2);
  const std::string mismatch =
      Json::array({to_json(dirac(letters(2), 0)), to_json(Observable::constant(letters(3), half))}).dump();
  const auto r = run_with("integrate", {"--kind", "sugeno"}, mismatch);
  EXPECT_EQ(r.exit_code, kExitInvalid);
  EXPECT_FALSE(output_of(r)["passed"].get<bool>());

  const auto bad_capacity = run_with("integrate", {"--kind", "sugeno", fixture("non_monotone.json"), fixture("phi0.json")});
  EXPECT_EQ(bad_capacity.exit_code, kExitInvalid);
  EXPECT_EQ(output_of(bad_capacity)["violations"].size(), 2u);

  EXPECT_EQ(run_with("sections", {fixture("c0.json"), "--thresholds", "0"}).exit_code, kExitInvalid);
  EXPECT_EQ(run_with("support", {"--max-ground", "1", fixture("c0.json")}).exit_code, kExitInvalid);
}

TEST(CliCommands, MonadOperations) {
  const Json mu = output_of(run_with("mu", {fixture("two_diracs.json")}));
  EXPECT_EQ(mu["assignments"][1]["value"], "2/5");
  EXPECT_EQ(mu["assignments"][2]["value"], "0");

  const Json delta = output_of(run_with("mu", {fixture("two_diracs.json"), fixture("phi0.json")}));
  EXPECT_EQ(delta["integral"], "delta");
  // min(4/5, 2/5) ∨ min(1/2, 1) on the two Diracs gives 1/2.
  EXPECT_EQ(delta["value"], "1/2");

  const Json unit = output_of(run_with("unit", {"--element", "a", "--space", "a,b"}));
  EXPECT_EQ(unit["assignments"][1]["value"], "1");
  EXPECT_EQ(unit["assignments"][2]["value"], "0");

  const Json eta_g = output_of(run_with("unit", {"--monad", "G", "--element", "b", "--space", "a,b,c"}));
  EXPECT_EQ(eta_g["sets"], Json::array({Json::array({"b"})}));

  const auto eta_mm = run_with("unit", {fixture("c0.json")});
  ASSERT_EQ(eta_mm.exit_code, kExitOk);
  EXPECT_EQ(output_of(eta_mm)["kind"], "capacity2");
  const auto back = run_with("mu", {}, eta_mm.output);
  EXPECT_EQ(output_of(back)["assignments"], to_json(build_capacity(letters(2), std::vector<Assignment>{
                                                         {Subset{1}, UnitValue(3, 10)}, {Subset{2}, UnitValue(3, 5)}},
                                                         BuildMode::monotone_completion))["assignments"]);

  const auto inner = run_with("unit", {"--inner", fixture("c0.json")});
  EXPECT_EQ(output_of(run_with("mu", {}, inner.output)), output_of(back));
}

TEST(CliCommands, HyperspaceOperations) {
  const Json mu = output_of(run_with("mu", {fixture("hh.json")}));
  EXPECT_EQ(mu["sets"], Json::parse(R"([["a","b"],["a","c"]])"));

  const std::string with_phi =
      Json::array({Json::parse(std::ifstream(fixture("h_abc.json"))),
                   to_json(Observable(letters(3), {UnitValue(1, 4), UnitValue(3, 4), UnitValue(1, 2)}))})
          .dump();
  const Json h = output_of(run_with("hyperspace", {}, with_phi));
  EXPECT_EQ(h["m_lower"], "1/2");
  EXPECT_EQ(h["m_upper"], "1/4");

  const auto all = run_with("hyperspace", {"--all", "--space", "a,b,c"});
  EXPECT_EQ(output_of(all)["count"], 18);

  const auto check = run_with("embed", {"--check", fixture("hh.json")});
  EXPECT_EQ(check.exit_code, kExitOk);
  EXPECT_TRUE(output_of(check)["passed"].get<bool>());

  const Json embedded = output_of(run_with("embed", {fixture("h_abc.json")}));
  EXPECT_EQ(embedded["kind"], "capacity");
  EXPECT_EQ(embedded["assignments"][7]["value"], "1");
}

TEST(CliCommands, RepresentationsRoundTrip) {
  const Json c0 = output_of(run_with("support", {fixture("c0.json")}));
  EXPECT_EQ(c0["mask"], 3);

  const auto sub = run_with("subgraph", {fixture("c0.json")});
  const auto from_sub = run_with("reconstruct", {}, sub.output);
  const auto sec = run_with("sections", {fixture("c0.json")});
  const auto from_sec = run_with("reconstruct", {}, sec.output);
  EXPECT_EQ(run_with("pushforward", {fixture("c0.json")}).exit_code, kExitSchema);
  EXPECT_EQ(from_sub.output, from_sec.output);
  EXPECT_EQ(output_of(from_sub)["assignments"][2]["value"], "3/5");

  const Json collapsed = output_of(run_with("pushforward", {fixture("collapse.json"), fixture("c0.json")}));
  EXPECT_EQ(collapsed["space"], Json::array({"u"}));

  Json functional{{"version", 1}, {"kind", "functional"}, {"space", {"a"}}, {"grid", 2}, {"entries", Json::array()}};
  for (const char* v : {"0", "1/2", "1"}) functional["entries"].push_back({{"phi", {v}}, {"value", v}});
  const auto rec = run_with("reconstruct", {}, functional.dump());
  EXPECT_EQ(rec.exit_code, kExitOk) << rec.output << rec.error;

  functional["entries"][1]["value"] = "1";
  const auto bad = run_with("reconstruct", {}, functional.dump());
  EXPECT_EQ(bad.exit_code, kExitInvalid);
  EXPECT_FALSE(output_of(bad)["passed"].get<bool>());
}

TEST(CliCommands, LawsSuite) {
  const auto r = run_with("laws", {"--suite", "monad-g", "--instances", "20"});
  EXPECT_EQ(r.exit_code, kExitOk);
  const Json report = output_of(r);
  EXPECT_TRUE(report["passed"].get<bool>());
  EXPECT_FALSE(report["checks"].empty());
  EXPECT_EQ(run_with("laws", {"--suite", "monad-x"}).exit_code, kExitSchema);
}

}  // namespace
}  // namespace capkit::cli
