#include <gtest/gtest.h>

#include <set>

#include "slicepoly/harness.hpp"

using namespace slicepoly;

namespace {

RunReport run_with(const std::string& name, Json params, std::uint64_t seed = 1) {
  ExperimentSpec spec;
  spec.name = name;
  spec.params = std::move(params);
  spec.seed = seed;
  return run(spec);
}

}  // namespace

TEST(Registry, ListsEveryExperiment) {
  std::set<std::string> names;
  for (auto& e : registry()) names.insert(e.name);
  EXPECT_EQ(names.size(), registry().size());
  for (const char* n : {"mindeg", "closure", "niewang", "hegedus-sweep", "extension-sweep", "claimA1", "ball-fact",
                        "stringlemma", "lemma33", "claimC", "construct-lucas", "construct-window",
                        "construct-sample", "construct-coin", "construct-galvin", "symfun-analyze",
                        "robust-frontier", "coin-verify", "galvin-verify"})
    EXPECT_TRUE(names.count(n)) << n;
  EXPECT_THROW(find_experiment("nope"), std::invalid_argument);
}

TEST(Registry, SchemaJsonIsComplete) {
  Json all = list_experiments();
  ASSERT_EQ(all.size(), registry().size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& e = registry()[i];
    Json reparsed = Json::parse(all[i].dump());
    EXPECT_EQ(reparsed, schema_to_json(e));
    EXPECT_EQ(reparsed["name"], e.name);
    ASSERT_EQ(reparsed["params"].size(), e.params.size());
    for (std::size_t j = 0; j < e.params.size(); ++j) {
      EXPECT_EQ(reparsed["params"][j]["name"], e.params[j].name);
      EXPECT_EQ(reparsed["params"][j]["default"], e.params[j].default_value);
    }
  }
}

TEST(Run, RejectsUnknownParameterAndCap) {
  EXPECT_THROW(run_with("mindeg", {{"bogus", 1}}), std::invalid_argument);
  ExperimentSpec spec;
  spec.name = "mindeg";
  spec.caps = {{"bogus_cap", 1}};
  EXPECT_THROW(run(spec), std::invalid_argument);
}

TEST(Run, CapViolationIsAFailedCheck) {
  const Caps before = caps();
  ExperimentSpec spec;
  spec.name = "closure";
  spec.params = {{"n", 12}, {"D", 2}, {"E", "slice:6"}};
  spec.caps = {{"max_full_cube_n", 8}};
  auto rep = run(spec);
  EXPECT_FALSE(rep.all_pass());
  bool found = false;
  for (auto& c : rep.checks) found = found || (c.name == "caps" && !c.pass);
  EXPECT_TRUE(found);
  // caps are restored afterwards
  EXPECT_EQ(caps().max_full_cube_n, before.max_full_cube_n);
}

TEST(Run, SameSeedSameReport) {
  auto a = run_with("niewang", {{"n_lo", 3}, {"n_hi", 6}, {"trials", 20}}, 7);
  auto b = run_with("niewang", {{"n_lo", 3}, {"n_hi", 6}, {"trials", 20}}, 7);
  EXPECT_EQ(a.to_json(false), b.to_json(false));
  EXPECT_TRUE(a.all_pass());
  auto c = run_with("niewang", {{"n_lo", 3}, {"n_hi", 6}, {"trials", 20}}, 8);
  EXPECT_NE(a.to_json(false)["tables"], c.to_json(false)["tables"]);
}

TEST(Run, ReportShape) {
  auto rep = run_with("hegedus-sweep", {{"p", 2}, {"n_lo", 4}, {"n_hi", 8}});
  EXPECT_TRUE(rep.all_pass());
  Json j = rep.to_json();
  for (const char* key : {"spec", "checks", "all_pass", "results", "tables", "deviations", "version", "wall_time"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["spec"]["params"]["n_hi"], 8);
  EXPECT_EQ(j["spec"]["name"], "hegedus-sweep");
  EXPECT_FALSE(rep.to_json(false).contains("wall_time"));
}

TEST(Run, SmallExperimentsPass) {
  EXPECT_TRUE(run_with("stringlemma", {{"maxlen", 10}}).all_pass());
  EXPECT_TRUE(run_with("ball-fact", Json::object()).all_pass());
  EXPECT_TRUE(run_with("construct-lucas", {{"n", 12}, {"i", 3}, {"q", 4}, {"p", 2}}).all_pass());
  EXPECT_TRUE(run_with("construct-window", {{"n", 9}, {"a", 2}, {"targets", "0,1,1,0"}, {"p", 3}}).all_pass());
  EXPECT_TRUE(run_with("symfun-analyze", {{"family", "mod:3"}, {"n", 12}}).all_pass());
}

TEST(Csv, Escaping) {
  Table t{"t", {"a", "b"}, {{Json(1), Json("x,y")}, {Json("say \"hi\""), Json(2.5)}}};
  EXPECT_EQ(table_csv(t), "a,b\n1,\"x,y\"\n\"say \"\"hi\"\"\",2.5\n");
}

TEST(Params, Accessors) {
  Params ps(Json{{"i", "12"}, {"j", 3}, {"f", "true"}, {"g", 0}, {"r", "3/4"}, {"e", "exp:-2"}});
  EXPECT_EQ(ps.integer("i"), 12);
  EXPECT_EQ(ps.integer("j"), 3);
  EXPECT_TRUE(ps.flag("f"));
  EXPECT_FALSE(ps.flag("g"));
  EXPECT_EQ(ps.rational("r"), Rational(3, 4));
  EXPECT_LT(abs(ps.real("e") - exp(Real(-2))), Real("1e-45"));
  EXPECT_EQ(ps.str("j"), "3");
}
