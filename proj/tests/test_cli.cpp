#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "fixtures.hpp"

using namespace foldkit;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "foldkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(Io, QuiverRoundTrip) {
  auto in = io::parse_quiver(json::parse(R"({"vertices":["1","2"],"arrows":[{"id":"a","from":"1","to":"2"}]})"));
  EXPECT_FALSE(in.generators.has_value());
  EXPECT_EQ(io::quiver_to_json(in.quiver)["arrows"][0]["to"], "2");
  EXPECT_THROW(in.action(), Error);
}

TEST(Io, CartanRoundTrip) {
  auto t = io::parse_cartan(json::parse(R"({"index":["1","2"],"C":[[2,-1],[-2,2]],"D":[2,1],"Omega":[["1","2"]]})"));
  EXPECT_EQ(t.C, fixtures::b2().C);
  EXPECT_EQ(io::cartan_to_json(t), json::parse(R"({"index":["1","2"],"C":[[2,-1],[-2,2]],"D":[2,1],"Omega":[["1","2"]]})"));
  EXPECT_THROW(io::parse_cartan(json::parse(R"({"index":["1"],"C":[[3]],"D":[1],"Omega":[]})")), Error);
}

TEST(Io, PresentationJsonRoundTrip) {
  PrimeField f3{3};
  auto p = preprojective_presentation(fixtures::a3(), f3);
  auto j = io::presentation_to_json(p);
  auto back = io::parse_presentation(j, f3);
  ASSERT_EQ(back.relations.size(), p.relations.size());
  for (std::size_t k = 0; k < p.relations.size(); ++k) EXPECT_EQ(back.relations[k], p.relations[k]);
}

TEST(Io, RationalCoefficients) {
  RationalField q;
  EXPECT_EQ(io::parse_coeff(q, json("3/4")), boost::multiprecision::cpp_rational(3, 4));
  EXPECT_EQ(io::parse_coeff(q, json(-2)), boost::multiprecision::cpp_rational(-2));
  PrimeField f5{5};
  EXPECT_EQ(io::parse_coeff(f5, json("1/2")), 3u);
  EXPECT_THROW(io::parse_coeff(f5, json("x")), Error);
}

TEST(Io, FieldNames) {
  EXPECT_EQ(std::get<PrimeField>(io::parse_field("f2")).prime(), 2u);
  EXPECT_EQ(std::get<PrimeField>(io::parse_field("f7")).prime(), 7u);
  EXPECT_TRUE(std::holds_alternative<RationalField>(io::parse_field("q")));
  EXPECT_THROW(io::parse_field("f4"), Error);
  EXPECT_THROW(io::parse_field("r"), Error);
}

TEST(Io, AlgebraDump) {
  PrimeField f2{2};
  auto a = fixtures::preprojective(fixtures::a2(), f2);
  auto j = io::algebra_to_json(*a);
  EXPECT_EQ(j["dimension"], 4);
  EXPECT_EQ(j["basis"].size(), 4u);
  EXPECT_EQ(j["field"], "F2");
}

TEST(Cli, FoldA3Swap) {
  auto r = run({"fold", "--preset", "a3_swap", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out),
            json::parse(R"({"index":["o_1","o_2"],"C":[[2,-1],[-2,2]],"D":[2,1],"Omega":[["o_1","o_2"]]})"));
}

TEST(Cli, FoldD4Rotation) {
  auto r = run({"fold", "--preset", "d4_rot3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["C"], json::parse("[[2,-1],[-3,2]]"));
  EXPECT_EQ(j["D"], json::parse("[3,1]"));
}

TEST(Cli, FoldTextOutput) {
  auto r = run({"fold", "--preset", "a3_swap"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Omega: (o_1,o_2)"), std::string::npos);
}

TEST(Cli, FoldWithoutActionIsInputError) {
  auto path = temp_file("no_action.json", R"({"vertices":["1","2"],"arrows":[{"id":"a","from":"1","to":"2"}]})");
  EXPECT_EQ(run({"fold", path}).code, 2);
}

TEST(Cli, MissingFileAndBadJson) {
  EXPECT_EQ(run({"fold", "/nonexistent/x.json"}).code, 2);
  auto path = temp_file("bad.json", "{not json");
  EXPECT_EQ(run({"fold", path}).code, 2);
  EXPECT_EQ(run({"fold", "--preset", "nope"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, VerifyPropAA3) {
  auto r = run({"verify", "prop-a", "--preset", "a3_swap", "--field", "f2", "--json"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  for (const auto& c : j["checks"]) {
    EXPECT_EQ(c["status"], "pass") << c.dump();
    if (c["name"] == "Psi") {
      EXPECT_EQ(c["values"]["image_size"], 8);
      EXPECT_EQ(c["values"]["invariant_size"], 8);
    }
  }
}

TEST(Cli, VerifyPropATrivialAction) {
  auto r = run({"verify", "prop-a", "--preset", "a2_trivial"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, VerifyPropAD4OverF3) {
  auto r = run({"verify", "prop-a", "--preset", "d4_rot3", "--field", "f3", "--json"});
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json::parse(r.out);
  for (const auto& c : j["checks"])
    if (c["name"] == "Psi") EXPECT_EQ(c["values"]["image_size"], 12);
}

TEST(Cli, TheoremBA3) {
  auto r = run({"verify", "theorem-b", "--preset", "a3_swap", "--field", "f2"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("longest-element"), std::string::npos);
  EXPECT_NE(r.out.find("not constructed"), std::string::npos);
}

TEST(Cli, TheoremBWrongCharacteristic) {
  auto r = run({"verify", "theorem-b", "--preset", "a3_swap", "--field", "f3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("power of char"), std::string::npos);
  EXPECT_EQ(run({"verify", "theorem-b", "--preset", "a3_swap", "--field", "q"}).code, 2);
}

TEST(Cli, TheoremBD4OverF3) {
  auto r = run({"verify", "theorem-b", "--preset", "d4_rot3", "--field", "f3", "--json"});
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json::parse(r.out);
  for (const auto& c : j["checks"])
    if (c["name"] == "longest-element") EXPECT_EQ(c["values"]["w0"].size(), 6u);
}

TEST(Cli, TheoremBStarConditionFails) {
  auto path = temp_file("parallel.json", R"({"vertices":["v","w"],
    "arrows":[{"id":"x","from":"w","to":"v"},{"id":"y","from":"w","to":"v"}],
    "action":{"generators":[{"arrow_map":{"x":"y","y":"x"}}]}})");
  auto r = run({"verify", "theorem-b", path, "--field", "f2"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, CapsGiveExitThree) {
  EXPECT_EQ(run({"verify", "prop-a", "--preset", "a3_swap", "--dim-cap", "3"}).code, 3);
  EXPECT_EQ(run({"weyl", "--preset", "d4_rot3", "--element-cap", "10"}).code, 3);
  auto path = temp_file("affine.json", R"({"kind":"preprojective","quiver":{"vertices":["1","2"],
    "arrows":[{"id":"a","from":"1","to":"2"},{"id":"b","from":"1","to":"2"}]}})");
  EXPECT_EQ(run({"algebra", path, "--dim-cap", "200"}).code, 3);
}

TEST(Cli, WeylB2) {
  auto r = run({"weyl", "--preset", "b2", "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(j["longest_element"].size(), 4u);
  auto t = run({"weyl", "--preset", "pi_b2"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("order 8"), std::string::npos);
}

TEST(Cli, AlgebraPiA2OverQ) {
  auto r = run({"algebra", "--preset", "pi_a2", "--field", "q", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["dimension"], 4);
}

TEST(Cli, MonoidPiB2) {
  auto r = run({"monoid", "--preset", "pi_b2", "--gens", "1,2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["size"], 8);
  bool zero = false;
  for (const auto& e : j["elements"]) zero = zero || e["is_zero_ideal"].get<bool>();
  EXPECT_TRUE(zero);
  EXPECT_EQ(run({"monoid", "--preset", "pi_b2", "--gens", "3"}).code, 2);
}

TEST(Cli, ReportsAreDeterministic) {
  auto a = run({"verify", "prop-a", "--preset", "a3_swap", "--json"});
  auto b = run({"verify", "prop-a", "--preset", "a3_swap", "--json"});
  auto strip = [](std::string s) {
    auto j = json::parse(s);
    for (auto& c : j["checks"]) c.erase("seconds");
    return j;
  };
  EXPECT_EQ(strip(a.out), strip(b.out));
}

}  // namespace
