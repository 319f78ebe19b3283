#include <gtest/gtest.h>

#include "hgpf/catalog.hpp"
#include "hgpf/pipeline.hpp"

using namespace hgpf;

namespace {

void expect_same(const GpfSolution& a, const GpfSolution& b) {
  EXPECT_EQ(a.lambda, b.lambda);
  EXPECT_EQ(a.lambda.xv().poly(), b.lambda.xv().poly());
  EXPECT_EQ(a.lambda.xv().lo(), b.lambda.xv().lo());
  EXPECT_EQ(a.lambda.xv().hi(), b.lambda.xv().hi());
  EXPECT_EQ(a.kind, b.kind);
  EXPECT_EQ(a.d, b.d);
  EXPECT_EQ(a.v, b.v);
  EXPECT_EQ(a.numer_shifts, b.numer_shifts);
  EXPECT_EQ(a.C_approx, b.C_approx);
  EXPECT_EQ(a.C_digits, b.C_digits);
  EXPECT_EQ(a.provenance, b.provenance);
}

Catalog small_catalog() {
  EnumerateParams prm;
  prm.rcheck = 2;
  prm.digits = 30;
  Catalog c;
  c.params["rcheck"] = 2;
  c.solutions = run_enumerate(prm).solutions;
  return c;
}

}  // namespace

TEST(Catalog, Sha256) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Catalog, RoundTripFieldForField) {
  Catalog c = small_catalog();
  std::string text = serialize_catalog(c);
  Catalog back = parse_catalog(text);
  EXPECT_TRUE(back.checksum_ok);
  EXPECT_EQ(back.schema_version, kSchemaVersion);
  EXPECT_EQ(back.params, c.params);
  EXPECT_EQ(back.sha256, c.sha256);
  ASSERT_EQ(back.solutions.size(), c.solutions.size());
  for (size_t i = 0; i < c.solutions.size(); ++i) expect_same(back.solutions[i], c.solutions[i]);
  EXPECT_EQ(serialize_catalog(back), text);
}

TEST(Catalog, SchemaKeys) {
  Catalog c = small_catalog();
  json j = json::parse(serialize_catalog(c));
  for (const char* k : {"schema_version", "params", "solutions", "checksums"}) EXPECT_TRUE(j.contains(k)) << k;
  const json& s = j["solutions"][0];
  std::vector<std::string> keys;
  for (auto it = s.begin(); it != s.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"p", "q", "r", "a", "b", "x", "kind", "d", "v", "C", "provenance"}));
  EXPECT_TRUE(s["p"].is_string());
  EXPECT_TRUE(s["x"]["minpoly"].is_array());
  for (const char* k : {"lo", "hi", "approx"}) EXPECT_TRUE(s["x"][k].is_string());
  for (const char* k : {"rat", "sqrt", "approx"}) EXPECT_TRUE(s["d"].contains(k));
  EXPECT_FALSE(s["d"].contains("root"));
  EXPECT_TRUE(s["C"].contains("approx") && s["C"].contains("digits"));
}

TEST(Catalog, IrrationalDRoundTrip) {
  std::ifstream in(std::string(HGPF_DATA_DIR) + "/golden.json");
  ASSERT_TRUE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  Catalog g = parse_catalog(ss.str());
  ASSERT_EQ(g.solutions.size(), 11u);
  for (const auto& s : g.solutions) EXPECT_NO_THROW(check_solution(s)) << s.lambda.to_text();
  std::string text = serialize_catalog(g);
  Catalog back = parse_catalog(text);
  for (size_t i = 0; i < g.solutions.size(); ++i) expect_same(back.solutions[i], g.solutions[i]);
}

TEST(Catalog, NonSquareRootKeepsRootKey) {
  GpfSolution s;
  s.d = RadExpr{Rat(2), {{parse_radbase("3"), 1}}, 3};
  json j = radexpr_to_json(s.d, AlgReal(make_rat(1, 2)));
  EXPECT_EQ(j["root"], 3);
  EXPECT_EQ(radexpr_from_json(j), s.d);
}

TEST(Catalog, ChecksumMismatchIsRecorded) {
  Catalog c = small_catalog();
  json j = json::parse(serialize_catalog(c));
  j["solutions"][0]["provenance"] = "edited";
  Catalog back = parse_catalog(j.dump());
  EXPECT_FALSE(back.checksum_ok);
}

TEST(Catalog, MalformedInputThrowsParse) {
  auto code = [](const std::string& text) {
    try {
      parse_catalog(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvariantViolation;
  };
  EXPECT_EQ(code("not json"), ErrorCode::Parse);
  EXPECT_EQ(code("{}"), ErrorCode::Parse);
  EXPECT_EQ(code(R"({"schema_version":"1.0","solutions":[{"p":"1/1"}]})"), ErrorCode::Parse);
  EXPECT_EQ(code(R"({"schema_version":"1.0","solutions":[]})"), ErrorCode::InvariantViolation);
}

TEST(Catalog, CsvIsMarkedLossy) {
  Catalog c = small_catalog();
  std::string csv = catalog_csv(c);
  EXPECT_EQ(csv.rfind("# lossy", 0), 0u);
  size_t lines = std::count(csv.begin(), csv.end(), '\n');
  EXPECT_EQ(lines, c.solutions.size() + 2);
  EXPECT_NE(csv.find("5/24;7/24"), std::string::npos);
}
