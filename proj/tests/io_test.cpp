#include "bipolar/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "bipolar/measures.hpp"
#include "json.hpp"
#include "bipolar/metrics.hpp"
#include "test_support.hpp"

using namespace bipolar;
using bipolar::testing::Gen;

namespace {

BipolarFuzzySet parse(const std::string& text, Format format = Format::Csv) {
  std::istringstream in(text);
  return read_dataset(in, format);
}

std::string parse_error(const std::string& text, Format format = Format::Csv) {
  try {
    parse(text, format);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "<no error>";
}

MeasureReport sample_report() {
  MeasureReport r;
  r.metadata = {"sample.csv", {{"kind", "pe"}}, "0.1.0"};
  r.cardinality_kinds = {"ph"};
  r.entropy_kinds = {"sk"};
  for (const auto& [id, x] : {std::pair{"a", BipolarValue(0.8, 0.2)},
                              std::pair{"b", BipolarValue(0.3, 0.4)}}) {
    ElementRow row = describe(id, x);
    row.cardinality = {cardinality_point(CardinalityKind::FromPH, x)};
    row.entropy = {entropy_point(EntropyKind::SzmidtKacprzyk, x).scalar};
    r.elements.push_back(row);
  }
  r.aggregates = {{"cardinality[ph]", 1.0}};
  r.similarity = PairwiseMatrix{"similarity", "pe", {"a", "b"}, {{}, {0.5}}};
  return r;
}

}  // namespace

TEST(FormatNumber, SignificantDigits) {
  EXPECT_EQ(format_number(0.8), "0.800000");
  EXPECT_EQ(format_number(1.0), "1.00000");
  EXPECT_EQ(format_number(0.0), "0.00000");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333");
  EXPECT_EQ(format_number(-0.0), "0.00000");
  EXPECT_EQ(format_number(-1e-20), "0.000000000000000");
  EXPECT_EQ(format_number(12345.678), "12345.7");
}

TEST(FormatNumber, PaperStyleTruncates) {
  const NumberStyle paper = NumberStyle::paper();
  EXPECT_EQ(format_number(0.58, paper), "0.58");
  EXPECT_EQ(format_number(0.8182, paper), "0.81");
  EXPECT_EQ(format_number(2.0 / 3.0, paper), "0.66");
  EXPECT_EQ(format_number(0.5, paper), "0.50");
  EXPECT_EQ(format_number(1.0, paper), "1.00");
  EXPECT_EQ(format_number(-0.001, paper), "0.00");
}

TEST(ReadDataset, CsvExample) {
  const auto s = parse("id,mu,nu\nx1,0.8,0.2\nx2,0.3,0.4\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.ids(), (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(s.at("x2"), BipolarValue(0.3, 0.4));
}

TEST(ReadDataset, CsvToleratesColumnOrderExtrasCrlfAndBlankLines) {
  const auto s = parse("\xEF\xBB\xBFnote,nu,id,mu\r\nhello,0.2,x1,0.8\r\n\r\nbye, 1 ,x2,0\r\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.at("x1"), BipolarValue(0.8, 0.2));
  EXPECT_EQ(s.at("x2"), BipolarValue(0.0, 1.0));
}

TEST(ReadDataset, HeaderOnlyIsAnEmptySet) { EXPECT_TRUE(parse("id,mu,nu\n").empty()); }

TEST(ReadDataset, CsvErrorsNameTheLine) {
  EXPECT_NE(parse_error("id,mu,nu\nx1,1.2,0.0\n").find("line 2"), std::string::npos);
  EXPECT_NE(parse_error("id,mu,nu\nx1,1.2,0.0\n").find("mu"), std::string::npos);
  EXPECT_NE(parse_error("id,mu,nu\nx1,0.1,0.1\nx1,0.2,0.2\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_error("id,mu,nu\nx1,abc,0.1\n").find("not a number"), std::string::npos);
  EXPECT_NE(parse_error("id,mu,nu\nx1,0.1\n").find("expected 3 fields"), std::string::npos);
  EXPECT_NE(parse_error("id,mu\nx1,0.1\n").find("missing column 'nu'"), std::string::npos);
  EXPECT_NE(parse_error("").find("missing header"), std::string::npos);
  EXPECT_NE(parse_error("id,mu,nu\nx1,0,0.5,\n").find("line 2"), std::string::npos);
}

TEST(ReadDataset, JsonExampleAndErrors) {
  const auto s = parse(R"([{"id": "x1", "mu": 0.8, "nu": 0.2}, {"id": "x2", "mu": 1, "nu": 0}])",
                       Format::Json);
  EXPECT_EQ(s.ids(), (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(s.at("x2"), landmarks::kTrue);

  EXPECT_NE(parse_error(R"([{"id": "x1", "mu": 0.8}])", Format::Json).find("record 1"),
            std::string::npos);
  EXPECT_NE(parse_error(R"([{"id": "a", "mu": 0, "nu": 0}, {"id": "b", "mu": "x", "nu": 0}])",
                        Format::Json)
                .find("record 2"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"id": "x1"})", Format::Json).find("array"), std::string::npos);
  EXPECT_NE(parse_error("[{", Format::Json).find("malformed"), std::string::npos);
  EXPECT_NE(parse_error(R"([{"id": "x1", "mu": 0.5, "nu": -0.5}])", Format::Json).find("nu"),
            std::string::npos);
}

TEST(WriteDataset, RoundTripsThroughBothFormats) {
  Gen gen(51);
  const auto original = gen.set(25);
  const NumberStyle exact{NumberStyle::Mode::Significant, 17};
  for (Format f : {Format::Csv, Format::Json}) {
    std::ostringstream out;
    write_dataset(out, original, f, exact);
    const auto back = parse(out.str(), f);
    ASSERT_EQ(back.ids(), original.ids());
    for (const auto& [id, x] : original) {
      EXPECT_NEAR(back.at(id).mu(), x.mu(), 1e-15);
      EXPECT_NEAR(back.at(id).nu(), x.nu(), 1e-15);
    }
  }
}

TEST(FormatFromPath, ExtensionDecides) {
  EXPECT_EQ(format_from_path("a/b/set.JSON"), Format::Json);
  EXPECT_EQ(format_from_path("set.csv"), Format::Csv);
  EXPECT_EQ(format_from_path("json"), Format::Csv);
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_FALSE(parse_format("xml"));
}

TEST(WriteReport, CsvLayout) {
  std::ostringstream out;
  write_report(out, sample_report(), Format::Csv);
  const std::string text = out.str();
  EXPECT_TRUE(text.starts_with(
      "id,mu,nu,t,f,u,c,i,tau,omega,class,cardinality_ph,entropy_sk\n"
      "a,0.800000,0.200000,0.600000,0.00000,0.00000,0.00000,0.400000,0.600000,0.00000,fuzzy,"));
  EXPECT_NE(text.find("\naggregate,value\ncardinality[ph],1.00000\n"), std::string::npos);
  EXPECT_NE(text.find("\nrow,column,similarity_pe\nb,a,0.500000\n"), std::string::npos);
}

TEST(WriteReport, JsonIsValidAndOrdered) {
  std::ostringstream out;
  write_report(out, sample_report(), Format::Json);
  const auto doc = nlohmann::ordered_json::parse(out.str());
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"metadata", "elements", "aggregates", "similarity"}));
  EXPECT_EQ(doc["metadata"]["dataset"], "sample.csv");
  EXPECT_EQ(doc["elements"].size(), 2u);
  EXPECT_EQ(doc["elements"][1]["id"], "b");

  MeasureReport without = sample_report();
  without.similarity.reset();
  std::ostringstream plain;
  write_report(plain, without, Format::Json);
  EXPECT_TRUE(nlohmann::json::parse(plain.str())["similarity"].is_null());
}

TEST(WriteReport, Deterministic) {
  for (Format f : {Format::Csv, Format::Json}) {
    std::ostringstream a;
    std::ostringstream b;
    write_report(a, sample_report(), f);
    write_report(b, sample_report(), f);
    EXPECT_EQ(a.str(), b.str());
  }
}

TEST(WriteAudit, BothFormats) {
  AuditOptions o;
  o.grid_step = 0.1;
  o.random_points = 100;
  const AuditReport r = audit_entropy(EntropyKind::BustinceBurillo, VectorNorm::Max, o);
  const ReportMetadata meta{"", {{"kind", "bb"}}, "0.1.0"};

  std::ostringstream csv;
  write_audit(csv, r, meta, Format::Csv, NumberStyle::paper());
  EXPECT_NE(csv.str().find("e2,FAIL,1,(0.50;0.50),0.00,"), std::string::npos) << csv.str();

  std::ostringstream js;
  write_audit(js, r, meta, Format::Json);
  const auto doc = nlohmann::json::parse(js.str());
  EXPECT_EQ(doc["measure"], "bb");
  EXPECT_EQ(doc["axioms"][1]["status"], "FAIL");
  EXPECT_TRUE(doc["expected_pattern"].get<bool>());
  EXPECT_TRUE(doc["axioms"][0]["witness"].is_null());
}
