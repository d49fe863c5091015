#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "machin/document.hpp"
#include "machin/generator.hpp"
#include "machin/listing.hpp"

using machin::Mode;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Document, Q7Terms) {
  auto doc = machin::to_json(machin::generate(7));
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["q0"], "7");
  EXPECT_EQ(doc["m"], "6");
  EXPECT_EQ(doc["mode"], "signed");
  EXPECT_EQ(doc["complete"], true);
  std::vector<std::string> qs, signs;
  for (const auto& t : doc["terms"]) {
    qs.push_back(t["q"]);
    signs.push_back(t["sign"]);
  }
  EXPECT_EQ(qs, (std::vector<std::string>{"15", "1712", "8886139", "2526830931360443"}));
  EXPECT_EQ(signs, (std::vector<std::string>{"-", "+", "-", "+"}));
  EXPECT_NEAR(doc["lehmer"]["value"].get<double>(), 2.551666609279759, 1e-9);
  EXPECT_EQ(doc["lehmer"]["is_upper_bound"], false);
  EXPECT_FALSE(doc.contains("final_remainder"));
}

TEST(Document, RoundTripIsFixedPoint) {
  std::vector<machin::MachinFormula> formulas = {
      machin::generate(5), machin::generate(12), machin::generate(9, {Mode::Positive}),
      machin::generate(28, {Mode::Signed, true, 300}), machin::generate(17, {Mode::Positive, true, 200})};
  for (const auto& f : formulas) {
    const std::string once = machin::serialize(f);
    const auto parsed = machin::parse_formula(once);
    EXPECT_EQ(parsed, f);
    EXPECT_EQ(machin::serialize(parsed), once);
  }
}

TEST(Document, PartialCarriesRemainder) {
  auto f = machin::generate(10, {Mode::Signed, true, 20});
  auto doc = machin::to_json(f);
  EXPECT_EQ(doc["complete"], false);
  EXPECT_EQ(doc["lehmer"]["is_upper_bound"], true);
  ASSERT_TRUE(doc.contains("final_remainder"));
  EXPECT_EQ(doc["final_remainder"]["A"], f.final_remainder->A.get_str());
}

TEST(Document, RejectsMalformed) {
  const std::string good = machin::serialize(machin::generate(5));
  auto mutate = [&](auto&& edit) {
    auto doc = nlohmann::json::parse(good);
    edit(doc);
    return doc.dump();
  };
  EXPECT_THROW(machin::parse_formula("{not json"), machin::FormatError);
  EXPECT_THROW(machin::parse_formula("[]"), machin::FormatError);
  EXPECT_THROW(machin::parse_formula(mutate([](auto& d) { d.erase("schema_version"); })), machin::FormatError);
  EXPECT_THROW(machin::parse_formula(mutate([](auto& d) { d["schema_version"] = 2; })), machin::FormatError);
  EXPECT_THROW(machin::parse_formula(mutate([](auto& d) { d["q0"] = 5; })), machin::FormatError);
  EXPECT_THROW(machin::parse_formula(mutate([](auto& d) { d["q0"] = "1"; })), machin::FormatError);
  EXPECT_THROW(machin::parse_formula(mutate([](auto& d) { d["m"] = "0"; })), machin::FormatError);
  EXPECT_THROW(machin::parse_formula(mutate([](auto& d) { d["mode"] = "fast"; })), machin::FormatError);
  EXPECT_THROW(machin::parse_formula(mutate([](auto& d) { d["terms"][0]["sign"] = "*"; })), machin::FormatError);
  EXPECT_THROW(machin::parse_formula(mutate([](auto& d) { d["terms"][0]["q"] = "2x9"; })), machin::FormatError);
  EXPECT_THROW(machin::parse_formula(mutate([](auto& d) { d["complete"] = false; })), machin::FormatError);
}

TEST(Listing, Machin) {
  EXPECT_EQ(lines(machin::render_listing(machin::generate(5))),
            (std::vector<std::string>{"M 4 Q 5", "(-) Q 239", "---", "Lehm 1.8511276523168558",
                                      "Pi 3.1415926535897936"}));
}

TEST(Listing, LongDenominatorsShownAsLog) {
  auto text = machin::render_listing(machin::generate(10), 40);
  auto l = lines(text);
  ASSERT_EQ(l.size(), 10u);
  EXPECT_EQ(l[4], "(-) Q 193018008592515208050");
  EXPECT_EQ(l[5].rfind("(-) lg Q 41.29", 0), 0u) << l[5];
}

TEST(Listing, PartialMarkers) {
  auto l = lines(machin::render_listing(machin::generate(10, {Mode::Signed, true, 20})));
  ASSERT_GE(l.size(), 4u);
  EXPECT_EQ(l[l.size() - 4], "(brk)");
  EXPECT_EQ(l[l.size() - 2].rfind("Lehm < ", 0), 0u);

  auto p = lines(machin::render_listing(machin::generate(17, {Mode::Positive, true, 100})));
  EXPECT_EQ(p[p.size() - 2].rfind("Lehm > ", 0), 0u);
}

TEST(FormatReal, ShortestRoundTrip) {
  EXPECT_EQ(machin::format_real(3.0), "3.0");
  EXPECT_EQ(machin::format_real(1.851127652316856), "1.851127652316856");
  EXPECT_EQ(machin::format_real(11512146.246898009), "11512146.246898009");
}
