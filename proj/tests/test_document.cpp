#include "evclust/document.hpp"
#include "evclust/error.hpp"

#include <gtest/gtest.h>

#include <string>

using namespace evclust;

namespace {

const std::string kBaker = std::string(EVCLUST_DATA_DIR) + "/baker_street.json";

Errc parse_error(const std::string& text) {
  try {
    parse_document<Rational>(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return Errc::io;
}

std::string doc_with(const std::string& focals, const std::string& prior = R"({"1": "1"})") {
  return R"({"actions": ["A", "B"], "events": ["E1", "E2"], "evidences": [{"id": "e1", "focals": )" + focals +
         R"(}], "domain_prior": )" + prior + "}";
}

}  // namespace

TEST(Document, LoadsBakerStreet) {
  auto doc = load_document<Rational>(kBaker);
  ASSERT_EQ(doc.evidences.size(), 2u);
  EXPECT_EQ(doc.evidences[0].id, "e1");
  EXPECT_EQ(doc.evidences[0].mass.theta_mass(), Rational(1, 5));
  EXPECT_EQ(doc.evidences[1].mass.theta_mass(), Rational(3, 5));
  EXPECT_EQ(doc.prior.mass(2), Rational(1));
  EXPECT_FALSE(doc.evidences[0].metadata.empty());
}

TEST(Document, CanonicalRoundTrip) {
  auto doc = load_document<Rational>(kBaker);
  std::string once = serialize_document(doc);
  std::string twice = serialize_document(parse_document<Rational>(once));
  EXPECT_EQ(once, twice);
  auto as_double = parse_document<double>(once);
  EXPECT_EQ(serialize_document(as_double), once);
}

TEST(Document, SchemaErrors) {
  EXPECT_EQ(parse_error("not json"), Errc::schema);
  EXPECT_EQ(parse_error("[]"), Errc::schema);
  EXPECT_EQ(parse_error(doc_with("[]")), Errc::schema);
  EXPECT_EQ(parse_error(doc_with(R"([{"actions": ["A"], "events": ["E1"], "mass": 1}])")), Errc::schema);
  EXPECT_EQ(parse_error(doc_with(R"([{"actions": [], "events": ["E1"], "mass": "1"}])")), Errc::schema);
  EXPECT_EQ(parse_error(doc_with(R"([{"actions": ["A"], "events": ["E1"], "mass": "0.5"},
                                     {"actions": ["A"], "events": ["E1"], "mass": "0.5"}])")),
            Errc::schema);
  EXPECT_EQ(parse_error(doc_with(R"([{"actions": ["A"], "events": ["E1"], "mass": "1"}])", R"({"x": "1"})")),
            Errc::schema);
  EXPECT_EQ(parse_error(R"({"actions": ["A", "A"], "events": ["E"], "evidences": [], "domain_prior": {"1": "1"}})"),
            Errc::schema);
}

TEST(Document, MassErrors) {
  EXPECT_EQ(parse_error(doc_with(R"([{"actions": ["A"], "events": ["E1"], "mass": "0.9"}])")), Errc::mass);
  EXPECT_EQ(parse_error(doc_with(R"([{"actions": ["A"], "events": ["E1"], "mass": "-0.5"},
                                     {"actions": ["B"], "events": ["E1"], "mass": "1.5"}])")),
            Errc::mass);
  EXPECT_EQ(parse_error(doc_with(R"([{"actions": ["A"], "events": ["E1"], "mass": "1"}])", R"({"1": "0.5"})")),
            Errc::mass);
}

TEST(Document, UnknownAtom) {
  EXPECT_EQ(parse_error(doc_with(R"([{"actions": ["Z"], "events": ["E1"], "mass": "1"}])")), Errc::unknown_atom);
  EXPECT_EQ(parse_error(doc_with(R"([{"actions": ["A"], "events": ["E9"], "mass": "1"}])")), Errc::unknown_atom);
}

TEST(Document, NearOneSumsAreRenormalized) {
  auto doc = parse_document<Rational>(doc_with(R"([{"actions": ["A"], "events": ["E1"], "mass": "0.3333333333"},
                                                   {"actions": ["B"], "events": ["E2"], "mass": "0.6666666667"}])"));
  Rational total(0);
  for (const auto& [s, m] : doc.evidences[0].mass.focal()) total += m;
  EXPECT_EQ(total, Rational(1));
}

TEST(Document, MissingFileIsIoError) {
  try {
    load_document<double>("/nonexistent/evidence.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::io);
  }
}
