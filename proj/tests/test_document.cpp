#include "doctest.h"
#include "postlie/catalog.hpp"
#include "postlie/document.hpp"

using namespace postlie;

namespace {

const char* v15_text = R"({
  "field": "Q",
  "dim": 2,
  "names": ["a", "b"],
  "g": [{"i": 1, "j": 2, "coeffs": {"1": "1"}}],
  "n": [{"i": 1, "j": 2, "coeffs": {"1": "1"}}],
  "product": [{"i": 2, "j": 2, "coeffs": {"1": "1"}}]
})";

std::string error_of(const std::string& text) {
  try {
    parse_pair_document(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

std::string with(const std::string& from, const std::string& to) {
  std::string text = v15_text;
  auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

} // namespace

TEST_CASE("a V15 document parses and passes") {
  auto doc = parse_pair_document(v15_text);
  CHECK(doc.is_pair());
  CHECK(doc.names == std::vector<std::string>{"a", "b"});
  auto pair = doc.pair();
  CHECK(check_structure(pair).passed());
  auto v15 = find_entry("V15").instantiate({});
  CHECK(pair.product() == v15.product());
  CHECK(pair.g() == v15.g());
  CHECK(pair.n() == v15.n());
}

TEST_CASE("document errors name the offending location") {
  CHECK(error_of(with("\"Q\"", "\"Fp:4\"")).find("field:") == 0);
  CHECK(error_of(with("\"Q\"", "\"R\"")).find("field:") == 0);
  auto zero_den = error_of(with(R"("product": [{"i": 2, "j": 2, "coeffs": {"1": "1"}}])",
                                R"("product": [{"i": 2, "j": 2, "coeffs": {"1": "2/0"}}])"));
  CHECK(zero_den.find("product[0].coeffs.1:") == 0);
  CHECK(zero_den.find("2/0") != std::string::npos);
  CHECK(error_of(with(R"("i": 2, "j": 2)", R"("i": 3, "j": 2)")).find("product[0].i:") == 0);
  CHECK(error_of(with(R"({"1": "1"}}])", R"({"4": "1"}}])")).find("out of range") !=
        std::string::npos);
  CHECK(error_of(with(R"("product": [)",
                      R"("product": [{"i": 2, "j": 2, "coeffs": {}}, )"))
            .find("duplicate entry (2,2)") != std::string::npos);
  CHECK(error_of(with(R"("g": [{"i": 1, "j": 2)", R"("g": [{"i": 2, "j": 1)"))
            .find("i < j") != std::string::npos);
  CHECK(error_of(with(R"("dim": 2,)", R"("dim": 2, "extra": 1,)")).find("extra") == 0);
  CHECK(error_of("[1, 2]").find("$") == 0);
  CHECK(error_of("{not json").find("$: invalid JSON") == 0);
  CHECK(error_of(with(R"("names": ["a", "b"])", R"("names": ["a"])")).find("names") == 0);
}

TEST_CASE("rationals are stored in lowest terms") {
  auto doc = parse_pair_document(with(R"({"1": "1"}}])", R"({"1": "2/4", "2": 3}}])"));
  auto text = serialize_pair_document(doc);
  CHECK(text.find("\"1/2\"") != std::string::npos);
  CHECK(text.find("\"3\"") != std::string::npos);
}

TEST_CASE("round trip over every catalog structure") {
  for (auto f : {Field::rationals(), Field::prime(7)})
    for (const auto& e : catalog_entries())
      for (const auto& sample : e.samples) {
        PostLiePair pair = [&] {
          try {
            return e.instantiate(sample, f);
          } catch (const Error&) {
            return e.instantiate(sample);
          }
        }();
        auto text = serialize_pair_document(make_document(pair));
        auto doc = parse_pair_document(text);
        CHECK(doc.pair().product() == pair.product());
        CHECK(doc.pair().g() == pair.g());
        CHECK(doc.pair().n() == pair.n());
        CHECK(serialize_pair_document(doc) == text);
      }
}

TEST_CASE("algebra documents") {
  auto doc = parse_pair_document(
      R"({"field": "Fp:5", "dim": 3, "bracket": [{"i": 1, "j": 2, "coeffs": {"3": "1"}}]})");
  REQUIRE(doc.algebra);
  CHECK_FALSE(doc.is_pair());
  CHECK(*doc.algebra == n3_algebra(Field::prime(5)));
  CHECK_THROWS_AS(doc.pair(), Error);
  auto text = serialize_pair_document(make_document(sl2_algebra(Field::rationals())));
  CHECK(*parse_pair_document(text).algebra == sl2_algebra(Field::rationals()));
  CHECK(error_of(R"({"field": "Q", "dim": 2, "bracket": [], "g": []})").find("g:") == 0);
}
