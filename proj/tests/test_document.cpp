#include <doctest.h>

#include "strat/document.hpp"

using namespace strat;

namespace {

const char* kSample = R"({
  "posets": {"P": {"elements": ["p", "q"], "leq": [["p", "q"]]}},
  "ssets": {"I": {"generators": [
    {"id": "v0", "dim": 0},
    {"id": "v1", "dim": 0},
    {"id": "e", "dim": 1, "faces": [{"op": [0], "gen": "v1"}, {"op": [0], "gen": "v0"}]}
  ]}},
  "strats": {"X": {"sset": "I", "poset": "P", "labels": {"v0": "p", "v1": "q"}}},
  "maps": {"id": {"kind": "poset", "source": "P", "target": "P",
                  "assignment": {"p": "p", "q": "q"}}}
})";

}  // namespace

TEST_CASE("document loads and round-trips through the canonical form") {
    Document doc = parse_document(kSample);
    REQUIRE(doc.posets.count("P") == 1);
    REQUIRE(doc.ssets.count("I") == 1);
    REQUIRE(doc.strats.count("X") == 1);
    REQUIRE(doc.maps.count("id") == 1);
    CHECK(doc.strats.at("X").labels[static_cast<std::size_t>(
              doc.ssets.at("I")->find_generator("v0"))] == *doc.posets.at("P")->index_of("p"));

    std::string once = serialize_document(doc);
    Document again = parse_document(once);
    std::string twice = serialize_document(again);
    CHECK(once == twice);
}

TEST_CASE("label violations are reported with the offending edge") {
    std::string bad = kSample;
    auto pos = bad.find("\"v0\": \"p\", \"v1\": \"q\"");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, std::string("\"v0\": \"p\", \"v1\": \"q\"").size(),
                "\"v0\": \"q\", \"v1\": \"p\"");
    try {
        parse_document(bad);
        FAIL("expected an error");
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(msg.find("e") != std::string::npos);
        CHECK(msg.find("monotonicity") != std::string::npos);
    }
}

TEST_CASE("dangling references are resolution errors") {
    std::string bad = kSample;
    auto pos = bad.find("\"sset\": \"I\"");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, std::string("\"sset\": \"I\"").size(), "\"sset\": \"nope\"");
    CHECK_THROWS_AS(parse_document(bad), Error);
}

TEST_CASE("syntax errors are flagged as such") {
    try {
        parse_document("{ not json");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("syntax") != std::string::npos);
    }
}

TEST_CASE("simplicial identity violations in documents are rejected") {
    const char* bad = R"({
      "ssets": {"B": {"generators": [
        {"id": "a", "dim": 0},
        {"id": "b", "dim": 0},
        {"id": "e1", "dim": 1, "faces": [{"op": [0], "gen": "b"}, {"op": [0], "gen": "a"}]},
        {"id": "e2", "dim": 1, "faces": [{"op": [0], "gen": "a"}, {"op": [0], "gen": "b"}]},
        {"id": "t", "dim": 2, "faces": [
          {"op": [0, 1], "gen": "e1"},
          {"op": [0, 1], "gen": "e1"},
          {"op": [0, 1], "gen": "e2"}]}
      ]}}
    })";
    CHECK_THROWS_AS(parse_document(bad), Error);
}
