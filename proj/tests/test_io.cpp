#include <doctest.h>

#include <random>

#include "liealg/catalog.hpp"
#include "liealg/io.hpp"
#include "support.hpp"

using namespace liealg;
using namespace liealg::test;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

const char* kH1 = R"({
  "name": "heisenberg",
  "dim": 3,
  "field": {"kind": "rational"},
  "brackets": [{"lhs": [1, 2], "rhs": {"3": "1"}}]
})";

std::string gf3_doc(const std::string& brackets) {
  return R"({"dim": 4, "field": {"kind": "prime", "p": 3}, "brackets": )" + brackets + "}";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse a small document") {
  const auto any = parse_document(kH1);
  REQUIRE(std::holds_alternative<LieAlgebra<Rational>>(any));
  const auto& lie = std::get<LieAlgebra<Rational>>(any);
  CHECK(lie.name() == "heisenberg");
  CHECK(lie == heisenberg<Rational>(1, kQ));
  CHECK(render_document(lie) ==
        "{\n"
        "  \"name\": \"heisenberg\",\n"
        "  \"dim\": 3,\n"
        "  \"field\": {\n"
        "    \"kind\": \"rational\"\n"
        "  },\n"
        "  \"brackets\": [\n"
        "    {\n"
        "      \"lhs\": [\n"
        "        1,\n"
        "        2\n"
        "      ],\n"
        "      \"rhs\": {\n"
        "        \"3\": \"1\"\n"
        "      }\n"
        "    }\n"
        "  ]\n"
        "}\n");
}

TEST_CASE("catalog entries round trip") {
  for (const FieldSpec& f : {kQ, kGF2, kGF3}) {
    for (const auto& entry : list_all(f)) {
      CAPTURE(entry.label());
      if (f.is_rational()) {
        const auto lie = build<Rational>(entry, f);
        const auto text = render_document(lie);
        const auto back = parse_document(text);
        CHECK(std::get<LieAlgebra<Rational>>(back) == lie);
        CHECK(render_document(back) == text);
      } else {
        const auto lie = build<Zp>(entry, f);
        const auto text = render_document(lie);
        const auto back = parse_document(text);
        CHECK(std::get<LieAlgebra<Zp>>(back) == lie);
        CHECK(render_document(back) == text);
      }
    }
  }
}

TEST_CASE("base-changed algebras with fractional constants round trip") {
  std::mt19937_64 rng(101);
  const auto base = get<Rational>("L5_7", kQ);
  for (int trial = 0; trial < 20; ++trial) {
    const auto moved = change_basis(base, random_invertible<Rational>(5, kQ, rng));
    const auto text = render_document(moved);
    CHECK(std::get<LieAlgebra<Rational>>(parse_document(text)) == moved);
  }
}

TEST_CASE("unordered and zero coefficients are canonicalised") {
  const auto any = parse_document(gf3_doc(
      R"([{"lhs": [1, 3], "rhs": {"4": "1"}}, {"lhs": [1, 2], "rhs": {"4": "0", "3": "1"}},
         {"lhs": [1, 4], "rhs": {"2": "0"}}])"));
  const auto& lie = std::get<LieAlgebra<Zp>>(any);
  REQUIRE(lie.entries().size() == 2);
  CHECK(lie.entries()[0].i == 0);
  CHECK(lie.entries()[0].j == 1);
  CHECK(lie == get<Zp>("L4_3", kGF3));
}

TEST_CASE("malformed JSON reports line and column") {
  const auto msg = parse_error("{\n  \"dim\": 3,\n  \"field\": {\"kind\": \"rational\"}\n  \"brackets\": []\n}");
  // Positions follow the JSON library: the character where parsing stopped.
  CHECK(starts_with(msg, "line 4, column 12: syntax error while parsing object"));
  CHECK(msg.find("json.exception") == std::string::npos);
  CHECK(starts_with(parse_error("[1, 2"), "line 1, column 6: syntax error while parsing array"));
}

TEST_CASE("semantic errors name the offending location") {
  CHECK(starts_with(parse_error(R"({"dim": 3, "dim": 4})"), "duplicate key at /dim"));
  CHECK(starts_with(parse_error(gf3_doc(R"([{"lhs": [1, 2], "rhs": {"3": "1", "3": "2"}}])")),
                    "duplicate key at /brackets/0/rhs/3"));
  CHECK(starts_with(parse_error(gf3_doc(R"([{"lhs": [2, 1], "rhs": {"3": "1"}}])")),
                    "/brackets/0/lhs: pairs must satisfy i < j"));
  CHECK(starts_with(parse_error(gf3_doc(R"([{"lhs": [1, 2], "rhs": {"3": "1"}}, {"lhs": [3, 5], "rhs": {}}])")),
                    "/brackets/1/lhs/1: index 5 outside 1..4"));
  CHECK(starts_with(parse_error(gf3_doc(R"([{"lhs": [1, 2], "rhs": {"3": "5"}}])")),
                    "/brackets/0/rhs/3:"));
  CHECK(starts_with(parse_error(gf3_doc(R"([{"lhs": [1, 2], "rhs": {"3": 1}}])")),
                    "/brackets/0/rhs/3: coefficient must be a string"));
  CHECK(starts_with(parse_error(gf3_doc(R"([{"lhs": [1, 2], "rhs": {"03": "1"}}])")),
                    "/brackets/0/rhs/03:"));
  CHECK(starts_with(parse_error(gf3_doc(R"([{"lhs": [1, 2], "rhs": {"7": "1"}}])")),
                    "/brackets/0/rhs/7: basis index 7 exceeds dim 4"));
  CHECK(starts_with(parse_error(gf3_doc(R"([{"lhs": [1, 2], "rhs": {"3": "1"}}, {"lhs": [1, 2], "rhs": {"4": "1"}}])")),
                    "/brackets/1/lhs: duplicate pair [1,2]"));
  CHECK(starts_with(parse_error(gf3_doc(R"([{"lhs": [1, 2], "rhs": {}, "extra": 1}])")),
                    "/brackets/0/extra: unknown key"));
  CHECK(starts_with(parse_error(R"({"dim": 3, "field": {"kind": "prime", "p": 4}, "brackets": []})"),
                    "/field/p: 4 is not a prime"));
  CHECK(starts_with(parse_error(R"({"dim": 2.5, "field": {"kind": "rational"}, "brackets": []})"),
                    "/dim: expected an integer"));
  CHECK(starts_with(parse_error(R"({"dim": 3, "field": {"kind": "rational"}})"),
                    "document: missing key brackets"));
  CHECK(starts_with(parse_error(R"({"dim": 2, "field": {"kind": "rational"}, "brackets": [{"lhs": [1, 2], "rhs": {"1": "1/0"}}]})"),
                    "/brackets/0/rhs/1:"));
}

TEST_CASE("Jacobi failures are reported with the triple") {
  // [e1,e2] = e3, [e2,e3] = e2: the jacobiator on (1,2,3) is -e3.
  const auto msg = parse_error(gf3_doc(
      R"([{"lhs": [1, 2], "rhs": {"3": "1"}}, {"lhs": [2, 3], "rhs": {"2": "1"}}])"));
  CHECK(starts_with(msg, "/brackets:"));
  CHECK(msg.find("(1,2,3)") != std::string::npos);
}

}  // TEST_SUITE
