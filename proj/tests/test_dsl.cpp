#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "specpos/catalog.hpp"
#include "specpos/dsl.hpp"
#include "specpos/errors.hpp"

using specpos::parse;
using specpos::parse_space;
using specpos::ParsedSpace;
using specpos::render;
using specpos::SpectralPoset;

namespace {

void expect_parse_error(const std::string& text, int line, int column,
                        const std::string& substring) {
  CAPTURE(text);
  try {
    parse_space(text);
    FAIL("expected ParseError, parsed successfully");
  } catch (const specpos::ParseError& e) {
    REQUIRE(e.where().has_value());
    CHECK(e.where()->line == line);
    CHECK(e.where()->column == column);
    CHECK(std::string(e.what()).find(substring) != std::string::npos);
    CHECK(std::string(e.what()).find("line " + std::to_string(line)) !=
          std::string::npos);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file " << path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("a complete document parses") {
  const std::string text =
      "# leading comment\n"
      "\n"
      "space DEMO # trailing comment\n"
      "point a b\n"
      "point t\n"
      "cover a < t\n"
      "cover b < t\n"
      "infinite b\n";
  ParsedSpace parsed = parse_space(text);
  CHECK(parsed.name == "DEMO");
  CHECK(parsed.poset.points() == std::vector<std::string>{"a", "b", "t"});
  CHECK(parsed.poset.cover_names() ==
        std::vector<std::pair<std::string, std::string>>{{"a", "t"},
                                                         {"b", "t"}});
  CHECK(parsed.poset.infinite_points() == std::vector<std::string>{"b"});
  CHECK(parse(text) == parsed.poset);
}

TEST_CASE("punctuation-heavy ids are ordinary tokens") {
  ParsedSpace parsed = parse_space(
      "space S\n"
      "point (v,w,x,y-1) (v,w)\n"
      "cover (v,w,x,y-1) < (v,w)\n");
  CHECK(parsed.poset.size() == 2);
  CHECK(parsed.poset.leq("(v,w,x,y-1)", "(v,w)"));
}

TEST_CASE("windows line endings and stray blanks are tolerated") {
  ParsedSpace parsed =
      parse_space("space S\r\n\r\npoint  a\tb\r\ncover a < b\r\n");
  CHECK(parsed.name == "S");
  CHECK(parsed.poset.size() == 2);
}

TEST_CASE("parse errors carry exact positions") {
  expect_parse_error("", 1, 1, "missing 'space' directive");
  expect_parse_error("# nothing but comments\n\n", 1, 1,
                     "missing 'space' directive");
  expect_parse_error("point a\nspace s\n", 1, 1,
                     "'space' directive must come before 'point'");
  expect_parse_error("space s\nspace t\npoint a\n", 2, 1,
                     "duplicate 'space'");
  expect_parse_error("space\n", 1, 1, "'space' needs a name");
  expect_parse_error("space s extra\npoint a\n", 1, 9,
                     "exactly one name");
  expect_parse_error("space s\npoint\n", 2, 1, "at least one id");
  expect_parse_error("space s\npoint a a\n", 2, 9, "duplicate point 'a'");
  expect_parse_error("space s\npoint a\npoint a\n", 3, 7,
                     "duplicate point 'a'");
  expect_parse_error("space s\npoint <\n", 2, 7, "not a valid point id");
  expect_parse_error("space s\npoint a b\ncover a b\n", 3, 9,
                     "cover LOWER < UPPER");
  expect_parse_error("space s\npoint a b\ncover a < b extra\n", 3, 13,
                     "cover LOWER < UPPER");
  expect_parse_error("space s\npoint a\ncover a <\n", 3, 9,
                     "cover LOWER < UPPER");
  expect_parse_error("space s\npoint a b\ncover a > b\n", 3, 9,
                     "cover LOWER < UPPER");
  expect_parse_error("space s\npoint a\ncover a < t\n", 3, 11,
                     "unknown point 't'");
  expect_parse_error("space s\npoint a b\ncover a < b\ncover a < b\n", 4, 1,
                     "duplicate cover 'a < b'");
  expect_parse_error("space s\npoint a\ninfinite\n", 3, 1,
                     "'infinite' needs a point id");
  expect_parse_error("space s\npoint a\ninfinite a b\n", 3, 12,
                     "exactly one id");
  expect_parse_error("space s\npoint a\ninfinite b\n", 3, 10,
                     "unknown point 'b'");
  expect_parse_error("space s\npoint a\ninfinite a\ninfinite a\n", 4, 10,
                     "duplicate 'infinite' flag");
  expect_parse_error("space s\npoint a\nfrobnicate x\n", 3, 1,
                     "unknown directive 'frobnicate'");
  expect_parse_error("space s\n", 1, 1, "declares no points");
}

TEST_CASE("structural defects point at the responsible cover line") {
  try {
    parse_space("space s\npoint a b\ncover a < b\ncover b < a\n");
    FAIL("expected CycleError");
  } catch (const specpos::CycleError& e) {
    REQUIRE(e.where().has_value());
    CHECK(e.where()->line == 3);
    CHECK(e.where()->column == 1);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  try {
    parse_space("space s\npoint a\ncover a < a\n");
    FAIL("expected CycleError");
  } catch (const specpos::CycleError& e) {
    REQUIRE(e.where().has_value());
    CHECK(e.where()->line == 3);
  }

  try {
    parse_space(
        "space s\npoint a b c\ncover a < b\ncover b < c\ncover a < c\n");
    FAIL("expected NotReducedError");
  } catch (const specpos::NotReducedError& e) {
    CHECK(e.cover() == std::pair<std::string, std::string>{"a", "c"});
    REQUIRE(e.where().has_value());
    CHECK(e.where()->line == 5);
    CHECK(e.where()->column == 1);
  }
}

TEST_CASE("render round-trips every catalog fixture") {
  for (const std::string& name : specpos::catalog_names()) {
    CAPTURE(name);
    SpectralPoset poset = specpos::catalog_get(name).poset;
    std::string text = render(poset, name);
    CHECK(text.substr(0, 2) == "# ");
    CHECK(text.find("space " + name + "\n") != std::string::npos);
    ParsedSpace back = parse_space(text);
    CHECK(back.name == name);
    CHECK(back.poset == poset);
    CHECK(render(back.poset, back.name) == text);
  }
}

TEST_CASE("shipped fixture files match the catalog") {
  const std::pair<const char*, const char*> files[] = {
      {"butterfly.space", "BUTTERFLY"},
      {"noetherian_butterfly.space", "NOETHERIAN_BUTTERFLY"},
      {"glue.space", "GLUE"},
      {"glue2.space", "GLUE2"},
      {"wx.space", "WX"},
      {"chain_3.space", "CHAIN_3"},
      {"antichain_2.space", "ANTICHAIN_2"},
  };
  for (const auto& [file, name] : files) {
    CAPTURE(file);
    std::string text =
        read_file(std::string(SPECPOS_FIXTURES_DIR) + "/" + file);
    ParsedSpace parsed = parse_space(text);
    CHECK(parsed.name == name);
    CHECK(parsed.poset == specpos::catalog_get(name).poset);
    // Shipped files are exactly what render() produces, so tooling can
    // regenerate them without churn.
    CHECK(text == render(parsed.poset, parsed.name));
  }
}
