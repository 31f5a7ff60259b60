#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taureg/fixtures.hpp"
#include "taureg/quiver.hpp"

using namespace taureg;
using Kind = ParseError::Kind;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_quiver(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError(Kind::Syntax, 0, 0, "");
}

const char* kTwoArrows = "vertices: 1 2 3\narrow a: 2 -> 1\narrow b: 3 -> 2\n";

}  // namespace

TEST_CASE("parse a quiver with relations") {
  const auto qp = parse_quiver(fixture_source("ALG-A"));
  CHECK(qp.quiver.num_vertices() == 3);
  CHECK(qp.quiver.num_arrows() == 6);
  CHECK(qp.relations.size() == 6);
  const auto& rel = qp.relations[4];  // a1*b3 + a3*b1
  REQUIRE(rel.terms.size() == 2);
  CHECK(rel.source() == 2);
  CHECK(rel.target() == 0);
  // written order: a1 applied after b3
  CHECK(rel.terms[0].path.arrows == std::vector<int>{0, 5});
  CHECK(rel.terms[1].coefficient == Rational(1));
  CHECK(qp.relations[3].terms[1].coefficient == Rational(-1));
}

TEST_CASE("composition convention") {
  const auto after = parse_quiver(std::string(kTwoArrows) + "relations:\na*b\n");
  const auto before = parse_quiver(std::string("convention: before\n") + kTwoArrows + "relations:\nb*a\n");
  REQUIRE(after.relations.size() == 1);
  REQUIRE(before.relations.size() == 1);
  CHECK(after.relations[0].terms[0].path == before.relations[0].terms[0].path);
  CHECK(path_string(after.quiver, after.relations[0].terms[0].path) == "a*b");
}

TEST_CASE("rational coefficients and trivial paths") {
  const auto qp = parse_quiver(std::string(kTwoArrows));
  const auto r = parse_combination(qp.quiver, "-1/2 a*b", 2);
  CHECK(r.terms[0].coefficient == Rational(-1) / Rational(2));
  const auto e = parse_combination(qp.quiver, "e(2)", 0);
  CHECK(e.terms[0].path == Path::trivial(1));
  CHECK(parse_combination(qp.quiver, "a", 0).terms[0].path.length() == 1);
}

TEST_CASE("format round trip") {
  for (const auto& name : fixture_names()) {
    const auto qp = parse_quiver(fixture_source(name));
    const auto again = parse_quiver(format_quiver(qp));
    CHECK(again.quiver.vertices == qp.quiver.vertices);
    REQUIRE(again.relations.size() == qp.relations.size());
    for (std::size_t i = 0; i < qp.relations.size(); ++i)
      CHECK(relation_string(qp.quiver, qp.relations[i]) == relation_string(again.quiver, again.relations[i]));
  }
}

TEST_CASE("path concatenation") {
  const auto qp = parse_quiver(kTwoArrows);
  const Path a = Path::of_arrow(qp.quiver, 0);
  const Path b = Path::of_arrow(qp.quiver, 1);
  const auto ab = concatenate(a, b);
  REQUIRE(ab);
  CHECK(ab->source == 2);
  CHECK(ab->target == 0);
  CHECK_FALSE(concatenate(b, a));
  CHECK(concatenate(Path::trivial(0), a) == a);
  CHECK(reversed(*ab).arrows == std::vector<int>{1, 0});
}

TEST_CASE("parse errors carry kind and position") {
  auto e = parse_error("vertices: 1 2\narrow x 2 -> 1\n");
  CHECK(e.kind() == Kind::Syntax);
  CHECK(e.line() == 2);
  e = parse_error("vertices: 1 2\narrow x: 2 -> 5\n");
  CHECK(e.kind() == Kind::UnknownVertex);
  CHECK(e.column() == 15);
  e = parse_error(std::string(kTwoArrows) + "relations:\na*c\n");
  CHECK(e.kind() == Kind::UnknownArrow);
  CHECK(e.line() == 5);
  e = parse_error(std::string(kTwoArrows) + "relations:\nb*a\n");
  CHECK(e.kind() == Kind::NonComposable);
  e = parse_error(std::string(kTwoArrows) + "relations:\na\n");
  CHECK(e.kind() == Kind::TooShort);
  e = parse_error("vertices: 1 2\narrow x: 1 -> 2\narrow y: 2 -> 1\nrelations:\nx*y - y*x\n");
  CHECK(e.kind() == Kind::NonParallel);
  CHECK(parse_error("vertices: 1 1\n").kind() == Kind::Duplicate);
  CHECK(parse_error("vertices: 1\narrow x: 1 -> 1\narrow x: 1 -> 1\n").kind() == Kind::Duplicate);
  CHECK(parse_error("arrow x: 1 -> 1\n").kind() == Kind::Syntax);
  CHECK(parse_error("").kind() == Kind::Syntax);
}
