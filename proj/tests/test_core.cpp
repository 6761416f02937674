#include <string>

#include "doctest.h"
#include "ringform/core.hpp"

using namespace ringform;

namespace {

const char* kSmall =
    "# two blocks\n"
    "kind: P1\n"
    "k: 2\n"
    "p: 2\n"
    "q: 2\n"
    "\n"
    "config: RRBB\n"
    "requirements:\n"
    "1 1\n"
    "1 1\n";

}  // namespace

TEST_CASE("parse a small instance") {
  const auto inst = parse_instance(kSmall);
  CHECK(inst.k() == 2);
  CHECK(inst.p() == 2);
  CHECK(inst.q == 2);
  CHECK(inst.spec.kind == Problem::P1);
  CHECK(render(inst.initial, 2) == "RRBB");
  CHECK(inst.spec(1, 1) == 1);
  CHECK(inst.initial[2].id == 2);
  CHECK(validate(inst).valid);
}

TEST_CASE("config length must be k*p") {
  std::string text = kSmall;
  text.replace(text.find("RRBB"), 4, "RRBBB");
  try {
    parse_instance(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.field() == "config");
    CHECK(e.line() == 7);
    CHECK(std::string(e.what()).find("n != k*p") != std::string::npos);
  }
}

TEST_CASE("parse errors name the field") {
  auto field_of = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.field();
    }
    return std::string("none");
  };
  CHECK(field_of("kind: P4\nk: 2\np: 1\nq: 2\nconfig: BR\nrequirements:\n1 0\n0 1\n") == "kind");
  CHECK(field_of("kind: P1\nk: x\np: 1\nq: 2\nconfig: BR\nrequirements:\n1 0\n0 1\n") == "k");
  CHECK(field_of("kind: P1\nk: 2\np: 1\nq: 2\nconfig: BX\nrequirements:\n1 0\n0 1\n") == "config");
  CHECK(field_of("kind: P1\nk: 2\np: 1\nq: 2\nconfig: BR\nrequirements:\n1 0\n") == "requirements");
  CHECK(field_of("kind: P1\nk: 2\np: 1\nq: 2\nconfig: BR\n") == "requirements");
  CHECK(field_of("kind: P3\nk: 2\np: 1\nq: 2\nconfig: BR\npatterns:\nB\n") == "patterns");
  CHECK(field_of("kind: P1\np: 1\nq: 2\nconfig: BR\nrequirements:\n1 0\n0 1\n") == "k");
}

TEST_CASE("serialize round trip") {
  const auto inst = parse_instance(kSmall);
  const auto text = serialize_instance(inst);
  CHECK(parse_instance(text) == inst);
  CHECK(serialize_instance(parse_instance(text)) == text);

  const auto p3 = make_p3_instance(2, 3, 3, "123312", {"321", "123"});
  CHECK(parse_instance(serialize_instance(p3)) == p3);
}

TEST_CASE("colour symbols") {
  CHECK(colour_symbol(1, 2) == 'B');
  CHECK(colour_symbol(2, 2) == 'R');
  CHECK(colour_symbol(1, 3) == '1');
  CHECK(colour_symbol(10, 12) == 'a');
  CHECK(parse_colour('b', 12) == 11);
  CHECK_THROWS_AS(parse_colour('4', 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_colour('1', 2), std::invalid_argument);
  CHECK(render(parse_colours("12a", 10), 10) == "12a");
}

TEST_CASE("configuration blocks and counts") {
  const auto cfg = Configuration::from_colours(2, 2, parse_colours("BBRR", 2));
  CHECK(counts(cfg, 1, 2) == CountVector{2, 0});
  CHECK(counts(cfg, 2, 2) == CountVector{0, 2});
  CHECK(totals(cfg, 2) == CountVector{2, 2});
  CHECK(cfg.block_of(3) == 2);
  CHECK(cfg.block_start(2) == 2);
  CHECK_THROWS_AS(cfg.block(0), std::out_of_range);
  CHECK_THROWS_AS(cfg.block(3), std::out_of_range);
  CHECK_THROWS_AS(Configuration(2, 2, std::vector<Agent>(3)), std::invalid_argument);
}

TEST_CASE("validity: totals and block sums") {
  auto inst = make_instance(Problem::P1, 2, 2, 2, "RRRB", {{1, 1}, {1, 1}});
  auto report = validate(inst);
  CHECK_FALSE(report.valid);
  REQUIRE(report.colours.size() == 2);
  CHECK_FALSE(report.colours[0].ok);
  CHECK(report.colours[0].present == 1);
  CHECK(report.colours[0].required == 2);
  CHECK_FALSE(report.describe().empty());

  inst = make_instance(Problem::P1, 2, 2, 2, "RRBB", {{2, 1}, {1, 1}});
  CHECK_FALSE(validate(inst).valid);

  inst = make_instance(Problem::P1, 2, 2, 2, "RRBB", {{2, 0}, {0, 2}});
  CHECK_FALSE(validate(inst).valid);  // zero entry for a non-last colour
}

TEST_CASE("validity: restricted P2 surplus") {
  const auto inst = make_instance(Problem::P2Restricted, 2, 2, 2, "BBBR", {{1, 1}, {0, 0}});
  const auto report = validate(inst);
  CHECK(report.valid);
  CHECK(report.extra == 1);

  const auto short_inst = make_instance(Problem::P2Restricted, 2, 2, 2, "BRRR", {{1, 1}, {0, 0}});
  CHECK_FALSE(validate(short_inst).valid);
}

TEST_CASE("validity: P3 patterns need every colour") {
  CHECK(validate(make_p3_instance(2, 2, 2, "BRRB", {"RB", "BR"})).valid);
  CHECK_FALSE(validate(make_p3_instance(2, 2, 2, "BBRR", {"BB", "RR"})).valid);
}

TEST_CASE("target_reached") {
  const auto inst = make_instance(Problem::P1, 2, 2, 2, "RRBB", {{1, 1}, {1, 1}});
  CHECK_FALSE(target_reached(inst.initial, inst));
  CHECK(target_reached(Configuration::from_colours(2, 2, parse_colours("RBBR", 2)), inst));

  const auto p2 = make_instance(Problem::P2Restricted, 2, 2, 2, "BBBR", {{1, 1}, {0, 0}});
  CHECK(target_reached(p2.initial, p2));

  const auto p3 = make_p3_instance(2, 2, 2, "BRRB", {"RB", "BR"});
  CHECK_FALSE(target_reached(p3.initial, p3));
  CHECK(target_reached(Configuration::from_colours(2, 2, parse_colours("RBBR", 2)), p3));
}
