#include "doctest.h"
#include "socrank/axioms.hpp"
#include "socrank/io.hpp"
#include "socrank/rng.hpp"

using namespace socrank;

TEST_CASE("parse_power_relation") {
  SUBCASE("three-class example") {
    const PowerRelation pr = parse_power_relation(
        "players: 1 2 3\n"
        "ranking: {1,2,3} ~ {1,3} > {1,2} ~ {2,3} > {1} ~ {2} ~ {3}\n");
    const PowerRelation want =
        build_power_relation(PlayerSet::of_size(3), {{7, 5}, {3, 6}, {1, 2, 4}});
    CHECK(pr.same_quotient(want));
  }
  SUBCASE("single player") {
    const PowerRelation pr = parse_power_relation("players: a\nranking: {a}\n");
    CHECK(pr.class_count() == 1);
    CHECK(pr.players().name(0) == "a");
  }
  SUBCASE("sink token expands to the remaining coalitions") {
    const PowerRelation pr =
        parse_power_relation("players: 1 2 3\nranking: {1,3} > *\n");
    CHECK(pr.class_count() == 2);
    CHECK(pr.classes()[0].size() == 1);
    CHECK(pr.classes()[1].size() == 6);
    CHECK(pr.class_of(5) == 1);
  }
  SUBCASE("comments and blank lines are ignored") {
    const PowerRelation pr = parse_power_relation(
        "# a comment\n\nplayers: 1 2  # trailing\n\nranking: {1} ~ {2} ~ {1,2}\n");
    CHECK(pr.class_count() == 1);
  }
  SUBCASE("syntax errors carry positions") {
    try {
      parse_power_relation("players: 1 2\nranking: {1} + {2} ~ {1,2}\n");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 2);
      CHECK(e.column > 1);
    }
  }
  SUBCASE("unknown player") {
    CHECK_THROWS_AS(parse_power_relation("players: 1 2\nranking: {1} ~ {2} ~ {1,3}\n"),
                    UnknownPlayerError);
  }
  SUBCASE("incomplete partition surfaces as a validation error") {
    CHECK_THROWS_AS(parse_power_relation("players: 1 2\nranking: {1} > {2}\n"),
                    ValidationError);
  }
  SUBCASE("sink with nothing left is an empty class") {
    CHECK_THROWS_AS(parse_power_relation("players: 1\nranking: {1} > *\n"), ValidationError);
  }
}

TEST_CASE("serialize_power_relation") {
  SUBCASE("ascending bit order inside classes") {
    const PowerRelation pr =
        build_power_relation(PlayerSet::of_size(3), {{7, 5}, {3, 6}, {1, 2, 4}});
    CHECK(serialize_power_relation(pr) ==
          "players: 1 2 3\n"
          "ranking: {1,3} ~ {1,2,3} > {1,2} ~ {2,3} > {1} ~ {2} ~ {3}\n");
  }
  SUBCASE("single player") {
    const PowerRelation pr = parse_power_relation("players: a\nranking: {a}\n");
    CHECK(serialize_power_relation(pr) == "players: a\nranking: {a}\n");
  }
  SUBCASE("round-trip is the identity on random relations") {
    Rng rng(31);
    for (int t = 0; t < 300; ++t) {
      const int n = 2 + static_cast<int>(rng.below(4));
      const PowerRelation pr = random_relation(n, rng);
      const PowerRelation back = parse_power_relation(serialize_power_relation(pr));
      CHECK(back.same_quotient(pr));
      CHECK(back.players() == pr.players());
    }
  }
}

TEST_CASE("parse_game") {
  SUBCASE("simple majority game") {
    const MulticameralGame g =
        parse_game("houses: 1\nquota: 2\nplayer a 1\nplayer b 1\nplayer c 1\n");
    CHECK(g.house_count() == 1);
    CHECK(g.players().size() == 3);
    CHECK(g.houses()[0].quota == 2);
  }
  SUBCASE("quota count must match houses") {
    CHECK_THROWS_AS(parse_game("houses: 2\nquota: 1 2 3\nplayer a 1 1\n"),
                    DimensionMismatchError);
  }
  SUBCASE("player weight count must match houses") {
    CHECK_THROWS_AS(parse_game("houses: 2\nquota: 1 2\nplayer a 1\n"),
                    DimensionMismatchError);
  }
  SUBCASE("quotas must be positive") {
    CHECK_THROWS_AS(parse_game("houses: 1\nquota: 0\nplayer a 1\n"), NonPositiveQuotaError);
  }
  SUBCASE("negative weight is a syntax error") {
    CHECK_THROWS_AS(parse_game("houses: 1\nquota: 1\nplayer a -1\n"), SyntaxError);
  }
  SUBCASE("unreachable quota is flagged, not fatal") {
    const MulticameralGame g = parse_game("houses: 1\nquota: 99\nplayer a 1\nplayer b 1\n");
    REQUIRE(g.warnings().size() == 1);
  }
  SUBCASE("serialize round-trips") {
    const std::string text = "houses: 2\nquota: 4 4\nplayer 1 2 2\nplayer 2 2 1\nplayer 3 2 2\n";
    const MulticameralGame g = parse_game(text);
    std::ostringstream out;
    serialize_game(g, out);
    CHECK(out.str() == text);
  }
}
