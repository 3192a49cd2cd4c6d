// Tests for the finitely-presented-group module: presentation parsing, word
// evaluation against matrix assignments, relator checking, and the HLT
// Todd-Coxeter coset enumerator.
#include "doctest.h"

#include "su3kit/catalog.hpp"
#include "su3kit/fp.hpp"
#include "su3kit/mat3.hpp"

#include <string>
#include <vector>

using namespace su3kit;
namespace cat = su3kit::catalog;

TEST_CASE("parse_word round-trips through format_word") {
  fp::Presentation p = fp::parse_presentation("gens: a b c; rel: a");
  CHECK(fp::format_word(p, fp::parse_word(p, "a b^2 c^-3 a^-1")) ==
        "a b^2 c^-3 a^-1");
  CHECK(fp::format_word(p, fp::parse_word(p, "a a a")) == "a^3");
  CHECK(fp::format_word(p, fp::parse_word(p, "a^2 a^-1")) == "a^2 a^-1");
  CHECK(fp::format_word(p, fp::Word{}) == "1");
  CHECK(fp::parse_word(p, "1").empty());
  CHECK(fp::parse_word(p, "b^0").empty());
  CHECK(fp::parse_word(p, "c^-2") == fp::Word{-3, -3});
}

TEST_CASE("parse_presentation grammar") {
  fp::Presentation p = fp::parse_presentation(
      "gens: x y; rel: x^4; rel: y^2; rel: y x y^-1 x");
  CHECK(p.generators == std::vector<std::string>{"x", "y"});
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0] == fp::Word{1, 1, 1, 1});
  CHECK(p.relators[2] == fp::Word{2, 1, -2, 1});

  // Errors: missing gens section, unknown generator, malformed exponent,
  // duplicate generator name, empty relator section.
  CHECK_THROWS_AS((void)fp::parse_presentation("rel: x^2"), usage_error);
  CHECK_THROWS_AS((void)fp::parse_presentation("gens: x; rel: y^2"),
                  usage_error);
  CHECK_THROWS_AS((void)fp::parse_presentation("gens: x; rel: x^"),
                  usage_error);
  CHECK_THROWS_AS((void)fp::parse_presentation("gens: x x; rel: x^2"),
                  usage_error);
  CHECK_THROWS_AS((void)fp::parse_presentation("gens: x; rel:"), usage_error);
  CHECK_THROWS_AS((void)fp::parse_presentation(""), usage_error);
}

TEST_CASE("eval_word multiplies letters left to right") {
  fp::Presentation p = fp::parse_presentation("gens: c6 c18; rel: c6^6");
  fp::GenAssignment a{{"c6", cat::c6()}, {"c18", cat::c18()}};
  CHECK(fp::eval_word(p, a, fp::parse_word(p, "1")) == Mat3::identity(72));
  CHECK(fp::eval_word(p, a, fp::parse_word(p, "c6^6")) == Mat3::identity(72));
  CHECK(fp::eval_word(p, a, fp::parse_word(p, "c6 c18")) ==
        cat::c6() * cat::c18());
  CHECK(fp::eval_word(p, a, fp::parse_word(p, "c18^-1")) ==
        cat::c18().inverse());
}

TEST_CASE("bundled presentations hold in their matrix groups") {
  CHECK(fp::check_presentation(fp::fr162x4_presentation(),
                               fp::fr162x4_assignment())
            .empty());
  CHECK(fp::check_presentation(fp::d_action_presentation(),
                               fp::d_action_assignment())
            .empty());
  CHECK(
      fp::check_presentation(fp::fr162_presentation(), fp::fr162_assignment())
          .empty());
}

TEST_CASE("check_presentation reports a corrupted relator") {
  // Weaken c6^6 to c6^5: the assignment no longer satisfies the relator.
  fp::Presentation p = fp::fr162x4_presentation();
  REQUIRE(p.relators[0] == fp::Word{1, 1, 1, 1, 1, 1});
  p.relators[0] = fp::Word{1, 1, 1, 1, 1};
  std::vector<fp::Word> bad = fp::check_presentation(p, fp::fr162x4_assignment());
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == fp::Word{1, 1, 1, 1, 1});
}

TEST_CASE("check_presentation rejects incomplete assignments") {
  fp::GenAssignment missing = fp::fr162x4_assignment();
  missing.erase("h3");
  CHECK_THROWS_AS(
      (void)fp::check_presentation(fp::fr162x4_presentation(), missing),
      usage_error);
}

TEST_CASE("verify_identity on conjugation identities of the c6/c18 frame") {
  fp::Presentation p =
      fp::parse_presentation("gens: c6 c18 h1 h3; rel: c6^6");
  fp::GenAssignment a = fp::fr162x4_assignment();

  // h3 c18 h3^-1 = c18^10 c6^7  (h3 has order 3, so h3^-1 = h3^2).
  CHECK(fp::verify_identity(p, a, "h3 c18 h3^-1", "c18^10 c6^7"));
  // h1 c6 h1^-1 written both ways: c6^-1 c18^6 and c6^5 c18^6 agree because
  // c6 has order 6.
  CHECK(fp::verify_identity(p, a, "h1 c6 h1^-1", "c6^-1 c18^6"));
  CHECK(fp::verify_identity(p, a, "h1 c6 h1^-1", "c6^5 c18^6"));
  CHECK(fp::verify_identity(p, a, "c6^-1", "c6^5"));
  // h3 c6 h3^-1 = c6^-5 c18^-3.
  CHECK(fp::verify_identity(p, a, "h3 c6 h3^-1", "c6^-5 c18^-3"));
  // h1 c18 h1^-1 = c6^3 c18.
  CHECK(fp::verify_identity(p, a, "h1 c18 h1^-1", "c6^3 c18"));
  // A deliberately false identity is reported false, not thrown.
  CHECK_FALSE(fp::verify_identity(p, a, "h1 c6 h1^-1", "c6"));
}

TEST_CASE("todd_coxeter on small classical presentations") {
  CHECK(fp::todd_coxeter(fp::parse_presentation(
            "gens: r s; rel: r^3; rel: s^2; rel: r s r s")) == 6);
  CHECK(fp::todd_coxeter(fp::parse_presentation(
            "gens: a b; rel: a^18; rel: b^6; rel: a b a^-1 b^-1")) == 108);
  CHECK(fp::todd_coxeter(fp::parse_presentation("gens: a; rel: a")) == 1);
  // Quaternion group of order 8.
  CHECK(fp::todd_coxeter(fp::parse_presentation(
            "gens: i j; rel: i^4; rel: i^2 j^-2; rel: j i j^-1 i")) == 8);
}

TEST_CASE("todd_coxeter counts the bundled presentations") {
  CHECK(fp::todd_coxeter(fp::fr162x4_presentation()) == 648);
  CHECK(fp::todd_coxeter(fp::d_action_presentation()) == 648);
  CHECK(fp::todd_coxeter(fp::fr162_presentation()) == 162);
}

TEST_CASE("todd_coxeter cap limits live cosets") {
  // A free generator never closes: the enumeration must hit the cap.
  fp::Presentation free1 = fp::parse_presentation("gens: a b; rel: a^2");
  CHECK_THROWS_AS((void)fp::todd_coxeter(free1, 100), cap_exceeded);
  // A cap below the final coset count also fails even for finite groups.
  CHECK_THROWS_AS((void)fp::todd_coxeter(fp::fr162x4_presentation(), 600),
                  cap_exceeded);
  // The default cap is generous enough for every bundled presentation; a
  // tight-but-sufficient cap also works.
  CHECK(fp::todd_coxeter(fp::fr162x4_presentation(), 1500) == 648);
}
