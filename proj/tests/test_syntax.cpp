#include <doctest.h>

#include <string>

#include "emolog/errors.hpp"
#include "emolog/formula.hpp"
#include "emolog/syntax.hpp"

using namespace emolog;

namespace {
Formula P() { return Formula::var("p"); }
Formula Q() { return Formula::var("q"); }
Formula R() { return Formula::var("r"); }
} // namespace

TEST_CASE("parsing basics") {
    CHECK(parse_formula("p") == P());
    CHECK(parse_formula("!p") == Formula::neg(P()));
    CHECK(parse_formula("p -> q") == Formula::implies(P(), Q()));
    CHECK(parse_formula("N p") == Formula::nec(P()));
    CHECK(parse_formula("K[a] p") == Formula::knows("a", P()));
    CHECK(parse_formula("H[p] gift") == Formula::happy("p", Formula::var("gift")));
    CHECK(parse_formula("S[s] !gift") ==
          Formula::sad("s", Formula::neg(Formula::var("gift"))));
    CHECK(parse_formula("( p )") == P());
    CHECK(parse_formula("  p  ") == P());
}

TEST_CASE("parsing degree-tagged modalities") {
    CHECK(parse_formula("H[s;2] rus") ==
          Formula::happy_deg("s", Decimal(2), Formula::var("rus")));
    CHECK(parse_formula("S[p;0.5] q") ==
          Formula::sad_deg("p", Decimal::parse("0.5"), Q()));
    CHECK(parse_formula("H[a;0] p") == Formula::happy_deg("a", Decimal(0), P()));
    // degrees are nonnegative decimal literals
    CHECK_THROWS_AS(parse_formula("H[a;-1] p"), ParseError);
    CHECK_THROWS_AS(parse_formula("H[a;x] p"), ParseError);
    CHECK_THROWS_AS(parse_formula("H[a;] p"), ParseError);
}

TEST_CASE("parsing sugar") {
    CHECK(parse_formula("p & q") == Formula::conj(P(), Q()));
    CHECK(parse_formula("p | q") == Formula::disj(P(), Q()));
    CHECK(parse_formula("p <-> q") == Formula::iff(P(), Q()));
    CHECK(parse_formula("Nbar p") == Formula::nbar(P()));
    CHECK(parse_formula("p & q & r") ==
          Formula::conj(Formula::conj(P(), Q()), R()));
    CHECK(parse_formula("p | q | r") ==
          Formula::disj(Formula::disj(P(), Q()), R()));
    CHECK(parse_formula("p <-> q <-> r") ==
          Formula::iff(Formula::iff(P(), Q()), R()));
}

TEST_CASE("precedence and associativity") {
    // -> is right associative and binds loosest
    CHECK(parse_formula("p -> q -> r") ==
          Formula::implies(P(), Formula::implies(Q(), R())));
    CHECK(parse_formula("(p -> q) -> r") ==
          Formula::implies(Formula::implies(P(), Q()), R()));
    // & binds tighter than |, | tighter than ->
    CHECK(parse_formula("p & q | r") ==
          Formula::disj(Formula::conj(P(), Q()), R()));
    CHECK(parse_formula("p | q -> r") ==
          Formula::implies(Formula::disj(P(), Q()), R()));
    CHECK(parse_formula("p & q -> r") ==
          Formula::implies(Formula::conj(P(), Q()), R()));
    // unary modalities bind tightest
    CHECK(parse_formula("K[a] p -> p") ==
          Formula::implies(Formula::knows("a", P()), P()));
    CHECK(parse_formula("N p & q") ==
          Formula::conj(Formula::nec(P()), Q()));
    CHECK(parse_formula("!p & q") ==
          Formula::conj(Formula::neg(P()), Q()));
    CHECK(parse_formula("N (p & q)") ==
          Formula::nec(Formula::conj(P(), Q())));
    CHECK(parse_formula("K[a] H[b] p") ==
          Formula::knows("a", Formula::happy("b", P())));
    CHECK(parse_formula("!!p") == Formula::neg(Formula::neg(P())));
}

TEST_CASE("a schema-shaped formula with sugar parses to its expansion") {
    auto lhs = Formula::conj(Formula::nbar(Formula::happy("s", Formula::var("rus_s"))),
                             Formula::nbar(Formula::happy("s", Formula::var("same"))));
    auto rhs = Formula::disj(
        Formula::nec(Formula::implies(Formula::var("rus_s"), Formula::var("same"))),
        Formula::nec(Formula::implies(Formula::var("same"), Formula::var("rus_s"))));
    CHECK(parse_formula("Nbar H[s] rus_s & Nbar H[s] same -> "
                        "N (rus_s -> same) | N (same -> rus_s)") ==
          Formula::implies(lhs, rhs));
}

TEST_CASE("reserved words and identifier edge cases") {
    // N and Nbar are never variables
    CHECK_THROWS_AS(parse_formula("N"), ParseError);
    CHECK_THROWS_AS(parse_formula("Nbar"), ParseError);
    CHECK_THROWS_AS(parse_formula("N -> p"), ParseError);
    // K, H, S act as variables unless directly followed by [
    CHECK(parse_formula("K") == Formula::var("K"));
    CHECK(parse_formula("H -> S") == Formula::implies(Formula::var("H"), Formula::var("S")));
    // underscores and digits in identifiers
    CHECK(parse_formula("rus_s") == Formula::var("rus_s"));
    CHECK(parse_formula("_x1") == Formula::var("_x1"));
    CHECK(parse_formula("K[alice_2] p") == Formula::knows("alice_2", P()));
    // Nxyz is an ordinary identifier, not the modality
    CHECK(parse_formula("Nothing") == Formula::var("Nothing"));
    CHECK(parse_formula("Nbarrier") == Formula::var("Nbarrier"));
}

TEST_CASE("parse errors carry a position and reject malformed input") {
    CHECK_THROWS_AS(parse_formula(""), ParseError);
    CHECK_THROWS_AS(parse_formula("p ->"), ParseError);
    CHECK_THROWS_AS(parse_formula("-> p"), ParseError);
    CHECK_THROWS_AS(parse_formula("(p"), ParseError);
    CHECK_THROWS_AS(parse_formula("p)"), ParseError);
    CHECK_THROWS_AS(parse_formula("p q"), ParseError);
    CHECK_THROWS_AS(parse_formula("K[] p"), ParseError);
    CHECK_THROWS_AS(parse_formula("K[a p"), ParseError);
    CHECK_THROWS_AS(parse_formula("K[a]"), ParseError);
    CHECK_THROWS_AS(parse_formula("H[a;1;2] p"), ParseError);
    CHECK_THROWS_AS(parse_formula("K[a;1] p"), ParseError); // K takes no degree
    CHECK_THROWS_AS(parse_formula("p <- q"), ParseError);
    CHECK_THROWS_AS(parse_formula("p # q"), ParseError);
    try {
        parse_formula("p -> $");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("printing uses minimal parentheses") {
    CHECK(print_formula(P()) == "p");
    CHECK(print_formula(Formula::neg(P())) == "!p");
    CHECK(print_formula(Formula::implies(P(), Q())) == "p -> q");
    CHECK(print_formula(Formula::implies(P(), Formula::implies(Q(), R()))) ==
          "p -> q -> r");
    CHECK(print_formula(Formula::implies(Formula::implies(P(), Q()), R())) ==
          "(p -> q) -> r");
    CHECK(print_formula(Formula::neg(Formula::implies(P(), Q()))) == "!(p -> q)");
    CHECK(print_formula(Formula::nec(P())) == "N p");
    CHECK(print_formula(Formula::nec(Formula::implies(P(), Q()))) == "N (p -> q)");
    CHECK(print_formula(Formula::knows("a", P())) == "K[a] p");
    CHECK(print_formula(Formula::happy("a", Formula::neg(P()))) == "H[a] !p");
    CHECK(print_formula(Formula::sad("s", Formula::nec(P()))) == "S[s] N p");
    CHECK(print_formula(Formula::happy_deg("s", Decimal(2), Formula::var("rus"))) ==
          "H[s;2] rus");
    CHECK(print_formula(Formula::sad_deg("p", Decimal::parse("0.5"), Q())) ==
          "S[p;0.5] q");
    // sugar prints in primitive form
    CHECK(print_formula(Formula::conj(P(), Q())) == "!(p -> !q)");
    CHECK(print_formula(Formula::nbar(P())) == "!N !p");
}

TEST_CASE("print/parse round-trip at moderate depth") {
    for (auto frag : {Fragment::Full, Fragment::NoSad}) {
        for (const auto& f : enumerate_formulas({"p", "q"}, {"a", "b"}, 2, frag)) {
            CHECK(parse_formula(print_formula(f)) == f);
        }
    }
    // degree forms round-trip too
    auto g = Formula::happy_deg("a", Decimal::parse("2.5"),
                                Formula::sad_deg("b", Decimal(0), P()));
    CHECK(parse_formula(print_formula(g)) == g);
}
