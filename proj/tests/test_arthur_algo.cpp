#include <doctest.h>

#include "arthurkit/arthur_algo.hpp"
#include "fixtures.hpp"

using namespace arthurkit;
using namespace fx;

TEST_CASE("tempered oracle") {
  RhoSymbol r = rho_o();
  LData pi = make_ldata(sp(6), {}, tempered({{r, 5, 2, 1}, {r, 3, 1, 1}}));
  Derivative d = oracle_tempered(pi, r, i(2));
  CHECK(d.k == 2);
  CHECK(d.result == make_ldata(sp(4), {}, tempered({{r, 3, 3, 1}})));
  CHECK(oracle_tempered(pi, r, i(-1)).k == 0);
  CHECK(oracle_tempered(pi, r, i(3)).k == 0);
  CHECK_THROWS_AS(oracle_tempered(pi, r, i(0)), UnsupportedInput);
  CHECK_THROWS_AS(oracle_tempered(pi, r, h(1)), UnsupportedInput);
  LData signed_pi = make_ldata(sp(2), {}, tempered({{r, 3, 1, -1}, {rho_o("q"), 1, 1, 1}, {r, 1, 1, -1}}));
  CHECK_THROWS_AS(oracle_tempered(signed_pi, r, i(1)), UnsupportedInput);
}

TEST_CASE("unramified oracle") {
  RhoSymbol r = rho_o();
  // m_r = (1, 2, 1) at 0, 1, 2.
  LData pi = make_ldata(sp(3), {seg(r, i(-1), i(-1)), seg(r, i(-1), i(-1)), seg(r, i(-2), i(-2))},
                        tempered({{r, 1, 1, 1}}));
  Derivative at1 = oracle_unramified(pi, r, i(-1));
  CHECK(at1.k == 1);
  CHECK(at1.result == make_ldata(sp(2), {seg(r, i(-1), i(-1)), seg(r, i(-2), i(-2))}, tempered({{r, 1, 1, 1}})));
  Derivative at2 = oracle_unramified(pi, r, i(-2));
  CHECK(at2.k == 1);
  CHECK(at2.result == make_ldata(sp(2), {seg(r, i(-1), i(-1)), seg(r, i(-1), i(-1))}, tempered({{r, 1, 1, 1}})));
  CHECK(oracle_unramified(pi, r, i(1)).k == 0);
  CHECK(oracle_unramified(pi, r, i(-3)).k == 0);
  CHECK(oracle_unramified(pi, rho_o("q"), i(-1)).k == 0);
  LData longer = make_ldata(sp(1), {}, tempered({{r, 3, 1, 1}}));
  CHECK_THROWS_AS(oracle_unramified(longer, r, i(-1)), UnsupportedInput);
}

TEST_CASE("oracle factory") {
  CHECK(make_oracle("tempered")->name() == "tempered");
  CHECK(make_oracle("unramified")->name() == "unramified");
  CHECK_THROWS_AS(make_oracle("bogus"), InputError);
}

TEST_CASE("Arthur-type verdicts") {
  RhoSymbol r = rho_o();
  UnramifiedOracle oracle;
  SUBCASE("trivial representation") {
    LData pi = make_ldata(sp(1), {seg(r, i(-1), i(-1))}, tempered({{r, 1, 1, 1}}));
    ArthurVerdict v = arthur_type_check(pi, oracle);
    REQUIRE(v.kind == VerdictKind::ArthurVia);
    REQUIRE(v.e);
    CHECK(weak_equivalent(*v.e, ems(sp(1), r, {row(i(1), i(-1), 1, 1)})));
    CHECK(v.psi.summands == param(sp(1), {{r, 1, 3}}).summands);
    CHECK(pi_of_L(*v.e) == pi);
  }
  SUBCASE("gap in the profile") {
    LData pi = make_ldata(sp(1), {seg(r, i(-2), i(-2))}, tempered({{r, 1, 1, 1}}));
    ArthurVerdict v = arthur_type_check(pi, oracle);
    CHECK(v.kind == VerdictKind::NotArthurType);
    CHECK(v.step == 4);
    CHECK(v.witness == "r: M_2=0 > M_1=-1");
    CHECK(verdict_name(v.kind) == "NotArthurType");
  }
  SUBCASE("repeated tempered piece") {
    LData pi = make_ldata(sp(2), {seg(r, i(-1), i(-1))}, tempered({{r, 1, 3, 1}}));
    ArthurVerdict v = arthur_type_check(pi, oracle);
    REQUIRE(v.kind == VerdictKind::ArthurVia);
    CHECK(v.psi.summands == param(sp(2), {{r, 1, 1, Rational(0), 2}, {r, 1, 3}}).summands);
  }
  SUBCASE("half-integral exponent") {
    LData pi = make_ldata(so(1), {seg(r, h(-1), h(-1))}, {});
    ArthurVerdict v = arthur_type_check(pi, oracle);
    REQUIRE(v.kind == VerdictKind::ArthurVia);
    CHECK(v.psi.summands == param(so(1), {{r, 1, 2}}).summands);
  }
  SUBCASE("tempered oracle refuses small exponents") {
    LData pi = make_ldata(sp(1), {}, tempered({{r, 3, 1, 1}}));
    CHECK_THROWS_AS(arthur_type_check(pi, TemperedOracle{}), UnsupportedInput);
  }
  SUBCASE("good parity is required") {
    LData pi = make_ldata(sp(1), {seg(r, h(-1), h(-1))}, tempered({{r, 1, 1, 1}}));
    CHECK_THROWS_AS(arthur_type_check(pi, oracle), PreconditionError);
  }
}
