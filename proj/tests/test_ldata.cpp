#include <doctest.h>

#include "arthurkit/ldata.hpp"
#include "fixtures.hpp"

using namespace arthurkit;
using namespace fx;

TEST_CASE("segment derivatives") {
  RhoSymbol r = rho_o();
  GLSegmentRep st = seg(r, i(1), i(-1));
  auto left = gl_derivative(st, RhoTwist{r, i(1)}, Side::Left);
  REQUIRE(left);
  CHECK(*left == seg(r, i(0), i(-1)));
  CHECK_FALSE(gl_derivative(st, RhoTwist{r, i(-1)}, Side::Left));
  auto right = gl_derivative(st, RhoTwist{r, i(-1)}, Side::Right);
  REQUIRE(right);
  CHECK(*right == seg(r, i(1), i(0)));

  GLSegmentRep z = GLSegmentRep::zelevinsky(r, i(-1), i(1));
  auto zl = gl_derivative(z, RhoTwist{r, i(-1)}, Side::Left);
  REQUIRE(zl);
  CHECK(zl->y == i(0));
  CHECK(zl->x == i(1));
  CHECK_FALSE(gl_derivative(z, RhoTwist{r, i(1)}, Side::Left));
  CHECK(gl_derivative(z, RhoTwist{r, i(1)}, Side::Right)->x == i(0));

  // Length one collapses to GL_0; GL_0 has no derivative.
  auto one = gl_derivative(seg(r, h(1), h(1)), RhoTwist{r, h(1)}, Side::Left);
  REQUIRE(one);
  CHECK(one->is_trivial());
  CHECK(one->dimension() == 0);
  CHECK_FALSE(gl_derivative(*one, RhoTwist{r, h(1)}, Side::Left));
  CHECK_FALSE(gl_derivative(st, RhoTwist{rho_o("q"), i(1)}, Side::Left));
}

TEST_CASE("speh blocks") {
  RhoSymbol r = rho_o();
  SpehBlock b = speh_of_summand(Summand::make(r, Rational(1, 4), 2, 2), true);
  CHECK(b.entry(1, 1) == Rational(1, 4));
  CHECK(b.entry(1, 2) == Rational(5, 4));
  CHECK(b.entry(2, 1) == Rational(-3, 4));
  CHECK(b.entry(2, 2) == Rational(1, 4));
  CHECK_THROWS_AS(speh_of_summand(Summand::make(r, 2, 2), true), PreconditionError);
  SpehBlock c = speh_of_summand(Summand::make(r, 3, 1), false);
  CHECK(c.rows == 3);
  CHECK(c.cols == 1);
  CHECK(c.entry(1, 1) == Rational(1));
}

TEST_CASE("tempered data merges pieces") {
  RhoSymbol r = rho_o();
  TemperedData t;
  t.add(r, 3, 1, -1);
  t.add(r, 1, 2);
  t.add(r, 3, 1, -1);
  REQUIRE(t.pieces().size() == 2);
  CHECK(t.pieces()[0].a == 1);
  CHECK(t.pieces()[1].multiplicity == 2);
  CHECK(t.dimension() == 8);
  CHECK_FALSE(t.all_signs_trivial());
  CHECK_THROWS_AS(t.add(r, 3, 1, 1), InputError);
}

TEST_CASE("check_ldata") {
  RhoSymbol r = rho_o();
  CHECK(check_ldata(LData{sp(1), {seg(r, i(-1), i(-1))}, tempered({{r, 1, 1, 1}})}).ok);
  // Segment exponents must have negative sum.
  CHECK_FALSE(check_ldata(LData{sp(1), {seg(r, i(1), i(1))}, tempered({{r, 1, 1, 1}})}).ok);
  CHECK_FALSE(check_ldata(LData{sp(2), {seg(r, i(-1), i(-1))}, tempered({{r, 1, 1, 1}})}).ok);
  // The sign must be a character: one piece of odd multiplicity with eps = -.
  CHECK_FALSE(check_ldata(LData{sp(1), {}, tempered({{r, 3, 1, -1}})}).ok);
  RhoSymbol q = rho_o("q");
  CHECK(check_ldata(LData{sp(2), {}, tempered({{r, 3, 1, -1}, {q, 1, 1, -1}, {r, 1, 1, 1}})}).ok);
  CHECK_FALSE(check_ldata(LData{sp(2), {}, tempered({{r, 3, 1, -1}, {q, 1, 1, 1}, {r, 1, 1, 1}})}).ok);
  // Even multiplicity does not count towards the product.
  CHECK_FALSE(check_ldata(LData{sp(2), {}, tempered({{r, 3, 1, -1}, {q, 1, 2, -1}})}).ok);
  // Wrong-type pieces need even multiplicity and trivial sign.
  CHECK(check_ldata(LData{sp(2), {}, tempered({{r, 2, 2, 1}, {r, 1, 1, 1}})}).ok);
  CHECK_FALSE(check_ldata(LData{sp(2), {}, tempered({{r, 2, 2, -1}, {r, 1, 1, 1}})}).ok);
  CHECK_THROWS_AS(make_ldata(sp(1), {seg(r, i(1), i(1))}, tempered({{r, 1, 1, 1}})), InputError);
}

TEST_CASE("make_ldata sorts segments") {
  RhoSymbol r = rho_o();
  LData pi = make_ldata(sp(2), {seg(r, i(-1), i(-1)), seg(r, i(-2), i(-2))}, tempered({{r, 1, 1, 1}}));
  CHECK(pi.segments.front().x == i(-2));
  CHECK(pi.dimension() == 5);
}

TEST_CASE("omega and good parity of L-data") {
  RhoSymbol r = rho_o();
  LData pi = make_ldata(sp(2), {seg(r, i(0), i(-1))}, tempered({{r, 1, 1, 1}}));
  MultiSet<RhoTwist> want{RhoTwist{r, i(0)}, RhoTwist{r, i(1)}, RhoTwist{r, i(0)}};
  CHECK(omega_pi(pi) == want);
  CHECK(is_good_parity_ldata(pi));
  LData half = make_ldata(sp(1), {seg(r, h(-1), h(-1))}, tempered({{r, 1, 1, 1}}));
  CHECK_FALSE(is_good_parity_ldata(half));
  LData so_half = make_ldata(so(1), {seg(r, h(-1), h(-1))}, {});
  CHECK(is_good_parity_ldata(so_half));
}

TEST_CASE("multiplicity profile") {
  RhoSymbol r = rho_o();
  LData pi = make_ldata(sp(3), {seg(r, i(-1), i(-1)), seg(r, i(-1), i(-1)), seg(r, i(-2), i(-2))},
                        tempered({{r, 1, 1, 1}}));
  MultiplicityProfile p = multiplicity_profile(pi);
  CHECK(p.at("r", i(0)) == 1);
  CHECK(p.at("r", i(1)) == 2);
  CHECK(p.at("r", i(2)) == 1);
  CHECK(p.at("r", i(3)) == 0);
  CHECK(p.at("q", i(0)) == 0);
  LData longer = make_ldata(sp(1), {}, tempered({{r, 3, 1, 1}}));
  CHECK_THROWS_AS(multiplicity_profile(longer), PreconditionError);
}
