#include "doctest.h"

#include "reesalg/error.hpp"
#include "reesalg/ring.hpp"
#include "support.hpp"

using namespace reesalg;
using testing_support::Gen;

namespace {

std::shared_ptr<const Ring> xy(MonomialOrder order = MonomialOrder::Grevlex, Field k = Field()) {
  Ring::Options o;
  o.order = order;
  return Ring::make(k, {"x", "y"}, {}, o);
}

}  // namespace

TEST_CASE("addition examples") {
  auto r = xy();
  auto x = r->variable("x"), y = r->variable("y");
  CHECK((x + y) + (x - y) == r->parse("2*x"));
  CHECK(x + r->zero() == x);
  auto r5 = xy(MonomialOrder::Grevlex, Field(5));
  auto x5 = r5->variable(0);
  CHECK(r5->parse("3*x") + r5->parse("3*x") == x5);
}

TEST_CASE("multiplication examples") {
  auto r = xy();
  auto x = r->variable("x"), y = r->variable("y");
  CHECK((x + y) * (x - y) == r->parse("x^2 - y^2"));
  CHECK(x * r->one() == x);
  auto s = Ring::make(Field(), {"x", "y", "t1", "t2"});
  CHECK(s->parse("x*t1") * s->parse("y*t2") == s->parse("x*y*t1*t2"));
}

TEST_CASE("monomial order examples") {
  auto r = xy();
  int x2[] = {2, 0}, x1y1[] = {1, 1}, x1[] = {1, 0}, y3[] = {0, 3};
  CHECK(r->compare(r->monomial(x2), r->monomial(x1y1)) == 1);
  CHECK(r->compare(r->monomial(x1y1), r->monomial(x1y1)) == 0);
  auto lex = xy(MonomialOrder::Lex);
  CHECK(lex->compare(lex->monomial(x1), lex->monomial(y3)) == 1);
  CHECK(r->compare(r->monomial(x1), r->monomial(y3)) == -1);
}

TEST_CASE("grevlex breaks ties on the last variable") {
  auto r = Ring::make(Field(), {"x", "y", "z"});
  // x*z < y^2 in grevlex since z has the larger exponent in the last slot
  CHECK(r->compare(r->parse("x*z").leading_monomial(), r->parse("y^2").leading_monomial()) == -1);
  CHECK(r->compare(r->parse("x*y").leading_monomial(), r->parse("y^2").leading_monomial()) == 1);
}

TEST_CASE("weighted degree") {
  auto r = Ring::make(Field(), {"x", "y"}, {1, 3});
  CHECK(r->parse("y").degree() == 3);
  CHECK(r->parse("x^3 + y").is_homogeneous());
  CHECK_FALSE(r->parse("x^2 + y").is_homogeneous());
  CHECK(r->compare(r->parse("y").leading_monomial(), r->parse("x^2").leading_monomial()) == 1);
}

TEST_CASE("printing") {
  auto r = Ring::make(Field(), {"x", "y", "t1", "t2"});
  CHECK(r->parse("3*x^2*y + t1*t2 - 1").to_string() == "3*x^2*y + t1*t2 - 1");
  CHECK(r->zero().to_string() == "0");
  CHECK(r->parse("-x").to_string() == "-x");
  CHECK(r->parse("x - 2*y").to_string() == "x - 2*y");
  auto q = Ring::make(Field(0), {"x"});
  CHECK(q->parse("x/2 - 3").to_string() == "1/2*x - 3");
}

TEST_CASE("parser errors carry positions") {
  auto r = xy();
  CHECK_THROWS_AS(r->parse("x + + "), ParseError);
  CHECK_THROWS_AS(r->parse("z"), ParseError);
  CHECK_THROWS_AS(r->parse("x / y"), ParseError);
  try {
    r->parse("x * q", 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("ring mismatch is detected") {
  auto a = xy(), b = xy();
  CHECK_THROWS_AS(a->variable(0) + b->variable(0), RingMismatchError);
  CHECK_THROWS_AS(a->variable(0) * b->variable(0), RingMismatchError);
}

TEST_CASE("degree guard") {
  Ring::Options o;
  o.max_degree = 10;
  auto r = Ring::make(Field(), {"x", "y"}, {}, o);
  CHECK_NOTHROW(r->pow(r->variable(0), 10));
  CHECK_THROWS_AS(r->pow(r->variable(0), 11), ResourceError);
}

TEST_CASE("exact division") {
  auto r = xy();
  CHECK(r->divide_exact(r->parse("x^2 - y^2"), r->parse("x + y")) == r->parse("x - y"));
  CHECK_THROWS_AS(r->divide_exact(r->parse("x^2 + y"), r->parse("x")), DomainError);
}

TEST_CASE("ring map substitution") {
  auto src = Ring::make(Field(), {"x", "y", "z"});
  auto dst = Ring::make(Field(), {"x", "z"});
  // y -> x + z
  RingMap m(*src, *dst, {dst->variable(0), dst->parse("x + z"), dst->variable(1)});
  CHECK(m(src->parse("x*y - y^2")) == dst->parse("-x*z - z^2"));
  auto none = Ring::make(Field(), {});
  RingMap drop(*src, *none, {none->zero(), none->zero(), none->zero()});
  CHECK(drop(src->parse("x + 3")) == none->constant(3));
}

TEST_CASE("ring axioms on random polynomials") {
  Gen g(11);
  for (auto order : {MonomialOrder::Grevlex, MonomialOrder::Lex}) {
    Ring::Options o;
    o.order = order;
    auto r = Ring::make(Field(), {"x", "y", "z"}, {}, o);
    for (int i = 0; i < 500; ++i) {
      auto a = g.polynomial(*r, 4, 3), b = g.polynomial(*r, 4, 3), c = g.polynomial(*r, 4, 3);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == r->zero());
      if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
  }
}

TEST_CASE("order axioms on random monomials") {
  Gen g(12);
  for (auto order : {MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::BlockElimination}) {
    Ring::Options o;
    o.order = order;
    o.first_block = 2;
    auto r = Ring::make(Field(), {"a", "b", "c", "d"}, {1, 2, 1, 3}, o);
    for (int i = 0; i < 1000; ++i) {
      Monomial a = g.monomial(*r, 4), b = g.monomial(*r, 4), c = g.monomial(*r, 4);
      int ab = r->compare(a, b);
      CHECK(ab == -r->compare(b, a));
      CHECK((ab == 0) == (a == b));
      if (ab < 0) CHECK(r->compare(r->mul(a, c), r->mul(b, c)) < 0);
      CHECK(r->compare(r->one_monomial(), a) <= 0);
      if (r->compare(a, b) < 0 && r->compare(b, c) < 0) CHECK(r->compare(a, c) < 0);
    }
  }
}

TEST_CASE("parse and print round trip") {
  Gen g(13);
  for (std::uint32_t p : {32003u, 7u, 0u}) {
    auto r = Ring::make(Field(p), {"x", "y", "t1", "t2"});
    for (int i = 0; i < 1000; ++i) {
      auto f = g.polynomial(*r, 5, 3);
      CHECK(r->parse(f.to_string()) == f);
    }
  }
}
