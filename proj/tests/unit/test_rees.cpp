#include "doctest.h"

#include "oracles.hpp"
#include "reesalg/error.hpp"
#include "reesalg/rees.hpp"
#include "support.hpp"

using namespace reesalg;
using testing_support::Gen;

namespace {

std::shared_ptr<const Ring> xy() { return Ring::make(Field(), {"x", "y"}); }

Vector vec(const Ring& r, std::initializer_list<const char*> entries) {
  std::vector<Polynomial> c;
  for (const char* t : entries) c.push_back(r.parse(t));
  return Vector(r, std::move(c));
}

std::unique_ptr<ReesContext> context(const std::shared_ptr<const Ring>& r, int e,
                                     std::vector<std::vector<const char*>> gens) {
  std::vector<Vector> vs;
  for (const auto& g : gens) {
    std::vector<Polynomial> c;
    for (const char* t : g) c.push_back(r->parse(t));
    vs.push_back(Vector(*r, std::move(c)));
  }
  return std::make_unique<ReesContext>(r, e, std::move(vs));
}

Submodule ideal(const std::shared_ptr<const Ring>& r, std::initializer_list<const char*> g) {
  std::vector<Polynomial> p;
  for (const char* t : g) p.push_back(r->parse(t));
  return Submodule::ideal(r, std::move(p));
}

}  // namespace

TEST_CASE("power basis is descending lex") {
  auto b = ReesContext::power_basis(2, 2);
  CHECK(b == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(ReesContext::power_basis(3, 2).size() == 6);
  CHECK(ReesContext::power_basis(3, 0) == std::vector<std::vector<int>>{{0, 0, 0}});
}

TEST_CASE("rees power examples") {
  auto r = xy();
  auto m = context(r, 1, {{"x"}, {"y"}});
  CHECK(m->power(2).equals(ideal(r, {"x^2", "x*y", "y^2"})));
  CHECK(m->power(2).gens().size() == 3);
  CHECK(m->power(0).is_whole());

  auto diag = context(r, 2, {{"x", "0"}, {"0", "y"}});
  auto p2 = diag->power(2);
  FreeModule g2(r, 3);
  Submodule expected(g2, {vec(*r, {"x^2", "0", "0"}), vec(*r, {"0", "x*y", "0"}),
                          vec(*r, {"0", "0", "y^2"})});
  CHECK(p2.equals(expected));
  CHECK(p2.gens().size() == 3);
  CHECK(diag->basis_label({1, 1}) == "t1*t2");
}

TEST_CASE("power oracle agrees") {
  auto r = xy();
  std::vector<std::unique_ptr<ReesContext>> cases;
  cases.push_back(context(r, 1, {{"x"}, {"y"}}));
  cases.push_back(context(r, 2, {{"x", "0"}, {"0", "y"}}));
  cases.push_back(context(r, 2, {{"x", "0"}, {"y", "x"}, {"0", "y"}}));
  cases.push_back(context(r, 2, {{"x", "0"}, {"y", "0"}, {"0", "x"}}));
  cases.push_back(context(r, 1, {{"x^2"}, {"x*y"}}));
  for (const auto& c : cases) {
    for (int n = 1; n <= 4; ++n) CHECK(c->power(n).equals(c->power_oracle(n)));
  }
}

TEST_CASE("ideal powers match repeated multiplication") {
  Gen g(51);
  for (int trial = 0; trial < 10; ++trial) {
    auto r = Ring::make(Field(), {"x", "y", "z"});
    std::vector<Polynomial> gens;
    int deg = g.uniform(1, 2);
    int m = g.uniform(1, 3);
    for (int i = 0; i < m; ++i) gens.push_back(g.homogeneous(*r, deg, 2));
    std::vector<Vector> vs;
    for (const auto& p : gens) vs.push_back(Vector(*r, {p}));
    std::unique_ptr<ReesContext> c;
    try {
      c = std::make_unique<ReesContext>(r, 1, vs);
    } catch (const ValidationError&) {
      continue;
    }
    std::vector<Polynomial> power = gens;
    for (int n = 2; n <= 3; ++n) {
      std::vector<Polynomial> next;
      for (const auto& a : power) {
        for (const auto& b : gens) next.push_back(a * b);
      }
      power = next;
      CHECK(c->power(n).equals(Submodule::ideal(r, power)));
    }
  }
}

TEST_CASE("subalgebra law and fiber cone hilbert function") {
  auto r = xy();
  std::vector<std::unique_ptr<ReesContext>> cases;
  cases.push_back(context(r, 2, {{"x", "0"}, {"y", "x"}, {"0", "y"}}));
  cases.push_back(context(r, 2, {{"x", "0"}, {"y", "0"}, {"0", "x"}}));
  cases.push_back(context(r, 1, {{"x^2"}, {"x*y"}}));
  for (const auto& c : cases) {
    const int nmax = 4;
    for (int a = 1; a <= nmax; ++a) {
      for (int b = 1; a + b <= nmax; ++b) {
        auto pa = c->power(a), pb = c->power(b), pab = c->power(a + b);
        auto ba = ReesContext::power_basis(c->e(), a), bb = ReesContext::power_basis(c->e(), b);
        auto bab = ReesContext::power_basis(c->e(), a + b);
        for (const auto& u : pa.gens()) {
          for (const auto& v : pb.gens()) {
            Vector w(c->ring(), static_cast<int>(bab.size()));
            for (std::size_t i = 0; i < ba.size(); ++i) {
              for (std::size_t j = 0; j < bb.size(); ++j) {
                std::vector<int> s(ba[i]);
                for (std::size_t k = 0; k < s.size(); ++k) s[k] += bb[j][k];
                auto idx = std::find(bab.begin(), bab.end(), s) - bab.begin();
                w[static_cast<int>(idx)] = w[static_cast<int>(idx)] + u[static_cast<int>(i)] * v[static_cast<int>(j)];
              }
            }
            CHECK(pab.contains(w));
          }
        }
      }
    }
    HilbertSeries fiber = hilbert_series(Quotient{c->presentation().fiber_ideal});
    for (int n = 1; n <= nmax; ++n) {
      CHECK(fiber.value(n) == static_cast<long long>(c->power(n).gens().size()));
    }
  }
}

TEST_CASE("presentation examples") {
  auto r = xy();
  auto m = context(r, 1, {{"x"}, {"y"}});
  const auto& p = m->presentation();
  REQUIRE(p.ideal.gens().size() == 1);
  auto rel = p.ideal.gens()[0][0];
  auto expected = p.ring->parse("x*y2 - y*y1");
  CHECK((rel == expected || rel == -expected));

  auto single = context(r, 1, {{"x"}});
  CHECK(single->presentation().ideal.is_zero());
  auto diag = context(r, 2, {{"x", "0"}, {"0", "y"}});
  CHECK(diag->presentation().ideal.is_zero());
}

TEST_CASE("dimension and spread examples") {
  auto r = xy();
  auto m = context(r, 1, {{"x"}, {"y"}});
  CHECK(m->dim_rees() == 3);
  CHECK(m->analytic_spread() == 2);
  auto diag = context(r, 2, {{"x", "0"}, {"0", "y"}});
  CHECK(diag->dim_rees() == 4);
  CHECK(diag->analytic_spread() == 2);
  auto single = context(r, 1, {{"x"}});
  CHECK(single->dim_rees() == 3);
  CHECK(single->analytic_spread() == 1);
}

TEST_CASE("deviation and predicates") {
  auto r = xy();
  auto m = context(r, 1, {{"x"}, {"y"}});
  CHECK(m->is_ideal_module());
  CHECK(m->fitting_height() == ExtendedInt(2));
  CHECK(m->deviation() == 0);
  CHECK(m->analytic_deviation() == 0);
  auto pm = m->predicates();
  CHECK(pm.complete_intersection);
  CHECK(pm.equimultiple);
  REQUIRE(pm.generically_ci.has_value());
  CHECK(*pm.generically_ci);

  auto xx = context(r, 1, {{"x^2"}, {"x*y"}});
  CHECK(xx->fitting_height() == ExtendedInt(1));
  CHECK(xx->deviation() == 1);
  auto px = xx->predicates();
  CHECK_FALSE(px.complete_intersection);
  REQUIRE(px.generically_ci.has_value());
  CHECK(*px.generically_ci);
  CHECK(xx->local_generators(ideal(r, {"x"})) == 1);

  auto mixed = context(r, 2, {{"x^2", "0"}, {"x*y", "0"}, {"0", "y"}});
  // Maximal minors by hand: x^2*y and x*y^2.
  CHECK(mixed->fitting_invariant().equals(ideal(r, {"x^2*y", "x*y^2"})));
  CHECK(mixed->deviation() == 3 - 2 + 1 - 1);
  CHECK_FALSE(mixed->predicates().complete_intersection);

  auto param = context(r, 2, {{"x", "0"}, {"y", "x"}, {"0", "y"}});
  CHECK(param->fitting_invariant().equals(ideal(r, {"x^2", "x*y", "y^2"})));
  CHECK(param->deviation() == 0);

  auto deficient = context(r, 2, {{"x", "0"}, {"y", "0"}});
  CHECK_FALSE(deficient->is_ideal_module());
  CHECK_THROWS_AS(deficient->deviation(), DomainError);
}

TEST_CASE("deviation identity on ideal modules") {
  auto r = xy();
  std::vector<std::unique_ptr<ReesContext>> cases;
  cases.push_back(context(r, 1, {{"x"}, {"y"}}));
  cases.push_back(context(r, 1, {{"x^2"}, {"x*y"}, {"y^2"}}));
  cases.push_back(context(r, 2, {{"x", "0"}, {"y", "x"}, {"0", "y"}}));
  cases.push_back(context(r, 2, {{"x^2", "0"}, {"x*y", "0"}, {"0", "y"}}));
  for (const auto& c : cases) {
    REQUIRE(c->is_ideal_module());
    CHECK(c->deviation() - c->analytic_deviation() == c->mu() - c->analytic_spread());
    CHECK(c->analytic_deviation() >= 0);
    auto p = c->predicates();
    if (p.complete_intersection) CHECK(p.equimultiple);
  }
}

TEST_CASE("generically complete intersection needs primes") {
  auto r = xy();
  auto c = context(r, 1, {{"x^2 + y^2"}, {"x*y"}});
  CHECK_THROWS_AS(c->generically_complete_intersection(), UnsupportedInstance);
  CHECK_FALSE(c->predicates().generically_ci.has_value());
  std::vector<Submodule> primes{ideal(r, {"x", "y"})};
  CHECK(c->generically_complete_intersection(primes));
}

TEST_CASE("input validation") {
  auto r = xy();
  CHECK_THROWS_AS(context(r, 2, {{"x", "1"}}), ValidationError);
  CHECK_THROWS_AS(context(r, 1, {{"x"}, {"1"}}), ValidationError);
  CHECK_THROWS_AS(context(r, 2, {{"1", "0"}, {"0", "1"}}), ValidationError);
  CHECK_THROWS_AS(context(r, 1, {{"0"}}), ValidationError);
  CHECK_THROWS_AS(context(r, 1, {{"x + y^2"}}), ValidationError);
  auto bad = Ring::make(Field(), {"t1", "x"});
  CHECK_THROWS_AS(context(bad, 1, {{"x"}}), ValidationError);
}

TEST_CASE("power resource guard") {
  auto r = xy();
  ReesLimits lim;
  lim.max_power_rank = 3;
  std::vector<Vector> gens{vec(*r, {"x", "0"}), vec(*r, {"0", "y"})};
  ReesContext c(r, 2, gens, lim);
  CHECK_NOTHROW(c.power(2));
  CHECK_THROWS_AS(c.power(3), ResourceError);
}

TEST_CASE("generator matrix csv") {
  auto r = xy();
  auto diag = context(r, 2, {{"x", "0"}, {"0", "y"}});
  CHECK(diag->power_csv(2) == "basis,g1,g2,g3\nt1^2,x^2,0,0\nt1*t2,0,x*y,0\nt2^2,0,0,y^2\n");
}
