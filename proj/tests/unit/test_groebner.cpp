#include "doctest.h"

#include <sstream>

#include "reesalg/error.hpp"
#include "reesalg/groebner.hpp"
#include "support.hpp"

using namespace reesalg;
using testing_support::Gen;

namespace {

std::vector<Polynomial> polys(const Ring& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(r.parse(t));
  return out;
}

std::vector<Polynomial> basis_polys(const GroebnerBasis& gb) {
  std::vector<Polynomial> out;
  for (const auto& v : gb.generators()) out.push_back(v[0]);
  return out;
}

// Independent check: sum_j s_j * g_j == 0.
bool is_syzygy(const Vector& s, std::span<const Vector> gens) {
  Vector total(gens[0].ring(), gens[0].rank());
  for (std::size_t j = 0; j < gens.size(); ++j) total = total + s[static_cast<int>(j)] * gens[j];
  return total.is_zero();
}

}  // namespace

TEST_CASE("basis of monomial ideals") {
  auto r = Ring::make(Field(), {"x", "y"});
  auto gb = ideal_basis(r, polys(*r, {"x^2", "x*y"}));
  auto b = basis_polys(gb);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == r->parse("x^2"));
  CHECK(b[1] == r->parse("x*y"));
  CHECK(satisfies_buchberger_criterion(gb));
  CHECK(is_reduced_basis(gb));

  auto lin = basis_polys(ideal_basis(r, polys(*r, {"y", "x"})));
  REQUIRE(lin.size() == 2);
  CHECK(lin[0] == r->parse("x"));
  CHECK(lin[1] == r->parse("y"));
}

TEST_CASE("single module generator") {
  auto r = Ring::make(Field(), {"x", "y"});
  FreeModule f(r, 2);
  std::vector<Vector> gens{Vector(*r, {r->parse("y"), r->parse("-x")})};
  auto gb = buchberger(f, gens);
  REQUIRE(gb.size() == 1);
  auto g = gb.generators()[0];
  // Up to scaling.
  CHECK((g == gens[0] || g == r->constant(-1) * gens[0]));
}

TEST_CASE("normal forms") {
  auto r = Ring::make(Field(), {"x", "y"});
  auto gb = ideal_basis(r, polys(*r, {"x^2", "x*y"}));
  CHECK(gb.normal_form(Vector(*r, {r->parse("x^2 + y")}))[0] == r->parse("y"));
  CHECK(gb.contains(Vector(*r, {r->parse("x^2")})));
  CHECK(gb.contains(Vector(*r, {r->parse("x*y")})));
  CHECK_FALSE(gb.contains(Vector(*r, {r->parse("x")})));
}

TEST_CASE("syzygy examples") {
  auto r = Ring::make(Field(), {"x", "y"});
  FreeModule f(r, 1);
  std::vector<Vector> lin{Vector(*r, {r->parse("x")}), Vector(*r, {r->parse("y")})};
  auto s = syzygies(f, lin);
  REQUIRE(s.size() == 1);
  CHECK(is_syzygy(s[0], lin));
  CHECK((s[0] == Vector(*r, {r->parse("y"), r->parse("-x")}) ||
         s[0] == Vector(*r, {r->parse("-y"), r->parse("x")})));

  std::vector<Vector> mon{Vector(*r, {r->parse("x^2")}), Vector(*r, {r->parse("x*y")})};
  auto s2 = syzygies(f, mon);
  REQUIRE(s2.size() == 1);
  CHECK(is_syzygy(s2[0], mon));
  CHECK(s2[0][0].degree() == 1);

  std::vector<Vector> one{Vector(*r, {r->parse("x^2 + y^2")})};
  CHECK(syzygies(f, one).empty());
}

TEST_CASE("koszul syzygies of three variables") {
  auto r = Ring::make(Field(), {"x", "y", "z"});
  FreeModule f(r, 1);
  std::vector<Vector> gens{Vector(*r, {r->parse("x")}), Vector(*r, {r->parse("y")}),
                           Vector(*r, {r->parse("z")})};
  auto s = syzygies(f, gens);
  CHECK(s.size() == 3);
  for (const auto& v : s) {
    CHECK(is_syzygy(v, gens));
    for (int i = 0; i < 3; ++i) CHECK(v[i].degree() <= 1);
  }
}

TEST_CASE("twisted cubic elimination") {
  RingOptions o;
  o.order = MonomialOrder::BlockElimination;
  o.first_block = 1;
  auto r = Ring::make(Field(), {"t", "y1", "y2", "y3"}, {}, o);
  auto out = eliminate(r, polys(*r, {"y1 - t", "y2 - t^2", "y3 - t^3"}), 1);
  auto gb = ideal_basis(r, out);
  CHECK(gb.contains(Vector(*r, {r->parse("y1^2 - y2")})));
  CHECK(gb.contains(Vector(*r, {r->parse("y1*y2 - y3")})));
  auto target = Ring::make(Field(), {"t"});
  RingMap sub(*r, *target,
              {target->variable(0), target->parse("t"), target->parse("t^2"), target->parse("t^3")});
  for (const auto& f : out) {
    CHECK(sub(f).is_zero());
    for (const auto& t : f.terms()) CHECK(t.mono[0] == 0);
  }
}

TEST_CASE("rees relation of two monomials by elimination") {
  RingOptions o;
  o.order = MonomialOrder::BlockElimination;
  o.first_block = 1;
  auto r = Ring::make(Field(), {"t1", "x", "y", "y1", "y2"}, {}, o);
  auto out = eliminate(r, polys(*r, {"y1 - x*t1", "y2 - y*t1"}), 1);
  auto gb = ideal_basis(r, out);
  CHECK(gb.contains(Vector(*r, {r->parse("y*y1 - x*y2")})));
  auto target = Ring::make(Field(), {"t1", "x", "y"});
  RingMap sub(*r, *target,
              {target->variable(0), target->variable(1), target->variable(2),
               target->parse("x*t1"), target->parse("y*t1")});
  for (const auto& f : out) CHECK(sub(f).is_zero());
}

TEST_CASE("elimination requires a compatible order") {
  auto r = Ring::make(Field(), {"t", "y"});
  auto gens = polys(*r, {"y - t"});
  CHECK_THROWS_AS(eliminate(r, gens, 1), DomainError);
  auto all = eliminate(r, gens, 0);
  CHECK(all.size() == 1);
}

TEST_CASE("degree guard during buchberger") {
  RingOptions o;
  o.max_degree = 6;
  auto r = Ring::make(Field(), {"x", "y", "z"}, {}, o);
  CHECK_THROWS_AS(ideal_basis(r, polys(*r, {"x^3 - y^2*z", "x*y^2 - z^3", "y^3 - x^2*z"})),
                  ResourceError);
}

TEST_CASE("trace stream reports pairs") {
  auto r = Ring::make(Field(), {"x", "y"});
  std::ostringstream os;
  BuchbergerOptions opts;
  opts.trace = &os;
  FreeModule f(r, 1);
  std::vector<Vector> gens{Vector(*r, {r->parse("x^2 - y")}), Vector(*r, {r->parse("x*y - 1")})};
  buchberger(f, gens, opts);
  CHECK(os.str().find("basis") != std::string::npos);
}

TEST_CASE("deterministic output") {
  auto r = Ring::make(Field(), {"x", "y", "z"});
  auto g = polys(*r, {"x^2 - y*z", "x*y - z^2", "y^2 - x*z"});
  auto a = basis_polys(ideal_basis(r, g));
  auto b = basis_polys(ideal_basis(r, g));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].to_string() == b[i].to_string());
}

TEST_CASE("random ideals satisfy the criterion and normal forms are idempotent") {
  Gen g(21);
  for (int trial = 0; trial < 120; ++trial) {
    int n = g.uniform(1, 3);
    auto r = Ring::make(Field(), testing_support::var_names(n));
    std::vector<Polynomial> gens;
    int m = g.uniform(1, 4);
    for (int i = 0; i < m; ++i) gens.push_back(g.polynomial(*r, 3, 3));
    auto gb = ideal_basis(r, gens);
    CHECK(satisfies_buchberger_criterion(gb));
    CHECK(is_reduced_basis(gb));
    for (const auto& f : gens) CHECK(gb.contains(Vector(*r, {f})));
    // Random combinations lie in the ideal; normal forms are idempotent.
    Polynomial comb = r->zero();
    for (const auto& f : gens) comb = comb + g.polynomial(*r, 2, 2) * f;
    CHECK(gb.contains(Vector(*r, {comb})));
    Vector v(*r, {g.polynomial(*r, 4, 4)});
    auto nf = gb.normal_form(v);
    CHECK(gb.normal_form(nf) == nf);
    CHECK(gb.contains(v - nf));
  }
}

TEST_CASE("random submodules satisfy the criterion") {
  Gen g(22);
  for (int trial = 0; trial < 80; ++trial) {
    int n = g.uniform(1, 3);
    int rank = g.uniform(1, 3);
    auto r = Ring::make(Field(), testing_support::var_names(n));
    std::vector<int> shifts(static_cast<std::size_t>(rank));
    for (auto& s : shifts) s = g.uniform(0, 1);
    FreeModule f(r, rank, shifts, g.coin() ? PositionOrder::TOP : PositionOrder::POT);
    std::vector<Vector> gens;
    int m = g.uniform(1, 4);
    for (int i = 0; i < m; ++i) gens.push_back(g.homogeneous_vector(*r, shifts, g.uniform(1, 3), 2));
    BuchbergerOptions opts;
    opts.order.position = f.position;
    auto gb = buchberger(f, gens, opts);
    CHECK(satisfies_buchberger_criterion(gb));
    CHECK(is_reduced_basis(gb));
    for (const auto& v : gens) CHECK(gb.contains(v));
    auto syz = syzygies(f, gens);
    for (const auto& s : syz) CHECK(is_syzygy(s, gens));
  }
}
