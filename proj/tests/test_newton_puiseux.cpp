#include "doctest.h"

#include "discknot/branches.hpp"
#include "discknot/parse.hpp"

using namespace discknot;
using namespace discknot::puiseux;

namespace {

// 3 Q'^2 - P P'^2 for P = s x^m + t x, Q = x^(nu+1) + t q.
BiPoly curve(int nu, int m, const Rat& s, const UniPoly& q = UniPoly()) {
  BiPoly P = s * BiPoly::monomial(1, m, 0) + BiPoly::monomial(1, 1, 1);
  BiPoly Q = BiPoly::monomial(1, nu + 1, 0) + BiPoly::t() * BiPoly(q);
  BiPoly dP = P.derivative(Var::x), dQ = Q.derivative(Var::x);
  return Rat(3) * dQ * dQ - P * dP * dP;
}

ModulusPtr trivial_ring() { return make_modulus(UniPoly::variable(Var::c) - UniPoly::constant(1, Var::c)); }

PuiseuxSeries series(const ModulusPtr& r, std::initializer_list<std::pair<Rat, Rat>> terms, Order prec = std::nullopt) {
  PuiseuxSeries::Terms t;
  for (const auto& [e, c] : terms) t.emplace(e, QuotientElem(r, c));
  return PuiseuxSeries(r, t, prec);
}

}  // namespace

TEST_CASE("quotient ring arithmetic") {
  ModulusPtr r = make_modulus(parse_unipoly("x^2 + 1").with_var(Var::c));
  QuotientElem c = QuotientElem::generator(r);
  CHECK(c * c == QuotientElem(r, Rat(-1)));
  CHECK((c.inverse() * c) == QuotientElem(r, Rat(1)));
  CHECK_THROWS_AS(make_modulus(parse_unipoly("(x - 1)^2").with_var(Var::c)), std::invalid_argument);

  ModulusPtr split = make_modulus(parse_unipoly("x^2 - 1").with_var(Var::c));
  QuotientElem z(split, parse_unipoly("x - 1").with_var(Var::c));
  CHECK_THROWS_AS(z.inverse(), ZeroDivisorSplit);
  try {
    z.inverse();
  } catch (const ZeroDivisorSplit& e) {
    CHECK(e.factor() * e.cofactor() == split->phi());
  }
}

TEST_CASE("generated subalgebra dimension") {
  // c^5 = 1/48: c^4 generates everything, c^0 nothing.
  ModulusPtr r = make_modulus(parse_unipoly("48*x^5 - 1").with_var(Var::c));
  QuotientElem c = QuotientElem::generator(r);
  std::vector<QuotientElem> g{c.pow(4)};
  CHECK(generated_subalgebra_dim(r, g) == 5);
  std::vector<QuotientElem> none;
  CHECK(generated_subalgebra_dim(r, none) == 1);
  // c^9 = a: c^3 takes 3 values on the 9 roots, c^6 likewise, c^4 separates.
  ModulusPtr r9 = make_modulus(parse_unipoly("108*x^9 - 1").with_var(Var::c));
  QuotientElem c9 = QuotientElem::generator(r9);
  std::vector<QuotientElem> g3{c9.pow(3), c9.pow(6)};
  CHECK(generated_subalgebra_dim(r9, g3) == 3);
  std::vector<QuotientElem> g4{c9.pow(6), c9.pow(4)};
  CHECK(generated_subalgebra_dim(r9, g4) == 9);
}

TEST_CASE("newton polygon examples") {
  NewtonPolygon xt = newton_polygon(parse_bipoly("x*t"));
  CHECK(xt.x_pow == 1);
  CHECK(xt.support == std::set<SupportPoint>{{0, 1}});
  CHECK(faces(xt, parse_bipoly("x*t")).empty());

  BiPoly F = parse_bipoly("t^3 + x^2");
  auto fs = faces(newton_polygon(F), F);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].lambda == make_rat(3, 2));
  CHECK(fs[0].face_poly == parse_unipoly("x^2 + 1").with_var(Var::c));

  CHECK_THROWS_AS(newton_polygon(BiPoly()), std::invalid_argument);

  // interior point above the edge is ignored; one below creates two faces
  BiPoly G = parse_bipoly("x^2 + x*t^2 + t^3");
  CHECK(faces(newton_polygon(G), G).size() == 1);
  BiPoly H = parse_bipoly("x^2 + x*t + t^3");
  auto hf = faces(newton_polygon(H), H);
  REQUIRE(hf.size() == 2);
  CHECK(hf[0].lambda == 1);
  CHECK(hf[1].lambda == 2);
}

TEST_CASE("pipeline curve polygons") {
  // nu = 3, s = 1/2, m = 3: 3m - 2 = 7 > 2nu, single edge (5,0) -> (0,3).
  BiPoly F = curve(3, 3, make_rat(1, 2));
  NewtonPolygon np = newton_polygon(F);
  CHECK(np.x_pow == 1);
  REQUIRE(np.hull_vertices.size() == 2);
  CHECK(np.hull_vertices[0] == SupportPoint{5, 0});
  CHECK(np.hull_vertices[1] == SupportPoint{0, 3});

  auto f3 = faces(newton_polygon(curve(3, 3, 0)), curve(3, 3, 0));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].lambda == make_rat(3, 5));
  CHECK(f3[0].face_poly.degree() == 5);
  auto f5 = faces(newton_polygon(curve(5, 4, 0)), curve(5, 4, 0));
  REQUIRE(f5.size() == 1);
  CHECK(f5[0].lambda == make_rat(1, 3));
  CHECK(f5[0].face_poly.degree() == 9);

  // Hull correctness: every support point on or above every edge line.
  for (int nu = 2; nu <= 12; ++nu) {
    for (Rat s : {Rat(0), make_rat(1, 10)}) {
      BiPoly C = curve(nu, nu, s);
      NewtonPolygon p = newton_polygon(C);
      for (const FaceData& f : faces(p, C)) {
        for (const auto& [j, i] : p.support) CHECK(Rat(i) + f.lambda * Rat(j) >= f.weight);
        CHECK(f.face_poly.coeff(0) != 0);
        CHECK(f.face_poly.degree() == f.degree());
      }
      // x-width accounting
      int width = 0;
      for (const FaceData& f : faces(p, C)) width += f.degree();
      CHECK(width + p.x_pow == ord(C, Var::x).value() + p.hull_vertices.front().first);
    }
  }
}

TEST_CASE("branch enumeration") {
  auto b3 = branches(curve(3, 3, 0));
  REQUIRE(b3.size() == 2);
  CHECK(b3[0].is_zero_branch);
  CHECK(b3[0].multiplicity == 1);
  CHECK(b3[1].lambda() == make_rat(3, 5));
  CHECK(b3[1].ramification == 5);
  CHECK(b3[1].conjugacy_size == 1);

  auto b5 = branches(curve(5, 4, 0));
  REQUIRE(b5.size() == 2);
  CHECK(b5[1].lambda() == make_rat(1, 3));
  CHECK(b5[1].conjugacy_size == 3);

  auto lin = branches(parse_bipoly("t^2 - 3*x*t + 2*x^2"));
  REQUIRE(lin.size() == 1);
  CHECK(lin[0].lambda() == 1);
  CHECK(lin[0].face.face_poly == parse_unipoly("2*x^2 - 3*x + 1").with_var(Var::c));
  CHECK(lin[0].conjugacy_size == 2);

  CHECK_THROWS_AS(branches(parse_bipoly("(x - t)^2")), NonSquarefreeFace);
}

TEST_CASE("series arithmetic") {
  ModulusPtr r = trivial_ring();
  PuiseuxSeries a = series(r, {{0, 1}, {make_rat(1, 2), 1}});
  PuiseuxSeries inv = invert(a, make_rat(3, 2));
  CHECK(inv.terms().size() == 3);
  CHECK(inv.coeff(0) == QuotientElem(r, Rat(1)));
  CHECK(inv.coeff(make_rat(1, 2)) == QuotientElem(r, Rat(-1)));
  CHECK(inv.coeff(1) == QuotientElem(r, Rat(1)));
  CHECK(*inv.precision() == make_rat(3, 2));

  PuiseuxSeries p = mul(PuiseuxSeries::t_power(r, make_rat(1, 3)), PuiseuxSeries::t_power(r, make_rat(1, 2)));
  CHECK(p.leading_exponent() == make_rat(5, 6));
  CHECK(p.exponent_denominator() == 6);
  CHECK(p.is_exact());

  PuiseuxSeries lossy = mul(a, a, Rat(1));
  CHECK(*lossy.precision() == 1);
  CHECK(lossy.terms().size() == 2);
  CHECK(mul(a, a, Rat(2)).is_exact());

  // (1 + t) (1 + t)^-1 = 1 + O(t^4)
  PuiseuxSeries b = series(r, {{0, 1}, {1, 1}});
  PuiseuxSeries one = mul(b, invert(b, 4), 4);
  CHECK(one.terms().size() == 1);
  CHECK(*one.precision() == 4);

  // inexact input: precision tracks through
  PuiseuxSeries c = series(r, {{1, 2}}, Rat(3));
  PuiseuxSeries c2 = mul(c, c);
  CHECK(*c2.precision() == 4);
  CHECK(*invert(c, 10).precision() == 1);
  CHECK_THROWS_AS(PuiseuxSeries::zero(r, Rat(2)).leading_coeff(), NotEnoughPrecision);
}

TEST_CASE("substitution into the curve") {
  BiPoly F = curve(3, 3, 0);
  auto bs = branches(F);
  const PuiseuxSeries& x = bs[1].x;
  PuiseuxSeries x4 = substitute(BiPoly::monomial(1, 4, 0), x.exact_part());
  CHECK(x4.leading_exponent() == make_rat(12, 5));
  // at s = 0, q = 0 the face is binomial and the leading term is a root
  CHECK(substitute(F.divide_x_power(1), x.exact_part(), Rat(10)).is_exact_zero());
  BiPoly G = curve(3, 3, make_rat(1, 10));
  PuiseuxSeries v = substitute(G.divide_x_power(1), branches(G)[1].x.exact_part(), Rat(10));
  CHECK(v.leading_exponent() > branches(G)[1].face.weight);
}

TEST_CASE("Newton lifting") {
  // x = t/(1 - t) is a root of x - t - t x; check against the geometric series.
  BiPoly F = parse_bipoly("x - t - t*x");
  auto bs = branches(F);
  REQUIRE(bs.size() == 1);
  PuiseuxBranch b = refine(F, bs[0], Rat(9));
  CHECK(*b.x.precision() >= 9);
  for (int k = 1; k < 9; ++k) CHECK(b.x.coeff(k) == QuotientElem(b.ring(), Rat(1)));

  // binomial face with no other terms: the leading term is an exact root
  auto nr = branches(curve(5, 4, 0));
  PuiseuxBranch exact = refine(curve(5, 4, 0), nr[1], Rat(5));
  CHECK(exact.x.is_exact());
  CHECK(exact.x.terms().size() == 1);

  for (int nu = 2; nu <= 8; ++nu) {
    BiPoly C = curve(nu, nu, make_rat(1, 10), UniPoly::monomial(1, nu + 2));
    for (const PuiseuxBranch& br : branches(C)) {
      if (br.is_zero_branch) continue;
      PuiseuxBranch lifted = refine(C, br, Rat(3));
      PuiseuxSeries residual = substitute(C.divide_x_power(1), lifted.x.exact_part(), Rat(3) + br.face.weight);
      // residual is O(t^(precision + weight - lambda))
      const Rat bound = (lifted.x.is_exact() ? Rat(3) : *lifted.x.precision()) + br.face.weight - br.lambda();
      if (!residual.terms().empty()) CHECK(residual.leading_exponent() >= bound);
    }
  }
}
