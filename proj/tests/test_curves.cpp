#include <doctest.h>

#include <random>

#include "k3lat/curvesing.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace k3lat;

namespace {

ProjPoint pt(long a, long b, long c) { return {Rat(a), Rat(b), Rat(c)}; }
BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }
TriPoly V(int i) { return TriPoly::var(i); }

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("univariate gcd and squarefree parts") {
    UniPoly x = UniPoly::x();
    UniPoly one = UniPoly::constant(1);
    UniPoly a = (x - one) * (x - one) * (x + one);
    UniPoly b = (x - one) * (x + UniPoly::constant(2));
    CHECK(gcd(a, b) == x - one);
    auto parts = squarefree_decomposition(a);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == x + one);
    CHECK(parts[1] == x - one);
    auto [quo, rem] = a.divmod(b);
    CHECK(quo * b + rem == a);
    CHECK(rem.degree() < b.degree());
  }

  TEST_CASE("interpolation") {
    std::vector<Rat> xs{Rat(0), Rat(1), Rat(2), Rat(3)}, ys;
    UniPoly p(std::vector<Rat>{Rat(1), Rat(-2), Rat(0), Rat(5, 3)});
    for (const auto& x : xs) ys.push_back(p.eval(x));
    CHECK(interpolate(xs, ys) == p);
  }

  TEST_CASE("resultants") {
    // Res_y(y^2 - x, y - x) = x^2 - x
    UniPoly r = resultant_y(Y().pow(2) - X(), Y() - X());
    CHECK(r == UniPoly(std::vector<Rat>{Rat(0), Rat(-1), Rat(1)}));
    CHECK(resultant_y((Y() - X()) * Y(), (Y() - X()) * (Y() + BiPoly::constant(1))).is_zero());
    CHECK(resultant_y(X() * Y(), X() * (Y() + BiPoly::constant(1))) == UniPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(1)}));
    UniPoly rx = resultant_x(X().pow(2) - Y(), X() - Y());
    CHECK(rx == UniPoly(std::vector<Rat>{Rat(0), Rat(-1), Rat(1)}));
  }

  TEST_CASE("trivariate substitution and charts") {
    TriPoly f = V(0) * V(0) * V(1) - V(2).pow(3);
    CHECK(f.is_homogeneous());
    RatMatrix swap(3, 3);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    swap(2, 2) = 1;
    CHECK(f.substitute_linear(swap) == V(1) * V(1) * V(0) - V(2).pow(3));
    CHECK(f.dehomogenize(2) == X().pow(2) * Y() - BiPoly::constant(1));
    CHECK(f.partial(0) == V(0) * V(1) * Rat(2));
  }
}

TEST_SUITE("curvesing") {
  TEST_CASE("Fulton axioms corpus") {
    auto o = props::fulton(150, 41);
    for (const auto& f : o.failures) FAIL_CHECK(f);
    CHECK(o.ok());
  }

  TEST_CASE("tangent cones") {
    auto c = multiplicity_and_cone(X().pow(2) * Y() - Y().pow(3) + X().pow(5));
    CHECK(c.multiplicity == 3);
    CHECK(c.pattern == std::vector<int>{1, 1, 1});
    auto cusp = multiplicity_and_cone(Y().pow(2) - X().pow(3));
    CHECK(cusp.pattern == std::vector<int>{2});
    auto e6 = multiplicity_and_cone(X().pow(3) + Y().pow(4));
    CHECK(e6.pattern == std::vector<int>{3});
    auto irr = multiplicity_and_cone(X().pow(2) + Y().pow(2));
    CHECK(irr.pattern == std::vector<int>{1, 1});
  }

  TEST_CASE("ADE labels are invariant under coordinate changes") {
    std::mt19937 rng(42);
    std::vector<std::pair<TriPoly, std::string>> germs{
        {V(1) * V(1) * V(2) - V(0).pow(3), "A2"},
        {V(1) * V(1) * V(2).pow(2) - V(0).pow(4), "A3"},
        {V(0) * V(0) * V(1) * V(2) - V(1).pow(3) * V(2) + V(0).pow(4), "D4"},
        {V(0).pow(3) * V(2) + V(1).pow(4), "E6"},
        {V(0).pow(3) * V(2) + V(0) * V(1).pow(3), "E7"},
        {V(0).pow(3) * V(2).pow(2) + V(1).pow(5), "E8"},
    };
    for (const auto& [f, label] : germs) {
      HomogeneousCurve c(f.total_degree(), f);
      CHECK(classify_point(c, pt(0, 0, 1)).label == label);
      for (int t = 0; t < 3; ++t) {
        IntMatrix m = oracle::random_matrix(rng, 3, 3, -2, 2);
        if (oracle::det(m) == 0) continue;
        TriPoly g = f.substitute_linear(to_rational(m));
        // the origin of the old chart is m^{-1} (0,0,1)
        RatMatrix inv = inverse(to_rational(m));
        ProjPoint p{inv(0, 2), inv(1, 2), inv(2, 2)};
        CHECK(classify_point(HomogeneousCurve(g.total_degree(), g), p).label == label);
      }
    }
  }

  TEST_CASE("catalog curves") {
    auto c7 = curve_catalog("C7");
    CHECK(c7.degree() == 6);
    CHECK(c7 == curve_dmu(Rat(-4)));
    CHECK(classify_point(c7, pt(1, 1, 1)).label == "D4");
    for (auto p : {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}) CHECK(classify_point(c7, p).label == "A4");
    CHECK(classify_point(c7, pt(1, 2, 3)).label == "not on curve");
    auto c3 = curve_catalog("C3");
    for (auto p : {pt(1, 1, -2), pt(1, -2, 1), pt(-2, 1, 1)}) CHECK(classify_point(c3, p).label == "A5");
    auto c4 = curve_catalog("C4");
    CHECK(classify_point(c4, pt(0, 1, 1)).label == "A1");
    CHECK(line_intersection_multiplicity(c4, pt(1, 0, 0), pt(0, 1, 0)) == std::nullopt);
    CHECK_THROWS_AS(curve_catalog("C9"), MathError);
    CHECK_THROWS_AS(curve_dmu(Rat(0)), MathError);
  }

  TEST_CASE("curve construction rejects wrong degrees") {
    CHECK_THROWS_AS(HomogeneousCurve(3, V(0).pow(3) + V(1)), MathError);
    CHECK_THROWS_AS(HomogeneousCurve(2, TriPoly()), MathError);
  }

  TEST_CASE("support check verdicts") {
    TriPoly fermat = V(0).pow(6) + V(1).pow(6) + V(2).pow(6);
    CHECK(singular_support_check(HomogeneousCurve(6, fermat), {}).verified());
    auto c7 = curve_catalog("C7");
    auto full = singular_support_check(c7, {pt(1, 1, 1), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
    CHECK(full.verified());
    auto missing = singular_support_check(c7, {pt(1, 1, 1), pt(1, 0, 0), pt(0, 1, 0)});
    CHECK_FALSE(missing.verified());
    auto smooth = singular_support_check(HomogeneousCurve(6, fermat), {pt(1, 0, 0)});
    CHECK(smooth.status != SupportStatus::Verified);
    TriPoly double_line = V(0) * V(0) * V(1);
    CHECK(singular_support_check(HomogeneousCurve(3, double_line), {}).status == SupportStatus::NonReduced);
  }

  TEST_CASE("conditions for the D_mu family") {
    const std::array<ProjPoint, 3> p{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)};
    auto good = check_conditions(curve_dmu(Rat(1)), p, pt(1, 1, 1));
    CHECK(good.ok());
    CHECK(good.at_q.label == "D4");
    for (const auto& s : good.at_p) CHECK(s.label == "A3");
    auto bad = check_conditions(curve_dmu(Rat(-4)), p, pt(1, 1, 1));
    CHECK_FALSE(bad.ok());
    CHECK(bad.general_position);
    CHECK(bad.line_multiplicities);
    CHECK_FALSE(bad.singularities);
    auto collinear = check_conditions(curve_dmu(Rat(1)), {pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)}, pt(1, 1, 1));
    CHECK_FALSE(collinear.general_position);
  }
}
