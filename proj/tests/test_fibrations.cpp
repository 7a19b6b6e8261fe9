#include <doctest.h>

#include "k3lat/discform.hpp"
#include "k3lat/fibrations.hpp"

using namespace k3lat;

TEST_SUITE("fibrations") {
  TEST_CASE("Kodaira dictionary") {
    struct Row {
      std::string tag, root;
      int m, m1;
    };
    std::vector<Row> rows{{"I1", "", 1, 1},      {"I2", "A1", 2, 2},    {"I7", "A6", 7, 7},   {"II", "", 1, 1},
                          {"III", "A1", 2, 2},   {"IV", "A2", 3, 3},    {"I*0", "D4", 5, 4},  {"I*2", "D6", 7, 4},
                          {"IV*", "E6", 7, 3},   {"III*", "E7", 8, 2},  {"II*", "E8", 9, 1}};
    for (const auto& r : rows) {
      auto f = KodairaFiber::parse(r.tag);
      CHECK(f.tag() == r.tag);
      CHECK(f.components() == r.m);
      CHECK(f.mult_one_components() == r.m1);
      auto rt = f.root_type();
      CHECK((rt ? rt->name() : std::string()) == r.root);
      CHECK(f.root_rank() == f.components() - 1);
    }
    CHECK_THROWS_AS(KodairaFiber::parse("V"), MathError);
    CHECK_THROWS_AS(KodairaFiber::parse("I0"), MathError);
    CHECK_THROWS_AS(KodairaFiber::parse("I*-1"), MathError);
  }

  TEST_CASE("configurations") {
    auto cfg = FiberConfiguration::parse("IV*,IV*,IV*");
    CHECK(cfg.root_rank_sum() == 18);
    CHECK(cfg.to_string() == "IV*,IV*,IV*");
    CHECK_THROWS_AS(FiberConfiguration::parse("II*,II*,I4"), MathError);
    Lattice t = trivial_lattice(cfg);
    CHECK(t.rank() == 20);
    CHECK(t.abs_det() == 27);
    CHECK(t.signature() == Signature{1, 19, 0});
  }

  TEST_CASE("picard and determinant formulas") {
    auto c3 = FiberConfiguration::parse("IV*,IV*,IV*");
    CHECK(picard_from_config(c3, 0) == 20);
    auto d3 = det_from_config(c3, Int(3));
    CHECK(d3.product == 27);
    CHECK(d3.value == 3);
    CHECK(d3.integral);
    auto d4 = det_from_config(FiberConfiguration::parse("I*2,I*2,I*2"), Int(4));
    CHECK(d4.value == 4);
    auto d7 = det_from_config(FiberConfiguration::parse("I7,I7,I7,I1,I1,I1"), Int(7));
    CHECK(d7.product == 343);
    CHECK(d7.value == 7);
    auto frac = det_from_config(c3, Int(2));
    CHECK_FALSE(frac.integral);
    CHECK(frac.value == Rat(27, 4));
    for (const char* s : {"I6,I6,I6", "IV*,IV,I4,I*0", "I*2,I*2,I*2", "II*,I2"}) {
      auto cfg = FiberConfiguration::parse(s);
      CHECK(det_from_config(cfg, Int(1)).product == trivial_lattice(cfg).abs_det());
    }
  }

  TEST_CASE("Mordell-Weil invariants") {
    Lattice ns = catalog("U+A5^3");
    CHECK(mw_invariants(Embedding(ns, IntMatrix::identity(17))).torsion == 1);
    std::vector<Lattice> parts{catalog_U(), catalog_A(6), catalog_A(6), catalog_A(6)};
    Lattice l = direct_sum(parts);
    auto q = direct_sum({disc_form_of(parts[0]), disc_form_of(parts[1]), disc_form_of(parts[2]), disc_form_of(parts[3])});
    auto over = overlattice_from_isotropic(l, q, {isotropic_elements(q, Int(7)).front()});
    auto mw = mw_invariants(over.original);
    CHECK(mw.rank == 0);
    CHECK(mw.torsion == 7);
    IntMatrix b(17, 16);
    for (std::size_t i = 0; i < 16; ++i) b(i, i) = 1;
    CHECK(mw_invariants(Embedding(ns, b)).rank == 1);
  }

  TEST_CASE("square obstruction") {
    CHECK(square_obstruction(Int(216), Int(216)));
    CHECK(square_obstruction(Int(864), Int(216)));
    CHECK_FALSE(square_obstruction(Int(192), Int(216)));
    CHECK_FALSE(square_obstruction(Int(432), Int(216)));
    CHECK(is_rational_square(Rat(9, 4)));
    CHECK_FALSE(is_rational_square(Rat(9, 8)));
  }

  TEST_CASE("configuration search") {
    auto ivstar = FiberConfiguration::parse("IV*");
    std::vector<KodairaFiber> reduced{KodairaFiber::parse("IV"), KodairaFiber::parse("I4"), KodairaFiber::parse("I*0")};
    auto res = search_configs(ivstar, 3, reduced, 9, Int(216));
    REQUIRE(res.size() == 2);
    for (const auto& v : res) CHECK_FALSE(v.square);
    CHECK(res[0].config.root_rank_sum() == 15);
    auto i6 = search_configs(FiberConfiguration{}, 3, {KodairaFiber::parse("I6")}, 15, Int(216));
    REQUIRE(i6.size() == 1);
    CHECK(i6[0].square);
    CHECK(i6[0].d_trivial == 216);
    CHECK(search_configs(ivstar, 3, reduced, 40, Int(216)).empty());
    CHECK(search_configs(ivstar, 3, reduced, 2, Int(216)).empty());
  }
}
