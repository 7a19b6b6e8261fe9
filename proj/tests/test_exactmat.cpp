#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace k3lat;

namespace {

bool unimodular(const IntMatrix& m) { return m.is_square() && abs(det_exact(m)) == 1; }

IntMatrix random_symmetric(std::mt19937& rng, std::size_t n, int lo, int hi) {
  IntMatrix a = oracle::random_matrix(rng, n, n, lo, hi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) a(i, j) = a(j, i);
  return a;
}

}  // namespace

TEST_SUITE("exactmat") {
  TEST_CASE("determinant against rational elimination") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
      std::size_t n = 1 + t % 6;
      IntMatrix a = oracle::random_matrix(rng, n, n, -9, 9);
      CHECK(Rat(det_exact(a)) == oracle::det(a));
      CHECK(det_rational(to_rational(a)) == oracle::det(a));
    }
  }

  TEST_CASE("determinant with large entries") {
    IntMatrix a(2, 2);
    a(0, 0) = Int("123456789012345678901234567890");
    a(0, 1) = Int("987654321098765432109876543210");
    a(1, 0) = Int("-3");
    a(1, 1) = Int("7");
    CHECK(det_exact(a) == Int("3827160486382716048638271604860"));
  }

  TEST_CASE("smith normal form identities and invariant factors") {
    std::mt19937 rng(12);
    for (int t = 0; t < 150; ++t) {
      std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
      IntMatrix a = oracle::random_matrix(rng, r, c, -6, 6);
      auto s = snf(a);
      REQUIRE(unimodular(s.left));
      REQUIRE(unimodular(s.right));
      IntMatrix d = s.left * a * s.right;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) CHECK(d(i, j) == (i == j ? s.diag[i] : Int(0)));
      for (std::size_t i = 0; i + 1 < s.diag.size(); ++i)
        if (s.diag[i + 1] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
      CHECK(s.diag == oracle::invariant_factors(a));
      CHECK(s.rank() == rank_of(a));
    }
  }

  TEST_CASE("hermite normal form identities") {
    std::mt19937 rng(13);
    for (int t = 0; t < 150; ++t) {
      std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 4;
      IntMatrix a = oracle::random_matrix(rng, r, c, -7, 7);
      auto h = hnf(a);
      REQUIRE(unimodular(h.transform));
      CHECK(h.transform * a == h.hermite);
      CHECK(h.rank == rank_of(a));
      std::size_t lead = 0;
      for (std::size_t i = 0; i < h.rank; ++i) {
        while (lead < c && h.hermite(i, lead) == 0) {
          for (std::size_t k = i; k < r; ++k) CHECK(h.hermite(k, lead) == 0);
          ++lead;
        }
        REQUIRE(lead < c);
        CHECK(h.hermite(i, lead) > 0);
        for (std::size_t k = 0; k < i; ++k) {
          CHECK(h.hermite(k, lead) >= 0);
          CHECK(h.hermite(k, lead) < h.hermite(i, lead));
        }
        for (std::size_t k = i + 1; k < r; ++k) CHECK(h.hermite(k, lead) == 0);
        ++lead;
      }
      for (std::size_t i = h.rank; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) CHECK(h.hermite(i, j) == 0);
    }
  }

  TEST_CASE("saturated kernel") {
    std::mt19937 rng(14);
    for (int t = 0; t < 100; ++t) {
      IntMatrix a = oracle::random_matrix(rng, 1 + t % 3, 3 + t % 3, -5, 5);
      IntMatrix k = kernel_saturated(a);
      CHECK(k.cols() == a.cols() - rank_of(a));
      if (k.cols() == 0) continue;
      IntMatrix z = a * k;
      for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j) CHECK(z(i, j) == 0);
      auto s = snf(k);
      for (std::size_t i = 0; i < k.cols(); ++i) CHECK(s.diag[i] == 1);
    }
  }

  TEST_CASE("signature against characteristic polynomial") {
    std::mt19937 rng(15);
    for (int t = 0; t < 200; ++t) {
      IntMatrix a = random_symmetric(rng, 1 + t % 6, -4, 4);
      CHECK(signature_symmetric(a) == oracle::signature(a));
    }
    CHECK(signature_symmetric(IntMatrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
    CHECK(signature_symmetric(IntMatrix{{0, 0}, {0, 0}}) == Signature{0, 0, 2});
  }

  TEST_CASE("rational solve and inverse") {
    std::mt19937 rng(16);
    for (int t = 0; t < 60; ++t) {
      IntMatrix a = oracle::random_matrix(rng, 4, 4, -5, 5);
      if (det_exact(a) == 0) continue;
      RatMatrix inv = inverse(to_rational(a));
      CHECK(to_rational(a) * inv == RatMatrix::identity(4));
    }
    CHECK_THROWS_AS(inverse(to_rational(IntMatrix{{1, 2}, {2, 4}})), MathError);
  }
}
