#pragma once

// Reference implementations used only by the tests. They share no code with
// the library algorithms they check.

#include <cstdint>
#include <random>
#include <vector>

#include "k3lat/exactmat.hpp"
#include "k3lat/poly.hpp"

namespace oracle {

using k3lat::Int;
using k3lat::IntMatrix;
using k3lat::IntVector;
using k3lat::Rat;

/// Plain rational Gaussian elimination.
Rat det(const IntMatrix& m);
/// Characteristic polynomial by Faddeev-LeVerrier, then Descartes' rule of
/// signs (exact for a real-rooted polynomial).
k3lat::Signature signature(const IntMatrix& sym);
/// Invariant factors as quotients of determinantal divisors (gcd of k-minors).
IntVector invariant_factors(const IntMatrix& m);
/// All x with x^T G x == -2 inside the box |x_i| <= sqrt(2 (-G)^{-1}_ii).
std::vector<IntVector> roots_by_box(const IntMatrix& negdef_gram);
/// Orbit of the simple roots under the simple reflections.
std::vector<IntVector> roots_by_orbit(const IntMatrix& cartan_gram);
/// Theta coefficients r(2), r(4), ..., r(2k) of a positive definite binary form.
std::vector<long> theta(long a, long b, long c, int k);
/// Milnor-Orlik: (1/w1 - 1)(1/w2 - 1) for a quasi-homogeneous germ of degree 1.
Rat milnor_quasihomogeneous(const Rat& w1, const Rat& w2);
/// Order in x of g(x, p(x)); -1 when identically zero.
long order_along_graph(const k3lat::BiPoly& g, const k3lat::UniPoly& p);

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi);

}  // namespace oracle
