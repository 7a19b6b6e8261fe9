#pragma once

// Seeded randomized property suites. Each returns the number of cases checked
// and the descriptions of the cases that failed.

#include <string>
#include <vector>

namespace props {

struct Outcome {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && cases > 0; }
};

/// d(M) = d(L) [L:M]^2 on random finite-index sublattices.
Outcome index_law(std::size_t trials, unsigned seed);
/// q_S = -q_T composed with the gluing map, for every connected or
/// disconnected sub-diagram of E8.
Outcome e8_gluing();
/// Fulton's axioms and the graph formula on a fixed corpus plus random pairs.
Outcome fulton(std::size_t random_pairs, unsigned seed);
/// Root counts of A_n, D_n, E6, E7, E8 against closed formulas and Weyl orbits.
Outcome root_counts();
/// U A V = D and T A = H with unimodular transforms.
Outcome snf_hnf(std::size_t trials, unsigned seed);

}  // namespace props
