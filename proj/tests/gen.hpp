#pragma once

// Seeded generators for the hand-rolled property tests.

#include <random>
#include <vector>

#include "koszul/polynomial.hpp"

namespace gen {

inline koszul::Monomial monomial(std::mt19937_64& rng, std::size_t n, int degree) {
  koszul::Monomial m;
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  for (int k = 0; k < degree; ++k) {
    std::size_t v = var(rng);
    m.set(v, m[v] + 1);
  }
  return m;
}

/// Homogeneous of the given degree when homogeneous is set, else mixed
/// degrees up to `degree`.
inline koszul::Polynomial polynomial(std::mt19937_64& rng, const koszul::RingPtr& ring, int degree,
                                     std::size_t terms, bool homogeneous = true, long coeff = 9) {
  std::uniform_int_distribution<long> c(-coeff, coeff);
  std::uniform_int_distribution<int> d(0, degree);
  std::vector<koszul::Term> ts;
  for (std::size_t k = 0; k < terms; ++k)
    ts.push_back({monomial(rng, ring->nvars(), homogeneous ? degree : d(rng)), ring->field().from_int(c(rng))});
  return koszul::Polynomial(ring, std::move(ts));
}

}  // namespace gen
