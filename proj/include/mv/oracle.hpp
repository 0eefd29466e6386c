#pragma once

#include <map>
#include <vector>

#include "mv/cartan.hpp"
#include "mv/weyl.hpp"

// Classical representation-theory oracles. Nothing here touches polytopes or
// crystals; only the root datum and the Weyl group are shared.
namespace mv::oracle {

// Weight -> multiplicity of the irreducible module V(lambda).
struct Character {
  std::map<HVector, Integer> mult;

  Integer dimension() const;
  Integer operator[](const HVector& v) const;
};

// Positive roots in the simple-root basis.
std::vector<std::vector<int>> positive_roots(const RootDatum& rd);

Integer weyl_dimension(const RootDatum& rd, const DominantLabels& lambda);

// Freudenthal's recursion on dominant weights, extended by W-invariance.
Character freudenthal_multiplicities(const WeylGroup& W, const DominantLabels& lambda,
                                     std::size_t bound = 100'000);

// Peels highest weights off the product character.
std::map<DominantLabels, long long> product_decomposition(const WeylGroup& W, const DominantLabels& lambda1,
                                                          const DominantLabels& lambda2,
                                                          std::size_t bound = 100'000);

// v - lambda in Q^vee and v in Conv(W.lambda).
bool omega_membership(const WeylGroup& W, const HVector& v, const DominantLabels& lambda);

}  // namespace mv::oracle
