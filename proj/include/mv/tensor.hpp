#pragma once

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "mv/crystal.hpp"

namespace mv {

// b1 (x) b2 in P(lambda1) (x) P(lambda2). Lowering acts on the left factor
// while phi_j(b1) > epsilon_j(b2), so a full f_j^max string drives the right
// factor to f_j^max b2.
struct TensorElement {
  MVPolytope left;
  MVPolytope right;

  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

struct TensorStats {
  int epsilon;
  int phi;
  HVector weight;
};

TensorStats tensor_stats(const TensorElement& t, int j);
std::optional<TensorElement> tensor_lower(const TensorElement& t, int j);
std::optional<TensorElement> tensor_raise(const TensorElement& t, int j);
bool is_highest(const TensorElement& t);

struct HighestPath {
  TensorElement element;
  // Lowering sequence from `element` back to the input, in application order.
  Word path;
};

// Raises with the smallest applicable j until every epsilon_j vanishes.
HighestPath to_highest(const TensorElement& t);
// Same, picking uniformly among the applicable j.
HighestPath to_highest(const TensorElement& t, std::mt19937_64& rng);

struct Component {
  DominantLabels lambda;
  MVPolytope polytope;
  Word path;
};

// The element P of P(lambda) matched with p1 (x) p2 by the embedding of the
// connected component through it: replay the lowering path from highest_mv.
Component extract_component(const MVPolytope& p1, const MVPolytope& p2);
Component extract_component(const MVPolytope& p1, const MVPolytope& p2, std::mt19937_64& rng);

using Decomposition = std::map<DominantLabels, long long>;

// Counts highest elements of the tensor product by weight.
Decomposition decompose(const RootSystemPtr& rs, const DominantLabels& lambda1, const DominantLabels& lambda2);
Decomposition decompose(const Crystal& c1, const Crystal& c2);

}  // namespace mv
