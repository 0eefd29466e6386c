#include "mv/tensor.hpp"

#include <algorithm>

#include "mv/errors.hpp"

namespace mv {

namespace {

int pair_int(const RootDatum& rd, const HVector& v, int j) {
  Rational p = rd.pair_alpha(v, j);
  if (!is_integral(p)) throw InvariantError("weight pairs non-integrally with a simple root");
  return static_cast<int>(boost::multiprecision::numerator(p));
}

HighestPath climb(const TensorElement& t, std::mt19937_64* rng) {
  const int r = t.left.root_system().rank();
  HighestPath out{t, {}};
  while (true) {
    std::vector<int> candidates;
    for (int j = 0; j < r; ++j) {
      if (tensor_stats(out.element, j).epsilon > 0) candidates.push_back(j);
    }
    if (candidates.empty()) break;
    int j = candidates.front();
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      j = candidates[pick(*rng)];
    }
    auto up = tensor_raise(out.element, j);
    if (!up) throw InvariantError("tensor raise failed although epsilon > 0");
    out.element = std::move(*up);
    out.path.push_back(j);
  }
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

Component replay(const MVPolytope& p1, const MVPolytope& p2, const HighestPath& top) {
  const RootSystemPtr& rs = p1.root_system_ptr();
  const HVector w = weight(top.element.left) + weight(top.element.right);
  const std::vector<int> labels = rs->datum().labels_of(w);
  for (int m : labels) {
    if (m < 0) throw InvariantError("highest tensor element has non-dominant weight");
  }
  DominantLabels lambda(labels);
  MVPolytope p = highest_mv(rs, lambda);
  for (int j : top.path) {
    auto next = lower(p, j);
    if (!next) throw InvariantError("lowering path does not replay inside P(lambda)");
    p = std::move(*next);
  }
  if (weight(p) != weight(p1) + weight(p2)) throw InvariantError("extracted component has the wrong weight");
  return Component{std::move(lambda), std::move(p), top.path};
}

}  // namespace

TensorStats tensor_stats(const TensorElement& t, int j) {
  const RootDatum& rd = t.left.root_system().datum();
  const HVector w1 = weight(t.left);
  const HVector w2 = weight(t.right);
  TensorStats s;
  s.epsilon = std::max(epsilon(t.left, j), epsilon(t.right, j) - pair_int(rd, w1, j));
  s.phi = std::max(phi(t.right, j), phi(t.left, j) + pair_int(rd, w2, j));
  s.weight = w1 + w2;
  return s;
}

std::optional<TensorElement> tensor_lower(const TensorElement& t, int j) {
  if (phi(t.left, j) > epsilon(t.right, j)) {
    auto l = lower(t.left, j);
    if (!l) return std::nullopt;
    return TensorElement{std::move(*l), t.right};
  }
  auto r = lower(t.right, j);
  if (!r) return std::nullopt;
  return TensorElement{t.left, std::move(*r)};
}

std::optional<TensorElement> tensor_raise(const TensorElement& t, int j) {
  if (phi(t.left, j) >= epsilon(t.right, j)) {
    auto l = raise(t.left, j);
    if (!l) return std::nullopt;
    return TensorElement{std::move(*l), t.right};
  }
  auto r = raise(t.right, j);
  if (!r) return std::nullopt;
  return TensorElement{t.left, std::move(*r)};
}

bool is_highest(const TensorElement& t) {
  for (int j = 0; j < t.left.root_system().rank(); ++j) {
    if (tensor_stats(t, j).epsilon != 0) return false;
  }
  return true;
}

HighestPath to_highest(const TensorElement& t) { return climb(t, nullptr); }

HighestPath to_highest(const TensorElement& t, std::mt19937_64& rng) { return climb(t, &rng); }

Component extract_component(const MVPolytope& p1, const MVPolytope& p2) {
  return replay(p1, p2, to_highest(TensorElement{p1, p2}));
}

Component extract_component(const MVPolytope& p1, const MVPolytope& p2, std::mt19937_64& rng) {
  return replay(p1, p2, to_highest(TensorElement{p1, p2}, rng));
}

Decomposition decompose(const Crystal& c1, const Crystal& c2) {
  if (c1.elements.empty() || c2.elements.empty()) return {};
  const std::size_t bound = c1.elements.front().root_system().bounds().crystal_size;
  if (c1.elements.size() * c2.elements.size() > bound) {
    throw SizeError("tensor product exceeds bound " + std::to_string(bound));
  }
  Decomposition out;
  for (const auto& a : c1.elements) {
    for (const auto& b : c2.elements) {
      TensorElement t{a, b};
      if (!is_highest(t)) continue;
      const auto labels = a.root_system().datum().labels_of(weight(a) + weight(b));
      out[DominantLabels(labels)] += 1;
    }
  }
  return out;
}

Decomposition decompose(const RootSystemPtr& rs, const DominantLabels& lambda1, const DominantLabels& lambda2) {
  return decompose(enumerate_mv(rs, lambda1), enumerate_mv(rs, lambda2));
}

}  // namespace mv
