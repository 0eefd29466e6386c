#include "mv/root_system.hpp"

#include <deque>
#include <map>

#include "mv/errors.hpp"

namespace mv {

RootSystem::RootSystem(const RootDatum& rd, const Bounds& bounds)
    : bounds_(bounds), weyl_(rd, bounds.weyl_order) {
  words_ = std::make_unique<WordGraph>(weyl_, bounds.reduced_words);
  const int r = rd.rank();
  const std::size_t n = weyl_.order();

  // Chamber weights, visited in element order so the first hit for each
  // weight is a minimal-length representative.
  std::map<Weight, int> index;
  chamber_of_.assign(n, std::vector<int>(r));
  for (std::size_t w = 0; w < n; ++w) {
    for (int j = 0; j < r; ++j) {
      Weight lam(r, 0);
      lam[j] = 1;
      Weight g = weyl_.act(WeylElement(static_cast<int>(w)), lam);
      auto [it, inserted] = index.emplace(g, static_cast<int>(chamber_.size()));
      if (inserted) {
        chamber_.push_back(g);
        chamber_rep_.emplace_back(WeylElement(static_cast<int>(w)), j);
      }
      chamber_of_[w][j] = it->second;
    }
  }

  const WordGraph& graph = *words_;
  prefix_.resize(graph.size());
  edge_.resize(graph.size());
  for (std::size_t node = 0; node < graph.size(); ++node) {
    const Word& word = graph.word(static_cast<int>(node));
    WeylElement w = weyl_.identity();
    prefix_[node].push_back(w);
    for (int i : word) {
      edge_[node].push_back(weyl_.act(w, HVector::basis(r, i)));
      w = weyl_.right_mul(w, i);
      prefix_[node].push_back(w);
    }
  }

  std::vector<bool> seen(graph.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& e : graph.edges(u)) {
      if (seen[e.to]) continue;
      seen[e.to] = true;
      tree_.push_back({u, e.to, e.move});
      queue.push_back(e.to);
    }
  }
}

std::shared_ptr<const RootSystem> RootSystem::make(const RootDatum& rd, const Bounds& bounds) {
  return std::shared_ptr<const RootSystem>(new RootSystem(rd, bounds));
}

std::shared_ptr<const RootSystem> RootSystem::make(const std::string& type, const Bounds& bounds) {
  return make(parse_type(type), bounds);
}

int RootSystem::chamber_index(const Weight& gamma) const {
  for (std::size_t g = 0; g < chamber_.size(); ++g) {
    if (chamber_[g] == gamma) return static_cast<int>(g);
  }
  throw ContractError("not a chamber weight");
}

}  // namespace mv
