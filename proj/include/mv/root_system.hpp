#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mv/cartan.hpp"
#include "mv/weyl.hpp"
#include "mv/words.hpp"

namespace mv {

struct Bounds {
  std::size_t weyl_order = WeylGroup::kDefaultBound;
  std::size_t reduced_words = 1'000'000;
  std::size_t crystal_size = 100'000;
};

// Everything derived once from a root datum and shared read-only by the
// polytopes built on it: the Weyl group, the braid-move graph on R(w0), the
// chamber weights and per-word prefix data for the length formula.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> make(const RootDatum& rd, const Bounds& bounds = {});
  static std::shared_ptr<const RootSystem> make(const std::string& type, const Bounds& bounds = {});

  const RootDatum& datum() const { return weyl_.root_datum(); }
  const WeylGroup& weyl() const { return weyl_; }
  const WordGraph& words() const { return *words_; }
  const Bounds& bounds() const { return bounds_; }
  int rank() const { return datum().rank(); }
  std::string name() const { return datum().name(); }

  // Gamma = W.{Lambda_j}. Chamber weights are indexed densely.
  std::size_t num_chamber_weights() const { return chamber_.size(); }
  const Weight& chamber_weight(int g) const { return chamber_[g]; }
  int chamber_index(WeylElement w, int j) const { return chamber_of_[w.index()][j]; }
  int chamber_index(const Weight& gamma) const;
  // Minimal-length w with chamber weight g = w.Lambda_j, and that j.
  WeylElement chamber_rep(int g) const { return chamber_rep_[g].first; }
  int chamber_type(int g) const { return chamber_rep_[g].second; }

  // For node n of the word graph with word (i_1..i_m): prefix(n)[l] = w_l and
  // edge(n)[l-1] = w_{l-1} . h_{i_l}.
  const std::vector<WeylElement>& prefix(int node) const { return prefix_[node]; }
  const std::vector<HVector>& edge(int node) const { return edge_[node]; }

  // Nodes in BFS order from the base word, with the tree edge reaching each.
  struct TreeStep {
    int parent;
    int node;
    BraidMove move;
  };
  const std::vector<TreeStep>& spanning_tree() const { return tree_; }

 private:
  RootSystem(const RootDatum& rd, const Bounds& bounds);

  Bounds bounds_;
  WeylGroup weyl_;
  std::unique_ptr<WordGraph> words_;
  std::vector<Weight> chamber_;
  std::vector<std::vector<int>> chamber_of_;
  std::vector<std::pair<WeylElement, int>> chamber_rep_;
  std::vector<std::vector<WeylElement>> prefix_;
  std::vector<std::vector<HVector>> edge_;
  std::vector<TreeStep> tree_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace mv
