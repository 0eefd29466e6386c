#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "mv/weyl.hpp"

namespace mv {

// Edge lengths along a reduced word of w0 (a Lusztig datum).
using Lengths = std::vector<int>;

std::vector<Word> reduced_words_of(const WeylGroup& W, WeylElement w,
                                   std::size_t bound = 1'000'000);

// A reduced word of w0 whose first letters are `prefix`.
Word extend_to_w0(const WeylGroup& W, const Word& prefix);

struct BraidMove {
  enum class Kind { two_move, three_move };
  Kind kind;
  int position;  // 0-based offset of the first affected letter
  int i;         // letter at `position` before the move
  int j;         // the other letter
};

// Applies the move to a word in place of the letters; throws ContractError if
// the letters at the position do not match.
Word move_word(const Word& word, const BraidMove& mv);

// The piecewise-linear change of Lusztig data across a braid move. Two-moves
// swap two entries; three-moves send (a, b, c) to (b + c - p, p, a + b - p)
// with p = min(a, c). Both are involutions.
Lengths apply_move(Lengths n, const BraidMove& mv);

// Every braid move applicable to a word.
std::vector<BraidMove> moves_of(const RootDatum& rd, const Word& word);

// Graph on R(w0) with braid moves as edges. Node 0 is the lexicographically
// smallest word, which serves as the canonical base word.
class WordGraph {
 public:
  explicit WordGraph(const WeylGroup& W, std::size_t bound = 1'000'000);

  WordGraph(const WordGraph&) = delete;
  WordGraph& operator=(const WordGraph&) = delete;

  struct Edge {
    int to;
    BraidMove move;
  };

  std::size_t size() const { return words_.size(); }
  const Word& word(int node) const { return words_[node]; }
  const Word& base_word() const { return words_[0]; }
  int node_of(const Word& word) const;
  const std::vector<Edge>& edges(int node) const { return adj_[node]; }
  std::size_t edge_count() const;

  // Shortest move path between two nodes (BFS, neighbours in edge order).
  std::vector<BraidMove> shortest_path(int from, int to) const;
  // A path that first wanders `steps` random moves away from `from`, then
  // returns along a shortest path to `to`.
  std::vector<BraidMove> random_path(int from, int to, std::mt19937_64& rng, int steps) const;

  // Closest node to the base word whose first letter is j.
  int initial_node(int j) const { return initial_[j]; }
  const std::vector<BraidMove>& path_to_initial(int j) const { return to_initial_[j]; }

  Lengths transition(Lengths n, int from, int to) const;
  static Lengths replay(Lengths n, const std::vector<BraidMove>& path);

 private:
  const std::vector<int>& parents_from(int source) const;

  std::vector<Word> words_;
  std::map<Word, int> index_;
  std::vector<std::vector<Edge>> adj_;
  std::vector<int> initial_;
  std::vector<std::vector<BraidMove>> to_initial_;

  // BFS trees keyed by source node, built lazily. parent edge index per node.
  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<int>> trees_;
};

}  // namespace mv
