#include "mv/words.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "mv/errors.hpp"

namespace mv {

std::vector<Word> reduced_words_of(const WeylGroup& W, WeylElement w, std::size_t bound) {
  std::map<int, std::vector<Word>> memo;
  std::function<const std::vector<Word>&(WeylElement)> rec = [&](WeylElement x) -> const std::vector<Word>& {
    auto it = memo.find(x.index());
    if (it != memo.end()) return it->second;
    std::vector<Word> out;
    if (W.length(x) == 0) {
      out.push_back({});
    } else {
      for (int i = 0; i < W.rank(); ++i) {
        if (!W.has_right_descent(x, i)) continue;
        for (const Word& p : rec(W.right_mul(x, i))) {
          if (out.size() >= bound) {
            throw SizeError("reduced word count exceeds bound " + std::to_string(bound));
          }
          Word word = p;
          word.push_back(i);
          out.push_back(std::move(word));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return memo.emplace(x.index(), std::move(out)).first->second;
  };
  return rec(w);
}

Word extend_to_w0(const WeylGroup& W, const Word& prefix) {
  if (!W.is_reduced(prefix)) throw ContractError("extend_to_w0: input word is not reduced");
  WeylElement x = W.from_word(prefix);
  WeylElement rest = W.multiply(W.inverse(x), W.longest());
  Word out = prefix;
  const Word& tail = W.reduced_word(rest);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Word move_word(const Word& word, const BraidMove& mv) {
  const std::size_t k = static_cast<std::size_t>(mv.position);
  Word out = word;
  if (mv.kind == BraidMove::Kind::two_move) {
    if (k + 2 > word.size() || word[k] != mv.i || word[k + 1] != mv.j) {
      throw ContractError("2-move does not apply at position " + std::to_string(k));
    }
    std::swap(out[k], out[k + 1]);
  } else {
    if (k + 3 > word.size() || word[k] != mv.i || word[k + 1] != mv.j || word[k + 2] != mv.i) {
      throw ContractError("3-move does not apply at position " + std::to_string(k));
    }
    out[k] = out[k + 2] = mv.j;
    out[k + 1] = mv.i;
  }
  return out;
}

Lengths apply_move(Lengths n, const BraidMove& mv) {
  const std::size_t k = static_cast<std::size_t>(mv.position);
  const std::size_t span = mv.kind == BraidMove::Kind::two_move ? 2 : 3;
  if (k + span > n.size()) throw ContractError("braid move out of range for Lusztig datum");
  if (mv.kind == BraidMove::Kind::two_move) {
    std::swap(n[k], n[k + 1]);
    return n;
  }
  const int a = n[k], b = n[k + 1], c = n[k + 2];
  const int p = std::min(a, c);
  n[k] = b + c - p;
  n[k + 1] = p;
  n[k + 2] = a + b - p;
  return n;
}

std::vector<BraidMove> moves_of(const RootDatum& rd, const Word& word) {
  std::vector<BraidMove> out;
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    const int i = word[k], j = word[k + 1];
    if (i == j) continue;
    if (rd.cartan(i, j) == 0) {
      out.push_back({BraidMove::Kind::two_move, static_cast<int>(k), i, j});
    } else if (k + 2 < word.size() && word[k + 2] == i) {
      out.push_back({BraidMove::Kind::three_move, static_cast<int>(k), i, j});
    }
  }
  return out;
}

// -------------------------------------------------------------- WordGraph

WordGraph::WordGraph(const WeylGroup& W, std::size_t bound)
    : words_(reduced_words_of(W, W.longest(), bound)) {
  for (std::size_t n = 0; n < words_.size(); ++n) index_.emplace(words_[n], static_cast<int>(n));
  adj_.resize(words_.size());
  for (std::size_t n = 0; n < words_.size(); ++n) {
    for (const BraidMove& mv : moves_of(W.root_datum(), words_[n])) {
      adj_[n].push_back({node_of(move_word(words_[n], mv)), mv});
    }
  }

  const auto& parent = parents_from(0);
  for (std::size_t n = 0; n < words_.size(); ++n) {
    if (parent[n] < 0 && n != 0) throw InvariantError("braid-move graph on R(w0) is disconnected");
  }

  // BFS order from the base word gives the closest j-initial node.
  initial_.assign(W.rank(), -1);
  std::vector<int> dist(words_.size(), -1);
  std::deque<int> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    int first = words_[u].empty() ? -1 : words_[u][0];
    if (first >= 0 && initial_[first] < 0) initial_[first] = u;
    for (const Edge& e : adj_[u]) {
      if (dist[e.to] < 0) {
        dist[e.to] = dist[u] + 1;
        queue.push_back(e.to);
      }
    }
  }
  to_initial_.resize(W.rank());
  for (int j = 0; j < W.rank(); ++j) {
    if (initial_[j] < 0) throw InvariantError("no reduced word of w0 starts with letter " + std::to_string(j + 1));
    to_initial_[j] = shortest_path(0, initial_[j]);
  }
}

int WordGraph::node_of(const Word& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) throw ContractError("word is not a reduced word of w0");
  return it->second;
}

std::size_t WordGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adj_) total += a.size();
  return total / 2;
}

const std::vector<int>& WordGraph::parents_from(int source) const {
  std::lock_guard lock(mutex_);
  auto it = trees_.find(source);
  if (it != trees_.end()) return it->second;
  // parent[v] = encoded (parent node, edge index) as node * stride + edge
  std::vector<int> parent(words_.size(), -1);
  std::vector<bool> seen(words_.size(), false);
  std::deque<int> queue{source};
  seen[source] = true;
  const int stride = static_cast<int>(words_.empty() ? 1 : words_[0].size() + 1);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < adj_[u].size(); ++k) {
      int v = adj_[u][k].to;
      if (seen[v]) continue;
      seen[v] = true;
      parent[v] = u * stride + static_cast<int>(k);
      queue.push_back(v);
    }
  }
  return trees_.emplace(source, std::move(parent)).first->second;
}

std::vector<BraidMove> WordGraph::shortest_path(int from, int to) const {
  const auto& parent = parents_from(from);
  const int stride = static_cast<int>(words_[0].size() + 1);
  std::vector<BraidMove> path;
  for (int v = to; v != from;) {
    if (parent[v] < 0) throw InvariantError("no move path between reduced words");
    int u = parent[v] / stride;
    int k = parent[v] % stride;
    path.push_back(adj_[u][k].move);
    v = u;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<BraidMove> WordGraph::random_path(int from, int to, std::mt19937_64& rng, int steps) const {
  std::vector<BraidMove> path;
  int cur = from;
  for (int s = 0; s < steps; ++s) {
    const auto& out = adj_[cur];
    if (out.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
    const Edge& e = out[pick(rng)];
    path.push_back(e.move);
    cur = e.to;
  }
  auto rest = shortest_path(cur, to);
  path.insert(path.end(), rest.begin(), rest.end());
  return path;
}

Lengths WordGraph::replay(Lengths n, const std::vector<BraidMove>& path) {
  for (const BraidMove& mv : path) n = apply_move(std::move(n), mv);
  return n;
}

Lengths WordGraph::transition(Lengths n, int from, int to) const {
  if (from == to) return n;
  return replay(std::move(n), shortest_path(from, to));
}

}  // namespace mv
