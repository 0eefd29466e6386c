#include "mv/crystal.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

#include "mv/errors.hpp"

namespace mv {

namespace {

std::vector<BraidMove> reversed(std::vector<BraidMove> path) {
  std::reverse(path.begin(), path.end());
  return path;
}

// Adds `delta` to the first edge length on the j-initial word at `node` and
// returns to the base word.
MVPolytope shift_initial(const MVPolytope& p, int node, int delta) {
  const WordGraph& graph = p.root_system().words();
  Lengths n = graph.transition(p.lengths(), 0, node);
  n[0] += delta;
  n = graph.transition(std::move(n), node, 0);
  return MVPolytope::from_base_lengths(p.root_system_ptr(), p.lambda(), std::move(n));
}

}  // namespace

MVPolytope highest_mv(const RootSystemPtr& rs, const DominantLabels& lambda) {
  rs->datum().check_rank(lambda.rank(), "lambda");
  return MVPolytope::from_base_lengths(rs, lambda, Lengths(rs->datum().longest_length(), 0));
}

HVector weight(const MVPolytope& p) { return p.vertex(p.root_system().weyl().identity()); }

int epsilon(const MVPolytope& p, int j) {
  const WeylGroup& W = p.root_system().weyl();
  HVector d = p.vertex(W.simple(j)) - p.vertex(W.identity());
  const Rational& c = d[j];
  if (c < 0 || !is_integral(c)) throw InvariantError("mu_{s_j} - mu_e is not in Z_{>=0} h_j");
  return static_cast<int>(boost::multiprecision::numerator(c));
}

int phi(const MVPolytope& p, int j) {
  Rational v = Rational(epsilon(p, j)) + p.root_system().datum().pair_alpha(weight(p), j);
  if (v < 0 || !is_integral(v)) throw InvariantError("phi_j is negative; corrupted datum");
  return static_cast<int>(boost::multiprecision::numerator(v));
}

Lengths lengths_on_initial_word(const MVPolytope& p, int j) {
  return WordGraph::replay(p.lengths(), p.root_system().words().path_to_initial(j));
}

std::optional<MVPolytope> lower(const MVPolytope& p, int j) {
  if (phi(p, j) == 0) {
    assert(!lower_by_hull(p, j));
    return std::nullopt;
  }
  const WordGraph& graph = p.root_system().words();
  Lengths n = WordGraph::replay(p.lengths(), graph.path_to_initial(j));
  n[0] += 1;
  n = WordGraph::replay(std::move(n), reversed(graph.path_to_initial(j)));
  auto out = MVPolytope::from_base_lengths(p.root_system_ptr(), p.lambda(), std::move(n));
  assert(lower_by_hull(p, j) == out);
  return out;
}

std::optional<MVPolytope> raise(const MVPolytope& p, int j) {
  const WordGraph& graph = p.root_system().words();
  Lengths n = WordGraph::replay(p.lengths(), graph.path_to_initial(j));
  if (n[0] == 0) return std::nullopt;
  n[0] -= 1;
  n = WordGraph::replay(std::move(n), reversed(graph.path_to_initial(j)));
  return MVPolytope::from_base_lengths(p.root_system_ptr(), p.lambda(), std::move(n));
}

MVPolytope lower_max(const MVPolytope& p, int j) {
  const int k = phi(p, j);
  if (k == 0) return p;
  return shift_initial(p, p.root_system().words().initial_node(j), k);
}

std::optional<MVPolytope> lower_by_hull(const MVPolytope& p, int j) {
  MVPolytope candidate = shift_initial(p, p.root_system().words().initial_node(j), 1);
  if (!contains(extremal_polytope(p.root_system_ptr(), p.lambda()), candidate.polytope())) {
    return std::nullopt;
  }
  return candidate;
}

std::optional<MVPolytope> lower_via(const MVPolytope& p, int j, int node) {
  if (p.root_system().words().word(node).front() != j) {
    throw ContractError("lower_via: word does not begin with the requested letter");
  }
  if (phi(p, j) == 0) return std::nullopt;
  return shift_initial(p, node, 1);
}

Crystal enumerate_mv(const RootSystemPtr& rs, const DominantLabels& lambda) {
  Crystal c{lambda, {}, {}};
  std::map<Lengths, std::size_t> seen;
  c.elements.push_back(highest_mv(rs, lambda));
  c.paths.push_back({});
  seen.emplace(c.elements.back().lengths(), 0);
  const std::size_t bound = rs->bounds().crystal_size;
  for (std::size_t cur = 0; cur < c.elements.size(); ++cur) {
    for (int j = 0; j < rs->rank(); ++j) {
      auto child = lower(c.elements[cur], j);
      if (!child) continue;
      if (seen.count(child->lengths())) continue;
      if (c.elements.size() >= bound) {
        throw SizeError("crystal of " + to_string(lambda) + " exceeds bound " + std::to_string(bound));
      }
      seen.emplace(child->lengths(), c.elements.size());
      Word path = c.paths[cur];
      path.push_back(j);
      c.elements.push_back(std::move(*child));
      c.paths.push_back(std::move(path));
    }
  }
  std::size_t highest = 0;
  for (const auto& p : c.elements) {
    bool top = true;
    for (int j = 0; j < rs->rank() && top; ++j) top = epsilon(p, j) == 0;
    highest += top ? 1 : 0;
  }
  if (highest != 1) throw InvariantError("crystal does not have a unique highest element");
  return c;
}

KashiwaraDatum kashiwara_data(const MVPolytope& p, int node) {
  const Word& word = p.root_system().words().word(node);
  KashiwaraDatum k{node, {}};
  k.p.reserve(word.size());
  MVPolytope cur = p;
  for (int i : word) {
    k.p.push_back(phi(cur, i));
    cur = lower_max(cur, i);
  }
#ifndef NDEBUG
  const RootSystem& rs = p.root_system();
  const auto& prefix = rs.prefix(node);
  for (std::size_t l = 0; l < word.size(); ++l) {
    assert(Rational(k.p[l]) == p.polytope().bz(prefix[l], word[l]) - p.polytope().bz(prefix[l + 1], word[l]));
  }
#endif
  return k;
}

MVPolytope max_cascade(const MVPolytope& p, const Word& word) {
  MVPolytope cur = p;
  for (int i : word) cur = lower_max(cur, i);
  return cur;
}

HVector vertex_via_ehrig(const MVPolytope& p, const Word& reduced_expression) {
  const WeylGroup& W = p.root_system().weyl();
  if (!W.is_reduced(reduced_expression)) throw ContractError("vertex_via_ehrig: expression is not reduced");
  return W.act(W.from_word(reduced_expression), weight(max_cascade(p, reduced_expression)));
}

}  // namespace mv
