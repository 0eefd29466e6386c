#include "mv/polytope.hpp"

#include <algorithm>

#include "mv/errors.hpp"

namespace mv {

namespace {

bool is_nonnegative(const Lengths& n) {
  return std::all_of(n.begin(), n.end(), [](int x) { return x >= 0; });
}

// c with d = c v, or nullopt when d is not a multiple of v.
std::optional<Rational> proportion(const HVector& d, const HVector& v) {
  std::size_t k = 0;
  while (k < v.rank() && v[k] == 0) ++k;
  if (k == v.rank()) return std::nullopt;
  Rational c = d[k] / v[k];
  if (c * v != d) return std::nullopt;
  return c;
}

void require_same_system(const RootSystem& a, const RootSystem& b) {
  if (&a != &b && !(a.datum() == b.datum())) throw ContractError("polytopes live on different root data");
}

}  // namespace

BZDatum bz_from_ggms(const RootSystem& rs, const GGMSDatum& g) {
  const WeylGroup& W = rs.weyl();
  BZDatum bz;
  bz.values.resize(rs.num_chamber_weights());
  std::vector<bool> set(rs.num_chamber_weights(), false);
  for (WeylElement w : W.elements()) {
    for (int j = 0; j < rs.rank(); ++j) {
      const int gi = rs.chamber_index(w, j);
      Rational m = rs.datum().pair(g[w], rs.chamber_weight(gi));
      if (!set[gi]) {
        bz.values[gi] = std::move(m);
        set[gi] = true;
      } else if (bz.values[gi] != m) {
        throw InvariantError("BZ value depends on the coset representative; not a GGMS datum");
      }
    }
  }
  return bz;
}

bool satisfies_length_condition(const RootSystem& rs, const GGMSDatum& g) {
  const WeylGroup& W = rs.weyl();
  for (WeylElement w : W.elements()) {
    for (int i = 0; i < rs.rank(); ++i) {
      HVector d = g[W.right_mul(w, i)] - g[w];
      if (d.is_zero()) continue;
      auto c = proportion(d, W.act(w, HVector::basis(rs.rank(), i)));
      if (!c || *c < 0 || !is_integral(*c)) return false;
    }
  }
  return true;
}

bool satisfies_ggms_order(const RootSystem& rs, const GGMSDatum& g) {
  const WeylGroup& W = rs.weyl();
  for (WeylElement x : W.elements()) {
    const WeylElement xi = W.inverse(x);
    const HVector base = W.act(xi, g[x]);
    for (WeylElement z : W.elements()) {
      if (!rs.datum().dominance_ge(W.act(xi, g[z]), base)) return false;
    }
  }
  return true;
}

bool satisfies_lattice_condition(const RootSystem& rs, const GGMSDatum& g) {
  const WeylGroup& W = rs.weyl();
  const HVector ref = W.act(W.inverse(W.identity()), g[W.identity()]);
  for (WeylElement z : W.elements()) {
    if (!(W.act(W.inverse(z), g[z]) - ref).is_integral()) return false;
  }
  return true;
}

// ------------------------------------------------------ PseudoWeylPolytope

PseudoWeylPolytope::PseudoWeylPolytope(RootSystemPtr rs, GGMSDatum ggms)
    : rs_(std::move(rs)), ggms_(std::move(ggms)) {
  if (ggms_.vertices.size() != rs_->weyl().order()) {
    throw ContractError("GGMS datum must have one vertex per Weyl group element");
  }
  bz_ = bz_from_ggms(*rs_, ggms_);
}

bool PseudoWeylPolytope::contains_point(const HVector& v) const {
  for (std::size_t g = 0; g < rs_->num_chamber_weights(); ++g) {
    if (rs_->datum().pair(v, rs_->chamber_weight(static_cast<int>(g))) < bz_[static_cast<int>(g)]) return false;
  }
  return true;
}

PseudoWeylPolytope minkowski_sum(const PseudoWeylPolytope& a, const PseudoWeylPolytope& b) {
  require_same_system(a.root_system(), b.root_system());
  GGMSDatum sum = a.ggms();
  for (std::size_t w = 0; w < sum.vertices.size(); ++w) sum.vertices[w] += b.ggms().vertices[w];
  PseudoWeylPolytope out(a.root_system_ptr(), std::move(sum));
  for (std::size_t g = 0; g < out.bz().values.size(); ++g) {
    if (out.bz().values[g] != a.bz().values[g] + b.bz().values[g]) {
      throw InvariantError("BZ data of a Minkowski sum are not additive");
    }
  }
  return out;
}

bool contains(const BZDatum& outer, const BZDatum& inner) {
  if (outer.values.size() != inner.values.size()) throw ContractError("BZ data of different root data");
  for (std::size_t g = 0; g < outer.values.size(); ++g) {
    if (inner.values[g] < outer.values[g]) return false;
  }
  return true;
}

PseudoWeylPolytope extremal_polytope(const RootSystemPtr& rs, const DominantLabels& lambda) {
  const WeylGroup& W = rs->weyl();
  const HVector low = W.act(W.longest(), rs->datum().coroot_coords(lambda));
  GGMSDatum g;
  g.vertices.reserve(W.order());
  for (WeylElement w : W.elements()) g.vertices.push_back(W.act(w, low));
  return PseudoWeylPolytope(rs, std::move(g));
}

// ------------------------------------------------------------- Lusztig data

std::vector<Lengths> lusztig_atlas(const RootSystem& rs, const LusztigDatum& l) {
  const WordGraph& graph = rs.words();
  if (l.n.size() != static_cast<std::size_t>(rs.datum().longest_length())) {
    throw ContractError("Lusztig datum has the wrong length");
  }
  std::vector<Lengths> atlas(graph.size());
  atlas[0] = graph.transition(l.n, l.node, 0);
  for (const auto& step : rs.spanning_tree()) atlas[step.node] = apply_move(atlas[step.parent], step.move);
  return atlas;
}

GGMSDatum ggms_from_lusztig(const RootSystem& rs, const LusztigDatum& l) {
  rs.datum().check_rank(l.lambda.rank(), "lambda");
  const auto atlas = lusztig_atlas(rs, l);
  const HVector top = rs.datum().coroot_coords(l.lambda);
  const std::size_t m = l.n.size();

  GGMSDatum g;
  g.vertices.resize(rs.weyl().order());
  std::vector<bool> set(g.vertices.size(), false);
  for (std::size_t node = 0; node < atlas.size(); ++node) {
    const auto& prefix = rs.prefix(static_cast<int>(node));
    const auto& edge = rs.edge(static_cast<int>(node));
    HVector mu = top;
    for (std::size_t t = m + 1; t-- > 0;) {
      if (t < m) mu -= Rational(atlas[node][t]) * edge[t];
      const int w = prefix[t].index();
      if (!set[w]) {
        g.vertices[w] = mu;
        set[w] = true;
      } else if (g.vertices[w] != mu) {
        throw InvariantError("Lusztig data are not coherent across reduced words (not an MV datum)");
      }
    }
  }
  if (!std::all_of(set.begin(), set.end(), [](bool b) { return b; })) {
    throw InvariantError("some Weyl group element is not a prefix of a reduced word of w0");
  }
  return g;
}

Lengths edge_lengths(const RootSystem& rs, const GGMSDatum& g, int node) {
  const auto& prefix = rs.prefix(node);
  const auto& edge = rs.edge(node);
  Lengths n(edge.size());
  for (std::size_t t = 0; t < edge.size(); ++t) {
    HVector d = g[prefix[t + 1]] - g[prefix[t]];
    if (d.is_zero()) {
      n[t] = 0;
      continue;
    }
    auto c = proportion(d, edge[t]);
    if (!c || *c < 0 || !is_integral(*c)) {
      throw InvariantError("edge difference is not a nonnegative integer multiple of w.h_i");
    }
    n[t] = static_cast<int>(boost::multiprecision::numerator(*c));
  }
  return n;
}

bool validate_mv(const RootSystemPtr& rs, const LusztigDatum& l) {
  if (!is_nonnegative(l.n)) return false;
  const auto atlas = lusztig_atlas(*rs, l);
  const WordGraph& graph = rs->words();
  for (std::size_t u = 0; u < graph.size(); ++u) {
    if (!is_nonnegative(atlas[u])) return false;
    for (const auto& e : graph.edges(static_cast<int>(u))) {
      if (apply_move(atlas[u], e.move) != atlas[e.to]) return false;
    }
  }
  GGMSDatum g;
  try {
    g = ggms_from_lusztig(*rs, l);
  } catch (const InvariantError&) {
    return false;
  }
  if (g[rs->weyl().longest()] != rs->datum().coroot_coords(l.lambda)) return false;
  PseudoWeylPolytope p(rs, std::move(g));
  return contains(extremal_polytope(rs, l.lambda), p);
}

// --------------------------------------------------------------- MVPolytope

MVPolytope MVPolytope::from_lusztig(RootSystemPtr rs, const LusztigDatum& l) {
  if (!is_nonnegative(l.n)) throw ContractError("Lusztig data must be nonnegative");
  GGMSDatum g = ggms_from_lusztig(*rs, l);
  Lengths base = l.node == 0 ? l.n : rs->words().transition(l.n, l.node, 0);
  return MVPolytope(l.lambda, std::move(base), PseudoWeylPolytope(std::move(rs), std::move(g)));
}

MVPolytope MVPolytope::from_base_lengths(RootSystemPtr rs, DominantLabels lambda, Lengths n) {
  return from_lusztig(std::move(rs), LusztigDatum{std::move(lambda), 0, std::move(n)});
}

}  // namespace mv
