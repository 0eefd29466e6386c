#pragma once

#include <optional>
#include <vector>

#include "mv/root_system.hpp"

namespace mv {

// Edge lengths of a polytope along one reduced word of w0, together with the
// highest vertex lambda.
struct LusztigDatum {
  DominantLabels lambda;
  int node = 0;  // word graph node; 0 is the base word
  Lengths n;
};

// (mu_w)_{w in W}, indexed by WeylElement::index().
struct GGMSDatum {
  std::vector<HVector> vertices;

  const HVector& operator[](WeylElement w) const { return vertices[w.index()]; }
  friend bool operator==(const GGMSDatum&, const GGMSDatum&) = default;
};

// (M_gamma)_{gamma in Gamma}, indexed by RootSystem chamber indices.
struct BZDatum {
  std::vector<Rational> values;

  const Rational& operator[](int g) const { return values[g]; }
  friend bool operator==(const BZDatum&, const BZDatum&) = default;
};

// M_gamma = <mu_w, w.Lambda_j>, checked to be independent of the coset
// representative w. Throws InvariantError otherwise.
BZDatum bz_from_ggms(const RootSystem& rs, const GGMSDatum& g);

// Checks mu_{w s_i} - mu_w in Z_{>=0} (w.h_i) for every w, i.
bool satisfies_length_condition(const RootSystem& rs, const GGMSDatum& g);
// Checks x^{-1} mu_z - x^{-1} mu_x in Q^vee_+ for every x, z.
bool satisfies_ggms_order(const RootSystem& rs, const GGMSDatum& g);
// Checks z^{-1} mu_z - x^{-1} mu_x in Q^vee for every x, z.
bool satisfies_lattice_condition(const RootSystem& rs, const GGMSDatum& g);

class PseudoWeylPolytope {
 public:
  PseudoWeylPolytope(RootSystemPtr rs, GGMSDatum ggms);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const GGMSDatum& ggms() const { return ggms_; }
  const BZDatum& bz() const { return bz_; }
  const HVector& vertex(WeylElement w) const { return ggms_[w]; }
  const Rational& bz(WeylElement w, int j) const { return bz_[rs_->chamber_index(w, j)]; }

  // <v, gamma> >= M_gamma for every chamber weight.
  bool contains_point(const HVector& v) const;

  friend bool operator==(const PseudoWeylPolytope& a, const PseudoWeylPolytope& b) {
    return a.ggms_ == b.ggms_;
  }

 private:
  RootSystemPtr rs_;
  GGMSDatum ggms_;
  BZDatum bz_;
};

// Componentwise vertex sum; asserts BZ additivity.
PseudoWeylPolytope minkowski_sum(const PseudoWeylPolytope& a, const PseudoWeylPolytope& b);

// True iff inner is a subset of outer, via M_gamma(inner) >= M_gamma(outer).
bool contains(const BZDatum& outer, const BZDatum& inner);
inline bool contains(const PseudoWeylPolytope& outer, const PseudoWeylPolytope& inner) {
  return contains(outer.bz(), inner.bz());
}

// Conv(W.lambda) with mu_w = w w0 lambda.
PseudoWeylPolytope extremal_polytope(const RootSystemPtr& rs, const DominantLabels& lambda);

// Lusztig data transported to every node of the word graph, starting from
// the datum's own node. Entry k belongs to node k.
std::vector<Lengths> lusztig_atlas(const RootSystem& rs, const LusztigDatum& l);

// Vertices from the length formula, telescoped down from mu_{w0} = lambda on
// every reduced word of w0. Every vertex is reached from several words; any
// disagreement throws InvariantError (the data is not an MV datum).
GGMSDatum ggms_from_lusztig(const RootSystem& rs, const LusztigDatum& l);

// The nonnegative integers N_l with mu_{w_l} - mu_{w_{l-1}} = N_l w_{l-1}.h_{i_l}
// along the word at `node`.
Lengths edge_lengths(const RootSystem& rs, const GGMSDatum& g, int node);

// Move coherence on the whole word graph, nonnegativity, mu_{w0} = lambda and
// containment in Conv(W.lambda).
bool validate_mv(const RootSystemPtr& rs, const LusztigDatum& l);

// An MV polytope of highest vertex lambda, stored canonically as its Lusztig
// datum on the base word. Vertex and BZ data are computed at construction.
class MVPolytope {
 public:
  static MVPolytope from_lusztig(RootSystemPtr rs, const LusztigDatum& l);
  static MVPolytope from_base_lengths(RootSystemPtr rs, DominantLabels lambda, Lengths n);

  const RootSystem& root_system() const { return poly_.root_system(); }
  const RootSystemPtr& root_system_ptr() const { return poly_.root_system_ptr(); }
  const DominantLabels& lambda() const { return lambda_; }
  const Lengths& lengths() const { return n_; }
  LusztigDatum lusztig() const { return {lambda_, 0, n_}; }
  const PseudoWeylPolytope& polytope() const { return poly_; }
  const GGMSDatum& ggms() const { return poly_.ggms(); }
  const BZDatum& bz() const { return poly_.bz(); }
  const HVector& vertex(WeylElement w) const { return poly_.vertex(w); }

  friend bool operator==(const MVPolytope& a, const MVPolytope& b) {
    return a.lambda_ == b.lambda_ && a.n_ == b.n_;
  }
  friend bool operator<(const MVPolytope& a, const MVPolytope& b) {
    if (a.lambda_ != b.lambda_) return a.lambda_ < b.lambda_;
    return a.n_ < b.n_;
  }

 private:
  MVPolytope(DominantLabels lambda, Lengths n, PseudoWeylPolytope poly)
      : lambda_(std::move(lambda)), n_(std::move(n)), poly_(std::move(poly)) {}

  DominantLabels lambda_;
  Lengths n_;
  PseudoWeylPolytope poly_;
};

}  // namespace mv
