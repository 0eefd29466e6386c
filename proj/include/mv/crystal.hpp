#pragma once

#include <optional>
#include <vector>

#include "mv/polytope.hpp"

namespace mv {

// The LBZ crystal on MV polytopes of highest vertex lambda. A missing
// optional plays the role of the zero element.

MVPolytope highest_mv(const RootSystemPtr& rs, const DominantLabels& lambda);

HVector weight(const MVPolytope& p);
// epsilon_j: the edge length between mu_e and mu_{s_j}.
int epsilon(const MVPolytope& p, int j);
// phi_j = epsilon_j + <wt, alpha_j>. Throws InvariantError if negative.
int phi(const MVPolytope& p, int j);

// Lusztig datum on the closest word beginning with j (first entry = epsilon_j).
Lengths lengths_on_initial_word(const MVPolytope& p, int j);

std::optional<MVPolytope> lower(const MVPolytope& p, int j);
std::optional<MVPolytope> raise(const MVPolytope& p, int j);
MVPolytope lower_max(const MVPolytope& p, int j);

// f_j by the literal rule: build f_j mu and keep it only if it lies in
// Conv(W.lambda). Independent of the phi shortcut used by lower().
std::optional<MVPolytope> lower_by_hull(const MVPolytope& p, int j);
// f_j / e_j computed on an arbitrary j-initial word node.
std::optional<MVPolytope> lower_via(const MVPolytope& p, int j, int node);

struct Crystal {
  DominantLabels lambda;
  std::vector<MVPolytope> elements;
  // Lowering sequence from the highest element, in order of application.
  std::vector<Word> paths;
};

// Closure of the highest element under all f_j, breadth first with children
// ordered by j. Throws SizeError past bounds().crystal_size.
Crystal enumerate_mv(const RootSystemPtr& rs, const DominantLabels& lambda);

struct KashiwaraDatum {
  int node;
  Lengths p;
};

// p_l = phi_{i_l}(f^max_{i_{l-1}} ... f^max_{i_1} P) along the word at `node`.
KashiwaraDatum kashiwara_data(const MVPolytope& p, int node);

// f^max_{i_k} ... f^max_{i_1} P
MVPolytope max_cascade(const MVPolytope& p, const Word& word);

// x . wt(f^max_{i_k} ... f^max_{i_1} P) for a reduced expression of x.
HVector vertex_via_ehrig(const MVPolytope& p, const Word& reduced_expression);

}  // namespace mv
