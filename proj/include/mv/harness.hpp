#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mv/io.hpp"
#include "mv/tensor.hpp"

namespace mv::harness {

using io::Json;

// Outcome of one exhaustive check. wall_time is informational only and is
// never serialized, so reports of identical runs are byte-identical.
struct CheckReport {
  std::string check;
  Json scope = Json::object();
  long long cases = 0;
  std::vector<Json> violations;
  bool pass = true;
  double wall_time = 0.0;

  void add_violation(Json v);
  // Associative merge of two reports for the same check.
  void merge(const CheckReport& other);
};

Json to_json(const CheckReport& r);
Json to_json(const std::vector<CheckReport>& rs);

// |P(lambda)| against the Weyl dimension formula, the crystal character
// against Freudenthal, plus validate_mv on every element.
CheckReport check_oracle_gate(const RootSystemPtr& rs, const DominantLabels& lambda);

// Crystal axioms, f_j via the phi shortcut vs the hull cutoff, and f_j
// computed on every j-initial word.
CheckReport check_crystal_axioms(const RootSystemPtr& rs, const DominantLabels& lambda);

// P subset P1 + P2 for every pair, in BZ form and in the lattice form
// w^{-1} mu_w - w^{-1}(mu1_w + mu2_w) in Q^vee_+.
CheckReport check_main_theorem(const RootSystemPtr& rs, const DominantLabels& l1, const DominantLabels& l2);

// Crystal decomposition vs character decomposition.
CheckReport check_decomposition(const RootSystemPtr& rs, const DominantLabels& l1, const DominantLabels& l2);

// Bruhat-pair inequality z^{-1} mu_z >= x^{-1} mu_x and the parabolic form
// M_{z Lambda_j} >= M_{x Lambda_j} whenever zW_j <= xW_j.
CheckReport check_key_inequalities(const MVPolytope& p);
CheckReport check_key_inequalities(const RootSystemPtr& rs, const DominantLabels& lambda);

// Vertex formula through max-lowering cascades on every reduced expression of
// every x, and the Kashiwara/BZ identity on every reduced word of w0.
CheckReport check_ehrig_kamkas(const MVPolytope& p);
CheckReport check_ehrig_kamkas(const RootSystemPtr& rs, const DominantLabels& lambda);

// wt(f^{c_k}..f^{c_1} P) >= wt(f^max..f^max P) over the feasible c-lattice
// for every reduced expression of every x. budget = 0 means unlimited;
// otherwise at most `budget` c-vectors per expression are tried.
CheckReport check_prop_key(const MVPolytope& p, long long budget = 0);
CheckReport check_prop_key(const RootSystemPtr& rs, const DominantLabels& lambda, long long budget = 0);

// f_j P contains P, and mu_w(P) - mu_w(P2) lies in Omega(lambda1).
CheckReport check_fact_and_omega(const RootSystemPtr& rs, const DominantLabels& l1, const DominantLabels& l2);

// Braid-move involutions on random vectors and path independence of the
// transition maps on crystal elements.
struct CoherenceOptions {
  std::uint64_t seed = 1;
  int random_vectors = 1000;
  int max_entry = 100;
  // 0 checks every element, otherwise this many seeded samples.
  int samples = 0;
  int walk_steps = 8;
};
CheckReport check_tropical_coherence(const RootSystemPtr& rs, const DominantLabels& lambda,
                                     const CoherenceOptions& opts);

// The pinned default scopes; `verify all` runs exactly these.
struct Options {
  std::uint64_t seed = 1;
  long long budget = 0;
  Bounds bounds;
};
std::vector<CheckReport> run_default_scopes(const Options& opts, const std::string& type_filter = "");

}  // namespace mv::harness
