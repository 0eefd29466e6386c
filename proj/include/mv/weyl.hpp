#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "mv/cartan.hpp"

namespace mv {

using Word = std::vector<int>;

// Handle to an element of a WeylGroup. Indices are assigned in breadth-first
// order from the identity, so index 0 is always e and lengths are
// nondecreasing in the index.
class WeylElement {
 public:
  constexpr WeylElement() = default;
  constexpr explicit WeylElement(int index) : index_(index) {}
  constexpr int index() const { return index_; }
  friend constexpr auto operator<=>(WeylElement, WeylElement) = default;

 private:
  int index_ = 0;
};

// The stabilizer W_{Lambda_j}: generated by s_i for i != j.
struct ParabolicSubset {
  int j;
  bool contains(int i) const { return i != j; }
};

class WeylGroup {
 public:
  static constexpr std::size_t kDefaultBound = 1'000'000;

  explicit WeylGroup(const RootDatum& rd, std::size_t bound = kDefaultBound);

  const RootDatum& root_datum() const { return rd_; }
  int rank() const { return rd_.rank(); }
  std::size_t order() const { return keys_.size(); }

  WeylElement identity() const { return WeylElement(0); }
  WeylElement longest() const { return longest_; }
  WeylElement simple(int i) const { return left_[i][0]; }
  std::vector<WeylElement> elements() const;

  // w(rho^vee) in pairing coordinates (<w rho^vee, alpha_i>)_i; the orbit is
  // regular so this determines w.
  const Weight& key(WeylElement w) const { return keys_[w.index()]; }
  WeylElement find(const Weight& key) const;

  int length(WeylElement w) const { return length_[w.index()]; }
  const Word& reduced_word(WeylElement w) const { return words_[w.index()]; }

  WeylElement left_mul(int i, WeylElement w) const { return left_[i][w.index()]; }
  WeylElement right_mul(WeylElement w, int i) const { return right_[w.index()][i]; }
  WeylElement inverse(WeylElement w) const { return inverse_[w.index()]; }
  WeylElement multiply(WeylElement u, WeylElement w) const;
  WeylElement from_word(std::span<const int> word) const;
  bool is_reduced(std::span<const int> word) const;

  bool has_left_descent(WeylElement w, int i) const { return length(left_mul(i, w)) < length(w); }
  bool has_right_descent(WeylElement w, int i) const { return length(right_mul(w, i)) < length(w); }

  // Action on h_R (coroot coordinates) and on h* (fundamental-weight coordinates).
  HVector act(WeylElement w, const HVector& v) const;
  Weight act(WeylElement w, const Weight& gamma) const;
  // s_i(v) = v - <v, alpha_i> h_i
  HVector reflect(int i, const HVector& v) const;

  bool bruhat_leq(WeylElement z, WeylElement x) const;
  WeylElement min_coset_rep(WeylElement w, ParabolicSubset J) const;
  bool quotient_leq(WeylElement z, WeylElement x, ParabolicSubset J) const {
    return bruhat_leq(min_coset_rep(z, J), min_coset_rep(x, J));
  }

 private:
  RootDatum rd_;
  std::vector<Weight> keys_;
  std::map<Weight, int> index_;
  std::vector<int> length_;
  std::vector<Word> words_;
  std::vector<std::vector<WeylElement>> left_;   // [i][w]
  std::vector<std::vector<WeylElement>> right_;  // [w][i]
  std::vector<WeylElement> inverse_;
  // Integer matrices of w on coroot and weight coordinates, row-major.
  std::vector<std::vector<int>> coroot_matrix_;
  std::vector<std::vector<int>> weight_matrix_;
  WeylElement longest_;
};

}  // namespace mv
