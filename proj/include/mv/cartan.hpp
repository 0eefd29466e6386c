#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "mv/rational.hpp"

namespace mv {

// Simply-laced series only. Nodes follow Bourbaki numbering; in the C++ API
// node j is the 0-based index j, the external formats (JSON, CLI) use 1-based
// labels.
enum class Series { A, D, E };

std::string series_name(Series s);
Series parse_series(const std::string& name);

// A vector of the real Cartan h_R, in the simple-coroot basis {h_j}.
class HVector {
 public:
  HVector() = default;
  explicit HVector(std::size_t rank) : coords_(rank) {}
  explicit HVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  HVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static HVector basis(std::size_t rank, std::size_t j) {
    HVector v(rank);
    v.coords_[j] = 1;
    return v;
  }

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_integral() const;
  bool is_zero() const;

  HVector& operator+=(const HVector& o);
  HVector& operator-=(const HVector& o);
  HVector& operator*=(const Rational& c);
  HVector operator-() const;

  friend HVector operator+(HVector a, const HVector& b) { return a += b; }
  friend HVector operator-(HVector a, const HVector& b) { return a -= b; }
  friend HVector operator*(const Rational& c, HVector a) { return a *= c; }

  friend bool operator==(const HVector&, const HVector&) = default;
  friend bool operator<(const HVector& a, const HVector& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

std::string to_string(const HVector& v);

// Dominant labels m_j = <lambda, alpha_j>; always nonnegative.
class DominantLabels {
 public:
  DominantLabels() = default;
  explicit DominantLabels(std::vector<int> labels);

  std::size_t rank() const { return labels_.size(); }
  int operator[](std::size_t j) const { return labels_[j]; }
  const std::vector<int>& labels() const { return labels_; }
  bool is_zero() const;

  friend bool operator==(const DominantLabels&, const DominantLabels&) = default;
  friend auto operator<=>(const DominantLabels& a, const DominantLabels& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<int> labels_;
};

std::string to_string(const DominantLabels& l);

// An element of h* written in the fundamental-weight basis: entry i is
// <h_i, gamma>. Chamber weights w.Lambda_j live here with integer entries.
using Weight = std::vector<int>;

class RootDatum {
 public:
  static RootDatum build(Series series, int rank);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const { return series_name(series_) + std::to_string(rank_); }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<std::vector<Rational>>& cartan_inverse() const { return inverse_; }
  int num_positive_roots() const { return num_positive_roots_; }
  int longest_length() const { return num_positive_roots_; }

  // <v, alpha_j> = sum_i v_i a_ij
  Rational pair_alpha(const HVector& v, int j) const;
  // <v, Lambda_j> = v_j
  const Rational& pair_lambda(const HVector& v, int j) const { return v[j]; }
  // <v, gamma> for gamma in the fundamental-weight basis
  Rational pair(const HVector& v, const Weight& gamma) const;

  // Solves <v, alpha_j> = m_j, i.e. v = A^{-1} m.
  HVector coroot_coords(const DominantLabels& lambda) const;
  // Inverse of coroot_coords for any vector: (<v, alpha_j>)_j. Throws
  // InvariantError when a label is not an integer.
  std::vector<int> labels_of(const HVector& v) const;

  // v - u in Q^vee_+ (nonnegative integer coordinates).
  bool dominance_ge(const HVector& v, const HVector& u) const;

  void check_rank(std::size_t n, const char* what) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.series_ == b.series_ && a.rank_ == b.rank_;
  }

 private:
  RootDatum(Series series, int rank, std::vector<std::vector<int>> cartan, int positive_roots);

  Series series_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> inverse_;
  int num_positive_roots_;
};

// The type strings accepted on the command line: A1, A2, D4, E6, ...
RootDatum parse_type(const std::string& type);

}  // namespace mv
