#include "mv/cartan.hpp"

#include <algorithm>
#include <cctype>

#include "mv/errors.hpp"

namespace mv {

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::D: return "D";
    case Series::E: return "E";
  }
  return "?";
}

Series parse_series(const std::string& name) {
  if (name == "A") return Series::A;
  if (name == "D") return Series::D;
  if (name == "E") return Series::E;
  throw ConfigError("unsupported series '" + name + "' (simply-laced A, D, E only)");
}

// ---------------------------------------------------------------- HVector

bool HVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return mv::is_integral(q); });
}

bool HVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

HVector& HVector::operator+=(const HVector& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

HVector& HVector::operator-=(const HVector& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

HVector& HVector::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

HVector HVector::operator-() const {
  HVector r(*this);
  for (auto& x : r.coords_) x = -x;
  return r;
}

std::string to_string(const HVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

// --------------------------------------------------------- DominantLabels

DominantLabels::DominantLabels(std::vector<int> labels) : labels_(std::move(labels)) {
  for (int m : labels_) {
    if (m < 0) throw ConfigError("dominant labels must be nonnegative, got " + to_string(*this));
  }
}

bool DominantLabels::is_zero() const {
  return std::all_of(labels_.begin(), labels_.end(), [](int m) { return m == 0; });
}

std::string to_string(const DominantLabels& l) {
  std::string out = "(";
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (i) out += ",";
    out += std::to_string(l[i]);
  }
  return out + ")";
}

// -------------------------------------------------------------- RootDatum

namespace {

void link(std::vector<std::vector<int>>& a, int i, int j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw InvariantError("Cartan matrix is singular");
    std::swap(m[piv], m[col]);
    Rational p = m[col][col];
    for (auto& x : m[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace

RootDatum::RootDatum(Series series, int rank, std::vector<std::vector<int>> cartan, int positive_roots)
    : series_(series),
      rank_(rank),
      cartan_(std::move(cartan)),
      inverse_(invert(cartan_)),
      num_positive_roots_(positive_roots) {}

RootDatum RootDatum::build(Series series, int rank) {
  auto fail = [&] {
    throw ConfigError("unsupported root datum " + series_name(series) + std::to_string(rank));
  };
  if (rank < 1) fail();
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  int positive = 0;
  switch (series) {
    case Series::A:
      for (int i = 0; i + 1 < rank; ++i) link(a, i, i + 1);
      positive = rank * (rank + 1) / 2;
      break;
    case Series::D:
      if (rank < 4) fail();
      for (int i = 0; i + 2 < rank; ++i) link(a, i, i + 1);
      link(a, rank - 3, rank - 1);
      positive = rank * (rank - 1);
      break;
    case Series::E:
      if (rank != 6) fail();
      // Bourbaki: 1-3-4-5-6 with 2 attached to 4.
      link(a, 0, 2);
      link(a, 2, 3);
      link(a, 3, 4);
      link(a, 4, 5);
      link(a, 1, 3);
      positive = 36;
      break;
  }
  return RootDatum(series, rank, std::move(a), positive);
}

void RootDatum::check_rank(std::size_t n, const char* what) const {
  if (n != static_cast<std::size_t>(rank_)) {
    throw ConfigError(std::string(what) + " has size " + std::to_string(n) + ", expected rank " +
                      std::to_string(rank_));
  }
}

Rational RootDatum::pair_alpha(const HVector& v, int j) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (cartan_[i][j] != 0) s += v[i] * cartan_[i][j];
  }
  return s;
}

Rational RootDatum::pair(const HVector& v, const Weight& gamma) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (gamma[i] != 0) s += v[i] * gamma[i];
  }
  return s;
}

HVector RootDatum::coroot_coords(const DominantLabels& lambda) const {
  check_rank(lambda.rank(), "dominant labels");
  HVector v(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) v[i] += inverse_[i][j] * lambda[j];
  return v;
}

std::vector<int> RootDatum::labels_of(const HVector& v) const {
  std::vector<int> out(rank_);
  for (int j = 0; j < rank_; ++j) {
    Rational p = pair_alpha(v, j);
    if (!mv::is_integral(p)) throw InvariantError("non-integral label at " + to_string(v));
    out[j] = static_cast<int>(boost::multiprecision::numerator(p));
  }
  return out;
}

bool RootDatum::dominance_ge(const HVector& v, const HVector& u) const {
  for (int i = 0; i < rank_; ++i) {
    Rational d = v[i] - u[i];
    if (d < 0 || !mv::is_integral(d)) return false;
  }
  return true;
}

RootDatum parse_type(const std::string& type) {
  if (type.size() < 2 || !std::isalpha(static_cast<unsigned char>(type[0]))) {
    throw ConfigError("bad type '" + type + "' (expected e.g. A2, D4)");
  }
  Series s = parse_series(std::string(1, static_cast<char>(std::toupper(type[0]))));
  int rank = 0;
  for (std::size_t i = 1; i < type.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(type[i]))) throw ConfigError("bad type '" + type + "'");
    rank = rank * 10 + (type[i] - '0');
    if (rank > 64) throw ConfigError("bad type '" + type + "'");
  }
  return RootDatum::build(s, rank);
}

}  // namespace mv
