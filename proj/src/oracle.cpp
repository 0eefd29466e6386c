#include "mv/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mv/errors.hpp"

namespace mv::oracle {

namespace {

using Labels = std::vector<int>;

Labels root_labels(const RootDatum& rd, const std::vector<int>& c) {
  Labels l(rd.rank(), 0);
  for (int j = 0; j < rd.rank(); ++j)
    for (int k = 0; k < rd.rank(); ++k) l[j] += c[k] * rd.cartan(k, j);
  return l;
}

HVector to_hvector(const RootDatum& rd, const Labels& l) {
  HVector v(rd.rank());
  for (int i = 0; i < rd.rank(); ++i)
    for (int j = 0; j < rd.rank(); ++j)
      if (l[j] != 0) v[i] += rd.cartan_inverse()[i][j] * l[j];
  return v;
}

// (x, y) = x^T A^{-1} y in label coordinates.
Rational inner(const RootDatum& rd, const Labels& x, const Labels& y) {
  Rational s = 0;
  for (int i = 0; i < rd.rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rd.rank(); ++j)
      if (y[j] != 0) s += rd.cartan_inverse()[i][j] * (x[i] * y[j]);
  }
  return s;
}

Labels add(Labels a, const Labels& b, int scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

Labels dominant_rep(const RootDatum& rd, Labels l) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rd.rank(); ++i) {
      if (l[i] >= 0) continue;
      const int c = l[i];
      for (int k = 0; k < rd.rank(); ++k) l[k] -= c * rd.cartan(k, i);
      changed = true;
    }
  }
  return l;
}

Rational height(const RootDatum& rd, const Labels& l) {
  Rational h = 0;
  const HVector v = to_hvector(rd, l);
  for (const auto& c : v.coords()) h += c;
  return h;
}

// Character in label coordinates.
using LabelCharacter = std::map<Labels, Integer>;

LabelCharacter character_labels(const WeylGroup& W, const DominantLabels& lambda, std::size_t bound) {
  const RootDatum& rd = W.root_datum();
  rd.check_rank(lambda.rank(), "lambda");
  const int r = rd.rank();
  const Labels top = lambda.labels();

  // lambda - w0 lambda in the simple-root basis bounds the search box.
  const HVector span = rd.coroot_coords(lambda) - W.act(W.longest(), rd.coroot_coords(lambda));
  std::vector<int> box(r);
  for (int i = 0; i < r; ++i) box[i] = static_cast<int>(boost::multiprecision::numerator(span[i]));

  std::vector<std::pair<int, Labels>> dominant;  // (depth, labels)
  std::vector<int> k(r, 0);
  while (true) {
    Labels mu = top;
    int depth = 0;
    for (int i = 0; i < r; ++i) {
      depth += k[i];
      for (int j = 0; j < r; ++j) mu[j] -= k[i] * rd.cartan(i, j);
    }
    if (std::all_of(mu.begin(), mu.end(), [](int x) { return x >= 0; })) dominant.emplace_back(depth, mu);
    int i = 0;
    while (i < r && ++k[i] > box[i]) k[i++] = 0;
    if (i == r) break;
  }
  std::sort(dominant.begin(), dominant.end());

  const auto roots = positive_roots(rd);
  std::vector<Labels> root_l;
  for (const auto& c : roots) root_l.push_back(root_labels(rd, c));
  const Labels rho(r, 1);
  const Rational norm_top = inner(rd, add(top, rho), add(top, rho));

  std::map<Labels, Integer> dom_mult;
  for (const auto& [depth, mu] : dominant) {
    if (depth == 0) {
      dom_mult[mu] = 1;
      continue;
    }
    Rational num = 0;
    for (const Labels& beta : root_l) {
      for (int t = 1;; ++t) {
        Labels nu = add(mu, beta, t);
        auto it = dom_mult.find(dominant_rep(rd, nu));
        if (it == dom_mult.end()) break;
        num += Rational(it->second) * inner(rd, nu, beta);
      }
    }
    num *= 2;
    const Rational den = norm_top - inner(rd, add(mu, rho), add(mu, rho));
    if (den <= 0) throw InvariantError("Freudenthal denominator is not positive");
    const Rational m = num / den;
    if (!is_integral(m) || m < 0) throw InvariantError("Freudenthal produced a non-integral multiplicity");
    if (m > 0) dom_mult[mu] = boost::multiprecision::numerator(m);
  }

  LabelCharacter out;
  for (const auto& [mu, m] : dom_mult) {
    std::set<Labels> orbit;
    for (WeylElement w : W.elements()) orbit.insert(W.act(w, mu));
    for (const auto& nu : orbit) out[nu] = m;
    if (out.size() > bound) throw SizeError("character support exceeds bound " + std::to_string(bound));
  }
  return out;
}

}  // namespace

Integer Character::dimension() const {
  Integer total = 0;
  for (const auto& [w, m] : mult) total += m;
  return total;
}

Integer Character::operator[](const HVector& v) const {
  auto it = mult.find(v);
  return it == mult.end() ? Integer(0) : it->second;
}

std::vector<std::vector<int>> positive_roots(const RootDatum& rd) {
  const int r = rd.rank();
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      int p = 0;  // <beta, alpha_i^vee>
      for (int k = 0; k < r; ++k) p += c[k] * rd.cartan(i, k);
      auto d = c;
      d[i] -= p;
      if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) continue;
      if (seen.insert(d).second) queue.push_back(d);
    }
  }
  return {seen.begin(), seen.end()};
}

Integer weyl_dimension(const RootDatum& rd, const DominantLabels& lambda) {
  rd.check_rank(lambda.rank(), "lambda");
  Rational dim = 1;
  for (const auto& c : positive_roots(rd)) {
    Integer num = 0, den = 0;
    for (int k = 0; k < rd.rank(); ++k) {
      num += c[k] * (lambda[k] + 1);
      den += c[k];
    }
    dim *= Rational(num, den);
  }
  if (!is_integral(dim)) throw InvariantError("Weyl dimension formula gave a non-integer");
  return boost::multiprecision::numerator(dim);
}

Character freudenthal_multiplicities(const WeylGroup& W, const DominantLabels& lambda, std::size_t bound) {
  Character ch;
  for (const auto& [l, m] : character_labels(W, lambda, bound)) ch.mult[to_hvector(W.root_datum(), l)] = m;
  return ch;
}

std::map<DominantLabels, long long> product_decomposition(const WeylGroup& W, const DominantLabels& lambda1,
                                                          const DominantLabels& lambda2, std::size_t bound) {
  const RootDatum& rd = W.root_datum();
  const auto a = character_labels(W, lambda1, bound);
  const auto b = character_labels(W, lambda2, bound);
  LabelCharacter prod;
  for (const auto& [x, mx] : a)
    for (const auto& [y, my] : b) prod[add(x, y)] += mx * my;
  if (prod.size() > bound) throw SizeError("product character exceeds bound");

  std::map<DominantLabels, long long> out;
  while (!prod.empty()) {
    const Labels* best = nullptr;
    Rational best_h;
    for (const auto& [l, m] : prod) {
      if (!std::all_of(l.begin(), l.end(), [](int x) { return x >= 0; })) continue;
      Rational h = height(rd, l);
      if (!best || h > best_h) {
        best = &l;
        best_h = h;
      }
    }
    if (!best) throw InvariantError("product character has no dominant weight left");
    const Labels top = *best;
    const Integer m = prod[top];
    out[DominantLabels(top)] += static_cast<long long>(m);
    for (const auto& [l, c] : character_labels(W, DominantLabels(top), bound)) {
      auto it = prod.find(l);
      if (it == prod.end() || it->second < m * c) {
        throw InvariantError("negative multiplicity while decomposing a product character");
      }
      it->second -= m * c;
      if (it->second == 0) prod.erase(it);
    }
  }
  return out;
}

bool omega_membership(const WeylGroup& W, const HVector& v, const DominantLabels& lambda) {
  const RootDatum& rd = W.root_datum();
  const HVector top = rd.coroot_coords(lambda);
  if (!(v - top).is_integral()) return false;
  const HVector low = W.act(W.longest(), top);
  for (int j = 0; j < rd.rank(); ++j) {
    Weight lam(rd.rank(), 0);
    lam[j] = 1;
    const Rational bound = rd.pair_lambda(low, j);
    for (WeylElement w : W.elements()) {
      if (rd.pair(v, W.act(w, lam)) < bound) return false;
    }
  }
  return true;
}

}  // namespace mv::oracle
