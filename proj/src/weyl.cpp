#include "mv/weyl.hpp"

#include <algorithm>
#include <deque>

#include "mv/errors.hpp"

namespace mv {

namespace {

// s_i(gamma) = gamma - <h_i, gamma> alpha_i, where alpha_i = (a_ki)_k.
Weight reflect_weight(const RootDatum& rd, int i, const Weight& g) {
  Weight out = g;
  const int c = g[i];
  if (c == 0) return out;
  for (int k = 0; k < rd.rank(); ++k) out[k] -= c * rd.cartan(k, i);
  return out;
}

}  // namespace

WeylGroup::WeylGroup(const RootDatum& rd, std::size_t bound) : rd_(rd) {
  const int r = rd_.rank();
  const std::size_t rr = static_cast<std::size_t>(r) * r;

  std::vector<int> id(rr, 0);
  for (int i = 0; i < r; ++i) id[i * r + i] = 1;

  Weight rho(r, 1);
  keys_.push_back(rho);
  index_.emplace(rho, 0);
  length_.push_back(0);
  words_.push_back({});
  coroot_matrix_.push_back(id);
  weight_matrix_.push_back(id);
  left_.assign(r, {});

  // Breadth-first closure under left multiplication; BFS depth is length.
  for (std::size_t cur = 0; cur < keys_.size(); ++cur) {
    for (int i = 0; i < r; ++i) {
      Weight k = reflect_weight(rd_, i, keys_[cur]);
      auto [it, inserted] = index_.emplace(k, static_cast<int>(keys_.size()));
      if (inserted) {
        if (keys_.size() >= bound) {
          throw SizeError("Weyl group of " + rd_.name() + " exceeds bound " + std::to_string(bound));
        }
        keys_.push_back(std::move(k));
        length_.push_back(length_[cur] + 1);
        Word w{i};
        w.insert(w.end(), words_[cur].begin(), words_[cur].end());
        words_.push_back(std::move(w));

        // Left-multiply both matrices by s_i.
        std::vector<int> cm = coroot_matrix_[cur];
        for (int c = 0; c < r; ++c) {
          int s = 0;
          for (int k2 = 0; k2 < r; ++k2) s += cm[k2 * r + c] * rd_.cartan(k2, i);
          cm[i * r + c] -= s;
        }
        coroot_matrix_.push_back(std::move(cm));
        std::vector<int> wm = weight_matrix_[cur];
        for (int c = 0; c < r; ++c) {
          const int gi = wm[i * r + c];
          if (gi == 0) continue;
          for (int k2 = 0; k2 < r; ++k2) wm[k2 * r + c] -= gi * rd_.cartan(k2, i);
        }
        weight_matrix_.push_back(std::move(wm));
      }
    }
  }

  const std::size_t n = keys_.size();
  for (int i = 0; i < r; ++i) {
    left_[i].resize(n);
    for (std::size_t w = 0; w < n; ++w) left_[i][w] = find(reflect_weight(rd_, i, keys_[w]));
  }

  right_.assign(n, std::vector<WeylElement>(r));
  for (std::size_t w = 0; w < n; ++w) {
    for (int i = 0; i < r; ++i) {
      Weight si_rho = reflect_weight(rd_, i, rho);
      right_[w][i] = find(act(WeylElement(static_cast<int>(w)), si_rho));
    }
  }

  inverse_.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    Word rev(words_[w].rbegin(), words_[w].rend());
    inverse_[w] = from_word(rev);
  }

  auto it = std::max_element(length_.begin(), length_.end());
  longest_ = WeylElement(static_cast<int>(it - length_.begin()));
  if (*it != rd_.longest_length() || std::count(length_.begin(), length_.end(), *it) != 1) {
    throw InvariantError("longest element of " + rd_.name() + " has unexpected length");
  }
}

std::vector<WeylElement> WeylGroup::elements() const {
  std::vector<WeylElement> out;
  out.reserve(order());
  for (std::size_t w = 0; w < order(); ++w) out.emplace_back(static_cast<int>(w));
  return out;
}

WeylElement WeylGroup::find(const Weight& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) throw InvariantError("no Weyl group element with the given key");
  return WeylElement(it->second);
}

WeylElement WeylGroup::multiply(WeylElement u, WeylElement w) const {
  const Word& word = words_[u.index()];
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = left_mul(*it, w);
  return w;
}

WeylElement WeylGroup::from_word(std::span<const int> word) const {
  WeylElement w = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rank()) throw ContractError("letter out of range in word");
    w = left_mul(*it, w);
  }
  return w;
}

bool WeylGroup::is_reduced(std::span<const int> word) const {
  WeylElement w = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) return false;
    WeylElement next = right_mul(w, i);
    if (length(next) != length(w) + 1) return false;
    w = next;
  }
  return true;
}

HVector WeylGroup::act(WeylElement w, const HVector& v) const {
  const int r = rank();
  const auto& m = coroot_matrix_[w.index()];
  HVector out(r);
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < r; ++c)
      if (m[i * r + c] != 0) out[i] += v[c] * m[i * r + c];
  return out;
}

Weight WeylGroup::act(WeylElement w, const Weight& gamma) const {
  const int r = rank();
  const auto& m = weight_matrix_[w.index()];
  Weight out(r, 0);
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < r; ++c) out[i] += m[i * r + c] * gamma[c];
  return out;
}

HVector WeylGroup::reflect(int i, const HVector& v) const {
  HVector out = v;
  out[i] -= rd_.pair_alpha(v, i);
  return out;
}

bool WeylGroup::bruhat_leq(WeylElement z, WeylElement x) const {
  // Lifting property with the smallest left descent of x.
  while (true) {
    if (z == x) return true;
    if (length(z) >= length(x)) return false;
    int i = 0;
    while (!has_left_descent(x, i)) ++i;
    if (has_left_descent(z, i)) z = left_mul(i, z);
    x = left_mul(i, x);
  }
}

WeylElement WeylGroup::min_coset_rep(WeylElement w, ParabolicSubset J) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank(); ++i) {
      if (J.contains(i) && has_right_descent(w, i)) {
        w = right_mul(w, i);
        changed = true;
      }
    }
  }
  return w;
}

}  // namespace mv
