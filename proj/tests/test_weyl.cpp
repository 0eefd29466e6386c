#include <random>
#include <set>

#include "doctest.h"
#include "mv/errors.hpp"
#include "mv/weyl.hpp"
#include "support.hpp"

using namespace mv;
using mv::test::elem;

namespace {

// z <= x iff some reduced word of x has a subword that is a reduced word of z.
// Brute force over subsets of one reduced word of x (subword property).
bool bruhat_by_subwords(const WeylGroup& W, WeylElement z, WeylElement x) {
  const Word& wx = W.reduced_word(x);
  const std::size_t k = wx.size();
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Word sub;
    for (std::size_t t = 0; t < k; ++t)
      if (mask & (1u << t)) sub.push_back(wx[t]);
    if (W.from_word(sub) == z) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("action examples in A2") {
  WeylGroup W(parse_type("A2"));
  const HVector h1{1, 0}, h2{0, 1};
  CHECK(W.act(elem(W, {1}), h1) == -h1);
  CHECK(W.act(elem(W, {2}), h1) == h1 + h2);
  CHECK(W.act(elem(W, {2, 1}), h2) == h1);
  CHECK(W.act(W.identity(), h1) == h1);
}

TEST_CASE("group orders") {
  CHECK(WeylGroup(parse_type("A1")).order() == 2);
  WeylGroup a2(parse_type("A2"));
  CHECK(a2.order() == 6);
  CHECK(a2.length(a2.longest()) == 3);
  CHECK(WeylGroup(parse_type("A3")).order() == 24);
  CHECK(WeylGroup(parse_type("D4")).order() == 192);
  CHECK(WeylGroup(parse_type("A4")).order() == 120);
  CHECK_THROWS_AS(WeylGroup(parse_type("A3"), 10), SizeError);
}

TEST_CASE("w0 is the unique element of maximal length") {
  for (auto type : {"A1", "A2", "A3", "D4"}) {
    WeylGroup W(parse_type(type));
    int count = 0;
    for (WeylElement w : W.elements())
      if (W.length(w) == W.root_datum().longest_length()) ++count;
    CHECK(count == 1);
    CHECK(W.length(W.longest()) == W.root_datum().longest_length());
  }
}

TEST_CASE("Bruhat order examples") {
  WeylGroup W(parse_type("A2"));
  for (WeylElement w : W.elements()) CHECK(W.bruhat_leq(W.identity(), w));
  CHECK_FALSE(W.bruhat_leq(elem(W, {1}), elem(W, {2})));
  CHECK(W.bruhat_leq(elem(W, {1}), elem(W, {1, 2})));
  CHECK(W.bruhat_leq(elem(W, {1, 2}), W.longest()));
  CHECK_FALSE(W.bruhat_leq(elem(W, {1, 2}), elem(W, {2, 1})));
}

TEST_CASE("Bruhat order agrees with the subword characterization") {
  for (auto type : {"A2", "A3"}) {
    WeylGroup W(parse_type(type));
    for (WeylElement z : W.elements())
      for (WeylElement x : W.elements()) CHECK(W.bruhat_leq(z, x) == bruhat_by_subwords(W, z, x));
  }
}

TEST_CASE("minimal coset representatives") {
  WeylGroup W(parse_type("A2"));
  const ParabolicSubset J{0};  // generated by s2, the stabilizer of Lambda_1
  CHECK(W.min_coset_rep(W.identity(), J) == W.identity());
  CHECK(W.min_coset_rep(W.identity(), ParabolicSubset{1}) == W.identity());
  CHECK(W.min_coset_rep(W.longest(), J) == elem(W, {2, 1}));
  CHECK(W.quotient_leq(elem(W, {1}), W.longest(), J));
  CHECK(W.min_coset_rep(elem(W, {1, 2}), J) == elem(W, {1}));
}

TEST_CASE("minimal coset representatives are minimal in their coset") {
  for (auto type : {"A3", "D4"}) {
    WeylGroup W(parse_type(type));
    for (int j = 0; j < W.rank(); ++j) {
      const ParabolicSubset J{j};
      Weight lam(W.rank(), 0);
      lam[j] = 1;
      for (WeylElement w : W.elements()) {
        const WeylElement u = W.min_coset_rep(w, J);
        CHECK(W.act(u, lam) == W.act(w, lam));
        for (WeylElement v : W.elements())
          if (W.act(v, lam) == W.act(w, lam)) CHECK(W.length(u) <= W.length(v));
      }
    }
  }
}

TEST_CASE("Bruhat order is the intersection of the parabolic quotient orders") {
  for (auto type : {"A2", "A3"}) {
    WeylGroup W(parse_type(type));
    for (WeylElement z : W.elements()) {
      for (WeylElement x : W.elements()) {
        bool all = true;
        for (int j = 0; j < W.rank(); ++j) all = all && W.quotient_leq(z, x, ParabolicSubset{j});
        CHECK(W.bruhat_leq(z, x) == all);
      }
    }
  }
}

TEST_CASE("length changes by one under simple reflections") {
  for (auto type : {"A3", "D4"}) {
    WeylGroup W(parse_type(type));
    for (WeylElement w : W.elements()) {
      CHECK(static_cast<int>(W.reduced_word(w).size()) == W.length(w));
      CHECK(W.from_word(W.reduced_word(w)) == w);
      for (int i = 0; i < W.rank(); ++i) {
        CHECK(std::abs(W.length(W.right_mul(w, i)) - W.length(w)) == 1);
        CHECK(std::abs(W.length(W.left_mul(i, w)) - W.length(w)) == 1);
      }
    }
  }
}

TEST_CASE("the action is a group action") {
  std::mt19937_64 rng(7);
  for (auto type : {"A3", "D4"}) {
    WeylGroup W(parse_type(type));
    const auto elems = W.elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    for (int t = 0; t < 200; ++t) {
      const WeylElement u = elems[pick(rng)], w = elems[pick(rng)];
      HVector v(W.rank());
      for (int i = 0; i < W.rank(); ++i) v[i] = Rational(num(rng), den(rng));
      CHECK(W.act(W.multiply(u, w), v) == W.act(u, W.act(w, v)));
      CHECK(W.act(W.inverse(w), W.act(w, v)) == v);
      Weight g(W.rank());
      for (int& x : g) x = num(rng);
      CHECK(W.act(W.multiply(u, w), g) == W.act(u, W.act(w, g)));
      // The pairing is W-invariant.
      CHECK(W.root_datum().pair(W.act(w, v), W.act(w, g)) == W.root_datum().pair(v, g));
    }
  }
}

TEST_CASE("w0 squares to e and sends dominant to antidominant") {
  for (auto type : {"A1", "A2", "A3", "D4"}) {
    WeylGroup W(parse_type(type));
    CHECK(W.multiply(W.longest(), W.longest()) == W.identity());
    const auto& rd = W.root_datum();
    std::vector<int> m(rd.rank());
    for (int j = 0; j < rd.rank(); ++j) m[j] = j + 1;
    const HVector low = W.act(W.longest(), rd.coroot_coords(DominantLabels(m)));
    for (int j = 0; j < rd.rank(); ++j) CHECK(rd.pair_alpha(low, j) < 0);
  }
}

TEST_CASE("reduced words and keys") {
  WeylGroup W(parse_type("A3"));
  std::set<Weight> keys;
  for (WeylElement w : W.elements()) keys.insert(W.key(w));
  CHECK(keys.size() == W.order());
  CHECK(W.is_reduced(mv::test::word({1, 2, 1})));
  CHECK_FALSE(W.is_reduced(mv::test::word({1, 1})));
  CHECK_FALSE(W.is_reduced(mv::test::word({1, 2, 1, 2})));
}
