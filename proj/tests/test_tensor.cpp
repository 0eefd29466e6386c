#include <random>

#include "doctest.h"
#include "mv/errors.hpp"
#include "mv/oracle.hpp"
#include "mv/tensor.hpp"

using namespace mv;

namespace {

struct A1Fixture {
  RootSystemPtr rs = RootSystem::make("A1");
  MVPolytope plus = highest_mv(rs, DominantLabels({1}));
  MVPolytope minus = *lower(plus, 0);
};

}  // namespace

TEST_CASE("tensor statistics on A1 fixtures") {
  A1Fixture f;
  auto hh = tensor_stats({f.plus, f.plus}, 0);
  CHECK(hh.epsilon == 0);
  CHECK(hh.phi == 2);

  auto pm = tensor_stats({f.plus, f.minus}, 0);
  CHECK(pm.epsilon == 0);
  CHECK(pm.phi == 0);
  CHECK(pm.weight == HVector{0});

  // wt(b-) = -h1/2 pairs to -1 with alpha_1, so epsilon = max(1, 0 + 1) = 1.
  auto mp = tensor_stats({f.minus, f.plus}, 0);
  CHECK(mp.epsilon == 1);
  CHECK(mp.phi == 1);
}

TEST_CASE("tensor rule on A1 fixtures") {
  A1Fixture f;
  auto low = tensor_lower({f.plus, f.plus}, 0);
  REQUIRE(low.has_value());
  CHECK(*low == TensorElement{f.minus, f.plus});
  CHECK_FALSE(tensor_lower({f.plus, f.minus}, 0).has_value());
  CHECK(tensor_lower({f.minus, f.plus}, 0) == TensorElement{f.minus, f.minus});
  CHECK(tensor_raise({f.minus, f.plus}, 0) == TensorElement{f.plus, f.plus});
  CHECK(tensor_raise({f.minus, f.minus}, 0) == TensorElement{f.minus, f.plus});
  CHECK_FALSE(tensor_raise({f.plus, f.minus}, 0).has_value());
}

TEST_CASE("to_highest and extract_component on A1 fixtures") {
  A1Fixture f;
  auto h = to_highest({f.plus, f.plus});
  CHECK(h.element == TensorElement{f.plus, f.plus});
  CHECK(h.path.empty());

  auto h2 = to_highest({f.minus, f.plus});
  CHECK(h2.element == TensorElement{f.plus, f.plus});
  CHECK(h2.path == Word{0});

  auto h3 = to_highest({f.plus, f.minus});
  CHECK(h3.element == TensorElement{f.plus, f.minus});
  CHECK(h3.path.empty());
  CHECK(is_highest({f.plus, f.minus}));

  auto top = extract_component(f.plus, f.plus);
  CHECK(top.lambda == DominantLabels({2}));
  CHECK(top.polytope == highest_mv(f.rs, DominantLabels({2})));

  auto triv = extract_component(f.plus, f.minus);
  CHECK(triv.lambda == DominantLabels({0}));
  CHECK(triv.polytope.vertex(f.rs->weyl().identity()) == HVector{0});

  auto seg = extract_component(f.minus, f.plus);
  CHECK(seg.lambda == DominantLabels({2}));
  CHECK(seg.polytope.lengths() == Lengths{1});
  CHECK(seg.polytope.vertex(f.rs->weyl().identity()) == HVector{0});
  CHECK(seg.polytope.vertex(f.rs->weyl().longest()) == HVector{1});
}

TEST_CASE("extract_component on highest points") {
  auto rs = RootSystem::make("A3");
  const DominantLabels a({1, 0, 2}), b({0, 1, 1});
  auto c = extract_component(highest_mv(rs, a), highest_mv(rs, b));
  CHECK(c.lambda == DominantLabels({1, 1, 3}));
  CHECK(c.polytope == highest_mv(rs, c.lambda));
}

TEST_CASE("tensor statistics agree with string lengths") {
  auto rs = RootSystem::make("A2");
  auto c1 = enumerate_mv(rs, DominantLabels({1, 1}));
  auto c2 = enumerate_mv(rs, DominantLabels({1, 0}));
  for (const auto& p1 : c1.elements) {
    for (const auto& p2 : c2.elements) {
      const TensorElement t{p1, p2};
      for (int j = 0; j < 2; ++j) {
        const auto s = tensor_stats(t, j);
        int down = 0, up = 0;
        for (auto q = tensor_lower(t, j); q; q = tensor_lower(*q, j)) ++down;
        for (auto q = tensor_raise(t, j); q; q = tensor_raise(*q, j)) ++up;
        CHECK(s.phi == down);
        CHECK(s.epsilon == up);
        CHECK(s.weight == weight(p1) + weight(p2));
        auto l = tensor_lower(t, j);
        if (l) {
          CHECK(tensor_raise(*l, j) == t);
          CHECK(tensor_stats(*l, j).weight == s.weight - HVector::basis(2, j));
        }
        // A full lowering string drives the right factor to f_j^max.
        TensorElement end = t;
        for (int k = 0; k < s.phi; ++k) end = *tensor_lower(end, j);
        CHECK(end.right == lower_max(p2, j));
      }
    }
  }
}

TEST_CASE("decompositions") {
  auto a1 = RootSystem::make("A1");
  CHECK(decompose(a1, DominantLabels({1}), DominantLabels({1})) ==
        Decomposition{{DominantLabels({0}), 1}, {DominantLabels({2}), 1}});
  auto a2 = RootSystem::make("A2");
  CHECK(decompose(a2, DominantLabels({1, 0}), DominantLabels({0, 1})) ==
        Decomposition{{DominantLabels({0, 0}), 1}, {DominantLabels({1, 1}), 1}});
  CHECK(decompose(a2, DominantLabels({1, 0}), DominantLabels({1, 0})) ==
        Decomposition{{DominantLabels({0, 1}), 1}, {DominantLabels({2, 0}), 1}});
  CHECK(decompose(a2, DominantLabels({2, 1}), DominantLabels({0, 0})) == Decomposition{{DominantLabels({2, 1}), 1}});

  // Dimension bookkeeping.
  const DominantLabels l1({1, 1}), l2({2, 1});
  long long total = 0;
  for (const auto& [l, m] : decompose(a2, l1, l2)) {
    total += m * static_cast<long long>(oracle::weyl_dimension(a2->datum(), l));
  }
  CHECK(total == 8 * 15);

  Bounds tiny;
  tiny.crystal_size = 50;
  auto small = RootSystem::make("A2", tiny);
  CHECK_THROWS_AS(decompose(small, l1, l2), SizeError);
}

TEST_CASE("component extraction does not depend on the raising order") {
  auto rs = RootSystem::make("A3");
  auto c1 = enumerate_mv(rs, DominantLabels({1, 0, 1}));
  auto c2 = enumerate_mv(rs, DominantLabels({0, 1, 0}));
  std::mt19937_64 rng(9);
  for (const auto& p1 : c1.elements) {
    for (const auto& p2 : c2.elements) {
      auto a = extract_component(p1, p2);
      auto b = extract_component(p1, p2, rng);
      CHECK(a.lambda == b.lambda);
      CHECK(a.polytope == b.polytope);
      CHECK(weight(a.polytope) == weight(p1) + weight(p2));
    }
  }
}
