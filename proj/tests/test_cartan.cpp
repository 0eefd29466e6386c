#include <random>

#include "doctest.h"
#include "mv/cartan.hpp"
#include "mv/errors.hpp"
#include "mv/weyl.hpp"

using namespace mv;

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(Rational(2, 3)) == "2/3");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rational("x"), ConfigError);
  CHECK_THROWS_AS(parse_rational("1.5"), ConfigError);
}

TEST_CASE("standard Cartan matrices") {
  auto a1 = RootDatum::build(Series::A, 1);
  CHECK(a1.cartan_matrix() == std::vector<std::vector<int>>{{2}});
  CHECK(a1.longest_length() == 1);

  auto a2 = RootDatum::build(Series::A, 2);
  CHECK(a2.cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(a2.longest_length() == 3);
  CHECK(RootDatum::build(Series::A, 3).longest_length() == 6);
  CHECK(RootDatum::build(Series::D, 4).longest_length() == 12);
  CHECK(RootDatum::build(Series::D, 5).longest_length() == 20);
  CHECK(RootDatum::build(Series::E, 6).longest_length() == 36);

  // D4: node 2 is the trivalent one.
  auto d4 = RootDatum::build(Series::D, 4);
  CHECK(d4.cartan(1, 0) == -1);
  CHECK(d4.cartan(1, 2) == -1);
  CHECK(d4.cartan(1, 3) == -1);
  CHECK(d4.cartan(2, 3) == 0);
}

TEST_CASE("Cartan matrix invariants") {
  for (auto [s, n] : {std::pair{Series::A, 1}, {Series::A, 2}, {Series::A, 4}, {Series::D, 4}, {Series::D, 6},
                      {Series::E, 6}}) {
    auto rd = RootDatum::build(s, n);
    for (int i = 0; i < n; ++i) {
      CHECK(rd.cartan(i, i) == 2);
      for (int j = 0; j < n; ++j) {
        CHECK(rd.cartan(i, j) == rd.cartan(j, i));
        if (i != j) CHECK((rd.cartan(i, j) == 0 || rd.cartan(i, j) == -1));
        Rational s = 0;
        for (int k = 0; k < n; ++k) s += rd.cartan_inverse()[i][k] * rd.cartan(k, j);
        CHECK(s == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("unsupported types are configuration errors") {
  CHECK_THROWS_AS(RootDatum::build(Series::D, 3), ConfigError);
  CHECK_THROWS_AS(RootDatum::build(Series::E, 7), ConfigError);
  CHECK_THROWS_AS(RootDatum::build(Series::A, 0), ConfigError);
  CHECK_THROWS_AS(parse_type("B2"), ConfigError);
  CHECK_THROWS_AS(parse_type("A"), ConfigError);
  CHECK(parse_type("D4") == RootDatum::build(Series::D, 4));
  CHECK_THROWS_AS(DominantLabels({1, -1}), ConfigError);
}

TEST_CASE("coroot coordinates") {
  auto a2 = RootDatum::build(Series::A, 2);
  CHECK(a2.coroot_coords(DominantLabels({1, 1})) == HVector{1, 1});
  CHECK(a2.coroot_coords(DominantLabels({1, 0})) == HVector{Rational(2, 3), Rational(1, 3)});
  CHECK(RootDatum::build(Series::A, 1).coroot_coords(DominantLabels({0})) == HVector{0});
  CHECK_THROWS_AS(a2.coroot_coords(DominantLabels({1})), ConfigError);
}

TEST_CASE("pairings") {
  auto a2 = RootDatum::build(Series::A, 2);
  const HVector h1{1, 0};
  CHECK(a2.pair_alpha(h1, 0) == 2);
  CHECK(a2.pair_lambda(h1, 0) == 1);
  CHECK(a2.pair_alpha(HVector{Rational(2, 3), Rational(1, 3)}, 0) == 1);
  CHECK(a2.pair_alpha(HVector{1, 1}, 0) == 1);
  CHECK(a2.pair_alpha(HVector{1, 1}, 1) == 1);
  CHECK(a2.pair(h1, Weight{0, 1}) == 0);
  CHECK(a2.pair(h1, Weight{2, -1}) == 2);
}

TEST_CASE("dominance order examples") {
  auto a2 = RootDatum::build(Series::A, 2);
  const HVector u{Rational(1, 3), 2};
  CHECK(a2.dominance_ge(u, u));
  CHECK(a2.dominance_ge(u + HVector{1, 0}, u));
  CHECK_FALSE(a2.dominance_ge(u + HVector{Rational(1, 2), 0}, u));
  CHECK_FALSE(a2.dominance_ge(u, u + HVector{1, 0}));
}

namespace {

HVector random_vector(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  HVector v(rank);
  for (int i = 0; i < rank; ++i) v[i] = Rational(num(rng), den(rng));
  return v;
}

}  // namespace

TEST_CASE("simple reflections on random rational vectors") {
  std::mt19937_64 rng(11);
  for (auto type : {"A2", "A3", "D4"}) {
    WeylGroup W(parse_type(type));
    const auto& rd = W.root_datum();
    for (int t = 0; t < 100; ++t) {
      const HVector v = random_vector(rng, rd.rank());
      for (int i = 0; i < rd.rank(); ++i) {
        const HVector expected = v - rd.pair_alpha(v, i) * HVector::basis(rd.rank(), i);
        CHECK(W.act(W.simple(i), v) == expected);
        CHECK(W.reflect(i, v) == expected);
      }
    }
  }
}

TEST_CASE("coroot_coords then pair_alpha reproduces the labels") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> label(0, 5);
  for (auto type : {"A1", "A3", "D5", "E6"}) {
    auto rd = parse_type(type);
    for (int t = 0; t < 20; ++t) {
      std::vector<int> m(rd.rank());
      for (int& x : m) x = label(rng);
      const HVector v = rd.coroot_coords(DominantLabels(m));
      for (int j = 0; j < rd.rank(); ++j) CHECK(rd.pair_alpha(v, j) == m[j]);
      CHECK(rd.labels_of(v) == m);
    }
  }
}

TEST_CASE("dominance is a partial order on random triples") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> step(-1, 2);
  auto rd = parse_type("A3");
  const HVector base = random_vector(rng, 3);
  auto near = [&] {
    HVector v = base;
    for (int i = 0; i < 3; ++i) v[i] += step(rng);
    return v;
  };
  for (int t = 0; t < 500; ++t) {
    const HVector a = near(), b = near(), c = near();
    CHECK(rd.dominance_ge(a, a));
    if (rd.dominance_ge(a, b) && rd.dominance_ge(b, a)) CHECK(a == b);
    if (rd.dominance_ge(a, b) && rd.dominance_ge(b, c)) CHECK(rd.dominance_ge(a, c));
  }
}
