#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qgt/gt.hpp"
#include "qgt/schur.hpp"

using namespace qgt;

TEST_CASE("signatures") {
  CHECK_THROWS_AS(Signature({0, 2}), Error);
  Signature s{3, 1, 0, -2};
  CHECK(s.level() == 4);
  CHECK(s.size() == 2);
  CHECK(s.plus_part() == std::vector<int>{3, 1});
  CHECK(s.minus_part() == std::vector<int>{2});
  CHECK(s.str() == "(3,1,0,-2)");
  CHECK_FALSE(s.nonnegative());
  CHECK(Signature{2, 1}.padded(4) == Signature{2, 1, 0, 0});
  CHECK_THROWS_AS(s.padded(5), Error);
  CHECK(s.padded(4) == s);
  CHECK_THROWS_AS(Signature({2, 1}).padded(1), Error);
  CHECK(Signature::zeros(0).level() == 0);
  CHECK(shift(s, 2) == Signature{5, 3, 2, 0});
}

TEST_CASE("interlacing agrees with direct range enumeration") {
  for (int N = 2; N <= 4; ++N)
    for (const auto& lam : signatures_in_range(N, -2, 2)) {
      auto mine = enumerate_below(lam);
      auto ref = oracle::below(lam.coords());
      REQUIRE(mine.size() == ref.size());
      std::set<std::vector<int>> a, b(ref.begin(), ref.end());
      for (const auto& mu : mine) {
        a.insert(mu.coords());
        CHECK(interlaces(mu, lam));
      }
      CHECK(a == b);
    }
  CHECK_FALSE(interlaces(Signature{3}, Signature{2, 0}));
  CHECK_FALSE(interlaces(Signature{1, 1}, Signature{2, 0, 0}));
  CHECK_THROWS_AS(interlaces(Signature{1, 1}, Signature{2, 0}), Error);
}

TEST_CASE("path count equals the Schur function at all ones") {
  for (int N = 1; N <= 4; ++N)
    for (const auto& lam : partitions_in_box(N, 2)) {
      auto paths = enumerate_paths_to(lam);
      CHECK(Rational(static_cast<long>(paths.size())) == oracle::schur(lam, std::vector<Rational>(N, Rational(1))));
      for (const auto& p : paths) {
        CHECK(p.top() == N);
        CHECK(p.at(N) == lam);
      }
    }
  CHECK_THROWS_AS(enumerate_paths_to(Signature{2, 1, 0}, 3), Error);
}

TEST_CASE("path weight and the volume of the tableau pair") {
  QParam q(Rational(2, 5));
  for (const auto& p : enumerate_paths_to(Signature{2, 0, -1})) {
    auto [tp, tm] = tableaux_of_path(p);
    CHECK(tp.semistandard());
    CHECK(tm.semistandard());
    long below = p.at(1).size() + p.at(2).size();
    CHECK(volume(tp, 3) - volume(tm, 3) == below);
    CHECK(path_weight(p, q) == q_pow(q, below));
    CHECK(path_from_tableaux(tp, tm, 3).levels == p.levels);
  }
  Tableau bad{{1}, {{4}}};
  CHECK_THROWS_AS(volume(bad, 3), Error);
  CHECK_THROWS_AS(make_path({Signature{1}, Signature{3, 2}}), Error);
  CHECK_THROWS_AS(make_path({Signature{1}, Signature{1, 0, 0}}), Error);
}

TEST_CASE("diagram statistics") {
  auto d = diagram_stats(std::vector<int>{3, 1});
  CHECK(d.size == 4);
  CHECK(d.n == 1);
  CHECK(d.n_prime == 3);
  CHECK(d.transpose == std::vector<int>{2, 1, 1});
  CHECK(d.hooks == std::vector<std::vector<int>>{{4, 2, 1}, {1}});
  CHECK(d.contents == std::vector<std::vector<int>>{{0, 1, 2}, {-1}});
  CHECK(transpose({2, 2}) == std::vector<int>{2, 2});
  CHECK(as_partition({2, 1, 0, 0}) == std::vector<int>{2, 1});
}

TEST_CASE("enumerations of boxes and ranges") {
  auto box = partitions_in_box(2, 2);
  CHECK(box.size() == 6);
  for (std::size_t i = 1; i < box.size(); ++i) CHECK(graded_less(box[i - 1], box[i]));
  CHECK(signatures_in_range(2, -1, 1).size() == 6);
  auto above = signatures_above(Signature{1, 0}, 2);
  CHECK(above.size() == 5);  // (1,0) (1,1) (2,0) (2,1) (2,2)
  for (const auto& s : above) CHECK(dominates(s, Signature{1, 0}));
  CHECK(contained(Signature{1}, Signature{2, 1}));
  CHECK_FALSE(contained(Signature{2, 2}, Signature{3, 1}));
}

TEST_CASE("lozenge coordinates strictly decrease along a level") {
  auto paths = enumerate_paths_to(Signature{2, 1, 1});
  for (const auto& p : paths) {
    auto c = tiling_coords(p);
    CHECK(c.size() == 6);
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i].first == c[i - 1].first) CHECK(c[i].second < c[i - 1].second);
  }
}
