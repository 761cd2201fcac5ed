#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rlw/catalog.hpp"
#include "rlw/congruence.hpp"
#include "rlw/nested_sum.hpp"
#include "rlw/properties.hpp"

using namespace rlw;

namespace {
  Algebra plain_chain(Algebra const& A) {
    return chain_copy(plain_reduct(A)).value();
  }

  bool componentwise_isomorphic(std::vector<Algebra> const& a, std::vector<Algebra> const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    for (size_t i = 0; i < a.size(); ++i) {
      if (!oracle::isomorphic(a[i], b[i])) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("single component sums") {
  for (auto const& A : catalog_up_to(6, false)) {
    if (A.is_chain()) {
      CHECK(oracle::isomorphic(nested_sum({A}), A));
    }
  }
}

TEST_CASE("three odd Sugihara components") {
  Algebra S3  = sugihara_chain(3);
  Algebra sum = nested_sum({S3, S3, S3});
  CHECK(sum.size() == 7);
  CHECK(lower_involutive(sum));
  CHECK(factor_nested_sum(sum).size() == 3);
}

TEST_CASE("sums of Lukasiewicz hoops") {
  Algebra L   = lukasiewicz_chain(2, false);
  Algebra sum = nested_sum({L, L});
  CHECK(sum.size() == 5);
  CHECK(is_integral(sum));
  CHECK(check_identity(sum, "x /\\ y = x * (x \\ y)").holds);  // divisible
  auto parts = factor_nested_sum(sum);
  CHECK(componentwise_isomorphic(parts, {L, L}));

  // with the MV chain outermost, f and bot stay in the first component
  Algebra M     = lukasiewicz_chain(2, true);
  auto    mixed = factor_nested_sum(nested_sum({M, L}));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].constants().f.has_value());
  CHECK(mixed[0].constants().bot.has_value());
  CHECK(oracle::isomorphic(mixed[0], M));
}

TEST_CASE("admissibility") {
  CHECK_FALSE(is_admissible(lukasiewicz_chain(2, false)));
  CHECK(is_admissible(Algebra()));
  CHECK(is_admissible(sugihara_chain(3)));
  // an integral component followed by a non-integral one
  CHECK_THROWS_AS(nested_sum({relative_stone_chain(2), sugihara_chain(3)}), Error);
  try {
    nested_sum({relative_stone_chain(2), plain_chain(sugihara_chain(3))});
    FAIL("expected NotAdmissible");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotAdmissible);
    CHECK(e.witness().at(0) == 0);
  }
  CHECK_THROWS_AS(nested_sum({}), Error);
  Algebra M2 = de_morgan_chain(2);
  CHECK_THROWS_AS(nested_sum({sugihara_chain(3), M2, M2}), Error);
}

TEST_CASE("order rules of the glued chain") {
  std::vector<Algebra> comps{sugihara_chain(3), plain_chain(sugihara_chain(5)), relative_stone_chain(3)};
  comps[0] = plain_chain(comps[0]);
  auto lay = nested_sum_layout(comps);
  CHECK(oracle::residuated(lay.sum));
  for (size_t i = 0; i < comps.size(); ++i) {
    for (size_t j = i + 1; j < comps.size(); ++j) {
      for (Elem x = 0; x < comps[i].size(); ++x) {
        for (Elem y = 0; y < comps[j].size(); ++y) {
          Elem sx = lay.provenance[i][x], sy = lay.provenance[j][y];
          if (x < comps[i].unit()) {
            CHECK(lay.sum.leq(sx, sy));
          }
          if (x > comps[i].unit()) {
            CHECK(lay.sum.leq(sy, sx));
          }
        }
      }
    }
  }
}

TEST_CASE("random round trips") {
  std::vector<Algebra> pool;
  for (auto const& X : catalog_up_to(5, false)) {
    if (!X.is_chain() || X.size() < 2) {
      continue;
    }
    Algebra P = plain_chain(X);
    if (factor_nested_sum(P).size() == 1
        && std::none_of(pool.begin(), pool.end(), [&](Algebra const& Y) { return oracle::isomorphic(P, Y); })) {
      pool.push_back(P);
    }
  }
  REQUIRE(pool.size() >= 4);
  std::mt19937_64 rng(7);
  int             done = 0;
  while (done < 60) {
    int                  k = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Algebra> comps;
    for (int i = 0; i < k; ++i) {
      comps.push_back(pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)]);
    }
    Algebra sum;
    try {
      sum = nested_sum(comps);
    } catch (Error const&) {
      continue;
    }
    ++done;
    CHECK(componentwise_isomorphic(factor_nested_sum(sum), comps));
  }
}

TEST_CASE("factorization reassembles every catalog chain") {
  for (auto const& X : catalog_up_to(9, false)) {
    if (!X.is_chain()) {
      continue;
    }
    CAPTURE(X.name());
    Algebra A     = chain_copy(X).value();
    auto    parts = factor_nested_sum(A);
    CHECK(oracle::isomorphic(nested_sum(parts), A));
    if (lower_involutive(A) && A.size() > 1) {
      // each component is generated by any one of its elements other than e
      for (auto const& P : parts) {
        for (Elem x = 0; x < P.size(); ++x) {
          if (x != P.unit()) {
            CHECK(static_cast<int>(subuniverse_generated(P, {x}).size()) == P.size());
          }
        }
      }
    }
  }
  CHECK(factor_nested_sum(relative_stone_chain(4)).size() == 3);
}

TEST_CASE("lower involutivity") {
  CHECK(lower_involutive(sugihara_chain(3)));
  CHECK(lower_involutive(Algebra()));
  CHECK_FALSE(lower_involutive(goedel_chain(3)));
}
