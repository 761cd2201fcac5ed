#include "doctest.h"
#include "oracles.hpp"
#include "rlw/catalog.hpp"
#include "rlw/io.hpp"
#include "rlw/properties.hpp"
#include "rlw/term.hpp"

using namespace rlw;

namespace {
  Elem eval(Algebra const& A, std::string const& text, std::vector<Elem> const& env) {
    std::vector<std::string> vars;
    Term                     t = Term::parse(text, vars);
    return eval_term(A, t, env);
  }

  ErrorKind kind_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Usage;
  }
}  // namespace

TEST_CASE("loading the Goedel 3-chain") {
  Algebra G = parse_algebra(serialize(goedel_chain(3)));
  CHECK(G.size() == 3);
  CHECK(G.unit() == 2);
  for (Elem x = 0; x < 3; ++x) {
    for (Elem y = 0; y < 3; ++y) {
      CHECK(G.mult(x, y) == std::min(x, y));
    }
  }
}

TEST_CASE("one-element algebra is valid") {
  Algebra T = parse_algebra(R"({"format":"rlw-algebra/1","name":"t","size":1,"leq":"chain","unit":0,"mult":[[0]],"constants":{}})");
  CHECK(T.size() == 1);
  CHECK(T.ldiv(0, 0) == 0);
  CHECK(T.rdiv(0, 0) == 0);
  CHECK(T.meet(0, 0) == 0);
}

namespace {
  // On a finite chain a monoid table is residuated iff it is monotone and
  // absorbs the bottom in each argument.
  bool valid_chain_table(Table const& t, int n, Elem u) {
    for (Elem x = 0; x < n; ++x) {
      if (t(u, x) != x || t(x, u) != x || t(x, 0) != 0 || t(0, x) != 0) {
        return false;
      }
      for (Elem y = 0; y < n; ++y) {
        if (y + 1 < n && (t(x, y) > t(x, y + 1) || t(y, x) > t(y + 1, x))) {
          return false;
        }
        for (Elem z = 0; z < n; ++z) {
          if (t(t(x, y), z) != t(x, t(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("single mutations of a Goedel table are rejected unless still valid") {
  for (int m : {3, 4}) {
    Algebra G        = goedel_chain(m);
    int     accepted = 0;
    for (Elem x = 0; x < m; ++x) {
      for (Elem y = 0; y < m; ++y) {
        for (Elem v = 0; v < m; ++v) {
          if (v == G.mult(x, y)) {
            continue;
          }
          Table t = G.mult_table();
          t(x, y) = v;
          if (valid_chain_table(t, m, G.unit())) {
            ++accepted;
            CHECK(oracle::residuated(Algebra("ok", Order::chain(m), G.unit(), t, G.constants())));
          } else {
            ErrorKind k = kind_of([&] { Algebra("bad", Order::chain(m), G.unit(), t, G.constants()); });
            CHECK((k == ErrorKind::NotResiduated || k == ErrorKind::NotAMonoid));
          }
        }
      }
    }
    // x*x = bot at the middle of G_3 gives the 3-element MV chain
    CHECK(accepted >= 1);
  }
  Table t = goedel_chain(3).mult_table();
  t(0, 2) = 1;
  CHECK_THROWS_AS(Algebra("bad", Order::chain(3), 2, t), Error);
}

TEST_CASE("malformed files and bad constants") {
  CHECK(kind_of([] { parse_algebra("{not json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_algebra(R"({"format":"rlw-algebra/1","name":"x","size":2,"leq":"chain","unit":1,"mult":[[0,0]],"constants":{}})"); })
        == ErrorKind::ParseError);
  // bot not the least element
  CHECK(kind_of([] {
          parse_algebra(R"({"format":"rlw-algebra/1","name":"x","size":2,"leq":"chain","unit":1,"mult":[[0,0],[0,1]],"constants":{"bot":1}})");
        })
        == ErrorKind::BadConstant);
  // the four-element diamond without a top-bottom pair is fine, two
  // incomparable maximal elements are not a lattice
  CHECK(kind_of([] {
          parse_algebra(R"({"format":"rlw-algebra/1","name":"x","size":3,"leq":[[1,1,1],[0,1,0],[0,0,1]],"unit":1,"mult":[[0,0,0],[0,1,2],[0,2,2]],"constants":{}})");
        })
        == ErrorKind::NotALattice);
}

TEST_CASE("canonical files round trip bit-exactly") {
  for (auto const& A : catalog_up_to(7)) {
    std::string s = serialize(A);
    CHECK(serialize(parse_algebra(s)) == s);
  }
}

TEST_CASE("term evaluation") {
  Algebra G = goedel_chain(3);
  CHECK(eval(G, "x -> y", {0, 1}) == G.unit());
  CHECK(eval(G, "x -> y", {1, 0}) == 0);
  for (auto const& A : catalog_up_to(5)) {
    for (Elem a = 0; a < A.size(); ++a) {
      CHECK(eval(A, "e * x", {a}) == a);
    }
  }
  // S_4 = {-2,-1,1,2}: -2 * 2 = -2
  Algebra S = sugihara_chain(4);
  CHECK(eval(S, "x * y", {0, 3}) == 0);
  CHECK(eval(S, "x^2", {3}) == 3);
  CHECK(eval(S, "~x", {0}) == S.ldiv(0, *S.constants().f));
  CHECK_THROWS_AS(eval(G, "x * f", {0}), Error);
}

TEST_CASE("arrow is rejected on non-commutative algebras") {
  Algebra A = make_figure("strictsimp");
  CHECK(kind_of([&] { check_identity(A, "x -> y = x \\ y"); }) == ErrorKind::BadTerm);
}

TEST_CASE("identity checking with witnesses") {
  CHECK(check_identity(goedel_chain(3), "x*y = y*x").holds);
  for (auto const& A : catalog_up_to(5)) {
    CHECK(check_identity(A, "x = x").holds);
  }
  Algebra P = make_figure("strictsimp");
  auto    r = check_identity(P, "x*y = y*x");
  REQUIRE_FALSE(r.holds);
  CHECK(P.mult(r.witness[0], r.witness[1]) != P.mult(r.witness[1], r.witness[0]));
  // guards restrict variables to an interval
  Algebra S = sugihara_chain(5);
  CHECK_FALSE(check_identity(S, "x <= e").holds);
  CHECK(check_identity(S, "x <= e where x in [#0, e]").holds);
  CHECK_FALSE(check_identity(S, "x <= e where x in [#0, #3]").holds);
}

TEST_CASE("property profiles") {
  auto s3 = property_profile(sugihara_chain(3));
  CHECK(s3.commutative);
  CHECK(s3.idempotent);
  CHECK(s3.semilinear);
  CHECK(s3.involutive_f.value());

  auto t = property_profile(Algebra());
  CHECK(t.commutative);
  CHECK(t.idempotent);
  CHECK(t.integral);
  CHECK(t.semilinear);
  CHECK(t.admissible);
  CHECK(t.lower_involutive);
  CHECK(t.square_increasing);
  CHECK(t.square_decreasing);

  Algebra A1 = make_figure("A1");
  CHECK(property_profile(A1).square_increasing);
  CHECK(is_knotted(A1, 1, 2));
  CHECK(is_n_potent(A1, 3));
}

TEST_CASE("residuation and Galois laws on the catalog") {
  for (auto const& A : catalog_up_to(7)) {
    CAPTURE(A.name());
    CHECK(oracle::residuated(A));
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < A.size(); ++y) {
        CHECK(A.leq(y, A.ldiv(x, A.mult(x, y))));
        CHECK(A.leq(A.mult(x, A.ldiv(x, y)), y));
      }
    }
  }
}

TEST_CASE("fixed points of x -> x\\d on chains") {
  for (auto const& A : catalog_up_to(8)) {
    if (!A.is_chain()) {
      continue;
    }
    for (Elem d = 0; d < A.size(); ++d) {
      int fixed = 0;
      for (Elem x = 0; x < A.size(); ++x) {
        fixed += A.ldiv(x, d) == x;
      }
      CHECK(fixed <= 1);
    }
    CHECK(property_profile(A).semilinear);
  }
}
