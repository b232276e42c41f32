#include <doctest.h>

#include "oracles.hpp"
#include "qtk/catalog.hpp"
#include "qtk/quasilattice.hpp"

using namespace qtk;

TEST_SUITE("quasilattice") {
  TEST_CASE("membership certificates round-trip on every shipped lattice") {
    oracle::Random rnd(21);
    for (const auto& name : catalog::lattice_names()) {
      CAPTURE(name);
      Quasilattice q = catalog::lattice_by_name(name);
      for (std::size_t i = 0; i < q.size(); ++i) {
        auto c = member(q, q.generator(i));
        REQUIRE(c.has_value());
        CHECK(evaluate(q, c->coefficients) == q.generator(i));
      }
      for (int t = 0; t < 25; ++t) {
        IntVector coeffs(q.size());
        for (auto& c : coeffs) c = rnd.integer(-7, 7);
        KVector x = evaluate(q, coeffs);
        auto c = member(q, x);
        REQUIRE(c.has_value());
        CHECK(evaluate(q, c->coefficients) == x);
      }
    }
  }

  TEST_CASE("membership certificates round-trip on every shipped triple") {
    for (const auto& name : catalog::triple_names()) {
      CAPTURE(name);
      Triple t = catalog::triple_by_name(name);
      REQUIRE(t.certificates.size() == t.d());
      for (std::size_t j = 0; j < t.d(); ++j)
        CHECK(evaluate(t.lattice, t.certificates[j].coefficients) == t.polytope.halfspace(j).normal);
    }
  }

  TEST_CASE("box search agrees with member on the pentagonal lattice") {
    Quasilattice q = catalog::pentagon();
    // Every integer combination with coefficients in [-1, 1] is a member.
    std::size_t seen = 0;
    for (long m = 0; m < 243; ++m) {
      IntVector c(5);
      long r = m;
      for (auto& x : c) {
        x = r % 3 - 1;
        r /= 3;
      }
      KVector x = evaluate(q, c);
      auto cert = member(q, x);
      REQUIRE(cert.has_value());
      CHECK(evaluate(q, cert->coefficients) == x);
      ++seen;
    }
    CHECK(seen == 243);
    CHECK_FALSE(member(q, {Rational(1, 2), 0}).has_value());
    CHECK_FALSE(member(q, {FieldElem::phi() * Rational(1, 2), 0}).has_value());
    CHECK(member(q, {FieldElem::sqrt_of(5), 0}).has_value());
    CHECK(member(q, {FieldElem::phi(), 0}).has_value());
  }

  TEST_CASE("ranks and discreteness") {
    CHECK(z_rank(catalog::pentagon()) == 4);
    CHECK(z_rank(catalog::golden_line()) == 2);
    CHECK(z_rank(catalog::integer_lattice(3)) == 3);
    CHECK(z_rank(catalog::icosa_simple()) == 6);
    CHECK(z_rank(catalog::icosa_face()) == 6);
    CHECK(is_discrete(catalog::integer_lattice(2)));
    CHECK_FALSE(is_discrete(catalog::pentagon()));
    CHECK_FALSE(is_discrete(catalog::golden_line()));
    CHECK(is_discrete(Quasilattice(1, {{2}, {3}})));
  }

  TEST_CASE("pentagon relation") {
    IntMatrix r = relation_lattice(catalog::pentagon());
    REQUIRE(r.rows() == 1);
    IntVector row = r.row(0);
    if (row[0] < 0)
      for (auto& x : row) x = -x;
    CHECK(row == IntVector{1, 1, 1, 1, 1});
  }

  TEST_CASE("quotients") {
    Quasilattice g = catalog::golden_line();
    auto one = member(g, {1});
    REQUIRE(one.has_value());
    auto qp = quotient_by(g, {*one});
    CHECK(qp.invariants == AbelianGroupInvariants{1, {}});
    auto two = member(Quasilattice(1, {{1}}), {2});
    auto z2 = quotient_by(Quasilattice(1, {{1}}), {*two});
    CHECK(z2.invariants == AbelianGroupInvariants{0, {2}});
    CHECK_THROWS_AS(Quasilattice(2, {{1, 0}}), Error);
    Quasilattice s = span_of(2, {{1, 0}, {0, 1}, {FieldElem::phi(), 0}});
    CHECK(z_rank(s) == 3);
  }
}
