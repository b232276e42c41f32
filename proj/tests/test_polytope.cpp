#include <doctest.h>

#include "qtk/catalog.hpp"
#include "qtk/polytope.hpp"

using namespace qtk;

namespace {

PolytopeH square(long side) {
  return PolytopeH(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, -side}, {{0, -1}, -side}});
}

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("vertex counts of shipped polytopes") {
    struct Row {
      const char* name;
      std::size_t vertices;
      bool simple;
    };
    for (const Row& r : {Row{"kite", 4, true}, Row{"thick_rhombus", 4, true}, Row{"cube", 8, true},
                         Row{"tetrahedron", 4, true}, Row{"octahedron", 6, false},
                         Row{"dodecahedron", 20, true}, Row{"icosahedron", 12, false},
                         Row{"prolate_rhombohedron", 8, true}, Row{"sphere", 2, true}}) {
      CAPTURE(r.name);
      auto t = catalog::triple_by_name(r.name);
      auto rep = validate(t.polytope);
      CHECK(rep.ok());
      CHECK(rep.vertex_count == r.vertices);
      CHECK(rep.simple == r.simple);
      for (const auto& v : enumerate_vertices(t.polytope)) {
        CHECK(t.polytope.contains(v.point));
        for (auto j : v.active) CHECK(t.polytope.slack(j, v.point).is_zero());
      }
    }
  }

  TEST_CASE("vertex enumeration of a square") {
    auto vs = enumerate_vertices(square(2));
    REQUIRE(vs.size() == 4);
    CHECK(vs[0].point == KVector{0, 0});
    CHECK(vs[0].active == std::vector<std::size_t>{0, 1});
    CHECK(affine_dimension({{0, 0}, {1, 1}, {2, 2}}) == 1);
    CHECK(affine_dimension({}) == -1);
  }

  TEST_CASE("validation failures") {
    auto unbounded = validate(PolytopeH(2, {{{1, 0}, 0}, {{0, 1}, 0}}));
    CHECK_FALSE(unbounded.bounded);
    CHECK_FALSE(unbounded.ok());
    auto empty = validate(PolytopeH(1, {{{1}, 1}, {{-1}, 0}}));
    CHECK_FALSE(empty.ok());
    auto flat = validate(PolytopeH(1, {{{1}, 0}, {{-1}, 0}}));
    CHECK_FALSE(flat.full_dim);
    auto redundant = validate(PolytopeH(1, {{{1}, 0}, {{-1}, -1}, {{1}, -5}}));
    CHECK(redundant.bounded);
    CHECK_FALSE(redundant.irredundant_facets);
    CHECK(redundant.redundant == std::vector<std::size_t>{2});
    CHECK_THROWS_AS(PolytopeH(2, {{{0, 0}, 0}}), Error);
    CHECK_THROWS_AS(PolytopeH(2, {{{1}, 0}}), Error);
  }

  TEST_CASE("cut drops redundant facets and appends the new one") {
    auto r = cut(square(2), {1, 0}, 1);
    CHECK(r.plus_origin == std::vector<std::size_t>{1, 2, 3});
    CHECK(r.minus_origin == std::vector<std::size_t>{0, 1, 3});
    CHECK(r.plus.halfspaces().back() == HalfSpace{{1, 0}, 1});
    CHECK(r.minus.halfspaces().back() == HalfSpace{{-1, 0}, -1});
    CHECK(validate(r.plus).vertex_count == 4);
    CHECK(validate(r.minus).ok());
    auto diag = cut(square(2), {1, 1}, 2);
    CHECK(validate(diag.plus).vertex_count == 3);
    CHECK(validate(diag.minus).vertex_count == 3);
  }

  TEST_CASE("degenerate cuts") {
    CHECK_THROWS_AS(cut(square(2), {1, 0}, 5), DegenerateCut);
    CHECK_THROWS_AS(cut(square(2), {1, 0}, 2), DegenerateCut);
    CHECK_THROWS_AS(cut(square(2), {1, 1}, 0), DegenerateCut);
    CHECK_THROWS_AS(cut(square(2), {0, 0}, 0), Error);
  }
}
