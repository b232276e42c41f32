#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qtk/intlattice.hpp"

using namespace qtk;

namespace {

IntMatrix M(std::vector<IntVector> rows, std::size_t cols) { return IntMatrix::from_rows(rows, cols); }

bool diagonal_chain(const IntMatrix& s) {
  Integer prev = 1;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (i != j && s(i, j) != 0) return false;
      if (i == j) {
        if (s(i, i) < 0) return false;
        if (prev == 0 && s(i, i) != 0) return false;
        if (prev != 0 && s(i, i) % prev != 0) return false;
        prev = s(i, i);
      }
    }
  return true;
}

}  // namespace

TEST_SUITE("intlattice") {
  TEST_CASE("hermite normal form examples") {
    auto h = hnf(M({{2, 4}, {1, 3}}, 2));
    CHECK(h.H == M({{1, 1}, {0, 2}}, 2));
    CHECK(h.U * M({{2, 4}, {1, 3}}, 2) == h.H);
    CHECK(hnf(M({{0, 0}, {0, 0}}, 2)).H == M({{0, 0}, {0, 0}}, 2));
  }

  TEST_CASE("hermite form against textbook reduction") {
    oracle::Random rnd(3);
    for (int t = 0; t < 150; ++t) {
      IntMatrix a = rnd.matrix(rnd.integer(1, 4), rnd.integer(1, 4));
      auto h = hnf(a);
      CHECK(h.U * a == h.H);
      CHECK(oracle::unimodular(h.U));
      CHECK(h.H == oracle::textbook_hnf(a));
    }
  }

  TEST_CASE("smith decomposition identities and invariant factors") {
    oracle::Random rnd(5);
    for (int t = 0; t < 150; ++t) {
      IntMatrix a = rnd.matrix(rnd.integer(1, 4), rnd.integer(1, 4));
      auto s = snf(a);
      CHECK(s.U * a * s.V == s.S);
      CHECK(oracle::unimodular(s.U));
      CHECK(oracle::unimodular(s.V));
      CHECK(diagonal_chain(s.S));
      std::vector<Integer> diag;
      for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        if (s.S(i, i) != 0) diag.push_back(s.S(i, i));
      CHECK(diag == oracle::invariant_factors(a));
    }
    auto s = snf(M({{2, 0}, {0, 3}}, 2));
    CHECK(s.S == M({{1, 0}, {0, 6}}, 2));
  }

  TEST_CASE("determinant against cofactor expansion") {
    oracle::Random rnd(8);
    for (int t = 0; t < 100; ++t) {
      std::size_t n = rnd.integer(1, 5);
      IntMatrix a = rnd.matrix(n, n, 9);
      CHECK(determinant(a) == oracle::det_of(a));
    }
  }

  TEST_CASE("int_solve re-substitution and infeasibility") {
    oracle::Random rnd(9);
    for (int t = 0; t < 200; ++t) {
      IntMatrix a = rnd.matrix(rnd.integer(1, 4), rnd.integer(1, 5));
      IntVector x(a.cols());
      for (auto& v : x) v = rnd.integer(-5, 5);
      IntVector b = a * x;
      auto sol = int_solve(a, b);
      REQUIRE(sol.has_value());
      CHECK(a * *sol == b);
    }
    CHECK_FALSE(int_solve(M({{2}}, 1), {1}).has_value());
    CHECK_FALSE(int_solve(M({{2, 4}, {1, 1}}, 2), {1, 0}).has_value());
    // Box oracle: with A = [[2,3]] every integer right-hand side is reachable.
    for (long b = -6; b <= 6; ++b) CHECK(int_solve(M({{2, 3}}, 2), {b}).has_value());
  }

  TEST_CASE("left kernel is annihilating and saturated") {
    oracle::Random rnd(10);
    for (int t = 0; t < 100; ++t) {
      IntMatrix a = rnd.matrix(rnd.integer(2, 5), rnd.integer(1, 3), 4);
      IntMatrix k = left_kernel(a);
      for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
          Integer s = 0;
          for (std::size_t r = 0; r < a.rows(); ++r) s += k(i, r) * a(r, j);
          CHECK(s == 0);
        }
      std::size_t rank = oracle::invariant_factors(a).size();
      CHECK(k.rows() == a.rows() - rank);
      if (k.rows() > 0)
        for (const auto& f : oracle::invariant_factors(k)) CHECK(f == 1);
    }
  }

  TEST_CASE("quotient invariants") {
    auto g = quotient_invariants(M({{2, 0}, {0, 3}}, 2), IntMatrix(0, 2));
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<Integer>{6});
    auto h = quotient_invariants(M({{1, 1, 1}}, 3), IntMatrix(0, 3));
    CHECK(h.free_rank == 2);
    CHECK(h.torsion.empty());
    auto q = quotient_map(M({{2, 0}, {0, 3}}, 2), 2);
    // Coset enumeration: the 6 points of [0,2) x [0,3) give 6 distinct classes.
    std::set<IntVector> classes;
    for (long x = 0; x < 2; ++x)
      for (long y = 0; y < 3; ++y) classes.insert(q.classify({x, y}));
    CHECK(classes.size() == 6);
    CHECK(q.classify({2, 3}) == q.classify({0, 0}));
    CHECK(AbelianGroupInvariants{2, {}}.str() == "Z^2");
    CHECK(AbelianGroupInvariants{}.str() == "0");
  }
}
