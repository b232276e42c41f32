#pragma once

// Integer matrices: Hermite and Smith normal forms, integer solvability and
// invariant factors of finitely generated abelian groups.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qtk/field.hpp"

namespace qtk {

using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  IntVector row(std::size_t i) const;
  std::vector<IntVector> row_list() const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& y) const;
  IntVector operator*(const IntVector& x) const;
  /// Rows of `this` followed by rows of `below`; column counts must agree.
  IntMatrix stacked(const IntMatrix& below) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free elimination (square matrices only).
Integer determinant(const IntMatrix& a);

struct HermiteForm {
  IntMatrix H;  // row HNF: positive pivots, entries above a pivot in [0, pivot)
  IntMatrix U;  // unimodular, U * A = H
};

HermiteForm hnf(const IntMatrix& a);

struct SmithDecomposition {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix S;  // diagonal, non-negative, S(i,i) | S(i+1,i+1)
  IntMatrix V;  // unimodular, cols x cols
};

SmithDecomposition snf(const IntMatrix& a);

/// x with A x = b over the integers, or std::nullopt.
std::optional<IntVector> int_solve(const IntMatrix& a, const IntVector& b);

/// Basis (rows) of {x in Z^rows : x A = 0}, saturated.
IntMatrix left_kernel(const IntMatrix& a);

struct AbelianGroupInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each >= 2, divisibility chain

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool finite() const { return free_rank == 0; }
  std::string str() const;
  friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
};

/// Coordinates of Z^k / L in the Smith basis: for each generator e_i of Z^k
/// the list of coordinates (free coordinates first, then torsion residues).
struct QuotientMap {
  AbelianGroupInvariants invariants;
  IntMatrix V;                      // change of basis from SNF of the relation matrix
  std::vector<Integer> diagonal;    // invariant factor of each Smith coordinate (0 = free)
  /// Class of x (a row vector in Z^k) as [free coords..., torsion residues...].
  IntVector classify(const IntVector& x) const;
};

/// Z^k / (rowspan(ambient) + rowspan(subgroup)); both matrices have k columns
/// (an empty matrix may have 0 rows).
AbelianGroupInvariants quotient_invariants(const IntMatrix& ambient, const IntMatrix& subgroup);
QuotientMap quotient_map(const IntMatrix& relations, std::size_t k);

std::string str(const IntVector& v);

}  // namespace qtk
