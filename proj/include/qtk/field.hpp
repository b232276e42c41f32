#pragma once

// Exact arithmetic in a real quadratic field K = Q(sqrt D), with D = 0
// standing for plain Q, plus dense linear algebra over K.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtk {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// true when D is 0 or a square-free integer >= 2.
bool valid_discriminant(unsigned long D);

Rational make_rational(const Integer& num, const Integer& den);
/// Parses "p" or "p/q"; throws Error on anything else.
Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& q);

/// Element a + b*sqrt(D).  Elements with b = 0 carry D = 0 and combine freely
/// with any field; two irrational elements must share D.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long v) : a_(v) {}  // NOLINT: integer literals are field elements
  FieldElem(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  FieldElem(Rational a, Rational b, unsigned long D);

  static FieldElem sqrt_of(unsigned long D);
  /// The golden ratio (1 + sqrt 5) / 2.
  static FieldElem phi();
  /// Parses "p/q", "p/q+r/s√D", "p/q+r/ssqrtD", "√D", "-2√5", ...
  static FieldElem parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  unsigned long d() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return sgn(a_) == 0 && d_ == 0; }

  /// Exact sign of the real number a + b*sqrt(D).
  int sign() const;
  FieldElem inverse() const;
  /// Galois conjugate a - b*sqrt(D).
  FieldElem conjugate() const { return FieldElem(a_, -b_, d_); }
  /// Largest integer <= value.
  Integer floor() const;
  /// Representative of the class mod Z in [0, 1).
  FieldElem frac() const;
  double to_double() const;
  std::string str() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& y);
  FieldElem& operator-=(const FieldElem& y);
  FieldElem& operator*=(const FieldElem& y);
  FieldElem& operator/=(const FieldElem& y);

  friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
  friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
  friend FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }
  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const FieldElem& x, const FieldElem& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const FieldElem& x, const FieldElem& y) { return y < x; }
  friend bool operator<=(const FieldElem& x, const FieldElem& y) { return !(y < x); }
  friend bool operator>=(const FieldElem& x, const FieldElem& y) { return !(x < y); }

 private:
  void normalize();

  Rational a_;
  Rational b_;
  unsigned long d_ = 0;
};

/// Shared field of two elements; throws FieldMismatch when they disagree.
unsigned long common_field(unsigned long d1, unsigned long d2);

using KVector = std::vector<FieldElem>;

FieldElem dot(const KVector& x, const KVector& y);
KVector operator+(const KVector& x, const KVector& y);
KVector operator-(const KVector& x, const KVector& y);
KVector operator*(const FieldElem& s, const KVector& x);
KVector operator-(const KVector& x);
bool is_zero(const KVector& x);
/// Largest D used by any entry (0 if all rational); throws on mixing.
unsigned long field_of(const KVector& x);
std::string str(const KVector& x);

class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// All rows must have length `cols`.
  static KMatrix from_rows(const std::vector<KVector>& rows, std::size_t cols);
  static KMatrix from_rows(const std::vector<KVector>& rows);
  static KMatrix from_columns(const std::vector<KVector>& cols, std::size_t rows);
  static KMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElem& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  KVector row(std::size_t i) const;
  KVector col(std::size_t j) const;
  std::vector<KVector> row_list() const;
  KMatrix transpose() const;
  KVector operator*(const KVector& x) const;
  KMatrix operator*(const KMatrix& y) const;
  friend bool operator==(const KMatrix&, const KMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

struct Echelon {
  KMatrix reduced;                  // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form: leftmost pivots, pivots equal to 1.
Echelon rref(const KMatrix& a);
std::size_t k_rank(const KMatrix& a);
/// Canonical basis of the row space (nonzero rows of the rref).
std::vector<KVector> row_space_basis(const std::vector<KVector>& rows, std::size_t cols);
/// Kernel of `a` in canonical echelon form.
std::vector<KVector> kernel_basis(const KMatrix& a);
/// True when the two row lists span the same subspace.
bool same_row_space(const std::vector<KVector>& x, const std::vector<KVector>& y,
                    std::size_t cols);

struct KSolution {
  KVector particular;           // free variables set to zero
  std::vector<KVector> kernel;  // canonical echelon basis
};

/// Solves a x = b exactly; std::nullopt when inconsistent.
std::optional<KSolution> k_solve(const KMatrix& a, const KVector& b);

}  // namespace qtk
