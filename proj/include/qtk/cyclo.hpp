#pragma once

// Exact points of Z[zeta], zeta = exp(2 pi i / 5), with a scale exponent:
// the value of (c, k) is phi^(-k) * (c0 + c1 zeta + c2 zeta^2 + c3 zeta^3).

#include <array>
#include <complex>
#include <string>

#include "qtk/field.hpp"

namespace qtk {

class Cyclo {
 public:
  using Coeffs = std::array<Integer, 4>;

  Cyclo() = default;
  Cyclo(long v) { c_[0] = v; }  // NOLINT
  Cyclo(Coeffs c, long k) : c_(std::move(c)), k_(k) {}

  /// zeta^j for any integer j.
  static Cyclo zeta(long j);
  static Cyclo phi();

  const Coeffs& coeffs() const { return c_; }
  long scale() const { return k_; }

  /// Same value written at scale k >= scale().
  Cyclo lifted(long k) const;
  /// Coefficients of the value at scale k >= scale().
  Coeffs coeffs_at(long k) const;
  /// Division by phi (scale exponent + 1).
  Cyclo over_phi() const { return Cyclo(c_, k_ + 1); }
  Cyclo times_phi() const;

  /// Complex conjugate (zeta -> zeta^4).
  Cyclo conj() const;
  bool is_zero() const;
  /// Real and imaginary parts; Im is exact up to the positive factor sin 72.
  FieldElem real_part() const;
  int imag_sign() const;
  /// z * conj(z) as an element of Q(sqrt 5).
  FieldElem norm2() const;
  std::complex<double> to_complex() const;
  std::string str() const;

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator-(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator*(const Cyclo& x, const Cyclo& y);
  /// Value equality (scales aligned).
  friend bool operator==(const Cyclo& x, const Cyclo& y);

 private:
  Coeffs c_{};
  long k_ = 0;
};

/// Sign of Im(conj(b - a) * (c - a)): +1 when a, b, c turn counterclockwise.
int orientation(const Cyclo& a, const Cyclo& b, const Cyclo& c);
/// True when z lies on the closed segment [p, q].
bool on_segment(const Cyclo& z, const Cyclo& p, const Cyclo& q);
/// Mirror image of z in the line through p and q; the direction q - p must
/// be a real multiple of a tenth root of unity.
Cyclo reflect(const Cyclo& z, const Cyclo& p, const Cyclo& q);

}  // namespace qtk
