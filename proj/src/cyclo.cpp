#include "qtk/cyclo.hpp"

#include <cmath>
#include <numbers>

namespace qtk {

namespace {

using Coeffs = Cyclo::Coeffs;

// Product of two coefficient vectors, reduced by zeta^5 = 1 and
// zeta^4 = -1 - zeta - zeta^2 - zeta^3.
Coeffs multiply(const Coeffs& x, const Coeffs& y) {
  std::array<Integer, 5> r{};
  for (int i = 0; i < 4; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < 4; ++j) r[(i + j) % 5] += x[i] * y[j];
  }
  return {r[0] - r[4], r[1] - r[4], r[2] - r[4], r[3] - r[4]};
}

const Coeffs kPhiCoeffs{0, 0, -1, -1};

Coeffs phi_power(Coeffs c, long e) {
  for (long i = 0; i < e; ++i) c = multiply(c, kPhiCoeffs);
  return c;
}

}  // namespace

Cyclo Cyclo::zeta(long j) {
  j = ((j % 5) + 5) % 5;
  if (j == 4) return Cyclo(Coeffs{-1, -1, -1, -1}, 0);
  Coeffs c{};
  c[j] = 1;
  return Cyclo(c, 0);
}

Cyclo Cyclo::phi() { return Cyclo(kPhiCoeffs, 0); }

Cyclo Cyclo::lifted(long k) const { return Cyclo(coeffs_at(k), k); }

Cyclo::Coeffs Cyclo::coeffs_at(long k) const {
  if (k < k_) throw Error("cannot lower the scale of a cyclotomic point");
  return phi_power(c_, k - k_);
}

Cyclo Cyclo::times_phi() const { return Cyclo(multiply(c_, kPhiCoeffs), k_); }

Cyclo Cyclo::conj() const {
  // zeta -> zeta^4, zeta^2 <-> zeta^3
  return Cyclo(Coeffs{c_[0] - c_[1], -c_[1], c_[3] - c_[1], c_[2] - c_[1]}, k_);
}

bool Cyclo::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

namespace {

FieldElem phi_inverse_power(long k) {
  FieldElem p = 1;
  const FieldElem psi = FieldElem::phi() - 1;
  for (long i = 0; i < k; ++i) p *= psi;
  for (long i = 0; i > k; --i) p *= FieldElem::phi();
  return p;
}

}  // namespace

FieldElem Cyclo::real_part() const {
  // cos 72 = (phi - 1)/2, cos 144 = cos 216 = -phi/2
  const FieldElem phi = FieldElem::phi();
  FieldElem re = FieldElem(Rational(c_[0])) + FieldElem(Rational(c_[1])) * (phi - 1) / 2 -
                 FieldElem(Rational(Integer(c_[2] + c_[3]))) * phi / 2;
  return re * phi_inverse_power(k_);
}

int Cyclo::imag_sign() const {
  // Im = sin 72 * (c1 + (c2 - c3)/phi)
  FieldElem s = FieldElem(Rational(c_[1])) + FieldElem(Rational(Integer(c_[2] - c_[3]))) * (FieldElem::phi() - 1);
  return s.sign();
}

FieldElem Cyclo::norm2() const {
  Coeffs p = multiply(c_, conj().c_);
  // p is real: p1 = 0 and p2 = p3, value p0 - p2 * phi.
  if (p[1] != 0 || p[2] != p[3]) throw Error("internal invariant breach: z conj(z) not real");
  FieldElem v = FieldElem(Rational(p[0])) - FieldElem(Rational(p[2])) * FieldElem::phi();
  return v * phi_inverse_power(2 * k_);
}

std::complex<double> Cyclo::to_complex() const {
  long double re = 0, im = 0;
  for (int j = 0; j < 4; ++j) {
    long double ang = 2.0L * std::numbers::pi_v<long double> * j / 5.0L;
    long double cj = c_[j].get_d();
    re += cj * std::cos(ang);
    im += cj * std::sin(ang);
  }
  long double s = std::pow(std::numbers::phi_v<long double>, -static_cast<long double>(k_));
  return {static_cast<double>(re * s), static_cast<double>(im * s)};
}

std::string Cyclo::str() const {
  std::string s = "[" + c_[0].get_str() + ", " + c_[1].get_str() + ", " + c_[2].get_str() + ", " +
                  c_[3].get_str() + "]";
  if (k_ != 0) s += "/phi^" + std::to_string(k_);
  return s;
}

Cyclo Cyclo::operator-() const { return Cyclo(Coeffs{-c_[0], -c_[1], -c_[2], -c_[3]}, k_); }

Cyclo operator+(const Cyclo& x, const Cyclo& y) {
  const long k = std::max(x.k_, y.k_);
  Coeffs a = x.coeffs_at(k), b = y.coeffs_at(k);
  for (int i = 0; i < 4; ++i) a[i] += b[i];
  return Cyclo(a, k);
}

Cyclo operator-(const Cyclo& x, const Cyclo& y) { return x + (-y); }

Cyclo operator*(const Cyclo& x, const Cyclo& y) { return Cyclo(multiply(x.c_, y.c_), x.k_ + y.k_); }

bool operator==(const Cyclo& x, const Cyclo& y) {
  const long k = std::max(x.k_, y.k_);
  return x.coeffs_at(k) == y.coeffs_at(k);
}

int orientation(const Cyclo& a, const Cyclo& b, const Cyclo& c) {
  return ((b - a).conj() * (c - a)).imag_sign();
}

bool on_segment(const Cyclo& z, const Cyclo& p, const Cyclo& q) {
  Cyclo w = (q - p).conj() * (z - p);
  if (w.imag_sign() != 0) return false;
  FieldElem t = w.real_part();
  return t.sign() >= 0 && t <= (q - p).norm2();
}

Cyclo reflect(const Cyclo& z, const Cyclo& p, const Cyclo& q) {
  const Cyclo w = q - p;
  for (long j = 0; j < 5; ++j) {
    for (long s : {1L, -1L}) {
      Cyclo omega = Cyclo(s) * Cyclo::zeta(j);
      Cyclo r = w * omega.conj();
      if (r.imag_sign() == 0) return p + omega * omega * (z - p).conj();
    }
  }
  throw Error("reflection line is not along a tenth root of unity");
}

}  // namespace qtk
