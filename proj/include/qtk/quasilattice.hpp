#pragma once

// Quasilattices: Z-spans of finitely many R-spanning vectors with
// coordinates in K.

#include <cstddef>
#include <optional>
#include <vector>

#include "qtk/field.hpp"
#include "qtk/intlattice.hpp"

namespace qtk {

class Quasilattice {
 public:
  Quasilattice() = default;
  /// Generators must span K^dim.
  Quasilattice(std::size_t dim, std::vector<KVector> generators);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<KVector>& generators() const { return generators_; }
  const KVector& generator(std::size_t i) const { return generators_.at(i); }
  unsigned long field() const { return field_; }
  friend bool operator==(const Quasilattice&, const Quasilattice&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<KVector> generators_;
  unsigned long field_ = 0;
};

struct MembershipCertificate {
  IntVector coefficients;
  friend bool operator==(const MembershipCertificate&, const MembershipCertificate&) = default;
};

/// sum_i coefficients_i * generator_i.
KVector evaluate(const Quasilattice& q, const IntVector& coefficients);

/// Splits a K-linear system over the generators into an integer system on
/// the rational and sqrt(D) components: returns (A, b) with A the 2n x m (or
/// n x m when D = 0) coefficient matrix, scaled to integers together with b.
std::pair<IntMatrix, IntVector> integer_system(const Quasilattice& q, const KVector& x);

std::optional<MembershipCertificate> member(const Quasilattice& q, const KVector& x);

/// Rows: basis of {a in Z^m : sum a_i g_i = 0}.
IntMatrix relation_lattice(const Quasilattice& q);
std::size_t z_rank(const Quasilattice& q);
bool is_discrete(const Quasilattice& q);

struct QuotientPresentation {
  AbelianGroupInvariants invariants;
  std::vector<IntVector> generator_images;  // class of each quasilattice generator
  QuotientMap map;
  /// Class of the element with the given certificate.
  IntVector class_of(const IntVector& certificate) const { return map.classify(certificate); }
};

/// Q / span_Z{vectors}.
QuotientPresentation quotient_by(const Quasilattice& q,
                                 const std::vector<MembershipCertificate>& vectors);

/// The quasilattice spanned by the given vectors (used for rationality tests).
Quasilattice span_of(std::size_t dim, const std::vector<KVector>& vectors);

}  // namespace qtk
