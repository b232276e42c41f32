#pragma once

// Convex polytopes given by half-spaces <mu, X_j> >= lambda_j with
// coefficients in K.

#include <cstddef>
#include <vector>

#include "qtk/field.hpp"

namespace qtk {

struct HalfSpace {
  KVector normal;  // inward normal X_j
  FieldElem level; // lambda_j
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

class PolytopeH {
 public:
  PolytopeH() = default;
  PolytopeH(std::size_t dim, std::vector<HalfSpace> halfspaces);

  std::size_t dim() const { return dim_; }
  std::size_t facet_count() const { return halfspaces_.size(); }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const HalfSpace& halfspace(std::size_t j) const { return halfspaces_.at(j); }
  std::vector<KVector> normals() const;
  std::vector<FieldElem> levels() const;

  /// <mu, X_j> - lambda_j.
  FieldElem slack(std::size_t j, const KVector& mu) const;
  bool contains(const KVector& mu) const;
  friend bool operator==(const PolytopeH&, const PolytopeH&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<HalfSpace> halfspaces_;
};

struct VertexData {
  KVector point;
  std::vector<std::size_t> active;  // sorted facet indices with zero slack
};

/// Solves every n-subset of facets; result ordered by first lexicographic
/// subset reaching each vertex.
std::vector<VertexData> enumerate_vertices(const PolytopeH& p);

struct ValidationReport {
  bool bounded = false;
  bool full_dim = false;
  bool irredundant_facets = false;
  bool simple = false;
  std::size_t vertex_count = 0;
  std::vector<std::size_t> redundant;  // facets not supporting a facet
  bool ok() const { return bounded && full_dim && irredundant_facets; }
};

ValidationReport validate(const PolytopeH& p);
/// Same as validate() but reuses an existing vertex list.
ValidationReport validate(const PolytopeH& p, const std::vector<VertexData>& vertices);

class DegenerateCut : public Error {
 public:
  using Error::Error;
};

struct CutResult {
  PolytopeH plus;   // P cap {<mu, X> >= lambda}
  PolytopeH minus;  // P cap {<mu, -X> >= -lambda}
  // Original facet index of each facet of plus/minus except the last (new) one.
  std::vector<std::size_t> plus_origin;
  std::vector<std::size_t> minus_origin;
};

/// Splits P along <mu, X> = lambda.  Facets of P that no longer support a
/// facet of a half are dropped; the rest keep their order and the cutting
/// facet is appended last.  Throws DegenerateCut if the hyperplane misses the
/// interior of P.
CutResult cut(const PolytopeH& p, const KVector& normal, const FieldElem& level);

/// Dimension of the affine hull of the given points (-1 for none).
int affine_dimension(const std::vector<KVector>& points);

}  // namespace qtk
