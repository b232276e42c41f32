#pragma once

// From a triple (polytope, quasilattice, normals in the quasilattice) to the
// level-set presentation, the cutting group N, and the vertex charts of the
// associated toric quasifold.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qtk/field.hpp"
#include "qtk/intlattice.hpp"
#include "qtk/polytope.hpp"
#include "qtk/quasilattice.hpp"

namespace qtk {

struct Triple {
  std::string name;
  unsigned long field = 0;  // D of K = Q(sqrt D)
  PolytopeH polytope;
  Quasilattice lattice;
  std::vector<MembershipCertificate> certificates;  // one per facet

  std::size_t d() const { return polytope.facet_count(); }
  std::size_t n() const { return polytope.dim(); }
  /// n x d matrix whose columns are the normals.
  KMatrix pi() const;
  friend bool operator==(const Triple&, const Triple&) = default;
};

class InvalidTriple : public Error {
 public:
  using Error::Error;
};

/// Raised when the construction is mathematically refused (nonsimple input).
class Refusal : public Error {
 public:
  Refusal(std::string kind, const std::string& what) : Error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

/// Validates the polytope (bounded, full-dimensional, irredundant) and the
/// certificates.  Missing certificates are computed with member().
Triple make_triple(std::string name, unsigned long field, PolytopeH polytope, Quasilattice lattice,
                   std::optional<std::vector<MembershipCertificate>> certificates = std::nullopt);

struct LevelRow {
  KVector coefficients;  // sum_j c_j |z_j|^2 = constant
  FieldElem constant;
  friend bool operator==(const LevelRow&, const LevelRow&) = default;
};

struct Presentation {
  unsigned long field = 0;
  std::size_t d = 0;
  std::size_t n = 0;
  std::vector<LevelRow> level_rows;
  std::vector<KVector> cont_gens;  // basis of ker pi, exponents of the identity component
  std::vector<KVector> disc_gens;  // read mod Z^d, representatives of the component group
  AbelianGroupInvariants component_invariants;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

Presentation build_presentation(const Triple& t);

struct DomainIneq {
  std::size_t facet = 0;  // the facet j whose slot this inequality bounds
  KVector coefficients;   // sum_k c_k |z_k|^2 < bound
  FieldElem bound;
  friend bool operator==(const DomainIneq&, const DomainIneq&) = default;
};

/// Filled slot sqrt(bound - sum c_k |z_k|^2) of the chart map at facet j.
/// display_scale is the positive factor that normalizes the smallest nonzero
/// coefficient to 1 when the slot is printed.
struct SlotExpr {
  std::size_t facet = 0;
  std::size_t ineq = 0;
  FieldElem display_scale;
  friend bool operator==(const SlotExpr&, const SlotExpr&) = default;
};

struct Chart {
  std::size_t vertex_index = 0;
  KVector vertex;
  std::vector<std::size_t> active;  // j_1 < ... < j_n, the chart coordinates
  std::vector<DomainIneq> domain;
  std::vector<KVector> gamma_gens;  // angle coordinates mod Z^n
  AbelianGroupInvariants gamma_invariants;
  std::vector<SlotExpr> slots;
  friend bool operator==(const Chart&, const Chart&) = default;
};

std::vector<Chart> build_charts(const Triple& t);

enum class SpaceKind { manifold, orbifold, quasifold, stratified_by_manifolds, stratified_by_quasifolds };

std::string kind_name(SpaceKind k);
SpaceKind kind_from_name(const std::string& s);
SpaceKind chart_kind(const AbelianGroupInvariants& gamma);

struct Classification {
  std::string name;
  bool simple = false;
  bool rational = false;
  std::size_t vertex_count = 0;
  std::size_t facet_count = 0;
  std::vector<SpaceKind> chart_kinds;
  SpaceKind kind = SpaceKind::manifold;
  std::string summary;  // e.g. "rational but not simple"
  bool refused() const {
    return kind == SpaceKind::stratified_by_manifolds || kind == SpaceKind::stratified_by_quasifolds;
  }
};

Classification classify(const Triple& t);

struct CutPresentation {
  Triple plus;
  Triple minus;
  Presentation plus_presentation;
  Presentation minus_presentation;
};

/// Cuts the polytope of t along <mu, X> = lambda; X must lie in the
/// quasilattice (certificate recomputed when absent).
CutPresentation cut_and_present(const Triple& t, const KVector& normal, const FieldElem& level,
                                std::optional<MembershipCertificate> certificate = std::nullopt);

/// Class of theta in the component group N / N^0 = Q / span_Z{X_j}, or
/// std::nullopt when theta is not in N (pi(theta) outside Q).
std::optional<IntVector> component_class(const Triple& t, const KVector& theta);

}  // namespace qtk
