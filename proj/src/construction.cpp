#include "qtk/construction.hpp"

#include <algorithm>

namespace qtk {

KMatrix Triple::pi() const { return KMatrix::from_columns(polytope.normals(), polytope.dim()); }

Triple make_triple(std::string name, unsigned long field, PolytopeH polytope, Quasilattice lattice,
                   std::optional<std::vector<MembershipCertificate>> certificates) {
  if (!valid_discriminant(field)) throw InvalidTriple("field D = " + std::to_string(field) + " is not square-free");
  if (common_field(field, lattice.field()) != field)
    throw FieldMismatch("quasilattice lives outside Q(sqrt " + std::to_string(field) + ")");
  for (const auto& h : polytope.halfspaces()) {
    if (common_field(field, field_of(h.normal)) != field || common_field(field, h.level.d()) != field)
      throw FieldMismatch("polytope data lives outside Q(sqrt " + std::to_string(field) + ")");
  }
  if (lattice.dim() != polytope.dim()) throw InvalidTriple("polytope and quasilattice dimensions differ");

  ValidationReport report = validate(polytope);
  if (!report.bounded) throw InvalidTriple("polytope is unbounded");
  if (!report.full_dim) throw InvalidTriple("polytope is not full-dimensional");
  if (!report.irredundant_facets)
    throw InvalidTriple("half-space " + std::to_string(report.redundant.front()) + " does not support a facet");

  Triple t{std::move(name), field, std::move(polytope), std::move(lattice), {}};
  if (certificates) {
    if (certificates->size() != t.d()) throw InvalidTriple("one certificate per facet is required");
    for (std::size_t j = 0; j < t.d(); ++j)
      if (evaluate(t.lattice, (*certificates)[j].coefficients) != t.polytope.halfspace(j).normal)
        throw InvalidTriple("certificate mismatch for normal " + std::to_string(j));
    t.certificates = std::move(*certificates);
  } else {
    for (std::size_t j = 0; j < t.d(); ++j) {
      auto c = member(t.lattice, t.polytope.halfspace(j).normal);
      if (!c) throw InvalidTriple("normal " + std::to_string(j) + " is not in the quasilattice");
      t.certificates.push_back(std::move(*c));
    }
  }
  return t;
}

namespace {

void require_constructible(const Triple& t, const std::vector<VertexData>& vertices) {
  if (k_rank(t.pi()) != t.n()) throw InvalidTriple("degenerate triple: normals do not span");
  bool simple = std::all_of(vertices.begin(), vertices.end(),
                            [&](const VertexData& v) { return v.active.size() == t.n(); });
  if (!simple) {
    Classification c = classify(t);
    throw Refusal(kind_name(c.kind), t.name + ": polytope is " + c.summary);
  }
}

KVector mod_one(const KVector& v) {
  KVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].frac();
  return r;
}

}  // namespace

Presentation build_presentation(const Triple& t) {
  require_constructible(t, enumerate_vertices(t.polytope));
  Presentation p;
  p.field = t.field;
  p.d = t.d();
  p.n = t.n();
  KMatrix pi = t.pi();
  p.cont_gens = kernel_basis(pi);
  const auto levels = t.polytope.levels();
  for (const auto& beta : p.cont_gens) {
    if (is_zero(beta)) throw Error("internal invariant breach: zero level row");
    FieldElem c;
    for (std::size_t j = 0; j < p.d; ++j) c -= beta[j] * levels[j];
    p.level_rows.push_back({beta, c});
  }

  QuotientPresentation comp = quotient_by(t.lattice, t.certificates);
  p.component_invariants = comp.invariants;
  for (std::size_t i = 0; i < t.lattice.size(); ++i) {
    const IntVector& image = comp.generator_images[i];
    if (std::all_of(image.begin(), image.end(), [](const Integer& z) { return z == 0; })) continue;
    auto sol = k_solve(pi, t.lattice.generator(i));
    if (!sol) throw Error("internal invariant breach: generator outside the image of pi");
    p.disc_gens.push_back(mod_one(sol->particular));
  }
  return p;
}

std::vector<Chart> build_charts(const Triple& t) {
  const auto vertices = enumerate_vertices(t.polytope);
  require_constructible(t, vertices);
  const std::size_t n = t.n();
  std::vector<Chart> charts;
  for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
    const VertexData& v = vertices[vi];
    Chart c;
    c.vertex_index = vi;
    c.vertex = v.point;
    c.active = v.active;

    KMatrix m(n, n);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k) m(l, k) = t.polytope.halfspace(c.active[l]).normal[k];
    std::vector<KVector> dual;  // <dual_k, X_{j_l}> = delta_kl
    for (std::size_t k = 0; k < n; ++k) {
      KVector e(n);
      e[k] = 1;
      dual.push_back(k_solve(m, e)->particular);
    }

    for (std::size_t j = 0; j < t.d(); ++j) {
      if (std::binary_search(c.active.begin(), c.active.end(), j)) continue;
      DomainIneq q;
      q.facet = j;
      for (std::size_t k = 0; k < n; ++k) q.coefficients.push_back(-dot(dual[k], t.polytope.halfspace(j).normal));
      q.bound = t.polytope.slack(j, v.point);
      FieldElem smallest;
      for (const auto& x : q.coefficients) {
        if (x.is_zero()) continue;
        FieldElem ax = x.sign() < 0 ? -x : x;
        if (smallest.is_zero() || ax < smallest) smallest = ax;
      }
      c.slots.push_back({j, c.domain.size(), smallest.is_zero() ? FieldElem(1) : smallest.inverse()});
      c.domain.push_back(std::move(q));
    }

    for (const auto& g : t.lattice.generators()) {
      KVector a(n);
      for (std::size_t k = 0; k < n; ++k) a[k] = dot(dual[k], g).frac();
      if (!is_zero(a)) c.gamma_gens.push_back(std::move(a));
    }
    std::vector<MembershipCertificate> act;
    for (auto j : c.active) act.push_back(t.certificates[j]);
    c.gamma_invariants = quotient_by(t.lattice, act).invariants;
    charts.push_back(std::move(c));
  }
  return charts;
}

std::string kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::manifold: return "manifold";
    case SpaceKind::orbifold: return "orbifold";
    case SpaceKind::quasifold: return "quasifold";
    case SpaceKind::stratified_by_manifolds: return "stratified-by-manifolds";
    case SpaceKind::stratified_by_quasifolds: return "stratified-by-quasifolds";
  }
  return "unknown";
}

SpaceKind kind_from_name(const std::string& s) {
  for (auto k : {SpaceKind::manifold, SpaceKind::orbifold, SpaceKind::quasifold,
                 SpaceKind::stratified_by_manifolds, SpaceKind::stratified_by_quasifolds})
    if (kind_name(k) == s) return k;
  throw Error("unknown space kind '" + s + "'");
}

SpaceKind chart_kind(const AbelianGroupInvariants& gamma) {
  if (gamma.trivial()) return SpaceKind::manifold;
  if (gamma.finite()) return SpaceKind::orbifold;
  return SpaceKind::quasifold;
}

Classification classify(const Triple& t) {
  Classification c;
  c.name = t.name;
  const auto vertices = enumerate_vertices(t.polytope);
  c.vertex_count = vertices.size();
  c.facet_count = t.d();
  c.simple = std::all_of(vertices.begin(), vertices.end(),
                         [&](const VertexData& v) { return v.active.size() == t.n(); });
  c.rational = is_discrete(span_of(t.n(), t.polytope.normals()));
  if (c.simple && c.rational)
    c.summary = "rational and simple";
  else if (c.simple)
    c.summary = "simple but not rational";
  else if (c.rational)
    c.summary = "rational but not simple";
  else
    c.summary = "neither rational nor simple";

  if (!c.simple) {
    c.kind = c.rational ? SpaceKind::stratified_by_manifolds : SpaceKind::stratified_by_quasifolds;
    return c;
  }
  c.kind = SpaceKind::manifold;
  for (const auto& chart : build_charts(t)) {
    SpaceKind k = chart_kind(chart.gamma_invariants);
    c.chart_kinds.push_back(k);
    c.kind = std::max(c.kind, k);
  }
  return c;
}

CutPresentation cut_and_present(const Triple& t, const KVector& normal, const FieldElem& level,
                                std::optional<MembershipCertificate> certificate) {
  if (!certificate) {
    certificate = member(t.lattice, normal);
    if (!certificate) throw InvalidTriple("cutting normal is not in the quasilattice");
  } else if (evaluate(t.lattice, certificate->coefficients) != normal) {
    throw InvalidTriple("certificate mismatch for the cutting normal");
  }
  CutResult halves = cut(t.polytope, normal, level);

  auto certs_for = [&](const std::vector<std::size_t>& origin, bool negate) {
    std::vector<MembershipCertificate> out;
    for (auto j : origin) out.push_back(t.certificates[j]);
    MembershipCertificate c = *certificate;
    if (negate)
      for (auto& z : c.coefficients) z = -z;
    out.push_back(std::move(c));
    return out;
  };

  CutResult& h = halves;
  CutPresentation r{
      make_triple(t.name + "+", t.field, h.plus, t.lattice, certs_for(h.plus_origin, false)),
      make_triple(t.name + "-", t.field, h.minus, t.lattice, certs_for(h.minus_origin, true)),
      {},
      {}};
  r.plus_presentation = build_presentation(r.plus);
  r.minus_presentation = build_presentation(r.minus);
  return r;
}

std::optional<IntVector> component_class(const Triple& t, const KVector& theta) {
  auto cert = member(t.lattice, t.pi() * theta);
  if (!cert) return std::nullopt;
  return quotient_by(t.lattice, t.certificates).class_of(cert->coefficients);
}

}  // namespace qtk
