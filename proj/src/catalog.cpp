#include "qtk/catalog.hpp"

#include <array>

namespace qtk::catalog {

namespace {

const FieldElem kPhi = FieldElem::phi();
const FieldElem kPsi = FieldElem::phi() - 1;  // 1/phi

KVector v2(FieldElem x, FieldElem y) { return {std::move(x), std::move(y)}; }
KVector v3(FieldElem x, FieldElem y, FieldElem z) { return {std::move(x), std::move(y), std::move(z)}; }

KVector cross(const KVector& a, const KVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<KVector> pentagon_roots() {
  return {v2(kPsi, -1), v2(1, 0), v2(0, 1), v2(-1, kPsi), v2(-kPsi, -kPsi)};
}

// Parallelepiped spanned by three edge vectors, vertex at the origin, with
// normals a_j x a_k oriented inward.
Triple rhombohedron(std::string name, const std::array<KVector, 3>& a) {
  std::array<KVector, 3> nrm{cross(a[1], a[2]), cross(a[2], a[0]), cross(a[0], a[1])};
  FieldElem vol = dot(a[0], nrm[0]);
  if (vol.sign() < 0) {
    for (auto& x : nrm) x = -x;
    vol = -vol;
  }
  std::vector<HalfSpace> hs;
  for (const auto& x : nrm) hs.push_back({x, 0});
  for (const auto& x : nrm) hs.push_back({-x, -vol});
  return make_triple(std::move(name), 5, PolytopeH(3, std::move(hs)), icosa_face());
}

}  // namespace

Quasilattice pentagon() { return Quasilattice(2, pentagon_roots()); }

Quasilattice golden_line() { return Quasilattice(1, {{FieldElem(1)}, {kPhi}}); }

Quasilattice icosa_simple() {
  return Quasilattice(3, {v3(0, 1, kPhi), v3(0, -1, kPhi), v3(1, kPhi, 0), v3(-1, kPhi, 0),
                          v3(kPhi, 0, 1), v3(kPhi, 0, -1)});
}

Quasilattice icosa_body() {
  auto g = icosa_simple().generators();
  g.push_back(v3(kPhi, kPhi, kPhi));
  return Quasilattice(3, g);
}

Quasilattice icosa_face() {
  auto p = icosa_simple().generators();
  return Quasilattice(3, {p[0] - p[1], p[1] - p[2], p[2] - p[3], p[3] - p[4], p[4] - p[5], p[4] + p[5]});
}

Quasilattice integer_lattice(std::size_t n) {
  std::vector<KVector> g;
  for (std::size_t i = 0; i < n; ++i) {
    KVector e(n);
    e[i] = 1;
    g.push_back(std::move(e));
  }
  return Quasilattice(n, g);
}

Triple quasisphere(const FieldElem& s, const FieldElem& t) {
  if (s.sign() <= 0 || t.sign() <= 0) throw Error("quasisphere: s and t must be positive");
  unsigned long D = common_field(s.d(), t.d());
  // Unit interval with normals X1 = t, X2 = -s.
  PolytopeH interval(1, {{{t}, 0}, {{-s}, -s}});
  return make_triple("quasisphere", D, std::move(interval), Quasilattice(1, {{s}, {t}}));
}

Triple orbisphere(long p, long q) {
  if (p <= 0 || q <= 0) throw Error("orbisphere: p and q must be positive");
  PolytopeH interval(1, {{{FieldElem(q)}, 0}, {{FieldElem(-p)}, FieldElem(-p)}});
  return make_triple(p == 1 && q == 1 ? "sphere" : "orbisphere", 0, std::move(interval), integer_lattice(1));
}

Triple sphere() { return orbisphere(1, 1); }

Triple kite() {
  auto v = pentagon_roots();
  // Normals -v0, v1, -v2, v3; the 72-degree tip sits at the origin on facets
  // 2 and 3, the 144-degree tail on facets 1 and 4.
  PolytopeH p(2, {{-v[0], -1}, {v[1], 0}, {-v[2], 0}, {v[3], -1}});
  return make_triple("kite", 5, std::move(p), pentagon());
}

std::pair<KVector, FieldElem> kite_axis() { return {pentagon_roots()[4], FieldElem(0)}; }

Triple thick_rhombus() {
  auto v = pentagon_roots();
  PolytopeH p(2, {{v[1], 0}, {v[2], 0}, {-v[1], -kPhi}, {-v[2], -kPhi}});
  return make_triple("thick_rhombus", 5, std::move(p), pentagon());
}

Triple thin_rhombus() {
  auto v = pentagon_roots();
  PolytopeH p(2, {{v[1], 0}, {-v[3], 0}, {-v[1], -1}, {v[3], -1}});
  return make_triple("thin_rhombus", 5, std::move(p), pentagon());
}

Triple prolate_rhombohedron() {
  return rhombohedron("prolate_rhombohedron", {v3(0, 1, kPhi), v3(1, kPhi, 0), v3(kPhi, 0, 1)});
}

Triple oblate_rhombohedron() {
  return rhombohedron("oblate_rhombohedron", {v3(0, 1, kPhi), v3(1, -kPhi, 0), v3(-kPhi, 0, -1)});
}

Triple cube() {
  std::vector<HalfSpace> hs;
  auto e = integer_lattice(3).generators();
  for (const auto& x : e) hs.push_back({x, 0});
  for (const auto& x : e) hs.push_back({-x, -1});
  return make_triple("cube", 0, PolytopeH(3, std::move(hs)), integer_lattice(3));
}

Triple tetrahedron() {
  std::vector<HalfSpace> hs;
  auto e = integer_lattice(3).generators();
  for (const auto& x : e) hs.push_back({x, 0});
  hs.push_back({v3(-1, -1, -1), -1});
  return make_triple("tetrahedron", 0, PolytopeH(3, std::move(hs)), integer_lattice(3));
}

Triple octahedron() {
  std::vector<HalfSpace> hs;
  for (long a : {1, -1})
    for (long b : {1, -1})
      for (long c : {1, -1}) hs.push_back({v3(a, b, c), -1});
  return make_triple("octahedron", 0, PolytopeH(3, std::move(hs)), integer_lattice(3));
}

Triple dodecahedron() {
  std::vector<HalfSpace> hs;
  const FieldElem level = -(kPhi * kPhi);
  auto g = icosa_simple().generators();
  for (const auto& x : g) hs.push_back({x, level});
  for (const auto& x : g) hs.push_back({-x, level});
  return make_triple("dodecahedron", 5, PolytopeH(3, std::move(hs)), icosa_simple());
}

Triple icosahedron() {
  std::vector<HalfSpace> hs;
  const FieldElem level = -(kPhi * kPhi * kPhi);
  for (long a : {1, -1})
    for (long b : {1, -1})
      for (long c : {1, -1}) hs.push_back({v3(kPhi * a, kPhi * b, kPhi * c), level});
  const FieldElem big = kPhi * kPhi;
  for (long a : {1, -1})
    for (long b : {1, -1}) {
      hs.push_back({v3(0, big * a, FieldElem(b)), level});
      hs.push_back({v3(FieldElem(b), 0, big * a), level});
      hs.push_back({v3(big * a, FieldElem(b), 0), level});
    }
  return make_triple("icosahedron", 5, PolytopeH(3, std::move(hs)), icosa_body());
}

std::vector<std::string> triple_names() {
  return {"quasisphere",   "orbisphere",           "sphere",
          "kite",          "thick_rhombus",        "thin_rhombus",
          "prolate_rhombohedron", "oblate_rhombohedron", "cube",
          "tetrahedron",   "octahedron",           "dodecahedron",
          "icosahedron"};
}

std::vector<std::string> lattice_names() {
  return {"pentagon", "golden_line", "icosa_simple", "icosa_body", "icosa_face",
          "integer_lattice_1", "integer_lattice_2", "integer_lattice_3"};
}

Triple triple_by_name(const std::string& name) {
  if (name == "quasisphere") return quasisphere(1, kPhi);
  if (name == "orbisphere") return orbisphere(2, 3);
  if (name == "sphere") return sphere();
  if (name == "kite") return kite();
  if (name == "thick_rhombus") return thick_rhombus();
  if (name == "thin_rhombus") return thin_rhombus();
  if (name == "prolate_rhombohedron") return prolate_rhombohedron();
  if (name == "oblate_rhombohedron") return oblate_rhombohedron();
  if (name == "cube") return cube();
  if (name == "tetrahedron") return tetrahedron();
  if (name == "octahedron") return octahedron();
  if (name == "dodecahedron") return dodecahedron();
  if (name == "icosahedron") return icosahedron();
  throw Error("unknown example '" + name + "'");
}

Quasilattice lattice_by_name(const std::string& name) {
  if (name == "pentagon") return pentagon();
  if (name == "golden_line") return golden_line();
  if (name == "icosa_simple") return icosa_simple();
  if (name == "icosa_body") return icosa_body();
  if (name == "icosa_face") return icosa_face();
  if (name == "integer_lattice_1") return integer_lattice(1);
  if (name == "integer_lattice_2") return integer_lattice(2);
  if (name == "integer_lattice_3") return integer_lattice(3);
  throw Error("unknown quasilattice '" + name + "'");
}

}  // namespace qtk::catalog
