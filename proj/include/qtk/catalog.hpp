#pragma once

// Shipped example data: quasilattices and construction-ready triples.
//
// Coordinate conventions
//   pentagon     generators v0..v4 (fifth roots of unity) written in the basis
//                v1 = (1,0), v2 = (0,1); then v0 = (phi-1)v1 - v2,
//                v3 = (phi-1)v2 - v1, v4 = -(phi-1)(v1+v2), so every
//                coordinate lies in Q(sqrt 5).
//   icosa_simple six five-fold vectors (0,1,phi), (0,-1,phi), (1,phi,0),
//                (-1,phi,0), (phi,0,1), (phi,0,-1) and their cyclic kin.
//   icosa_body   icosa_simple plus phi(1,1,1), the image of the body centre.
//   icosa_face   images of the D6 basis e1-e2, ..., e4-e5, e5-e6, e5+e6
//                (the even-sum sublattice of Z^6).
//
// Rhombus and rhombohedron scales: all tiles of one tiling share the edge
// length; normals are unit roots (rhombi) or the twofold vectors a_j x a_k
// (rhombohedra), so matched level constants are proportional to area/volume.

#include <string>
#include <utility>
#include <vector>

#include "qtk/construction.hpp"

namespace qtk::catalog {

Quasilattice pentagon();
Quasilattice golden_line();  // Z + phi Z in R^1
Quasilattice icosa_simple();
Quasilattice icosa_body();
Quasilattice icosa_face();
Quasilattice integer_lattice(std::size_t n);

Triple quasisphere(const FieldElem& s, const FieldElem& t);
Triple orbisphere(long p, long q);
Triple sphere();
Triple kite();
Triple thick_rhombus();
Triple thin_rhombus();
Triple prolate_rhombohedron();
Triple oblate_rhombohedron();
Triple cube();
Triple tetrahedron();
Triple octahedron();
Triple dodecahedron();
Triple icosahedron();

/// Normal and level of the kite's symmetry axis (through the 72 and 144
/// degree vertices); the positive side contains the half-kite with normals
/// X1, X2.
std::pair<KVector, FieldElem> kite_axis();

std::vector<std::string> triple_names();
std::vector<std::string> lattice_names();
/// Looks up a triple by name; quasisphere uses (s, t) = (1, phi) and
/// orbisphere (p, q) = (2, 3).
Triple triple_by_name(const std::string& name);
Quasilattice lattice_by_name(const std::string& name);

}  // namespace qtk::catalog
