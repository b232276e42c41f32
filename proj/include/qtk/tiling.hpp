#pragma once

// Penrose substitution tilings through Robinson half-tiles with exact
// vertices in Z[zeta].
//
// Labels are geometric: an acute half-tile has a 36 degree apex (half-kite
// in P2, half-thin rhombus in P3), an obtuse one a 108 degree apex (half-dart,
// half-thick rhombus).  Vertices are listed apex first.  In P2 the two legs
// satisfy |AB| = |AC|; the kite and dart halves pair across A-B.  In P3
// rhombus halves pair across the base B-C.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qtk/construction.hpp"
#include "qtk/cyclo.hpp"

namespace qtk {

enum class TilingSystem { p2, p3 };
enum class TileKind { acute, obtuse };
enum class Chirality { left, right };  // left: apex-first vertices counterclockwise

std::string system_name(TilingSystem s);
TilingSystem system_from_name(const std::string& s);
std::string tile_kind_name(TileKind k);
TileKind tile_kind_from_name(const std::string& s);
std::string chirality_name(Chirality c);
Chirality chirality_from_name(const std::string& s);

struct HalfTile {
  TileKind kind = TileKind::acute;
  Chirality chirality = Chirality::left;
  std::array<Cyclo, 3> vertices;  // apex, then the two base vertices
  friend bool operator==(const HalfTile&, const HalfTile&) = default;
};

/// Throws Error when the vertices are degenerate, the chirality does not
/// match the orientation, or the edge lengths do not fit the kind.
void check_half_tile(const HalfTile& t);

struct PatchNode {
  HalfTile tile;
  std::vector<PatchNode> children;
  friend bool operator==(const PatchNode&, const PatchNode&) = default;
};

/// A forest of substitution trees; all leaves sit at `depth`.
struct Patch {
  TilingSystem system = TilingSystem::p2;
  std::size_t depth = 0;
  std::vector<PatchNode> roots;
  friend bool operator==(const Patch&, const Patch&) = default;
};

/// Unit-size single half-tile, apex at the origin, left-handed.
HalfTile seed_tile(TilingSystem s, TileKind k);
Patch seed_patch(TilingSystem s, TileKind k);
/// Seed half-tile together with its mirror image across the pairing edge.
Patch mirror_doubled_seed(TilingSystem s, TileKind k);

/// Children of one half-tile under the substitution of system s.
std::vector<HalfTile> substitute(TilingSystem s, const HalfTile& t);
Patch deflate(const Patch& p, std::size_t steps);
/// Collapses the last `steps` tree levels.
Patch inflate(const Patch& p, std::size_t steps);

std::vector<HalfTile> leaves(const Patch& p);
/// (acute, obtuse) leaf counts.
std::pair<std::size_t, std::size_t> counts(const Patch& p);

/// Checks that the children of a node exactly tile it: after interior edges
/// cancel, the children's directed boundary edges chain along the parent's.
bool children_tile_parent(const PatchNode& node);
/// children_tile_parent at every node of the patch.
bool check_patch(const Patch& p);

enum class PairMode { kite_dart, rhombus };
std::string pair_mode_name(PairMode m);
PairMode pair_mode_from_name(const std::string& s);

struct PairedTile {
  std::string shape;              // kite, dart, thin_rhombus, thick_rhombus
  std::vector<Cyclo> polygon;     // counterclockwise
  std::array<std::size_t, 2> halves{};  // indices into leaves(p)
  friend bool operator==(const PairedTile&, const PairedTile&) = default;
};

struct Pairing {
  std::vector<PairedTile> tiles;
  std::vector<std::size_t> leftover;  // unpaired leaf indices
};

Pairing pair_tiles(const Patch& p, PairMode mode);

/// Shipped construction-ready triple of a tile type (kite, thick_rhombus,
/// thin_rhombus, prolate_rhombohedron, oblate_rhombohedron).
Triple tile_triple(const std::string& kind);

}  // namespace qtk
