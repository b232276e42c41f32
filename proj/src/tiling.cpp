#include "qtk/tiling.hpp"

#include <algorithm>
#include <map>

#include "qtk/catalog.hpp"

namespace qtk {

std::string system_name(TilingSystem s) { return s == TilingSystem::p2 ? "p2" : "p3"; }

TilingSystem system_from_name(const std::string& s) {
  if (s == "p2") return TilingSystem::p2;
  if (s == "p3") return TilingSystem::p3;
  throw Error("unknown tiling system '" + s + "' (expected p2 or p3)");
}

std::string tile_kind_name(TileKind k) { return k == TileKind::acute ? "acute" : "obtuse"; }

TileKind tile_kind_from_name(const std::string& s) {
  if (s == "acute") return TileKind::acute;
  if (s == "obtuse") return TileKind::obtuse;
  throw Error("unknown half-tile kind '" + s + "'");
}

std::string chirality_name(Chirality c) { return c == Chirality::left ? "left" : "right"; }

Chirality chirality_from_name(const std::string& s) {
  if (s == "left") return Chirality::left;
  if (s == "right") return Chirality::right;
  throw Error("unknown chirality '" + s + "'");
}

namespace {

Chirality flipped(Chirality c) { return c == Chirality::left ? Chirality::right : Chirality::left; }

long max_scale(const std::vector<const Cyclo*>& pts) {
  long k = 0;
  for (auto* p : pts) k = std::max(k, p->scale());
  return k;
}

// Point at distance |XY|/phi from X towards Y.
Cyclo golden_cut(const Cyclo& x, const Cyclo& y) { return x + (y - x).over_phi(); }

}  // namespace

void check_half_tile(const HalfTile& t) {
  const auto& [a, b, c] = t.vertices;
  int o = orientation(a, b, c);
  if (o == 0) throw Error("degenerate half-tile");
  if ((o > 0) != (t.chirality == Chirality::left)) throw Error("half-tile chirality does not match its orientation");
  FieldElem ab = (b - a).norm2(), ac = (c - a).norm2(), bc = (c - b).norm2();
  const FieldElem phi2 = FieldElem::phi() * FieldElem::phi();
  bool ok = ab == ac && (t.kind == TileKind::acute ? ab == phi2 * bc : bc == phi2 * ab);
  if (!ok) throw Error("half-tile edge lengths do not match kind " + tile_kind_name(t.kind));
}

HalfTile seed_tile(TilingSystem s, TileKind k) {
  const Cyclo z = Cyclo::zeta(1), z3 = Cyclo::zeta(3), z4 = Cyclo::zeta(4);
  HalfTile t{k, Chirality::left, {}};
  if (s == TilingSystem::p2) {
    if (k == TileKind::acute)
      t.vertices = {Cyclo(0), Cyclo::phi(), Cyclo::phi() * -z3};  // legs phi, apex 36
    else
      t.vertices = {Cyclo(0), -z, Cyclo(1)};  // legs 1, apex 108
  } else {
    if (k == TileKind::acute)
      t.vertices = {Cyclo(0), Cyclo(1), -z3};
    else
      t.vertices = {Cyclo(0), Cyclo(1), -z4};
  }
  check_half_tile(t);
  return t;
}

Patch seed_patch(TilingSystem s, TileKind k) { return Patch{s, 0, {PatchNode{seed_tile(s, k), {}}}}; }

namespace {

std::pair<std::size_t, std::size_t> pairing_edge(TilingSystem s) {
  return s == TilingSystem::p2 ? std::pair<std::size_t, std::size_t>{0, 1} : std::pair<std::size_t, std::size_t>{1, 2};
}

}  // namespace

Patch mirror_doubled_seed(TilingSystem s, TileKind k) {
  Patch p = seed_patch(s, k);
  const HalfTile& t = p.roots.front().tile;
  auto [i, j] = pairing_edge(s);
  HalfTile m{k, flipped(t.chirality), {}};
  for (std::size_t v = 0; v < 3; ++v)
    m.vertices[v] = (v == i || v == j) ? t.vertices[v] : reflect(t.vertices[v], t.vertices[i], t.vertices[j]);
  check_half_tile(m);
  p.roots.push_back(PatchNode{m, {}});
  return p;
}

std::vector<HalfTile> substitute(TilingSystem s, const HalfTile& t) {
  const long k0 = max_scale({&t.vertices[0], &t.vertices[1], &t.vertices[2]});
  const long k = k0 + 1;
  const Cyclo a = t.vertices[0].lifted(k0), b = t.vertices[1].lifted(k0), c = t.vertices[2].lifted(k0);
  const Chirality same = t.chirality, flip = flipped(t.chirality);
  const TileKind A = TileKind::acute, O = TileKind::obtuse;
  std::vector<HalfTile> out;
  auto add = [&](TileKind kind, Chirality ch, const Cyclo& x, const Cyclo& y, const Cyclo& z) {
    out.push_back(HalfTile{kind, ch, {x.lifted(k), y.lifted(k), z.lifted(k)}});
  };
  if (s == TilingSystem::p2) {
    if (t.kind == TileKind::acute) {
      Cyclo p = golden_cut(a, b), r = golden_cut(c, a);
      add(A, same, c, p, b);
      add(A, flip, c, p, r);
      add(O, same, r, a, p);
    } else {
      Cyclo r = golden_cut(b, c);
      add(A, flip, b, a, r);
      add(O, same, r, c, a);
    }
  } else {
    if (t.kind == TileKind::acute) {
      Cyclo p = golden_cut(a, b);
      add(A, same, c, p, b);
      add(O, same, p, c, a);
    } else {
      Cyclo q = golden_cut(b, a), r = golden_cut(b, c);
      add(O, same, r, c, a);
      add(O, flip, q, r, b);
      add(A, flip, r, q, a);
    }
  }
  return out;
}

namespace {

void grow(PatchNode& node, TilingSystem s) {
  if (node.children.empty()) {
    for (auto& c : substitute(s, node.tile)) node.children.push_back(PatchNode{std::move(c), {}});
    return;
  }
  for (auto& c : node.children) grow(c, s);
}

void prune(PatchNode& node, std::size_t level, std::size_t target) {
  if (level == target) {
    node.children.clear();
    return;
  }
  for (auto& c : node.children) prune(c, level + 1, target);
}

void collect(const PatchNode& node, std::vector<HalfTile>& out) {
  if (node.children.empty()) {
    out.push_back(node.tile);
    return;
  }
  for (const auto& c : node.children) collect(c, out);
}

bool check_tree(const PatchNode& node) {
  if (!children_tile_parent(node)) return false;
  return std::all_of(node.children.begin(), node.children.end(), check_tree);
}

}  // namespace

Patch deflate(const Patch& p, std::size_t steps) {
  Patch out = p;
  for (std::size_t i = 0; i < steps; ++i)
    for (auto& r : out.roots) grow(r, p.system);
  out.depth = p.depth + steps;
  return out;
}

Patch inflate(const Patch& p, std::size_t steps) {
  if (steps > p.depth) throw Error("cannot inflate beyond seed");
  Patch out = p;
  for (auto& r : out.roots) prune(r, 0, p.depth - steps);
  out.depth = p.depth - steps;
  return out;
}

std::vector<HalfTile> leaves(const Patch& p) {
  std::vector<HalfTile> out;
  for (const auto& r : p.roots) collect(r, out);
  return out;
}

std::pair<std::size_t, std::size_t> counts(const Patch& p) {
  std::pair<std::size_t, std::size_t> c{0, 0};
  for (const auto& t : leaves(p)) (t.kind == TileKind::acute ? c.first : c.second)++;
  return c;
}

namespace {

using Key = Cyclo::Coeffs;

struct DirectedEdge {
  Cyclo from, to;
};

std::array<Cyclo, 3> counterclockwise(const HalfTile& t) {
  const auto& v = t.vertices;
  if (orientation(v[0], v[1], v[2]) > 0) return v;
  return {v[0], v[2], v[1]};
}

}  // namespace

bool children_tile_parent(const PatchNode& node) {
  if (node.children.empty()) return true;
  std::vector<const Cyclo*> pts;
  for (const auto& v : node.tile.vertices) pts.push_back(&v);
  for (const auto& c : node.children)
    for (const auto& v : c.tile.vertices) pts.push_back(&v);
  const long k = max_scale(pts);

  std::map<std::pair<Key, Key>, std::vector<DirectedEdge>> edges;
  for (const auto& c : node.children) {
    auto v = counterclockwise(c.tile);
    for (std::size_t i = 0; i < 3; ++i) {
      const Cyclo& x = v[i];
      const Cyclo& y = v[(i + 1) % 3];
      auto rev = edges.find({y.coeffs_at(k), x.coeffs_at(k)});
      if (rev != edges.end() && !rev->second.empty()) {
        rev->second.pop_back();
        continue;
      }
      edges[{x.coeffs_at(k), y.coeffs_at(k)}].push_back({x, y});
    }
  }
  std::map<Key, std::vector<DirectedEdge>> by_start;
  std::size_t remaining = 0;
  for (auto& [key, list] : edges)
    for (auto& e : list) {
      by_start[key.first].push_back(e);
      ++remaining;
    }

  auto pv = counterclockwise(node.tile);
  for (std::size_t i = 0; i < 3; ++i) {
    const Cyclo& p = pv[i];
    const Cyclo& q = pv[(i + 1) % 3];
    Cyclo cur = p;
    const Key end = q.coeffs_at(k);
    while (cur.coeffs_at(k) != end) {
      auto it = by_start.find(cur.coeffs_at(k));
      if (it == by_start.end()) return false;
      auto& list = it->second;
      auto e = std::find_if(list.begin(), list.end(), [&](const DirectedEdge& d) { return on_segment(d.to, p, q); });
      if (e == list.end()) return false;
      cur = e->to;
      list.erase(e);
      --remaining;
    }
  }
  return remaining == 0;
}

bool check_patch(const Patch& p) {
  return std::all_of(p.roots.begin(), p.roots.end(), check_tree);
}

std::string pair_mode_name(PairMode m) { return m == PairMode::kite_dart ? "kite_dart" : "rhombus"; }

PairMode pair_mode_from_name(const std::string& s) {
  if (s == "kite_dart") return PairMode::kite_dart;
  if (s == "rhombus") return PairMode::rhombus;
  throw Error("unknown pairing mode '" + s + "' (expected kite_dart or rhombus)");
}

Pairing pair_tiles(const Patch& p, PairMode mode) {
  const auto tiles = leaves(p);
  Pairing out;
  if (tiles.empty()) return out;
  auto [ei, ej] = pairing_edge(mode == PairMode::kite_dart ? TilingSystem::p2 : TilingSystem::p3);
  std::vector<const Cyclo*> pts;
  for (const auto& t : tiles)
    for (const auto& v : t.vertices) pts.push_back(&v);
  const long k = max_scale(pts);

  std::map<std::tuple<int, Key, Key>, std::vector<std::size_t>> groups;
  std::vector<std::tuple<int, Key, Key>> key_of;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    Key x = tiles[i].vertices[ei].coeffs_at(k), y = tiles[i].vertices[ej].coeffs_at(k);
    if (y < x) std::swap(x, y);
    key_of.emplace_back(static_cast<int>(tiles[i].kind), x, y);
    groups[key_of.back()].push_back(i);
  }
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const auto& g = groups[key_of[i]];
    bool pair = g.size() == 2 && tiles[g[0]].chirality != tiles[g[1]].chirality;
    if (!pair) {
      out.leftover.push_back(i);
      continue;
    }
    if (g[0] != i) continue;
    const HalfTile& h1 = tiles[g[0]];
    const HalfTile& h2 = tiles[g[1]];
    const std::size_t other = 3 - ei - ej;
    const Cyclo& p0 = h1.vertices[ei];
    const Cyclo& q0 = h1.vertices[ej];
    const Cyclo& x = h1.vertices[other];
    const Cyclo& y = h2.vertices[other];
    PairedTile t;
    const bool acute = h1.kind == TileKind::acute;
    t.shape = mode == PairMode::kite_dart ? (acute ? "kite" : "dart") : (acute ? "thin_rhombus" : "thick_rhombus");
    if (orientation(p0, x, q0) > 0)
      t.polygon = {p0, x, q0, y};
    else
      t.polygon = {p0, y, q0, x};
    t.halves = {g[0], g[1]};
    out.tiles.push_back(std::move(t));
  }
  return out;
}

Triple tile_triple(const std::string& kind) {
  if (kind == "kite") return catalog::kite();
  if (kind == "thick_rhombus") return catalog::thick_rhombus();
  if (kind == "thin_rhombus") return catalog::thin_rhombus();
  if (kind == "prolate_rhombohedron") return catalog::prolate_rhombohedron();
  if (kind == "oblate_rhombohedron") return catalog::oblate_rhombohedron();
  throw Error("unknown tile type '" + kind + "'");
}

}  // namespace qtk
