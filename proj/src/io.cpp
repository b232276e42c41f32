#include "qtk/io.hpp"

#include <limits>

namespace qtk::io {

namespace {

// A JSON value together with its path, for error messages.
class Node {
 public:
  Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const Json& json() const { return j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(path_ + ": " + msg); }

  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

  Node at(const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    if (!j_.contains(key)) fail("missing key \"" + key + "\"");
    return Node(j_.at(key), path_ + "." + key);
  }

  Node at(std::size_t i) const { return Node(j_.at(i), path_ + "[" + std::to_string(i) + "]"); }

  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }

  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  bool boolean() const {
    if (!j_.is_boolean()) fail("expected a boolean");
    return j_.get<bool>();
  }

  Integer integer() const {
    if (j_.is_number_integer()) {
      if (j_.is_number_unsigned()) return Integer(std::to_string(j_.get<std::uint64_t>()));
      return Integer(std::to_string(j_.get<std::int64_t>()));
    }
    if (j_.is_string()) {
      Integer z;
      const std::string s = j_.get<std::string>();
      if (s.empty() || z.set_str(s, 10) != 0) fail("malformed integer '" + s + "'");
      return z;
    }
    fail("expected an integer");
  }

  std::size_t index() const {
    Integer z = integer();
    if (z < 0 || !z.fits_ulong_p()) fail("expected a non-negative index");
    return z.get_ui();
  }

  long small() const {
    Integer z = integer();
    if (!z.fits_slong_p()) fail("integer out of range");
    return z.get_si();
  }

 private:
  const Json& j_;
  std::string path_;
};

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json int_vector_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(integer_json(z));
  return a;
}

IntVector int_vector_from(const Node& n) {
  IntVector v;
  for (std::size_t i = 0; i < n.size(); ++i) v.push_back(n.at(i).integer());
  return v;
}

Json index_list_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto i : v) a.push_back(i);
  return a;
}

std::vector<std::size_t> index_list_from(const Node& n) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < n.size(); ++i) v.push_back(n.at(i).index());
  return v;
}

Json vector_json(const KVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

KVector vector_from(const Node& n, unsigned long D, std::size_t expected = 0) {
  if (expected != 0 && n.size() != expected)
    n.fail("expected " + std::to_string(expected) + " entries, got " + std::to_string(n.size()));
  KVector v;
  for (std::size_t i = 0; i < n.size(); ++i) v.push_back(field_elem_from_json(n.at(i).json(), D, n.at(i).path()));
  return v;
}

Json vector_list_json(const std::vector<KVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

std::vector<KVector> vector_list_from(const Node& n, unsigned long D, std::size_t len = 0) {
  std::vector<KVector> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(vector_from(n.at(i), D, len));
  return out;
}

Json header(const std::string& kind) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

Json field_json(unsigned long D) {
  Json f = Json::object();
  f["D"] = D;
  return f;
}

void check_header(const Node& n, const std::string& kind) {
  if (!n.json().is_object()) n.fail("expected an object");
  Node v = n.at("schema_version");
  if (v.small() != kSchemaVersion) v.fail("unsupported schema_version " + v.json().dump());
  if (n.has("kind") && n.at("kind").string() != kind)
    n.at("kind").fail("expected kind \"" + kind + "\", got \"" + n.at("kind").string() + "\"");
}

unsigned long field_from(const Node& n) {
  if (!n.has("field")) return 0;
  Node d = n.at("field").at("D");
  Integer D = d.integer();
  if (D < 0 || !D.fits_ulong_p() || !valid_discriminant(D.get_ui())) d.fail("D must be 0 or a square-free integer >= 2");
  return D.get_ui();
}

Json invariants_json(const AbelianGroupInvariants& g) {
  Json j = Json::object();
  j["free_rank"] = g.free_rank;
  j["torsion"] = int_vector_json(g.torsion);
  j["text"] = g.str();
  return j;
}

AbelianGroupInvariants invariants_from(const Node& n) {
  AbelianGroupInvariants g;
  g.free_rank = n.at("free_rank").index();
  g.torsion = int_vector_from(n.at("torsion"));
  return g;
}

Json cyclo_json(const Cyclo& z) {
  Json j = Json::object();
  j["c"] = int_vector_json(IntVector(z.coeffs().begin(), z.coeffs().end()));
  j["k"] = z.scale();
  return j;
}

Cyclo cyclo_from(const Node& n) {
  IntVector c = int_vector_from(n.at("c"));
  if (c.size() != 4) n.at("c").fail("expected 4 coefficients");
  return Cyclo({c[0], c[1], c[2], c[3]}, n.at("k").small());
}

Json quasilattice_body(const Quasilattice& q) {
  Json j = Json::object();
  j["dim"] = q.dim();
  j["generators"] = vector_list_json(q.generators());
  return j;
}

Quasilattice quasilattice_body_from(const Node& n, unsigned long D) {
  std::size_t dim = n.at("dim").index();
  auto gens = vector_list_from(n.at("generators"), D, dim);
  try {
    return Quasilattice(dim, gens);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

template <class F>
auto guarded(const Node& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidTriple&) {
    throw;
  } catch (const FieldMismatch&) {
    throw;
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

}  // namespace

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("$: invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const FieldElem& x) {
  Json j = Json::object();
  j["a"] = rational_str(x.a());
  j["b"] = rational_str(x.b());
  return j;
}

FieldElem field_elem_from_json(const Json& json, unsigned long D, const std::string& path) {
  Node n(json, path);
  if (json.is_string()) {
    FieldElem x;
    try {
      x = FieldElem::parse(json.get<std::string>());
    } catch (const Error& e) {
      n.fail(e.what());
    }
    if (x.d() != 0 && x.d() != D)
      throw FieldMismatch(path + ": element of Q(sqrt " + std::to_string(x.d()) + ") in a document over D = " +
                          std::to_string(D));
    return x;
  }
  auto rational = [&](const std::string& key) {
    Node c = n.at(key);
    std::string s = c.string();
    try {
      return parse_rational(s);
    } catch (const Error&) {
      c.fail("malformed rational '" + s + "'");
    }
  };
  Rational a = rational("a");
  Rational b = n.has("b") ? rational("b") : Rational(0);
  if (b != 0 && D == 0) n.at("b").fail("nonzero sqrt part in a document over Q (field D = 0)");
  return b == 0 ? FieldElem(a) : FieldElem(a, b, D);
}

Json to_json(const Quasilattice& q, const std::string& name) {
  Json j = header("quasilattice");
  j["name"] = name;
  j["field"] = field_json(q.field());
  j.update(quasilattice_body(q));
  return j;
}

Quasilattice quasilattice_from_json(const Json& json) {
  Node n(json, "$");
  check_header(n, "quasilattice");
  return quasilattice_body_from(n, field_from(n));
}

Json to_json(const Triple& t) {
  Json j = header("triple");
  j["name"] = t.name;
  j["field"] = field_json(t.field);
  j["dim"] = t.n();
  Json hs = Json::array();
  for (std::size_t i = 0; i < t.d(); ++i) {
    Json h = Json::object();
    h["normal"] = vector_json(t.polytope.halfspace(i).normal);
    h["lambda"] = to_json(t.polytope.halfspace(i).level);
    h["certificate"] = int_vector_json(t.certificates[i].coefficients);
    hs.push_back(std::move(h));
  }
  j["polytope"] = Json::object({{"halfspaces", std::move(hs)}});
  j["quasilattice"] = quasilattice_body(t.lattice);
  return j;
}

Triple triple_from_json(const Json& json) {
  Node n(json, "$");
  check_header(n, "triple");
  const unsigned long D = field_from(n);
  const std::size_t dim = n.at("dim").index();
  std::string name = n.has("name") ? n.at("name").string() : "triple";
  Node hs = n.at("polytope").at("halfspaces");
  std::vector<HalfSpace> halfspaces;
  std::vector<std::optional<IntVector>> certs;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    Node h = hs.at(i);
    halfspaces.push_back({vector_from(h.at("normal"), D, dim), field_elem_from_json(h.at("lambda").json(), D, h.at("lambda").path())});
    certs.push_back(h.has("certificate") ? std::optional<IntVector>(int_vector_from(h.at("certificate"))) : std::nullopt);
  }
  Quasilattice q = quasilattice_body_from(n.at("quasilattice"), D);
  if (q.dim() != dim) n.at("quasilattice").at("dim").fail("dimension differs from the polytope's");
  std::vector<MembershipCertificate> full;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    if (certs[i]) {
      if (certs[i]->size() != q.size())
        hs.at(i).at("certificate").fail("expected " + std::to_string(q.size()) + " coefficients");
      full.push_back({*certs[i]});
      continue;
    }
    auto c = member(q, halfspaces[i].normal);
    if (!c) throw InvalidTriple(hs.at(i).path() + ": normal is not in the quasilattice");
    full.push_back(*c);
  }
  return guarded(n, [&] {
    return make_triple(name, D, PolytopeH(dim, std::move(halfspaces)), std::move(q), std::move(full));
  });
}

Json to_json(const Presentation& p) {
  Json j = header("presentation");
  j["field"] = field_json(p.field);
  j["d"] = p.d;
  j["n"] = p.n;
  Json rows = Json::array();
  for (const auto& r : p.level_rows) {
    Json row = Json::object();
    row["coefficients"] = vector_json(r.coefficients);
    row["constant"] = to_json(r.constant);
    rows.push_back(std::move(row));
  }
  j["level_rows"] = std::move(rows);
  j["cont_gens"] = vector_list_json(p.cont_gens);
  j["disc_gens"] = vector_list_json(p.disc_gens);
  j["component_group"] = invariants_json(p.component_invariants);
  return j;
}

Presentation presentation_from_json(const Json& json) {
  Node n(json, "$");
  check_header(n, "presentation");
  Presentation p;
  p.field = field_from(n);
  p.d = n.at("d").index();
  p.n = n.at("n").index();
  Node rows = n.at("level_rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Node r = rows.at(i);
    p.level_rows.push_back({vector_from(r.at("coefficients"), p.field, p.d),
                            field_elem_from_json(r.at("constant").json(), p.field, r.at("constant").path())});
  }
  p.cont_gens = vector_list_from(n.at("cont_gens"), p.field, p.d);
  p.disc_gens = vector_list_from(n.at("disc_gens"), p.field, p.d);
  p.component_invariants = invariants_from(n.at("component_group"));
  return p;
}

Json charts_to_json(const std::vector<Chart>& charts, unsigned long D) {
  Json j = header("charts");
  j["field"] = field_json(D);
  Json list = Json::array();
  for (const auto& c : charts) {
    Json x = Json::object();
    x["vertex_index"] = c.vertex_index;
    x["vertex"] = vector_json(c.vertex);
    x["active"] = index_list_json(c.active);
    Json dom = Json::array();
    for (const auto& q : c.domain) {
      Json e = Json::object();
      e["facet"] = q.facet;
      e["coefficients"] = vector_json(q.coefficients);
      e["bound"] = to_json(q.bound);
      dom.push_back(std::move(e));
    }
    x["domain"] = std::move(dom);
    Json slots = Json::array();
    for (const auto& s : c.slots) {
      Json e = Json::object();
      e["facet"] = s.facet;
      e["ineq"] = s.ineq;
      e["display_scale"] = to_json(s.display_scale);
      slots.push_back(std::move(e));
    }
    x["slots"] = std::move(slots);
    x["gamma_gens"] = vector_list_json(c.gamma_gens);
    x["gamma"] = invariants_json(c.gamma_invariants);
    x["kind"] = kind_name(chart_kind(c.gamma_invariants));
    list.push_back(std::move(x));
  }
  j["charts"] = std::move(list);
  return j;
}

std::vector<Chart> charts_from_json(const Json& json) {
  Node n(json, "$");
  check_header(n, "charts");
  const unsigned long D = field_from(n);
  Node list = n.at("charts");
  std::vector<Chart> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    Node x = list.at(i);
    Chart c;
    c.vertex_index = x.at("vertex_index").index();
    c.vertex = vector_from(x.at("vertex"), D);
    c.active = index_list_from(x.at("active"));
    Node dom = x.at("domain");
    for (std::size_t k = 0; k < dom.size(); ++k) {
      Node e = dom.at(k);
      c.domain.push_back({e.at("facet").index(), vector_from(e.at("coefficients"), D, c.vertex.size()),
                          field_elem_from_json(e.at("bound").json(), D, e.at("bound").path())});
    }
    Node slots = x.at("slots");
    for (std::size_t k = 0; k < slots.size(); ++k) {
      Node e = slots.at(k);
      c.slots.push_back({e.at("facet").index(), e.at("ineq").index(),
                         field_elem_from_json(e.at("display_scale").json(), D, e.at("display_scale").path())});
    }
    c.gamma_gens = vector_list_from(x.at("gamma_gens"), D, c.vertex.size());
    c.gamma_invariants = invariants_from(x.at("gamma"));
    out.push_back(std::move(c));
  }
  return out;
}

Json to_json(const Classification& c) {
  Json j = header("classification");
  j["name"] = c.name;
  j["simple"] = c.simple;
  j["rational"] = c.rational;
  j["vertex_count"] = c.vertex_count;
  j["facet_count"] = c.facet_count;
  Json kinds = Json::array();
  for (auto k : c.chart_kinds) kinds.push_back(kind_name(k));
  j["chart_kinds"] = std::move(kinds);
  j["space_kind"] = kind_name(c.kind);
  j["summary"] = c.summary;
  j["refused"] = c.refused();
  return j;
}

Classification classification_from_json(const Json& json) {
  Node n(json, "$");
  check_header(n, "classification");
  Classification c;
  c.name = n.at("name").string();
  c.simple = n.at("simple").boolean();
  c.rational = n.at("rational").boolean();
  c.vertex_count = n.at("vertex_count").index();
  c.facet_count = n.at("facet_count").index();
  Node kinds = n.at("chart_kinds");
  for (std::size_t i = 0; i < kinds.size(); ++i)
    c.chart_kinds.push_back(guarded(kinds.at(i), [&] { return kind_from_name(kinds.at(i).string()); }));
  c.kind = guarded(n.at("space_kind"), [&] { return kind_from_name(n.at("space_kind").string()); });
  c.summary = n.at("summary").string();
  return c;
}

namespace {

Json node_json(const PatchNode& node) {
  Json j = Json::object();
  j["kind"] = tile_kind_name(node.tile.kind);
  j["chirality"] = chirality_name(node.tile.chirality);
  Json v = Json::array();
  for (const auto& z : node.tile.vertices) v.push_back(cyclo_json(z));
  j["vertices"] = std::move(v);
  Json ch = Json::array();
  for (const auto& c : node.children) ch.push_back(node_json(c));
  j["children"] = std::move(ch);
  return j;
}

PatchNode node_from(const Node& n, std::size_t level, std::size_t depth) {
  PatchNode node;
  node.tile.kind = guarded(n.at("kind"), [&] { return tile_kind_from_name(n.at("kind").string()); });
  node.tile.chirality = guarded(n.at("chirality"), [&] { return chirality_from_name(n.at("chirality").string()); });
  Node v = n.at("vertices");
  if (v.size() != 3) v.fail("a half-tile has exactly 3 vertices");
  for (std::size_t i = 0; i < 3; ++i) node.tile.vertices[i] = cyclo_from(v.at(i));
  guarded(n, [&] {
    check_half_tile(node.tile);
    return 0;
  });
  const bool leaf = !n.has("children") || (n.at("children").json().is_array() && n.at("children").json().empty());
  if (leaf) {
    if (level != depth) n.fail("leaf at level " + std::to_string(level) + " in a patch of depth " + std::to_string(depth));
    return node;
  }
  if (level == depth) n.fail("node below the declared depth");
  Node ch = n.at("children");
  for (std::size_t i = 0; i < ch.size(); ++i) node.children.push_back(node_from(ch.at(i), level + 1, depth));
  return node;
}

}  // namespace

Json to_json(const Patch& p) {
  Json j = header("patch");
  j["system"] = system_name(p.system);
  j["depth"] = p.depth;
  auto [a, o] = counts(p);
  j["counts"] = Json::object({{"acute", a}, {"obtuse", o}});
  Json roots = Json::array();
  for (const auto& r : p.roots) roots.push_back(node_json(r));
  j["roots"] = std::move(roots);
  return j;
}

Patch patch_from_json(const Json& json) {
  Node n(json, "$");
  check_header(n, "patch");
  Patch p;
  p.system = guarded(n.at("system"), [&] { return system_from_name(n.at("system").string()); });
  p.depth = n.at("depth").index();
  Node roots = n.at("roots");
  for (std::size_t i = 0; i < roots.size(); ++i) p.roots.push_back(node_from(roots.at(i), 0, p.depth));
  return p;
}

Json to_json(const Pairing& p, PairMode mode) {
  Json j = header("pairing");
  j["mode"] = pair_mode_name(mode);
  Json tiles = Json::array();
  for (const auto& t : p.tiles) {
    Json x = Json::object();
    x["shape"] = t.shape;
    Json poly = Json::array();
    for (const auto& z : t.polygon) poly.push_back(cyclo_json(z));
    x["polygon"] = std::move(poly);
    x["halves"] = Json::array({t.halves[0], t.halves[1]});
    tiles.push_back(std::move(x));
  }
  j["tiles"] = std::move(tiles);
  j["leftover"] = index_list_json(p.leftover);
  return j;
}

Json to_json(const CutPresentation& c) {
  Json j = header("cut");
  j["plus"] = Json::object({{"triple", to_json(c.plus)}, {"presentation", to_json(c.plus_presentation)}});
  j["minus"] = Json::object({{"triple", to_json(c.minus)}, {"presentation", to_json(c.minus_presentation)}});
  return j;
}

Json refusal_to_json(const std::string& name, const Refusal& r) {
  Json j = header("refusal");
  j["name"] = name;
  j["space_kind"] = r.kind();
  j["message"] = r.what();
  return j;
}

std::string document_kind(const Json& j) {
  if (!j.is_object()) throw ParseError("$: expected an object");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ParseError("$: missing key \"kind\"");
  return j.at("kind").get<std::string>();
}

}  // namespace qtk::io
