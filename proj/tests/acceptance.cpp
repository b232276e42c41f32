// Acceptance checks: one PASS/FAIL line per criterion.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "qtk/catalog.hpp"
#include "qtk/io.hpp"
#include "qtk/tiling.hpp"

using namespace qtk;

namespace {

const FieldElem kPhi = FieldElem::phi();

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

/// Rows of the level set, each scaled so its first nonzero coefficient is 1.
std::vector<LevelRow> normalized_rows(const Presentation& p) {
  std::vector<LevelRow> out;
  for (auto r : p.level_rows) {
    FieldElem lead = 0;
    for (const auto& c : r.coefficients)
      if (!c.is_zero()) {
        lead = c;
        break;
      }
    for (auto& c : r.coefficients) c = c / lead;
    r.constant = r.constant / lead;
    out.push_back(r);
  }
  return out;
}

std::vector<std::size_t> support(const KVector& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back(i);
  return s;
}

bool disjoint_pairs(const Presentation& p, std::size_t rows) {
  if (p.level_rows.size() != rows) return false;
  std::set<std::size_t> seen;
  for (const auto& r : p.level_rows) {
    auto s = support(r.coefficients);
    if (s.size() != 2) return false;
    for (auto i : s)
      if (!seen.insert(i).second) return false;
  }
  return true;
}

/// constant(a) / constant(b) for rows of equal support, after normalization.
std::vector<FieldElem> matched_ratios(const Presentation& a, const Presentation& b) {
  std::vector<FieldElem> out;
  auto ra = normalized_rows(a), rb = normalized_rows(b);
  for (const auto& x : ra)
    for (const auto& y : rb)
      if (support(x.coefficients) == support(y.coefficients)) {
        expect(x.coefficients == y.coefficients, "matched rows differ in shape");
        out.push_back(x.constant / y.constant);
      }
  return out;
}

bool lattices_agree(std::size_t n, const std::vector<KVector>& a, const std::vector<KVector>& b) {
  // span_Z(a + Z^n) == span_Z(b + Z^n)
  std::vector<KVector> ea = a, eb = b;
  for (std::size_t i = 0; i < n; ++i) {
    KVector e(n, FieldElem(0));
    e[i] = 1;
    ea.push_back(e);
    eb.push_back(e);
  }
  Quasilattice la(n, ea), lb(n, eb);
  for (const auto& v : ea)
    if (!member(lb, v)) return false;
  for (const auto& v : eb)
    if (!member(la, v)) return false;
  return true;
}

// 1. Quasisphere.
void quasisphere() {
  Presentation p = build_presentation(catalog::quasisphere(1, kPhi));
  expect(p.level_rows.size() == 1, "expected one level row");
  auto r = normalized_rows(p)[0];
  expect(r.coefficients == KVector{1, kPhi} && r.constant == kPhi, "row is not |z1|^2 + φ|z2|^2 = φ");
  expect(p.cont_gens.size() == 1 && same_row_space(p.cont_gens, {{1, kPhi}}, 2), "N0 direction is not (1, φ)");
  expect(p.component_invariants.trivial(), "component group not trivial");
}

// 2. Orbisphere and sphere.
void orbisphere() {
  auto charts = build_charts(catalog::orbisphere(2, 3));
  expect(charts.size() == 2, "expected two charts");
  std::multiset<std::vector<Integer>> torsion;
  for (const auto& c : charts) {
    expect(c.gamma_invariants.free_rank == 0, "orbisphere chart group infinite");
    torsion.insert(c.gamma_invariants.torsion);
  }
  expect(torsion == std::multiset<std::vector<Integer>>{{3}, {2}}, "chart groups are not Z/3 and Z/2");
  for (const auto& c : build_charts(catalog::sphere())) expect(c.gamma_invariants.trivial(), "sphere chart group nontrivial");
}

// 3. Kite.
void kite() {
  Triple t = catalog::kite();
  Presentation p = build_presentation(t);
  std::vector<KVector> rows;
  for (const auto& r : p.level_rows) rows.push_back(r.coefficients);
  std::vector<KVector> stacked = rows;
  stacked.push_back({kPhi, 1, kPhi, 0});
  stacked.push_back({0, kPhi, 1, kPhi});
  expect(rows.size() == 2 && k_rank(KMatrix::from_rows(stacked, 4)) == 2, "level rows span a different space");
  std::vector<KVector> gens = p.cont_gens;
  gens.push_back({-1, 1, 0, kPhi});
  gens.push_back({kPhi, 0, 1, -1});
  expect(p.cont_gens.size() == 2 && k_rank(KMatrix::from_rows(gens, 4)) == 2, "N0 spans a different space");
  // Constants agree with the kite geometry up to one positive scalar per row.
  for (const auto& r : p.level_rows) {
    FieldElem c = 0;
    for (std::size_t j = 0; j < 4; ++j) c -= r.coefficients[j] * t.polytope.halfspace(j).level;
    expect(c == r.constant, "level constant differs from -Σ β_j λ_j");
  }

  const auto charts = build_charts(t);
  const Chart* chart = nullptr;
  for (const auto& c : charts)
    if (c.active == std::vector<std::size_t>{1, 2}) chart = &c;
  expect(chart != nullptr, "no chart with z1, z4 nonzero");
  expect(chart->gamma_invariants == AbelianGroupInvariants{2, {}}, "Γ is not free of rank 2");
  expect(lattices_agree(2, chart->gamma_gens, {{kPhi, 0}, {0, kPhi}}), "Γ differs from <(φ,0),(0,φ)> mod Z^2");
  expect(chart->domain.size() == 2, "expected two domain inequalities");
  std::set<std::pair<std::string, std::string>> shapes;
  std::vector<FieldElem> bounds;
  for (const auto& q : chart->domain) {
    FieldElem m = q.coefficients[0] < q.coefficients[1] ? q.coefficients[0] : q.coefficients[1];
    expect(m.sign() > 0, "domain coefficient not positive");
    shapes.insert({(q.coefficients[0] / m).str(), (q.coefficients[1] / m).str()});
    bounds.push_back(q.bound / m);
  }
  expect(shapes == std::set<std::pair<std::string, std::string>>{{FieldElem(1).str(), kPhi.str()}, {kPhi.str(), FieldElem(1).str()}},
         "domain coefficients are not {1, φ} and {φ, 1}");
  expect(bounds[0] == bounds[1], "domain bounds differ");
  expect(chart->domain[0].bound == chart->domain[1].bound, "raw domain bounds differ");
}

// 4. Half-kite.
void half_kite() {
  auto [axis, level] = catalog::kite_axis();
  auto cut = cut_and_present(catalog::kite(), axis, level);
  const Presentation& p = cut.plus_presentation;
  expect(p.cont_gens.size() == 1 && same_row_space(p.cont_gens, {{1, kPhi, kPhi}}, 3), "N0 not along (1, φ, φ)");
  expect(p.level_rows.size() == 1 && normalized_rows(p)[0].coefficients == KVector{1, kPhi, kPhi},
         "level row not proportional to |z1|^2 + φ|z2|^2 + φ|z3|^2");
  expect(p.component_invariants == AbelianGroupInvariants{1, {}}, "component group is not Z");
  // (e^{2πis}, e^{2πiφs}, e^{2πiφ(s+k)}) at s = 0, k = 1.
  auto gen = component_class(cut.plus, {0, 0, kPhi});
  expect(gen.has_value() && gen->size() == 1 && abs((*gen)[0]) == 1, "(0,0,φ) does not generate N/N0");
  // Every element of the paper's family lies in N and its class is k times the generator.
  for (long k = -3; k <= 3; ++k)
    for (const FieldElem& s : {FieldElem(0), FieldElem(Rational(1, 3)), kPhi}) {
      auto c = component_class(cut.plus, {s, kPhi * s, kPhi * (s + k)});
      expect(c.has_value() && (*c)[0] == (*gen)[0] * k, "paper family element has the wrong class");
    }
  Integer g = 0;
  for (const auto& d : p.disc_gens) {
    auto c = component_class(cut.plus, d);
    expect(c.has_value(), "discrete generator outside N");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), (*c)[0].get_mpz_t());
  }
  expect(g == 1, "discrete generators do not generate N/N0");
}

// 5. Rhombus and rhombohedron pairs.
void rhombi() {
  Presentation thick = build_presentation(tile_triple("thick_rhombus"));
  Presentation thin = build_presentation(tile_triple("thin_rhombus"));
  expect(disjoint_pairs(thick, 2) && disjoint_pairs(thin, 2), "rhombus rows do not decouple");
  auto r = matched_ratios(thick, thin);
  expect(r.size() == 2, "rhombus rows do not match");
  for (const auto& x : r) expect(x == kPhi, "thick:thin ratio is not φ");
  Presentation prolate = build_presentation(tile_triple("prolate_rhombohedron"));
  Presentation oblate = build_presentation(tile_triple("oblate_rhombohedron"));
  expect(disjoint_pairs(prolate, 3) && disjoint_pairs(oblate, 3), "rhombohedron rows do not decouple");
  auto s = matched_ratios(prolate, oblate);
  expect(s.size() == 3, "rhombohedron rows do not match");
  for (const auto& x : s) expect(x == kPhi, "prolate:oblate ratio is not φ");
  // Float projection of the printed radii.
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const double thick_r2 = 0.5 * std::sqrt(2 + phi), thin_r2 = std::sqrt(2 + phi) / (2 * phi);
  const double prolate_r2 = std::pow(2 * (3 - phi), -0.5), oblate_r2 = std::pow(2 * phi * phi * (3 - phi), -0.5);
  expect(std::abs(thick_r2 / thin_r2 - oracle::approx(r[0])) < 1e-12, "thick:thin radii disagree");
  expect(std::abs(prolate_r2 / oblate_r2 - oracle::approx(s[0])) < 1e-12, "prolate:oblate radii disagree");
}

// 6. Regular polyhedra.
void polyhedra() {
  auto cube = classify(catalog::cube());
  expect(cube.kind == SpaceKind::manifold, "cube not a manifold");
  expect(disjoint_pairs(build_presentation(catalog::cube()), 3), "cube rows do not decouple");
  auto tet = classify(catalog::tetrahedron());
  expect(tet.kind == SpaceKind::manifold, "tetrahedron not a manifold");
  Presentation tp = build_presentation(catalog::tetrahedron());
  expect(tp.level_rows.size() == 1 && tp.level_rows[0].coefficients == KVector{1, 1, 1, 1}, "tetrahedron row");
  expect(same_row_space(tp.cont_gens, {{1, 1, 1, 1}}, 4), "tetrahedron N0 not the diagonal circle");
  auto oct = classify(catalog::octahedron());
  expect(oct.refused() && oct.summary == "rational but not simple" && oct.rational && !oct.simple, "octahedron");
  bool refused = false;
  try {
    build_presentation(catalog::octahedron());
  } catch (const Refusal& e) {
    refused = e.kind() == "stratified-by-manifolds";
  }
  expect(refused, "octahedron construction not refused");
  auto dod = classify(catalog::dodecahedron());
  expect(dod.kind == SpaceKind::quasifold && dod.simple && !dod.rational, "dodecahedron flags");
  auto charts = build_charts(catalog::dodecahedron());
  expect(charts.size() == 20, "dodecahedron chart count");
  for (const auto& c : charts) expect(!c.gamma_invariants.finite(), "dodecahedron chart group finite");
  auto ico = classify(catalog::icosahedron());
  expect(ico.refused() && ico.summary == "neither rational nor simple" && !ico.rational && !ico.simple, "icosahedron");
}

// 7. Tilings.
void tilings() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  for (auto s : {TilingSystem::p2, TilingSystem::p3})
    for (auto k : {TileKind::acute, TileKind::obtuse}) {
      Patch seed = seed_patch(s, k);
      for (std::size_t n = 0; n <= 6; ++n) {
        Patch d = deflate(seed, n);
        expect(inflate(d, n) == seed, "inflate(deflate(seed)) differs from seed");
        expect(check_patch(d), "children do not tile a parent");
      }
      for (const auto& t : leaves(deflate(seed, 6))) check_half_tile(t);
    }
  // Three-child rule: acute in P2, the 108-degree half-rhombus in P3.
  for (auto [s, k] : {std::pair{TilingSystem::p2, TileKind::acute}, std::pair{TilingSystem::p3, TileKind::obtuse}}) {
    Patch seed = seed_patch(s, k);
    std::size_t big = 1, small = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
      std::tie(big, small) = std::pair{2 * big + small, big + small};
      auto [a, o] = counts(deflate(seed, n));
      auto got = k == TileKind::acute ? std::pair{a, o} : std::pair{o, a};
      expect(got == std::pair{big, small}, "counts break the Robinson recurrence");
    }
    expect(std::abs(double(big) / double(small) - phi) < 1e-3, "count ratio at k = 10 is not near φ");
  }
}

// 8. Property suites.
void properties() {
  oracle::Random rnd(8);
  for (int i = 0; i < 1000; ++i) {
    unsigned long D = std::vector<unsigned long>{2, 3, 5, 7}[rnd.integer(0, 3)];
    FieldElem x = rnd.element(D), y = rnd.element(D), z = rnd.element(D);
    expect(x + y == y + x && x * y == y * x, "commutativity");
    expect((x + y) + z == x + (y + z) && (x * y) * z == x * (y * z), "associativity");
    expect(x * (y + z) == x * y + x * z, "distributivity");
    expect(x - x == FieldElem(0) && x * FieldElem(1) == x, "identities");
    if (!x.is_zero()) expect(x * x.inverse() == FieldElem(1), "inverse");
    expect(x.sign() == oracle::float_sign(x), "sign");
  }
  for (int i = 0; i < 200; ++i) {
    std::size_t r = rnd.integer(1, 4), c = rnd.integer(1, 5);
    KMatrix a(r, c);
    for (std::size_t p = 0; p < r; ++p)
      for (std::size_t q = 0; q < c; ++q) a(p, q) = rnd.element(5, 4);
    KVector x(c);
    for (auto& v : x) v = rnd.element(5, 4);
    auto sol = k_solve(a, a * x);
    expect(sol && a * sol->particular == a * x, "k_solve re-substitution");
    IntMatrix m = rnd.matrix(r, c);
    IntVector y(c);
    for (auto& v : y) v = rnd.integer(-5, 5);
    auto isol = int_solve(m, m * y);
    expect(isol && m * *isol == m * y, "int_solve re-substitution");
    auto s = snf(m);
    expect(s.U * m * s.V == s.S && oracle::unimodular(s.U) && oracle::unimodular(s.V), "SNF identities");
  }
  for (const auto& entry : std::filesystem::directory_iterator(QTK_DATA_DIR)) {
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    io::Json doc = io::parse_document(text.str());
    if (io::document_kind(doc) == "triple") {
      Triple t = io::triple_from_json(doc);
      for (std::size_t j = 0; j < t.d(); ++j) {
        auto c = member(t.lattice, t.polytope.halfspace(j).normal);
        expect(c && evaluate(t.lattice, c->coefficients) == t.polytope.halfspace(j).normal, "membership round-trip");
        expect(evaluate(t.lattice, t.certificates[j].coefficients) == t.polytope.halfspace(j).normal, "shipped certificate");
      }
      expect(io::dump(io::to_json(t)) == text.str(), "triple JSON not byte-stable");
      if (!classify(t).refused()) {
        Presentation p = build_presentation(t);
        std::string once = io::dump(io::to_json(p));
        expect(io::dump(io::to_json(io::presentation_from_json(io::parse_document(once)))) == once,
               "presentation JSON not byte-stable");
      }
    } else {
      Quasilattice q = io::quasilattice_from_json(doc);
      for (const auto& g : q.generators()) {
        auto c = member(q, g);
        expect(c && evaluate(q, c->coefficients) == g, "membership round-trip");
      }
      expect(io::dump(io::to_json(q, entry.path().stem().string())) == text.str(), "lattice JSON not byte-stable");
    }
  }
  for (const char* name : {"kite", "dodecahedron"}) {
    Triple t = catalog::triple_by_name(name);
    std::vector<HalfSpace> hs;
    for (const auto& h : t.polytope.halfspaces()) hs.push_back({h.normal, kPhi * h.level});
    Triple s = make_triple(t.name, t.field, PolytopeH(t.n(), hs), t.lattice);
    Presentation a = build_presentation(t), b = build_presentation(s);
    expect(a.cont_gens == b.cont_gens && a.disc_gens == b.disc_gens, "scaling changed the group");
    for (std::size_t k = 0; k < a.level_rows.size(); ++k)
      expect(b.level_rows[k].constant == kPhi * a.level_rows[k].constant, "constants do not scale");
  }
  Patch p = deflate(seed_patch(TilingSystem::p2, TileKind::acute), 5);
  std::string once = io::dump(io::to_json(p));
  expect(io::patch_from_json(io::parse_document(once)) == p, "patch round-trip");
  expect(io::dump(io::to_json(io::patch_from_json(io::parse_document(once)))) == once, "patch JSON not byte-stable");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"quasisphere presentation |z1|^2 + φ|z2|^2 = φ", quasisphere},
      {"orbisphere and sphere chart groups", orbisphere},
      {"kite level rows, N0 and chart", kite},
      {"half-kite cut presentation and component group", half_kite},
      {"rhombus and rhombohedron decoupling with ratio φ", rhombi},
      {"regular polyhedra classification", polyhedra},
      {"tiling substitution suite", tilings},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first
              << (ok ? "" : "  (" + detail + ")") << "\n";
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
