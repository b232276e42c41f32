#include "qtk/polytope.hpp"

#include <algorithm>

namespace qtk {

PolytopeH::PolytopeH(std::size_t dim, std::vector<HalfSpace> halfspaces)
    : dim_(dim), halfspaces_(std::move(halfspaces)) {
  for (std::size_t j = 0; j < halfspaces_.size(); ++j) {
    if (halfspaces_[j].normal.size() != dim_)
      throw Error("half-space " + std::to_string(j) + " has the wrong dimension");
    if (is_zero(halfspaces_[j].normal))
      throw Error("half-space " + std::to_string(j) + " has a zero normal");
  }
}

std::vector<KVector> PolytopeH::normals() const {
  std::vector<KVector> out;
  for (const auto& h : halfspaces_) out.push_back(h.normal);
  return out;
}

std::vector<FieldElem> PolytopeH::levels() const {
  std::vector<FieldElem> out;
  for (const auto& h : halfspaces_) out.push_back(h.level);
  return out;
}

FieldElem PolytopeH::slack(std::size_t j, const KVector& mu) const {
  return dot(mu, halfspaces_.at(j).normal) - halfspaces_[j].level;
}

bool PolytopeH::contains(const KVector& mu) const {
  for (std::size_t j = 0; j < halfspaces_.size(); ++j)
    if (slack(j, mu).sign() < 0) return false;
  return true;
}

namespace {

// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

KMatrix rows_of(const PolytopeH& p, const std::vector<std::size_t>& idx) {
  KMatrix m(idx.size(), p.dim());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) m(i, j) = p.halfspace(idx[i]).normal[j];
  return m;
}

}  // namespace

std::vector<VertexData> enumerate_vertices(const PolytopeH& p) {
  std::vector<VertexData> out;
  const std::size_t n = p.dim();
  for_each_subset(p.facet_count(), n, [&](const std::vector<std::size_t>& idx) {
    KMatrix a = rows_of(p, idx);
    KVector b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = p.halfspace(idx[i]).level;
    auto sol = k_solve(a, b);
    if (!sol || !sol->kernel.empty()) return;
    if (!p.contains(sol->particular)) return;
    for (const auto& v : out)
      if (v.point == sol->particular) return;
    VertexData v{sol->particular, {}};
    for (std::size_t j = 0; j < p.facet_count(); ++j)
      if (p.slack(j, v.point).is_zero()) v.active.push_back(j);
    out.push_back(std::move(v));
  });
  return out;
}

int affine_dimension(const std::vector<KVector>& points) {
  if (points.empty()) return -1;
  std::vector<KVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  if (diffs.empty()) return 0;
  return static_cast<int>(k_rank(KMatrix::from_rows(diffs, points[0].size())));
}

namespace {

bool is_bounded(const PolytopeH& p) {
  const std::size_t n = p.dim();
  KMatrix all = KMatrix::from_rows(p.normals(), n);
  if (k_rank(all) < n) return false;  // a lineality direction exists
  // The recession cone {y : <y, X_j> >= 0} is pointed; it is nonzero iff one
  // of its extreme rays exists, and every extreme ray is cut out by n-1
  // independent tight constraints.
  bool bounded = true;
  auto test_ray = [&](const KVector& y) {
    for (const auto& h : p.halfspaces())
      if (dot(y, h.normal).sign() < 0) return false;
    return true;
  };
  if (n == 1) return !(test_ray({FieldElem(1)}) || test_ray({FieldElem(-1)}));
  for_each_subset(p.facet_count(), n - 1, [&](const std::vector<std::size_t>& idx) {
    if (!bounded) return;
    auto ker = kernel_basis(rows_of(p, idx));
    if (ker.size() != 1) return;
    if (test_ray(ker[0]) || test_ray(-ker[0])) bounded = false;
  });
  return bounded;
}

}  // namespace

ValidationReport validate(const PolytopeH& p) { return validate(p, enumerate_vertices(p)); }

ValidationReport validate(const PolytopeH& p, const std::vector<VertexData>& vertices) {
  ValidationReport r;
  r.vertex_count = vertices.size();
  r.bounded = is_bounded(p);
  std::vector<KVector> pts;
  for (const auto& v : vertices) pts.push_back(v.point);
  r.full_dim = r.bounded && affine_dimension(pts) == static_cast<int>(p.dim());
  for (std::size_t j = 0; j < p.facet_count(); ++j) {
    std::vector<KVector> on;
    for (const auto& v : vertices)
      if (std::binary_search(v.active.begin(), v.active.end(), j)) on.push_back(v.point);
    if (affine_dimension(on) != static_cast<int>(p.dim()) - 1) r.redundant.push_back(j);
  }
  r.irredundant_facets = r.redundant.empty();
  r.simple = !vertices.empty() && std::all_of(vertices.begin(), vertices.end(), [&](const VertexData& v) {
    return v.active.size() == p.dim();
  });
  return r;
}

namespace {

PolytopeH trimmed(const PolytopeH& p, std::vector<std::size_t>& origin) {
  ValidationReport r = validate(p);
  std::vector<HalfSpace> kept;
  origin.clear();
  for (std::size_t j = 0; j + 1 < p.facet_count(); ++j) {
    if (std::binary_search(r.redundant.begin(), r.redundant.end(), j)) continue;
    kept.push_back(p.halfspace(j));
    origin.push_back(j);
  }
  kept.push_back(p.halfspaces().back());
  return PolytopeH(p.dim(), std::move(kept));
}

}  // namespace

CutResult cut(const PolytopeH& p, const KVector& normal, const FieldElem& level) {
  if (normal.size() != p.dim()) throw Error("cut: normal has the wrong dimension");
  if (is_zero(normal)) throw Error("cut: zero normal");
  bool above = false, below = false;
  for (const auto& v : enumerate_vertices(p)) {
    int s = (dot(v.point, normal) - level).sign();
    above = above || s > 0;
    below = below || s < 0;
  }
  if (!above || !below) throw DegenerateCut("degenerate cut: hyperplane misses the interior");

  auto plus_hs = p.halfspaces();
  plus_hs.push_back({normal, level});
  auto minus_hs = p.halfspaces();
  minus_hs.push_back({-normal, -level});

  CutResult r;
  r.plus = trimmed(PolytopeH(p.dim(), std::move(plus_hs)), r.plus_origin);
  r.minus = trimmed(PolytopeH(p.dim(), std::move(minus_hs)), r.minus_origin);
  return r;
}

}  // namespace qtk
