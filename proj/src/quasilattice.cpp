#include "qtk/quasilattice.hpp"

namespace qtk {

Quasilattice::Quasilattice(std::size_t dim, std::vector<KVector> generators)
    : dim_(dim), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != dim_) throw Error("quasilattice generator has the wrong dimension");
    field_ = common_field(field_, field_of(g));
  }
  if (k_rank(KMatrix::from_rows(generators_, dim_)) != dim_)
    throw Error("quasilattice generators do not span K^" + std::to_string(dim_));
}

KVector evaluate(const Quasilattice& q, const IntVector& coefficients) {
  if (coefficients.size() != q.size()) throw Error("certificate has the wrong length");
  KVector out(q.dim());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (coefficients[i] == 0) continue;
    out = out + FieldElem(Rational(coefficients[i])) * q.generator(i);
  }
  return out;
}

namespace {

Integer lcm_of_denominators(const std::vector<Rational>& xs) {
  Integer l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// Rational components of a vector: all a-parts, then all b-parts when D > 0.
std::vector<Rational> split(const KVector& v, unsigned long D) {
  std::vector<Rational> out;
  for (const auto& e : v) out.push_back(e.a());
  if (D != 0)
    for (const auto& e : v) out.push_back(e.b());
  return out;
}

}  // namespace

std::pair<IntMatrix, IntVector> integer_system(const Quasilattice& q, const KVector& x) {
  if (x.size() != q.dim()) throw Error("vector has the wrong dimension");
  const unsigned long D = common_field(q.field(), field_of(x));
  std::vector<std::vector<Rational>> cols;
  std::vector<Rational> all;
  for (const auto& g : q.generators()) {
    cols.push_back(split(g, D));
    all.insert(all.end(), cols.back().begin(), cols.back().end());
  }
  auto rhs = split(x, D);
  all.insert(all.end(), rhs.begin(), rhs.end());
  Integer scale = lcm_of_denominators(all);
  const std::size_t rows = rhs.size();
  IntMatrix a(rows, q.size());
  IntVector b(rows);
  for (std::size_t j = 0; j < q.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) {
      Rational s = cols[j][i] * scale;
      a(i, j) = s.get_num();
    }
  for (std::size_t i = 0; i < rows; ++i) {
    Rational s = rhs[i] * scale;
    b[i] = s.get_num();
  }
  return {a, b};
}

std::optional<MembershipCertificate> member(const Quasilattice& q, const KVector& x) {
  auto [a, b] = integer_system(q, x);
  auto sol = int_solve(a, b);
  if (!sol) return std::nullopt;
  return MembershipCertificate{*sol};
}

IntMatrix relation_lattice(const Quasilattice& q) {
  auto [a, b] = integer_system(q, KVector(q.dim()));
  // a is components x generators; relations are integer row vectors r with
  // r a^T = 0.
  return left_kernel(a.transpose());
}

std::size_t z_rank(const Quasilattice& q) { return q.size() - relation_lattice(q).rows(); }

bool is_discrete(const Quasilattice& q) { return z_rank(q) == q.dim(); }

QuotientPresentation quotient_by(const Quasilattice& q,
                                 const std::vector<MembershipCertificate>& vectors) {
  IntMatrix rel = relation_lattice(q);
  IntMatrix sub(vectors.size(), q.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& c = vectors[i].coefficients;
    if (c.size() != q.size()) throw Error("certificate has the wrong length");
    for (std::size_t j = 0; j < q.size(); ++j) sub(i, j) = c[j];
  }
  QuotientPresentation p;
  p.map = quotient_map(rel.stacked(sub), q.size());
  p.invariants = p.map.invariants;
  for (std::size_t i = 0; i < q.size(); ++i) {
    IntVector e(q.size());
    e[i] = 1;
    p.generator_images.push_back(p.map.classify(e));
  }
  return p;
}

Quasilattice span_of(std::size_t dim, const std::vector<KVector>& vectors) {
  return Quasilattice(dim, vectors);
}

}  // namespace qtk
