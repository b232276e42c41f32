#include "qtk/intlattice.hpp"

#include <sstream>

namespace qtk {

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& y) const {
  if (cols_ != y.rows_) throw Error("IntMatrix product: dimension mismatch");
  IntMatrix r(rows_, y.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += (*this)(i, k) * y(k, j);
    }
  return r;
}

IntVector IntMatrix::operator*(const IntVector& x) const {
  if (x.size() != cols_) throw Error("IntMatrix-vector: dimension mismatch");
  IntVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
  return r;
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
  if (cols_ != below.cols_) throw Error("IntMatrix stack: column mismatch");
  IntMatrix r(rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = below(i, j);
  return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// row_i -= q * row_j on both the working matrix and its multiplier.
void row_axpy(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) -= q * m(j, c);
}

void col_axpy(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) -= q * m(r, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hnf(const IntMatrix& a) {
  HermiteForm f{a, IntMatrix::identity(a.rows())};
  IntMatrix& H = f.H;
  IntMatrix& U = f.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    // Euclid down the column until a single nonzero remains at row r.
    while (true) {
      std::size_t best = H.rows();
      for (std::size_t i = r; i < H.rows(); ++i)
        if (H(i, c) != 0 && (best == H.rows() || abs(H(i, c)) < abs(H(best, c)))) best = i;
      if (best == H.rows()) break;
      H.swap_rows(r, best);
      U.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < H.rows(); ++i) {
        if (H(i, c) == 0) continue;
        Integer q = floor_div(H(i, c), H(r, c));
        row_axpy(H, i, r, q);
        row_axpy(U, i, r, q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(H(i, c), H(r, c));
      row_axpy(H, i, r, q);
      row_axpy(U, i, r, q);
    }
    ++r;
  }
  return f;
}

SmithDecomposition snf(const IntMatrix& a) {
  SmithDecomposition d{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  IntMatrix& S = d.S;
  const std::size_t m = S.rows();
  const std::size_t n = S.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S(i, j) != 0 && (pi == m || abs(S(i, j)) < abs(S(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return d;  // trailing block is zero
      S.swap_rows(t, pi);
      d.U.swap_rows(t, pi);
      S.swap_cols(t, pj);
      d.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = floor_div(S(i, t), S(t, t));
        row_axpy(S, i, t, q);
        row_axpy(d.U, i, t, q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = floor_div(S(t, j), S(t, t));
        col_axpy(S, j, t, q);
        col_axpy(d.V, j, t, q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and go again.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_axpy(S, t, bad, Integer(-1));
      row_axpy(d.U, t, bad, Integer(-1));
    }
    if (S(t, t) < 0) {
      negate_row(S, t);
      negate_row(d.U, t);
    }
  }
  return d;
}

std::optional<IntVector> int_solve(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw Error("int_solve: right-hand side has wrong length");
  SmithDecomposition d = snf(a);
  IntVector ub = d.U * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer s = i < a.cols() ? d.S(i, i) : Integer(0);
    if (s == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (ub[i] % s != 0) return std::nullopt;
    y[i] = ub[i] / s;
  }
  return d.V * y;
}

IntMatrix left_kernel(const IntMatrix& a) {
  HermiteForm f = hnf(a);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < f.H.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < f.H.cols(); ++j)
      if (f.H(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) rank = i + 1;
  }
  IntMatrix k(a.rows() - rank, a.rows());
  for (std::size_t i = rank; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) k(i - rank, j) = f.U(i, j);
  return k;
}

std::string AbelianGroupInvariants::str() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

QuotientMap quotient_map(const IntMatrix& relations, std::size_t k) {
  if (relations.cols() != k) throw Error("quotient_map: column mismatch");
  QuotientMap q;
  SmithDecomposition d = snf(relations);
  q.V = d.V;
  q.diagonal.assign(k, Integer(0));
  for (std::size_t i = 0; i < std::min(relations.rows(), k); ++i) q.diagonal[i] = d.S(i, i);
  for (const auto& s : q.diagonal) {
    if (s == 0)
      ++q.invariants.free_rank;
    else if (s != 1)
      q.invariants.torsion.push_back(s);
  }
  return q;
}

IntVector QuotientMap::classify(const IntVector& x) const {
  if (x.size() != V.rows()) throw Error("QuotientMap::classify: wrong length");
  IntVector y(V.cols());
  for (std::size_t j = 0; j < V.cols(); ++j)
    for (std::size_t i = 0; i < V.rows(); ++i) y[j] += x[i] * V(i, j);
  IntVector out;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (diagonal[j] == 0) out.push_back(y[j]);
  for (std::size_t j = 0; j < y.size(); ++j)
    if (diagonal[j] > 1) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), y[j].get_mpz_t(), diagonal[j].get_mpz_t());
      out.push_back(r);
    }
  return out;
}

AbelianGroupInvariants quotient_invariants(const IntMatrix& ambient, const IntMatrix& subgroup) {
  return quotient_map(ambient.stacked(subgroup), ambient.cols()).invariants;
}

std::string str(const IntVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace qtk
