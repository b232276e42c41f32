#include "qtk/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace qtk {

bool valid_discriminant(unsigned long D) {
  if (D == 0) return true;
  if (D == 1) return false;
  for (unsigned long p = 2; p * p <= D; ++p)
    if (D % (p * p) == 0) return false;
  return true;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error("malformed integer '" + std::string(s) + "'");
  Integer z(std::string(s), 10);
  return neg ? Integer(-z) : z;
}

constexpr std::string_view kSurd = "√";  // √

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!all_digits(den)) throw Error("malformed rational '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(num), d);
}

std::string rational_str(const Rational& q) { return q.get_str(); }

FieldElem::FieldElem(Rational a, Rational b, unsigned long D)
    : a_(std::move(a)), b_(std::move(b)), d_(D) {
  a_.canonicalize();
  b_.canonicalize();
  if (!valid_discriminant(D)) throw Error("D = " + std::to_string(D) + " is not square-free");
  if (D == 0 && sgn(b_) != 0) throw Error("sqrt part given for D = 0");
  normalize();
}

void FieldElem::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

FieldElem FieldElem::sqrt_of(unsigned long D) { return FieldElem(0, 1, D); }

FieldElem FieldElem::phi() { return FieldElem(Rational(1, 2), Rational(1, 2), 5); }

unsigned long common_field(unsigned long d1, unsigned long d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw FieldMismatch("mixing Q(sqrt " + std::to_string(d1) + ") and Q(sqrt " +
                      std::to_string(d2) + ")");
}

int FieldElem::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 D
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  // a^2 = b^2 D is impossible for square-free D >= 2 and b != 0
  return c > 0 ? sa : sb;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  // 1/(a + b r) = (a - b r) / (a^2 - b^2 D)
  Rational norm = a_ * a_ - b_ * b_ * d_;
  return FieldElem(a_ / norm, -b_ / norm, d_);
}

Integer FieldElem::floor() const {
  mpf_class approx(0, 512);
  if (d_ != 0) {
    mpf_class r(d_, 512);
    r = sqrt(r);
    approx = mpf_class(b_, 512) * r;
  }
  approx += mpf_class(a_, 512);
  mpf_class fl(0, 512);
  mpf_floor(fl.get_mpf_t(), approx.get_mpf_t());
  Integer k(fl);
  while ((*this - FieldElem(Rational(k))).sign() < 0) --k;
  while ((*this - FieldElem(Rational(k + 1))).sign() >= 0) ++k;
  return k;
}

FieldElem FieldElem::frac() const { return *this - FieldElem(Rational(floor())); }

double FieldElem::to_double() const {
  double v = a_.get_d();
  if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::string FieldElem::str() const {
  if (d_ == 0) return rational_str(a_);
  std::string out;
  if (sgn(a_) != 0) out = rational_str(a_);
  if (sgn(b_) > 0 && !out.empty()) out += "+";
  if (b_ == -1)
    out += "-";
  else if (b_ != 1)
    out += rational_str(b_);
  out += std::string(kSurd) + std::to_string(d_);
  return out;
}

FieldElem FieldElem::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error("empty field element");

  // Locate the surd marker, if any.
  std::size_t surd_pos = s.find(kSurd);
  std::size_t surd_len = kSurd.size();
  if (surd_pos == std::string::npos) {
    surd_pos = s.find("sqrt");
    surd_len = 4;
  }
  if (surd_pos == std::string::npos) return FieldElem(parse_rational(s));

  std::string dtext = s.substr(surd_pos + surd_len);
  if (!all_digits(dtext)) throw Error("malformed surd in '" + s + "'");
  unsigned long D = std::stoul(dtext);
  std::string head = s.substr(0, surd_pos);
  if (!head.empty() && head.back() == '*') head.pop_back();

  // head = [rational] [sign coefficient]; split at the last sign that is not
  // leading and not inside the coefficient.
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  std::string rat_part = split == std::string::npos ? "" : head.substr(0, split);
  std::string coef = split == std::string::npos ? head : head.substr(split);
  Rational b;
  if (coef.empty() || coef == "+")
    b = 1;
  else if (coef == "-")
    b = -1;
  else
    b = parse_rational(coef[0] == '+' ? std::string_view(coef).substr(1) : std::string_view(coef));
  Rational a = rat_part.empty() ? Rational(0) : parse_rational(rat_part);
  return FieldElem(a, b, D);
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& y) {
  d_ = common_field(d_, y.d_);
  a_ += y.a_;
  b_ += y.b_;
  normalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& y) {
  d_ = common_field(d_, y.d_);
  a_ -= y.a_;
  b_ -= y.b_;
  normalize();
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& y) {
  unsigned long D = common_field(d_, y.d_);
  Rational a = a_ * y.a_ + b_ * y.b_ * D;
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = D;
  normalize();
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& y) {
  if (y.is_zero()) throw DivisionByZero("division by zero");
  return *this *= y.inverse();
}

// --- vectors -------------------------------------------------------------

FieldElem dot(const KVector& x, const KVector& y) {
  if (x.size() != y.size()) throw Error("dot: dimension mismatch");
  FieldElem s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

KVector operator+(const KVector& x, const KVector& y) {
  if (x.size() != y.size()) throw Error("vector add: dimension mismatch");
  KVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

KVector operator-(const KVector& x, const KVector& y) {
  if (x.size() != y.size()) throw Error("vector sub: dimension mismatch");
  KVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

KVector operator*(const FieldElem& s, const KVector& x) {
  KVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = s * x[i];
  return r;
}

KVector operator-(const KVector& x) {
  KVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

bool is_zero(const KVector& x) {
  return std::all_of(x.begin(), x.end(), [](const FieldElem& e) { return e.is_zero(); });
}

unsigned long field_of(const KVector& x) {
  unsigned long D = 0;
  for (const auto& e : x) D = common_field(D, e.d());
  return D;
}

std::string str(const KVector& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i].str();
  os << ")";
  return os.str();
}

// --- matrices ------------------------------------------------------------

KMatrix KMatrix::from_rows(const std::vector<KVector>& rows, std::size_t cols) {
  KMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("KMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

KMatrix KMatrix::from_rows(const std::vector<KVector>& rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

KMatrix KMatrix::from_columns(const std::vector<KVector>& cols, std::size_t rows) {
  KMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("KMatrix: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

KMatrix KMatrix::identity(std::size_t n) {
  KMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

KVector KMatrix::row(std::size_t i) const {
  return KVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

KVector KMatrix::col(std::size_t j) const {
  KVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<KVector> KMatrix::row_list() const {
  std::vector<KVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

KMatrix KMatrix::transpose() const {
  KMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

KVector KMatrix::operator*(const KVector& x) const {
  if (x.size() != cols_) throw Error("matrix-vector: dimension mismatch");
  KVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
  return r;
}

KMatrix KMatrix::operator*(const KMatrix& y) const {
  if (cols_ != y.rows_) throw Error("matrix product: dimension mismatch");
  KMatrix r(rows_, y.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += (*this)(i, k) * y(k, j);
    }
  return r;
}

Echelon rref(const KMatrix& a) {
  Echelon e{a, {}};
  KMatrix& m = e.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    FieldElem inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      FieldElem f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t k_rank(const KMatrix& a) { return rref(a).pivots.size(); }

std::vector<KVector> row_space_basis(const std::vector<KVector>& rows, std::size_t cols) {
  Echelon e = rref(KMatrix::from_rows(rows, cols));
  std::vector<KVector> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

std::vector<KVector> kernel_basis(const KMatrix& a) {
  Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<KVector> raw;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    KVector v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;
  return row_space_basis(raw, a.cols());
}

bool same_row_space(const std::vector<KVector>& x, const std::vector<KVector>& y,
                    std::size_t cols) {
  return row_space_basis(x, cols) == row_space_basis(y, cols);
}

std::optional<KSolution> k_solve(const KMatrix& a, const KVector& b) {
  if (b.size() != a.rows()) throw Error("k_solve: right-hand side has wrong length");
  KMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  KSolution sol;
  sol.particular.assign(a.cols(), FieldElem());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    sol.particular[e.pivots[i]] = e.reduced(i, a.cols());
  sol.kernel = kernel_basis(a);
  return sol;
}

}  // namespace qtk
