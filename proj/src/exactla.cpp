#include "heisbl/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace heisbl {

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational { throw InvalidInput("not a rational number: '" + text + "'"); };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) return fail();
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  const std::size_t slash = s.find('/');
  const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (num_end <= i) return fail();
  for (std::size_t k = i; k < num_end; ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return fail();
  if (slash != std::string::npos) {
    if (slash + 1 >= s.size()) return fail();
    for (std::size_t k = slash + 1; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return fail();
  }
  Integer num(s.substr(i, num_end - i), 10);
  if (s[0] == '-') num = -num;
  Integer den = 1;
  if (slash != std::string::npos) den = Integer(s.substr(slash + 1), 10);
  if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw InvalidInput("matrix entry count does not match its shape");
  for (auto& e : data_) e.canonicalize();
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::zero(std::size_t rows, std::size_t cols) { return RationalMatrix(rows, cols); }

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<RationalVector>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InvalidInput("column length does not match ambient dimension");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<RationalVector> RationalMatrix::columns() const {
  std::vector<RationalVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidInput("matrix product dimension mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix sum dimension mismatch");
  RationalMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix difference dimension mismatch");
  RationalMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw InvalidInput("matrix-vector dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

RationalMatrix RationalMatrix::hcat(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw InvalidInput("hcat row mismatch");
  RationalMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, cols_ + c) = rhs(r, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

std::size_t rank(const RationalMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (rows == 0 || cols == 0) return 0;
  // Clear denominators row by row; scaling a row does not change the rank.
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());
  }
  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m[r][k] = m[rk][c] * m[r][k] - m[r][c] * m[rk][k];
        mpz_divexact(m[r][k].get_mpz_t(), m[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][c] = 0;
    }
    prev = m[rk][c];
    ++rk;
  }
  return rk;
}

RationalMatrix rref(const RationalMatrix& a, std::vector<std::size_t>* pivots) {
  RationalMatrix m(a);
  std::vector<std::size_t> piv_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    const Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    piv_cols.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv_cols);
  return m;
}

RationalMatrix kernel(const RationalMatrix& a) {
  std::vector<std::size_t> piv;
  const RationalMatrix r = rref(a, &piv);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return RationalMatrix::from_columns(a.cols(), basis);
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::size_t> piv;
  const RationalMatrix r = rref(a.hcat(RationalMatrix::identity(n)), &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw InvalidInput("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

bool solve(const RationalMatrix& a, const RationalVector& b, RationalVector& x) {
  if (b.size() != a.rows()) throw InvalidInput("solve: right-hand side length mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  std::vector<std::size_t> piv;
  const RationalMatrix red = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return false;
  x.assign(a.cols(), Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, a.cols());
  return true;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InvalidInput("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector primitive(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  RationalVector out(v.size());
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(const RationalMatrix& generators) {
  const std::size_t n = generators.rows();
  std::vector<std::size_t> piv;
  const RationalMatrix r = rref(generators.transpose(), &piv);
  RationalMatrix basis(n, piv.size());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) basis(k, i) = r(i, k);
  return Subspace(n, std::move(basis));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<RationalVector>& vectors) {
  return span(RationalMatrix::from_columns(ambient, vectors));
}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, RationalMatrix(ambient, 0)); }

Subspace Subspace::full(std::size_t ambient) { return Subspace(ambient, RationalMatrix::identity(ambient)); }

bool Subspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) throw InvalidInput("vector length does not match ambient dimension");
  return rank(basis_.hcat(RationalMatrix::from_columns(ambient_, {v}))) == dim();
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw InvalidInput("subspaces live in different ambient spaces");
  return rank(other.basis_.hcat(basis_)) == other.dim();
}

Subspace Subspace::orthogonal_complement() const {
  if (dim() == 0) return full(ambient_);
  return span(kernel(basis_.transpose()));
}

std::vector<RationalVector> Subspace::orthogonal_basis() const {
  std::vector<RationalVector> out;
  for (std::size_t c = 0; c < dim(); ++c) {
    RationalVector v = basis_.column(c);
    for (const auto& u : out) {
      const Rational f = dot(v, u) / dot(u, u);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * u[k];
    }
    out.push_back(primitive(v));
  }
  return out;
}

bool Subspace::is_coordinate() const {
  for (std::size_t c = 0; c < dim(); ++c) {
    int nonzero = 0;
    for (std::size_t r = 0; r < ambient_; ++r)
      if (basis_(r, c) != 0) ++nonzero;
    if (nonzero != 1) return false;
  }
  return true;
}

std::string Subspace::label() const {
  if (is_zero()) return "{0}";
  if (is_full()) return "R^" + std::to_string(ambient_);
  std::ostringstream os;
  os << '<';
  if (is_coordinate()) {
    for (std::size_t c = 0; c < dim(); ++c) {
      for (std::size_t r = 0; r < ambient_; ++r)
        if (basis_(r, c) != 0) os << (c ? "," : "") << 'e' << r + 1;
    }
  } else {
    for (std::size_t c = 0; c < dim(); ++c) {
      const RationalVector v = primitive(basis_.column(c));
      os << (c ? "," : "") << '(';
      for (std::size_t r = 0; r < v.size(); ++r) os << (r ? "," : "") << v[r].get_str();
      os << ')';
    }
  }
  os << '>';
  return os.str();
}

bool Subspace::operator<(const Subspace& rhs) const {
  if (ambient_ != rhs.ambient_) return ambient_ < rhs.ambient_;
  if (dim() != rhs.dim()) return dim() < rhs.dim();
  for (std::size_t c = 0; c < dim(); ++c)
    for (std::size_t r = 0; r < ambient_; ++r) {
      const int cmpv = cmp(basis_(r, c), rhs.basis_(r, c));
      if (cmpv != 0) return cmpv > 0;
    }
  return false;
}

CoordinateSubspace::CoordinateSubspace(std::size_t ambient, std::vector<std::size_t> indices)
    : ambient_(ambient), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] >= ambient_)
      throw InvalidInput("coordinate index " + std::to_string(indices_[i] + 1) + " out of range 1.." +
                         std::to_string(ambient_));
    if (i > 0 && indices_[i] == indices_[i - 1])
      throw InvalidInput("coordinate index " + std::to_string(indices_[i] + 1) + " repeated");
  }
}

Subspace CoordinateSubspace::to_subspace() const {
  std::vector<RationalVector> vs;
  for (auto i : indices_) {
    RationalVector e(ambient_);
    e[i] = 1;
    vs.push_back(std::move(e));
  }
  return Subspace::span(ambient_, vs);
}

std::vector<Subspace> coordinate_subspaces(std::size_t n) {
  std::vector<Subspace> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) idx.push_back(i);
    out.push_back(CoordinateSubspace(n, idx).to_subspace());
  }
  return out;
}

// ---------------------------------------------------------------------------

RationalMatrix orthogonal_projection(const Subspace& v) {
  const std::size_t n = v.ambient_dim();
  if (v.is_zero()) return RationalMatrix::zero(n, n);
  const RationalMatrix& b = v.basis();
  const RationalMatrix bt = b.transpose();
  return b * inverse(bt * b) * bt;
}

Subspace image(const RationalMatrix& l, const Subspace& v) {
  if (l.cols() != v.ambient_dim()) throw InvalidInput("image: dimension mismatch");
  if (v.is_zero()) return Subspace::zero(l.rows());
  return Subspace::span(l * v.basis());
}

std::size_t dim_image(const RationalMatrix& l, const Subspace& v) {
  if (l.cols() != v.ambient_dim()) throw InvalidInput("dim_image: dimension mismatch");
  if (v.is_zero()) return 0;
  return rank(l * v.basis());
}

Subspace complement_in(const Subspace& v, const Subspace& ambient) {
  if (!v.is_subspace_of(ambient)) throw InvalidInput("complement_in: subspace is not contained in the ambient");
  return intersect(ambient, v.orthogonal_complement());
}

Subspace sum(const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != w.ambient_dim()) throw InvalidInput("sum: dimension mismatch");
  return Subspace::span(v.basis().hcat(w.basis()));
}

Subspace intersect(const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != w.ambient_dim()) throw InvalidInput("intersect: dimension mismatch");
  const std::size_t n = v.ambient_dim();
  if (v.is_zero() || w.is_zero()) return Subspace::zero(n);
  RationalMatrix neg_w = w.basis();
  for (std::size_t r = 0; r < neg_w.rows(); ++r)
    for (std::size_t c = 0; c < neg_w.cols(); ++c) neg_w(r, c) = -neg_w(r, c);
  const RationalMatrix k = kernel(v.basis().hcat(neg_w));
  if (k.cols() == 0) return Subspace::zero(n);
  RationalMatrix coeffs(v.dim(), k.cols());
  for (std::size_t r = 0; r < v.dim(); ++r)
    for (std::size_t c = 0; c < k.cols(); ++c) coeffs(r, c) = k(r, c);
  return Subspace::span(v.basis() * coeffs);
}

}  // namespace heisbl
