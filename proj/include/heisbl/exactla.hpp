#pragma once

// Exact rational linear algebra over GMP rationals.
//
// Everything here is exact; there is no floating point in this module.
// Values are immutable once built and may be shared between threads.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "heisbl/errors.hpp"

namespace heisbl {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InvalidInput.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);

/// Dense row-major matrix of canonical rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RationalMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  std::vector<RationalVector> columns() const;

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalVector apply(const RationalVector& v) const;

  bool is_zero() const;
  bool is_symmetric() const;
  bool operator==(const RationalMatrix& rhs) const;
  bool operator!=(const RationalMatrix& rhs) const { return !(*this == rhs); }

  /// Horizontal concatenation [this | rhs].
  RationalMatrix hcat(const RationalMatrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank via fraction-free (Bareiss) elimination on an integer-scaled copy.
std::size_t rank(const RationalMatrix& a);

/// Reduced row echelon form. `pivots` receives the pivot column of each nonzero row.
RationalMatrix rref(const RationalMatrix& a, std::vector<std::size_t>* pivots = nullptr);

/// Basis of the null space {v : a v = 0}, as columns of an a.cols() x k matrix.
RationalMatrix kernel(const RationalMatrix& a);

/// Inverse of a square nonsingular matrix. Throws InvalidInput when singular.
RationalMatrix inverse(const RationalMatrix& a);

/// Solves a x = b. Returns false when inconsistent; otherwise a particular
/// solution (free variables set to zero) is written to `x`.
bool solve(const RationalMatrix& a, const RationalVector& b, RationalVector& x);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Scales a nonzero vector to a primitive integer vector (gcd 1) keeping its sign.
RationalVector primitive(const RationalVector& v);

/// A linear subspace of Q^n stored by its canonical basis (reduced column
/// echelon form), so equal spans compare equal.
class Subspace {
 public:
  Subspace() = default;

  /// Span of the columns of `generators` (need not be independent).
  static Subspace span(const RationalMatrix& generators);
  static Subspace span(std::size_t ambient, const std::vector<RationalVector>& vectors);
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const RationalMatrix& basis() const { return basis_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  bool contains(const RationalVector& v) const;
  bool is_subspace_of(const Subspace& other) const;

  /// Orthogonal complement inside Q^n.
  Subspace orthogonal_complement() const;

  /// Mutually orthogonal primitive integer basis vectors (Gram-Schmidt, rescaled).
  std::vector<RationalVector> orthogonal_basis() const;

  /// True when spanned by standard basis vectors.
  bool is_coordinate() const;

  /// "{0}", "R^n", "<e1,e3>" or "<(1,1)>"-style label.
  std::string label() const;

  bool operator==(const Subspace& rhs) const { return ambient_ == rhs.ambient_ && basis_ == rhs.basis_; }
  bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }
  /// Deterministic total order (ambient, dim, entries) for sorting families.
  bool operator<(const Subspace& rhs) const;

 private:
  Subspace(std::size_t ambient, RationalMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  std::size_t ambient_ = 0;
  RationalMatrix basis_;
};

/// Subspace spanned by coordinate axes, indices 0-based and sorted.
class CoordinateSubspace {
 public:
  /// Throws InvalidInput on out-of-range or repeated indices.
  CoordinateSubspace(std::size_t ambient, std::vector<std::size_t> indices);

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  Subspace to_subspace() const;

 private:
  std::size_t ambient_;
  std::vector<std::size_t> indices_;
};

/// All 2^n coordinate subspaces of Q^n, ordered by bitmask.
std::vector<Subspace> coordinate_subspaces(std::size_t n);

/// P = B (B^T B)^{-1} B^T. The trivial subspace gives the zero matrix.
RationalMatrix orthogonal_projection(const Subspace& v);

/// Span of L applied to V.
Subspace image(const RationalMatrix& l, const Subspace& v);

/// rank(L * basis(V)).
std::size_t dim_image(const RationalMatrix& l, const Subspace& v);

/// Orthogonal complement of V inside `ambient`. Requires V <= ambient.
Subspace complement_in(const Subspace& v, const Subspace& ambient);

Subspace sum(const Subspace& v, const Subspace& w);
Subspace intersect(const Subspace& v, const Subspace& w);

}  // namespace heisbl
