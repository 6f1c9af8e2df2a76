#pragma once

// Heisenberg group law and vertical projections with offsets.
//
// Points and maps are templated on the scalar so the same code runs exactly
// (Rational) in tests and in double precision in the estimators.

#include <cstddef>
#include <type_traits>
#include <vector>

#include "heisbl/conditions.hpp"

namespace heisbl {

template <class T>
struct HeisenbergPoint {
  std::vector<T> x;
  std::vector<T> y;
  T t{};

  bool operator==(const HeisenbergPoint&) const = default;
};

template <class T>
HeisenbergPoint<T> heisenberg_identity(std::size_t n) {
  return {std::vector<T>(n, T(0)), std::vector<T>(n, T(0)), T(0)};
}

/// (x+x', y+y', t+t'+(x.y' - y.x')/2).
template <class T>
HeisenbergPoint<T> group_op(const HeisenbergPoint<T>& p, const HeisenbergPoint<T>& q) {
  if (p.x.size() != q.x.size() || p.y.size() != q.y.size() || p.x.size() != p.y.size())
    throw InvalidInput("group_op: dimension mismatch");
  HeisenbergPoint<T> r{p.x, p.y, p.t + q.t};
  T twist(0);
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    r.x[i] += q.x[i];
    r.y[i] += q.y[i];
    twist += p.x[i] * q.y[i] - p.y[i] * q.x[i];
  }
  r.t += twist / T(2);
  return r;
}

template <class T>
HeisenbergPoint<T> group_inverse(const HeisenbergPoint<T>& p) {
  HeisenbergPoint<T> r{p.x, p.y, -p.t};
  for (auto& v : r.x) v = -v;
  for (auto& v : r.y) v = -v;
  return r;
}

enum class Side { X, Y };

inline double to_double(const Rational& r) { return r.get_d(); }

template <class T>
T scalar_cast(const Rational& r) {
  if constexpr (std::is_same_v<T, double>)
    return r.get_d();
  else
    return T(r);
}

/// pi_j^{a,b}. The x-side map sends (x,y,t) to (Lx, y, t + (L^x+a).(L^y+b)/2),
/// the y-side map to (x, Ly, t - (L^x+a).(L^y+b)/2), with a, b in V_j^perp.
/// The projected block is written in coefficients c_i = b_i.v / |b_i|^2 with
/// respect to the mutually orthogonal integer basis b_i of V_j.
class VerticalProjection {
 public:
  VerticalProjection(const ProjectionConfig& config, std::size_t j, Side side, RationalVector a = {},
                     RationalVector b = {});

  Side side() const { return side_; }
  std::size_t n() const { return l_.rows(); }
  std::size_t block_dim() const { return block_basis_.size(); }
  /// n_j + n + 1.
  std::size_t codomain_dim() const { return block_dim() + n() + 1; }
  const RationalMatrix& projection() const { return l_; }
  const RationalMatrix& complement() const { return lhat_; }
  const RationalVector& offset_a() const { return a_; }
  const RationalVector& offset_b() const { return b_; }
  const std::vector<RationalVector>& block_basis() const { return block_basis_; }
  /// |b_i| for each block basis vector: converts c_i to orthonormal coordinates.
  std::vector<double> block_norms() const;
  /// The vector sum_i c_i b_i in R^n.
  RationalVector block_vector(const RationalVector& coeffs) const;

  template <class T>
  std::vector<T> apply(const HeisenbergPoint<T>& p) const;

 private:
  template <class T>
  T twist(const std::vector<T>& x, const std::vector<T>& y) const;

  Side side_;
  RationalMatrix l_;
  RationalMatrix lhat_;
  RationalVector a_;
  RationalVector b_;
  std::vector<RationalVector> block_basis_;
  std::vector<Rational> block_norm2_;
};

template <class T>
T VerticalProjection::twist(const std::vector<T>& x, const std::vector<T>& y) const {
  const std::size_t n = this->n();
  T s(0);
  for (std::size_t i = 0; i < n; ++i) {
    T u = scalar_cast<T>(a_[i]), v = scalar_cast<T>(b_[i]);
    for (std::size_t k = 0; k < n; ++k) {
      if (lhat_(i, k) == 0) continue;
      u += scalar_cast<T>(lhat_(i, k)) * x[k];
      v += scalar_cast<T>(lhat_(i, k)) * y[k];
    }
    s += u * v;
  }
  return s / T(2);
}

template <class T>
std::vector<T> VerticalProjection::apply(const HeisenbergPoint<T>& p) const {
  if (p.x.size() != n() || p.y.size() != n()) throw InvalidInput("apply_projection: dimension mismatch");
  const auto& moved = side_ == Side::X ? p.x : p.y;
  std::vector<T> block;
  for (std::size_t i = 0; i < block_basis_.size(); ++i) {
    T c(0);
    for (std::size_t k = 0; k < n(); ++k) c += scalar_cast<T>(block_basis_[i][k]) * moved[k];
    block.push_back(c / scalar_cast<T>(block_norm2_[i]));
  }
  std::vector<T> out;
  out.reserve(codomain_dim());
  if (side_ == Side::X) {
    out.insert(out.end(), block.begin(), block.end());
    out.insert(out.end(), p.y.begin(), p.y.end());
    out.push_back(p.t + twist(p.x, p.y));
  } else {
    out.insert(out.end(), p.x.begin(), p.x.end());
    out.insert(out.end(), block.begin(), block.end());
    out.push_back(p.t - twist(p.x, p.y));
  }
  return out;
}

/// Free-function spelling of VerticalProjection::apply.
template <class T>
std::vector<T> apply_projection(const VerticalProjection& pi, const HeisenbergPoint<T>& p) {
  return pi.apply(p);
}

/// Per-map offsets (a_j, b_j), j = 0..2m-1, each a vector in R^n. Empty means zero.
struct Offsets {
  std::vector<RationalVector> a;
  std::vector<RationalVector> b;
};

/// The 2m maps of a config in index order: x-side maps first, then y-side.
std::vector<VerticalProjection> vertical_projections(const ProjectionConfig& config, const Offsets& offsets = {});

/// Orthonormal basis (double precision) of V, from its orthogonal integer basis.
std::vector<std::vector<double>> orthonormal_basis(const Subspace& v);

}  // namespace heisbl
