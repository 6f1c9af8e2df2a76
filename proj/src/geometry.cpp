#include "heisbl/geometry.hpp"

#include <cmath>

namespace heisbl {

namespace {

RationalVector checked_offset(RationalVector v, std::size_t n, const RationalMatrix& l, const char* name) {
  if (v.empty()) return RationalVector(n, Rational(0));
  if (v.size() != n) throw InvalidInput(std::string("offset ") + name + " has the wrong length");
  for (const auto& c : l.apply(v))
    if (c != 0) throw InvalidInput(std::string("offset ") + name + " must lie in the kernel of the projection");
  return v;
}

}  // namespace

VerticalProjection::VerticalProjection(const ProjectionConfig& config, std::size_t j, Side side, RationalVector a,
                                       RationalVector b)
    : side_(side), l_(config.projection(j)), lhat_(config.complement_projection(j)) {
  const std::size_t n = config.n();
  a_ = checked_offset(std::move(a), n, l_, "a");
  b_ = checked_offset(std::move(b), n, l_, "b");
  block_basis_ = config.subspace(j).orthogonal_basis();
  for (const auto& v : block_basis_) block_norm2_.push_back(dot(v, v));
}

std::vector<double> VerticalProjection::block_norms() const {
  std::vector<double> out;
  for (const auto& n2 : block_norm2_) out.push_back(std::sqrt(n2.get_d()));
  return out;
}

RationalVector VerticalProjection::block_vector(const RationalVector& coeffs) const {
  if (coeffs.size() != block_basis_.size()) throw InvalidInput("block_vector: wrong coefficient count");
  RationalVector v(n(), Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t k = 0; k < n(); ++k) v[k] += coeffs[i] * block_basis_[i][k];
  return v;
}

std::vector<VerticalProjection> vertical_projections(const ProjectionConfig& config, const Offsets& offsets) {
  const std::size_t m = config.m();
  auto pick = [&](const std::vector<RationalVector>& vs, std::size_t i) {
    if (vs.empty()) return RationalVector{};
    if (vs.size() != 2 * m) throw InvalidInput("offsets must list one vector per map (2m entries)");
    return vs[i];
  };
  std::vector<VerticalProjection> out;
  for (std::size_t i = 0; i < 2 * m; ++i)
    out.emplace_back(config, i % m, i < m ? Side::X : Side::Y, pick(offsets.a, i), pick(offsets.b, i));
  return out;
}

std::vector<std::vector<double>> orthonormal_basis(const Subspace& v) {
  std::vector<std::vector<double>> out;
  for (const auto& b : v.orthogonal_basis()) {
    const double norm = std::sqrt(dot(b, b).get_d());
    std::vector<double> u;
    for (const auto& c : b) u.push_back(c.get_d() / norm);
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace heisbl
