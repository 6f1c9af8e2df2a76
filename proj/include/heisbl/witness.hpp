#pragma once

// Box families used to show that each linear condition on q is necessary,
// with the exponents their measures and projected measures scale with.

#include <string>
#include <vector>

#include "heisbl/conditions.hpp"

namespace heisbl {

enum class WitnessKind { A1, A2, B1, B2, C1, C2 };

const char* to_string(WitnessKind kind);
WitnessKind parse_witness_kind(const std::string& text);

/// A concrete product set: x ranges over a box in the orthonormal basis
/// x_basis (coefficients in [x_lo, x_hi]), likewise y, and t in [t_lo, t_hi].
struct WitnessBox {
  std::vector<std::vector<double>> x_basis;
  std::vector<double> x_lo, x_hi;
  std::vector<std::vector<double>> y_basis;
  std::vector<double> y_lo, y_hi;
  double t_lo = 0, t_hi = 0;

  /// Axis-aligned box with the standard bases.
  static WitnessBox axis_aligned(std::vector<double> x_lo, std::vector<double> x_hi, std::vector<double> y_lo,
                                 std::vector<double> y_hi, double t_lo, double t_hi);

  bool empty() const;
  double volume() const;
};

/// One block of a witness: coefficients along an orthonormal basis of `span`
/// range over [-s, s] with s = parameter^exponent.
struct WitnessBlock {
  Subspace span;
  int exponent = 0;
};

class BoxWitness {
 public:
  /// A1/A2 ignore V and W. B1/B2 use V. C1/C2 need W <= V^perp (else
  /// InvalidInput); C1 is parameterised by s = 1/R so that every ladder grows.
  static BoxWitness make(const ProjectionConfig& config, WitnessKind kind, const Subspace& v = {},
                         const Subspace& w = {});

  WitnessKind kind() const { return kind_; }
  const Subspace& v() const { return v_; }
  const Subspace& w() const { return w_; }
  /// "r", "R" or "1/R".
  const std::string& parameter() const { return parameter_; }
  const std::vector<WitnessBlock>& x_blocks() const { return x_blocks_; }
  const std::vector<WitnessBlock>& y_blocks() const { return y_blocks_; }
  int t_exponent() const { return t_exponent_; }

  /// |Omega| ~ parameter^omega_exponent.
  const Rational& omega_exponent() const { return omega_exponent_; }
  /// |pi_j(Omega)| ~ parameter^e_j (or <~ when images_are_upper_bounds()).
  const std::vector<Rational>& image_exponents() const { return image_exponents_; }
  bool images_are_upper_bounds() const { return upper_bounds_; }

  WitnessBox instantiate(double parameter) const;
  std::string description() const;

 private:
  WitnessKind kind_ = WitnessKind::A1;
  Subspace v_, w_;
  std::string parameter_;
  std::vector<WitnessBlock> x_blocks_, y_blocks_;
  int t_exponent_ = 0;
  Rational omega_exponent_;
  std::vector<Rational> image_exponents_;
  bool upper_bounds_ = false;
};

}  // namespace heisbl
