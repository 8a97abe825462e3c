#pragma once

#include <utility>
#include <vector>

#include "gasket/harmonic.hpp"
#include "gasket/rational.hpp"
#include "gasket/word.hpp"

namespace gasket {

// Piecewise n-harmonic function: one harmonic local representative per
// length-n word, possibly discontinuous at the level-n junctions. The piece
// stored for w is u^{(w)}∘F_w, i.e. corner values of u on the corners of K_w.
class Piecewise {
 public:
  Piecewise() : level_(0), pieces_(1) {}
  explicit Piecewise(Harmonic h) : level_(0), pieces_{std::move(h)} {}
  Piecewise(int level, std::vector<Harmonic> pieces);

  static Piecewise constant(const Rat& c) { return Piecewise(Harmonic::constant(c)); }

  // The loop potential psi_w: level |w|+1, supported on K_w, with the psi
  // value pattern on the three children of K_w and zero elsewhere.
  static Piecewise loop_potential(const Word& w);

  int level() const { return level_; }
  const std::vector<Harmonic>& pieces() const { return pieces_; }
  const Harmonic& piece(const Word& w) const;

  // Same function represented at level m >= level.
  Piecewise refined(int m) const;

  // u∘F_w at level max(level - |w|, 0).
  Piecewise restricted(const Word& w) const;

  // Triple of u∘F_walk for |walk| >= level (walks down into one piece).
  Harmonic cover_piece(const Word& walk) const;

  // Per containing-cell values of the point at refinement level
  // max(level, level_of(a)): one entry for unambiguous points, two (one per
  // side) at junctions of level <= level.
  std::vector<std::pair<Word, Rat>> values_at(const VertexAddress& a) const;

  // Value at an unambiguous point; at a junction both sides must agree.
  Rat eval_at(const VertexAddress& a) const;

  bool is_continuous_at(const VertexAddress& a) const;
  // Continuity at every junction of V_level \ V_0.
  bool is_continuous() const;

  // Kirchhoff defect at a junction of level <= level: the sum of the two
  // piece-level normal derivatives (the common r^{-level} factor dropped).
  Rat matching_defect(const VertexAddress& a) const;

  // Oriented normal derivative at F_w q_i computed from K_w, exact value
  // r^{-M} * nd(corner piece) with M = max(|w|, level).
  Rat point_normal_derivative(const VertexAddress& a) const;

  // Oriented tangential derivative at F_w q_i from K_w: 5^M * td(corner piece).
  Rat point_tangential_derivative(const VertexAddress& a) const;

  // nu_u(K_w): sum of r^{-M} * piece energies over the level-M sub-cells of
  // K_w, M = max(level, |w|). Uses the Gauss-Green boundary form per cell.
  Rat cell_energy(const Word& w) const;

  // Bilinear version nu_{u,v}(K_w) at the common refinement level.
  Rat cell_energy_pair(const Piecewise& other, const Word& w) const;

  // Level-m graph energy r^{-m} * sum over edges of squared differences, each
  // edge evaluated inside its level-m cell. Requires m >= level.
  Rat graph_energy(int m) const;
  // Serial reference implementation (identical result, no OpenMP).
  Rat graph_energy_serial(int m) const;

  Piecewise operator+(const Piecewise& o) const;
  Piecewise operator-(const Piecewise& o) const;
  Piecewise scaled(const Rat& c) const;

  // Same function (refines both to the common level and compares pieces).
  bool same_function(const Piecewise& o) const;
  bool operator==(const Piecewise&) const = default;

 private:
  int level_;
  std::vector<Harmonic> pieces_;  // 3^level entries, indexed by Word::index()
};

// nu_{u,v}(K_w); symmetric bilinear, additive over children.
Rat energy_measure_pair(const Piecewise& u, const Piecewise& v, const Word& w);

// All canonical junction addresses of level exactly n (n >= 1), i.e.
// V_n \ V_{n-1} junction points, in a fixed deterministic order.
std::vector<VertexAddress> junctions_at_level(int n);

// All canonical junction addresses of level <= n excluding V_0.
std::vector<VertexAddress> junctions_up_to(int n);

}  // namespace gasket
