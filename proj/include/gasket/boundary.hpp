#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gasket/oneform.hpp"
#include "gasket/piecewise.hpp"
#include "gasket/rational.hpp"
#include "gasket/word.hpp"

namespace gasket {

// Normal part n·omega at F_w q_i oriented from K_w: the exact part's normal
// derivative plus the finite ancestor-chain loop sum.
Rat normal_part(const OneForm& omega, const VertexAddress& a);

// n·omega(F_w q_i) + n·omega(F_{w'} q_j) over the two addresses of a
// non-boundary junction; zero for divergence-free forms.
Rat normal_matching_defect(const OneForm& omega, const VertexAddress& junction);

struct TangentialPart {
  std::optional<Rat> value;
  std::string diagnosis;  // set when the descendant series diverges
  bool exists() const { return value.has_value(); }
};

// Tangential part t·omega at F_w q_i: ancestors folded via compose_cell, the
// descendant chain summed in closed form; exists iff sum |Theta_{w i^m}| 5^m
// converges (rays on the chain need |ratio| < 1/5).
TangentialPart tangential_part(const OneForm& omega, const VertexAddress& a);

// <omega, d^{(m)} phi> − sum over level-m cells of the boundary products
// (n·omega) phi; identically zero for divergence-free omega.
Rat gauss_green_defect(const OneForm& omega, const Piecewise& phi, int m);

enum class LimitKind {
  Converges,            // to -1/2 n·omega(F_w q_i)
  ConvergesWithOffset,  // critical chain scaling ratio 3/5
  Oscillates,           // chain ratio -3/5: two accumulation points
  Diverges,             // |chain ratio| > 3/5
};

struct NormalPartSequence {
  std::vector<std::pair<int, Rat>> values;  // (m, n·omega(F_{w i^m} q_j))
  LimitKind kind = LimitKind::Converges;
  std::optional<Rat> limit;         // finite limit when it exists
  std::optional<Rat> offset_limit;  // limit − (−1/2 n·omega(F_w q_i))
  Rat base_half;                    // −1/2 n·omega(F_w q_i)
  std::string note;
  // Exact closed form of values[m] − base_half when available (critical and
  // subcritical ray cases); empty otherwise.
  std::vector<std::pair<int, Rat>> offset_closed_form;
};

// The approach sequence n·omega(F_{w i^m} q_j), j != i, with the exact limit
// classification by the chain ratio. The loop data along (w,i) must consist
// of finitely many coefficients plus at most one ray.
NormalPartSequence normal_part_sequence(const OneForm& omega, const Word& w,
                                        int i, int j, int m_max);

}  // namespace gasket
