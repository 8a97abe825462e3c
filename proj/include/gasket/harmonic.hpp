#pragma once

#include <array>

#include "gasket/rational.hpp"
#include "gasket/word.hpp"

namespace gasket {

// Harmonic function on a cell, stored as its three corner values
// (q_0, q_1, q_2 of the reference cell). Repeated harmonic extension
// determines the function everywhere; the level-m graph normal derivative at
// a corner is independent of m.
struct Harmonic {
  std::array<Rat, 3> v{Rat(0), Rat(0), Rat(0)};

  Harmonic() = default;
  Harmonic(Rat a, Rat b, Rat c) : v{std::move(a), std::move(b), std::move(c)} {}
  static Harmonic constant(const Rat& c) { return Harmonic(c, c, c); }

  const Rat& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
  Rat& operator[](int i) { return v[static_cast<std::size_t>(i)]; }

  // h∘F_i via the 2/5–1/5 rule: the midpoint of edge (q_i, q_j) gets
  // (2 v_i + 2 v_j + v_k) / 5.
  Harmonic extended(int child) const;
  // h∘F_w.
  Harmonic walked(const Word& w) const;

  // Value at F_w q_i of the reference cell.
  Rat eval(const VertexAddress& a) const;

  // 2 v_i − v_{i+1} − v_{i+2}; equals the renormalized limit because the
  // level-m expression is m-independent for harmonic functions.
  Rat normal_derivative(int corner) const;

  // v_{i+1} − v_{i+2}; equals the 5^n-scaled limit, which is constant in n.
  Rat tangential_derivative(int corner) const;

  // Boundary-sum form of the energy: sum over V_0 of (d_n h) g.
  Rat energy_pair(const Harmonic& g) const;
  Rat energy() const { return energy_pair(*this); }

  bool is_constant() const { return v[0] == v[1] && v[1] == v[2]; }

  // 1-jet at a corner: h = s*h_s + a*h_a + c in the frame centered there,
  // where h_s, h_a are the symmetric/antisymmetric unit harmonics.
  struct Jet {
    Rat s, a, c;
  };
  Jet jet(int corner) const;
  static Harmonic from_jet(int corner, const Jet& j);

  Harmonic operator+(const Harmonic& o) const;
  Harmonic operator-(const Harmonic& o) const;
  Harmonic scaled(const Rat& c) const;
  bool operator==(const Harmonic&) const = default;
};

// Local representative of the loop potential on the child cell K_i:
// 0 at q_i, +1 at q_{i+1}, -1 at q_{i+2}.
Harmonic psi_piece(int i);

// The harmonic function psi∘F_t for a nonempty word t (the loop potential of
// the whole gasket restricted to K_t).
Harmonic psi_restrict(const Word& t);

}  // namespace gasket
