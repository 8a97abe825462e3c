#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gasket/piecewise.hpp"
#include "gasket/rational.hpp"
#include "gasket/word.hpp"

namespace gasket {

// Coefficient family Theta_{base·dir^k} = amp·ratio^k, k >= 0, along the
// corner chain of `dir` below `base`. Membership in the form space requires
// 5*ratio^2 < 3.
struct GeometricRay {
  Word base;
  int dir = 0;
  Rat amp{0};
  Rat ratio{0};

  bool membership_ok() const;
  // Coefficient at base·dir^k.
  Rat coefficient_at(int k) const;
  // If w lies on the chain, the index k with w = base·dir^k.
  std::optional<int> chain_index(const Word& w) const;
};

// Loop coefficients: a finite map plus geometric rays. A word may be covered
// by the finite map or by rays, never both; distinct user-provided rays live
// on disjoint chains (internal arithmetic may produce overlapping rays, whose
// coefficients add).
struct LoopSet {
  std::map<Word, Rat> finite;
  std::vector<GeometricRay> rays;

  bool empty() const { return finite.empty() && rays.empty(); }
  Rat coefficient(const Word& w) const;
  // True when only finitely many loop words lie strictly inside K_w.
  bool finitely_many_inside(const Word& w) const;
  // All loop words inside K_w (requires finitely_many_inside).
  std::vector<std::pair<Word, Rat>> words_inside(const Word& w) const;
  LoopSet scaled(const Rat& c) const;
};

// <Theta, Theta'> of two divergence-free parts in the loop basis:
// 30 * sum over words of a_w b_w (5/3)^{|w|}, ray tails summed in closed form.
Rat loop_inner(const LoopSet& a, const LoopSet& b);
// Same sum restricted to words w' with K_{w'} inside K_v.
Rat loop_inner_inside(const LoopSet& a, const LoopSet& b, const Word& v);

// Square integrable one-form in the finitely presented class
//   omega = d(exact) + sum_w Theta_w d psi_w,
// exact part a *continuous* piecewise harmonic function (hence an energy
// finite function), loops given by LoopSet. The two summands are the Hodge
// components: ||omega||^2 = E(exact) + 30 sum Theta_w^2 (5/3)^{|w|}.
class OneForm {
 public:
  OneForm() = default;
  OneForm(Piecewise exact, LoopSet loops);

  static OneForm gradient(Piecewise continuous);
  static OneForm loop(const Word& w, const Rat& coef);
  static OneForm ray(GeometricRay r);

  const Piecewise& exact() const { return exact_; }
  const LoopSet& loops() const { return loops_; }

  OneForm operator+(const OneForm& o) const;
  OneForm operator-(const OneForm& o) const;
  OneForm scaled(const Rat& c) const;

  Rat norm_sq() const;
  Rat inner(const OneForm& o) const;

  // omega∘F_w: ancestor loops fold into the exact part as harmonic
  // functions, descendant loop indices shift, rays shift base/amplitude.
  OneForm compose_cell(const Word& w) const;

  struct DivergenceCheck {
    bool v0 = false;    // in ker d*_{V_0}: matching condition off V_0
    bool full = false;  // additionally zero normal derivatives on V_0
  };
  DivergenceCheck divergence_free() const;

  // Sufficient minimal-energy-dominance certificate; false means
  // "not certified", not "not m.e.d.".
  bool med_certified() const;

  // nu_omega(K_w) >= 0, exact. Runs the refinement algorithm and the closed
  // form whenever each applies and asserts agreement.
  Rat measure_cell(const Word& w) const;
  // Refinement route: requires the composed form to be ray-free.
  Rat measure_cell_refine(const Word& w) const;
  // Closed-form route: requires divergence-free (v0).
  Rat measure_cell_closed(const Word& w) const;

  // nu_{omega,omega'}(K_w) by bilinearity.
  Rat pair_measure_cell(const OneForm& o, const Word& w) const;

  // <omega, d^{(m)} phi> for a (possibly discontinuous) piecewise phi.
  Rat inner_with_pw(const Piecewise& phi, int m) const;

  // The finite-loop combined potential g with 1_{K_v} omega = 1_{K_v} d g on
  // every cell of g's level; throws RayGeometryUnsupported if rays remain.
  Piecewise combined_potential() const;

 private:
  void validate() const;

  Piecewise exact_;  // continuous
  LoopSet loops_;
};

// Words of length <= n in the fixed basis order (lengths ascending,
// lexicographic within a length).
std::vector<Word> basis_words(int n);

// Gram matrix <d psi_w, d psi_w'> for all |w|,|w'| <= n in basis_words order.
std::vector<std::vector<Rat>> basis_gram(int n);

}  // namespace gasket
