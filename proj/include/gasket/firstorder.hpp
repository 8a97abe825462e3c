#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gasket/boundary.hpp"
#include "gasket/oneform.hpp"
#include "gasket/piecewise.hpp"
#include "gasket/rational.hpp"
#include "gasket/word.hpp"

namespace gasket {

// Element of L^2(nu_omega) represented through the Hodge star: f is
// identified with the one-form xi = d^{(n)} potential + sum Phi_w d psi_w via
// f·omega = xi. Only cell functionals of f are exposed; the potential may be
// discontinuous.
struct L2Function {
  std::optional<Piecewise> potential;
  LoopSet loops;

  static L2Function gradient(Piecewise u);
  static L2Function loop_rep(LoopSet phis);
  static L2Function mixed(Piecewise u, LoopSet phis);

  // The representing one-form; requires a continuous potential.
  OneForm to_form() const;
};

// Hodge star is an isometric isomorphism iff omega is minimal
// energy-dominant; delegates to the sufficient certificate.
bool star_is_isomorphism(const OneForm& omega);

// ||f||^2_{L^2(nu_omega)} = ||xi||^2 by the isometry.
Rat l2_norm_sq(const L2Function& f, const OneForm& omega);

// Normal part n·(f omega)(a) of the representing form.
Rat fform_normal_part(const L2Function& f, const VertexAddress& a);

// Integral of f over K_w against nu_omega: boundary sums per refinement cell
// for the potential part and basis orthogonality for the loop part. Requires
// omega divergence-free (v0).
Rat grad_cell_integral(const L2Function& f, const OneForm& omega, const Word& w);

// Mean integrals over the cell approach K_{w i^m} of the junction F_w q_i.
std::vector<std::pair<int, Rat>> mean_integral_sequence(const L2Function& f,
                                                        const OneForm& omega,
                                                        const Word& w, int i,
                                                        int m_max);

// n·(f omega)(a) / n·omega(a); throws NormalPartZero on the excluded set.
Rat pointwise_ratio(const L2Function& f, const OneForm& omega,
                    const VertexAddress& a);

struct DomainCheck {
  bool v0_variant = false;   // u in D(d^perp_{V_0})
  bool full_variant = false; // additionally u = 0 on V_0 off ker n·omega
  std::string perp_description;
};

// u in D(d^perp_{V_0}) iff u is continuous at every junction of V_n with
// nonzero normal part of omega; for divergence-free omega then
// d^perp_{V_0} u = star_omega d^{(n)} u as a cell functional.
DomainCheck domain_check(const Piecewise& u, const OneForm& omega);

}  // namespace gasket
