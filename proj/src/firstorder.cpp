#include "gasket/firstorder.hpp"

#include <stdexcept>

#include "gasket/errors.hpp"

namespace gasket {

namespace {

// <d^{(L)} u, sum Theta d psi> for a possibly discontinuous piecewise u:
// loops living inside a single level-L cell pair to zero (u is harmonic
// there), so only words shorter than L contribute.
Rat cross_pw_loops(const Piecewise& u, const LoopSet& loops) {
  Rat acc(0);
  const int level = u.level();
  for (const auto& [w, c] : loops.finite)
    if (w.size() < level)
      acc += c * Piecewise::loop_potential(w).cell_energy_pair(u, Word());
  for (const auto& r : loops.rays) {
    for (int k = 0; r.base.size() + k < level; ++k) {
      const Word w = r.base.concat(Word::repeated(r.dir, k));
      acc += r.coefficient_at(k) *
             Piecewise::loop_potential(w).cell_energy_pair(u, Word());
    }
  }
  return acc;
}

Rat loop_normal_contribution(const LoopSet& loops, const VertexAddress& a) {
  Rat acc(0);
  for (int len = 0; len < a.word.size(); ++len) {
    const Rat coef = loops.coefficient(a.word.prefix(len));
    if (coef == 0) continue;
    acc += coef *
           psi_restrict(a.word.suffix_from(len)).normal_derivative(a.corner);
  }
  return rat_pow(res_scale(), -a.word.size()) * acc;
}

}  // namespace

L2Function L2Function::gradient(Piecewise u) {
  L2Function f;
  f.potential = std::move(u);
  return f;
}

L2Function L2Function::loop_rep(LoopSet phis) {
  L2Function f;
  f.loops = std::move(phis);
  return f;
}

L2Function L2Function::mixed(Piecewise u, LoopSet phis) {
  L2Function f;
  f.potential = std::move(u);
  f.loops = std::move(phis);
  return f;
}

OneForm L2Function::to_form() const {
  return OneForm(potential.value_or(Piecewise{}), loops);
}

bool star_is_isomorphism(const OneForm& omega) { return omega.med_certified(); }

Rat l2_norm_sq(const L2Function& f, const OneForm& omega) {
  (void)omega;  // the Hodge star is isometric: ||f||^2 = ||xi||^2
  const Piecewise u = f.potential.value_or(Piecewise{});
  return u.cell_energy(Word()) + 2 * cross_pw_loops(u, f.loops) +
         loop_inner(f.loops, f.loops);
}

Rat fform_normal_part(const L2Function& f, const VertexAddress& a) {
  Rat acc = loop_normal_contribution(f.loops, a);
  if (f.potential) acc += f.potential->point_normal_derivative(a);
  return acc;
}

Rat grad_cell_integral(const L2Function& f, const OneForm& omega,
                       const Word& w) {
  if (omega.divergence_free().v0) {
    // Boundary route: Gauss-Green per refinement cell for the potential part
    // (with ancestor loops of f folded in), basis orthogonality for the loops
    // inside K_w.
    Piecewise pot = f.potential ? f.potential->restricted(w) : Piecewise{};
    for (int len = 0; len < w.size(); ++len) {
      const Rat coef = f.loops.coefficient(w.prefix(len));
      if (coef != 0)
        pot = pot + Piecewise(psi_restrict(w.suffix_from(len))).scaled(coef);
    }
    Rat acc(0);
    std::size_t count = 1;
    for (int k = 0; k < pot.level(); ++k) count *= 3;
    for (std::size_t c = 0; c < count; ++c) {
      const Word rel = Word::from_index(c, pot.level());
      const Harmonic& piece = pot.piece(rel);
      const Word cell = w.concat(rel);
      for (int i = 0; i < 3; ++i)
        acc += piece[i] * normal_part(omega, VertexAddress{cell, i});
    }
    return acc + loop_inner_inside(f.loops, omega.loops(), w);
  }
  // General route through the energy measure pairing; needs a representing
  // one-form atop a continuous potential.
  return f.to_form().pair_measure_cell(omega, w);
}

std::vector<std::pair<int, Rat>> mean_integral_sequence(const L2Function& f,
                                                        const OneForm& omega,
                                                        const Word& w, int i,
                                                        int m_max) {
  std::vector<std::pair<int, Rat>> seq;
  for (int m = 0; m <= m_max; ++m) {
    const Word cell = w.concat(Word::repeated(i, m));
    const Rat den = omega.measure_cell(cell);
    if (den == 0)
      throw ZeroMeasureCell("mean_integral_sequence: nu_omega(K_" + cell.str() +
                            ") = 0");
    seq.emplace_back(m, grad_cell_integral(f, omega, cell) / den);
  }
  return seq;
}

Rat pointwise_ratio(const L2Function& f, const OneForm& omega,
                    const VertexAddress& a) {
  const Rat den = normal_part(omega, a);
  if (den == 0)
    throw NormalPartZero("pointwise ratio at " + address_str(a) +
                         ": the junction lies in ker n.omega");
  return fform_normal_part(f, a) / den;
}

DomainCheck domain_check(const Piecewise& u, const OneForm& omega) {
  DomainCheck out;
  out.v0_variant = true;
  for (const auto& q : junctions_up_to(u.level())) {
    if (normal_part(omega, q) != 0 && !u.is_continuous_at(q)) {
      out.v0_variant = false;
      break;
    }
  }
  out.full_variant = out.v0_variant;
  if (out.full_variant) {
    for (int i = 0; i < 3; ++i) {
      const VertexAddress corner{Word(), i};
      if (normal_part(omega, corner) != 0 &&
          u.values_at(corner).front().second != 0) {
        out.full_variant = false;
        break;
      }
    }
  }
  if (out.v0_variant) {
    out.perp_description =
        omega.divergence_free().v0
            ? "d_perp u = star_omega d^{(n)} u as a cell functional (the "
              "u d*omega term vanishes)"
            : "d_perp u = star_omega d^{(n)} u - u d*_{V0} omega";
  } else {
    out.perp_description = "u is not in the domain of d_perp_{V0}";
  }
  return out;
}

}  // namespace gasket
