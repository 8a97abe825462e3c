#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gasket/firstorder.hpp"
#include "gasket/harmonic.hpp"
#include "gasket/oneform.hpp"
#include "gasket/rational.hpp"

namespace gasket {

// Exact experiment record: sequence values, predicted limit, residual checks,
// pass/fail verdict. Divergence is always certified through closed forms with
// an explicit growth factor, never by overflow.
struct ExperimentReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<int, Rat>> sequence;
  // "p/q" for a finite limit, else "DIVERGES", "OSCILLATES", "+INF", "-INF".
  std::string limit;
  std::vector<Rat> residuals;  // |value − limit| when the limit is finite
  bool pass = false;
  std::string notes;
};

// Mean-integral sequence of f = star d u against omega toward F_w q_i versus
// the ratio of normal parts; chi/theta declare the loop layout case:
// (i) chi = 0, (ii) chi in {1,2} with theta < (3/5)^{3/2},
// (iii) chi = 3 with theta < sqrt(1/5).
ExperimentReport exp_pointwise(const Piecewise& u, const OneForm& omega,
                               const Word& w, int i, int m_max, int chi,
                               const Rat& theta);

// Normal-part approach along (w,i) toward q_j with the exact theta-case
// classification; critical ratio 3/5 reproduces the closed-form offset.
ExperimentReport exp_ntrh(const OneForm& omega, const Word& w, int i, int j,
                          int m_max);

// Ratio of normal parts along the sides for the loop family
// Phi_{0^k} = a phi^k against d h: four-way classification in phi.
ExperimentReport exp_sides(const Harmonic& h, const Rat& a, const Rat& phi,
                           int n_max);

// Vertical-line ratio cases at z_{n+1} = F_{0^n 1} q_2.
ExperimentReport exp_vertical_harmonic(const Harmonic& u, const Harmonic& h,
                                       int n_max);
ExperimentReport exp_vertical_ray(const Rat& a, const Rat& phi,
                                  const Harmonic& h, int n_max);
ExperimentReport exp_vertical_mixed(const Harmonic& u, const LoopSet& loops,
                                    const Harmonic& h, int n_max);

// Cut example with h = (1,0,0): vanishing normal derivatives along the
// vertical line, the finite-level telescoping identity on the left half, and
// the half-normal-derivative sequence at the chain points.
// uL[k] is the harmonic piece on K_{0^k 1}, uR[k] on K_{0^k 2}, k < N.
ExperimentReport exp_cut(const std::vector<Harmonic>& uL,
                         const std::vector<Harmonic>& uR, const Harmonic& phi,
                         int N);

}  // namespace gasket
