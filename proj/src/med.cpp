#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gasket/oneform.hpp"

namespace gasket {

namespace {

constexpr int kExplicitChainSteps = 40;
constexpr int kDominanceGuard = 1000;

struct ChainState {
  Harmonic a;  // exact potential of the composed form on the chain cell
  Rat amp;     // loop coefficient of the chain cell itself
  Rat phi;
  int dir;
};

bool offchain_pieces_nonconstant(const ChainState& st) {
  for (int j = 0; j < 3; ++j) {
    if (j == st.dir) continue;
    const Harmonic p = st.a.extended(j) + psi_piece(j).scaled(st.amp);
    if (p.is_constant()) return false;
  }
  return true;
}

void chain_step(ChainState& st) {
  st.a = st.a.extended(st.dir) + psi_piece(st.dir).scaled(st.amp);
  st.amp *= st.phi;
}

// One geometric term |coef| * |base|^k of a corner-difference expansion.
struct GeoTerm {
  Rat coef;
  Rat abs_base;
};

Rat rabs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Smallest k such that the candidate strictly dominates the bounding terms
// for every k' >= k (all ratios |base_o|/|base_c| are < 1, so strictness
// persists once reached).
std::optional<int> dominance_index(const GeoTerm& cand,
                                   const std::vector<GeoTerm>& others) {
  for (const auto& o : others)
    if (o.coef != 0 && o.abs_base >= cand.abs_base) return std::nullopt;
  Rat lhs = rabs(cand.coef);
  if (lhs == 0) return std::nullopt;
  std::vector<Rat> rhs;
  for (const auto& o : others) rhs.push_back(rabs(o.coef));
  for (int k = 0; k <= kDominanceGuard; ++k) {
    Rat total(0);
    for (const Rat& t : rhs) total += t;
    if (lhs > total) return k;
    lhs *= cand.abs_base;
    for (std::size_t t = 0; t < rhs.size(); ++t)
      rhs[t] *= others[t].abs_base;
  }
  return std::nullopt;
}

// Certifies that both off-chain child pieces stay nonconstant for all k
// beyond the explicitly checked prefix. The corner differences of the child
// pieces expand over the geometric bases r^k, 5^{-k}, phi^k (polynomially
// weighted 1/5 terms are bounded by 2*(1/4)^k and only ever bound, never
// certify).
bool certify_chain_tail(const ChainState& st) {
  const int i = st.dir;
  const Harmonic::Jet jet = st.a.jet(i);
  const Rat s0 = jet.s, t0 = jet.a, amp = st.amp, phi = st.phi;
  const Rat fifth = make_rat(1, 5);

  const Harmonic hs = Harmonic::from_jet(i, {Rat(1), Rat(0), Rat(0)});
  const Harmonic ha = Harmonic::from_jet(i, {Rat(0), Rat(1), Rat(0)});

  for (int j = 0; j < 3; ++j) {
    if (j == i) continue;
    const Harmonic bs = hs.extended(j);
    const Harmonic ba = ha.extended(j);
    const Harmonic bp = psi_piece(j);
    bool child_certified = false;
    for (int d = 0; d < 3 && !child_certified; ++d) {
      const int e = (d + 1) % 3;
      const Rat ds = bs[d] - bs[e];
      const Rat dt = ba[d] - ba[e];
      const Rat da = bp[d] - bp[e];
      // Expansion of the difference at chain offset k.
      std::map<Rat, Rat> coef_by_base;  // signed base -> coefficient
      Rat poly_coef(0);                 // times k * 5^{-k}
      coef_by_base[res_scale()] += ds * s0;
      if (phi != fifth) {
        const Rat beta = 5 * amp / (5 * phi - 1);
        coef_by_base[fifth] += dt * (t0 - beta);
        coef_by_base[phi] += dt * beta + da * amp;
      } else {
        coef_by_base[fifth] += dt * t0 + da * amp;
        poly_coef = 5 * dt * amp;
      }
      // Candidate: the nonzero term with the strictly largest |base|.
      for (auto& [base, coef] : coef_by_base) {
        if (coef == 0) continue;
        GeoTerm cand{coef, rabs(base)};
        std::vector<GeoTerm> others;
        bool tie = false;
        for (auto& [b2, c2] : coef_by_base) {
          if (b2 == base || c2 == 0) continue;
          if (rabs(b2) == cand.abs_base) {
            tie = true;
            break;
          }
          others.push_back(GeoTerm{c2, rabs(b2)});
        }
        if (tie) continue;
        if (poly_coef != 0)
          others.push_back(GeoTerm{2 * poly_coef, make_rat(1, 4)});
        if (auto k = dominance_index(cand, others)) {
          // Differences are nonzero from offset *k on; check the gap.
          ChainState probe = st;
          bool gap_ok = true;
          for (int step = 0; step < *k; ++step) {
            if (!offchain_pieces_nonconstant(probe)) {
              gap_ok = false;
              break;
            }
            chain_step(probe);
          }
          if (gap_ok) child_certified = true;
          break;
        }
      }
    }
    if (!child_certified) return false;
  }
  return true;
}

}  // namespace

bool OneForm::med_certified() const {
  int m = exact_.level();
  for (const auto& [w, c] : loops_.finite) m = std::max(m, w.size() + 1);
  for (const auto& r : loops_.rays) m = std::max(m, r.base.size() + 1);

  // Combined potential of everything living above level m; ray words deeper
  // than m only touch the chain cells, handled separately.
  Piecewise g = exact_.refined(m);
  for (const auto& [w, c] : loops_.finite)
    g = g + Piecewise::loop_potential(w).refined(m).scaled(c);
  std::set<Word> chain_cells;
  for (const auto& r : loops_.rays) {
    for (int k = 0; r.base.size() + k + 1 <= m; ++k)
      g = g + Piecewise::loop_potential(r.base.concat(Word::repeated(r.dir, k)))
                  .refined(m)
                  .scaled(r.coefficient_at(k));
    const Word cell = r.base.concat(Word::repeated(r.dir, m - r.base.size()));
    if (!chain_cells.insert(cell).second) return false;  // overlapping chains
  }

  const std::size_t count = g.pieces().size();
  for (std::size_t c = 0; c < count; ++c) {
    const Word cell = Word::from_index(c, m);
    if (chain_cells.count(cell)) continue;
    if (g.pieces()[c].is_constant()) return false;
  }

  for (const auto& r : loops_.rays) {
    const Word cell = r.base.concat(Word::repeated(r.dir, m - r.base.size()));
    const OneForm composed = compose_cell(cell);
    if (!composed.loops().finite.empty() || composed.loops().rays.size() != 1 ||
        composed.exact().level() != 0)
      return false;  // not a clean single-chain tail; stay conservative
    const GeometricRay& tail = composed.loops().rays.front();
    if (!tail.base.empty() || tail.dir != r.dir) return false;
    ChainState st{composed.exact().pieces().front(), tail.amp, tail.ratio,
                  tail.dir};
    for (int k = 0; k < kExplicitChainSteps; ++k) {
      if (!offchain_pieces_nonconstant(st)) return false;
      chain_step(st);
    }
    if (!certify_chain_tail(st)) return false;
  }
  return true;
}

}  // namespace gasket
