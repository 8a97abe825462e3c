#include "gasket/boundary.hpp"

#include <cassert>
#include <stdexcept>

#include "gasket/errors.hpp"

namespace gasket {

namespace {

// Loop contribution to the normal part at (w,i) from K_w: only loops whose
// cell properly contains the point contribute; these are the proper prefixes
// of w (the loop of K_w itself has zero normal derivative on its boundary).
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

struct ChainData {
  // Coefficients Theta at the relative words i^k of the composed form,
  // split into a finite list and at most one ray (offset, amp, ratio).
  std::vector<std::pair<int, Rat>> finite;  // (k, coefficient)
  bool has_ray = false;
  int ray_offset = 0;
  Rat ray_amp{0};
  Rat ray_ratio{0};

  // Partial sum S(m) = sum_{k < m} Theta_{i^k} 5^k.
  Rat partial_sum(int m) const {
    Rat s(0);
    for (const auto& [k, c] : finite)
      if (k < m) s += c * rat_pow(Rat(5), k);
    if (has_ray) {
      for (int k = ray_offset; k < m; ++k)
        s += ray_amp * rat_pow(ray_ratio, k - ray_offset) * rat_pow(Rat(5), k);
    }
    return s;
  }
};

ChainData chain_data(const LoopSet& loops, int dir) {
  ChainData cd;
  for (const auto& [w, c] : loops.finite)
    if (w.all_equal(dir)) cd.finite.emplace_back(w.size(), c);
  for (const auto& r : loops.rays) {
    if (!r.base.all_equal(dir)) continue;
    if (r.dir != dir) {
      // Only the base word of this ray lies on the chain.
      cd.finite.emplace_back(r.base.size(), r.amp);
      continue;
    }
    if (cd.has_ray)
      throw std::invalid_argument(
          "normal_part_sequence: more than one ray along the approach chain");
    cd.has_ray = true;
    cd.ray_offset = r.base.size();
    cd.ray_amp = r.amp;
    cd.ray_ratio = r.ratio;
  }
  return cd;
}

}  // namespace

Rat normal_part(const OneForm& omega, const VertexAddress& a) {
  return omega.exact().point_normal_derivative(a) +
         loop_normal_contribution(omega.loops(), a);
}

Rat normal_matching_defect(const OneForm& omega, const VertexAddress& junction) {
  const VertexAddress c = canonicalize(junction);
  const auto t = twin(c);
  if (!t) throw std::invalid_argument("normal_matching_defect: boundary point");
  return normal_part(omega, c) + normal_part(omega, *t);
}

TangentialPart tangential_part(const OneForm& omega, const VertexAddress& a) {
  const OneForm composed = omega.compose_cell(a.word);
  const int i = a.corner;

  Rat series(0);
  for (const auto& [w, c] : composed.loops().finite)
    if (w.all_equal(i)) series += c * rat_pow(Rat(5), w.size());
  for (const auto& r : composed.loops().rays) {
    if (!r.base.all_equal(i)) continue;
    if (r.dir != i) {
      series += r.amp * rat_pow(Rat(5), r.base.size());
      continue;
    }
    // sum_k amp ratio^k 5^{|base|+k}: requires |5 ratio| < 1.
    const Rat q = 5 * r.ratio;
    if (!(q < 1 && q > -1)) {
      TangentialPart out;
      out.diagnosis = "descendant series sum |Theta_{" +
                      (a.word.concat(Word::repeated(i, 1))).str() +
                      "^m}| 5^m diverges: ray ratio " + rat_str(r.ratio) +
                      " has |5 phi| >= 1";
      return out;
    }
    series += r.amp * rat_pow(Rat(5), r.base.size()) / (1 - q);
  }

  const Rat eta_part =
      composed.exact().point_tangential_derivative(VertexAddress{Word(), i});
  TangentialPart out;
  out.value = rat_pow(Rat(5), a.word.size()) * (eta_part + 10 * series);
  return out;
}

Rat gauss_green_defect(const OneForm& omega, const Piecewise& phi, int m) {
  if (m < phi.level())
    throw std::invalid_argument("gauss_green_defect: m below the level of phi");
  const Rat lhs = omega.inner_with_pw(phi, m);
  Rat rhs(0);
  std::size_t count = 1;
  for (int k = 0; k < m; ++k) count *= 3;
  for (std::size_t c = 0; c < count; ++c) {
    const Word cell = Word::from_index(c, m);
    const Harmonic piece = phi.cover_piece(cell);
    for (int i = 0; i < 3; ++i)
      rhs += normal_part(omega, VertexAddress{cell, i}) * piece[i];
  }
  return lhs - rhs;
}

NormalPartSequence normal_part_sequence(const OneForm& omega, const Word& w,
                                        int i, int j, int m_max) {
  if (i == j) throw std::invalid_argument("normal_part_sequence: need j != i");
  if (!omega.divergence_free().v0)
    throw NotDivergenceFree("normal_part_sequence requires a divergence-free form");
  NormalPartSequence out;
  for (int m = 0; m <= m_max; ++m) {
    const Word cell = w.concat(Word::repeated(i, m));
    out.values.emplace_back(m, normal_part(omega, VertexAddress{cell, j}));
  }
  out.base_half = -normal_part(omega, VertexAddress{w, i}) / 2;

  const OneForm composed = omega.compose_cell(w);
  const ChainData cd = chain_data(composed.loops(), i);
  const Rat sign = (j == (i + 1) % 3) ? Rat(1) : Rat(-1);
  const Rat scale = rat_pow(res_scale(), -w.size());
  const Rat three_fifths = res_scale();

  // Exact offsets from the transported data:
  //   value(m) - base_half
  //     = scale * sign * (3^{1-m} u_a' + 15 * 3^{-m} S(m)),
  // with u_a' the tangential jet of the (harmonic, when divergence-free)
  // transported exact part. Verified against the measured values.
  const Rat ua = composed.exact()
                     .point_tangential_derivative(VertexAddress{Word(), i}) /
                 2;
  for (int m = 0; m <= m_max; ++m) {
    const Rat offset = scale * sign *
                       (rat_pow(Rat(3), 1 - m) * ua +
                        15 * rat_pow(Rat(3), -m) * cd.partial_sum(m));
    out.offset_closed_form.emplace_back(m, offset);
    if (out.values[static_cast<std::size_t>(m)].second - out.base_half != offset)
      throw std::logic_error(
          "normal_part_sequence: closed-form offset disagrees with the "
          "measured sequence (is the form divergence-free?)");
  }

  if (!cd.has_ray || cd.ray_amp == 0) {
    out.kind = LimitKind::Converges;
    out.limit = out.base_half;
    out.note = "finite chain coefficients";
    return out;
  }
  const Rat theta = cd.ray_ratio;
  const Rat abs_theta = theta < 0 ? Rat(-theta) : theta;
  if (abs_theta < three_fifths) {
    out.kind = LimitKind::Converges;
    out.limit = out.base_half;
    out.note = "chain ratio |" + rat_str(theta) + "| < 3/5";
    return out;
  }
  if (theta == three_fifths) {
    out.kind = LimitKind::ConvergesWithOffset;
    // 15*3^{-m} sum_{k=off}^{m-1} amp (3/5)^{k-off} 5^k
    //   = (15 amp / 2)(5/3)^{off} (1 - 3^{off-m})  ->  (15 amp / 2)(5/3)^{off}.
    out.offset_limit = scale * sign * make_rat(15, 2) * cd.ray_amp *
                       rat_pow(res_scale_inv(), cd.ray_offset);
    out.limit = out.base_half + *out.offset_limit;
    out.note =
        "critical chain ratio 3/5: offset sequence "
        "(15a/2)(5/3)^{n0}(1 - 3^{n0-m})";
    return out;
  }
  if (theta == -three_fifths) {
    out.kind = LimitKind::Oscillates;
    const Rat half_gap = scale * make_rat(15, 4) * cd.ray_amp *
                         rat_pow(res_scale_inv(), cd.ray_offset);
    out.note = "chain ratio -3/5: accumulation points " +
               rat_str(out.base_half + sign * half_gap) + " and " +
               rat_str(out.base_half - sign * half_gap);
    return out;
  }
  out.kind = LimitKind::Diverges;
  out.note = "chain ratio |" + rat_str(theta) +
             "| > 3/5: offsets grow by the factor |5 theta / 3| = " +
             rat_str(5 * abs_theta / 3) + " per level";
  return out;
}

}  // namespace gasket
