#include "gasket/oneform.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "gasket/errors.hpp"

namespace gasket {

namespace {

const Rat& thirty() {
  static const Rat t(30);
  return t;
}

// 30 * (5/3)^{|w|} * a * b
Rat basis_term(int depth, const Rat& a, const Rat& b) {
  return thirty() * rat_pow(res_scale_inv(), depth) * a * b;
}

}  // namespace

bool GeometricRay::membership_ok() const {
  return 5 * ratio * ratio < 3;
}

Rat GeometricRay::coefficient_at(int k) const {
  return amp * rat_pow(ratio, k);
}

std::optional<int> GeometricRay::chain_index(const Word& w) const {
  if (!base.is_prefix_of(w)) return std::nullopt;
  const Word tail = w.suffix_from(base.size());
  if (!tail.all_equal(dir)) return std::nullopt;
  return tail.size();
}

Rat LoopSet::coefficient(const Word& w) const {
  Rat c(0);
  auto it = finite.find(w);
  if (it != finite.end()) c += it->second;
  for (const auto& r : rays)
    if (auto k = r.chain_index(w)) c += r.coefficient_at(*k);
  return c;
}

bool LoopSet::finitely_many_inside(const Word& w) const {
  for (const auto& r : rays) {
    if (r.amp == 0) continue;
    if (w.is_prefix_of(r.base)) return false;
    if (r.base.is_prefix_of(w) && w.suffix_from(r.base.size()).all_equal(r.dir))
      return false;
  }
  return true;
}

std::vector<std::pair<Word, Rat>> LoopSet::words_inside(const Word& w) const {
  if (!finitely_many_inside(w))
    throw RayGeometryUnsupported(
        "a ray contributes infinitely many loops inside K_" + w.str());
  std::vector<std::pair<Word, Rat>> out;
  for (const auto& [word, coef] : finite)
    if (w.is_prefix_of(word)) out.emplace_back(word, coef);
  // Rays contribute no words inside K_w here: a chain either enters K_w for
  // good (excluded above) or misses it entirely.
  return out;
}

LoopSet LoopSet::scaled(const Rat& c) const {
  LoopSet out = *this;
  for (auto& [w, coef] : out.finite) coef *= c;
  for (auto& r : out.rays) r.amp *= c;
  return out;
}

namespace {

// Whether K_v contains the word (v prefix of w).
bool inside(const Word& v, const Word& w) { return v.is_prefix_of(w); }

// Closed-form inner product contribution of a ray pair, optionally restricted
// to words inside K_v (restrict == nullptr means unrestricted).
Rat ray_pair_inner(const GeometricRay& r1, const GeometricRay& r2,
                   const Word* restrict_cell) {
  if (r1.amp == 0 || r2.amp == 0) return Rat(0);
  if (r1.dir == r2.dir) {
    // Tail-aligned chains share a geometric family of words.
    const GeometricRay* lo = &r1;
    const GeometricRay* hi = &r2;
    if (lo->base.size() > hi->base.size()) std::swap(lo, hi);
    if (!lo->base.is_prefix_of(hi->base) ||
        !hi->base.suffix_from(lo->base.size()).all_equal(lo->dir))
      return Rat(0);
    const int j = hi->base.size() - lo->base.size();
    // Shared words: hi->base · dir^k, k >= 0, with coefficients
    // lo: amp_lo ratio_lo^{j+k}, hi: amp_hi ratio_hi^k.
    int k0 = 0;
    if (restrict_cell != nullptr) {
      if (restrict_cell->is_prefix_of(hi->base)) {
        k0 = 0;
      } else if (hi->base.is_prefix_of(*restrict_cell) &&
                 restrict_cell->suffix_from(hi->base.size()).all_equal(lo->dir)) {
        k0 = restrict_cell->size() - hi->base.size();
      } else {
        return Rat(0);
      }
    }
    const Rat q = res_scale_inv() * lo->ratio * hi->ratio;  // |q| < 1
    const Rat head = basis_term(hi->base.size() + k0,
                                lo->coefficient_at(j + k0),
                                hi->coefficient_at(k0));
    return head / (1 - q);
  }
  // Different directions: the chains share at most the deeper base word.
  const GeometricRay* on_chain = nullptr;   // ray whose chain carries the word
  const GeometricRay* at_base = nullptr;    // ray whose base is the word
  if (auto k = r1.chain_index(r2.base)) {
    on_chain = &r1;
    at_base = &r2;
    (void)k;
  } else if (auto k2 = r2.chain_index(r1.base)) {
    on_chain = &r2;
    at_base = &r1;
    (void)k2;
  } else {
    return Rat(0);
  }
  const Word& shared = at_base->base;
  if (restrict_cell != nullptr && !inside(*restrict_cell, shared)) return Rat(0);
  const int k = *on_chain->chain_index(shared);
  return basis_term(shared.size(), on_chain->coefficient_at(k), at_base->amp);
}

Rat ray_coefficient(const std::vector<GeometricRay>& rays, const Word& w) {
  Rat c(0);
  for (const auto& r : rays)
    if (auto k = r.chain_index(w)) c += r.coefficient_at(*k);
  return c;
}

Rat loop_inner_impl(const LoopSet& a, const LoopSet& b, const Word* cell) {
  Rat acc(0);
  for (const auto& [w, ca] : a.finite) {
    if (cell != nullptr && !inside(*cell, w)) continue;
    auto it = b.finite.find(w);
    Rat cb = (it != b.finite.end()) ? it->second : Rat(0);
    cb += ray_coefficient(b.rays, w);
    if (cb != 0) acc += basis_term(w.size(), ca, cb);
  }
  for (const auto& [w, cb] : b.finite) {
    if (cell != nullptr && !inside(*cell, w)) continue;
    const Rat ca = ray_coefficient(a.rays, w);
    if (ca != 0) acc += basis_term(w.size(), ca, cb);
  }
  for (const auto& ra : a.rays)
    for (const auto& rb : b.rays) acc += ray_pair_inner(ra, rb, cell);
  return acc;
}

}  // namespace

Rat loop_inner(const LoopSet& a, const LoopSet& b) {
  return loop_inner_impl(a, b, nullptr);
}

Rat loop_inner_inside(const LoopSet& a, const LoopSet& b, const Word& v) {
  return loop_inner_impl(a, b, &v);
}

OneForm::OneForm(Piecewise exact, LoopSet loops)
    : exact_(std::move(exact)), loops_(std::move(loops)) {
  // Normalize: drop zero coefficients and dead rays.
  for (auto it = loops_.finite.begin(); it != loops_.finite.end();)
    it = (it->second == 0) ? loops_.finite.erase(it) : std::next(it);
  std::erase_if(loops_.rays, [](const GeometricRay& r) { return r.amp == 0; });
  validate();
}

void OneForm::validate() const {
  for (const auto& r : loops_.rays) {
    if (!r.membership_ok())
      throw RaySeriesDivergent("ray ratio violates 5*phi^2 < 3: phi = " +
                               rat_str(r.ratio));
    if (r.dir < 0 || r.dir > 2)
      throw std::invalid_argument("ray direction out of range");
  }
  if (!exact_.is_continuous())
    throw std::invalid_argument(
        "OneForm: exact part must be continuous (an energy finite function)");
}

OneForm OneForm::gradient(Piecewise continuous) {
  return OneForm(std::move(continuous), LoopSet{});
}

OneForm OneForm::loop(const Word& w, const Rat& coef) {
  LoopSet ls;
  ls.finite[w] = coef;
  return OneForm(Piecewise{}, std::move(ls));
}

OneForm OneForm::ray(GeometricRay r) {
  LoopSet ls;
  ls.rays.push_back(std::move(r));
  return OneForm(Piecewise{}, std::move(ls));
}

OneForm OneForm::operator+(const OneForm& o) const {
  LoopSet ls = loops_;
  for (const auto& [w, c] : o.loops_.finite) ls.finite[w] += c;
  ls.rays.insert(ls.rays.end(), o.loops_.rays.begin(), o.loops_.rays.end());
  return OneForm(exact_ + o.exact_, std::move(ls));
}

OneForm OneForm::operator-(const OneForm& o) const {
  return *this + o.scaled(Rat(-1));
}

OneForm OneForm::scaled(const Rat& c) const {
  return OneForm(exact_.scaled(c), loops_.scaled(c));
}

Rat OneForm::norm_sq() const { return inner(*this); }

Rat OneForm::inner(const OneForm& o) const {
  // Hodge components are orthogonal: exact x loop cross terms vanish.
  return exact_.cell_energy_pair(o.exact_, Word()) +
         loop_inner(loops_, o.loops_);
}

OneForm OneForm::compose_cell(const Word& w) const {
  Piecewise exact = exact_.restricted(w);
  LoopSet ls;

  auto fold_ancestor = [&](const Rat& coef, int prefix_len) {
    // psi_{w'} ∘ F_w = psi ∘ F_{tail} is a single harmonic function.
    const Word tail = w.suffix_from(prefix_len);
    exact = exact + Piecewise(psi_restrict(tail)).scaled(coef);
  };

  for (const auto& [word, coef] : loops_.finite) {
    if (word.is_prefix_of(w)) {
      if (word.size() == w.size())
        ls.finite[Word()] += coef;  // the loop of K_w itself
      else
        fold_ancestor(coef, word.size());
    } else if (w.is_prefix_of(word)) {
      ls.finite[word.suffix_from(w.size())] += coef;
    }
    // else: K_word and K_w share at most a point; the loop drops out.
  }

  for (const auto& r : loops_.rays) {
    if (w.is_prefix_of(r.base)) {
      ls.rays.push_back(GeometricRay{r.base.suffix_from(w.size()), r.dir,
                                     r.amp, r.ratio});
      continue;
    }
    if (!r.base.is_prefix_of(w)) continue;  // chain misses K_w
    const Word tail = w.suffix_from(r.base.size());
    const int run = tail.leading_run(r.dir);
    // Chain words base·dir^k that are proper prefixes of w fold into the
    // exact part.
    for (int k = 0; k < std::min(run + 1, tail.size()); ++k)
      fold_ancestor(r.coefficient_at(k), r.base.size() + k);
    if (tail.all_equal(r.dir)) {
      // K_w lies on the chain: the tail shifts to a ray from the root.
      ls.rays.push_back(GeometricRay{Word(), r.dir,
                                     r.coefficient_at(tail.size()), r.ratio});
    }
  }

  return OneForm(std::move(exact), std::move(ls));
}

OneForm::DivergenceCheck OneForm::divergence_free() const {
  DivergenceCheck out;
  out.v0 = true;
  for (const auto& q : junctions_up_to(exact_.level())) {
    if (exact_.matching_defect(q) != 0) {
      out.v0 = false;
      break;
    }
  }
  out.full = out.v0;
  if (out.full) {
    for (int i = 0; i < 3; ++i) {
      if (exact_.point_normal_derivative(VertexAddress{Word(), i}) != 0) {
        out.full = false;
        break;
      }
    }
  }
  return out;
}

Piecewise OneForm::combined_potential() const {
  if (!loops_.rays.empty())
    throw RayGeometryUnsupported(
        "combined_potential: geometric rays have no finite-level potential");
  int m = exact_.level();
  for (const auto& [w, c] : loops_.finite) m = std::max(m, w.size() + 1);
  Piecewise g = exact_.refined(m);
  for (const auto& [w, c] : loops_.finite)
    g = g + Piecewise::loop_potential(w).refined(m).scaled(c);
  return g;
}

Rat OneForm::measure_cell_refine(const Word& w) const {
  const OneForm composed = compose_cell(w);
  return rat_pow(res_scale(), -w.size()) *
         composed.combined_potential().cell_energy(Word());
}

Rat OneForm::measure_cell_closed(const Word& w) const {
  if (!divergence_free().v0)
    throw NotDivergenceFree("measure_cell_closed requires a divergence-free form");
  return rat_pow(res_scale(), -w.size()) * compose_cell(w).norm_sq();
}

Rat OneForm::measure_cell(const Word& w) const {
  const OneForm composed = compose_cell(w);
  const bool can_refine = composed.loops_.rays.empty();
  const bool can_closed = divergence_free().v0;
  const Rat scale = rat_pow(res_scale(), -w.size());
  if (!can_refine && !can_closed)
    throw NotDivergenceFree(
        "measure_cell: rays inside the cell and the form is not divergence-free");
  std::optional<Rat> refine, closed;
  if (can_refine)
    refine = scale * composed.combined_potential().cell_energy(Word());
  if (can_closed) closed = scale * composed.norm_sq();
  if (refine && closed && *refine != *closed)
    throw std::logic_error("measure_cell: refinement and closed form disagree");
  return refine ? *refine : *closed;
}

Rat OneForm::pair_measure_cell(const OneForm& o, const Word& w) const {
  const OneForm sum = *this + o;
  const OneForm diff = *this - o;
  return (sum.measure_cell(w) - diff.measure_cell(w)) / 4;
}

Rat OneForm::inner_with_pw(const Piecewise& phi, int m) const {
  const int m0 = std::max(m, phi.level());
  Rat acc = exact_.cell_energy_pair(phi, Word());
  for (const auto& [w, coef] : loops_.finite)
    acc += coef * Piecewise::loop_potential(w).cell_energy_pair(phi, Word());
  for (const auto& r : loops_.rays) {
    // Loops whose cell sits inside a single level-m0 cell pair to zero with
    // the locally exact d^{(m)} phi.
    for (int k = 0; r.base.size() + k < m0; ++k) {
      const Word w = r.base.concat(Word::repeated(r.dir, k));
      acc += r.coefficient_at(k) *
             Piecewise::loop_potential(w).cell_energy_pair(phi, Word());
    }
  }
  return acc;
}

std::vector<Word> basis_words(int n) {
  std::vector<Word> words;
  for (int len = 0; len <= n; ++len) {
    std::size_t count = 1;
    for (int i = 0; i < len; ++i) count *= 3;
    for (std::size_t c = 0; c < count; ++c)
      words.push_back(Word::from_index(c, len));
  }
  return words;
}

std::vector<std::vector<Rat>> basis_gram(int n) {
  const auto words = basis_words(n);
  std::vector<Piecewise> potentials;
  potentials.reserve(words.size());
  for (const auto& w : words) potentials.push_back(Piecewise::loop_potential(w));
  std::vector<std::vector<Rat>> gram(words.size(),
                                     std::vector<Rat>(words.size(), Rat(0)));
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j) {
      gram[i][j] = potentials[i].cell_energy_pair(potentials[j], Word());
      if (j != i) gram[j][i] = gram[i][j];
    }
  return gram;
}

}  // namespace gasket
