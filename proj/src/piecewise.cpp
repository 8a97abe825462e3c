#include "gasket/piecewise.hpp"

#include <cassert>
#include <stdexcept>

#include "gasket/errors.hpp"
#include "gasket/sweep.hpp"

namespace gasket {

namespace {

std::size_t pow3(int n) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

Rat edge_form(const Harmonic& h) {
  const Rat d01 = h[0] - h[1], d12 = h[1] - h[2], d20 = h[2] - h[0];
  return d01 * d01 + d12 * d12 + d20 * d20;
}

}  // namespace

Piecewise::Piecewise(int level, std::vector<Harmonic> pieces)
    : level_(level), pieces_(std::move(pieces)) {
  if (level_ < 0 || pieces_.size() != pow3(level_))
    throw std::invalid_argument("Piecewise: piece count does not match level");
}

Piecewise Piecewise::loop_potential(const Word& w) {
  const int level = w.size() + 1;
  std::vector<Harmonic> pieces(pow3(level));
  const std::size_t base = w.index() * 3;
  for (int i = 0; i < 3; ++i)
    pieces[base + static_cast<std::size_t>(i)] = psi_piece(i);
  return Piecewise(level, std::move(pieces));
}

const Harmonic& Piecewise::piece(const Word& w) const {
  if (w.size() != level_)
    throw std::invalid_argument("piece: word length must equal the level");
  return pieces_[w.index()];
}

Piecewise Piecewise::refined(int m) const {
  if (m < level_) throw std::invalid_argument("refined: m below level");
  Piecewise out = *this;
  while (out.level_ < m) {
    std::vector<Harmonic> next(out.pieces_.size() * 3);
    for (std::size_t c = 0; c < out.pieces_.size(); ++c)
      for (int i = 0; i < 3; ++i)
        next[c * 3 + static_cast<std::size_t>(i)] = out.pieces_[c].extended(i);
    out.pieces_ = std::move(next);
    ++out.level_;
  }
  return out;
}

Piecewise Piecewise::restricted(const Word& w) const {
  if (w.size() >= level_) return Piecewise(cover_piece(w));
  const int sub = level_ - w.size();
  const std::size_t count = pow3(sub);
  std::vector<Harmonic> pieces(pieces_.begin() + static_cast<std::ptrdiff_t>(w.index() * count),
                               pieces_.begin() + static_cast<std::ptrdiff_t>((w.index() + 1) * count));
  return Piecewise(sub, std::move(pieces));
}

Harmonic Piecewise::cover_piece(const Word& walk) const {
  if (walk.size() < level_)
    throw AddressOutsideCell("cover_piece: walk shorter than the level");
  return pieces_[walk.prefix(level_).index()].walked(walk.suffix_from(level_));
}

std::vector<std::pair<Word, Rat>> Piecewise::values_at(const VertexAddress& a) const {
  const int m = std::max(level_, level_of(a));
  std::vector<std::pair<Word, Rat>> out;
  for (const auto& cc : covering_corners(a, m))
    out.emplace_back(cc.word, cover_piece(cc.word)[cc.corner]);
  return out;
}

Rat Piecewise::eval_at(const VertexAddress& a) const {
  auto vals = values_at(a);
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (vals[i].second != vals[0].second)
      throw Error("eval_at: ambiguous value at junction " + address_str(a));
  return vals[0].second;
}

bool Piecewise::is_continuous_at(const VertexAddress& a) const {
  auto vals = values_at(a);
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (vals[i].second != vals[0].second) return false;
  return true;
}

bool Piecewise::is_continuous() const {
  for (const auto& q : junctions_up_to(level_))
    if (!is_continuous_at(q)) return false;
  return true;
}

Rat Piecewise::matching_defect(const VertexAddress& a) const {
  if (level_of(a) > level_)
    throw std::invalid_argument("matching_defect: junction deeper than level");
  Rat acc(0);
  for (const auto& cc : covering_corners(a, level_))
    acc += cover_piece(cc.word).normal_derivative(cc.corner);
  return acc;
}

Rat Piecewise::point_normal_derivative(const VertexAddress& a) const {
  const int m = std::max(a.word.size(), level_);
  const Word walk = a.word.concat(Word::repeated(a.corner, m - a.word.size()));
  return rat_pow(res_scale(), -m) * cover_piece(walk).normal_derivative(a.corner);
}

Rat Piecewise::point_tangential_derivative(const VertexAddress& a) const {
  const int m = std::max(a.word.size(), level_);
  const Word walk = a.word.concat(Word::repeated(a.corner, m - a.word.size()));
  return rat_pow(Rat(5), m) * cover_piece(walk).tangential_derivative(a.corner);
}

Rat Piecewise::cell_energy(const Word& w) const {
  if (w.size() >= level_)
    return rat_pow(res_scale(), -w.size()) * cover_piece(w).energy();
  const std::size_t count = pow3(level_ - w.size());
  const std::size_t base = w.index() * count;
  Rat acc(0);
  for (std::size_t c = 0; c < count; ++c) acc += pieces_[base + c].energy();
  return rat_pow(res_scale(), -level_) * acc;
}

Rat Piecewise::cell_energy_pair(const Piecewise& other, const Word& w) const {
  const int m = std::max(level_, other.level_);
  if (w.size() >= m) {
    return rat_pow(res_scale(), -w.size()) *
           cover_piece(w).energy_pair(other.cover_piece(w));
  }
  const std::size_t count = pow3(m - w.size());
  Rat acc(0);
  for (std::size_t c = 0; c < count; ++c) {
    const Word cell = w.concat(Word::from_index(c, m - w.size()));
    acc += cover_piece(cell).energy_pair(other.cover_piece(cell));
  }
  return rat_pow(res_scale(), -m) * acc;
}

Rat Piecewise::graph_energy(int m) const {
  if (m < level_) throw std::invalid_argument("graph_energy: m below level");
  Rat acc(0);
  for (const Harmonic& p : pieces_)
    acc += sweep::reduce(p, m - level_, edge_form);
  return rat_pow(res_scale(), -m) * acc;
}

Rat Piecewise::graph_energy_serial(int m) const {
  if (m < level_) throw std::invalid_argument("graph_energy: m below level");
  Rat acc(0);
  for (const Harmonic& p : pieces_)
    acc += sweep::reduce_serial(p, m - level_, edge_form);
  return rat_pow(res_scale(), -m) * acc;
}

Piecewise Piecewise::operator+(const Piecewise& o) const {
  const int m = std::max(level_, o.level_);
  Piecewise a = refined(m), b = o.refined(m);
  for (std::size_t i = 0; i < a.pieces_.size(); ++i)
    a.pieces_[i] = a.pieces_[i] + b.pieces_[i];
  return a;
}

Piecewise Piecewise::operator-(const Piecewise& o) const {
  return *this + o.scaled(Rat(-1));
}

Piecewise Piecewise::scaled(const Rat& c) const {
  Piecewise out = *this;
  for (Harmonic& p : out.pieces_) p = p.scaled(c);
  return out;
}

bool Piecewise::same_function(const Piecewise& o) const {
  const int m = std::max(level_, o.level_);
  return refined(m).pieces_ == o.refined(m).pieces_;
}

Rat energy_measure_pair(const Piecewise& u, const Piecewise& v, const Word& w) {
  return u.cell_energy_pair(v, w);
}

std::vector<VertexAddress> junctions_at_level(int n) {
  assert(n >= 1);
  std::vector<VertexAddress> out;
  const std::size_t count = pow3(n);
  for (std::size_t c = 0; c < count; ++c) {
    const Word w = Word::from_index(c, n);
    for (int i = 0; i < 3; ++i) {
      if (w.back() == i) continue;  // not minimal length
      Word other = w;
      other.pop_back();
      other.append(i);
      if (w < other) out.push_back(VertexAddress{w, i});
    }
  }
  return out;
}

std::vector<VertexAddress> junctions_up_to(int n) {
  std::vector<VertexAddress> out;
  for (int k = 1; k <= n; ++k) {
    auto level = junctions_at_level(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace gasket
