#include "gasket/harmonic.hpp"

#include <cassert>

namespace gasket {

Harmonic Harmonic::extended(int child) const {
  const int i = child, j = (child + 1) % 3, k = (child + 2) % 3;
  Harmonic out;
  out[i] = v[static_cast<std::size_t>(i)];
  const Rat five(5);
  out[j] = (2 * v[static_cast<std::size_t>(i)] + 2 * v[static_cast<std::size_t>(j)] +
            v[static_cast<std::size_t>(k)]) /
           five;
  out[k] = (2 * v[static_cast<std::size_t>(i)] + 2 * v[static_cast<std::size_t>(k)] +
            v[static_cast<std::size_t>(j)]) /
           five;
  return out;
}

Harmonic Harmonic::walked(const Word& w) const {
  Harmonic h = *this;
  for (int i = 0; i < w.size(); ++i) h = h.extended(w.at(i));
  return h;
}

Rat Harmonic::eval(const VertexAddress& a) const {
  return walked(a.word)[a.corner];
}

Rat Harmonic::normal_derivative(int corner) const {
  const int i = corner, j = (corner + 1) % 3, k = (corner + 2) % 3;
  return 2 * v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)] -
         v[static_cast<std::size_t>(k)];
}

Rat Harmonic::tangential_derivative(int corner) const {
  const int j = (corner + 1) % 3, k = (corner + 2) % 3;
  return v[static_cast<std::size_t>(j)] - v[static_cast<std::size_t>(k)];
}

Rat Harmonic::energy_pair(const Harmonic& g) const {
  Rat acc(0);
  for (int i = 0; i < 3; ++i)
    acc += normal_derivative(i) * g[i];
  return acc;
}

Harmonic::Jet Harmonic::jet(int corner) const {
  Jet j;
  j.s = -normal_derivative(corner) / 2;
  j.a = tangential_derivative(corner) / 2;
  j.c = v[static_cast<std::size_t>(corner)];
  return j;
}

Harmonic Harmonic::from_jet(int corner, const Jet& j) {
  Harmonic h;
  h[corner] = j.c;
  h[(corner + 1) % 3] = j.s + j.a + j.c;
  h[(corner + 2) % 3] = j.s - j.a + j.c;
  return h;
}

Harmonic Harmonic::operator+(const Harmonic& o) const {
  return Harmonic(v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2]);
}

Harmonic Harmonic::operator-(const Harmonic& o) const {
  return Harmonic(v[0] - o.v[0], v[1] - o.v[1], v[2] - o.v[2]);
}

Harmonic Harmonic::scaled(const Rat& c) const {
  return Harmonic(c * v[0], c * v[1], c * v[2]);
}

Harmonic psi_piece(int i) {
  Harmonic h;
  h[i] = Rat(0);
  h[(i + 1) % 3] = Rat(1);
  h[(i + 2) % 3] = Rat(-1);
  return h;
}

Harmonic psi_restrict(const Word& t) {
  assert(!t.empty());
  return psi_piece(t.at(0)).walked(t.suffix_from(1));
}

}  // namespace gasket
