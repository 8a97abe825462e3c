#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gasket/harmonic.hpp"

using namespace gasket;

namespace {
const Harmonic h100(Rat(1), Rat(0), Rat(0));
const Harmonic hs(Rat(0), Rat(1), Rat(1));
const Harmonic ha(Rat(0), Rat(1), Rat(-1));
}  // namespace

TEST_CASE("harmonic extension") {
  CHECK(h100.extended(0) == Harmonic(Rat(1), make_rat(2, 5), make_rat(2, 5)));
  CHECK(Harmonic::constant(Rat(7)).extended(2) == Harmonic::constant(Rat(7)));
  CHECK(hs.extended(0) == Harmonic(Rat(0), make_rat(3, 5), make_rat(3, 5)));
}

TEST_CASE("evaluation") {
  CHECK(ha.eval({Word("00"), 1}) == make_rat(1, 25));
  CHECK(hs.eval({Word("00"), 1}) == make_rat(9, 25));
  CHECK(h100.eval({Word("0"), 1}) == make_rat(2, 5));
}

TEST_CASE("normal derivative") {
  CHECK(hs.normal_derivative(0) == Rat(-2));
  CHECK(h100.normal_derivative(0) == Rat(2));
  CHECK(ha.normal_derivative(0) == Rat(0));
  // the renormalized level-m expression is m-independent
  for (const Harmonic& h : {h100, hs, ha, Harmonic(Rat(3), make_rat(-1, 2), Rat(9))})
    for (int corner = 0; corner < 3; ++corner)
      for (int m = 1; m <= 8; ++m) {
        const Word chain = Word::repeated(corner, m);
        const Rat level_m =
            rat_pow(res_scale(), -m) *
            (2 * h[corner] - h.eval({chain, (corner + 1) % 3}) -
             h.eval({chain, (corner + 2) % 3}));
        CHECK(level_m == h.normal_derivative(corner));
      }
}

TEST_CASE("tangential derivative") {
  CHECK(ha.tangential_derivative(0) == Rat(2));
  CHECK(hs.tangential_derivative(0) == Rat(0));
  CHECK(h100.tangential_derivative(1) == Rat(-1));
  // 5^n-scaled differences are constant in n
  const Harmonic g(Rat(3), make_rat(-1, 2), Rat(9));
  for (int n = 1; n <= 8; ++n) {
    const Word chain = Word::repeated(0, n);
    CHECK(rat_pow(Rat(5), n) *
              (g.eval({chain, 1}) - g.eval({chain, 2})) ==
          g.tangential_derivative(0));
  }
}

TEST_CASE("energy pairing") {
  CHECK(h100.energy() == Rat(2));
  CHECK(Harmonic::constant(Rat(5)).energy_pair(hs) == Rat(0));
  CHECK(hs.energy_pair(ha) == Rat(0));
  CHECK(hs.energy_pair(h100) == h100.energy_pair(hs));
  CHECK(hs.energy() == Rat(2));
  CHECK(ha.energy() == Rat(6));
}

TEST_CASE("energy self-similarity over partitions") {
  const Harmonic g(Rat(3), make_rat(-1, 2), Rat(9));
  const std::vector<std::pair<Harmonic, Harmonic>> pairs = {
      {h100, h100}, {hs, ha}, {h100, g}, {g, g}};
  for (const auto& [u, v] : pairs) {
    for (int n = 1; n <= 4; ++n) {
      std::size_t count = 1;
      for (int i = 0; i < n; ++i) count *= 3;
      Rat acc(0);
      for (std::size_t c = 0; c < count; ++c) {
        const Word w = Word::from_index(c, n);
        acc += rat_pow(res_scale(), -n) * u.walked(w).energy_pair(v.walked(w));
      }
      CHECK(acc == u.energy_pair(v));
    }
    // a non-uniform partition
    Rat acc(0);
    for (const Word& w : {Word("0"), Word("10"), Word("11"), Word("12"), Word("2")})
      acc += rat_pow(res_scale(), -w.size()) *
             u.walked(w).energy_pair(v.walked(w));
    CHECK(acc == u.energy_pair(v));
  }
}

TEST_CASE("jet decomposition") {
  const auto j = h100.jet(0);
  CHECK(j.s == Rat(-1));
  CHECK(j.a == Rat(0));
  CHECK(j.c == Rat(1));
  CHECK(ha.jet(0).a == Rat(1));
  CHECK(ha.jet(0).s == Rat(0));
  CHECK(hs.jet(0).s == Rat(1));
  // reconstruction reproduces the corner values exactly
  const Harmonic g(Rat(3), make_rat(-1, 2), Rat(9));
  for (int corner = 0; corner < 3; ++corner)
    CHECK(Harmonic::from_jet(corner, g.jet(corner)) == g);
}

TEST_CASE("jet identities along the corner chain") {
  const Harmonic g(Rat(3), make_rat(-1, 2), Rat(9));
  const auto j = g.jet(0);
  for (int n = 0; n <= 8; ++n) {
    const Word chain = Word::repeated(0, n);
    const Harmonic piece = g.walked(chain);
    // d_n g(F_{0^n} q_1) = s + 3^{1-n} a, oriented from the chain cell
    CHECK(rat_pow(res_scale(), -n) * piece.normal_derivative(1) ==
          j.s + rat_pow(Rat(3), 1 - n) * j.a);
    CHECK(rat_pow(res_scale(), -n) * piece.normal_derivative(2) ==
          j.s - rat_pow(Rat(3), 1 - n) * j.a);
    // g(F_{0^n} q_1) = r^n s + 5^{-n} a + c
    CHECK(piece[1] == rat_pow(res_scale(), n) * j.s + rat_pow(Rat(5), -n) * j.a + j.c);
    CHECK(piece[2] == rat_pow(res_scale(), n) * j.s - rat_pow(Rat(5), -n) * j.a + j.c);
  }
}

TEST_CASE("psi pieces") {
  CHECK(psi_piece(0) == Harmonic(Rat(0), Rat(1), Rat(-1)));
  CHECK(psi_piece(1) == Harmonic(Rat(-1), Rat(0), Rat(1)));
  CHECK(psi_piece(2) == Harmonic(Rat(1), Rat(-1), Rat(0)));
  for (int i = 0; i < 3; ++i) {
    CHECK(psi_piece(i).normal_derivative(i) == Rat(0));
    CHECK(psi_piece(i).energy() == Rat(6));
  }
  CHECK(psi_restrict(Word("0")) == Harmonic(Rat(0), Rat(1), Rat(-1)));
  CHECK(psi_restrict(Word("00")) ==
        Harmonic(Rat(0), make_rat(1, 5), make_rat(-1, 5)));
}
