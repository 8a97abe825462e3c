#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gasket/piecewise.hpp"
#include "oracle.hpp"

using namespace gasket;

namespace {
const Harmonic h100(Rat(1), Rat(0), Rat(0));
const Harmonic hs(Rat(0), Rat(1), Rat(1));
const Harmonic ha(Rat(0), Rat(1), Rat(-1));

Piecewise patchwork() {
  std::vector<Harmonic> pieces(3);
  pieces[0] = Harmonic(Rat(0), Rat(1), Rat(-1));
  pieces[1] = Harmonic(Rat(5), Rat(5), Rat(5));
  pieces[2] = Harmonic(Rat(1), Rat(2), Rat(3));
  return Piecewise(1, std::move(pieces));
}
}  // namespace

TEST_CASE("loop potential") {
  const Piecewise psi = Piecewise::loop_potential(Word());
  CHECK(psi.level() == 1);
  CHECK(psi.piece(Word("0")) == Harmonic(Rat(0), Rat(1), Rat(-1)));
  CHECK(psi.piece(Word("1")) == Harmonic(Rat(-1), Rat(0), Rat(1)));
  // psi^{(0)}(F_0 q_1) = 1 read at the deeper address F_{01} q_1
  const auto vals = psi.values_at({Word("01"), 1});
  REQUIRE(vals.size() == 2);
  CHECK(vals[0].second == Rat(1));
  CHECK(vals[1].second == Rat(-1));
  // support: zero pieces outside K_w
  const Piecewise psi2 = Piecewise::loop_potential(Word("2"));
  CHECK(psi2.level() == 2);
  CHECK(psi2.piece(Word("00")).is_constant());
  CHECK(psi2.piece(Word("20")) == psi_piece(0));
}

TEST_CASE("refine") {
  const Piecewise psi = Piecewise::loop_potential(Word());
  CHECK(psi.refined(2).piece(Word("00")) ==
        Harmonic(Rat(0), make_rat(1, 5), make_rat(-1, 5)));
  CHECK(Piecewise::constant(Rat(1)).refined(3).piece(Word("012")) ==
        Harmonic::constant(Rat(1)));
  CHECK(psi.refined(1) == psi);
  // refining does not move the function
  CHECK(psi.refined(4).same_function(psi));
}

TEST_CASE("restrict") {
  const Piecewise psi = Piecewise::loop_potential(Word());
  CHECK(psi.restricted(Word("0")) == Piecewise(Harmonic(Rat(0), Rat(1), Rat(-1))));
  CHECK(psi.restricted(Word()) == psi);
  CHECK(Piecewise::loop_potential(Word("0")).restricted(Word("0")).same_function(psi));
}

TEST_CASE("matching defect") {
  const Piecewise psi = Piecewise::loop_potential(Word());
  CHECK(psi.matching_defect({Word("0"), 1}) == Rat(0));
  CHECK(Piecewise::constant(Rat(1)).refined(1).matching_defect({Word("0"), 1}) == Rat(0));
  // a single nonzero piece contributes alone
  std::vector<Harmonic> pieces(3);
  pieces[0] = Harmonic(Rat(0), Rat(1), Rat(-1));
  const Piecewise u(1, std::move(pieces));
  CHECK(u.matching_defect({Word("0"), 1}) == Rat(3));
}

TEST_CASE("continuity predicates") {
  const Piecewise psi = Piecewise::loop_potential(Word());
  CHECK(!psi.is_continuous_at({Word("0"), 1}));
  CHECK(!psi.is_continuous());
  CHECK(Piecewise::constant(Rat(2)).refined(2).is_continuous());
  CHECK(Piecewise(h100).refined(1).is_continuous_at({Word("0"), 1}));
}

TEST_CASE("cell energies against the brute-force oracle") {
  const Piecewise u(h100);
  // oracle: restricted graph energies stabilize immediately
  for (int m = 1; m <= 8; ++m) {
    CHECK(testing::brute_graph_energy(u, m, Word("0")) == make_rat(6, 5));
    CHECK(testing::brute_graph_energy(u, m, Word("1")) == make_rat(2, 5));
  }
  CHECK(u.cell_energy(Word("0")) == make_rat(6, 5));
  CHECK(u.cell_energy(Word("1")) == make_rat(2, 5));
  CHECK(u.cell_energy(Word("2")) == make_rat(2, 5));
  CHECK(u.cell_energy(Word()) == Rat(2));
  CHECK(Piecewise::constant(Rat(3)).cell_energy(Word("01")) == Rat(0));
}

TEST_CASE("graph energy equals the cell sum") {
  const Piecewise psi = Piecewise::loop_potential(Word());
  for (int m = 1; m <= 8; ++m) {
    CHECK(psi.graph_energy(m) == Rat(30));
    CHECK(testing::brute_graph_energy(psi, m) == Rat(30));
  }
  const Piecewise pw = patchwork();
  const Rat cell_sum = pw.cell_energy(Word());
  for (int m = 1; m <= 8; ++m) {
    CHECK(pw.graph_energy(m) == cell_sum);
    CHECK(testing::brute_graph_energy(pw, m) == cell_sum);
  }
  // the vertex table of a continuous function is coherent
  CHECK_NOTHROW(testing::vertex_table(Piecewise(hs), 5));
}

TEST_CASE("energy measure pairing") {
  CHECK(energy_measure_pair(Piecewise(hs), Piecewise(hs), Word()) == Rat(2));
  CHECK(energy_measure_pair(Piecewise(hs), Piecewise(ha), Word()) == Rat(0));
  // additivity over children, including discontinuous data
  for (const Piecewise& u : {Piecewise(h100), Piecewise::loop_potential(Word()), patchwork()})
    for (int len = 0; len <= 3; ++len) {
      std::size_t count = 1;
      for (int i = 0; i < len; ++i) count *= 3;
      for (std::size_t c = 0; c < count; ++c) {
        const Word w = Word::from_index(c, len);
        Rat sum(0);
        for (int i = 0; i < 3; ++i) {
          Word child = w;
          child.append(i);
          sum += u.cell_energy(child);
        }
        CHECK(u.cell_energy(w) == sum);
      }
    }
}

TEST_CASE("energy measure pushforward scaling") {
  const std::vector<std::pair<Piecewise, Piecewise>> pairs = {
      {Piecewise(h100), Piecewise(hs)},
      {Piecewise::loop_potential(Word()), Piecewise(ha)},
      {patchwork(), patchwork()},
  };
  for (const auto& [u, v] : pairs)
    for (const Word& w : {Word("0"), Word("12"), Word("221")})
      for (const Word& vp : {Word(), Word("1"), Word("02"), Word("110")}) {
        const Rat lhs = u.cell_energy_pair(v, w.concat(vp));
        const Rat rhs = rat_pow(res_scale(), -w.size()) *
                        u.restricted(w).cell_energy_pair(v.restricted(w), vp);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("point normal derivatives of loop potentials") {
  for (int n = 1; n <= 10; ++n)
    for (int k = 0; k < n; ++k) {
      const Piecewise psi = Piecewise::loop_potential(Word::repeated(0, k));
      const Rat expect = 15 * rat_pow(Rat(5), k) * rat_pow(Rat(3), -n);
      CHECK(psi.point_normal_derivative({Word::repeated(0, n), 1}) == expect);
      CHECK(psi.point_normal_derivative({Word::repeated(0, n), 2}) == -expect);
    }
  CHECK(Piecewise::constant(Rat(4)).point_normal_derivative({Word("012"), 1}) == Rat(0));
}

TEST_CASE("loop potentials satisfy the matching condition") {
  for (const Word& w : {Word(), Word("0"), Word("2"), Word("01"), Word("120"), Word("222")}) {
    const Piecewise psi = Piecewise::loop_potential(w);
    for (const auto& q : junctions_up_to(w.size() + 1))
      CHECK(psi.matching_defect(q) == Rat(0));
  }
}

TEST_CASE("junction enumeration counts") {
  // |V_n| - |V_0| = (3^{n+1} - 3)/2 junction points up to level n
  std::size_t pow3 = 3;
  for (int n = 1; n <= 6; ++n, pow3 *= 3)
    CHECK(junctions_up_to(n).size() == (3 * pow3 - 3) / 2);
}
