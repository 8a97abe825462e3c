#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gasket/errors.hpp"
#include "gasket/oneform.hpp"

using namespace gasket;

namespace {
const Harmonic h100(Rat(1), Rat(0), Rat(0));
const Harmonic hs(Rat(0), Rat(1), Rat(1));
const Harmonic ha(Rat(0), Rat(1), Rat(-1));

OneForm ray_form(const Word& base, int dir, const Rat& amp, const Rat& ratio) {
  return OneForm::ray(GeometricRay{base, dir, amp, ratio});
}
}  // namespace

TEST_CASE("norms") {
  CHECK(OneForm::loop(Word(), Rat(1)).norm_sq() == Rat(30));
  CHECK(OneForm::gradient(Piecewise(hs)).norm_sq() == Rat(2));
  CHECK(ray_form(Word(), 0, Rat(1), make_rat(1, 5)).norm_sq() == make_rat(225, 7));
  // Hodge orthogonality of the components
  const OneForm mixed = OneForm::gradient(Piecewise(hs)) + OneForm::loop(Word("1"), Rat(2));
  CHECK(mixed.norm_sq() == Rat(2) + 4 * 30 * res_scale_inv());
}

TEST_CASE("ray norm against truncation plus exact tail") {
  const Rat phi = make_rat(2, 5);
  const OneForm w = ray_form(Word(), 0, Rat(1), phi);
  Rat partial(0);
  const Rat q = res_scale_inv() * phi * phi;
  for (int k = 0; k <= 40; ++k) partial += 30 * rat_pow(q, k);
  const Rat tail = 30 * rat_pow(q, 41) / (1 - q);
  CHECK(w.norm_sq() == partial + tail);
}

TEST_CASE("ray membership enforced") {
  // 5*(4/5)^2 = 16/5 >= 3 violates the membership bound
  CHECK_THROWS_AS(ray_form(Word(), 0, Rat(1), make_rat(4, 5)), RaySeriesDivergent);
  // the critical normal-part ratio 3/5 is still a member: 5*(3/5)^2 = 9/5 < 3
  CHECK_NOTHROW(ray_form(Word(), 1, Rat(1), res_scale()));
}

TEST_CASE("exact part must be continuous") {
  std::vector<Harmonic> pieces(3);
  pieces[0] = psi_piece(0);
  pieces[1] = psi_piece(1);
  pieces[2] = psi_piece(2);
  CHECK_THROWS_AS(OneForm::gradient(Piecewise(1, std::move(pieces))),
                  std::invalid_argument);
}

TEST_CASE("basis gram") {
  const auto words = basis_words(2);
  const auto gram = basis_gram(2);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      CHECK(gram[i][j] == (i == j ? Rat(30 * rat_pow(res_scale_inv(), words[i].size()))
                                  : Rat(0)));
}

TEST_CASE("compose examples") {
  // pure loop composed into its own cell becomes the exact potential
  const OneForm loop = OneForm::loop(Word(), Rat(1));
  const OneForm c0 = loop.compose_cell(Word("0"));
  CHECK(c0.loops().finite.empty());
  CHECK(c0.loops().rays.empty());
  CHECK(c0.exact().same_function(Piecewise(Harmonic(Rat(0), Rat(1), Rat(-1)))));
  // ray shifts base and amplitude
  const OneForm r = ray_form(Word(), 0, Rat(3), make_rat(2, 5));
  const OneForm rc = r.compose_cell(Word("0"));
  REQUIRE(rc.loops().rays.size() == 1);
  CHECK(rc.loops().rays[0].base.empty());
  CHECK(rc.loops().rays[0].amp == make_rat(6, 5));
  CHECK(rc.loops().rays[0].ratio == make_rat(2, 5));
  CHECK(rc.exact().same_function(Piecewise(Harmonic(Rat(0), Rat(3), Rat(-3)))));
  // gradients compose through restriction
  const OneForm g = OneForm::gradient(Piecewise(h100));
  CHECK(g.compose_cell(Word("12")).exact().same_function(
      Piecewise(h100.walked(Word("12")))));
  // a loop sitting beside the cell drops out
  const OneForm side = OneForm::loop(Word("1"), Rat(4));
  CHECK(side.compose_cell(Word("2")).norm_sq() == Rat(0));
  // descendant loops shift their index
  const OneForm deep = OneForm::loop(Word("012"), Rat(2));
  const OneForm dc = deep.compose_cell(Word("0"));
  CHECK(dc.loops().finite.at(Word("12")) == Rat(2));
}

TEST_CASE("measures") {
  CHECK(OneForm::gradient(Piecewise(h100)).measure_cell(Word("0")) == make_rat(6, 5));
  CHECK(OneForm::loop(Word(), Rat(1)).measure_cell(Word()) == Rat(30));
  // norm == whole-space measure for finite-loop forms
  for (const OneForm& w :
       {OneForm::gradient(Piecewise(ha)) + OneForm::loop(Word("0"), make_rat(1, 2)),
        OneForm::loop(Word("12"), Rat(3))})
    CHECK(w.measure_cell(Word()) == w.norm_sq());
}

TEST_CASE("measure of chain cells against the closed form") {
  // d h_s + unit ray of ratio 1/5 along the 0-chain:
  // nu(K_{0^m}) = 2 r^m + 150 m^2 / 15^m + (225/7) 15^{-m}
  const OneForm w = OneForm::gradient(Piecewise(hs)) +
                    ray_form(Word(), 0, Rat(1), make_rat(1, 5));
  for (int m = 0; m <= 8; ++m) {
    const Rat expect = 2 * rat_pow(res_scale(), m) +
                       150 * Rat(m) * Rat(m) * rat_pow(Rat(15), -m) +
                       make_rat(225, 7) * rat_pow(Rat(15), -m);
    CHECK(w.measure_cell(Word::repeated(0, m)) == expect);
  }
}

TEST_CASE("refinement and closed measure routes agree off the chain") {
  const OneForm w = OneForm::gradient(Piecewise(hs)) +
                    ray_form(Word(), 0, Rat(1), make_rat(2, 5));
  for (const Word& cell : {Word("1"), Word("02"), Word("21"), Word("010")})
    CHECK(w.measure_cell_refine(cell) == w.measure_cell_closed(cell));
}

TEST_CASE("pair measures") {
  const OneForm ghs = OneForm::gradient(Piecewise(hs));
  const OneForm gha = OneForm::gradient(Piecewise(ha));
  const OneForm loop = OneForm::loop(Word(), Rat(1));
  CHECK(ghs.pair_measure_cell(gha, Word()) == Rat(0));
  CHECK(loop.pair_measure_cell(ghs, Word()) == Rat(0));
  CHECK(loop.pair_measure_cell(loop, Word("1")) == loop.measure_cell(Word("1")));
  // Cauchy-Schwarz on a cell
  const Rat cross = ghs.pair_measure_cell(loop, Word("0"));
  CHECK(cross * cross <= ghs.measure_cell(Word("0")) * loop.measure_cell(Word("0")));
}

TEST_CASE("divergence-free checks") {
  const auto d1 = OneForm::gradient(Piecewise(h100)).divergence_free();
  CHECK(d1.v0);
  CHECK(!d1.full);
  const auto d2 = OneForm::loop(Word(), Rat(1)).divergence_free();
  CHECK(d2.v0);
  CHECK(d2.full);
  // hat function: continuous but Kirchhoff fails at its peak
  std::vector<Harmonic> pieces(3);
  pieces[0] = Harmonic(Rat(0), Rat(1), Rat(0));
  pieces[1] = Harmonic(Rat(1), Rat(0), Rat(0));
  pieces[2] = Harmonic(Rat(0), Rat(0), Rat(0));
  const auto d3 = OneForm::gradient(Piecewise(1, std::move(pieces))).divergence_free();
  CHECK(!d3.v0);
  CHECK(!d3.full);
}

TEST_CASE("divergence-free forms stay divergence-free under composition") {
  const std::vector<OneForm> forms = {
      OneForm::gradient(Piecewise(hs)) + OneForm::loop(Word("0"), Rat(2)),
      ray_form(Word(), 1, Rat(1), make_rat(2, 5)),
  };
  for (const auto& w : forms)
    for (const Word& cell : {Word("0"), Word("1"), Word("12"), Word("011")})
      CHECK(w.compose_cell(cell).divergence_free().v0);
}

TEST_CASE("minimal energy-dominance certificates") {
  CHECK(OneForm::gradient(Piecewise(hs)).med_certified());
  CHECK(!OneForm::gradient(Piecewise::constant(Rat(3))).med_certified());
  CHECK(OneForm::loop(Word(), Rat(1)).med_certified());
  CHECK((OneForm::gradient(Piecewise(hs)) +
         ray_form(Word(), 0, Rat(1), make_rat(2, 5)))
            .med_certified());
  // constant on one cell: not certified
  std::vector<Harmonic> pieces(3);
  pieces[0] = Harmonic(Rat(0), Rat(1), Rat(0));
  pieces[1] = Harmonic(Rat(1), Rat(0), Rat(0));
  pieces[2] = Harmonic(Rat(0), Rat(0), Rat(0));
  CHECK(!OneForm::gradient(Piecewise(1, std::move(pieces))).med_certified());
}

TEST_CASE("measure additivity") {
  const std::vector<OneForm> forms = {
      OneForm::gradient(Piecewise(h100)),
      OneForm::gradient(Piecewise(hs)) + OneForm::loop(Word(), Rat(1)),
      ray_form(Word(), 2, make_rat(1, 2), make_rat(-2, 5)),
  };
  for (const auto& w : forms)
    for (const Word& cell : {Word(), Word("2"), Word("01")}) {
      Rat sum(0);
      for (int i = 0; i < 3; ++i) {
        Word child = cell;
        child.append(i);
        sum += w.measure_cell(child);
      }
      CHECK(w.measure_cell(cell) == sum);
    }
}
