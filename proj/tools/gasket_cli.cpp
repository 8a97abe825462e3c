// Command-line front end: evaluate exact data on the gasket, verify the
// invariant suite, and run the convergence experiments.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gasket/boundary.hpp"
#include "gasket/errors.hpp"
#include "gasket/experiments.hpp"
#include "gasket/firstorder.hpp"
#include "gasket/json_io.hpp"
#include "gasket/oneform.hpp"
#include "gasket/piecewise.hpp"
#include "gasket/verify.hpp"

namespace {

using namespace gasket;

Harmonic parse_corners(const std::string& csv) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    throw std::invalid_argument("expected three comma-separated corner values");
  return Harmonic(parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2]));
}

Piecewise load_piecewise(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return piecewise_from_json(j);
}

struct FormArgs {
  std::string file;
  std::string exact;
  std::string exact_file;
  std::vector<std::string> loops;
  std::vector<std::string> rays;

  void attach(CLI::App* cmd) {
    cmd->add_option("--file", file, "one-form as JSON");
    cmd->add_option("--exact", exact, "exact part: harmonic corner values a,b,c");
    cmd->add_option("--exact-file", exact_file, "exact part: piecewise JSON");
    cmd->add_option("--loop", loops, "loop coefficient word=p/q (repeatable)");
    cmd->add_option("--ray", rays, "geometric ray base,dir,amp,phi (repeatable)");
  }

  OneForm build() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open " + file);
      nlohmann::json j;
      in >> j;
      return oneform_from_json(j);
    }
    Piecewise ex;
    if (!exact_file.empty())
      ex = load_piecewise(exact_file);
    else if (!exact.empty())
      ex = Piecewise(parse_corners(exact));
    LoopSet ls;
    for (const auto& spec : loops) {
      const auto eq = spec.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--loop expects word=p/q");
      ls.finite[Word{std::string_view(spec).substr(0, eq)}] +=
          parse_rat(spec.substr(eq + 1));
    }
    for (const auto& spec : rays) {
      std::vector<std::string> parts;
      std::string cur;
      for (char c : spec) {
        if (c == ',') {
          parts.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      parts.push_back(cur);
      if (parts.size() != 4)
        throw std::invalid_argument("--ray expects base,dir,amp,phi");
      ls.rays.push_back(GeometricRay{Word{std::string_view(parts[0])},
                                     std::stoi(parts[1]), parse_rat(parts[2]),
                                     parse_rat(parts[3])});
    }
    return OneForm(std::move(ex), std::move(ls));
  }
};

void emit_report(const ExperimentReport& rep, bool as_json, bool as_csv) {
  if (as_json)
    std::cout << report_to_json(rep).dump(2) << "\n";
  else if (as_csv)
    std::cout << report_to_csv(rep);
  else {
    std::cout << rep.name << ": limit " << rep.limit << ", verdict "
              << (rep.pass ? "pass" : "fail") << "\n";
    for (const auto& [m, v] : rep.sequence)
      std::cout << "  " << m << "  " << rat_str(v) << "\n";
    if (!rep.notes.empty()) std::cout << "  notes: " << rep.notes << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact first-order calculus on the Sierpinski gasket"};
  app.require_subcommand(1);

  // ---- eval
  auto* eval = app.add_subcommand("eval", "evaluate a function at an address");
  std::string eval_harmonic, eval_pw, eval_at;
  bool eval_normal = false, eval_tangential = false, eval_jet = false,
       eval_sides = false;
  eval->add_option("--harmonic", eval_harmonic, "corner values a,b,c");
  eval->add_option("--piecewise", eval_pw, "piecewise JSON file");
  eval->add_option("--at", eval_at, "address w:i")->required();
  eval->add_flag("--normal", eval_normal, "oriented normal derivative");
  eval->add_flag("--tangential", eval_tangential, "oriented tangential derivative");
  eval->add_flag("--jet", eval_jet, "1-jet (s, a, c) at the corner");
  eval->add_flag("--both-sides", eval_sides, "print the value from each side");

  // ---- energy
  auto* energy = app.add_subcommand("energy", "energies and energy measures");
  std::string en_harmonic, en_pw, en_pair, en_cell;
  int en_graph = -1;
  energy->add_option("--harmonic", en_harmonic, "corner values a,b,c");
  energy->add_option("--piecewise", en_pw, "piecewise JSON file");
  energy->add_option("--pair", en_pair, "second harmonic a,b,c for nu_{u,v}");
  energy->add_option("--cell", en_cell, "cell word for nu(K_w) (default whole)");
  energy->add_option("--graph", en_graph, "level-m graph energy E_m");

  // ---- form
  auto* form = app.add_subcommand("form", "one-form queries");
  FormArgs form_args;
  form_args.attach(form);
  bool f_norm = false, f_div = false, f_med = false;
  std::string f_measure, f_normal_at, f_tangential_at;
  form->add_flag("--norm", f_norm, "squared Hilbert norm");
  form->add_option("--measure", f_measure, "nu_omega(K_w) for the cell word");
  form->add_option("--normal-part", f_normal_at, "n.omega at address w:i");
  form->add_option("--tangential-part", f_tangential_at, "t.omega at address w:i");
  form->add_flag("--check-div", f_div, "divergence-free checks");
  form->add_flag("--check-med", f_med, "minimal energy-dominance certificate");

  // ---- basis
  auto* basis = app.add_subcommand("basis", "loop-basis Gram matrix");
  int basis_level = 1;
  bool basis_json = false;
  basis->add_option("--level", basis_level, "maximum word length")->required();
  basis->add_flag("--json", basis_json, "emit JSON");

  // ---- verify
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  bool verify_json = false;
  verify->add_flag("--json", verify_json, "emit JSON");

  // ---- experiment
  auto* exp = app.add_subcommand("experiment", "convergence experiments");
  exp->require_subcommand(1);
  bool x_json = false, x_csv = false;

  auto* xpointwise = exp->add_subcommand("pointwise", "mean integrals vs normal-part ratio");
  FormArgs xp_form;
  xp_form.attach(xpointwise);
  std::string xp_u = "0,1,-1", xp_target = ":1";
  int xp_mmax = 20, xp_chi = 0;
  std::string xp_theta = "0";
  xpointwise->add_option("--u", xp_u, "harmonic potential a,b,c");
  xpointwise->add_option("--target", xp_target, "junction address w:i");
  xpointwise->add_option("--m-max", xp_mmax, "sequence depth");
  xpointwise->add_option("--chi", xp_chi, "loop-count case 0..3");
  xpointwise->add_option("--theta", xp_theta, "loop decay bound");
  xpointwise->add_flag("--json", x_json, "emit JSON");
  xpointwise->add_flag("--csv", x_csv, "emit CSV");

  auto* xntrh = exp->add_subcommand("ntrh", "normal-part approach along a chain");
  FormArgs xn_form;
  xn_form.attach(xntrh);
  std::string xn_target = ":0";
  int xn_j = 1, xn_mmax = 20;
  xntrh->add_option("--target", xn_target, "junction address w:i");
  xntrh->add_option("--j", xn_j, "approach corner j != i");
  xntrh->add_option("--m-max", xn_mmax, "sequence depth");
  xntrh->add_flag("--json", x_json, "emit JSON");
  xntrh->add_flag("--csv", x_csv, "emit CSV");

  auto* xsides = exp->add_subcommand("sides", "loop ratio along the sides");
  xsides->set_help_flag("--help", "print help");
  std::string xs_h = "0,1,1", xs_a = "1", xs_phi = "3/5";
  int xs_nmax = 20;
  xsides->add_option("--h", xs_h, "harmonic reference a,b,c");
  xsides->add_option("--a", xs_a, "ray amplitude");
  xsides->add_option("--phi", xs_phi, "ray ratio");
  xsides->add_option("--n-max", xs_nmax, "sequence depth");
  xsides->add_flag("--json", x_json, "emit JSON");
  xsides->add_flag("--csv", x_csv, "emit CSV");

  auto* xvert = exp->add_subcommand("vertical", "ratio along the vertical line");
  xvert->set_help_flag("--help", "print help");
  std::string xv_case = "harmonic", xv_u = "0,1,-1", xv_h = "0,1,-1",
              xv_a = "1", xv_phi = "1/10";
  int xv_nmax = 20;
  xvert->add_option("--case", xv_case, "harmonic | ray | mixed");
  xvert->add_option("--u", xv_u, "harmonic numerator a,b,c");
  xvert->add_option("--h", xv_h, "harmonic reference a,b,c");
  xvert->add_option("--a", xv_a, "ray amplitude");
  xvert->add_option("--phi", xv_phi, "ray ratio");
  xvert->add_option("--n-max", xv_nmax, "sequence depth");
  xvert->add_flag("--json", x_json, "emit JSON");
  xvert->add_flag("--csv", x_csv, "emit CSV");

  auto* xcut = exp->add_subcommand("cut", "half-gasket telescoping checks");
  int xc_n = 8;
  std::string xc_phi = "1,1/2,-1/3";
  xcut->add_option("--N", xc_n, "truncation depth");
  xcut->add_option("--phi-test", xc_phi, "harmonic test function a,b,c");
  xcut->add_flag("--json", x_json, "emit JSON");
  xcut->add_flag("--csv", x_csv, "emit CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) {
      const VertexAddress at = parse_address(eval_at);
      if (!eval_pw.empty()) {
        const Piecewise u = load_piecewise(eval_pw);
        if (eval_normal)
          std::cout << rat_str(u.point_normal_derivative(at)) << "\n";
        else if (eval_tangential)
          std::cout << rat_str(u.point_tangential_derivative(at)) << "\n";
        else if (eval_sides) {
          for (const auto& [cell, val] : u.values_at(at))
            std::cout << cell.str() << ": " << rat_str(val) << "\n";
        } else
          std::cout << rat_str(u.eval_at(at)) << "\n";
      } else {
        const Harmonic h = parse_corners(eval_harmonic);
        if (eval_normal)
          std::cout << rat_str(Piecewise(h).point_normal_derivative(at)) << "\n";
        else if (eval_tangential)
          std::cout << rat_str(Piecewise(h).point_tangential_derivative(at)) << "\n";
        else if (eval_jet) {
          const auto j = h.walked(at.word).jet(at.corner);
          std::cout << rat_str(j.s) << " " << rat_str(j.a) << " " << rat_str(j.c)
                    << "\n";
        } else
          std::cout << rat_str(h.eval(at)) << "\n";
      }
      return 0;
    }

    if (*energy) {
      const Piecewise u = !en_pw.empty() ? load_piecewise(en_pw)
                                         : Piecewise(parse_corners(en_harmonic));
      const Word cell = en_cell.empty() ? Word() : Word(en_cell);
      if (en_graph >= 0)
        std::cout << rat_str(u.graph_energy(en_graph)) << "\n";
      else if (!en_pair.empty())
        std::cout << rat_str(energy_measure_pair(
                         u, Piecewise(parse_corners(en_pair)), cell))
                  << "\n";
      else
        std::cout << rat_str(u.cell_energy(cell)) << "\n";
      return 0;
    }

    if (*form) {
      const OneForm omega = form_args.build();
      if (f_norm) std::cout << "norm_sq " << rat_str(omega.norm_sq()) << "\n";
      if (!f_measure.empty() || (!f_norm && !f_div && !f_med &&
                                 f_normal_at.empty() && f_tangential_at.empty()))
        std::cout << "measure " << rat_str(omega.measure_cell(Word(f_measure)))
                  << "\n";
      if (!f_normal_at.empty()) {
        const VertexAddress a = parse_address(f_normal_at);
        std::cout << "normal_part " << rat_str(normal_part(omega, a)) << "\n";
        if (auto t = twin(a))
          std::cout << "normal_part_twin " << rat_str(normal_part(omega, *t))
                    << "\n";
      }
      if (!f_tangential_at.empty()) {
        const auto t = tangential_part(omega, parse_address(f_tangential_at));
        if (t.exists())
          std::cout << "tangential_part " << rat_str(*t.value) << "\n";
        else
          std::cout << "tangential_part DOES_NOT_EXIST (" << t.diagnosis << ")\n";
      }
      if (f_div) {
        const auto d = omega.divergence_free();
        std::cout << "divergence_free_v0 " << (d.v0 ? "true" : "false") << "\n";
        std::cout << "divergence_free " << (d.full ? "true" : "false") << "\n";
      }
      if (f_med)
        std::cout << "med_certified "
                  << (omega.med_certified() ? "true" : "false") << "\n";
      return 0;
    }

    if (*basis) {
      const auto words = basis_words(basis_level);
      const auto gram = basis_gram(basis_level);
      if (basis_json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : gram) {
          nlohmann::json r = nlohmann::json::array();
          for (const auto& x : row) r.push_back(rat_str(x));
          rows.push_back(r);
        }
        nlohmann::json names = nlohmann::json::array();
        for (const auto& w : words) names.push_back(w.str());
        std::cout << nlohmann::json{{"words", names}, {"gram", rows}}.dump(2)
                  << "\n";
      } else {
        for (std::size_t i = 0; i < gram.size(); ++i) {
          std::cout << words[i].str() << ":";
          for (const auto& x : gram[i]) std::cout << " " << rat_str(x);
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*verify) {
      const auto results = run_acceptance();
      int failed = 0;
      if (verify_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) {
          arr.push_back(nlohmann::json{{"id", r.id},
                                       {"name", r.name},
                                       {"pass", r.pass},
                                       {"details", r.details}});
          if (!r.pass) ++failed;
        }
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& r : results) {
          std::cout << criterion_line(r) << "\n";
          if (!r.pass) ++failed;
        }
      }
      return failed == 0 ? 0 : 1;
    }

    if (*exp) {
      ExperimentReport rep;
      if (*xpointwise) {
        const VertexAddress t = parse_address(xp_target);
        rep = exp_pointwise(Piecewise(parse_corners(xp_u)), xp_form.build(),
                            t.word, t.corner, xp_mmax, xp_chi,
                            parse_rat(xp_theta));
      } else if (*xntrh) {
        const VertexAddress t = parse_address(xn_target);
        rep = exp_ntrh(xn_form.build(), t.word, t.corner, xn_j, xn_mmax);
      } else if (*xsides) {
        rep = exp_sides(parse_corners(xs_h), parse_rat(xs_a), parse_rat(xs_phi),
                        xs_nmax);
      } else if (*xvert) {
        if (xv_case == "harmonic")
          rep = exp_vertical_harmonic(parse_corners(xv_u), parse_corners(xv_h),
                                      xv_nmax);
        else if (xv_case == "ray")
          rep = exp_vertical_ray(parse_rat(xv_a), parse_rat(xv_phi),
                                 parse_corners(xv_h), xv_nmax);
        else if (xv_case == "mixed") {
          LoopSet loops;
          loops.rays.push_back(
              GeometricRay{Word(), 0, parse_rat(xv_a), parse_rat(xv_phi)});
          rep = exp_vertical_mixed(parse_corners(xv_u), loops,
                                   parse_corners(xv_h), xv_nmax);
        } else
          throw std::invalid_argument("--case must be harmonic|ray|mixed");
      } else if (*xcut) {
        std::vector<Harmonic> uL, uR;
        for (int k = 0; k < xc_n; ++k) {
          uL.emplace_back(make_rat(1, k + 2), make_rat(1, k + 1),
                          make_rat((k % 2) ? 3 : -3, 7));
          uR.emplace_back(make_rat(k + 2, 3), make_rat((k % 2) ? 1 : 2, 5),
                          make_rat(k + 1, 3));
        }
        rep = exp_cut(uL, uR, parse_corners(xc_phi), xc_n);
      }
      emit_report(rep, x_json, x_csv);
      return rep.pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const gasket::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
