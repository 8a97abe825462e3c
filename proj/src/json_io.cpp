#include "gasket/json_io.hpp"

#include <sstream>

namespace gasket {

using nlohmann::json;

json harmonic_to_json(const Harmonic& h) {
  return json{{"corners", {rat_str(h[0]), rat_str(h[1]), rat_str(h[2])}}};
}

Harmonic harmonic_from_json(const json& j) {
  const auto& c = j.at("corners");
  if (!c.is_array() || c.size() != 3)
    throw std::invalid_argument("harmonic: \"corners\" must have 3 entries");
  return Harmonic(parse_rat(c[0].get<std::string>()),
                  parse_rat(c[1].get<std::string>()),
                  parse_rat(c[2].get<std::string>()));
}

json piecewise_to_json(const Piecewise& u) {
  json pieces = json::object();
  const auto& ps = u.pieces();
  for (std::size_t c = 0; c < ps.size(); ++c)
    pieces[Word::from_index(c, u.level()).str()] = harmonic_to_json(ps[c]);
  return json{{"level", u.level()}, {"pieces", pieces}};
}

Piecewise piecewise_from_json(const json& j) {
  const int level = j.at("level").get<int>();
  std::size_t count = 1;
  for (int i = 0; i < level; ++i) count *= 3;
  std::vector<Harmonic> pieces(count);
  for (const auto& [key, val] : j.at("pieces").items()) {
    const Word w{std::string_view(key)};
    if (w.size() != level)
      throw std::invalid_argument("piecewise: piece word '" + key +
                                  "' does not match the level");
    pieces[w.index()] = harmonic_from_json(val);
  }
  return Piecewise(level, std::move(pieces));
}

json oneform_to_json(const OneForm& w) {
  json finite = json::object();
  for (const auto& [word, coef] : w.loops().finite)
    finite[word.str()] = rat_str(coef);
  json rays = json::array();
  for (const auto& r : w.loops().rays)
    rays.push_back(json{{"base", r.base.str()},
                        {"dir", r.dir},
                        {"a", rat_str(r.amp)},
                        {"phi", rat_str(r.ratio)}});
  return json{{"exact", piecewise_to_json(w.exact())},
              {"loops", json{{"finite", finite}, {"rays", rays}}}};
}

OneForm oneform_from_json(const json& j) {
  Piecewise exact = piecewise_from_json(j.at("exact"));
  LoopSet ls;
  if (j.contains("loops")) {
    const auto& loops = j.at("loops");
    if (loops.contains("finite"))
      for (const auto& [key, val] : loops.at("finite").items())
        ls.finite[Word{std::string_view(key)}] = parse_rat(val.get<std::string>());
    if (loops.contains("rays"))
      for (const auto& r : loops.at("rays"))
        ls.rays.push_back(GeometricRay{Word{std::string_view(r.at("base").get<std::string>())},
                                       r.at("dir").get<int>(),
                                       parse_rat(r.at("a").get<std::string>()),
                                       parse_rat(r.at("phi").get<std::string>())});
  }
  // External interface invariant: no word carried by both the finite map and
  // a ray, rays on pairwise disjoint chains.
  for (const auto& [word, coef] : ls.finite)
    for (const auto& r : ls.rays)
      if (r.chain_index(word))
        throw std::invalid_argument("oneform: word '" + word.str() +
                                    "' booked by the finite map and a ray");
  for (std::size_t i = 0; i < ls.rays.size(); ++i)
    for (std::size_t k = i + 1; k < ls.rays.size(); ++k) {
      const auto& a = ls.rays[i];
      const auto& b = ls.rays[k];
      if (a.chain_index(b.base) || b.chain_index(a.base))
        throw std::invalid_argument("oneform: rays on overlapping chains");
    }
  return OneForm(std::move(exact), std::move(ls));
}

json report_to_json(const ExperimentReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json seq = json::array();
  for (const auto& [m, v] : r.sequence) seq.push_back(json::array({m, rat_str(v)}));
  return json{{"name", r.name},       {"params", params},
              {"sequence", seq},      {"limit", r.limit},
              {"verdict", r.pass ? "pass" : "fail"}, {"notes", r.notes}};
}

std::string report_to_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "m,value_num,value_den,limit,residual\n";
  for (std::size_t i = 0; i < r.sequence.size(); ++i) {
    const auto& [m, v] = r.sequence[i];
    out << m << ',' << v.get_num().get_str() << ',' << v.get_den().get_str()
        << ',' << r.limit << ',';
    if (i < r.residuals.size()) out << rat_str(r.residuals[i]);
    out << '\n';
  }
  return out.str();
}

}  // namespace gasket
