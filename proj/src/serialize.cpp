#include "coverdepth/serialize.hpp"

#include "coverdepth/errors.hpp"

namespace coverdepth {

json to_json(const Monomial& m) {
  json out = json::array();
  for (Exponent e : m.exponents()) out.push_back(e);
  return out;
}

Monomial monomial_from_json(const json& j) {
  if (!j.is_array()) throw InputError("monomial must be an exponent array");
  std::vector<long long> exps;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError("exponent must be an integer");
    exps.push_back(e.get<long long>());
  }
  return Monomial::from_exponents(exps);
}

json to_json(const MonomialIdeal& a) {
  json gens = json::array();
  for (const auto& g : a.generators()) gens.push_back(to_json(g));
  return {{"n", a.num_vars()}, {"generators", gens}, {"text", to_string(a)}};
}

MonomialIdeal ideal_from_json(const json& j) {
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Monomial> gens;
  for (const auto& g : j.at("generators")) gens.push_back(monomial_from_json(g));
  return minimalize(n, std::move(gens));
}

json vertex_set_to_json(VertexSet s) {
  json out = json::array();
  for (int v : set_members(s)) out.push_back(v);
  return out;
}

VertexSet vertex_set_from_json(const json& j) {
  VertexSet s = 0;
  for (const auto& v : j) {
    const int idx = v.get<int>();
    if (idx < 0 || idx >= kMaxVertices) throw InputError("variable index out of range");
    s |= vertex_bit(idx);
  }
  return s;
}

json to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [key, rank] : t.entries())
    entries.push_back({{"i", key.first}, {"multidegree", key.second}, {"rank", rank}});
  return {{"field", t.field() == Field::Rational ? "rational" : "prime"},
          {"entries", entries},
          {"totals", t.totals()},
          {"pd", t.projective_dimension()},
          {"reg", t.regularity()},
          {"torsion_seen", t.torsion_seen()}};
}

json to_json(const HomologicalInvariants& h) {
  return {{"pd_ideal", h.pd_ideal},       {"pd_quotient", h.pd_quotient},
          {"depth_quotient", h.depth_quotient}, {"depth_ideal", h.depth_ideal},
          {"reg_ideal", h.reg_ideal},     {"reg_quotient", h.reg_quotient}};
}

json to_json(const StanleyDecomposition& d) {
  json spaces = json::array();
  for (std::size_t i = 0; i < d.spaces().size(); ++i) {
    const auto& s = d.spaces()[i];
    spaces.push_back({{"origin", to_json(s.origin)},
                      {"free", vertex_set_to_json(s.free)},
                      {"provenance", d.provenance()[i]}});
  }
  const auto sd = d.sdepth();
  return {{"module",
           {{"kind", to_string(d.kind())},
            {"n", d.num_vars()},
            {"ring", vertex_set_to_json(d.ring())},
            {"ideal", to_json(d.ideal())}}},
          {"spaces", spaces},
          {"sdepth", sd ? json(*sd) : json(nullptr)}};
}

StanleyDecomposition decomposition_from_json(const json& j) {
  const json& module = j.at("module");
  const std::string kind = module.at("kind").get<std::string>();
  if (kind != "ideal" && kind != "quotient") throw InputError("module kind must be ideal or quotient");
  StanleyDecomposition d(ideal_from_json(module.at("ideal")),
                         kind == "ideal" ? ModuleKind::Ideal : ModuleKind::Quotient,
                         vertex_set_from_json(module.at("ring")));
  for (const auto& s : j.at("spaces")) {
    d.add({monomial_from_json(s.at("origin")), vertex_set_from_json(s.at("free"))},
          s.value("provenance", std::string{}));
  }
  return d;
}

json to_json(const IntervalPartition& p, const Monomial& bound) {
  json intervals = json::array();
  for (const auto& iv : p.intervals) intervals.push_back({to_json(iv.bottom), to_json(iv.top)});
  return {{"bound", to_json(bound)}, {"intervals", intervals}};
}

IntervalPartition partition_from_json(const json& j) {
  IntervalPartition p;
  for (const auto& iv : j.at("intervals")) {
    if (!iv.is_array() || iv.size() != 2) throw InputError("interval must be a [bottom, top] pair");
    p.intervals.push_back({monomial_from_json(iv[0]), monomial_from_json(iv[1])});
  }
  return p;
}

json to_json(const SdepthResult& r, const CharacteristicPoset& poset) {
  json out = {{"lower", r.lower},
              {"upper", r.upper},
              {"exact", r.exact()},
              {"nodes", r.nodes},
              {"budget_exceeded", r.budget_exceeded},
              {"mode", to_string(poset.kind())},
              {"poset_size", poset.size()}};
  if (r.witness) out["witness"] = to_json(*r.witness, poset.bound());
  return out;
}

}  // namespace coverdepth
