#include "s5kit/json_io.hpp"

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

namespace s5kit {

void to_json(nlohmann::json& j, const Surjection& q) {
  j = {{"dom", q.dom}, {"cod", q.cod}, {"map", q.map}};
}

void from_json(const nlohmann::json& j, Surjection& q) {
  q = make_surjection(j.at("map").get<std::vector<int>>(), j.at("cod").get<int>());
  if (j.at("dom").get<int>() != q.dom)
    throw Error(ErrorCode::BadInput, "declared domain does not match the map length");
}

void to_json(nlohmann::json& j, const SurjectionPushout& p) {
  j = {{"left", p.left}, {"right", p.right}};
}

void to_json(nlohmann::json& j, const FiniteFrame& f) {
  j = {{"worlds", f.worlds}, {"blocks", f.block}};
}

void from_json(const nlohmann::json& j, FiniteFrame& f) {
  f = make_frame(j.at("worlds").get<int>(), j.at("blocks").get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const PMorphism& f) {
  j = {{"map", f.map}, {"source", f.source}, {"target", f.target}};
}

void from_json(const nlohmann::json& j, PMorphism& f) {
  f = make_pmorphism(j.at("source").get<FiniteFrame>(), j.at("target").get<FiniteFrame>(),
                     j.at("map").get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const ClusterFamily& f) { j = {{"sizes", f.sizes}}; }

void from_json(const nlohmann::json& j, ClusterFamily& f) {
  f = make_cluster_family(j.at("sizes").get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const FrameCoequalizer& c) {
  j = {{"frame", c.frame}, {"projection", c.projection}};
}

void to_json(nlohmann::json& j, const FrameCoproduct& c) {
  j = {{"frame", c.frame}, {"injections", c.injections}};
}

void to_json(nlohmann::json& j, const S5Algebra& a) {
  j = {{"atoms", a.atoms}, {"box", a.box}};
}

void from_json(const nlohmann::json& j, S5Algebra& a) {
  a = make_algebra(j.at("atoms").get<int>(), j.at("box").get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const S5AxiomReport& r) {
  auto failures = nlohmann::json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"equation", f.equation}, {"element", f.element}, {"other", f.other}});
  j = {{"pass", r.pass()}, {"failures", std::move(failures)}};
}

void to_json(nlohmann::json& j, const SymmetricAction& a) {
  j = {{"m", a.m}, {"carrier", a.carrier}, {"gen_swap", a.gen_swap}, {"gen_cycle", a.gen_cycle}};
}

void from_json(const nlohmann::json& j, SymmetricAction& a) {
  a = make_action(j.at("m").get<int>(), j.at("carrier").get<int>(),
                  j.at("gen_swap").get<std::vector<int>>(),
                  j.at("gen_cycle").get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const ActionReport& r) {
  j = {{"pass", r.pass()}, {"failures", r.failures}};
}

void to_json(nlohmann::json& j, const OrbitDecomposition& d) {
  j = {{"orbit_of", d.orbit_of}, {"orbit_count", d.orbit_count}};
}

void to_json(nlohmann::json& j, const CanonicalOrbit& o) {
  j = {{"base", o.base}, {"elements", o.elements}};
}

void to_json(nlohmann::json& j, const TruncatedPresheaf& p) {
  std::vector<const Surjection*> keys;
  keys.reserve(p.tables.size());
  for (const auto& [q, table] : p.tables) keys.push_back(&q);
  std::sort(keys.begin(), keys.end(), [](const Surjection* a, const Surjection* b) {
    return std::tie(a->cod, a->dom, a->map) < std::tie(b->cod, b->dom, b->map);
  });
  auto maps = nlohmann::json::array();
  for (const Surjection* q : keys)
    maps.push_back({{"level_from", q->cod},
                    {"level_to", q->dom},
                    {"q", q->map},
                    {"table", p.tables.at(*q)}});
  j = {{"N", p.N}, {"carriers", p.carrier_sizes}, {"maps", std::move(maps)}};
}

void from_json(const nlohmann::json& j, TruncatedPresheaf& p) {
  std::unordered_map<Surjection, std::vector<int>, SurjectionHash> tables;
  for (const auto& entry : j.at("maps")) {
    Surjection q = make_surjection(entry.at("q").get<std::vector<int>>(),
                                   entry.at("level_from").get<int>());
    if (entry.at("level_to").get<int>() != q.dom)
      throw Error(ErrorCode::BadInput, "map entry levels do not match its surjection");
    if (!tables.emplace(std::move(q), entry.at("table").get<std::vector<int>>()).second)
      throw Error(ErrorCode::BadInput, "duplicate table for one surjection");
  }
  p = make_presheaf_unchecked(j.at("N").get<int>(), j.at("carriers").get<std::vector<int>>(),
                              std::move(tables));
}

void to_json(nlohmann::json& j, const LiftingReport& r) {
  j = {{"pass", r.pass()}, {"failures", r.failures}};
}

void to_json(nlohmann::json& j, const NatTransformation& t) {
  j = {{"components", t.components}};
}

void to_json(nlohmann::json& j, const AxiomInstance& instance) {
  j = {{"sorts", instance.sorts},
       {"elements", instance.elements},
       {"surjections", instance.surjections},
       {"note", instance.note}};
}

void to_json(nlohmann::json& j, const AxiomVerdict& v) {
  j = {{"axiom", v.axiom},
       {"verdict", v.pass ? "pass" : "fail"},
       {"witnesses", v.witnesses},
       {"counterexample", v.counterexample ? nlohmann::json(*v.counterexample)
                                           : nlohmann::json(nullptr)}};
}

void to_json(nlohmann::json& j, const AxiomReport& r) {
  j = {{"scope", r.scope}, {"pass", r.pass()}, {"verdicts", r.verdicts}};
}

void to_json(nlohmann::json& j, const CriterionResult& c) {
  j = {{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}};
}

void to_json(nlohmann::json& j, const SuiteResult& r) {
  j = {{"pass", r.pass()}, {"criteria", r.criteria}};
}

}  // namespace s5kit
