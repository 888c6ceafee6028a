#include "hefib/json_io.hpp"

namespace hefib {

namespace {

std::string int_str(const Int& v) { return v.str(); }

}  // namespace

Json to_json(const SingularityIndices& si) {
  Json j;
  j["g"] = si.g;
  Json s = Json::object();
  for (const auto& [idx, val] : si.s) s[std::to_string(idx)] = int_str(val);
  j["s"] = s;
  return j;
}

Json to_json(const FibrationNumerics& nu) {
  Json j;
  j["g"] = nu.g;
  j["b"] = nu.b;
  j["n"] = rat_to_string(nu.n);
  j["chi"] = rat_to_string(nu.chi);
  j["ksq"] = rat_to_string(nu.ksq);
  j["e"] = rat_to_string(nu.e);
  if (nu.lambda)
    j["lambda"] = rat_to_string(*nu.lambda);
  else
    j["lambda"] = nullptr;
  return j;
}

Json to_json(const GenusBound& gb) {
  Json j;
  j["source"] = to_string(gb.source);
  j["value"] = rat_to_string(gb.value);
  j["floor"] = int_str(gb.floor_value);
  j["in_domain"] = gb.in_domain;
  Json params = Json::object();
  for (const auto& [key, val] : gb.params) params[key] = rat_to_string(val);
  j["params"] = params;
  return j;
}

Json to_json(const FeasibleCase& fc) {
  Json j;
  j["g"] = fc.g();
  j["ksq"] = int_str(fc.ksq());
  j["n"] = int_str(fc.n());
  j["indices"] = to_json(fc.indices)["s"];
  j["e"] = rat_to_string(fc.numerics.e);
  j["chi"] = rat_to_string(fc.numerics.chi);
  if (fc.numerics.lambda) j["lambda"] = rat_to_string(*fc.numerics.lambda);
  return j;
}

Json to_json(const ClassifyResult& r) {
  Json j;
  Json table = Json::object();
  for (const auto& [ksq, genera] : r.table) {
    Json row = Json::array();
    for (const int g : genera) row.push_back(g);
    table[int_str(ksq)] = row;
  }
  j["table"] = table;
  j["matches_reference"] = r.matches_reference;
  j["high_genus_rows_match"] = r.high_genus_rows_match;
  Json discrepancies = Json::array();
  for (const auto& d : r.discrepancies) {
    Json row;
    row["ksq"] = int_str(d.ksq);
    row["g"] = d.g;
    row["kind"] = d.extra ? "extra" : "missing";
    if (d.witness)
      row["witness"] = to_json(*d.witness);
    else
      row["witness"] = nullptr;
    discrepancies.push_back(row);
  }
  j["discrepancies"] = discrepancies;
  j["constraint_families"] = r.constraint_families;
  j["case_count"] = r.cases.size();
  return j;
}

Json to_json(const DivisorClass& d) {
  Json j;
  j["a"] = d.a;
  j["b"] = d.b;
  j["exc"] = d.exc;
  return j;
}

Json to_json(const DoubleCoverInvariants& inv) {
  Json j;
  j["chi"] = rat_to_string(inv.chi);
  j["ksq"] = rat_to_string(inv.ksq);
  return j;
}

Json to_json(const ExampleSurface& ex) {
  Json j;
  j["family"] = to_string(ex.params.family);
  Json params = Json::object();
  if (ex.params.family != ExampleFamily::Ex53) params["k"] = ex.params.k;
  if (ex.params.m) params["m"] = *ex.params.m;
  if (ex.params.family == ExampleFamily::Ex53) {
    params["n"] = int_str(ex.params.n);
    params["chi"] = rat_to_string(ex.params.chi);
  }
  j["params"] = params;
  j["surface"] = to_string(ex.model.kind);
  j["blowups"] = ex.model.blowups;
  if (ex.model.kind == SurfaceKind::SplitTorsion)
    j["torsion_order"] = ex.model.torsion_order;
  j["branch"] = to_json(ex.branch);
  j["delta"] = to_json(ex.delta);
  j["indices"] = to_json(ex.indices);
  j["numerics"] = to_json(ex.numerics);
  j["cover"] = to_json(ex.cover);
  j["branch_n"] = rat_to_string(ex.n);
  return j;
}

Json to_json(const VerifyReport& rep) {
  Json j;
  j["ok"] = rep.ok;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json row;
    row["name"] = c.name;
    row["pass"] = c.pass;
    row["detail"] = c.detail;
    checks.push_back(row);
  }
  j["checks"] = checks;
  return j;
}

Json to_json(const MinPairing& mp) {
  Json j;
  j["minimum"] = int_str(mp.minimum);
  j["witness"] = to_json(mp.witness);
  j["witness_kind"] = mp.witness_kind;
  j["box_primary"] = mp.box_primary;
  j["box_extended"] = mp.box_extended;
  j["stable"] = mp.stable;
  return j;
}

}  // namespace hefib
